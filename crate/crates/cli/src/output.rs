//! JSON emission with every float printed to 17 significant digits.

use std::io;

use serde::Serialize;
use serde_json::ser::{CompactFormatter, Formatter, PrettyFormatter};
use serde_json::Value;

/// `x` with 17 significant digits: positional for moderate exponents,
/// scientific otherwise. Always contains a `.` or an exponent.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0.0".into() } else { "0.0".into() };
    }
    let sci = format!("{x:.16e}");
    let exp: i32 = sci.split('e').nth(1).and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-5..17).contains(&exp) {
        format!("{:.*}", (16 - exp) as usize, x)
    } else {
        sci
    }
}

struct Digits17<F> {
    inner: F,
}

macro_rules! delegate {
    ($($name:ident),*) => {
        $(
            fn $name<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
                self.inner.$name(w)
            }
        )*
    };
}

macro_rules! delegate_first {
    ($($name:ident),*) => {
        $(
            fn $name<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
                self.inner.$name(w, first)
            }
        )*
    };
}

impl<F: Formatter> Formatter for Digits17<F> {
    delegate!(begin_array, end_array, end_array_value, begin_object, end_object, begin_object_value, end_object_value);
    delegate_first!(begin_array_value, begin_object_key);

    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(format_f64(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }
}

/// Render `value`; `indent = 0` gives a single line.
pub fn render(value: &Value, indent: usize) -> String {
    let mut buf = Vec::new();
    if indent == 0 {
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17 { inner: CompactFormatter });
        value.serialize(&mut ser).expect("writing to memory");
    } else {
        let pad = vec![b' '; indent];
        let fmt = Digits17 { inner: PrettyFormatter::with_indent(&pad) };
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, fmt);
        value.serialize(&mut ser).expect("writing to memory");
    }
    String::from_utf8(buf).expect("JSON is UTF-8")
}
