//! Golden-file tests for the binary. Set `LORINV_BLESS=1` to rewrite the
//! expected outputs after an intended change.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_lorinv");

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let data = root().join("data");
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(file) => data.join(file).to_string_lossy().into_owned(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(BIN).args(&args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Compare stdout (stderr on failure) with `golden/<name>.json`.
fn golden(name: &str, args: &[&str], code: i32) {
    let (got_code, stdout, stderr) = run(args);
    assert_eq!(got_code, code, "{name}: stdout {stdout} stderr {stderr}");
    let text = if code == 0 { stdout } else { stderr };
    let path = root().join("golden").join(format!("{name}.json"));
    if std::env::var_os("LORINV_BLESS").is_some() {
        fs::write(&path, &text).unwrap();
        return;
    }
    let want = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(text, want, "{name} differs from its golden file");
}

#[test]
fn classify() {
    golden("classify_boost", &["classify", "--matrix", "@boost.json"], 0);
    golden("classify_kappa_x", &["classify", "--matrix", "@kappa_x.json"], 0);
    golden("classify_not_lorentz", &["classify", "--matrix", "@not_lorentz.json"], 3);
}

#[test]
fn hilbert_basis() {
    golden("basis_boost", &["hilbert-basis", "--group", "@group_boost.json"], 0);
    golden("basis_kappa_x", &["hilbert-basis", "--group", "@group_kappa_x.json"], 0);
    golden("basis_c3_boost", &["hilbert-basis", "--group", "@group_c3_boost.json"], 0);
    golden("basis_zero_boost", &["hilbert-basis", "--group", "@group_zero_boost.json"], 5);
    golden("basis_cap", &["hilbert-basis", "--group", "@group_c3.json", "--cap", "2"], 4);
}

#[test]
fn verify_invariant() {
    golden("verify_rho", &["verify-invariant", "--group", "@group_boost.json", "--poly", "@rho.json"], 0);
    golden("verify_linear", &["verify-invariant", "--group", "@group_boost.json", "--poly", "@linear.json"], 0);
    golden("verify_j_grad", &["verify-invariant", "--group", "@group_boost.json", "--poly", "@j_grad_rho.json"], 0);
    golden("verify_flip", &["verify-invariant", "--group", "@group_boost.json", "--poly", "@flip.json"], 0);
}

#[test]
fn membership() {
    golden("member_sextic", &["membership", "--generators", "@gens_c3.json", "--poly", "@sextic.json"], 0);
    golden("member_odd", &["membership", "--generators", "@gens_c3.json", "--poly", "@odd.json"], 0);
    golden("member_cap", &["membership", "--generators", "@gens_c3.json", "--poly", "@sextic.json", "--cap", "1"], 7);
}

#[test]
fn molien() {
    golden("molien_c3", &["molien", "--group", "@group_c3.json", "--degree", "6"], 0);
}

#[test]
fn orbits_and_gap() {
    golden("orbit_branch", &["orbit-separate", "--beta", "0.7", "--p", "2,1", "--q", "-2,1"], 0);
    golden("orbit_zero_beta", &["orbit-separate", "--beta", "0", "--p", "2,1", "--q", "2,1"], 8);
    golden("gap_demo", &["gap-demo", "--beta", "0.7", "--samples", "500", "--seed", "7"], 0);
}

#[test]
fn cocompact_and_torus() {
    golden("cocompact_constant", &["cocompact-check", "--poly", "@constant.json", "--rank", "2"], 0);
    golden("cocompact_linear", &["cocompact-check", "--poly", "@linear.json", "--rank", "2"], 0);
    golden("cocompact_shape", &["cocompact-check", "--poly", "@linear.json", "--rank", "3"], 6);
    golden("torus_golden", &["torus-reconstruct", "--fourier", "@fourier_golden.json"], 0);
    golden("torus_too_wide", &["torus-reconstruct", "--fourier", "@fourier_too_wide.json"], 9);
}

#[test]
fn orbit_match_after_three_steps() {
    // H_β³ (2, 1) computed independently from cosh/sinh
    let (c, s) = ((2.1f64).cosh(), (2.1f64).sinh());
    let q = format!("{},{}", 2.0 * c + s, 2.0 * s + c);
    let (code, out, _) = run(&["orbit-separate", "--beta", "0.7", "--p", "2,1", "--q", &q, "--json-indent", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""reason":"matched""#) && out.contains(r#""n":3"#), "{out}");
}

#[test]
fn parse_errors_and_determinism() {
    let (code, _, err) = run(&["classify", "--matrix", "@missing.json"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run(&["molien", "--group", "@boost.json", "--degree", "3"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["orbit-separate", "--beta", "0.7", "--p", "2", "--q", "1,1"]);
    assert_eq!(code, 2);
    let a = run(&["gap-demo", "--beta", "0.3", "--seed", "11"]);
    let b = run(&["gap-demo", "--beta", "0.3", "--seed", "11"]);
    assert_eq!(a, b);
}

#[test]
fn help_lists_every_subcommand() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for cmd in [
        "classify",
        "hilbert-basis",
        "verify-invariant",
        "membership",
        "molien",
        "orbit-separate",
        "gap-demo",
        "cocompact-check",
        "torus-reconstruct",
    ] {
        assert!(out.contains(cmd), "{cmd} missing from help");
    }
    assert!(out.contains("Exit codes"));
}
