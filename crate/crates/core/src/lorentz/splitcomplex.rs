use std::ops::{Add, Mul, Neg, Sub};

/// A split-complex number `re + h·im` with `h² = 1`, a model of the
/// Minkowski plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitComplex {
    pub re: f64,
    pub h: f64,
}

impl SplitComplex {
    pub fn new(re: f64, h: f64) -> Self {
        Self { re, h }
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.h)
    }

    /// `z z̄ = re² - h²`, the Minkowski quadratic form.
    pub fn modulus_sq(self) -> f64 {
        self.re * self.re - self.h * self.h
    }

    /// `e^{hβ} = cosh β + h sinh β`.
    pub fn exp_h(beta: f64) -> Self {
        Self::new(beta.cosh(), beta.sinh())
    }

    /// Apply the hyperbolic rotation matrix `[[cosh β, sinh β], [sinh β, cosh β]]`.
    pub fn boost(self, beta: f64) -> Self {
        let (c, s) = (beta.cosh(), beta.sinh());
        Self::new(c * self.re + s * self.h, s * self.re + c * self.h)
    }
}

impl Add for SplitComplex {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.h + o.h)
    }
}

impl Sub for SplitComplex {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.h - o.h)
    }
}

impl Mul for SplitComplex {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(self.re * o.re + self.h * o.h, self.re * o.h + self.h * o.re)
    }
}

impl Neg for SplitComplex {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_divisors() {
        let a = SplitComplex::new(1.0, 1.0);
        let b = SplitComplex::new(1.0, -1.0);
        assert_eq!(a * b, SplitComplex::new(0.0, 0.0));
    }

    #[test]
    fn modulus_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let z = SplitComplex::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
            let p = z * z.conj();
            assert!((p.re - z.modulus_sq()).abs() < 1e-12);
            assert!(p.h.abs() < 1e-12);
        }
    }

    #[test]
    fn boost_is_multiplication_by_exp_h() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let z = SplitComplex::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let beta: f64 = rng.gen_range(-2.0..2.0);
            let a = z.boost(beta);
            let b = SplitComplex::exp_h(beta) * z;
            let scale = 1.0 + z.re.abs() + z.h.abs();
            assert!((a.re - b.re).abs() < 1e-10 * scale);
            assert!((a.h - b.h).abs() < 1e-10 * scale);
        }
    }
}
