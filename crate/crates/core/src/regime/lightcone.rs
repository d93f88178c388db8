use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Acceptance window on `|n - round(n)|` for the discrete logarithm.
pub const STEP_WINDOW: f64 = 1e-9;

/// Light-cone coordinates `u = x + y`, `v = x - y`, in which
/// `x² - y² = u v` and the boost acts as `(u, v) ↦ (e^β u, e^{-β} v)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LightConePoint {
    pub u: f64,
    pub v: f64,
}

impl LightConePoint {
    pub fn from_xy(x: f64, y: f64) -> Self {
        Self { u: x + y, v: x - y }
    }

    pub fn to_xy(self) -> (f64, f64) {
        ((self.u + self.v) / 2.0, (self.u - self.v) / 2.0)
    }

    pub fn rho(self) -> f64 {
        self.u * self.v
    }

    /// `H_β^n` applied to the point.
    pub fn boost(self, beta: f64, n: i64) -> Self {
        let e = (n as f64 * beta).exp();
        Self {
            u: self.u * e,
            v: self.v / e,
        }
    }
}

/// `e^{-1/(x²-y²)}` on the right branch `x² - y² > 0, x > 0`, zero elsewhere.
pub fn gap_g(x: f64, y: f64) -> f64 {
    let rho = x * x - y * y;
    if rho > 0.0 && x > 0.0 {
        let g = (-1.0 / rho).exp();
        if g.is_normal() {
            g
        } else {
            0.0
        }
    } else {
        0.0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum OrbitReason {
    BranchMismatch,
    NonIntegerStep { step: f64 },
    Matched { n: i64 },
    ConeCase { n: Option<i64> },
    Origin,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitVerdict {
    pub same_orbit: bool,
    #[serde(flatten)]
    pub reason: OrbitReason,
    pub rho_p: f64,
    pub rho_q: f64,
}

fn sign(a: f64) -> i32 {
    if a > 0.0 {
        1
    } else if a < 0.0 {
        -1
    } else {
        0
    }
}

/// Integer step `n` with `H_β^n p = q`, confirmed by applying it.
fn integer_step(lp: LightConePoint, lq: LightConePoint, beta: f64, tol: f64) -> (f64, Option<i64>) {
    let step = if lp.u != 0.0 {
        (lq.u / lp.u).ln() / beta
    } else {
        -(lq.v / lp.v).ln() / beta
    };
    let n = step.round();
    if (step - n).abs() > tol {
        return (step, None);
    }
    let img = lp.boost(beta, n as i64);
    let (x1, y1) = img.to_xy();
    let (x2, y2) = lq.to_xy();
    let scale = 1.0 + x2.abs().max(y2.abs());
    if (x1 - x2).abs() <= tol * scale && (y1 - y2).abs() <= tol * scale {
        (step, Some(n as i64))
    } else {
        (step, None)
    }
}

/// Decide whether `q ∈ ⟨H_β⟩ · p`. The boost preserves the signs of `u`
/// and `v`, so a sign change separates orbits outright.
pub fn separate_orbits(p: (f64, f64), q: (f64, f64), beta: f64, tol: f64) -> Result<OrbitVerdict> {
    if beta == 0.0 {
        return Err(Error::ZeroBeta);
    }
    if !beta.is_finite() || !tol.is_finite() || [p.0, p.1, q.0, q.1].iter().any(|c| !c.is_finite()) {
        return Err(Error::Parse("orbit inputs must be finite".into()));
    }
    let lp = LightConePoint::from_xy(p.0, p.1);
    let lq = LightConePoint::from_xy(q.0, q.1);
    let verdict = |same_orbit, reason| OrbitVerdict {
        same_orbit,
        reason,
        rho_p: p.0 * p.0 - p.1 * p.1,
        rho_q: q.0 * q.0 - q.1 * q.1,
    };
    let origin = |l: LightConePoint| l.u == 0.0 && l.v == 0.0;
    if origin(lp) || origin(lq) {
        return Ok(verdict(origin(lp) && origin(lq), OrbitReason::Origin));
    }
    if sign(lp.u) != sign(lq.u) || sign(lp.v) != sign(lq.v) {
        return Ok(verdict(false, OrbitReason::BranchMismatch));
    }
    let (step, n) = integer_step(lp, lq, beta, tol);
    if lp.u == 0.0 || lp.v == 0.0 {
        return Ok(verdict(n.is_some(), OrbitReason::ConeCase { n }));
    }
    Ok(match n {
        Some(n) => verdict(true, OrbitReason::Matched { n }),
        None => verdict(false, OrbitReason::NonIntegerStep { step }),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchValues {
    pub t: f64,
    pub right: f64,
    pub left: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GapReport {
    pub beta: f64,
    pub samples: usize,
    pub steps: [i64; 2],
    /// `max |G(H_β^n z) - G(z)| / max(1, |H_β^n z|²)` over the samples.
    pub max_orbit_deviation: f64,
    /// Largest value of `G` along sampled cone orbits.
    pub cone_max: f64,
    pub branch_values: BranchValues,
    /// Invariant on orbits yet different on the two branches of one level set.
    pub certified: bool,
}

/// Sample `G` along boost orbits and on the two branches of `ρ = t`.
pub fn schwarz_gap_report<R: Rng>(
    beta: f64,
    samples: usize,
    t: f64,
    tol: f64,
    rng: &mut R,
) -> Result<GapReport> {
    if beta == 0.0 {
        return Err(Error::ZeroBeta);
    }
    if samples == 0 || t.is_nan() || t <= 0.0 {
        return Err(Error::Parse("need at least one sample and t > 0".into()));
    }
    let steps = [-5i64, 5];
    let mut dev: f64 = 0.0;
    let mut cone_max: f64 = 0.0;
    for _ in 0..samples {
        let (x, y) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let z = LightConePoint::from_xy(x, y);
        let g0 = gap_g(x, y);
        let c = rng.gen_range(-3.0..3.0);
        let cone = if rng.gen_bool(0.5) {
            LightConePoint { u: c, v: 0.0 }
        } else {
            LightConePoint { u: 0.0, v: c }
        };
        for n in steps[0]..=steps[1] {
            let (x1, y1) = z.boost(beta, n).to_xy();
            let scale = 1f64.max(x1 * x1 + y1 * y1);
            dev = dev.max((gap_g(x1, y1) - g0).abs() / scale);
            let (cx, cy) = cone.boost(beta, n).to_xy();
            cone_max = cone_max.max(gap_g(cx, cy));
        }
    }
    let r = t.sqrt();
    let branch_values = BranchValues {
        t,
        right: gap_g(r, 0.0),
        left: gap_g(-r, 0.0),
    };
    let certified = dev < tol && (branch_values.right - branch_values.left).abs() > tol;
    Ok(GapReport {
        beta,
        samples,
        steps,
        max_orbit_deviation: dev,
        cone_max,
        branch_values,
        certified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gap_values() {
        assert!((gap_g(2.0, 1.0) - (-1.0f64 / 3.0).exp()).abs() < 1e-16);
        assert!((gap_g(2.0, 1.0) - 0.716_531_310_573_789_3).abs() < 1e-15);
        assert_eq!(gap_g(-2.0, 1.0), 0.0);
        assert_eq!(gap_g(1.0, 1.0), 0.0);
        assert_eq!(gap_g(1e-3, 0.0), 0.0);
    }

    #[test]
    fn round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let (x, y): (f64, f64) = (rng.gen_range(-100.0..100.0), rng.gen_range(-100.0..100.0));
            let l = LightConePoint::from_xy(x, y);
            let (x2, y2) = l.to_xy();
            let m = x.abs().max(y.abs());
            assert!((x - x2).abs() <= 1e-14 * m && (y - y2).abs() <= 1e-14 * m);
            assert!((l.rho() - (x * x - y * y)).abs() <= 1e-12 * m * m);
        }
    }

    #[test]
    fn orbits() {
        let v = separate_orbits((2.0, 1.0), (-2.0, 1.0), 0.7, STEP_WINDOW).unwrap();
        assert!(!v.same_orbit);
        assert_eq!(v.reason, OrbitReason::BranchMismatch);
        assert_eq!((v.rho_p, v.rho_q), (3.0, 3.0));
        let q = LightConePoint::from_xy(2.0, 1.0).boost(0.7, 3).to_xy();
        let v = separate_orbits((2.0, 1.0), q, 0.7, STEP_WINDOW).unwrap();
        assert_eq!(v.reason, OrbitReason::Matched { n: 3 });
        let back = separate_orbits(q, (2.0, 1.0), 0.7, STEP_WINDOW).unwrap();
        assert_eq!(back.reason, OrbitReason::Matched { n: -3 });
        let v = separate_orbits((2.0, 1.0), (2.1, 1.0), 0.7, STEP_WINDOW).unwrap();
        assert!(matches!(v.reason, OrbitReason::NonIntegerStep { .. }));
        let same = separate_orbits((2.0, 1.0), (2.0, 1.0), 0.7, STEP_WINDOW).unwrap();
        assert_eq!(same.reason, OrbitReason::Matched { n: 0 });
        assert_eq!(separate_orbits((1.0, 0.0), (1.0, 0.0), 0.0, 1e-9), Err(Error::ZeroBeta));
    }

    #[test]
    fn no_integer_step_by_brute_force() {
        // (2,1) to (2.1,1): no |n| <= 50 maps one onto the other
        let p = LightConePoint::from_xy(2.0, 1.0);
        for n in -50..=50 {
            let (x, y) = p.boost(0.7, n).to_xy();
            assert!((x - 2.1).abs() + (y - 1.0).abs() > 1e-9);
        }
    }

    #[test]
    fn cone_and_origin() {
        let c = LightConePoint { u: 2.0, v: 0.0 };
        let q = c.boost(0.5, 2).to_xy();
        let v = separate_orbits(c.to_xy(), q, 0.5, STEP_WINDOW).unwrap();
        assert_eq!(v.reason, OrbitReason::ConeCase { n: Some(2) });
        let w = separate_orbits((1.0, 1.0), (1.0, -1.0), 0.5, STEP_WINDOW).unwrap();
        assert_eq!(w.reason, OrbitReason::BranchMismatch);
        let o = separate_orbits((0.0, 0.0), (0.0, 0.0), 0.5, STEP_WINDOW).unwrap();
        assert!(o.same_orbit);
        assert_eq!(o.reason, OrbitReason::Origin);
    }

    #[test]
    fn gap_report() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let r = schwarz_gap_report(0.7, 500, 3.0, 1e-10, &mut rng).unwrap();
        assert!(r.max_orbit_deviation < 1e-10);
        assert_eq!(r.cone_max, 0.0);
        assert!((r.branch_values.right - (-1.0f64 / 3.0).exp()).abs() < 1e-15);
        assert_eq!(r.branch_values.left, 0.0);
        assert!(r.certified);
        let one = schwarz_gap_report(0.7, 1, 1.0, 1e-10, &mut rng).unwrap();
        assert!((one.branch_values.right - 0.367_879_441_171_442_3).abs() < 1e-15);
        for beta in [0.3, 1.5] {
            let r = schwarz_gap_report(beta, 500, 3.0, 1e-10, &mut rng).unwrap();
            assert!(r.max_orbit_deviation < 1e-10);
        }
    }
}
