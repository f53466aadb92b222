use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_TERMS: usize = 60;
pub const MAX_TERMS: usize = 150;
/// Ratio of the last retained terms to Σ|terms| accepted inside the validated radius.
pub const RADIUS_RATIO: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    fn offset(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Truncated series solution of F″ + (ξ²/4 − α)F = 0.
///
/// `coeffs[k]` is a_{2k} (even) or a_{2k+1} (odd) in the factorial-normalised form
/// F = Σ a_m ξ^m / m!; `c[k]` holds the plain power-series coefficients of the same
/// powers, built independently from the three-term recurrence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesSolution {
    pub parity: Parity,
    pub alpha: f64,
    pub coeffs: Vec<f64>,
    pub c: Vec<f64>,
    pub terms: usize,
    pub radius: f64,
}

fn check_terms(n: usize) -> Result<()> {
    if (2..=MAX_TERMS).contains(&n) {
        Ok(())
    } else {
        Err(Error::BadTruncation(n))
    }
}

/// E(α, ξ) = 1 + a₂ξ²/2! + a₄ξ⁴/4! + …
pub fn series_even(alpha: f64, n: usize) -> Result<SeriesSolution> {
    check_terms(n)?;
    let mut a = vec![1.0, alpha, alpha * alpha - 0.5, alpha.powi(3) - 3.5 * alpha];
    for k in 3..n {
        let m = (2 * k) as f64;
        a.push(alpha * a[k] - m * (m - 1.0) / 4.0 * a[k - 1]);
    }
    a.truncate(n);
    let mut c = vec![1.0, alpha / 2.0];
    for k in 1..n - 1 {
        let m = (2 * k) as f64;
        c.push((alpha * c[k] - c[k - 1] / 4.0) / ((m + 2.0) * (m + 1.0)));
    }
    Ok(SeriesSolution::finish(Parity::Even, alpha, a, c))
}

/// O(α, ξ) = ξ + a₃ξ³/3! + a₅ξ⁵/5! + …
pub fn series_odd(alpha: f64, n: usize) -> Result<SeriesSolution> {
    check_terms(n)?;
    let mut a = vec![1.0, alpha, alpha * alpha - 1.5];
    for k in 2..n {
        let m = (2 * k + 1) as f64;
        a.push(alpha * a[k] - m * (m - 1.0) / 4.0 * a[k - 1]);
    }
    a.truncate(n);
    let mut c = vec![1.0, alpha / 6.0];
    for k in 1..n - 1 {
        let m = (2 * k + 1) as f64;
        c.push((alpha * c[k] - c[k - 1] / 4.0) / ((m + 2.0) * (m + 1.0)));
    }
    Ok(SeriesSolution::finish(Parity::Odd, alpha, a, c))
}

pub fn series(parity: Parity, alpha: f64, n: usize) -> Result<SeriesSolution> {
    match parity {
        Parity::Even => series_even(alpha, n),
        Parity::Odd => series_odd(alpha, n),
    }
}

/// Value and truncation tail of one evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OdeResidual {
    pub residual: f64,
    pub tail: f64,
    pub within_radius: bool,
}

impl SeriesSolution {
    fn finish(parity: Parity, alpha: f64, coeffs: Vec<f64>, c: Vec<f64>) -> Self {
        let terms = coeffs.len();
        let mut s = Self { parity, alpha, coeffs, c, terms, radius: 0.0 };
        s.radius = s.validated_radius();
        s
    }

    fn power(&self, k: usize) -> usize {
        2 * k + self.parity.offset()
    }

    /// F(ξ) from the c-form, by Horner in ξ² so that F(−ξ) = ±F(ξ) exactly.
    pub fn eval(&self, xi: f64) -> f64 {
        let x2 = xi * xi;
        let s = self.c.iter().rev().fold(0.0, |acc, &ck| acc * x2 + ck);
        match self.parity {
            Parity::Even => s,
            Parity::Odd => xi * s,
        }
    }

    /// F(ξ) = Σ a_m ξ^m / m! from the factorial-normalised coefficients.
    pub fn eval_a_form(&self, xi: f64) -> f64 {
        let mut sum = 0.0;
        // ξ^m / m!, advanced two powers at a time
        let mut t = if self.parity == Parity::Even { 1.0 } else { xi };
        for (k, &a) in self.coeffs.iter().enumerate() {
            sum += a * t;
            let m = self.power(k) as f64;
            t *= xi * xi / ((m + 1.0) * (m + 2.0));
        }
        sum
    }

    pub fn deriv(&self, xi: f64) -> f64 {
        self.termwise(xi, |m| m as f64, 1)
    }

    pub fn deriv2(&self, xi: f64) -> f64 {
        self.termwise(xi, |m| (m * m.saturating_sub(1)) as f64, 2)
    }

    fn termwise(&self, xi: f64, factor: impl Fn(usize) -> f64, drop: usize) -> f64 {
        let mut sum = 0.0;
        for (k, &ck) in self.c.iter().enumerate().rev() {
            let m = self.power(k);
            if m >= drop {
                sum += factor(m) * ck * xi.powi((m - drop) as i32);
            }
        }
        sum
    }

    fn term_magnitudes(&self, xi: f64) -> (f64, f64) {
        let ax = xi.abs();
        let mut total = 0.0;
        let mut last = 0.0;
        for (k, &ck) in self.c.iter().enumerate() {
            let t = (ck * ax.powi(self.power(k) as i32)).abs();
            total += t;
            if k + 2 >= self.c.len() {
                last = f64::max(last, t);
            }
        }
        (last, total)
    }

    fn within(&self, xi: f64) -> bool {
        let (last, total) = self.term_magnitudes(xi);
        last <= RADIUS_RATIO * total
    }

    /// Largest |ξ| at which the last two retained terms stay below `RADIUS_RATIO`·Σ|terms|.
    fn validated_radius(&self) -> f64 {
        let step = 1.0 / 16.0;
        let mut lo = 0.0;
        while lo < 64.0 && self.within(lo + step) {
            lo += step;
        }
        let mut hi = lo + step;
        for _ in 0..40 {
            let mid = 0.5 * (lo + hi);
            if self.within(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// |F″ + (ξ²/4 − α)F| with the termwise-differentiated series. The truncation leaves
    /// (c_{M−2}/4 − αc_M)ξ^M + c_Mξ^{M+2}/4 for top power M, reported as `tail`.
    pub fn ode_residual(&self, xi: f64) -> OdeResidual {
        let f = self.eval(xi);
        let r = self.deriv2(xi) + (xi * xi / 4.0 - self.alpha) * f;
        let n = self.c.len();
        let top = self.power(n - 1) as i32;
        let tail = (xi.powi(top) * (self.c[n - 2] / 4.0 - self.alpha * self.c[n - 1])
            + xi.powi(top + 2) * self.c[n - 1] / 4.0)
            .abs();
        OdeResidual { residual: r.abs(), tail, within_radius: xi.abs() <= self.radius }
    }

    pub fn check_radius(&self, xi: f64) -> Result<()> {
        if xi.abs() <= self.radius {
            Ok(())
        } else {
            Err(Error::RadiusExceeded { xi: xi.abs(), radius: self.radius })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_coefficients() {
        let e = series_even(0.0, 10).unwrap();
        assert_eq!(&e.coeffs[..4], &[1.0, 0.0, -0.5, 0.0]);
        assert_eq!(series_even(2.0, 10).unwrap().coeffs[2], 3.5);
        let o = series_odd(0.0, 10).unwrap();
        assert_eq!(&o.coeffs[..3], &[1.0, 0.0, -1.5]);
        let alpha = 0.7;
        let e = series_even(alpha, 10).unwrap();
        assert_eq!(e.coeffs[2], alpha * alpha - 0.5);
        assert_eq!(e.coeffs[3], alpha * alpha * alpha - 3.5 * alpha);
        assert_eq!(series_odd(alpha, 10).unwrap().coeffs[2], alpha * alpha - 1.5);
    }

    #[test]
    fn initial_data() {
        let e = series_even(1.3, 60).unwrap();
        assert_eq!((e.eval(0.0), e.deriv(0.0)), (1.0, 0.0));
        let o = series_odd(1.3, 60).unwrap();
        assert_eq!((o.eval(0.0), o.deriv(0.0)), (0.0, 1.0));
    }

    #[test]
    fn truncation_bounds() {
        assert!(matches!(series_even(0.0, 1), Err(Error::BadTruncation(1))));
        assert!(matches!(series_odd(0.0, MAX_TERMS + 1), Err(Error::BadTruncation(_))));
        assert_eq!(series_odd(0.0, 2).unwrap().coeffs.len(), 2);
    }

    #[test]
    fn both_recurrences_define_the_same_function() {
        for alpha in [-2.0, 0.0, 0.7, 2.0] {
            for s in [series_even(alpha, 60).unwrap(), series_odd(alpha, 60).unwrap()] {
                for xi in [0.5, 1.0, 2.0] {
                    assert!((s.eval(xi) - s.eval_a_form(xi)).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn default_radius_covers_four() {
        for alpha in [-2.0, -0.7, 0.0, 0.7, 2.0] {
            assert!(series_even(alpha, 60).unwrap().radius >= 4.0);
            assert!(series_odd(alpha, 60).unwrap().radius >= 4.0);
        }
    }

    #[test]
    fn exact_parity() {
        let e = series_even(0.7, 60).unwrap();
        let o = series_odd(0.7, 60).unwrap();
        for xi in [0.3, 1.7, 2.9] {
            assert_eq!(e.eval(-xi), e.eval(xi));
            assert_eq!(o.eval(-xi), -o.eval(xi));
        }
    }

    #[test]
    fn base_case_residual_is_zero() {
        let e = series_even(0.9, 60).unwrap();
        assert_eq!(e.ode_residual(0.0).residual, (2.0 * e.c[1] - e.alpha).abs());
        assert_eq!(e.ode_residual(0.0).residual, 0.0);
    }

    #[test]
    fn residual_small_inside_radius() {
        let s = series_even(1.0, 60).unwrap();
        let r = s.ode_residual(2.0);
        assert!(r.within_radius && r.residual < 1e-8);
        for xi in [-3.0, -1.5, 0.4, 3.0] {
            assert!(series_odd(1.0, 60).unwrap().ode_residual(xi).residual < 1e-8);
        }
    }

    #[test]
    fn residual_grows_beyond_radius() {
        let s = series_even(1.0, 10).unwrap();
        let xs: Vec<f64> = (0..8).map(|i| s.radius + 0.5 + 0.5 * i as f64).collect();
        let rs: Vec<f64> = xs.iter().map(|&x| s.ode_residual(x).residual).collect();
        assert!(!s.ode_residual(xs[0]).within_radius);
        assert!(rs.windows(2).all(|w| w[1] > w[0]), "{rs:?}");
        assert!(s.check_radius(xs[0]).is_err());
    }

    #[test]
    fn residual_matches_tail_estimate() {
        let s = series_odd(0.5, 12).unwrap();
        let r = s.ode_residual(5.0);
        assert!((r.residual - r.tail).abs() <= 1e-6 * r.tail);
    }
}
