use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Equation {
    KleinGordon,
    Schrodinger,
}

/// Quantum numbers and constants of a separated solution.
/// `a` is the separation constant before rescaling; b = −a.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeparationParams {
    pub equation: Equation,
    pub epsilon: f64,
    pub p: f64,
    pub m: f64,
    pub hbar: f64,
    pub c: f64,
    pub a: f64,
}

impl SeparationParams {
    pub fn klein_gordon(epsilon: f64, p: f64, m: f64, a: f64) -> Self {
        Self { equation: Equation::KleinGordon, epsilon, p, m, hbar: 1.0, c: 1.0, a }
    }

    pub fn schrodinger(epsilon: f64, p: f64, m: f64, a: f64) -> Self {
        Self { equation: Equation::Schrodinger, epsilon, p, m, hbar: 1.0, c: 1.0, a }
    }

    /// m = 1, p = 0 and ε chosen so that λ = 1/2: the rescaling is the identity and α = a.
    pub fn canonical(equation: Equation, alpha: f64) -> Self {
        match equation {
            Equation::KleinGordon => Self::klein_gordon(1.25f64.sqrt(), 0.0, 1.0, alpha),
            Equation::Schrodinger => Self::schrodinger(0.125, 0.0, 1.0, alpha),
        }
    }

    pub fn with_equation(self, equation: Equation) -> Self {
        Self { equation, ..self }
    }

    pub fn lambda_sq(&self) -> f64 {
        let (h, c) = (self.hbar, self.c);
        match self.equation {
            Equation::KleinGordon => {
                self.epsilon * self.epsilon / (h * h * c * c) - self.m * self.m * c * c / (h * h) - self.p * self.p / (h * h)
            }
            Equation::Schrodinger => 2.0 * self.m * (self.epsilon - self.p * self.p / (2.0 * self.m)) / (h * h),
        }
    }

    pub fn lambda(&self) -> Result<f64> {
        let l2 = self.lambda_sq();
        if l2 > 0.0 && l2.is_finite() {
            Ok(l2.sqrt())
        } else {
            Err(Error::Evanescent { lambda_sq: l2 })
        }
    }

    /// The factor multiplying (u² + v²)Φ once ∂t and ∂z act on the phase
    /// e^{−iεt/ħ} e^{ipz/ħ}; equals λ².
    pub fn operator_factor(&self) -> f64 {
        let (h, c) = (self.hbar, self.c);
        // eigenvalues of ∂t² and ∂z² on the phase
        let dt2 = -(self.epsilon / h).powi(2);
        let dz2 = -(self.p / h).powi(2);
        match self.equation {
            Equation::KleinGordon => -(dt2 / (c * c) - dz2 + (self.m * c / h).powi(2)),
            Equation::Schrodinger => {
                // iħ∂t Ψ = −ħ²/2m (∂z² + Δ) Ψ
                let i_hbar_dt = self.epsilon;
                2.0 * self.m / (h * h) * (i_hbar_dt + h * h / (2.0 * self.m) * dz2)
            }
        }
    }

    /// The phase e^{−iεt/ħ} e^{ipz/ħ} carried by Ψ.
    pub fn phase(&self, t: f64, z: f64) -> crate::algebra::C64 {
        crate::algebra::C64::from_polar(1.0, (-self.epsilon * t + self.p * z) / self.hbar)
    }
}

/// U″ + (ξ²/4 − α_u)U = 0 and V″ + (ξ²/4 − α_v)V = 0 in ξ = √(2λ)·(u or v).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CanonicalPair {
    pub equation: Equation,
    pub lambda: f64,
    /// √(2λ): physical coordinate → canonical coordinate.
    pub scale: f64,
    pub a: f64,
    pub b: f64,
    pub alpha_u: f64,
    pub alpha_v: f64,
}

impl CanonicalPair {
    pub fn u_coefficient(&self, xi: f64) -> f64 {
        xi * xi / 4.0 - self.alpha_u
    }

    pub fn v_coefficient(&self, xi: f64) -> f64 {
        xi * xi / 4.0 - self.alpha_v
    }

    pub fn rescale_coordinate(&self, u: f64) -> f64 {
        self.scale * u
    }
}

pub fn separate(params: &SeparationParams) -> Result<CanonicalPair> {
    let lambda = params.lambda()?;
    let alpha = params.a / (2.0 * lambda);
    Ok(CanonicalPair {
        equation: params.equation,
        lambda,
        scale: (2.0 * lambda).sqrt(),
        a: params.a,
        b: -params.a,
        alpha_u: alpha,
        alpha_v: -alpha,
    })
}

/// Same canonical pair with λ² = 2m(ε − p²/2m)/ħ².
pub fn schrodinger_separate(params: &SeparationParams) -> Result<CanonicalPair> {
    separate(&params.with_equation(Equation::Schrodinger))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_equation_carries_plus_a() {
        let pair = separate(&SeparationParams::canonical(Equation::KleinGordon, 0.7)).unwrap();
        assert_eq!(pair.a + pair.b, 0.0);
        assert!((pair.v_coefficient(0.0) - 0.7).abs() < 1e-15);
        assert!((pair.u_coefficient(0.0) + 0.7).abs() < 1e-15);
    }

    #[test]
    fn half_lambda_rescaling_is_identity() {
        for eq in [Equation::KleinGordon, Equation::Schrodinger] {
            let pair = separate(&SeparationParams::canonical(eq, 0.3)).unwrap();
            assert!((pair.lambda - 0.5).abs() < 1e-15);
            assert!((pair.scale - 1.0).abs() < 1e-15);
            assert!((pair.alpha_u - 0.3).abs() < 1e-15);
        }
    }

    #[test]
    fn rescaled_coordinate_is_unit_free() {
        // lengths in a unit s times smaller: λ → λ/s, u → u√s
        let params = SeparationParams::klein_gordon(3.0, 1.0, 2.0, 0.4);
        let pair = separate(&params).unwrap();
        for s in [1e-3, 0.5, 7.0] {
            let scaled = SeparationParams { hbar: params.hbar * s, ..params };
            let sp = separate(&scaled).unwrap();
            assert!((sp.lambda - pair.lambda / s).abs() < 1e-12 * pair.lambda / s);
            let u = 1.3;
            assert!((sp.rescale_coordinate(u * s.sqrt()) - pair.rescale_coordinate(u)).abs() < 1e-12);
        }
    }

    #[test]
    fn evanescent_regime_rejected() {
        let params = SeparationParams::klein_gordon(0.5, 0.0, 1.0, 0.1);
        assert!(matches!(separate(&params), Err(Error::Evanescent { .. })));
        let params = SeparationParams::schrodinger(0.1, 1.0, 1.0, 0.1);
        assert!(matches!(schrodinger_separate(&params), Err(Error::Evanescent { .. })));
    }

    #[test]
    fn schrodinger_lambda_at_half_energy() {
        let params = SeparationParams::schrodinger(0.5, 0.0, 1.0, 0.0);
        assert!((params.lambda_sq() - 1.0).abs() < 1e-15);
        let pair = schrodinger_separate(&SeparationParams::klein_gordon(0.5, 0.0, 1.0, 0.2)).unwrap();
        assert!((pair.lambda - 1.0).abs() < 1e-15);
    }

    #[test]
    fn operator_factor_matches_lambda_sq() {
        for p in [
            SeparationParams::klein_gordon(3.0, 1.0, 2.0, 0.4),
            SeparationParams { hbar: 0.7, c: 3.0, ..SeparationParams::klein_gordon(9.0, 0.5, 1.1, 0.0) },
            SeparationParams::schrodinger(2.0, 0.5, 1.5, 0.1),
        ] {
            assert!((p.operator_factor() - p.lambda_sq()).abs() < 1e-12 * p.lambda_sq().abs());
        }
    }

    #[test]
    fn z_phase_is_plane_wave() {
        let p = SeparationParams::schrodinger(0.5, 0.8, 1.0, 0.0);
        let ph = p.phase(0.0, 2.0);
        assert!((ph.arg() - 1.6).abs() < 1e-15 && (ph.norm() - 1.0).abs() < 1e-15);
    }
}
