use serde::Serialize;

use super::vectors::{Model, ProperVector3, PseudoVector3, Sheet, SpatialSpinor};
use crate::algebra::{pauli, C64};
use crate::error::{Error, Result};

/// Points with ρ below this fraction of the norm are treated as on the axis.
pub const AXIS_TOL: f64 = 1e-14;

/// e^{iγ/2} for e^{iγ} = (x1 + i x2)/ρ, with γ ∈ [0, 2π).
/// The cut lies on the half-plane {x1 ≥ 0, x2 = 0}.
pub fn half_phase(x1: f64, x2: f64) -> C64 {
    let rho = x1.hypot(x2);
    let w = C64::new(x1 / rho, x2 / rho).sqrt();
    if w.im < 0.0 {
        -w
    } else {
        w
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HalfSpace {
    Upper,
    Lower,
}

impl HalfSpace {
    pub fn sign(self) -> f64 {
        match self {
            HalfSpace::Upper => 1.0,
            HalfSpace::Lower => -1.0,
        }
    }

    pub fn of(x3: f64) -> Self {
        if x3 < 0.0 {
            HalfSpace::Lower
        } else {
            HalfSpace::Upper
        }
    }
}

/// ξ = (√(a+a3) e^{−iγ/2}, √(a−a3) e^{+iγ/2}); on the a3-axis γ is replaced by `mute_angle`.
pub fn xi_from_pseudovector(v: &PseudoVector3, mute_angle: f64) -> Result<SpatialSpinor> {
    let a = v.norm();
    if a == 0.0 {
        return Err(Error::UndefinedSpinor);
    }
    let a3 = v.a[2];
    let rho = v.rho();
    let h = if rho <= AXIS_TOL * a { C64::from_polar(1.0, mute_angle / 2.0) } else { half_phase(v.a[0], v.a[1]) };
    let (p, m) = if rho <= AXIS_TOL * a {
        // exactly one component survives on the axis
        if a3 > 0.0 {
            ((2.0 * a3).sqrt(), 0.0)
        } else {
            (0.0, (-2.0 * a3).sqrt())
        }
    } else {
        ((a + a3).max(0.0).sqrt(), (a - a3).max(0.0).sqrt())
    };
    Ok(SpatialSpinor::new(h.conj() * p, h * m, Sheet::Upper, Model::Xi))
}

/// (a, a⃗) from ξ⊗ξ† = a·Id + aⱼσʲ.
pub fn reconstruct_pseudovector(s: &SpatialSpinor) -> Result<(f64, PseudoVector3)> {
    s.expect_model(Model::Xi)?;
    let [x1, x2] = s.c;
    let (n1, n2) = (x1.norm_sqr(), x2.norm_sqr());
    let off = x1 * x2.conj();
    Ok(((n1 + n2) / 2.0, PseudoVector3::new(off.re, -off.im, (n1 - n2) / 2.0)))
}

/// η = (s√(b−ρ) e^{−iγ/2}, √(b+ρ) e^{+iγ/2}) with s = +1 on the upper and −1 on the
/// lower half-space. Both forms agree on b3 = 0. On the axis γ defaults to 0.
pub fn eta_from_vector(v: &ProperVector3, halfspace: HalfSpace) -> Result<SpatialSpinor> {
    eta_from_vector_with_mute(v, halfspace, 0.0)
}

pub fn eta_from_vector_with_mute(v: &ProperVector3, halfspace: HalfSpace, mute_angle: f64) -> Result<SpatialSpinor> {
    let b = v.norm();
    if b == 0.0 {
        return Err(Error::UndefinedSpinor);
    }
    let b3 = v.b[2];
    if b3 != 0.0 && HalfSpace::of(b3) != halfspace {
        return Err(Error::HalfSpaceMismatch { requested: format!("{halfspace:?}"), b3 });
    }
    let rho = v.rho();
    let h = if rho <= AXIS_TOL * b { C64::from_polar(1.0, mute_angle / 2.0) } else { half_phase(v.b[0], v.b[1]) };
    let s = halfspace.sign();
    let p = (b - rho).max(0.0).sqrt();
    let q = (b + rho).sqrt();
    Ok(SpatialSpinor::new(h.conj() * (s * p), h * q, Sheet::Upper, Model::Eta))
}

/// Half-space chosen from the sign of b3.
pub fn eta_auto(v: &ProperVector3) -> Result<SpatialSpinor> {
    eta_from_vector(v, HalfSpace::of(v.b[2]))
}

/// Coefficients of the symmetric pairing η ηᵀ σ² = (c_j + i b_j) σʲ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EtaDecomposition {
    pub c: [f64; 3],
    pub b: [f64; 3],
    /// Identity component; vanishes identically for a pure spinor.
    pub trace: f64,
}

pub const TRACE_TOL: f64 = 1e-10;

/// Decompose η ηᵀ σ² over {Id, σʲ}; the σʲ coefficients are c_j + i b_j.
pub fn reconstruct_vector(s: &SpatialSpinor) -> Result<EtaDecomposition> {
    s.expect_model(Model::Eta)?;
    let [e1, e2] = s.c;
    let outer = crate::algebra::Matrix2::new(e1 * e1, e1 * e2, e2 * e1, e2 * e2);
    let sig = pauli();
    let x = outer * sig[1];
    let trace = (x.trace() / 2.0).norm();
    let scale = s.c[0].norm_sqr() + s.c[1].norm_sqr();
    if trace > TRACE_TOL * scale.max(1.0) {
        return Err(Error::InconsistentSpinor { trace });
    }
    let w: [C64; 3] = std::array::from_fn(|j| (x * sig[j]).trace() / 2.0);
    Ok(EtaDecomposition { c: w.map(|z| z.re), b: w.map(|z| z.im), trace })
}

/// ξ → η = (ξ − iσ²ξ*)/√2 and η → ξ = (η + iσ²η*)/√2.
pub fn transmute(s: &SpatialSpinor) -> SpatialSpinor {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let [c1, c2] = s.c;
    match s.model {
        Model::Xi => SpatialSpinor::new((c1 - c2.conj()) * r, (c2 + c1.conj()) * r, s.sheet, Model::Eta),
        Model::Eta => SpatialSpinor::new((c1 + c2.conj()) * r, (c2 - c1.conj()) * r, s.sheet, Model::Xi),
    }
}

/// The literal map (ψ − iσ²ψ*)/√2 without regard to the model tag.
pub fn transmute_forward_raw(c: [C64; 2]) -> [C64; 2] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [(c[0] - c[1].conj()) * r, (c[1] + c[0].conj()) * r]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{I, ZERO};
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    fn close(a: C64, b: C64) -> bool {
        (a - b).norm() < 1e-14
    }

    #[test]
    fn xi_examples() {
        let s = xi_from_pseudovector(&PseudoVector3::new(0.0, 0.0, 1.0), 0.0).unwrap();
        assert!(close(s.c[0], C64::new(SQRT_2, 0.0)) && s.c[1] == ZERO);
        let s = xi_from_pseudovector(&PseudoVector3::new(1.0, 0.0, 0.0), 0.0).unwrap();
        assert_eq!(s.c, [C64::new(1.0, 0.0), C64::new(1.0, 0.0)]);
        let s = xi_from_pseudovector(&PseudoVector3::new(0.0, 1.0, 0.0), 0.0).unwrap();
        assert!(close(s.c[0], C64::from_polar(1.0, -FRAC_PI_4)));
        assert!(close(s.c[1], C64::from_polar(1.0, FRAC_PI_4)));
        assert_eq!(xi_from_pseudovector(&PseudoVector3::new(0.0, 0.0, 0.0), 0.0), Err(Error::UndefinedSpinor));
    }

    #[test]
    fn mute_angle_on_axis() {
        let s = xi_from_pseudovector(&PseudoVector3::new(0.0, 0.0, -2.0), 1.0).unwrap();
        assert_eq!(s.c[0], ZERO);
        assert!(close(s.c[1], C64::from_polar(2.0, 0.5)));
    }

    #[test]
    fn half_phase_branch() {
        assert_eq!(half_phase(1.0, 0.0), C64::new(1.0, 0.0));
        assert!(close(half_phase(-1.0, 0.0), I));
        // just below the cut γ is close to 2π
        assert!((half_phase(1.0, -1e-9) + 1.0).norm() < 1e-8);
    }

    #[test]
    fn xi_reconstruction_examples() {
        let s = SpatialSpinor::new(C64::new(SQRT_2, 0.0), ZERO, Sheet::Upper, Model::Xi);
        let (a, v) = reconstruct_pseudovector(&s).unwrap();
        assert!((a - 1.0).abs() < 1e-15 && (v.a[2] - 1.0).abs() < 1e-15 && v.a[0] == 0.0);
        let s = SpatialSpinor::new(C64::new(1.0, 0.0), C64::new(1.0, 0.0), Sheet::Upper, Model::Xi);
        assert_eq!(reconstruct_pseudovector(&s).unwrap(), (1.0, PseudoVector3::new(1.0, 0.0, 0.0)));
    }

    #[test]
    fn eta_on_plane() {
        let s = eta_from_vector(&ProperVector3::new(2.0, 0.0, 0.0), HalfSpace::Upper).unwrap();
        assert_eq!(s.c, [ZERO, C64::new(2.0, 0.0)]);
        let t = eta_from_vector(&ProperVector3::new(2.0, 0.0, 0.0), HalfSpace::Lower).unwrap();
        assert_eq!(s.c[1], t.c[1]);
        assert!(s.c[0].norm() == 0.0 && t.c[0].norm() == 0.0);
    }

    #[test]
    fn eta_plane_matches_principal_root() {
        // the (0, √(2(b1 + i b2))) form on the plane, for γ ∈ [0, π]
        for g in [0.3f64, 1.2, 2.9] {
            let v = ProperVector3::new(1.5 * g.cos(), 1.5 * g.sin(), 0.0);
            let s = eta_auto(&v).unwrap();
            let want = (C64::new(v.b[0], v.b[1]) * 2.0).sqrt();
            assert!(close(s.c[1], want) && s.c[0].norm() < 1e-15);
        }
    }

    #[test]
    fn halfspace_mismatch() {
        let v = ProperVector3::new(1.0, 0.0, 1.0);
        assert!(matches!(eta_from_vector(&v, HalfSpace::Lower), Err(Error::HalfSpaceMismatch { .. })));
        let up = eta_from_vector(&v, HalfSpace::Upper).unwrap();
        let down = eta_from_vector(&ProperVector3::new(1.0, 0.0, -1.0), HalfSpace::Lower).unwrap();
        assert_eq!(down.c[0], -up.c[0]);
        assert_eq!(down.c[1], up.c[1]);
    }

    #[test]
    fn eta_decomposition_example() {
        let s = SpatialSpinor::new(ZERO, C64::new(SQRT_2, 0.0), Sheet::Upper, Model::Eta);
        let d = reconstruct_vector(&s).unwrap();
        assert!((d.b[0] - 1.0).abs() < 1e-15 && d.b[1].abs() < 1e-15 && d.b[2].abs() < 1e-15);
        assert!(reconstruct_vector(&xi_from_pseudovector(&PseudoVector3::new(1.0, 0.0, 0.0), 0.0).unwrap()).is_err());
    }

    #[test]
    fn eta_phase_doubles_coefficients() {
        let s = eta_auto(&ProperVector3::new(0.4, -0.7, 1.1)).unwrap();
        let ph = C64::from_polar(1.0, 0.37);
        let t = SpatialSpinor { c: s.c.map(|z| z * ph), ..s };
        let (d, e) = (reconstruct_vector(&s).unwrap(), reconstruct_vector(&t).unwrap());
        for j in 0..3 {
            let want = C64::new(d.c[j], d.b[j]) * ph * ph;
            assert!((C64::new(e.c[j], e.b[j]) - want).norm() < 1e-14);
        }
    }

    #[test]
    fn transmute_examples() {
        let s = SpatialSpinor::new(C64::new(SQRT_2, 0.0), ZERO, Sheet::Upper, Model::Xi);
        let t = transmute(&s);
        assert!(close(t.c[0], C64::new(1.0, 0.0)) && close(t.c[1], C64::new(1.0, 0.0)));
        assert_eq!(t.model, Model::Eta);
        assert!(transmute(&t).max_abs_diff(&s) < 1e-15);
    }

    #[test]
    fn raw_forward_map_squares_to_conjugation() {
        let c = [C64::new(0.3, -1.2), C64::new(0.8, 0.5)];
        let twice = transmute_forward_raw(transmute_forward_raw(c));
        // −iσ²ψ*: (−ψ2*, ψ1*)
        assert!(close(twice[0], -c[1].conj()) && close(twice[1], c[0].conj()));
    }

    #[test]
    fn transmute_maps_xi_of_a_to_eta_of_a() {
        for v in [[0.3, 0.4, 1.0], [-1.0, 0.2, -0.5], [0.7, -0.9, 0.0]] {
            let xi = xi_from_pseudovector(&PseudoVector3::new(v[0], v[1], v[2]), 0.0).unwrap();
            let eta = eta_auto(&ProperVector3::new(v[0], v[1], v[2])).unwrap();
            assert!(transmute(&xi).max_abs_diff(&eta) < 1e-14, "{v:?}");
        }
    }
}
