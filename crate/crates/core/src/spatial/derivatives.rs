use serde::Serialize;

use super::maps::{eta_auto, half_phase, xi_from_pseudovector};
use super::vectors::{Direction2, ProperVector3, PseudoVector3};
use crate::algebra::C64;
use crate::error::{Error, Result};

/// Central-difference step for a point of magnitude `scale`.
pub fn fd_step(scale: f64) -> f64 {
    1e-5 * scale.max(1.0)
}

fn off_axis(rho: f64, norm: f64) -> Result<()> {
    if norm == 0.0 || rho <= 1e-8 * norm {
        Err(Error::Singular { rho })
    } else {
        Ok(())
    }
}

/// ∇ₙξ¹ = ½[(n·a)/(a(a+a3)) + i(n×a)/ρ²]ξ¹, ∇ₙξ² = ½[(n·a)/(a(a−a3)) − i(n×a)/ρ²]ξ².
pub fn dir_deriv_xi(v: &PseudoVector3, n: &Direction2) -> Result<[C64; 2]> {
    let (a, rho) = (v.norm(), v.rho());
    off_axis(rho, a)?;
    let [a1, a2, a3] = v.a;
    let xi = xi_from_pseudovector(v, 0.0)?;
    let dot = n.dot(a1, a2);
    let cross = n.cross(a1, a2) / (rho * rho);
    let k1 = C64::new(dot / (a * (a + a3)), cross) * 0.5;
    let k2 = C64::new(dot / (a * (a - a3)), -cross) * 0.5;
    Ok([k1 * xi.c[0], k2 * xi.c[1]])
}

/// ∇ₙη¹ = (1/2ρ)[−(n·b)/b + (i/ρ)(n×b)]η¹ and the same bracket with opposite sign for η².
pub fn dir_deriv_eta(v: &ProperVector3, n: &Direction2) -> Result<[C64; 2]> {
    let (b, rho) = (v.norm(), v.rho());
    off_axis(rho, b)?;
    let eta = eta_auto(v)?;
    let bracket = eta_bracket(v, n);
    Ok([bracket * eta.c[0], -bracket * eta.c[1]])
}

/// (1/2ρ)[−(n·b)/b + (i/ρ)(n×b)], the η¹ factor.
pub fn eta_bracket(v: &ProperVector3, n: &Direction2) -> C64 {
    let (b, rho) = (v.norm(), v.rho());
    let [b1, b2, _] = v.b;
    C64::new(-n.dot(b1, b2) / b, n.cross(b1, b2) / rho) / (2.0 * rho)
}

/// Central difference of `f` along the in-plane direction `n`.
pub fn central_diff(f: impl Fn(f64, f64) -> Result<[C64; 2]>, x1: f64, x2: f64, n: &Direction2, h: f64) -> Result<[C64; 2]> {
    let p = f(x1 + h * n.n1, x2 + h * n.n2)?;
    let m = f(x1 - h * n.n1, x2 - h * n.n2)?;
    Ok([(p[0] - m[0]) / (2.0 * h), (p[1] - m[1]) / (2.0 * h)])
}

/// Distance of the point from the ξ/η branch cut {x1 ≥ 0, x2 = 0}, relative to its norm.
pub fn cut_distance(x1: f64, x2: f64) -> f64 {
    if x1 >= 0.0 {
        x2.abs()
    } else {
        x1.hypot(x2)
    }
}

/// Relative error of a derivative pair against its natural scale |ψ|/|x|.
pub fn relative_error(analytic: [C64; 2], numeric: [C64; 2], psi: [C64; 2], norm: f64) -> f64 {
    let scale = (psi[0].norm() + psi[1].norm()) / norm;
    let floor = analytic[0].norm().max(analytic[1].norm()).max(scale);
    (analytic[0] - numeric[0]).norm().max((analytic[1] - numeric[1]).norm()) / floor
}

/// Finite-difference check of [`dir_deriv_xi`] at one point.
pub fn xi_fd_error(v: &PseudoVector3, n: &Direction2) -> Result<f64> {
    let analytic = dir_deriv_xi(v, n)?;
    let a3 = v.a[2];
    let h = fd_step(v.norm());
    let f = |x1, x2| xi_from_pseudovector(&PseudoVector3::new(x1, x2, a3), 0.0).map(|s| s.c);
    let numeric = central_diff(f, v.a[0], v.a[1], n, h)?;
    let psi = xi_from_pseudovector(v, 0.0)?.c;
    Ok(relative_error(analytic, numeric, psi, v.norm()))
}

pub fn eta_fd_error(v: &ProperVector3, n: &Direction2) -> Result<f64> {
    let analytic = dir_deriv_eta(v, n)?;
    let b3 = v.b[2];
    let h = fd_step(v.norm());
    let hs = super::maps::HalfSpace::of(b3);
    let f = |x1, x2| super::maps::eta_from_vector(&ProperVector3::new(x1, x2, b3), hs).map(|s| s.c);
    let numeric = central_diff(f, v.b[0], v.b[1], n, h)?;
    let psi = eta_auto(v)?.c;
    Ok(relative_error(analytic, numeric, psi, v.norm()))
}

/// The four Cauchy-Riemann combinations for ξ = (U¹ + iV¹, U² + iV²).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CauchyRiemann {
    /// ∂U¹/∂a1 − ∂V¹/∂a2, ∂U¹/∂a2 + ∂V¹/∂a1, ∂U²/∂a1 − ∂V²/∂a2, ∂U²/∂a2 + ∂V²/∂a1.
    pub values: [f64; 4],
}

/// Right-hand sides of the modified Cauchy-Riemann relations.
pub fn cauchy_riemann_rhs(v: &PseudoVector3) -> Result<CauchyRiemann> {
    let (a, rho) = (v.norm(), v.rho());
    off_axis(rho, a)?;
    let [a1, a2, a3] = v.a;
    let h = half_phase(a1, a2);
    let (c, s) = (h.re, h.im);
    let (sp, sm) = ((a + a3).sqrt(), (a - a3).sqrt());
    let r2 = rho * rho;
    let f1 = 1.0 / (a * sp) + sp / r2;
    let f2 = 1.0 / (a * sm) - sm / r2;
    Ok(CauchyRiemann {
        values: [
            0.5 * (a1 * c + a2 * s) * f1,
            0.5 * (a2 * c - a1 * s) * f1,
            0.5 * (a1 * c - a2 * s) * f2,
            0.5 * (a2 * c + a1 * s) * f2,
        ],
    })
}

/// Left-hand sides by central differences of ξ.
pub fn cauchy_riemann_lhs(v: &PseudoVector3) -> Result<CauchyRiemann> {
    let a3 = v.a[2];
    let h = fd_step(v.norm());
    let f = |x1, x2| xi_from_pseudovector(&PseudoVector3::new(x1, x2, a3), 0.0).map(|s| s.c);
    let d1 = central_diff(f, v.a[0], v.a[1], &Direction2 { n1: 1.0, n2: 0.0 }, h)?;
    let d2 = central_diff(f, v.a[0], v.a[1], &Direction2 { n1: 0.0, n2: 1.0 }, h)?;
    Ok(CauchyRiemann {
        values: [
            d1[0].re - d2[0].im,
            d2[0].re + d1[0].im,
            d1[1].re - d2[1].im,
            d2[1].re + d1[1].im,
        ],
    })
}

/// |LHS − RHS| for each of the four relations.
pub fn cauchy_riemann_residual(v: &PseudoVector3) -> Result<[f64; 4]> {
    let (l, r) = (cauchy_riemann_lhs(v)?, cauchy_riemann_rhs(v)?);
    Ok(std::array::from_fn(|i| (l.values[i] - r.values[i]).abs()))
}
