use serde::Serialize;

use super::coords::{local_preimage, to_cartesian};
use super::wave::WaveFunction;
use crate::error::{Error, Result};

pub const FD_STEP: f64 = 1e-3;
/// Cartesian stencils need r = (u² + v²)/2 at least this many steps from the origin.
const ORIGIN_CLEARANCE: f64 = 100.0;

/// ÂΦ against aΦ at one point. `relative` divides by the sum of magnitudes of the terms of Â.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EigenResidual {
    pub value: f64,
    pub expected: f64,
    pub scale: f64,
    pub relative: f64,
}

impl EigenResidual {
    fn new(value: f64, expected: f64, scale: f64) -> Self {
        let relative = if scale > 0.0 { (value - expected).abs() / scale } else { (value - expected).abs() };
        Self { value, expected, scale, relative }
    }
}

fn d2(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h)) / (12.0 * h * h)
}

const D1: [(f64, f64); 4] = [(-2.0, 1.0), (-1.0, -8.0), (1.0, 8.0), (2.0, -1.0)];

fn d1(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    D1.iter().map(|&(k, c)| c * f(x + k * h)).sum::<f64>() / (12.0 * h)
}

fn d11(f: impl Fn(f64, f64) -> f64, x: f64, y: f64, h: f64) -> f64 {
    let mut s = 0.0;
    for &(i, ci) in &D1 {
        for &(j, cj) in &D1 {
            s += ci * cj * f(x + i * h, y + j * h);
        }
    }
    s / (144.0 * h * h)
}

fn clear_of_edge(w: &WaveFunction, u: f64, v: f64, h: f64) -> Result<()> {
    let (ru, rv) = w.radius();
    if u.abs() + 2.0 * h > ru || v.abs() + 2.0 * h > rv {
        return Err(Error::BoundaryProximity(u, v));
    }
    Ok(())
}

/// Â = ½[∂u² − ∂v² − (∂t² − ∂z² + m²)(u² − v²)] on Ψ, with the t and z derivatives
/// taken analytically on the phase; Φ derivatives by five-point differences.
pub fn a_operator_apply(w: &WaveFunction, u: f64, v: f64) -> Result<EigenResidual> {
    let h = FD_STEP;
    clear_of_edge(w, u, v, h)?;
    let phi = w.phi_unchecked(u, v);
    let fuu = d2(|s| w.phi_unchecked(s, v), u, h);
    let fvv = d2(|s| w.phi_unchecked(u, s), v, h);
    let pot = w.params.operator_factor() * (u * u - v * v) * phi;
    let value = 0.5 * (fuu - fvv + pot);
    let scale = 0.5 * (fuu.abs() + fvv.abs() + pot.abs());
    Ok(EigenResidual::new(value, w.params.a * phi, scale))
}

/// Â = x(∂x² − ∂y²) + 2y ∂x∂y + ∂x + x(−∂t² + ∂z² − m²) at the image of (u, v),
/// with Φ(x, y) read on the local branch through (u, v).
pub fn a_operator_cartesian(w: &WaveFunction, u: f64, v: f64) -> Result<EigenResidual> {
    let h = FD_STEP;
    let (x, y) = to_cartesian(u, v);
    if x.hypot(y) < ORIGIN_CLEARANCE * h {
        return Err(Error::BoundaryProximity(u, v));
    }
    // the stencil moves (u, v) by about h / |(u, v)|
    clear_of_edge(w, u, v, 4.0 * h / u.hypot(v))?;
    let f = |x: f64, y: f64| {
        let (s, t) = local_preimage(x, y, (u, v));
        w.phi_unchecked(s, t)
    };
    let phi = w.phi_unchecked(u, v);
    let fxx = d2(|s| f(s, y), x, h);
    let fyy = d2(|s| f(x, s), y, h);
    let fxy = d11(f, x, y, h);
    let fx = d1(|s| f(s, y), x, h);
    let terms = [x * (fxx - fyy), 2.0 * y * fxy, fx, x * w.params.operator_factor() * phi];
    let value: f64 = terms.iter().sum();
    let scale: f64 = terms.iter().map(|t| t.abs()).sum();
    Ok(EigenResidual::new(value, w.params.a * phi, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kfg::separation::{Equation, SeparationParams};
    use crate::kfg::wave::ParityClass;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn points(seed: u64, n: usize) -> Vec<(f64, f64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        while out.len() < n {
            let (u, v): (f64, f64) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            if u.hypot(v) > 0.6 {
                out.push((u, v));
            }
        }
        out
    }

    #[test]
    fn eigen_relation_uv_form() {
        let params = SeparationParams::canonical(Equation::KleinGordon, 0.7);
        for class in ParityClass::ALL {
            let w = WaveFunction::new(class, params, 60).unwrap();
            for (u, v) in points(1, 100) {
                let r = a_operator_apply(&w, u, v).unwrap();
                assert!(r.relative < 1e-6, "{class} ({u}, {v}): {r:?}");
            }
        }
    }

    #[test]
    fn eigen_relation_cartesian_form() {
        let params = SeparationParams::canonical(Equation::KleinGordon, 0.7);
        for class in ParityClass::ALL {
            let w = WaveFunction::new(class, params, 60).unwrap();
            for (u, v) in points(2, 100) {
                let r = a_operator_cartesian(&w, u, v).unwrap();
                let s = a_operator_apply(&w, u, v).unwrap();
                assert!(r.relative < 1e-6, "{class} ({u}, {v}): {r:?}");
                assert!((r.value - s.value).abs() < 1e-6 * (r.scale + s.scale));
            }
        }
    }

    #[test]
    fn physical_units_and_schrodinger() {
        for params in [
            SeparationParams::klein_gordon(2.0, 0.5, 1.0, 0.9),
            SeparationParams::schrodinger(0.5, 0.0, 1.0, -0.4),
        ] {
            let w = WaveFunction::new(ParityClass::MP, params, 60).unwrap();
            for (u, v) in points(3, 50).into_iter().map(|(u, v)| (u * 0.6, v * 0.6)) {
                assert!(a_operator_apply(&w, u, v).unwrap().relative < 1e-6);
            }
        }
    }

    #[test]
    fn zero_constant_annihilates_symmetric_solution() {
        let w = WaveFunction::new(ParityClass::PP, SeparationParams::canonical(Equation::KleinGordon, 0.0), 60).unwrap();
        for (u, v) in points(4, 50) {
            let r = a_operator_apply(&w, u, v).unwrap();
            assert_eq!(r.expected, 0.0);
            assert!(r.value.abs() < 1e-6 * r.scale);
        }
    }

    #[test]
    fn edge_points_rejected() {
        let w = WaveFunction::new(ParityClass::PP, SeparationParams::canonical(Equation::KleinGordon, 0.7), 60).unwrap();
        let (ru, _) = w.radius();
        assert!(matches!(a_operator_apply(&w, ru, 0.0), Err(Error::BoundaryProximity(..))));
        assert!(matches!(a_operator_cartesian(&w, 1e-3, 1e-3), Err(Error::BoundaryProximity(..))));
    }
}
