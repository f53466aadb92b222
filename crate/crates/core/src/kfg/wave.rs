use std::fmt;

use serde::Serialize;

use super::separation::{separate, CanonicalPair, SeparationParams};
use super::series::{series, Parity, SeriesSolution};
use crate::algebra::C64;
use crate::error::{Error, Result};

/// The four product types Φ±± = (U-factor parity, V-factor parity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ParityClass {
    PP,
    MM,
    PM,
    MP,
}

impl ParityClass {
    pub const ALL: [ParityClass; 4] = [ParityClass::PP, ParityClass::MM, ParityClass::PM, ParityClass::MP];

    pub fn parities(self) -> (Parity, Parity) {
        use Parity::*;
        match self {
            ParityClass::PP => (Even, Even),
            ParityClass::MM => (Odd, Odd),
            ParityClass::PM => (Even, Odd),
            ParityClass::MP => (Odd, Even),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ParityClass::PP => "++",
            ParityClass::MM => "--",
            ParityClass::PM => "+-",
            ParityClass::MP => "-+",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.label() == s)
    }

    /// Product of the factor parities.
    pub fn inversion_sign(self) -> i8 {
        let (pu, pv) = self.parities();
        (pu.sign() * pv.sign()) as i8
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Φ_class(a; u, v) = F_u(α, √(2λ)u) · F_v(−α, √(2λ)v).
#[derive(Clone, Debug, Serialize)]
pub struct WaveFunction {
    pub class: ParityClass,
    pub params: SeparationParams,
    pub pair: CanonicalPair,
    pub u_series: SeriesSolution,
    pub v_series: SeriesSolution,
}

impl WaveFunction {
    pub fn new(class: ParityClass, params: SeparationParams, terms: usize) -> Result<Self> {
        let pair = separate(&params)?;
        let (pu, pv) = class.parities();
        Ok(Self {
            class,
            params,
            pair,
            u_series: series(pu, pair.alpha_u, terms)?,
            v_series: series(pv, pair.alpha_v, terms)?,
        })
    }

    /// Largest physical |u| and |v| covered by the validated radii.
    pub fn radius(&self) -> (f64, f64) {
        (self.u_series.radius / self.pair.scale, self.v_series.radius / self.pair.scale)
    }

    pub fn u_factor(&self, u: f64) -> f64 {
        self.u_series.eval(self.pair.scale * u)
    }

    pub fn v_factor(&self, v: f64) -> f64 {
        self.v_series.eval(self.pair.scale * v)
    }

    pub fn check(&self, u: f64, v: f64) -> Result<()> {
        self.u_series.check_radius(self.pair.scale * u)?;
        self.v_series.check_radius(self.pair.scale * v)
    }

    /// Φ without the radius check.
    pub fn phi_unchecked(&self, u: f64, v: f64) -> f64 {
        self.u_factor(u) * self.v_factor(v)
    }

    pub fn phi(&self, u: f64, v: f64) -> Result<f64> {
        self.check(u, v)?;
        Ok(self.phi_unchecked(u, v))
    }

    /// Ψ = e^{−iεt/ħ} e^{ipz/ħ} Φ.
    pub fn psi(&self, t: f64, z: f64, u: f64, v: f64) -> Result<C64> {
        Ok(self.params.phase(t, z) * self.phi(u, v)?)
    }
}

pub fn wavefunction_eval(w: &WaveFunction, u: f64, v: f64) -> Result<C64> {
    w.psi(0.0, 0.0, u, v)
}

const PARITY_TOL: f64 = 1e-12;

/// Eigenvalue of δ̂: (u, v) → (−u, −v), read off from samples.
pub fn parity_eigenvalue(w: &WaveFunction, samples: &[(f64, f64)]) -> Result<i8> {
    let mut scale = 0.0f64;
    let mut dev = [0.0f64; 2];
    for &(u, v) in samples {
        let f = w.phi(u, v)?;
        let g = w.phi(-u, -v)?;
        scale = scale.max(f.abs());
        dev[0] = dev[0].max((g - f).abs());
        dev[1] = dev[1].max((g + f).abs());
    }
    let tol = PARITY_TOL * scale;
    match (dev[0] <= tol, dev[1] <= tol) {
        (true, false) => Ok(1),
        (false, true) => Ok(-1),
        _ => Err(Error::InconsistentParity(format!(
            "class {}: even deviation {:e}, odd deviation {:e}, scale {:e}",
            w.class, dev[0], dev[1], scale
        ))),
    }
}

/// Evenly spaced sample points in [−r, r]² avoiding the axes.
pub fn parity_grid(r: f64, n: usize) -> Vec<(f64, f64)> {
    let pts: Vec<f64> = (0..n).map(|i| -r + (2 * i + 1) as f64 * r / n as f64 + 0.1 * r / n as f64).collect();
    pts.iter().flat_map(|&u| pts.iter().map(move |&v| (u, v))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axis {
    /// u = 0, the image of x ≤ 0, y = 0.
    U0,
    /// v = 0, the image of x ≥ 0, y = 0.
    V0,
}

/// Φ(p) = sign·Φ(−p) for p on one coordinate axis, optionally with both sides zero.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryRelation {
    pub class: ParityClass,
    pub axis: Axis,
    pub sign: i8,
    pub vanishes: bool,
    pub residual: f64,
    pub pass: bool,
}

impl BoundaryRelation {
    pub fn describe(&self) -> String {
        let (p, m) = match self.axis {
            Axis::U0 => ("u=0,+v", "u=0,-v"),
            Axis::V0 => ("+u,v=0", "-u,v=0"),
        };
        let s = if self.sign > 0 { "+" } else { "-" };
        let zero = if self.vanishes { " = 0" } else { "" };
        format!("Phi{}({p}) = {s}Phi{}({m}){zero}", self.class, self.class)
    }
}

/// The printed sign relations on the two axes, two per class.
pub fn boundary_relations(class: ParityClass) -> [(Axis, i8, bool); 2] {
    match class {
        ParityClass::PP => [(Axis::U0, 1, false), (Axis::V0, 1, false)],
        ParityClass::MM => [(Axis::U0, 1, true), (Axis::V0, 1, true)],
        ParityClass::PM => [(Axis::U0, -1, false), (Axis::V0, 1, true)],
        ParityClass::MP => [(Axis::U0, 1, true), (Axis::V0, -1, false)],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryReport {
    pub class: ParityClass,
    pub relations: Vec<BoundaryRelation>,
    /// Values agree at the identified points (0, ±v) and (±u, 0).
    pub vector_admissible: bool,
}

impl BoundaryReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.pass)
    }
}

const BOUNDARY_TOL: f64 = 1e-12;

/// Checks both axis relations of a class at the sample coordinates (each used as ±u and ±v).
pub fn boundary_behavior_check(class: ParityClass, params: SeparationParams, terms: usize, samples: &[f64]) -> Result<BoundaryReport> {
    let w = WaveFunction::new(class, params, terms)?;
    let mut relations = Vec::new();
    let mut admissible = true;
    for (axis, sign, vanishes) in boundary_relations(class) {
        let mut residual = 0.0f64;
        let mut scale = 0.0f64;
        let mut mismatch = 0.0f64;
        for &s in samples {
            let (p, m) = match axis {
                Axis::U0 => (w.phi(0.0, s)?, w.phi(0.0, -s)?),
                Axis::V0 => (w.phi(s, 0.0)?, w.phi(-s, 0.0)?),
            };
            scale = scale.max(p.abs()).max(w.phi(s, s)?.abs());
            residual = residual.max((p - sign as f64 * m).abs());
            if vanishes {
                residual = residual.max(p.abs()).max(m.abs());
            }
            mismatch = mismatch.max((p - m).abs());
        }
        let tol = BOUNDARY_TOL * scale.max(1.0);
        admissible &= mismatch <= tol;
        relations.push(BoundaryRelation { class, axis, sign, vanishes, residual, pass: residual <= tol });
    }
    Ok(BoundaryReport { class, relations, vector_admissible: admissible })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kfg::separation::Equation;

    fn wf(class: ParityClass) -> WaveFunction {
        WaveFunction::new(class, SeparationParams::canonical(Equation::KleinGordon, 0.7), 60).unwrap()
    }

    #[test]
    fn origin_values() {
        assert_eq!(wf(ParityClass::PP).phi(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(wf(ParityClass::MM).phi(0.0, 0.0).unwrap(), 0.0);
        let pm = wf(ParityClass::PM);
        for u in [-2.0, 0.5, 3.0] {
            assert_eq!(pm.phi(u, 0.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn v_factor_uses_negated_alpha() {
        let w = wf(ParityClass::PP);
        assert!((w.u_series.alpha - 0.7).abs() < 1e-12);
        assert_eq!(w.v_series.alpha, -w.u_series.alpha);
    }

    #[test]
    fn psi_carries_phase() {
        let w = wf(ParityClass::MP);
        let psi = w.psi(1.0, 2.0, 0.4, 0.9).unwrap();
        assert!((psi.norm() - w.phi(0.4, 0.9).unwrap().abs()).abs() < 1e-15);
    }

    #[test]
    fn radius_exceeded_is_reported() {
        let w = WaveFunction::new(ParityClass::PP, SeparationParams::canonical(Equation::KleinGordon, 0.7), 10).unwrap();
        assert!(matches!(w.phi(20.0, 0.0), Err(Error::RadiusExceeded { .. })));
    }

    #[test]
    fn inversion_eigenvalues() {
        let grid = parity_grid(3.0, 7);
        for class in ParityClass::ALL {
            let e = parity_eigenvalue(&wf(class), &grid).unwrap();
            assert_eq!(e, class.inversion_sign());
        }
        assert_eq!(ParityClass::PP.inversion_sign(), 1);
        assert_eq!(ParityClass::MM.inversion_sign(), 1);
        assert_eq!(ParityClass::PM.inversion_sign(), -1);
        assert_eq!(ParityClass::MP.inversion_sign(), -1);
    }

    #[test]
    fn boundary_relations_and_classification() {
        let samples = [0.3, 1.1, 2.0, 3.5];
        let params = SeparationParams::canonical(Equation::KleinGordon, 0.7);
        let mut admissible = Vec::new();
        for class in ParityClass::ALL {
            let rep = boundary_behavior_check(class, params, 60, &samples).unwrap();
            assert!(rep.all_pass(), "{class}: {:?}", rep.relations);
            if rep.vector_admissible {
                admissible.push(class);
            }
        }
        assert_eq!(admissible, vec![ParityClass::PP, ParityClass::MM]);
    }

    #[test]
    fn wrong_sign_relation_fails() {
        let w = wf(ParityClass::MP);
        let (p, m) = (w.phi(1.2, 0.0).unwrap(), w.phi(-1.2, 0.0).unwrap());
        assert!(p.abs() > 1e-3);
        assert!((p - m).abs() > 1e-3);
    }

    #[test]
    fn labels_roundtrip() {
        for c in ParityClass::ALL {
            assert_eq!(ParityClass::parse(c.label()), Some(c));
        }
    }
}
