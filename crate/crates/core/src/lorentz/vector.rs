use rand::Rng;
use serde::Serialize;

use crate::algebra::{lorentz_from_spinor, LorentzMatrix, SpinorParam};
use crate::error::{Error, Result};

pub const METRIC_TOL: f64 = 1e-10;

/// Multiplicative sign functions on the full Lorentz group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VectorRepLabel {
    F1,
    F2,
    F3,
    F4,
}

impl VectorRepLabel {
    pub const ALL: [VectorRepLabel; 4] = [VectorRepLabel::F1, VectorRepLabel::F2, VectorRepLabel::F3, VectorRepLabel::F4];

    /// f1 = 1, f2 = det L, f3 = sgn L⁰₀, f4 = det L · sgn L⁰₀.
    pub fn sign(self, l: &LorentzMatrix) -> f64 {
        let det = l.det().signum();
        let orient = l.time_orientation();
        match self {
            VectorRepLabel::F1 => 1.0,
            VectorRepLabel::F2 => det,
            VectorRepLabel::F3 => orient,
            VectorRepLabel::F4 => det * orient,
        }
    }
}

/// Residual scaled by the entry size so large boosts are judged fairly.
pub fn scaled_metric_residual(l: &LorentzMatrix) -> f64 {
    let size = l.0.iter().flatten().fold(1.0f64, |m, v| m.max(v.abs()));
    l.metric_residual() / (size * size)
}

/// T(L) = f(L)·L.
pub fn vector_rep(label: VectorRepLabel, l: &LorentzMatrix) -> Result<LorentzMatrix> {
    let residual = scaled_metric_residual(l);
    if residual > METRIC_TOL {
        return Err(Error::NotLorentz { residual });
    }
    Ok(l.scale(label.sign(l)))
}

/// The four connected components, labelled by the discrete factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Component {
    Identity,
    P,
    T,
    PT,
}

impl Component {
    pub const ALL: [Component; 4] = [Component::Identity, Component::P, Component::T, Component::PT];

    pub fn matrix(self) -> LorentzMatrix {
        match self {
            Component::Identity => LorentzMatrix::identity(),
            Component::P => LorentzMatrix::parity(),
            Component::T => LorentzMatrix::time_reversal(),
            Component::PT => LorentzMatrix::parity() * LorentzMatrix::time_reversal(),
        }
    }
}

/// L(k)·X for a random k and the given component.
pub fn sample_component<R: Rng + ?Sized>(rng: &mut R, c: Component) -> LorentzMatrix {
    let k = SpinorParam::random(rng);
    lorentz_from_spinor(&k).expect("sampled parameters are normalized") * c.matrix()
}

pub fn sample_full_lorentz<R: Rng + ?Sized>(rng: &mut R) -> (LorentzMatrix, Component) {
    let c = Component::ALL[rng.gen_range(0..4)];
    (sample_component(rng, c), c)
}
