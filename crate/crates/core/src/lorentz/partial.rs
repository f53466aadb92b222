use rand::Rng;
use serde::Serialize;

use super::generators::DiscreteGen;
use super::groups::witness_a;
use super::representation::flip_f;
use super::vector::{sample_component, Component, VectorRepLabel};
use crate::algebra::{bispinor, LorentzMatrix, SpinorParam};
use crate::error::Result;

/// One-generator extensions of the proper orthochronous group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PartialFamily {
    /// Generated with space inversion P.
    WithParity,
    /// Generated with time reversal T.
    WithTimeReversal,
}

impl PartialFamily {
    pub const ALL: [PartialFamily; 2] = [PartialFamily::WithParity, PartialFamily::WithTimeReversal];

    pub fn discrete(self) -> LorentzMatrix {
        match self {
            PartialFamily::WithParity => LorentzMatrix::parity(),
            PartialFamily::WithTimeReversal => LorentzMatrix::time_reversal(),
        }
    }

    fn component(self) -> Component {
        match self {
            PartialFamily::WithParity => Component::P,
            PartialFamily::WithTimeReversal => Component::T,
        }
    }

    /// Vector representations that coincide on the family.
    pub fn expected_collapse(self) -> Vec<(VectorRepLabel, VectorRepLabel)> {
        use VectorRepLabel::*;
        match self {
            PartialFamily::WithParity => vec![(F1, F3), (F2, F4)],
            PartialFamily::WithTimeReversal => vec![(F1, F4), (F2, F3)],
        }
    }
}

/// Generator related to `gen` by the witness A (M ↔ N, M′ ↔ ′N).
pub fn partner(gen: DiscreteGen) -> DiscreteGen {
    match gen {
        DiscreteGen::M => DiscreteGen::N,
        DiscreteGen::Mp => DiscreteGen::Np,
        DiscreteGen::N => DiscreteGen::M,
        DiscreteGen::Np => DiscreteGen::Mp,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartialAnalysis {
    pub family: PartialFamily,
    pub gen: DiscreteGen,
    /// Vector image of the generator lies in the family itself.
    pub covers_directly: bool,
    /// A conjugates the generator exactly onto its partner and fixes S.
    pub isomorphic_to_partner: bool,
    pub partner: DiscreteGen,
    pub collapsed_pairs: Vec<(VectorRepLabel, VectorRepLabel)>,
    pub collapse_matches: bool,
    /// Distinct values of f(gen) over the restricted T1..T4.
    pub restricted_signs: Vec<i8>,
    pub flip_exact: bool,
    pub continuous_residual: f64,
    pub classes: usize,
}

/// Builds SL(2,C) extended by `gen` and analyses its vector and spinor representations.
pub fn partly_extended_analysis<R: Rng + ?Sized>(
    family: PartialFamily,
    gen: DiscreteGen,
    rng: &mut R,
    samples: usize,
) -> Result<PartialAnalysis> {
    let covers_directly = gen.lorentz_image() == family.discrete();

    let a = witness_a();
    let ainv = a.inverse().expect("A is invertible");
    let p = partner(gen);
    let mapped = match gen {
        DiscreteGen::M | DiscreteGen::Mp => a * gen.matrix() * ainv,
        DiscreteGen::N | DiscreteGen::Np => ainv * gen.matrix() * a,
    };

    let ks: Vec<SpinorParam> = (0..samples).map(|_| SpinorParam::random(rng)).collect();
    let mut a_residual = 0.0f64;
    let f = flip_f();
    let finv = f.inverse().expect("F is invertible");
    let mut f_residual = 0.0f64;
    for k in &ks {
        let s = bispinor(k)?;
        a_residual = a_residual.max((a * s * ainv).max_abs_diff(&s));
        f_residual = f_residual.max((f * s * finv).max_abs_diff(&s));
    }
    let isomorphic_to_partner = mapped == p.matrix() && a_residual <= 1e-12;

    let mut ls = Vec::new();
    for _ in 0..samples {
        ls.push(sample_component(rng, Component::Identity));
        ls.push(sample_component(rng, family.component()));
    }
    let mut collapsed_pairs = Vec::new();
    for (i, x) in VectorRepLabel::ALL.into_iter().enumerate() {
        for y in VectorRepLabel::ALL.into_iter().skip(i + 1) {
            if ls.iter().all(|l| x.sign(l) == y.sign(l)) {
                collapsed_pairs.push((x, y));
            }
        }
    }
    let collapse_matches = collapsed_pairs == family.expected_collapse();

    let mut restricted_signs: Vec<i8> = Vec::new();
    for tag in super::representation::RepTag::ALL {
        let (s1, _) = tag.signs();
        if !restricted_signs.contains(&s1) {
            restricted_signs.push(s1);
        }
    }
    restricted_signs.sort();
    let flip_exact = f * gen.matrix() * finv == -gen.matrix();
    let classes = if flip_exact && f_residual <= 1e-12 { 1 } else { restricted_signs.len() };

    Ok(PartialAnalysis {
        family,
        gen,
        covers_directly,
        isomorphic_to_partner,
        partner: p,
        collapsed_pairs,
        collapse_matches,
        restricted_signs,
        flip_exact,
        continuous_residual: f_residual.max(a_residual),
        classes,
    })
}
