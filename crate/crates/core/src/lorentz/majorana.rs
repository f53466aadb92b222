use serde::Serialize;

use super::generators::DiscreteGen;
use super::groups::CoveringGroupId;
use crate::algebra::{bispinor, to_majorana, BasisTag, SpinorParam};
use crate::error::Result;

/// Behaviour of a matrix under complex conjugation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conjugation {
    Real,
    Imaginary,
    Mixed,
}

const REALITY_TOL: f64 = 1e-12;

pub fn conjugation_class(m: &crate::algebra::Matrix4) -> Conjugation {
    if m.max_imag() <= REALITY_TOL {
        Conjugation::Real
    } else if m.max_real() <= REALITY_TOL {
        Conjugation::Imaginary
    } else {
        Conjugation::Mixed
    }
}

/// Generator in the Majorana basis, via the gamma realization.
pub fn majorana_generator(g: DiscreteGen) -> crate::algebra::Matrix4 {
    g.from_gammas(BasisTag::Majorana)
}

pub fn generator_conjugation(g: DiscreteGen) -> Conjugation {
    conjugation_class(&majorana_generator(g))
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReality {
    pub group: CoveringGroupId,
    pub generators: [(DiscreteGen, Conjugation); 2],
    pub all_real: bool,
}

/// Which covering groups have real generators in the Majorana basis.
pub fn majorana_reality_scan() -> Vec<GroupReality> {
    CoveringGroupId::ALL
        .into_iter()
        .map(|group| {
            let (g1, g2) = group.generators();
            let generators = [(g1, generator_conjugation(g1)), (g2, generator_conjugation(g2))];
            let all_real = generators.iter().all(|(_, c)| *c == Conjugation::Real);
            GroupReality { group, generators, all_real }
        })
        .collect()
}

/// max |Im S| over the samples after moving S into the Majorana basis.
pub fn bispinor_max_imag(samples: &[SpinorParam]) -> Result<f64> {
    let mut worst = 0.0f64;
    for k in samples {
        worst = worst.max(to_majorana(&bispinor(k)?).max_imag());
    }
    Ok(worst)
}

/// max |U g U† − g_M| over the four generators: the two realizations agree.
pub fn realization_consistency() -> f64 {
    DiscreteGen::ALL
        .iter()
        .map(|g| to_majorana(&g.matrix()).max_abs_diff(&majorana_generator(*g)))
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primed_real_unprimed_imaginary() {
        assert_eq!(generator_conjugation(DiscreteGen::M), Conjugation::Imaginary);
        assert_eq!(generator_conjugation(DiscreteGen::N), Conjugation::Imaginary);
        assert_eq!(generator_conjugation(DiscreteGen::Mp), Conjugation::Real);
        assert_eq!(generator_conjugation(DiscreteGen::Np), Conjugation::Real);
    }

    #[test]
    fn only_pgp_is_real() {
        let real: Vec<_> = majorana_reality_scan().into_iter().filter(|r| r.all_real).map(|r| r.group).collect();
        assert_eq!(real, vec![CoveringGroupId::PGp]);
    }

    #[test]
    fn realizations_agree() {
        assert!(realization_consistency() < 1e-15);
    }
}
