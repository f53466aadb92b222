use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::generators::DiscreteGen;
use super::groups::{CoveringGroupId, GroupElement, NormalForm};
use crate::algebra::{bispinor, Matrix2, Matrix4, SpinorParam, C64, I, ZERO};
use crate::error::Result;

/// The four one-dimensional twists T(g) = f(g)·g.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RepTag {
    T1,
    T2,
    T3,
    T4,
}

impl RepTag {
    pub const ALL: [RepTag; 4] = [RepTag::T1, RepTag::T2, RepTag::T3, RepTag::T4];

    /// (f(g1), f(g2)) for the first and second generator of any group.
    pub fn signs(self) -> (i8, i8) {
        match self {
            RepTag::T1 => (1, 1),
            RepTag::T2 => (-1, -1),
            RepTag::T3 => (1, -1),
            RepTag::T4 => (-1, 1),
        }
    }
}

impl fmt::Display for RepTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A representation together with its sign on each generator of a group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RepLabel {
    pub tag: RepTag,
    pub fvalues: BTreeMap<DiscreteGen, i8>,
}

impl RepLabel {
    pub fn for_group(id: CoveringGroupId, tag: RepTag) -> Self {
        let (g1, g2) = id.generators();
        let (s1, s2) = tag.signs();
        Self { tag, fvalues: BTreeMap::from([(g1, s1), (g2, s2)]) }
    }
}

/// f(g) on a normal form; f(S) = 1 and f(−I) = 1.
pub fn f_value(tag: RepTag, nf: &NormalForm) -> i8 {
    let (s1, s2) = tag.signs();
    let p1 = if nf.e1 == 1 { s1 } else { 1 };
    let p2 = if nf.e2 == 1 { s2 } else { 1 };
    p1 * p2
}

/// T(g) = f(g)·g for an element of group `id`.
pub fn rep_value(id: CoveringGroupId, tag: RepTag, g: &GroupElement) -> Result<Matrix4> {
    let nf = g.reduce(id)?;
    rep_value_nf(tag, &nf)
}

pub fn rep_value_nf(tag: RepTag, nf: &NormalForm) -> Result<Matrix4> {
    Ok(nf.realization()? * f_value(tag, nf) as f64)
}

/// F = diag(−Id, Id): flips every generator and fixes the continuous sector.
pub fn flip_f() -> Matrix4 {
    let id = Matrix2::identity();
    Matrix4::block_diag(&-id, &id)
}

/// Continuous parameter with Im k0 ≠ 0, so S(k)·g1g2 has nonzero trace in every group.
pub fn trace_probe() -> SpinorParam {
    SpinorParam::new(I, ZERO, ZERO, I * 2f64.sqrt())
}

/// Evidence that T_j = C T_i C⁻¹.
#[derive(Clone, Debug, Serialize)]
pub struct Conjugation {
    pub from: RepTag,
    pub to: RepTag,
    pub conjugator: &'static str,
    pub generators_exact: bool,
    pub continuous_residual: f64,
}

/// Element whose characters differ under two representations.
#[derive(Clone, Debug, Serialize)]
pub struct TraceWitness {
    pub a: RepTag,
    pub b: RepTag,
    pub element: String,
    pub trace_a: C64,
    pub trace_b: C64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceResult {
    pub group: CoveringGroupId,
    pub classes: Vec<Vec<RepTag>>,
    pub conjugations: Vec<Conjugation>,
    pub witnesses: Vec<TraceWitness>,
    pub undetermined: Vec<(RepTag, RepTag)>,
}

impl EquivalenceResult {
    pub fn max_continuous_residual(&self) -> f64 {
        self.conjugations.iter().map(|c| c.continuous_residual).fold(0.0, f64::max)
    }
}

const CONTINUOUS_TOL: f64 = 1e-12;

fn conjugators() -> [(&'static str, Matrix4); 2] {
    [("I", Matrix4::identity()), ("F", flip_f())]
}

fn try_conjugate(id: CoveringGroupId, a: RepTag, b: RepTag, samples: &[SpinorParam]) -> Result<Option<Conjugation>> {
    let (g1, g2) = id.generators();
    for (name, c) in conjugators() {
        let cinv = c.inverse().expect("conjugator is invertible");
        let exact = [g1, g2].into_iter().all(|g| {
            let e = GroupElement::discrete(&[g]);
            let ta = rep_value(id, a, &e).expect("generator is a member");
            let tb = rep_value(id, b, &e).expect("generator is a member");
            c * ta * cinv == tb
        });
        if !exact {
            continue;
        }
        let mut worst = 0.0f64;
        for k in samples {
            let s = bispinor(k)?;
            worst = worst.max((c * s * cinv).max_abs_diff(&s));
        }
        if worst <= CONTINUOUS_TOL {
            return Ok(Some(Conjugation { from: a, to: b, conjugator: name, generators_exact: true, continuous_residual: worst }));
        }
    }
    Ok(None)
}

fn trace_witness(id: CoveringGroupId, a: RepTag, b: RepTag) -> Result<Option<TraceWitness>> {
    for k in [SpinorParam::IDENTITY, trace_probe()] {
        for (sign, e1, e2) in id.discrete_elements() {
            let nf = NormalForm { group: id, sign, continuous: k, e1, e2 };
            let ta = rep_value_nf(a, &nf)?.trace();
            let tb = rep_value_nf(b, &nf)?.trace();
            if (ta - tb).norm() > 1e-9 {
                let word: Vec<_> = nf.word().iter().map(|g| g.name()).collect();
                let cont = if k == SpinorParam::IDENTITY { "" } else { "S(k_w)*" };
                let element = format!("{}{cont}{}", if sign > 0 { "" } else { "-" }, if word.is_empty() { "I".into() } else { word.join("") });
                return Ok(Some(TraceWitness { a, b, element, trace_a: ta, trace_b: tb }));
            }
        }
    }
    Ok(None)
}

/// Partition T1..T4 into equivalence classes: F-conjugation proves equivalence,
/// a character mismatch proves inequivalence.
pub fn rep_equivalence_check(id: CoveringGroupId, samples: &[SpinorParam]) -> Result<EquivalenceResult> {
    let mut parent: Vec<usize> = (0..4).collect();
    fn root(p: &[usize], mut i: usize) -> usize {
        while p[i] != i {
            i = p[i];
        }
        i
    }
    let mut conjugations = Vec::new();
    let mut witnesses = Vec::new();
    let mut undetermined = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let (a, b) = (RepTag::ALL[i], RepTag::ALL[j]);
            if let Some(c) = try_conjugate(id, a, b, samples)? {
                conjugations.push(c);
                let (ri, rj) = (root(&parent, i), root(&parent, j));
                parent[rj] = ri;
            } else if let Some(w) = trace_witness(id, a, b)? {
                witnesses.push(w);
            } else {
                undetermined.push((a, b));
            }
        }
    }
    let mut classes: Vec<Vec<RepTag>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..4 {
        let r = root(&parent, i);
        match roots.iter().position(|&x| x == r) {
            Some(p) => classes[p].push(RepTag::ALL[i]),
            None => {
                roots.push(r);
                classes.push(vec![RepTag::ALL[i]]);
            }
        }
    }
    Ok(EquivalenceResult { group: id, classes, conjugations, witnesses, undetermined })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn samples() -> Vec<SpinorParam> {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        (0..20).map(|_| SpinorParam::random(&mut rng)).collect()
    }

    #[test]
    fn table_examples() {
        use DiscreteGen::*;
        let gm = CoveringGroupId::GM;
        let t = rep_value(gm, RepTag::T2, &GroupElement::discrete(&[M])).unwrap();
        assert_eq!(t, -M.matrix());
        let t = rep_value(gm, RepTag::T4, &GroupElement::discrete(&[Mp])).unwrap();
        assert_eq!(t, Mp.matrix());
        let k = samples()[0];
        for id in CoveringGroupId::ALL {
            for tag in RepTag::ALL {
                let t = rep_value(id, tag, &GroupElement::continuous(k)).unwrap();
                assert_eq!(t, bispinor(&k).unwrap());
            }
        }
    }

    #[test]
    fn minus_identity_has_trivial_sign() {
        let minus = GroupElement::continuous(-SpinorParam::IDENTITY);
        for id in CoveringGroupId::ALL {
            for tag in RepTag::ALL {
                assert_eq!(rep_value(id, tag, &minus).unwrap(), -Matrix4::identity());
            }
        }
    }

    #[test]
    fn reps_are_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for id in CoveringGroupId::ALL {
            for tag in RepTag::ALL {
                for _ in 0..5 {
                    let pick = |rng: &mut ChaCha8Rng| {
                        let (s, a, b) = id.discrete_elements()[rand::Rng::gen_range(rng, 0..8)];
                        NormalForm { group: id, sign: s, continuous: SpinorParam::random(rng), e1: a, e2: b }
                    };
                    let (x, y) = (pick(&mut rng), pick(&mut rng));
                    let lhs = rep_value_nf(tag, &x.mul(&y).unwrap()).unwrap();
                    let rhs = rep_value_nf(tag, &x).unwrap() * rep_value_nf(tag, &y).unwrap();
                    assert!(lhs.max_abs_diff(&rhs) < 1e-10 * rhs.max_abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn two_classes_per_group() {
        use RepTag::*;
        let ks = samples();
        for id in CoveringGroupId::ALL {
            let r = rep_equivalence_check(id, &ks).unwrap();
            assert_eq!(r.classes, vec![vec![T1, T2], vec![T3, T4]], "{id}");
            assert!(r.undetermined.is_empty());
            assert!(r.witnesses.iter().any(|w| (w.a, w.b) == (T1, T3)));
        }
    }

    #[test]
    fn flip_conjugates_generators() {
        let f = flip_f();
        let finv = f.inverse().unwrap();
        for g in DiscreteGen::ALL {
            assert_eq!(f * g.matrix() * finv, -g.matrix());
        }
    }

    #[test]
    fn probe_is_normalized() {
        assert!(trace_probe().ensure_normalized().is_ok());
    }
}
