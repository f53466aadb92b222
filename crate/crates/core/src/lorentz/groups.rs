use std::fmt;

use serde::Serialize;

use super::generators::DiscreteGen;
use crate::algebra::{bispinor, bispinor_pair, Matrix2, Matrix4, SpinorParam, C64, I, ONE};
use crate::error::{Error, Result};
use crate::report::CheckRecord;

/// The six two-generator extensions of the bispinor group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CoveringGroupId {
    GM,
    GN,
    Gp,
    PG,
    G,
    PGp,
}

/// Expected relations of a group: g1², g2² as ±1 and whether g1, g2 commute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Relations {
    pub g1_sq: i8,
    pub g2_sq: i8,
    pub commute: bool,
}

impl CoveringGroupId {
    pub const ALL: [CoveringGroupId; 6] = [
        CoveringGroupId::GM,
        CoveringGroupId::GN,
        CoveringGroupId::Gp,
        CoveringGroupId::PG,
        CoveringGroupId::G,
        CoveringGroupId::PGp,
    ];

    pub fn generators(self) -> (DiscreteGen, DiscreteGen) {
        use DiscreteGen::*;
        match self {
            CoveringGroupId::GM => (M, Mp),
            CoveringGroupId::GN => (N, Np),
            CoveringGroupId::Gp => (Mp, N),
            CoveringGroupId::PG => (Np, M),
            CoveringGroupId::G => (M, N),
            CoveringGroupId::PGp => (Mp, Np),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CoveringGroupId::GM => "G_M",
            CoveringGroupId::GN => "G_N",
            CoveringGroupId::Gp => "G'",
            CoveringGroupId::PG => "'G",
            CoveringGroupId::G => "G",
            CoveringGroupId::PGp => "'G'",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.name() == s || format!("{g:?}") == s)
    }

    /// The relation set each group is listed with.
    pub fn expected_relations(self) -> Relations {
        let (g1_sq, g2_sq, commute) = match self {
            CoveringGroupId::GM | CoveringGroupId::GN => (1, -1, true),
            CoveringGroupId::Gp | CoveringGroupId::PG => (-1, 1, false),
            CoveringGroupId::G => (1, 1, false),
            CoveringGroupId::PGp => (-1, -1, false),
        };
        Relations { g1_sq, g2_sq, commute }
    }

    /// The eight discrete elements ±{I, g1, g2, g1g2} as (sign, e1, e2).
    pub fn discrete_elements(self) -> Vec<(i8, u8, u8)> {
        let mut out = Vec::with_capacity(8);
        for sign in [1, -1] {
            for e1 in 0..2 {
                for e2 in 0..2 {
                    out.push((sign, e1, e2));
                }
            }
        }
        out
    }

    /// Exact lookup of a discrete matrix among the eight elements.
    pub fn lookup(self, d: &Matrix4) -> Option<(i8, u8, u8)> {
        self.discrete_elements().into_iter().find(|&(s, a, b)| self.discrete_matrix(s, a, b) == *d)
    }

    pub fn discrete_matrix(self, sign: i8, e1: u8, e2: u8) -> Matrix4 {
        let (g1, g2) = self.generators();
        let mut m = Matrix4::scalar(C64::new(sign as f64, 0.0));
        if e1 == 1 {
            m = m * g1.matrix();
        }
        if e2 == 1 {
            m = m * g2.matrix();
        }
        m
    }
}

impl fmt::Display for CoveringGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn sign_name(s: i8) -> &'static str {
    if s > 0 {
        "+I"
    } else {
        "-I"
    }
}

/// Checks the two squares and the (anti)commutation relation of `id` exactly.
pub fn group_relations_check(id: CoveringGroupId) -> Vec<CheckRecord> {
    let (g1, g2) = id.generators();
    let (a, b) = (g1.matrix(), g2.matrix());
    let rel = id.expected_relations();
    let scalar = |s: i8| Matrix4::scalar(C64::new(s as f64, 0.0));
    let mut out = Vec::new();
    for (g, m, s) in [(g1, a, rel.g1_sq), (g2, b, rel.g2_sq)] {
        let got = m * m;
        let r = got.max_abs_diff(&scalar(s));
        out.push(
            CheckRecord::flag(format!("{g}^2"), "lorentz.group-relations", r == 0.0, sign_name(s), describe_scalar(&got))
                .with_group(id.name())
                .with_relation(format!("{g}^2 = {}", sign_name(s))),
        );
    }
    let ab = a * b;
    let ba = b * a;
    let (want, rel_text) = if rel.commute {
        (ba, format!("{g1}{g2} = {g2}{g1}"))
    } else {
        (-ba, format!("{g1}{g2} = -{g2}{g1}"))
    };
    let ok = ab == want;
    out.push(
        CheckRecord::flag(
            "commutation",
            "lorentz.group-relations",
            ok,
            if rel.commute { "commute" } else { "anticommute" },
            if ab == ba {
                "commute"
            } else if ab == -ba {
                "anticommute"
            } else {
                "neither"
            },
        )
        .with_group(id.name())
        .with_relation(rel_text),
    );
    out
}

fn describe_scalar(m: &Matrix4) -> String {
    let d = m.0[0][0];
    if *m == Matrix4::scalar(d) {
        format!("{:+}I", d.re).replace("+1I", "+I").replace("-1I", "-I")
    } else {
        "non-scalar".to_string()
    }
}

/// max |F·S(k, k̄*) − S(k̄*, k)·F|.
pub fn commutation_check(gen: DiscreteGen, k: &SpinorParam) -> Result<f64> {
    let s = bispinor(k)?;
    let swapped = bispinor_pair(&k.bar_conj(), k);
    let f = gen.matrix();
    Ok((f * s).max_abs_diff(&(swapped * f)))
}

/// A = diag(−i·Id, Id).
pub fn witness_a() -> Matrix4 {
    let id = Matrix2::identity();
    Matrix4::block_diag(&id.scale(-I), &id)
}

/// Outcome of conjugating one covering group into another with A.
#[derive(Clone, Debug, Serialize)]
pub struct SimilarityWitness {
    pub src: CoveringGroupId,
    pub dst: CoveringGroupId,
    pub a: Matrix4,
    /// (relation, exact?) for each generator map.
    pub generator_maps: Vec<(String, bool)>,
}

impl SimilarityWitness {
    pub fn generators_exact(&self) -> bool {
        self.generator_maps.iter().all(|(_, ok)| *ok)
    }

    /// max |A S A⁻¹ − S| over the samples; A maps the continuous sector onto itself.
    pub fn continuous_residual(&self, samples: &[SpinorParam]) -> Result<f64> {
        let ainv = self.a.inverse().expect("A is invertible");
        let mut worst = 0.0f64;
        for k in samples {
            let s = bispinor(k)?;
            worst = worst.max((self.a * s * ainv).max_abs_diff(&s));
        }
        Ok(worst)
    }

    /// max |A S(k, k̄*) − S(k̄*, k) A|, the block-swapping form of the relation.
    pub fn swap_form_residual(&self, samples: &[SpinorParam]) -> Result<f64> {
        let mut worst = 0.0f64;
        for k in samples {
            let s = bispinor(k)?;
            let swapped = bispinor_pair(&k.bar_conj(), k);
            worst = worst.max((self.a * s).max_abs_diff(&(swapped * self.a)));
        }
        Ok(worst)
    }
}

/// Witness A = diag(−i·Id, Id) for G_M → G_N and G′ → ′G.
pub fn similarity_witness(src: CoveringGroupId, dst: CoveringGroupId) -> Result<SimilarityWitness> {
    use DiscreteGen::*;
    let maps: Vec<(DiscreteGen, i8, DiscreteGen)> = match (src, dst) {
        (CoveringGroupId::GM, CoveringGroupId::GN) => vec![(M, 1, N), (Mp, 1, Np)],
        (CoveringGroupId::Gp, CoveringGroupId::PG) => vec![(Mp, 1, Np), (N, -1, M)],
        _ => return Err(Error::UnsupportedPair { src: src.name().into(), dst: dst.name().into() }),
    };
    let a = witness_a();
    let ainv = a.inverse().expect("A is invertible");
    let generator_maps = maps
        .into_iter()
        .map(|(from, sign, to)| {
            let got = a * from.matrix() * ainv;
            let want = to.matrix().scale(C64::new(sign as f64, 0.0));
            let s = if sign > 0 { "+" } else { "-" };
            (format!("A {from} A^-1 = {s}{to}"), got == want)
        })
        .collect();
    Ok(SimilarityWitness { src, dst, a, generator_maps })
}

/// Closure of the discrete elements generated by `gens` (plus −I).
pub fn discrete_closure(gens: &[Matrix4]) -> Vec<Matrix4> {
    let mut set = vec![Matrix4::identity(), -Matrix4::identity()];
    let mut frontier = set.clone();
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x * *g;
            if !set.contains(&y) {
                set.push(y);
                frontier.push(y);
            }
        }
    }
    set
}

/// Whether the negated generator pair produces the same discrete set.
pub fn sign_closure_check(id: CoveringGroupId) -> CheckRecord {
    let (g1, g2) = id.generators();
    let plus = discrete_closure(&[g1.matrix(), g2.matrix()]);
    let minus = discrete_closure(&[-g1.matrix(), -g2.matrix()]);
    let same = plus.len() == minus.len() && plus.iter().all(|m| minus.contains(m));
    CheckRecord::flag("negated generators", "lorentz.sign-closure", same, plus.len(), minus.len()).with_group(id.name())
}

/// An element phase·S(k)·w₁·w₂⋯ of some covering group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupElement {
    pub continuous: SpinorParam,
    pub word: Vec<DiscreteGen>,
    pub phase: C64,
}

/// Normal form sign·S(k)·g1^e1·g2^e2 relative to a group.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NormalForm {
    pub group: CoveringGroupId,
    pub sign: i8,
    pub continuous: SpinorParam,
    pub e1: u8,
    pub e2: u8,
}

impl GroupElement {
    pub fn continuous(k: SpinorParam) -> Self {
        Self { continuous: k, word: Vec::new(), phase: ONE }
    }

    pub fn discrete(word: &[DiscreteGen]) -> Self {
        Self { continuous: SpinorParam::IDENTITY, word: word.to_vec(), phase: ONE }
    }

    pub fn new(phase: C64, continuous: SpinorParam, word: &[DiscreteGen]) -> Self {
        Self { continuous, word: word.to_vec(), phase }
    }

    pub fn realization(&self) -> Result<Matrix4> {
        let mut m = bispinor(&self.continuous)?.scale(self.phase);
        for g in &self.word {
            m = m * g.matrix();
        }
        Ok(m)
    }

    fn discrete_part(&self) -> Matrix4 {
        self.word.iter().fold(Matrix4::scalar(self.phase), |m, g| m * g.matrix())
    }

    /// Reduce into `group`'s normal form, or fail if the element is not a member.
    pub fn reduce(&self, group: CoveringGroupId) -> Result<NormalForm> {
        let continuous = self.continuous.ensure_normalized()?;
        let (sign, e1, e2) = group.lookup(&self.discrete_part()).ok_or_else(|| Error::Membership {
            group: group.name().into(),
            reason: format!("discrete part phase {} word {:?} is outside the group", self.phase, self.word),
        })?;
        Ok(NormalForm { group, sign, continuous, e1, e2 })
    }
}

impl NormalForm {
    pub fn word(&self) -> Vec<DiscreteGen> {
        let (g1, g2) = self.group.generators();
        let mut w = Vec::new();
        if self.e1 == 1 {
            w.push(g1);
        }
        if self.e2 == 1 {
            w.push(g2);
        }
        w
    }

    pub fn to_element(&self) -> GroupElement {
        GroupElement::new(C64::new(self.sign as f64, 0.0), self.continuous, &self.word())
    }

    pub fn realization(&self) -> Result<Matrix4> {
        Ok(bispinor(&self.continuous)? * self.group.discrete_matrix(self.sign, self.e1, self.e2))
    }

    /// Odd words are block off-diagonal and swap the bispinor blocks.
    pub fn is_swapping(&self) -> bool {
        (self.e1 + self.e2) % 2 == 1
    }

    /// Group product carried out on normal forms.
    pub fn mul(&self, rhs: &NormalForm) -> Result<NormalForm> {
        if self.group != rhs.group {
            return Err(Error::Membership { group: self.group.name().into(), reason: format!("operand from {}", rhs.group) });
        }
        let moved = if self.is_swapping() { rhs.continuous.bar_conj() } else { rhs.continuous };
        let continuous = self.continuous.compose(&moved)?;
        let d = self.group.discrete_matrix(self.sign, self.e1, self.e2) * self.group.discrete_matrix(rhs.sign, rhs.e1, rhs.e2);
        let (sign, e1, e2) = self.group.lookup(&d).expect("discrete sector is closed");
        Ok(NormalForm { group: self.group, sign, continuous, e1, e2 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn all_relations_hold() {
        for id in CoveringGroupId::ALL {
            for r in group_relations_check(id) {
                assert!(r.pass, "{id}: {r:?}");
            }
        }
    }

    #[test]
    fn wrong_relation_is_reported() {
        // G_M and G share M² = +I but differ in commutation
        let r = group_relations_check(CoveringGroupId::G);
        assert_eq!(r[2].got, "anticommute");
        let gm = group_relations_check(CoveringGroupId::GM);
        assert_eq!(gm[1].got, "-I");
    }

    #[test]
    fn swap_relation_for_all_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        assert_eq!(commutation_check(DiscreteGen::M, &SpinorParam::IDENTITY).unwrap(), 0.0);
        for _ in 0..50 {
            let k = SpinorParam::random(&mut rng);
            for g in DiscreteGen::ALL {
                assert!(commutation_check(g, &k).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn witness_maps_generators() {
        let w = similarity_witness(CoveringGroupId::GM, CoveringGroupId::GN).unwrap();
        assert!(w.generators_exact());
        let w = similarity_witness(CoveringGroupId::Gp, CoveringGroupId::PG).unwrap();
        assert!(w.generators_exact());
        assert!(similarity_witness(CoveringGroupId::G, CoveringGroupId::PGp).is_err());
    }

    #[test]
    fn witness_fixes_continuous_sector() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let ks: Vec<_> = (0..20).map(|_| SpinorParam::random(&mut rng)).collect();
        let w = similarity_witness(CoveringGroupId::GM, CoveringGroupId::GN).unwrap();
        assert!(w.continuous_residual(&ks).unwrap() < 1e-12);
        assert!(w.swap_form_residual(&ks).unwrap() > 1e-3);
    }

    #[test]
    fn negated_generators_same_set() {
        for id in CoveringGroupId::ALL {
            let r = sign_closure_check(id);
            assert!(r.pass, "{id}");
            assert_eq!(r.got, "8");
        }
    }

    #[test]
    fn reduction_and_membership() {
        use DiscreteGen::*;
        let gm = CoveringGroupId::GM;
        let nf = GroupElement::discrete(&[M, Mp, M]).reduce(gm).unwrap();
        // M M′ M = iM = M′
        assert_eq!((nf.sign, nf.e1, nf.e2), (1, 0, 1));
        let nf = GroupElement::new(I, SpinorParam::IDENTITY, &[]).reduce(gm).unwrap();
        assert_eq!((nf.sign, nf.e1, nf.e2), (1, 1, 1));
        assert!(GroupElement::new(I, SpinorParam::IDENTITY, &[]).reduce(CoveringGroupId::G).is_err());
        assert!(GroupElement::discrete(&[N]).reduce(gm).is_err());
    }

    #[test]
    fn normal_form_product_matches_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for id in CoveringGroupId::ALL {
            for _ in 0..10 {
                let (s1, a1, b1) = id.discrete_elements()[rand::Rng::gen_range(&mut rng, 0..8)];
                let (s2, a2, b2) = id.discrete_elements()[rand::Rng::gen_range(&mut rng, 0..8)];
                let x = NormalForm { group: id, sign: s1, continuous: SpinorParam::random(&mut rng), e1: a1, e2: b1 };
                let y = NormalForm { group: id, sign: s2, continuous: SpinorParam::random(&mut rng), e1: a2, e2: b2 };
                let xy = x.mul(&y).unwrap();
                let want = x.realization().unwrap() * y.realization().unwrap();
                assert!(xy.realization().unwrap().max_abs_diff(&want) < 1e-10 * want.max_abs().max(1.0));
            }
        }
    }
}
