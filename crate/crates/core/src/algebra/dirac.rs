use serde::Serialize;

use super::matrix::{pauli, Matrix2, Matrix4, C64, I, ONE};
use super::minkowski::METRIC;
use super::spinor::SpinorParam;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisTag {
    Weyl,
    Majorana,
}

/// Index pairs of the stored σᵃᵇ, in storage order.
pub const SIGMA_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

/// Dirac matrices in a fixed basis.
#[derive(Clone, Debug)]
pub struct DiracBasis {
    pub tag: BasisTag,
    /// γ⁰, γ¹, γ², γ³, γ⁵.
    pub gamma: [Matrix4; 5],
    /// σᵃᵇ = ¼[γᵃ, γᵇ] for the pairs in [`SIGMA_PAIRS`].
    pub sigma: [Matrix4; 6],
}

impl DiracBasis {
    pub fn gamma5(&self) -> Matrix4 {
        self.gamma[4]
    }

    pub fn sigma_ab(&self, a: usize, b: usize) -> Matrix4 {
        self.gamma[a].commutator(&self.gamma[b]) * 0.25
    }

    /// Max entrywise deviation from {γᵃ, γᵇ} = 2η̄ᵃᵇ·Id.
    pub fn clifford_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                let want = if a == b { Matrix4::identity() * (2.0 * METRIC[a]) } else { Matrix4::zero() };
                worst = worst.max(self.gamma[a].anticommutator(&self.gamma[b]).max_abs_diff(&want));
            }
        }
        worst
    }

    /// Basis-independent expansion of a bispinor transform in {Id, γ⁵, σᵃᵇ}.
    /// In the Weyl basis this evaluates to diag(B(k̄*), B(k)).
    pub fn expand_bispinor(&self, k: &SpinorParam) -> Matrix4 {
        let [k0, k1, k2, k3] = k.k;
        let re = |z: C64| z + z.conj();
        let im = |z: C64| z - z.conj();
        let mut s = Matrix4::identity().scale(re(k0) * 0.5) + self.gamma5().scale(im(k0) * 0.5);
        // σ⁰ʲ pairs with Re kⱼ, σ²³/σ³¹/σ¹² with Im kⱼ
        for (j, kj) in [k1, k2, k3].into_iter().enumerate() {
            s = s + self.sigma[j].scale(re(kj)) + self.sigma[3 + j].scale(im(kj) * I);
        }
        s
    }

    /// Max |Im| over γ⁰…γ³ and γ⁵ when the basis is expected to be purely imaginary.
    pub fn max_real_part(&self) -> f64 {
        self.gamma.iter().map(|g| g.max_real()).fold(0.0, f64::max)
    }
}

fn with_sigma(tag: BasisTag, gamma: [Matrix4; 5]) -> DiracBasis {
    let sigma = SIGMA_PAIRS.map(|(a, b)| gamma[a].commutator(&gamma[b]) * 0.25);
    DiracBasis { tag, gamma, sigma }
}

fn weyl_gammas() -> [Matrix4; 5] {
    let id = Matrix2::identity();
    let [s1, s2, s3] = pauli();
    let g0 = Matrix4::off_diag(&id, &id);
    let g = |s: Matrix2| Matrix4::off_diag(&s, &-s);
    let (g1, g2, g3) = (g(s1), g(s2), g(s3));
    let g5 = (g0 * g1 * g2 * g3).scale(I);
    [g0, g1, g2, g3, g5]
}

/// Ũ = [[Id, σ²], [σ², −Id]]; U = Ũ/√2 is Hermitian, unitary and its own inverse.
pub fn majorana_change_unnormalized() -> Matrix4 {
    let id = Matrix2::identity();
    let s2 = pauli()[1];
    Matrix4::from_blocks(&id, &s2, &s2, &-id)
}

pub fn majorana_change() -> Matrix4 {
    majorana_change_unnormalized() * std::f64::consts::FRAC_1_SQRT_2
}

/// U X U† from the Weyl basis into the Majorana basis.
pub fn to_majorana(x: &Matrix4) -> Matrix4 {
    let u = majorana_change_unnormalized();
    (u * *x * u) * 0.5
}

pub fn dirac_basis(tag: BasisTag) -> DiracBasis {
    let weyl = weyl_gammas();
    match tag {
        BasisTag::Weyl => with_sigma(tag, weyl),
        BasisTag::Majorana => with_sigma(tag, weyl.map(|g| to_majorana(&g))),
    }
}

/// σ⁰ = Id followed by the Pauli matrices.
pub fn pauli4() -> [Matrix2; 4] {
    let [s1, s2, s3] = pauli();
    [Matrix2::scalar(ONE), s1, s2, s3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::spinor::{bispinor, bispinor_pair};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn weyl_clifford_exact() {
        let b = dirac_basis(BasisTag::Weyl);
        assert_eq!(b.clifford_residual(), 0.0);
        assert_eq!(b.gamma[0].anticommutator(&b.gamma[1]), Matrix4::zero());
        let id = Matrix2::identity();
        assert_eq!(b.gamma5(), Matrix4::block_diag(&-id, &id));
    }

    #[test]
    fn majorana_is_imaginary_and_clifford() {
        let b = dirac_basis(BasisTag::Majorana);
        assert!(b.clifford_residual() < 1e-15);
        for g in &b.gamma {
            assert!(g.conj().max_abs_diff(&-*g) < 1e-15);
        }
        for s in &b.sigma {
            assert!(s.max_imag() < 1e-15);
        }
    }

    #[test]
    fn change_of_basis_is_unitary_involution() {
        let u = majorana_change();
        assert!((u * u.adjoint()).max_abs_diff(&Matrix4::identity()) < 1e-15);
        assert!(u.max_abs_diff(&u.adjoint()) < 1e-15);
    }

    #[test]
    fn weyl_expansion_gives_swapped_blocks() {
        let b = dirac_basis(BasisTag::Weyl);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let k = SpinorParam::random(&mut rng);
            let want = bispinor_pair(&k.bar_conj(), &k);
            assert!(b.expand_bispinor(&k).max_abs_diff(&want) < 1e-12);
        }
    }

    #[test]
    fn majorana_bispinor_is_real() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let k = SpinorParam::random(&mut rng);
            assert!(to_majorana(&bispinor(&k).unwrap()).max_imag() < 1e-12);
        }
    }
}
