use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spinor_cover::algebra::{
    bispinor, bispinor_pair, dirac_basis, lorentz_from_spinor, to_majorana, BasisTag, LorentzMatrix, Matrix4,
    SpinorParam,
};
use spinor_cover::lorentz::groups::{witness_a, GroupElement};
use spinor_cover::lorentz::{
    flip_f, rep_value, similarity_witness, vector_rep, CoveringGroupId, DiscreteGen, RepTag, VectorRepLabel,
};
use spinor_cover::lorentz::vector::{sample_full_lorentz, Component};

fn spinor_param() -> impl Strategy<Value = SpinorParam> {
    any::<u64>().prop_map(|seed| SpinorParam::random(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn word() -> impl Strategy<Value = Vec<DiscreteGen>> {
    prop::collection::vec(prop::sample::select(DiscreteGen::ALL.to_vec()), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lorentz_map_is_a_homomorphism(k1 in spinor_param(), k2 in spinor_param()) {
        let l12 = lorentz_from_spinor(&k1.compose(&k2).unwrap()).unwrap();
        let l1l2 = lorentz_from_spinor(&k1).unwrap() * lorentz_from_spinor(&k2).unwrap();
        prop_assert!(l12.max_abs_diff(&l1l2) < 1e-10);
    }

    #[test]
    fn image_is_proper_orthochronous(k in spinor_param()) {
        let l = lorentz_from_spinor(&k).unwrap();
        prop_assert!(l.metric_residual() < 1e-10);
        prop_assert!((l.det() - 1.0).abs() < 1e-9);
        prop_assert!(l.0[0][0] >= 1.0 - 1e-12);
    }

    #[test]
    fn k_and_minus_k_cover_the_same_transformation(k in spinor_param()) {
        let neg = SpinorParam::new(-k.k[0], -k.k[1], -k.k[2], -k.k[3]);
        let d = lorentz_from_spinor(&k).unwrap().max_abs_diff(&lorentz_from_spinor(&neg).unwrap());
        prop_assert!(d < 1e-12);
    }

    #[test]
    fn bar_conjugation_is_an_involution(k in spinor_param()) {
        prop_assert_eq!(k.bar_conj().bar_conj(), k);
    }

    #[test]
    fn majorana_bispinor_is_real(k in spinor_param()) {
        let weyl = dirac_basis(BasisTag::Weyl).expand_bispinor(&k);
        prop_assert!(weyl.max_abs_diff(&bispinor_pair(&k.bar_conj(), &k)) < 1e-12);
        prop_assert!(to_majorana(&weyl).max_imag() < 1e-12);
    }

    #[test]
    fn witness_commutes_with_the_continuous_part(k in spinor_param()) {
        let s = bispinor(&k).unwrap();
        let a = witness_a();
        prop_assert!((a * s).max_abs_diff(&(s * a)) < 1e-12);
    }

    #[test]
    fn m_swaps_the_bispinor_blocks(k in spinor_param()) {
        let swapped = bispinor_pair(&k.bar_conj(), &k);
        let f = flip_f();
        let s = bispinor(&k).unwrap();
        prop_assert!((f * s).max_abs_diff(&(s * f)) < 1e-12);
        let m = DiscreteGen::M.matrix();
        prop_assert!((m * s * m).max_abs_diff(&swapped) < 1e-12);
    }

    #[test]
    fn reduced_words_keep_their_realization(w in word(), g in prop::sample::select(CoveringGroupId::ALL.to_vec())) {
        let (a, b) = g.generators();
        let w: Vec<DiscreteGen> = w.into_iter().map(|x| if x.index() % 2 == 0 { a } else { b }).collect();
        let e = GroupElement::discrete(&w);
        let reduced = e.reduce(g).unwrap();
        prop_assert!(e.realization().unwrap().max_abs_diff(&reduced.realization().unwrap()) < 1e-12);
    }

    #[test]
    fn representations_are_multiplicative(
        k1 in spinor_param(),
        k2 in spinor_param(),
        w1 in word(),
        w2 in word(),
        tag in prop::sample::select(RepTag::ALL.to_vec()),
    ) {
        let g = CoveringGroupId::G;
        let (a, b) = g.generators();
        let pick = |w: Vec<DiscreteGen>| -> Vec<DiscreteGen> {
            w.into_iter().map(|x| if x.index() % 2 == 0 { a } else { b }).collect()
        };
        let x = GroupElement::new(1.0.into(), k1, &pick(w1)).reduce(g).unwrap();
        let y = GroupElement::new(1.0.into(), k2, &pick(w2)).reduce(g).unwrap();
        let xy = x.mul(&y).unwrap();
        let lhs = rep_value(g, tag, &xy.to_element()).unwrap();
        let rhs = rep_value(g, tag, &x.to_element()).unwrap() * rep_value(g, tag, &y.to_element()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9 * rhs.max_abs().max(1.0));
    }
}

#[test]
fn vector_reps_are_homomorphisms_on_the_full_group() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let (l1, _) = sample_full_lorentz(&mut rng);
        let (l2, _) = sample_full_lorentz(&mut rng);
        for label in VectorRepLabel::ALL {
            let lhs = vector_rep(label, &(l1 * l2)).unwrap();
            let rhs = vector_rep(label, &l1).unwrap() * vector_rep(label, &l2).unwrap();
            let size = rhs.0.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
            assert!(lhs.max_abs_diff(&rhs) < 1e-10 * size, "{label:?}");
        }
    }
}

#[test]
fn vector_rep_signs_on_parity_and_time_reversal() {
    let want = [(1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)];
    for (label, (p, t)) in VectorRepLabel::ALL.into_iter().zip(want) {
        assert_eq!(vector_rep(label, &Component::P.matrix()).unwrap(), LorentzMatrix::parity().scale(p));
        assert_eq!(vector_rep(label, &Component::T.matrix()).unwrap(), LorentzMatrix::time_reversal().scale(t));
    }
}

#[test]
fn generator_squares_and_images() {
    let id = Matrix4::identity();
    for (g, sq) in [(DiscreteGen::M, 1.0), (DiscreteGen::Mp, -1.0), (DiscreteGen::N, 1.0), (DiscreteGen::Np, -1.0)] {
        let m = g.matrix();
        assert_eq!(m * m, id.scale(sq.into()), "{g}");
        assert!(g.lorentz_image().metric_residual() < 1e-12);
    }
    assert_eq!(DiscreteGen::M.lorentz_image(), LorentzMatrix::parity());
}

#[test]
fn witness_only_exists_for_the_two_isomorphic_pairs() {
    assert!(similarity_witness(CoveringGroupId::GM, CoveringGroupId::GN).is_ok());
    assert!(similarity_witness(CoveringGroupId::Gp, CoveringGroupId::PG).is_ok());
    assert!(similarity_witness(CoveringGroupId::G, CoveringGroupId::PGp).is_err());
}

#[test]
fn weyl_and_majorana_bases_satisfy_clifford_relations() {
    for tag in [BasisTag::Weyl, BasisTag::Majorana] {
        assert!(dirac_basis(tag).clifford_residual() < 1e-12);
    }
    assert!(dirac_basis(BasisTag::Majorana).max_real_part() < 1e-12);
}
