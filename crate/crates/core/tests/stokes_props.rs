use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stokes_braid::clifford::{rational_sphere_point, QuadForm, SphereQuandle};
use stokes_braid::exact::{int, random_sl2_word, Int, Mat, Mat2, Rat, Ring};
use stokes_braid::quandle::{braid_act, BraidWord, Generator};
use stokes_braid::stokes::{
    coxeter_charpoly, coxeter_identity_check, gram_from_sphere, invariants, k_invariant,
    operator_charpoly, random_stokes, rank_filtration_level, OperatorVariant, StokesMat,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A·s·Aᵀ computed by literal matrix products.
fn block_oracle(s: &StokesMat<Int>, g: Generator) -> StokesMat<Int> {
    let r = s.r();
    let i = g.index - 1;
    let x = s.s(g.index, g.index + 1).clone();
    let mut a = Mat::<Int>::identity(r);
    let block = if g.inverse {
        [[int(0), int(1)], [int(-1), x]]
    } else {
        [[x, int(-1)], [int(1), int(0)]]
    };
    for (di, row) in block.iter().enumerate() {
        for (dj, v) in row.iter().enumerate() {
            a.set(i + di, i + dj, v.clone());
        }
    }
    let m = a.mul(s.as_mat()).unwrap().mul(&a.transpose()).unwrap();
    StokesMat::new(m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_matches_block_oracle(seed in any::<u64>(), r in 2usize..7) {
        let mut g = rng(seed);
        let s = random_stokes(&mut g, r, 4);
        for gen in Generator::all(r) {
            prop_assert_eq!(s.act(gen).unwrap(), block_oracle(&s, gen));
        }
    }

    #[test]
    fn braid_relations_hold(seed in any::<u64>(), r in 3usize..6) {
        let mut g = rng(seed);
        let s = random_stokes(&mut g, r, 3);
        let act = |w: &str| s.act_word(&w.parse().unwrap()).unwrap();
        prop_assert_eq!(act("s1s2s1"), act("s2s1s2"));
        prop_assert_eq!(act("s1S1"), s.clone());
        prop_assert_eq!(act("S2s2"), s.clone());
        if r >= 4 {
            prop_assert_eq!(act("s1s3"), act("s3s1"));
            prop_assert_eq!(act("s2s3s2"), act("s3s2s3"));
        }
    }

    #[test]
    fn coxeter_polynomial_is_invariant(seed in any::<u64>(), r in 2usize..6, len in 0usize..10) {
        let mut g = rng(seed);
        let s = random_stokes(&mut g, r, 3);
        let w = BraidWord::random(&mut g, r, len);
        let t = s.act_word(&w).unwrap();
        let p = coxeter_charpoly(&s).unwrap();
        prop_assert!(p.is_palindromic());
        prop_assert_eq!(coxeter_charpoly(&t).unwrap(), p);
        prop_assert_eq!(t.act_word(&w.inverse()).unwrap(), s);
    }

    #[test]
    fn closed_forms_agree(seed in any::<u64>(), r in 3usize..5) {
        let mut g = rng(seed);
        let s = random_stokes(&mut g, r, 6);
        // invariants() itself errors when the closed form and p disagree
        let rec = invariants(&s).unwrap();
        prop_assert_eq!(rec.p_alt.reflect().coeffs().len(), rec.p.coeffs().len());
        let sign = if r % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(rec.p_alt.reflect().map(|c| c * &sign), rec.p);
    }

    #[test]
    fn rank3_moves_match_triple_formulas(x in -9i64..10, y in -9i64..10, z in -9i64..10) {
        // (s12, s13, s23) = (x, z, y)
        let s = StokesMat::from_upper(3, vec![int(x), int(z), int(y)]).unwrap();
        let triple = |t: &StokesMat<Int>| (t.s(1, 2).clone(), t.s(2, 3).clone(), t.s(1, 3).clone());
        let (x, y, z) = (int(x), int(y), int(z));
        let cases = [
            ("s1", (x.clone(), z.clone(), &x * &z - &y)),
            ("S1", (x.clone(), &x * &y - &z, y.clone())),
            ("s2", (&x * &y - &z, y.clone(), x.clone())),
            ("S2", (z.clone(), y.clone(), &y * &z - &x)),
            ("s1s2", (y.clone(), z.clone(), x.clone())),
        ];
        let k = k_invariant(&x, &y, &z);
        for (w, expect) in cases {
            let t = s.act_word(&w.parse().unwrap()).unwrap();
            prop_assert_eq!(triple(&t), expect, "{}", w);
            prop_assert_eq!(k_invariant(t.s(1, 2), t.s(2, 3), t.s(1, 3)), k.clone());
        }
    }

    #[test]
    fn coxeter_identity_on_random_rationals(seed in any::<u64>(), r in 2usize..6) {
        let mut g = rng(seed);
        let s = random_stokes(&mut g, r, 5).to_rat();
        match coxeter_identity_check(&s) {
            Ok(rep) => prop_assert!(rep.holds),
            Err(stokes_braid::Error::Degenerate(_)) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn gram_matrix_is_equivariant(seed in any::<u64>(), m in 1usize..5, r in 2usize..6, len in 0usize..8) {
        let mut g = rng(seed);
        let form = QuadForm::Standard(m);
        let vs: Vec<_> = (0..r).map(|_| rational_sphere_point(form, &mut g)).collect();
        let w = BraidWord::random(&mut g, r, len);
        let s = gram_from_sphere(&vs).unwrap();
        let moved = braid_act(&w, &vs, &SphereQuandle { form }).unwrap();
        prop_assert_eq!(gram_from_sphere(&moved).unwrap(), s.act_word(&w).unwrap());
        prop_assert!(rank_filtration_level(&s) <= m);
    }

    #[test]
    fn operator_closed_forms(seed in any::<u64>()) {
        let mut g = rng(seed);
        let a: Mat2<Int> = random_sl2_word(&mut g, 7);
        let b: Mat2<Int> = random_sl2_word(&mut g, 7);
        for v in [OperatorVariant::Adjugate, OperatorVariant::Product] {
            let rep = operator_charpoly(&a, &b, v).unwrap();
            prop_assert!(rep.agree, "{:?} {:?}", v, rep);
        }
    }
}

#[test]
fn rank_filtration_examples() {
    let id = StokesMat::<Int>::identity(4);
    assert_eq!(rank_filtration_level(&id), 4);
    let twos = StokesMat::from_upper(3, vec![int(2); 3]).unwrap();
    assert_eq!(rank_filtration_level(&twos), 1);
    let mut g = rng(5);
    let vs: Vec<_> = (0..5)
        .map(|_| rational_sphere_point(QuadForm::Standard(2), &mut g))
        .collect();
    assert!(rank_filtration_level(&gram_from_sphere(&vs).unwrap()) <= 2);
}

#[test]
fn sphere_gram_has_identity_on_diagonal() {
    let mut g = rng(9);
    let vs: Vec<_> = (0..3)
        .map(|_| rational_sphere_point(QuadForm::Det4, &mut g))
        .collect();
    let s = gram_from_sphere(&vs).unwrap();
    assert_eq!(s.sym().get(0, 0), &Rat::from_i64(2));
}

#[test]
fn invariant_records_for_fixed_points() {
    let s = StokesMat::from_upper(3, vec![int(3), int(3), int(3)]).unwrap();
    assert_eq!(invariants(&s).unwrap().k, Some(int(-2)));
    let s = StokesMat::from_upper(3, vec![int(0); 3]).unwrap();
    assert_eq!(invariants(&s).unwrap().k, Some(int(-2)));
    let s = StokesMat::from_upper(3, vec![int(2), int(5), int(5)]).unwrap();
    assert_eq!(invariants(&s).unwrap().k, Some(int(2)));
}
