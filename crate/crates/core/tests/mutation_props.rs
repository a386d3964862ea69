use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stokes_braid::exact::{int, UniPoly};
use stokes_braid::mutation::{
    degeneracy_flags, mutate, mutation_equivalent, serre_matches_coxeter, Direction, Equivalence,
    MutationMove, MutationWord, SearchOptions,
};
use stokes_braid::stokes::{coxeter_charpoly, random_stokes, stokes_braid_act, Sign, StokesMat};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_word(g: &mut ChaCha8Rng, r: usize, len: usize, shifts: bool) -> MutationWord {
    let all = MutationMove::all(r, shifts);
    MutationWord((0..len).map(|_| all[g.gen_range(0..all.len())]).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn left_right_cancel(seed in any::<u64>(), r in 2usize..6) {
        let s = random_stokes(&mut rng(seed), r, 6);
        for i in 1..r {
            let l = mutate(Direction::Left, i, &s).unwrap();
            prop_assert_eq!(&l, &stokes_braid_act(i, Sign::Plus, &s).unwrap());
            prop_assert_eq!(&mutate(Direction::Right, i, &l).unwrap(), &s);
            prop_assert_eq!(&mutate(Direction::Left, i, &mutate(Direction::Right, i, &s).unwrap()).unwrap(), &s);
            prop_assert!(l.as_mat().is_upper_unitriangular());
        }
    }

    #[test]
    fn left_braid_relation(seed in any::<u64>()) {
        let s = random_stokes(&mut rng(seed), 4, 5);
        for i in 1..3 {
            let a = MutationWord(vec![MutationMove::L(i), MutationMove::L(i + 1), MutationMove::L(i)]);
            let b = MutationWord(vec![MutationMove::L(i + 1), MutationMove::L(i), MutationMove::L(i + 1)]);
            prop_assert_eq!(a.apply(&s).unwrap(), b.apply(&s).unwrap());
        }
    }

    #[test]
    fn serre_and_charpoly_invariance(seed in any::<u64>(), r in 2usize..6, len in 0usize..8) {
        let mut g = rng(seed);
        let s = random_stokes(&mut g, r, 5);
        prop_assert!(serre_matches_coxeter(&s).unwrap());
        let t = random_word(&mut g, r, len, true).apply(&s).unwrap();
        prop_assert_eq!(coxeter_charpoly(&t).unwrap(), coxeter_charpoly(&s).unwrap());
    }

    #[test]
    fn search_recovers_random_words(seed in any::<u64>(), r in 3usize..5, len in 0usize..5, shifts in any::<bool>()) {
        let mut g = rng(seed);
        let s = random_stokes(&mut g, r, 3);
        let w = random_word(&mut g, r, len, shifts);
        let t = w.apply(&s).unwrap();
        let opts = SearchOptions { depth: len, budget: 2_000_000, shifts };
        match mutation_equivalent(&s, &t, &opts).unwrap() {
            Equivalence::Equivalent { word } => {
                prop_assert!(word.len() <= len);
                prop_assert_eq!(word.apply(&s).unwrap(), t);
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }
}

#[test]
fn identity_cases() {
    let s = StokesMat::from_upper(3, vec![int(1), int(2), int(3)]).unwrap();
    assert_eq!(
        mutation_equivalent(&s, &s, &SearchOptions::default()).unwrap(),
        Equivalence::Equivalent { word: MutationWord::default() }
    );
    assert!(stokes_braid::mutation::serre_operator(&StokesMat::<stokes_braid::exact::Int>::identity(3)).is_upper_unitriangular());
}

#[test]
fn invariant_mismatch_is_fast() {
    let id = StokesMat::identity(4);
    let ones = StokesMat::from_upper(4, vec![int(1); 6]).unwrap();
    match mutation_equivalent(&id, &ones, &SearchOptions::default()).unwrap() {
        Equivalence::InvariantMismatch { p1, p2 } => {
            assert_eq!(p1, UniPoly::from_i64s(&[1, 4, 6, 4, 1]));
            assert_eq!(p2, UniPoly::from_i64s(&[1, 1, 1, 1, 1]));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn closed_orbit_gives_verified_negative() {
    // Both have p = (λ+1)³, but the identity is a fixed point of every move.
    let s = StokesMat::identity(3);
    let t = StokesMat::from_upper(3, vec![int(3), int(3), int(3)]).unwrap();
    let opts = SearchOptions { depth: 12, budget: 100_000, shifts: false };
    match mutation_equivalent(&s, &t, &opts).unwrap() {
        Equivalence::NotWithinDepth { explored, .. } => assert!(explored < 10),
        other => panic!("{other:?}"),
    }
    let opts = SearchOptions { depth: 40, budget: 1_000, shifts: false };
    let far = StokesMat::from_upper(3, vec![int(-3), int(3), int(-3)]).unwrap();
    let res = mutation_equivalent(&t, &far, &opts).unwrap();
    assert!(
        matches!(res, Equivalence::BudgetExhausted { .. } | Equivalence::Equivalent { .. }),
        "{res:?}"
    );
}

#[test]
fn degeneracy_heuristics() {
    let f = degeneracy_flags(&StokesMat::identity(3)).unwrap();
    assert!(f.disc_zero);
    let s = StokesMat::from_upper(3, vec![int(2), int(0), int(5)]).unwrap();
    let f = degeneracy_flags(&s).unwrap();
    assert_eq!(f.pm2_coords, vec![(1, 2)]);
    assert!(f.labels().iter().all(|l| l.starts_with("heuristic")));
}
