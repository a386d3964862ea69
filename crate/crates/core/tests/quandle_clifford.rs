use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stokes_braid::clifford::{
    coxeter_class1, coxeter_class2, coxeter_class4, rational_sphere_point, sphere_reflect,
    verify_reflection_conjugation, DetModel, QuadForm, SphereQuandle, SphereVec, SplitModel,
};
use stokes_braid::exact::{int, random_sl2_word, rat, Int, Mat2, One, Rat};
use stokes_braid::quandle::{
    axiom_check, braid_act, orbit_enumerate, pseudo_coxeter, AdditiveZ, BraidWord, CoxeterModel,
    Core, Dihedral, Quandle, Sl2, Tuples, Units,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}

/// σ1σ2σ1 = σ2σ1σ2, σ1σ3 = σ3σ1, σ1σ1⁻¹ = 1 on a 4-tuple.
fn check_braid_relations<Q: Quandle>(q: &Q, t: &[Q::Elem]) {
    let act = |s: &str| braid_act(&w(s), t, q).unwrap();
    assert_eq!(act("s1s2s1"), act("s2s1s2"));
    assert_eq!(act("s2s3s2"), act("s3s2s3"));
    assert_eq!(act("s1s3"), act("s3s1"));
    assert_eq!(act("s1S1"), t.to_vec());
    assert_eq!(act("S2s2"), t.to_vec());
}

fn check_coxeter_invariance<Q: CoxeterModel>(q: &Q, t: &[Q::Elem], word: &BraidWord) {
    let c = pseudo_coxeter(q, t).unwrap();
    let moved = braid_act(word, t, q).unwrap();
    assert_eq!(pseudo_coxeter(q, &moved).unwrap(), c);
}

fn sl2_rat(r: &mut ChaCha8Rng) -> Mat2<Rat> {
    random_sl2_word::<Int>(r, 6).map(|x| Rat::from_integer(x.clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn braid_relations_all_models(seed in any::<u64>(), n in 3u64..40) {
        let mut r = rng(seed);
        use rand::Rng;
        let zs: Vec<Int> = (0..4).map(|_| int(r.gen_range(-50..50))).collect();
        check_braid_relations(&Core(AdditiveZ), &zs);
        let ds: Vec<u64> = (0..4).map(|_| r.gen_range(0..n)).collect();
        check_braid_relations(&Dihedral { n }, &ds);
        let ms: Vec<Mat2<Int>> = (0..4).map(|_| random_sl2_word(&mut r, 5)).collect();
        check_braid_relations(&Core(Sl2::<Int>::new()), &ms);
        let us: Vec<Rat> = (0..4).map(|_| rat(r.gen_range(1..9), r.gen_range(1..9))).collect();
        check_braid_relations(&Core(Units::<Rat>::new()), &us);
        for form in [QuadForm::Standard(1), QuadForm::Standard(3), QuadForm::Split2, QuadForm::Det4] {
            let vs: Vec<SphereVec> = (0..4).map(|_| rational_sphere_point(form, &mut r)).collect();
            check_braid_relations(&SphereQuandle { form }, &vs);
        }
    }

    #[test]
    fn coxeter_element_is_braid_invariant(seed in any::<u64>(), len in 0usize..12) {
        let mut r = rng(seed);
        use rand::Rng;
        let word = BraidWord::random(&mut r, 4, len);
        let zs: Vec<Int> = (0..4).map(|_| int(r.gen_range(-50..50))).collect();
        check_coxeter_invariance(&Core(AdditiveZ), &zs, &word);
        let ms: Vec<Mat2<Int>> = (0..4).map(|_| random_sl2_word(&mut r, 5)).collect();
        check_coxeter_invariance(&Core(Sl2::<Int>::new()), &ms, &word);
        let split: Vec<SphereVec> = (0..4).map(|_| rational_sphere_point(QuadForm::Split2, &mut r)).collect();
        check_coxeter_invariance(&SplitModel, &split, &word);
        let det: Vec<SphereVec> = (0..4).map(|_| rational_sphere_point(QuadForm::Det4, &mut r)).collect();
        check_coxeter_invariance(&DetModel, &det, &word);

        let moved = braid_act(&word, &det, &DetModel).unwrap();
        prop_assert_eq!(coxeter_class4(&moved).unwrap(), coxeter_class4(&det).unwrap());
        let moved = braid_act(&word, &split, &SplitModel).unwrap();
        prop_assert_eq!(coxeter_class2(&moved).unwrap(), coxeter_class2(&split).unwrap());
    }

    #[test]
    fn quandle_axioms_on_random_samples(seed in any::<u64>()) {
        let mut r = rng(seed);
        for form in [QuadForm::Standard(2), QuadForm::Standard(4), QuadForm::Split2, QuadForm::Det4] {
            let samples: Vec<_> = (0..4)
                .map(|_| (
                    rational_sphere_point(form, &mut r),
                    rational_sphere_point(form, &mut r),
                    rational_sphere_point(form, &mut r),
                ))
                .collect();
            let ok = axiom_check(&SphereQuandle { form }, &samples).all_pass();
            prop_assert!(ok);
        }
        let samples: Vec<_> = (0..4)
            .map(|_| (random_sl2_word::<Int>(&mut r, 4), random_sl2_word(&mut r, 4), random_sl2_word(&mut r, 4)))
            .collect();
        prop_assert!(axiom_check(&Core(Sl2::<Int>::new()), &samples).all_pass());
    }

    #[test]
    fn reflection_equals_conjugation(seed in any::<u64>()) {
        let mut r = rng(seed);
        for form in [QuadForm::Split2, QuadForm::Det4] {
            let u = rational_sphere_point(form, &mut r);
            let v = rational_sphere_point(form, &mut r);
            let rep = verify_reflection_conjugation(&u, &v).unwrap();
            prop_assert!(rep.equal, "{:?}", rep);
        }
    }

    #[test]
    fn det_sphere_agrees_with_sl2_core(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b) = (sl2_rat(&mut r), sl2_rat(&mut r));
        let core = Core(Sl2::<Rat>::new()).op(&a, &b);
        let (u, v) = (SphereVec::from_sl2(&a).unwrap(), SphereVec::from_sl2(&b).unwrap());
        prop_assert_eq!(sphere_reflect(&u, &v).unwrap().to_mat2().unwrap(), core);
    }

    #[test]
    fn signed_permutations_are_equivariant(seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let mut r = rng(seed);
        let m = 4;
        let form = QuadForm::Standard(m);
        let mut perm: Vec<usize> = (0..m).collect();
        perm.shuffle(&mut r);
        let signs: Vec<i8> = (0..m).map(|_| if r.gen_bool(0.5) { 1 } else { -1 }).collect();
        let u = rational_sphere_point(form, &mut r);
        let v = rational_sphere_point(form, &mut r);
        let g = |x: &SphereVec| x.signed_permute(&perm, &signs).unwrap();
        prop_assert_eq!(g(&sphere_reflect(&u, &v).unwrap()), sphere_reflect(&g(&u), &g(&v)).unwrap());
    }

    #[test]
    fn orbit_closure_is_idempotent(a in 0u64..7, b in 0u64..7, c in 0u64..7) {
        let act = Tuples(Dihedral { n: 7 });
        let once = orbit_enumerate(&act, &[vec![a, b, c]], |_| true, |p| p.clone(), 100_000);
        let pts: Vec<Vec<u64>> = once.keys().cloned().collect();
        let twice = orbit_enumerate(&act, &pts, |_| true, |p| p.clone(), 100_000);
        let again: Vec<Vec<u64>> = twice.keys().cloned().collect();
        prop_assert_eq!(&pts, &again);
        prop_assert_eq!(twice.representatives().len(), 1);
        prop_assert_eq!(twice.representatives()[0].0, &pts[0]);
    }
}

/// u◁v = u + v on Z: translations are bijections but u◁u ≠ u.
struct Sum;

impl Quandle for Sum {
    type Elem = Int;
    fn op(&self, u: &Int, v: &Int) -> Int {
        u + v
    }
    fn op_inv(&self, u: &Int, z: &Int) -> Int {
        z - u
    }
}

#[test]
fn sum_operation_fails_idempotence() {
    let samples: Vec<_> = (-3..=3)
        .flat_map(|a| (-3..=3).map(move |b| (int(a), int(b), int(a - b))))
        .collect();
    let rep = axiom_check(&Sum, &samples);
    assert!(!rep.all_pass());
    let [idem, inv, _] = rep.failures();
    assert!(idem > 0);
    assert_eq!(inv, 0);
}

#[test]
fn mu2_classes() {
    let c = coxeter_class1(&[1, -1, -1, -1]).unwrap();
    assert!(!c.odd);
    assert_eq!(c.sign, Some(-1));
    let c = coxeter_class1(&[1, -1, 1]).unwrap();
    assert!(c.odd && c.sign.is_none());
    assert!(coxeter_class1(&[2]).is_err());
}

#[test]
fn standard_form_conjugation_is_unsupported() {
    let mut r = rng(3);
    let u = rational_sphere_point(QuadForm::Standard(3), &mut r);
    assert!(verify_reflection_conjugation(&u, &u).is_err());
}

#[test]
fn sphere_points_lie_on_sphere() {
    let mut r = rng(11);
    for form in [QuadForm::Standard(1), QuadForm::Standard(5), QuadForm::Split2, QuadForm::Det4] {
        for _ in 0..20 {
            let p = rational_sphere_point(form, &mut r);
            assert_eq!(form.q(p.coords()), Rat::one());
        }
    }
}
