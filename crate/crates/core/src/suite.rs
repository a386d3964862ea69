//! The verification battery behind `verify-suite`: randomized and exhaustive
//! checks of the braid actions, invariants, bridge maps, orbit structure,
//! Poisson bracket and mutations. All sampling is seeded.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bridge::{
    boundary_monodromy, finite_model_compare_dyn, rep_to_stokes, trace_identity_check,
    BoundaryTraces, CharAction, RepTuple,
};
use crate::clifford::{rational_sphere_point, sphere_reflect, verify_reflection_conjugation, QuadForm, SphereVec};
use crate::diophantine::r3::{MARKOFF_TAG, ORIGIN_TAG, REDUCIBLE_TAG};
use crate::diophantine::{enumerate_r3, enumerate_r4, verify_dtdvdb, R4Options};
use crate::exact::{int, random_sl2_word, Int, Mat2, Rat};
use crate::mutation::{mutate, mutation_equivalent, Direction, Equivalence, SearchOptions};
use crate::poisson::{check_casimir, check_jacobi, CheckMode};
use crate::quandle::{BraidAction, BraidWord, Generator};
use crate::stokes::{coxeter_charpoly, coxeter_identity_check, gram_from_sphere, k_invariant, random_stokes, rank4_invariants, StokesMat};
use crate::wire;
use crate::Error;

/// Sample sizes for the battery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scale {
    pub braid_samples: usize,
    pub conservation_trials: usize,
    pub conservation_word_len: usize,
    pub identity_samples: usize,
    pub bridge_samples: usize,
    pub sphere_samples: usize,
    pub markoff_heights: (u64, u64),
    pub r4_heights: Vec<u64>,
    pub dtdvdb_n: u64,
    pub poisson_points: usize,
    pub mutation_samples: usize,
}

impl Scale {
    /// The sizes used by the acceptance run.
    pub fn full() -> Self {
        Scale {
            braid_samples: 1000,
            conservation_trials: 1000,
            conservation_word_len: 50,
            identity_samples: 200,
            bridge_samples: 500,
            sphere_samples: 500,
            markoff_heights: (50, 100),
            r4_heights: vec![3, 4, 5],
            dtdvdb_n: 20,
            poisson_points: 200,
            mutation_samples: 500,
        }
    }

    pub fn quick() -> Self {
        Scale {
            braid_samples: 100,
            conservation_trials: 100,
            conservation_word_len: 20,
            identity_samples: 20,
            bridge_samples: 50,
            sphere_samples: 50,
            markoff_heights: (20, 40),
            r4_heights: vec![3, 4],
            dtdvdb_n: 20,
            poisson_points: 20,
            mutation_samples: 50,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Value,
    pub millis: u128,
}

pub const CHECK_NAMES: [&str; 11] = [
    "braid-relations",
    "invariant-conservation",
    "coxeter-identity",
    "bridge-equivariance",
    "sphere-core",
    "markoff-structure",
    "r4-finiteness",
    "dtdvdb",
    "poisson",
    "mutation",
    "finite-model",
];

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

fn per_sample<F>(n: usize, tag: u64, f: F) -> usize
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync,
{
    (0..n)
        .into_par_iter()
        .filter(|&i| !f(&mut rng(tag * 1_000_003 + i as u64)))
        .count()
}

pub fn braid_relations(scale: &Scale) -> (bool, Value) {
    let mut detail = serde_json::Map::new();
    let mut ok = true;
    for r in 3..=6usize {
        let failures = per_sample(scale.braid_samples, r as u64, |g| {
            let s = random_stokes(g, r, 5);
            let act = |w: &BraidWord| s.act_word(w).expect("in range");
            (1..r - 1).all(|i| {
                let (a, b) = (Generator::pos(i), Generator::pos(i + 1));
                act(&BraidWord(vec![a, b, a])) == act(&BraidWord(vec![b, a, b]))
            }) && (1..r).all(|i| {
                (i + 2..r).all(|j| {
                    let (a, b) = (Generator::pos(i), Generator::pos(j));
                    act(&BraidWord(vec![a, b])) == act(&BraidWord(vec![b, a]))
                }) && act(&BraidWord(vec![Generator::pos(i), Generator::neg(i)])) == s
            })
        });
        ok &= failures == 0;
        detail.insert(format!("r{r}_failures"), json!(failures));
    }
    detail.insert("samples_per_r".into(), json!(scale.braid_samples));
    (ok, Value::Object(detail))
}

pub fn invariant_conservation(scale: &Scale) -> (bool, Value) {
    let len = scale.conservation_word_len;
    let failures = per_sample(scale.conservation_trials, 20, |g| {
        let r = g.gen_range(3..=6);
        let s = random_stokes(g, r, 3);
        let w = BraidWord::random(g, r, len);
        let t = s.act_word(&w).expect("in range");
        coxeter_charpoly(&s).ok() == coxeter_charpoly(&t).ok() && t.act_word(&w.inverse()).ok() == Some(s)
    });
    (
        failures == 0,
        json!({"trials": scale.conservation_trials, "word_length": len, "failures": failures}),
    )
}

pub fn coxeter_identity(scale: &Scale) -> (bool, Value) {
    let witness = StokesMat::<Rat>::from_upper(2, vec![Rat::from_integer(int(1))]).expect("r = 2");
    let witness_ok = coxeter_identity_check(&witness).map(|r| r.holds).unwrap_or(false);
    let mut detail = serde_json::Map::new();
    let mut ok = witness_ok;
    for r in 3..=5usize {
        let results: Vec<(bool, usize)> = (0..scale.identity_samples)
            .into_par_iter()
            .map(|i| {
                let mut g = rng(30_000 + (r * 100_000 + i) as u64);
                let mut skipped = 0;
                loop {
                    let vs: Vec<SphereVec> = (0..r)
                        .map(|_| rational_sphere_point(QuadForm::Standard(r), &mut g))
                        .collect();
                    let s = gram_from_sphere(&vs).expect("same form");
                    match coxeter_identity_check(&s) {
                        Ok(rep) => return (rep.holds, skipped),
                        Err(Error::Degenerate(_)) => skipped += 1,
                        Err(_) => return (false, skipped),
                    }
                }
            })
            .collect();
        let failures = results.iter().filter(|(h, _)| !h).count();
        let skipped: usize = results.iter().map(|(_, s)| s).sum();
        ok &= failures == 0;
        detail.insert(format!("r{r}"), json!({"failures": failures, "singular_resampled": skipped}));
    }
    detail.insert("samples_per_r".into(), json!(scale.identity_samples));
    detail.insert("r2_witness".into(), json!(witness_ok));
    (ok, Value::Object(detail))
}

pub fn bridge_equivariance(scale: &Scale) -> (bool, Value) {
    let mut detail = serde_json::Map::new();
    let mut ok = true;
    for r in [3usize, 4] {
        let failures = per_sample(scale.bridge_samples, 40 + r as u64, |g| {
            let b = RepTuple::<Int>::random(g, r, 6);
            let w = BraidWord::random(g, r, 6);
            let s = rep_to_stokes(&b);
            let moved = CharAction::new().act_word(&w, &b).expect("in range");
            let equivariant = rep_to_stokes(&moved) == s.act_word(&w).expect("in range");
            let closed_form = match boundary_monodromy(&b) {
                BoundaryTraces::Odd { k } => k == k_invariant(s.s(1, 2), s.s(2, 3), s.s(1, 3)),
                BoundaryTraces::Even { k1, k2 } => (&k1 + &k2, &k1 * &k2) == rank4_invariants(&s),
            };
            equivariant && closed_form
        });
        ok &= failures == 0;
        detail.insert(format!("r{r}_failures"), json!(failures));
    }
    let mut g = rng(49);
    let pairs: Vec<(Mat2<Int>, Mat2<Int>)> = (0..1000)
        .map(|_| (random_sl2_word(&mut g, 8), random_sl2_word(&mut g, 8)))
        .collect();
    let trace = trace_identity_check(&pairs);
    ok &= trace.failures == 0;
    detail.insert("samples_per_r".into(), json!(scale.bridge_samples));
    detail.insert("trace_identity_failures".into(), json!(trace.failures));
    (ok, Value::Object(detail))
}

pub fn sphere_core(scale: &Scale) -> (bool, Value) {
    let split = per_sample(scale.sphere_samples, 50, |g| {
        let u = rational_sphere_point(QuadForm::Split2, g);
        let v = rational_sphere_point(QuadForm::Split2, g);
        let (a, b) = (u.coords(), v.coords());
        let core = vec![&a[0] * &a[0] / &b[0], &a[1] * &a[1] / &b[1]];
        sphere_reflect(&u, &v).map(|w| w.coords() == core.as_slice()).unwrap_or(false)
    });
    let det = per_sample(scale.sphere_samples, 51, |g| {
        let u = rational_sphere_point(QuadForm::Det4, g);
        let v = rational_sphere_point(QuadForm::Det4, g);
        let (mu, mv) = (u.to_mat2().expect("det form"), v.to_mat2().expect("det form"));
        let core = &(&mu * &mv.adj()) * &mu;
        let reflect_ok = sphere_reflect(&u, &v)
            .ok()
            .and_then(|w| w.to_mat2())
            .map(|w| w == core)
            .unwrap_or(false);
        let conj_ok = verify_reflection_conjugation(&u, &v).map(|r| r.equal).unwrap_or(false);
        reflect_ok && conj_ok
    });
    (
        split == 0 && det == 0,
        json!({"samples": scale.sphere_samples, "split2_failures": split, "det4_failures": det}),
    )
}

fn class_counts(h: u64) -> Vec<(i64, usize)> {
    [-1i64, 0, 1, 3, 5]
        .iter()
        .map(|&k| (k, enumerate_r3(&int(k), h, 2_000_000).count()))
        .collect()
}

pub fn markoff_structure(scale: &Scale) -> (bool, Value) {
    let (h1, h2) = scale.markoff_heights;
    let minus2 = enumerate_r3(&int(-2), h1, 2_000_000);
    let minus2_ok = minus2.representatives.iter().all(|e| {
        matches!(e.tag.as_deref(), Some(t) if t == ORIGIN_TAG || t == MARKOFF_TAG)
    });
    let plus2 = enumerate_r3(&int(2), h1, 2_000_000);
    let plus2_ok = plus2
        .representatives
        .iter()
        .all(|e| e.tag.as_deref() == Some(REDUCIBLE_TAG));
    let (c1, c2) = (class_counts(h1), class_counts(h2));
    let stable = c1 == c2;
    let reps: Vec<Value> = minus2.representatives.iter().map(|e| wire::stokes(&e.matrix)).collect();
    let counts: Vec<Value> = c1
        .iter()
        .zip(&c2)
        .map(|((k, a), (_, b))| json!({"k": k, "low": a, "high": b}))
        .collect();
    (
        minus2_ok && plus2_ok && stable && !minus2.truncated && !plus2.truncated,
        json!({
            "heights": [h1, h2],
            "k_minus2_representatives": reps,
            "k_plus2_classes": plus2.count(),
            "k_plus2_all_tagged": plus2_ok,
            "counts": counts,
        }),
    )
}

pub fn r4_finiteness(scale: &Scale) -> (bool, Value) {
    let opts = R4Options::default();
    let run = |e1: i64, e2: i64| -> (Vec<usize>, bool, bool) {
        let reports: Vec<_> = scale
            .r4_heights
            .iter()
            .map(|&h| enumerate_r4(&int(e1), &int(e2), h, &opts))
            .collect();
        (
            reports.iter().map(|r| r.count()).collect(),
            reports.iter().all(|r| r.degenerate),
            reports.iter().any(|r| r.truncated),
        )
    };
    let (generic, generic_degenerate, t1) = run(1, -1);
    let (special, special_degenerate, t2) = run(0, -4);
    let stable = generic.windows(2).all(|w| w[0] == w[1]);
    let growing = special.windows(2).all(|w| w[0] < w[1]);
    (
        stable && growing && special_degenerate && !generic_degenerate && !t1 && !t2,
        json!({
            "heights": scale.r4_heights,
            "generic_1_-1": {"counts": generic, "stable": stable, "degenerate": generic_degenerate},
            "dtdvdb_0_-4": {"counts": special, "strictly_growing": growing, "degenerate": special_degenerate},
            "merge_factor": opts.merge_factor,
        }),
    )
}

pub fn dtdvdb(scale: &Scale) -> (bool, Value) {
    let rep = verify_dtdvdb(scale.dtdvdb_n);
    (
        rep.all_pass(),
        json!({"n_max": rep.n_max, "fixed_ok": rep.fixed_ok, "family_failures": rep.family_failures}),
    )
}

pub fn poisson(scale: &Scale) -> (bool, Value) {
    let sampled = CheckMode::Sampled { points: scale.poisson_points, seed: 9 };
    let j3 = check_jacobi(3, CheckMode::Symbolic).expect("r = 3");
    let c3 = check_casimir(3, CheckMode::Symbolic).expect("r = 3");
    let j4 = check_jacobi(4, sampled).expect("r = 4");
    let c4 = check_casimir(4, sampled).expect("r = 4");
    (
        j3.passed() && c3.passed() && j4.passed() && c4.passed(),
        json!({
            "jacobi_r3_symbolic": {"triples": j3.triples, "failures": j3.failures.len()},
            "casimir_r3_symbolic": {"failures": c3.failures.len()},
            "jacobi_r4_sampled": {"points": scale.poisson_points, "triples": j4.triples, "failures": j4.failures.len()},
            "casimir_r4_sampled": {"points": scale.poisson_points, "failures": c4.failures.len()},
        }),
    )
}

pub fn mutation(scale: &Scale) -> (bool, Value) {
    let failures = per_sample(scale.mutation_samples, 100, |g| {
        let s = random_stokes(g, 4, 5);
        let m = |d, i, t: &StokesMat<Int>| mutate(d, i, t).expect("in range");
        let inverse_ok = (1..4).all(|i| {
            m(Direction::Right, i, &m(Direction::Left, i, &s)) == s
                && m(Direction::Left, i, &m(Direction::Right, i, &s)) == s
        });
        let braid_ok = (1..3).all(|i| {
            let a = m(Direction::Left, i, &m(Direction::Left, i + 1, &m(Direction::Left, i, &s)));
            let b = m(Direction::Left, i + 1, &m(Direction::Left, i, &m(Direction::Left, i + 1, &s)));
            a == b
        }) && m(Direction::Left, 1, &m(Direction::Left, 3, &s)) == m(Direction::Left, 3, &m(Direction::Left, 1, &s));
        let w = BraidWord::random(g, 4, 10);
        let t = w.0.iter().fold(s.clone(), |acc, gen| {
            let d = if gen.inverse { Direction::Right } else { Direction::Left };
            m(d, gen.index, &acc)
        });
        inverse_ok && braid_ok && coxeter_charpoly(&t).ok() == coxeter_charpoly(&s).ok()
    });
    let id = StokesMat::identity(4);
    let ones = StokesMat::from_upper(4, vec![int(1); 6]).expect("r = 4");
    let fast_negative = matches!(
        mutation_equivalent(&id, &ones, &SearchOptions::default()),
        Ok(Equivalence::InvariantMismatch { .. })
    );
    let s = random_stokes(&mut rng(101), 4, 3);
    let one_step = mutate(Direction::Left, 1, &s).expect("in range");
    let found = matches!(
        mutation_equivalent(&s, &one_step, &SearchOptions::default()),
        Ok(Equivalence::Equivalent { ref word }) if word.to_string() == "L1"
    );
    (
        failures == 0 && fast_negative && found,
        json!({
            "samples": scale.mutation_samples,
            "failures": failures,
            "fast_negative": fast_negative,
            "one_step_search": found,
        }),
    )
}

pub fn finite_model() -> (bool, Value) {
    let mut ok = true;
    let mut runs = Vec::new();
    for (p, r) in [(2u32, 2usize), (2, 3), (3, 2)] {
        match finite_model_compare_dyn(p, r, 100_000_000) {
            Ok(rep) => {
                ok &= rep.all_pass();
                runs.push(json!({
                    "p": p, "r": r, "group_order": rep.group_order,
                    "b_orbits": rep.b_orbits, "c_orbits": rep.c_orbits,
                    "phi_well_defined": rep.phi_well_defined, "psi_well_defined": rep.psi_well_defined,
                    "mutually_inverse": rep.mutually_inverse, "braid_equivariant": rep.braid_equivariant,
                }));
            }
            Err(e) => {
                ok = false;
                runs.push(json!({"p": p, "r": r, "error": e.to_string()}));
            }
        }
    }
    (ok, Value::Array(runs))
}

/// Runs one named check.
pub fn run_check(name: &str, scale: &Scale) -> Option<Check> {
    let start = Instant::now();
    let (pass, detail) = match name {
        "braid-relations" => braid_relations(scale),
        "invariant-conservation" => invariant_conservation(scale),
        "coxeter-identity" => coxeter_identity(scale),
        "bridge-equivariance" => bridge_equivariance(scale),
        "sphere-core" => sphere_core(scale),
        "markoff-structure" => markoff_structure(scale),
        "r4-finiteness" => r4_finiteness(scale),
        "dtdvdb" => dtdvdb(scale),
        "poisson" => poisson(scale),
        "mutation" => mutation(scale),
        "finite-model" => finite_model(),
        _ => return None,
    };
    let name = CHECK_NAMES.iter().find(|n| **n == name).copied()?;
    Some(Check {
        name,
        pass,
        detail,
        millis: start.elapsed().as_millis(),
    })
}
