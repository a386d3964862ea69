//! Acceptance criteria 1–12. Each criterion prints one PASS/FAIL line; the
//! test fails if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;
use stokes_braid::suite::{self, Scale};

struct Outcome {
    id: usize,
    name: &'static str,
    pass: bool,
    elapsed: Duration,
    limit: Option<Duration>,
    detail: String,
}

fn timed(
    id: usize,
    name: &'static str,
    limit: Option<Duration>,
    f: impl FnOnce() -> (bool, Value),
) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = f();
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed < l);
    Outcome {
        id,
        name,
        pass: pass && in_time,
        elapsed,
        limit,
        detail: detail.to_string(),
    }
}

const COMMANDS: &[&[&str]] = &[
    &["invariant", "--r", "3", "--matrix", "[[1,3,3],[0,1,3],[0,0,1]]"],
    &["act", "--word", "s1s2S1", "--matrix", "[[1,1,1,2],[0,1,1,3],[0,0,1,1],[0,0,0,1]]"],
    &["reduce", "--triple", "2,5,5"],
    &["enumerate-r3", "--k", "-2", "--height", "30"],
    &["enumerate-r3", "--k", "2", "--height", "12", "--slice", "-2"],
    &["enumerate-r4", "--e1", "1", "--e2", "-1", "--height", "3"],
    &["bridge", "--rep", "[[[1,1],[0,1]],[[1,0],[2,1]],[[2,1],[1,1]]]", "--word", "s1s3S2"],
    &["bridge", "--g", "[[[1,1],[0,1]],[[1,0],[2,1]],[[2,1],[1,1]]]", "--word", "s2S1"],
    &["boundary", "--rep", "[[[1,1],[0,1]],[[1,0],[2,1]],[[2,1],[1,1]]]"],
    &["poisson-check", "--r", "4", "--points", "20"],
    &["mutate", "--word", "L1R2L3", "--matrix", "[[1,2,3,1],[0,1,2,2],[0,0,1,3],[0,0,0,1]]"],
    &[
        "equivalent",
        "--matrix", "[[1,1,1],[0,1,1],[0,0,1]]",
        "--target", "[[1,1,0],[0,1,1],[0,0,1]]",
        "--depth", "6",
    ],
    &["verify-suite", "--quick", "--checks", "braid-relations,markoff-structure,mutation"],
    &["finite-model", "--p", "3", "--r", "2"],
];

fn determinism() -> (bool, Value) {
    let exe = env!("CARGO_BIN_EXE_stokes-braid");
    let mut bad = Vec::new();
    for args in COMMANDS {
        let outs: Vec<(Vec<u8>, Option<i32>)> = ["1", "2", "4"]
            .iter()
            .map(|w| {
                let out = Command::new(exe)
                    .args(*args)
                    .args(["--workers", w])
                    .output()
                    .expect("binary runs");
                (out.stdout, out.status.code())
            })
            .collect();
        let empty = outs[0].0.is_empty();
        if empty || outs.iter().any(|o| o != &outs[0]) {
            bad.push(args[0]);
        }
    }
    (
        bad.is_empty(),
        serde_json::json!({"commands": COMMANDS.len(), "runs_each": 3, "mismatched": bad}),
    )
}

#[test]
fn acceptance_criteria() {
    let scale = Scale::full();
    let secs = |s| Some(Duration::from_secs(s));
    let outcomes = vec![
        timed(1, "braid relations", secs(10), || suite::braid_relations(&scale)),
        timed(2, "invariant conservation", secs(10), || suite::invariant_conservation(&scale)),
        timed(3, "coxeter identity", None, || suite::coxeter_identity(&scale)),
        timed(4, "bridge equivariance", None, || suite::bridge_equivariance(&scale)),
        timed(5, "sphere/core quandle agreement", None, || suite::sphere_core(&scale)),
        timed(6, "markoff structure", secs(60), || suite::markoff_structure(&scale)),
        timed(7, "rank-4 desk-scale finiteness", secs(300), || suite::r4_finiteness(&scale)),
        timed(8, "dtdvdb shapes", None, || suite::dtdvdb(&scale)),
        timed(9, "poisson suite", secs(60), || suite::poisson(&scale)),
        timed(10, "mutation suite", None, || suite::mutation(&scale)),
        timed(11, "finite-model bijection", None, suite::finite_model),
        timed(12, "cli determinism", None, determinism),
    ];
    for o in &outcomes {
        let limit = o.limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs()));
        println!(
            "criterion {:>2} {:<32} {} in {:.2}s{}: {}",
            o.id,
            o.name,
            if o.pass { "PASS" } else { "FAIL" },
            o.elapsed.as_secs_f64(),
            limit,
            o.detail
        );
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
