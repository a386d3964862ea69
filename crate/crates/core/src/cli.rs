//! Command-line front end. Every subcommand prints one JSON document with
//! sorted keys on standard output.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 malformed input,
//! 3 a search budget ran out (the partial result is still printed).

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::bridge::{
    boundary_monodromy, c_braid_act, finite_model_compare_dyn, phi, psi, rep_to_stokes,
    surface_membership, BoundaryTraces, GTuple, RepTuple, SurfaceParams,
};
use crate::diophantine::{
    enumerate_r3, enumerate_r4, markoff_reduce, slice_enumerate_r3, OrbitReport, R4Options, Triple,
};
use crate::exact::Int;
use crate::mutation::{
    degeneracy_flags, mutation_equivalent, serre_matches_coxeter, serre_operator, Equivalence,
    MutationWord, SearchOptions,
};
use crate::poisson::{check_casimir, check_jacobi, CheckMode};
use crate::quandle::BraidWord;
use crate::stokes::{coxeter_discriminant, invariants, StokesMat};
use crate::suite::{run_check, Scale, CHECK_NAMES};
use crate::wire;
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "stokes-braid", version, about = "Braid actions on Stokes matrices and character varieties")]
pub struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Cap on search steps for orbit and equivalence searches.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Read arguments from a JSON object (keys are flag names; "-" for stdin).
    /// Flags given on the command line take precedence.
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coxeter polynomial and closed-form invariants of a Stokes matrix.
    Invariant(MatrixArgs),
    /// Apply a braid word (s1 = σ₁, S1 = σ₁⁻¹) to a Stokes matrix.
    Act(ActArgs),
    /// Markoff descent of an integer triple (x, y, z).
    Reduce(ReduceArgs),
    /// Orbit representatives on x² + y² + z² − xyz − 2 = k.
    EnumerateR3(R3Args),
    /// Orbit representatives of rank-4 matrices with invariants (e1, e2).
    EnumerateR4(R4Args),
    /// Transport tuples between the G-side and the character side.
    Bridge(BridgeArgs),
    /// Boundary traces of a RepTuple and the surface they cut out.
    Boundary(BoundaryArgs),
    /// Jacobi and Casimir checks for the quadratic Poisson bracket.
    PoissonCheck(PoissonArgs),
    /// Apply a mutation word (L1, R2, D3 = sign change) to a Gram matrix.
    Mutate(MutateArgs),
    /// Search for a mutation word between two Gram matrices.
    Equivalent(EquivalentArgs),
    /// Run the verification battery.
    VerifySuite(SuiteArgs),
    /// Exhaustive orbit comparison over SL₂(F_p).
    FiniteModel(FiniteArgs),
}

#[derive(Args, Debug)]
struct MatrixArgs {
    /// Expected size; checked against the matrix.
    #[arg(long)]
    r: Option<usize>,
    /// Full rows as JSON, e.g. [[1,2],[0,1]].
    #[arg(long)]
    matrix: Option<String>,
}

#[derive(Args, Debug)]
struct ActArgs {
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long)]
    word: Option<String>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    /// "x,y,z"
    #[arg(long, allow_hyphen_values = true)]
    triple: Option<String>,
}

#[derive(Args, Debug)]
struct R3Args {
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long)]
    height: Option<u64>,
    /// Restrict to the slice x = ±2 and classify under σ₁.
    #[arg(long, allow_hyphen_values = true)]
    slice: Option<i64>,
}

#[derive(Args, Debug)]
struct R4Args {
    #[arg(long, allow_hyphen_values = true)]
    e1: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    e2: Option<i64>,
    #[arg(long)]
    height: Option<u64>,
    /// Also allow sign changes of basis vectors.
    #[arg(long)]
    signed: bool,
    #[arg(long)]
    merge_factor: Option<u32>,
}

#[derive(Args, Debug)]
struct BridgeArgs {
    /// A G-tuple (a₁, …, a_r) of SL₂ matrices; Φ is applied.
    #[arg(long)]
    g: Option<String>,
    /// A RepTuple (b₁, …, b_{r−1}); Ψ is applied.
    #[arg(long)]
    rep: Option<String>,
    /// Check equivariance along this braid word.
    #[arg(long)]
    word: Option<String>,
}

#[derive(Args, Debug)]
struct BoundaryArgs {
    #[arg(long)]
    rep: Option<String>,
}

#[derive(Args, Debug)]
struct PoissonArgs {
    #[arg(long)]
    r: Option<usize>,
    /// Expand symbolically instead of sampling (slow for r ≥ 5).
    #[arg(long)]
    symbolic: bool,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct MutateArgs {
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long)]
    word: Option<String>,
}

#[derive(Args, Debug)]
struct EquivalentArgs {
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long)]
    target: Option<String>,
    #[arg(long)]
    depth: Option<usize>,
    /// Include sign changes of objects.
    #[arg(long)]
    shifts: bool,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Smaller sample sizes.
    #[arg(long)]
    quick: bool,
    /// Comma-separated subset of checks.
    #[arg(long)]
    checks: Option<String>,
}

#[derive(Args, Debug)]
struct FiniteArgs {
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    r: Option<usize>,
}

/// Outcome of a subcommand: the JSON document and its exit code.
struct Output {
    value: Value,
    code: i32,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output { value, code: 0 }
    }

    fn check(value: Value, pass: bool) -> Self {
        Output { value, code: if pass { 0 } else { 1 } }
    }
}

/// Command-line values with fallback to the `--in` payload.
struct Payload(Map<String, Value>);

impl Payload {
    fn load(path: Option<&str>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Payload(Map::new()));
        };
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Invalid(format!("stdin: {e}")))?;
            s
        } else {
            fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))?
        };
        match wire::parse_json(&text)? {
            Value::Object(m) => Ok(Payload(m)),
            _ => Err(Error::Invalid("--in must hold a JSON object".into())),
        }
    }

    /// The flag's text, else the payload entry (strings raw, other JSON as text).
    fn text(&self, flag: Option<String>, key: &str) -> Option<String> {
        flag.or_else(|| {
            self.0.get(key).map(|v| match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            })
        })
    }

    fn require(&self, flag: Option<String>, key: &str) -> Result<String> {
        self.text(flag, key)
            .ok_or_else(|| Error::Invalid(format!("missing --{key}")))
    }

    fn value<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.text(None, key) {
            None => Ok(None),
            Some(t) => t
                .parse()
                .map(Some)
                .map_err(|_| Error::Invalid(format!("bad value {t:?} for --{key}"))),
        }
    }

    fn flag(&self, flag: bool, key: &str) -> bool {
        flag || self.0.get(key).and_then(Value::as_bool).unwrap_or(false)
    }

    fn matrix(&self, flag: Option<String>, key: &str) -> Result<StokesMat<Int>> {
        wire::parse_stokes(&wire::parse_json(&self.require(flag, key)?)?)
    }
}

fn obj(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn invariant(a: MatrixArgs, pl: &Payload) -> Result<Output> {
    let s = pl.matrix(a.matrix, "matrix")?;
    if let Some(r) = pl.value(a.r, "r")? {
        if r != s.r() {
            return Err(Error::Dimension(format!("--r {r} but the matrix is {0}×{0}", s.r())));
        }
    }
    let rec = invariants(&s)?;
    let mut out = vec![
        ("r", json!(s.r())),
        ("matrix", wire::stokes(&s)),
        ("p", json!(rec.p.factored_display())),
        ("p_coeffs", wire::poly_coeffs(&rec.p)),
        ("p_alt_coeffs", wire::poly_coeffs(&rec.p_alt)),
        ("disc", wire::int(&coxeter_discriminant(&s)?)),
        ("degeneracy", json!(degeneracy_flags(&s)?.labels())),
    ];
    if let Some(k) = &rec.k {
        out.push(("k", wire::int(k)));
    }
    if let (Some(e1), Some(e2)) = (&rec.e1, &rec.e2) {
        out.push(("e1", wire::int(e1)));
        out.push(("e2", wire::int(e2)));
    }
    Ok(Output::ok(obj(out)))
}

fn act(a: ActArgs, pl: &Payload) -> Result<Output> {
    let s = pl.matrix(a.matrix, "matrix")?;
    let w: BraidWord = pl.require(a.word, "word")?.parse()?;
    let t = s.act_word(&w)?;
    Ok(Output::ok(obj(vec![
        ("input", wire::stokes(&s)),
        ("word", json!(w.to_string())),
        ("inverse", json!(w.inverse().to_string())),
        ("matrix", wire::stokes(&t)),
        ("upper", Value::Array(t.upper().iter().map(wire::int).collect())),
    ])))
}

fn triple_value(t: &Triple) -> Value {
    Value::Array([&t.x, &t.y, &t.z].into_iter().map(wire::int).collect())
}

fn reduce(a: ReduceArgs, pl: &Payload) -> Result<Output> {
    let xs = wire::parse_int_list(&pl.require(a.triple, "triple")?)?;
    let [x, y, z]: [Int; 3] = xs
        .try_into()
        .map_err(|_| Error::Invalid("--triple needs three integers".into()))?;
    let red = markoff_reduce(&Triple::new(x, y, z));
    let value = obj(vec![
        ("input", triple_value(&red.input)),
        ("rep", triple_value(&red.rep)),
        ("word", json!(red.word.to_string())),
        ("k", wire::int(&red.k)),
        ("tag", json!(red.tag)),
        ("truncated", json!(red.truncated)),
    ]);
    Ok(Output { value, code: if red.truncated { 3 } else { 0 } })
}

fn orbit_value(rep: &OrbitReport) -> Value {
    let invariants: Map<String, Value> = rep
        .invariants
        .iter()
        .map(|(k, v)| (k.clone(), wire::int(v)))
        .collect();
    let classes: Vec<Value> = rep
        .representatives
        .iter()
        .map(|e| {
            json!({
                "matrix": wire::stokes(&e.matrix),
                "word": e.word,
                "source": wire::stokes(&e.source),
                "points": e.points,
                "tag": e.tag,
            })
        })
        .collect();
    json!({
        "r": rep.r,
        "invariants": invariants,
        "height": rep.height,
        "points_scanned": rep.points_scanned,
        "count": rep.count(),
        "representatives": rep.representatives.iter().map(|e| wire::stokes(&e.matrix)).collect::<Vec<_>>(),
        "words": rep.representatives.iter().map(|e| e.word.clone()).collect::<Vec<_>>(),
        "classes": classes,
        "truncated": rep.truncated,
        "disc": wire::int(&rep.disc),
        "degenerate": rep.degenerate,
        "signed": rep.signed,
        "notes": rep.notes,
    })
}

fn truncation_code(truncated: bool) -> i32 {
    if truncated {
        3
    } else {
        0
    }
}

fn enumerate_r3_cmd(a: R3Args, pl: &Payload, budget: Option<usize>) -> Result<Output> {
    let k = Int::from(pl.value(a.k, "k")?.ok_or_else(|| Error::Invalid("missing --k".into()))?);
    let h = pl.value(a.height, "height")?.unwrap_or(50);
    if let Some(sign) = pl.value(a.slice, "slice")? {
        let rep = slice_enumerate_r3(&k, sign, h)?;
        let classes: Vec<Value> = rep
            .classes
            .iter()
            .map(|c| json!({"rep": triple_value(&c.rep), "word": c.word.to_string(), "points": c.points}))
            .collect();
        return Ok(Output::ok(json!({
            "k": wire::int(&rep.k),
            "x": wire::int(&rep.x),
            "height": h,
            "lines": rep.lines.iter().map(wire::int).collect::<Vec<_>>(),
            "points_scanned": rep.points_scanned,
            "count": rep.classes.len(),
            "classes": classes,
        })));
    }
    let rep = enumerate_r3(&k, h, budget.unwrap_or(2_000_000));
    Ok(Output {
        code: truncation_code(rep.truncated),
        value: orbit_value(&rep),
    })
}

fn enumerate_r4_cmd(a: R4Args, pl: &Payload, budget: Option<usize>) -> Result<Output> {
    let need = |v: Option<i64>, key: &str| -> Result<Int> {
        Ok(Int::from(pl.value(v, key)?.ok_or_else(|| Error::Invalid(format!("missing --{key}")))?))
    };
    let (e1, e2) = (need(a.e1, "e1")?, need(a.e2, "e2")?);
    let mut opts = R4Options {
        signed: pl.flag(a.signed, "signed"),
        ..R4Options::default()
    };
    if let Some(m) = pl.value(a.merge_factor, "merge_factor")? {
        opts.merge_factor = m;
    }
    if let Some(b) = budget {
        opts.budget = b;
    }
    let h = pl.value(a.height, "height")?.unwrap_or(3);
    let rep = enumerate_r4(&e1, &e2, h, &opts);
    let mut value = orbit_value(&rep);
    value["merge_factor"] = json!(opts.merge_factor);
    Ok(Output {
        code: truncation_code(rep.truncated),
        value,
    })
}

fn bridge(a: BridgeArgs, pl: &Payload) -> Result<Output> {
    let w: Option<BraidWord> = pl.text(a.word, "word").map(|t| t.parse()).transpose()?;
    if let Some(text) = pl.text(a.g, "g") {
        let g = GTuple::new(wire::parse_mat2_list(&wire::parse_json(&text)?)?)?;
        let b = phi(&g)?;
        let mut out = vec![
            ("g", wire::mat2_list(g.elems())),
            ("rep", wire::mat2_list(b.elems())),
            ("stokes", wire::stokes(&rep_to_stokes(&b))),
            ("round_trip", json!(phi(&psi(&b))? == b)),
        ];
        let mut pass = true;
        if let Some(w) = w {
            let lhs = phi(&g.act_word(&w)?)?;
            let rhs = w.0.iter().try_fold(b.clone(), |acc, &gen| c_braid_act(gen, &acc))?;
            pass = lhs == rhs;
            out.push(("word", json!(w.to_string())));
            out.push(("moved_rep", wire::mat2_list(lhs.elems())));
            out.push(("equivariant", json!(pass)));
        }
        return Ok(Output::check(obj(out), pass));
    }
    let text = pl.require(a.rep, "rep")?;
    let b = RepTuple::new(wire::parse_mat2_list(&wire::parse_json(&text)?)?)?;
    let g = psi(&b);
    let s = rep_to_stokes(&b);
    let mut out = vec![
        ("rep", wire::mat2_list(b.elems())),
        ("g", wire::mat2_list(g.elems())),
        ("stokes", wire::stokes(&s)),
        ("round_trip", json!(phi(&g)? == b)),
    ];
    let mut pass = true;
    if let Some(w) = w {
        let moved = w.0.iter().try_fold(b.clone(), |acc, &gen| c_braid_act(gen, &acc))?;
        let lhs = rep_to_stokes(&moved);
        pass = lhs == s.act_word(&w)?;
        out.push(("word", json!(w.to_string())));
        out.push(("moved_rep", wire::mat2_list(moved.elems())));
        out.push(("moved_stokes", wire::stokes(&lhs)));
        out.push(("equivariant", json!(pass)));
    }
    Ok(Output::check(obj(out), pass))
}

fn boundary(a: BoundaryArgs, pl: &Payload) -> Result<Output> {
    let text = pl.require(a.rep, "rep")?;
    let b = RepTuple::new(wire::parse_mat2_list(&wire::parse_json(&text)?)?)?;
    let traces = boundary_monodromy(&b);
    let s = rep_to_stokes(&b);
    let mut out = vec![
        ("r", json!(b.r())),
        ("parity", json!(traces.parity())),
        ("stokes", wire::stokes(&s)),
    ];
    match &traces {
        BoundaryTraces::Odd { k } => out.push(("k", wire::int(k))),
        BoundaryTraces::Even { k1, k2 } => {
            out.push(("k1", wire::int(k1)));
            out.push(("k2", wire::int(k2)));
        }
    }
    let mut pass = true;
    if matches!(b.r(), 3 | 4) {
        let params = SurfaceParams::from(&traces);
        pass = surface_membership(&s, &params)?;
        out.push((
            "surface",
            match &params {
                SurfaceParams::Rank3 { k } => json!({"k": wire::int(k)}),
                SurfaceParams::Rank4 { e1, e2 } => json!({"e1": wire::int(e1), "e2": wire::int(e2)}),
            },
        ));
        out.push(("on_surface", json!(pass)));
    }
    Ok(Output::check(obj(out), pass))
}

fn poisson_check(a: PoissonArgs, pl: &Payload) -> Result<Output> {
    let r = pl.value(a.r, "r")?.unwrap_or(3);
    if !(2..=6).contains(&r) {
        return Err(Error::Invalid(format!("poisson-check supports 2 <= r <= 6, not {r}")));
    }
    let symbolic = pl.flag(a.symbolic, "symbolic") || r == 3 && pl.value(a.points, "points")?.is_none();
    let mode = if symbolic {
        CheckMode::Symbolic
    } else {
        CheckMode::Sampled {
            points: pl.value(a.points, "points")?.unwrap_or(200),
            seed: pl.value(a.seed, "seed")?.unwrap_or(0),
        }
    };
    let jac = check_jacobi(r, mode)?;
    let cas = check_casimir(r, mode)?;
    let mode_value = match mode {
        CheckMode::Symbolic => json!("symbolic"),
        CheckMode::Sampled { points, seed } => json!({"sampled": points, "seed": seed}),
    };
    let names: Vec<String> = crate::poisson::coords(r)
        .into_iter()
        .map(|(i, j)| crate::poisson::coord_name(i, j))
        .collect();
    let value = json!({
        "r": r,
        "mode": mode_value,
        "jacobi": {"triples": jac.triples, "failures": jac.failures, "pass": jac.passed()},
        "casimir": {
            "coefficients": cas.coefficients.iter().map(|c| wire::multipoly(c, &names)).collect::<Vec<_>>(),
            "failures": cas.failures,
            "pass": cas.passed(),
        },
    });
    Ok(Output::check(value, jac.passed() && cas.passed()))
}

fn mutate_cmd(a: MutateArgs, pl: &Payload) -> Result<Output> {
    let s = pl.matrix(a.matrix, "matrix")?;
    let w = MutationWord::parse(&pl.require(a.word, "word")?)?;
    let t = w.apply(&s)?;
    let serre = serre_operator(&t);
    let consistent = serre_matches_coxeter(&t)?;
    let value = obj(vec![
        ("input", wire::stokes(&s)),
        ("word", json!(w.to_string())),
        ("inverse", json!(w.inverse().to_string())),
        ("matrix", wire::stokes(&t)),
        ("serre", wire::rows(&serre)),
        ("p_coeffs", wire::poly_coeffs(&crate::stokes::coxeter_charpoly(&t)?)),
        ("serre_matches_p", json!(consistent)),
        ("degeneracy", json!(degeneracy_flags(&t)?.labels())),
    ]);
    Ok(Output::check(value, consistent))
}

fn equivalent(a: EquivalentArgs, pl: &Payload, budget: Option<usize>) -> Result<Output> {
    let s1 = pl.matrix(a.matrix, "matrix")?;
    let s2 = pl.matrix(a.target, "target")?;
    let mut opts = SearchOptions {
        shifts: pl.flag(a.shifts, "shifts"),
        ..SearchOptions::default()
    };
    if let Some(d) = pl.value(a.depth, "depth")? {
        opts.depth = d;
    }
    if let Some(b) = budget {
        opts.budget = b;
    }
    let (value, code) = match mutation_equivalent(&s1, &s2, &opts)? {
        Equivalence::Equivalent { word } => (json!({"result": "equivalent", "word": word.to_string()}), 0),
        Equivalence::InvariantMismatch { p1, p2 } => (
            json!({"result": "invariant-mismatch", "p1_coeffs": wire::poly_coeffs(&p1), "p2_coeffs": wire::poly_coeffs(&p2)}),
            0,
        ),
        Equivalence::NotWithinDepth { depth, explored } => (
            json!({"result": "not-within-depth", "depth": depth, "explored": explored}),
            0,
        ),
        Equivalence::BudgetExhausted { reached, explored } => (
            json!({"result": "budget-exhausted", "reached_depth": reached, "explored": explored, "truncated": true}),
            3,
        ),
    };
    Ok(Output { value, code })
}

fn verify_suite(a: SuiteArgs, pl: &Payload) -> Result<Output> {
    let scale = if pl.flag(a.quick, "quick") { Scale::quick() } else { Scale::full() };
    let names: Vec<String> = match pl.text(a.checks, "checks") {
        Some(t) => t.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
        None => CHECK_NAMES.iter().map(|s| s.to_string()).collect(),
    };
    let mut checks = Map::new();
    let mut all = true;
    for name in &names {
        let c = run_check(name, &scale)
            .ok_or_else(|| Error::Invalid(format!("unknown check {name:?}; known: {}", CHECK_NAMES.join(", "))))?;
        all &= c.pass;
        checks.insert(c.name.to_string(), json!({"pass": c.pass, "detail": c.detail}));
    }
    let value = json!({"scale": if pl.flag(a.quick, "quick") { "quick" } else { "full" }, "checks": checks, "pass": all});
    Ok(Output::check(value, all))
}

fn finite_model(a: FiniteArgs, pl: &Payload, budget: Option<usize>) -> Result<Output> {
    let p = pl.value(a.p, "p")?.unwrap_or(2);
    let r = pl.value(a.r, "r")?.unwrap_or(3);
    let rep = finite_model_compare_dyn(p, r, budget.map_or(100_000_000, |b| b as u64))?;
    let value = json!({
        "p": rep.p,
        "r": rep.r,
        "group_order": rep.group_order,
        "b_orbits": rep.b_orbits,
        "c_orbits": rep.c_orbits,
        "phi_well_defined": rep.phi_well_defined,
        "psi_well_defined": rep.psi_well_defined,
        "mutually_inverse": rep.mutually_inverse,
        "braid_equivariant": rep.braid_equivariant,
        "pass": rep.all_pass(),
    });
    Ok(Output::check(value, rep.all_pass()))
}

fn dispatch(cli: Cli) -> Result<Output> {
    let pl = Payload::load(cli.input.as_deref())?;
    let budget = cli.budget;
    match cli.command {
        Command::Invariant(a) => invariant(a, &pl),
        Command::Act(a) => act(a, &pl),
        Command::Reduce(a) => reduce(a, &pl),
        Command::EnumerateR3(a) => enumerate_r3_cmd(a, &pl, budget),
        Command::EnumerateR4(a) => enumerate_r4_cmd(a, &pl, budget),
        Command::Bridge(a) => bridge(a, &pl),
        Command::Boundary(a) => boundary(a, &pl),
        Command::PoissonCheck(a) => poisson_check(a, &pl),
        Command::Mutate(a) => mutate_cmd(a, &pl),
        Command::Equivalent(a) => equivalent(a, &pl, budget),
        Command::VerifySuite(a) => verify_suite(a, &pl),
        Command::FiniteModel(a) => finite_model(a, &pl, budget),
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

/// Parses `args`, runs the subcommand and returns the text to print and the
/// exit code.
pub fn run_to_string<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => return (e.to_string(), e.exit_code()),
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => return (json!({"error": e.to_string()}).to_string(), 2),
    };
    let (value, code) = match pool.install(|| dispatch(cli)) {
        Ok(out) => (out.value, out.code),
        Err(e) => (json!({"error": e.to_string()}), error_code(&e)),
    };
    let text = serde_json::to_string_pretty(&value).expect("serializable");
    (text, code)
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let (text, code) = run_to_string(std::env::args_os());
    if code == 2 && !text.starts_with('{') {
        eprintln!("{text}");
    } else {
        println!("{text}");
    }
    code
}
