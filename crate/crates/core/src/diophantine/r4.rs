use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{descend, integer_roots, sum_squares, OrbitReport, RepEntry};
use crate::exact::{discriminant, int, Int};
use crate::quandle::{orbit_enumerate, Generator, MoveSystem};
use crate::stokes::{rank4_invariants, rank4_poly, StokesAction, StokesMat};

/// A braid generator, the sign change D_j of basis vector j (1-based), or
/// the product D_1 D_j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignedMove {
    Braid(Generator),
    Flip(usize),
    FlipPair(usize),
}

impl fmt::Display for SignedMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedMove::Braid(g) => write!(f, "{g}"),
            SignedMove::Flip(j) => write!(f, "f{j}"),
            SignedMove::FlipPair(j) => write!(f, "f1f{j}"),
        }
    }
}

/// Braid moves together with sign changes s ↦ D s D. A single D_j negates
/// e₁ for r = 4, so unless `odd_flips` is set only even products are used.
#[derive(Clone, Copy, Debug, Default)]
pub struct SignedStokes {
    pub odd_flips: bool,
}

pub fn flip(s: &StokesMat<Int>, j: usize) -> StokesMat<Int> {
    let r = s.r();
    let mut m = s.as_mat().clone();
    for k in 0..r {
        if k != j - 1 {
            let (a, b) = ((j - 1).min(k), (j - 1).max(k));
            let v = -m.get(a, b).clone();
            m.set(a, b, v);
        }
    }
    StokesMat::new(m).expect("still unitriangular")
}

impl MoveSystem for SignedStokes {
    type Point = StokesMat<Int>;
    type Move = SignedMove;
    fn moves(&self, p: &StokesMat<Int>) -> Vec<SignedMove> {
        let flips: Vec<SignedMove> = if self.odd_flips {
            (1..=p.r()).map(SignedMove::Flip).collect()
        } else {
            (2..=p.r()).map(SignedMove::FlipPair).collect()
        };
        Generator::all(p.r())
            .into_iter()
            .map(SignedMove::Braid)
            .chain(flips)
            .collect()
    }
    fn apply_move(&self, m: SignedMove, p: &StokesMat<Int>) -> StokesMat<Int> {
        match m {
            SignedMove::Braid(g) => p.act(g).expect("generator in range"),
            SignedMove::Flip(j) => flip(p, j),
            SignedMove::FlipPair(j) => flip(&flip(p, 1), j),
        }
    }
    fn inverse_move(&self, m: SignedMove) -> SignedMove {
        match m {
            SignedMove::Braid(g) => SignedMove::Braid(g.inv()),
            f => f,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct R4Options {
    /// Include the sign changes D_j in the move set.
    pub signed: bool,
    /// Merge searches stay below `merge_factor` × the largest representative
    /// height (sum of squares of the entries).
    pub merge_factor: u32,
    /// Cap on expanded points in the merge search.
    pub budget: usize,
    /// Cap on expanded points per plateau search during descent.
    pub descent_budget: usize,
}

impl Default for R4Options {
    fn default() -> Self {
        R4Options {
            signed: false,
            merge_factor: 8,
            budget: 2_000_000,
            descent_budget: 100_000,
        }
    }
}

fn height(s: &StokesMat<Int>) -> Int {
    sum_squares(&s.upper())
}

fn key(s: &StokesMat<Int>) -> Vec<Int> {
    s.upper()
}

/// Integral rank-4 Stokes matrices with |entries| ≤ h and invariants
/// (e₁, e₂), sorted by entries.
pub fn surface_points_r4(e1: &Int, e2: &Int, h: u64) -> Vec<StokesMat<Int>> {
    let hi = h as i64;
    let range: Vec<i64> = (-hi..=hi).collect();
    let mut pts: Vec<StokesMat<Int>> = range
        .par_iter()
        .flat_map_iter(|&a| {
            let mut out = Vec::new();
            let a = int(a);
            for &b in &range {
                let b = int(b);
                for &c in &range {
                    let c = int(c);
                    for &e in &range {
                        let e = int(e);
                        for &f in &range {
                            let f = int(f);
                            // e₁ = ac + bd − ef is linear in d.
                            let ds = if b.is_zero() {
                                if &a * &c - &e * &f != *e1 {
                                    continue;
                                }
                                let lin = -(&a * &f + &c * &e);
                                let cst = &a * &a + &c * &c + &e * &e + &f * &f - int(4) - e2;
                                integer_roots(&lin, &cst)
                            } else {
                                let num = e1 - &a * &c + &e * &f;
                                if !num.is_multiple_of(&b) {
                                    continue;
                                }
                                vec![num / &b]
                            };
                            for d in ds {
                                if d.abs() > int(hi) {
                                    continue;
                                }
                                let s = StokesMat::from_upper(
                                    4,
                                    vec![a.clone(), e.clone(), d, b.clone(), f.clone(), c.clone()],
                                )
                                .expect("r = 4");
                                let (f1, f2) = rank4_invariants(&s);
                                if f1 == *e1 && f2 == *e2 {
                                    out.push(s);
                                }
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    pts.sort_by_key(key);
    pts
}

struct Reduced<M> {
    input: StokesMat<Int>,
    rep: StokesMat<Int>,
    word: Vec<M>,
    truncated: bool,
}

fn run<S>(sys: &S, e1: &Int, e2: &Int, h: u64, opts: &R4Options) -> OrbitReport
where
    S: MoveSystem<Point = StokesMat<Int>>,
    S::Move: fmt::Display,
{
    let points = surface_points_r4(e1, e2, h);
    let reductions: Vec<Reduced<S::Move>> = points
        .par_iter()
        .map(|p| {
            let d = descend(sys, p, height, key, opts.descent_budget);
            Reduced {
                input: p.clone(),
                rep: d.point,
                word: d.word,
                truncated: d.truncated,
            }
        })
        .collect();
    let mut truncated = reductions.iter().any(|r| r.truncated);

    let mut classes: BTreeMap<Vec<Int>, (usize, usize)> = BTreeMap::new();
    for (i, red) in reductions.iter().enumerate() {
        let slot = classes.entry(key(&red.rep)).or_insert((i, 0));
        slot.1 += 1;
        let cur = &reductions[slot.0].input;
        if (height(&red.input), key(&red.input)) < (height(cur), key(cur)) {
            slot.0 = i;
        }
    }
    let mut seeds: Vec<StokesMat<Int>> = classes
        .keys()
        .map(|k| reductions[classes[k].0].rep.clone())
        .collect();
    seeds.sort_by_key(|s| (height(s), key(s)));
    let limit = seeds.iter().map(height).max().unwrap_or_else(Int::zero) * Int::from(opts.merge_factor);
    let store = orbit_enumerate(sys, &seeds, |p| height(p) <= limit, key, opts.budget);
    truncated |= store.truncated();

    let mut merged: BTreeMap<usize, RepEntry> = BTreeMap::new();
    for (i, seed) in seeds.iter().enumerate() {
        let root = store.component(i);
        let (src_idx, n) = classes[&key(seed)];
        let src = &reductions[src_idx];
        let link = store
            .connecting_word(i, root, |m| sys.inverse_move(m))
            .expect("same component");
        let word: String = src.word.iter().chain(link.iter()).map(|m| m.to_string()).collect();
        let entry = merged.entry(root).or_insert_with(|| RepEntry {
            matrix: seeds[root].clone(),
            word: word.clone(),
            source: src.input.clone(),
            points: 0,
            tag: None,
        });
        entry.points += n;
        if (height(&src.input), key(&src.input)) < (height(&entry.source), key(&entry.source)) {
            entry.source = src.input.clone();
            entry.word = word;
        }
    }
    let mut representatives: Vec<RepEntry> = merged.into_values().collect();
    representatives.sort_by_key(|e| (height(&e.matrix), key(&e.matrix)));

    let disc = discriminant(&rank4_poly(e1, e2)).expect("quartic");
    let degenerate = disc.is_zero();
    let mut notes = vec![format!(
        "bounded search: |entries| <= {h}, merges below height {limit}; not a completeness certificate"
    )];
    if degenerate {
        notes.push("disc(p) = 0: degenerate regime, finitely many orbits not expected".into());
    }
    if truncated {
        notes.push("budget exhausted: some classes may not be merged".into());
    }
    OrbitReport {
        r: 4,
        invariants: vec![("e1".into(), e1.clone()), ("e2".into(), e2.clone())],
        height: h,
        points_scanned: points.len(),
        representatives,
        truncated,
        disc,
        degenerate,
        signed: opts.signed,
        notes,
    }
}

/// Height-bounded B₄-orbit enumeration on the (e₁, e₂) fiber.
pub fn enumerate_r4(e1: &Int, e2: &Int, h: u64, opts: &R4Options) -> OrbitReport {
    if opts.signed {
        run(&SignedStokes { odd_flips: e1.is_zero() }, e1, e2, h, opts)
    } else {
        run(&StokesAction::<Int>::new(), e1, e2, h, opts)
    }
}

/// [[1,n,2n,n],[0,1,3,3],[0,0,1,3],[0,0,0,1]]
pub fn dtdvdb_family(n: i64) -> StokesMat<Int> {
    StokesMat::from_upper(4, vec![int(n), int(2 * n), int(n), int(3), int(3), int(3)]).expect("r = 4")
}

/// [[1,2,2,4],[0,1,0,2],[0,0,1,2],[0,0,0,1]]
pub fn dtdvdb_fixed() -> StokesMat<Int> {
    StokesMat::from_upper(4, vec![int(2), int(2), int(4), int(0), int(2), int(2)]).expect("r = 4")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtdvdbReport {
    pub n_max: u64,
    pub fixed_ok: bool,
    /// n ≤ n_max where the family fails (e₁, e₂) = (0, −4).
    pub family_failures: Vec<u64>,
}

impl DtdvdbReport {
    pub fn all_pass(&self) -> bool {
        self.fixed_ok && self.family_failures.is_empty()
    }
}

/// Both solution shapes satisfy e₁ = 0 and e₂ = −4.
pub fn verify_dtdvdb(n_max: u64) -> DtdvdbReport {
    let target = (int(0), int(-4));
    DtdvdbReport {
        n_max,
        fixed_ok: rank4_invariants(&dtdvdb_fixed()) == target,
        family_failures: (0..=n_max)
            .filter(|&n| rank4_invariants(&dtdvdb_family(n as i64)) != target)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dtdvdb_shapes() {
        let rep = verify_dtdvdb(20);
        assert!(rep.all_pass());
        assert_eq!(rank4_invariants(&dtdvdb_family(5)), (int(0), int(-4)));
    }

    #[test]
    fn height_zero_is_identity() {
        let rep = enumerate_r4(&int(0), &int(-4), 0, &R4Options::default());
        assert_eq!(rep.points_scanned, 1);
        assert_eq!(rep.count(), 1);
        assert!(rep.representatives[0].matrix.is_identity());
        assert!(rep.degenerate);
    }

    #[test]
    fn flips_are_involutions() {
        let s = StokesMat::from_upper(4, (1..=6).map(int).collect()).unwrap();
        for j in 1..=4 {
            assert_eq!(flip(&flip(&s, j), j), s);
            let (e1, e2) = rank4_invariants(&s);
            assert_eq!(rank4_invariants(&flip(&s, j)), (-e1, e2));
        }
        let sys = SignedStokes { odd_flips: false };
        for m in sys.moves(&s) {
            assert_eq!(rank4_invariants(&sys.apply_move(m, &s)), rank4_invariants(&s));
        }
    }
}
