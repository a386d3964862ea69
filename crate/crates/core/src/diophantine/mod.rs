//! Integral points of the rank-3 and rank-4 Stokes varieties: descent to
//! local minima, orbit enumeration and the discriminant predicates.

pub mod r3;
pub mod r4;

use std::fmt::Debug;

use num_traits::{Signed, Zero};

use crate::exact::Int;
use crate::quandle::{orbit_enumerate, MoveSystem};
use crate::stokes::StokesMat;

pub use r3::{
    enumerate_r3, markoff_reduce, slice_enumerate_r3, MarkoffMoves, Reduction, SliceClass,
    SliceReport, Triple,
};
pub use r4::{
    dtdvdb_family, dtdvdb_fixed, enumerate_r4, flip, surface_points_r4, verify_dtdvdb,
    DtdvdbReport, R4Options, SignedMove, SignedStokes,
};

/// One class found by an enumeration.
#[derive(Clone, Debug, PartialEq)]
pub struct RepEntry {
    pub matrix: StokesMat<Int>,
    /// Moves from `source` to `matrix`, in s1/S1 notation (flips as f<j>).
    pub word: String,
    /// Least scanned point (by height, then entries) that landed in this class.
    pub source: StokesMat<Int>,
    /// Number of scanned points in this class.
    pub points: usize,
    pub tag: Option<String>,
}

/// Result of a height-bounded orbit enumeration.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitReport {
    pub r: usize,
    /// ("k", k) for r = 3; ("e1", e₁), ("e2", e₂) for r = 4.
    pub invariants: Vec<(String, Int)>,
    pub height: u64,
    /// Integral points with all |entries| ≤ height on the surface.
    pub points_scanned: usize,
    pub representatives: Vec<RepEntry>,
    /// A descent or merge search hit its step budget.
    pub truncated: bool,
    /// Discriminant of the Coxeter polynomial.
    pub disc: Int,
    pub degenerate: bool,
    /// Signed moves were included in the move set.
    pub signed: bool,
    pub notes: Vec<String>,
}

impl OrbitReport {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

/// Output of [`descend`].
#[derive(Clone, Debug)]
pub(crate) struct Descent<P, M> {
    pub point: P,
    pub word: Vec<M>,
    /// Every point of the final plateau, sorted by key.
    pub plateau: Vec<(P, Vec<M>)>,
    pub truncated: bool,
}

/// Greedy descent on `height` followed by plateau closure. Whenever the set
/// of points reachable without exceeding the current height contains a lower
/// point, descent resumes from the least such point. The result is the
/// least-key point of the final plateau.
pub(crate) fn descend<S, K, H, F>(
    sys: &S,
    start: &S::Point,
    height: H,
    key: F,
    budget: usize,
) -> Descent<S::Point, S::Move>
where
    S: MoveSystem,
    K: Ord + Clone + Send + Sync + Debug,
    H: Fn(&S::Point) -> Int + Sync,
    F: Fn(&S::Point) -> K + Sync,
{
    let mut p = start.clone();
    let mut word = Vec::new();
    let mut truncated = false;
    loop {
        // Greedy phase.
        loop {
            let h = height(&p);
            let best = sys
                .moves(&p)
                .into_iter()
                .map(|m| {
                    let q = sys.apply_move(m, &p);
                    (height(&q), key(&q), m, q)
                })
                .filter(|c| c.0 < h)
                .min_by(|a, b| (&a.0, &a.1, a.2).cmp(&(&b.0, &b.1, b.2)));
            match best {
                Some((_, _, m, q)) => {
                    word.push(m);
                    p = q;
                }
                None => break,
            }
        }
        // Plateau phase.
        let h = height(&p);
        let store = orbit_enumerate(sys, std::slice::from_ref(&p), |q| height(q) <= h, &key, budget);
        truncated |= store.truncated();
        let lower = store
            .iter()
            .map(|(k, e)| (height(&e.point), k, e))
            .filter(|c| c.0 < h)
            .min_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        if let Some((_, _, e)) = lower {
            word.extend(e.word.iter().copied());
            p = e.point.clone();
            continue;
        }
        let plateau: Vec<(S::Point, Vec<S::Move>)> = store
            .iter()
            .map(|(_, e)| (e.point.clone(), e.word.clone()))
            .collect();
        let (_, first) = store.iter().next().expect("plateau contains its start");
        word.extend(first.word.iter().copied());
        return Descent {
            point: first.point.clone(),
            word,
            plateau,
            truncated,
        };
    }
}

/// (t² − 4)(k₁ − k₂)², whether it is a perfect square, and which hypotheses
/// of the no-integral-point criterion fail (t = ±2, k₁ = k₂).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DehnDiscriminant {
    pub value: Int,
    pub is_perfect_square: bool,
    pub flags: Vec<String>,
}

pub fn is_perfect_square(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

pub fn dehn_discriminant(t: &Int, k1: &Int, k2: &Int) -> DehnDiscriminant {
    let d = k1 - k2;
    let value = (t * t - Int::from(4)) * &d * &d;
    let mut flags = Vec::new();
    if t.abs() == Int::from(2) {
        flags.push("t = ±2".to_string());
    }
    if d.is_zero() {
        flags.push("k1 = k2".to_string());
    }
    DehnDiscriminant {
        is_perfect_square: is_perfect_square(&value),
        value,
        flags,
    }
}

/// Integer roots of z² + bz + c = 0.
pub(crate) fn integer_roots(b: &Int, c: &Int) -> Vec<Int> {
    let disc = b * b - Int::from(4) * c;
    if !is_perfect_square(&disc) {
        return Vec::new();
    }
    let s = disc.sqrt();
    let mut out = Vec::new();
    for num in [-b + &s, -b - &s] {
        if (&num % Int::from(2)).is_zero() {
            let z = num / Int::from(2);
            if !out.contains(&z) {
                out.push(z);
            }
        }
    }
    out.sort();
    out
}

pub(crate) fn sum_squares(v: &[Int]) -> Int {
    v.iter().map(|x| x * x).sum()
}
