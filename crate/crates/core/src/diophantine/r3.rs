use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{descend, integer_roots, OrbitReport, RepEntry};
use crate::error::{Error, Result};
use crate::exact::{discriminant, int, Int};
use crate::quandle::{orbit_enumerate, BraidWord, Generator, MoveSystem};
use crate::stokes::{k_invariant, rank3_poly, StokesMat};

/// (x, y, z) = (s₁₂, s₂₃, s₁₃) of a rank-3 Stokes matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triple {
    pub x: Int,
    pub y: Int,
    pub z: Int,
}

impl Triple {
    pub fn new(x: Int, y: Int, z: Int) -> Self {
        Triple { x, y, z }
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Triple::new(int(x), int(y), int(z))
    }

    pub fn k(&self) -> Int {
        k_invariant(&self.x, &self.y, &self.z)
    }

    pub fn height(&self) -> Int {
        &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn max_abs(&self) -> Int {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    /// The rank-3 braid moves in these coordinates.
    pub fn apply(&self, g: Generator) -> Triple {
        let (x, y, z) = (&self.x, &self.y, &self.z);
        match (g.index, g.inverse) {
            (1, false) => Triple::new(x.clone(), z.clone(), x * z - y),
            (1, true) => Triple::new(x.clone(), x * y - z, y.clone()),
            (2, false) => Triple::new(x * y - z, y.clone(), x.clone()),
            (2, true) => Triple::new(z.clone(), y.clone(), y * z - x),
            _ => panic!("rank-3 triples have generators 1 and 2, got {g}"),
        }
    }

    pub fn act_word(&self, w: &BraidWord) -> Result<Triple> {
        w.check(3)?;
        Ok(w.0.iter().fold(self.clone(), |t, &g| t.apply(g)))
    }

    pub fn to_stokes(&self) -> StokesMat<Int> {
        StokesMat::from_upper(3, vec![self.x.clone(), self.z.clone(), self.y.clone()]).expect("r = 3")
    }

    pub fn from_stokes(s: &StokesMat<Int>) -> Result<Triple> {
        if s.r() != 3 {
            return Err(Error::Dimension(format!("expected r = 3, got {}", s.r())));
        }
        Ok(Triple::new(s.s(1, 2).clone(), s.s(2, 3).clone(), s.s(1, 3).clone()))
    }

    /// (2, y, y) or (−2, y, −y).
    pub fn in_reducible_family(&self) -> bool {
        (self.x == int(2) && self.y == self.z) || (self.x == int(-2) && self.y == -&self.z)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

/// Braid moves on triples.
#[derive(Clone, Copy, Debug, Default)]
pub struct MarkoffMoves;

impl MoveSystem for MarkoffMoves {
    type Point = Triple;
    type Move = Generator;
    fn moves(&self, _: &Triple) -> Vec<Generator> {
        Generator::all(3)
    }
    fn apply_move(&self, m: Generator, p: &Triple) -> Triple {
        p.apply(m)
    }
    fn inverse_move(&self, m: Generator) -> Generator {
        m.inv()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    pub input: Triple,
    pub rep: Triple,
    /// Takes `input` to `rep`.
    pub word: BraidWord,
    pub k: Int,
    pub tag: Option<String>,
    pub truncated: bool,
}

pub const ORIGIN_TAG: &str = "k=−2 origin";
pub const MARKOFF_TAG: &str = "k=−2 Markoff family";
pub const REDUCIBLE_TAG: &str = "k=2 reducible family";

const PLATEAU_BUDGET: usize = 200_000;
const FAMILY_SEARCH_BUDGET: usize = 20_000;

fn tag_for(rep: &Triple, k: &Int) -> Option<String> {
    if *k == int(-2) {
        if rep.height().is_zero() {
            return Some(ORIGIN_TAG.into());
        }
        if [&rep.x, &rep.y, &rep.z].iter().all(|c| c.abs() == int(3)) {
            return Some(MARKOFF_TAG.into());
        }
    }
    if *k == int(2) && rep.in_reducible_family() {
        return Some(REDUCIBLE_TAG.into());
    }
    None
}

/// Markoff descent on x² + y² + z² to a canonical local minimum. For k = 2
/// the representative is moved into the (2, y, y) / (−2, y, −y) families
/// when a bounded search finds such a point.
pub fn markoff_reduce(t: &Triple) -> Reduction {
    let k = t.k();
    let d = descend(&MarkoffMoves, t, Triple::height, Clone::clone, PLATEAU_BUDGET);
    let mut rep = d.point;
    let mut word = d.word;
    let mut truncated = d.truncated;
    if k == int(2) && !rep.in_reducible_family() {
        // Plateau words start at the point where the last plateau search began.
        let rep_plateau_len = d.plateau.iter().find(|(p, _)| *p == rep).map_or(0, |(_, w)| w.len());
        let prefix_len = word.len() - rep_plateau_len;
        let in_plateau = d
            .plateau
            .iter()
            .filter(|(p, _)| p.in_reducible_family())
            .min_by(|a, b| (a.0.height(), &a.0).cmp(&(b.0.height(), &b.0)));
        if let Some((p, w)) = in_plateau {
            word.truncate(prefix_len);
            word.extend(w.iter().copied());
            rep = p.clone();
        } else {
            let limit = rep.height() * int(4) + int(16);
            let store = orbit_enumerate(
                &MarkoffMoves,
                std::slice::from_ref(&rep),
                |p| p.height() <= limit,
                Clone::clone,
                FAMILY_SEARCH_BUDGET,
            );
            truncated |= store.truncated();
            let found = store
                .iter()
                .filter(|(p, _)| p.in_reducible_family())
                .min_by(|a, b| (a.0.height(), a.0).cmp(&(b.0.height(), b.0)));
            if let Some((p, e)) = found {
                word.extend(e.word.iter().copied());
                rep = p.clone();
            }
        }
    }
    Reduction {
        input: t.clone(),
        tag: tag_for(&rep, &k),
        rep,
        word: BraidWord(word),
        k,
        truncated,
    }
}

/// Integral points of x² + y² + z² − xyz − 2 = k with max |coordinate| ≤ h,
/// in lexicographic order.
pub fn surface_points_r3(k: &Int, h: u64) -> Vec<Triple> {
    let h = h as i64;
    let mut pts: Vec<Triple> = (-h..=h)
        .into_par_iter()
        .flat_map_iter(|x| {
            let x = int(x);
            let mut out = Vec::new();
            for y in -h..=h {
                let y = int(y);
                // z² − xy·z + (x² + y² − 2 − k) = 0
                let b = -(&x * &y);
                let c = &x * &x + &y * &y - int(2) - k;
                for z in integer_roots(&b, &c) {
                    if z.abs() <= int(h) {
                        out.push(Triple::new(x.clone(), y.clone(), z));
                    }
                }
            }
            out
        })
        .collect();
    pts.sort();
    pts
}

/// Scan, reduce, and merge by bounded reachability.
pub fn enumerate_r3(k: &Int, h: u64, budget: usize) -> OrbitReport {
    let points = surface_points_r3(k, h);
    let reductions: Vec<Reduction> = points.par_iter().map(markoff_reduce).collect();
    let mut truncated = reductions.iter().any(|r| r.truncated);

    // rep → (least source by (height, entries), its word, point count)
    let mut classes: BTreeMap<Triple, (Triple, BraidWord, usize)> = BTreeMap::new();
    for red in &reductions {
        classes
            .entry(red.rep.clone())
            .and_modify(|(src, w, n)| {
                *n += 1;
                if (red.input.height(), &red.input) < (src.height(), &*src) {
                    *src = red.input.clone();
                    *w = red.word.clone();
                }
            })
            .or_insert((red.input.clone(), red.word.clone(), 1));
    }

    let mut seeds: Vec<Triple> = classes.keys().cloned().collect();
    seeds.sort_by(|a, b| (a.height(), a).cmp(&(b.height(), b)));
    let limit = seeds.iter().map(Triple::height).max().unwrap_or_else(Int::zero) * int(4);
    let store = orbit_enumerate(&MarkoffMoves, &seeds, |p| p.height() <= limit, Clone::clone, budget);
    truncated |= store.truncated();

    let mut merged: BTreeMap<usize, RepEntry> = BTreeMap::new();
    for (i, seed) in seeds.iter().enumerate() {
        let root = store.component(i);
        let (src, w, n) = &classes[seed];
        let link = store
            .connecting_word(i, root, |g: Generator| g.inv())
            .expect("same component");
        let full = BraidWord(w.0.iter().copied().chain(link).collect());
        let rep = &seeds[root];
        let entry = merged.entry(root).or_insert_with(|| RepEntry {
            matrix: rep.to_stokes(),
            word: full.to_string(),
            source: src.to_stokes(),
            points: 0,
            tag: tag_for(rep, k),
        });
        entry.points += n;
        let cur = Triple::from_stokes(&entry.source).expect("r = 3");
        if (src.height(), src) < (cur.height(), &cur) {
            entry.source = src.to_stokes();
            entry.word = full.to_string();
        }
    }
    let mut representatives: Vec<RepEntry> = merged.into_values().collect();
    representatives.sort_by(|a, b| {
        let (ta, tb) = (Triple::from_stokes(&a.matrix).unwrap(), Triple::from_stokes(&b.matrix).unwrap());
        (ta.height(), ta).cmp(&(tb.height(), tb))
    });

    let disc = discriminant(&rank3_poly(k)).expect("cubic");
    let mut notes = Vec::new();
    if disc.is_zero() {
        notes.push("disc(p) = 0: degenerate regime".to_string());
    }
    if *k == int(2) {
        notes.push("k = 2: one reducible family class per y, infinitely many in total".to_string());
    }
    if truncated {
        notes.push("budget exhausted: some classes may not be merged".to_string());
    }
    OrbitReport {
        r: 3,
        invariants: vec![("k".into(), k.clone())],
        height: h,
        points_scanned: points.len(),
        representatives,
        truncated,
        degenerate: disc.is_zero(),
        disc,
        signed: false,
        notes,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceClass {
    pub rep: Triple,
    /// σ₁-power taking the least scanned member to `rep`.
    pub word: BraidWord,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceReport {
    pub k: Int,
    pub x: Int,
    /// Values of y − z (x = 2) or y + z (x = −2) on the slice.
    pub lines: Vec<Int>,
    pub points_scanned: usize,
    pub classes: Vec<SliceClass>,
}

fn sigma1_power(n: &Int) -> BraidWord {
    let g = if n.is_negative() { Generator::neg(1) } else { Generator::pos(1) };
    let count: usize = n.abs().try_into().expect("small power");
    BraidWord(vec![g; count])
}

/// Strip representative of a slice point under the twist σ₁ and the word
/// reaching it.
fn slice_normalize(t: &Triple) -> (Triple, BraidWord) {
    let (y, z) = (&t.y, &t.z);
    let word = if t.x == int(2) {
        // σ₁ keeps c = y − z and lowers z by c.
        let c = y - z;
        if c.is_zero() {
            BraidWord::empty()
        } else {
            let m = z.div_floor(&c.abs());
            sigma1_power(&if c.is_positive() { m } else { -m })
        }
    } else {
        // σ₁ flips c = y + z; σ₁² keeps it and lowers y by 2c.
        let mut w = Vec::new();
        let mut cur = t.clone();
        let c = y + z;
        if c.is_negative() || (c.is_zero() && y.is_negative()) {
            w.push(Generator::pos(1));
            cur = cur.apply(Generator::pos(1));
        }
        let c = &cur.y + &cur.z;
        if !c.is_zero() {
            let n = cur.y.div_floor(&(int(2) * &c));
            let g = if n.is_negative() { Generator::neg(1) } else { Generator::pos(1) };
            let count: usize = (n.abs() * int(2)).try_into().expect("small power");
            w.extend(std::iter::repeat_n(g, count));
        }
        BraidWord(w)
    };
    let rep = t.act_word(&word).expect("r = 3");
    (rep, word)
}

/// Integral points on the slice x = ±2 up to the twist action.
pub fn slice_enumerate_r3(k: &Int, sign: i64, h: u64) -> Result<SliceReport> {
    if sign != 2 && sign != -2 {
        return Err(Error::Invalid(format!("slice sign must be ±2, got {sign}")));
    }
    if sign == 2 && *k == int(2) {
        return Err(Error::Invalid(
            "k = 2 on the x = 2 slice is the reducible family (2, y, y)".into(),
        ));
    }
    let x = int(sign);
    let points: Vec<Triple> = surface_points_r3(k, h)
        .into_iter()
        .filter(|t| t.x == x)
        .collect();
    let mut lines: Vec<Int> = points
        .iter()
        .map(|t| if sign == 2 { &t.y - &t.z } else { &t.y + &t.z })
        .collect();
    lines.sort();
    lines.dedup();
    let mut classes: BTreeMap<Triple, SliceClass> = BTreeMap::new();
    for t in &points {
        let (rep, word) = slice_normalize(t);
        classes
            .entry(rep.clone())
            .and_modify(|c| c.points += 1)
            .or_insert(SliceClass { rep, word, points: 1 });
    }
    Ok(SliceReport {
        k: k.clone(),
        x,
        lines,
        points_scanned: points.len(),
        classes: classes.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        let r = markoff_reduce(&Triple::from_i64(0, 0, 0));
        assert_eq!(r.rep, Triple::from_i64(0, 0, 0));
        assert!(r.word.is_empty());
        assert_eq!(r.tag.as_deref(), Some(ORIGIN_TAG));
        let r = markoff_reduce(&Triple::from_i64(3, 3, 3));
        assert_eq!(r.rep, Triple::from_i64(3, 3, 3));
        assert_eq!(r.tag.as_deref(), Some(MARKOFF_TAG));
        let r = markoff_reduce(&Triple::from_i64(2, 5, 5));
        assert_eq!(r.rep, Triple::from_i64(2, 5, 5));
        assert_eq!(r.tag.as_deref(), Some(REDUCIBLE_TAG));
    }

    #[test]
    fn reduction_word_reaches_rep() {
        for t in [(1, 1, 1), (5, 7, 34), (-4, 3, 11), (2, 9, 9), (3, -3, -3), (10, 3, 29)] {
            let t = Triple::from_i64(t.0, t.1, t.2);
            let r = markoff_reduce(&t);
            assert_eq!(t.act_word(&r.word).unwrap(), r.rep, "{t}");
            assert_eq!(r.rep.k(), t.k());
        }
    }

    #[test]
    fn slices() {
        let s = slice_enumerate_r3(&int(6), 2, 20).unwrap();
        assert_eq!(s.lines, vec![int(-2), int(2)]);
        assert_eq!(s.classes.len(), 4);
        let s = slice_enumerate_r3(&int(3), 2, 20).unwrap();
        assert_eq!(s.classes.len(), 2);
        let s = slice_enumerate_r3(&int(1), 2, 20).unwrap();
        assert!(s.classes.is_empty() && s.points_scanned == 0);
        assert!(slice_enumerate_r3(&int(2), 2, 20).is_err());
        let s = slice_enumerate_r3(&int(6), -2, 20).unwrap();
        assert_eq!(s.classes.len(), 4);
    }
}
