//! Left/right mutations of Gram matrices of exceptional collections, the
//! numerical Serre operator, and bounded mutation-equivalence search.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::diophantine::flip;
use crate::exact::{charpoly, discriminant, Int, Mat, Ring, UniPoly};
use crate::stokes::{coxeter_charpoly, stokes_braid_act, Sign, StokesMat};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Left,
    Right,
}

/// L_i is σ_i on Stokes matrices and R_i is σ_i⁻¹.
pub fn mutate<T: Ring>(dir: Direction, i: usize, s: &StokesMat<T>) -> Result<StokesMat<T>> {
    let sign = match dir {
        Direction::Left => Sign::Plus,
        Direction::Right => Sign::Minus,
    };
    stokes_braid_act(i, sign, s)
}

/// s⁻¹sᵀ.
pub fn serre_operator<T: Ring>(s: &StokesMat<T>) -> Mat<T> {
    s.serre()
}

/// charpoly(−s⁻¹sᵀ) agrees with the Coxeter polynomial of s.
pub fn serre_matches_coxeter<T: Ring>(s: &StokesMat<T>) -> Result<bool> {
    Ok(charpoly(&serre_operator(s).neg())? == coxeter_charpoly(s)?)
}

/// One step of a mutation word. `Shift(j)` changes the sign of the j-th object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MutationMove {
    L(usize),
    R(usize),
    Shift(usize),
}

impl MutationMove {
    pub fn inverse(self) -> Self {
        match self {
            MutationMove::L(i) => MutationMove::R(i),
            MutationMove::R(i) => MutationMove::L(i),
            m => m,
        }
    }

    pub fn apply(self, s: &StokesMat<Int>) -> Result<StokesMat<Int>> {
        match self {
            MutationMove::L(i) => mutate(Direction::Left, i, s),
            MutationMove::R(i) => mutate(Direction::Right, i, s),
            MutationMove::Shift(j) => {
                if j == 0 || j > s.r() {
                    return Err(Error::IndexRange { index: j, strands: s.r() });
                }
                Ok(flip(s, j))
            }
        }
    }

    /// All moves on r objects; shifts only when `shifts` is set.
    pub fn all(r: usize, shifts: bool) -> Vec<MutationMove> {
        let mut out: Vec<MutationMove> = (1..r)
            .flat_map(|i| [MutationMove::L(i), MutationMove::R(i)])
            .collect();
        if shifts {
            out.extend((1..=r).map(MutationMove::Shift));
        }
        out
    }
}

impl fmt::Display for MutationMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MutationMove::L(i) => write!(f, "L{i}"),
            MutationMove::R(i) => write!(f, "R{i}"),
            MutationMove::Shift(j) => write!(f, "D{j}"),
        }
    }
}

/// A sequence of mutations, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MutationWord(pub Vec<MutationMove>);

impl MutationWord {
    /// Parses strings such as "L1R2D3"; an empty string is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        let mut moves = Vec::new();
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut k = 0;
        while k < chars.len() {
            let letter = chars[k];
            k += 1;
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            let n: usize = digits
                .parse()
                .map_err(|_| Error::Invalid(format!("missing index after '{letter}' in {text:?}")))?;
            moves.push(match letter {
                'L' => MutationMove::L(n),
                'R' => MutationMove::R(n),
                'D' => MutationMove::Shift(n),
                c => return Err(Error::Invalid(format!("unknown mutation letter '{c}'"))),
            });
        }
        Ok(MutationWord(moves))
    }

    pub fn apply(&self, s: &StokesMat<Int>) -> Result<StokesMat<Int>> {
        self.0.iter().try_fold(s.clone(), |acc, m| m.apply(&acc))
    }

    pub fn inverse(&self) -> Self {
        MutationWord(self.0.iter().rev().map(|m| m.inverse()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.0 {
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// Applying `word` to the first matrix gives the second.
    Equivalent { word: MutationWord },
    /// Coxeter polynomials differ, so no word exists at any depth.
    InvariantMismatch { p1: UniPoly<Int>, p2: UniPoly<Int> },
    /// The full search up to `depth` moves found nothing.
    NotWithinDepth { depth: usize, explored: usize },
    /// The node budget ran out before `depth` was reached.
    BudgetExhausted { reached: usize, explored: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub depth: usize,
    pub budget: usize,
    pub shifts: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            depth: 8,
            budget: 1_000_000,
            shifts: false,
        }
    }
}

type Side = HashMap<StokesMat<Int>, (usize, Option<(MutationMove, StokesMat<Int>)>)>;

fn path_to(side: &Side, end: &StokesMat<Int>) -> Vec<MutationMove> {
    let mut out = Vec::new();
    let mut cur = end.clone();
    while let Some((_, Some((m, prev)))) = side.get(&cur) {
        out.push(*m);
        cur = prev.clone();
    }
    out.reverse();
    out
}

/// Expands one BFS layer. Children are computed in parallel and inserted in
/// frontier order, so the result does not depend on the thread count.
fn expand(side: &mut Side, frontier: &[StokesMat<Int>], moves: &[MutationMove], depth: usize) -> Vec<StokesMat<Int>> {
    let children: Vec<Vec<(MutationMove, StokesMat<Int>)>> = frontier
        .par_iter()
        .map(|p| {
            moves
                .iter()
                .map(|&m| (m, m.apply(p).expect("move in range")))
                .collect()
        })
        .collect();
    let mut next = Vec::new();
    for (p, kids) in frontier.iter().zip(children) {
        for (m, q) in kids {
            if !side.contains_key(&q) {
                side.insert(q.clone(), (depth, Some((m, p.clone()))));
                next.push(q);
            }
        }
    }
    next
}

/// Bidirectional BFS over mutation words of length ≤ `opts.depth`. Words
/// found are shortest in the move set.
pub fn mutation_equivalent(s1: &StokesMat<Int>, s2: &StokesMat<Int>, opts: &SearchOptions) -> Result<Equivalence> {
    if s1.r() != s2.r() {
        return Err(Error::Dimension(format!("r = {} vs r = {}", s1.r(), s2.r())));
    }
    let (p1, p2) = (coxeter_charpoly(s1)?, coxeter_charpoly(s2)?);
    if p1 != p2 {
        return Ok(Equivalence::InvariantMismatch { p1, p2 });
    }
    if s1 == s2 {
        return Ok(Equivalence::Equivalent { word: MutationWord::default() });
    }
    let moves = MutationMove::all(s1.r(), opts.shifts);
    let mut fwd: Side = HashMap::from([(s1.clone(), (0, None))]);
    let mut bwd: Side = HashMap::from([(s2.clone(), (0, None))]);
    let (mut ff, mut bf) = (vec![s1.clone()], vec![s2.clone()]);
    let (mut df, mut db) = (0, 0);
    while df + db < opts.depth {
        if fwd.len() + bwd.len() > opts.budget {
            return Ok(Equivalence::BudgetExhausted {
                reached: df + db,
                explored: fwd.len() + bwd.len(),
            });
        }
        let forward = ff.len() <= bf.len();
        let new = if forward {
            df += 1;
            ff = expand(&mut fwd, &ff, &moves, df);
            &ff
        } else {
            db += 1;
            bf = expand(&mut bwd, &bf, &moves, db);
            &bf
        };
        let other = if forward { &bwd } else { &fwd };
        // Every new node sits at the same depth, so the shortest meeting
        // minimises the depth on the other side; ties go to frontier order.
        let meet = new
            .iter()
            .filter_map(|q| other.get(q).map(|(d, _)| (*d, q)))
            .min_by_key(|(d, _)| *d);
        if let Some((_, q)) = meet {
            let head = path_to(&fwd, q);
            let tail = MutationWord(path_to(&bwd, q)).inverse();
            let word = MutationWord(head.into_iter().chain(tail.0).collect());
            debug_assert_eq!(word.apply(s1).ok().as_ref(), Some(s2));
            return Ok(Equivalence::Equivalent { word });
        }
        if ff.is_empty() || bf.is_empty() {
            // One side closed up: the orbit is finite and the other is not in it.
            break;
        }
    }
    Ok(Equivalence::NotWithinDepth {
        depth: opts.depth,
        explored: fwd.len() + bwd.len(),
    })
}

/// Computable warning signs of degeneracy. These are heuristics, not a
/// decision procedure for nondegeneracy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyFlags {
    pub disc_zero: bool,
    /// Coordinates (i, j) with s_ij = ±2.
    pub pm2_coords: Vec<(usize, usize)>,
}

impl DegeneracyFlags {
    pub fn any(&self) -> bool {
        self.disc_zero || !self.pm2_coords.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.disc_zero {
            out.push("heuristic: disc(p) = 0".to_string());
        }
        for (i, j) in &self.pm2_coords {
            out.push(format!("heuristic: s{i}{j} = ±2"));
        }
        out
    }
}

pub fn degeneracy_flags(s: &StokesMat<Int>) -> Result<DegeneracyFlags> {
    let p = coxeter_charpoly(s)?;
    let two = Int::from(2);
    let mut pm2 = Vec::new();
    for i in 1..=s.r() {
        for j in i + 1..=s.r() {
            let v = s.s(i, j);
            if *v == two || *v == -two.clone() {
                pm2.push((i, j));
            }
        }
    }
    Ok(DegeneracyFlags {
        disc_zero: discriminant(&p)? == Int::from(0),
        pm2_coords: pm2,
    })
}
