//! SL₂ tuples on both sides of the Φ/Ψ correspondence, the induced braid
//! action, traces into Stokes matrices and the finite-field models.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{product, Fp, Mat2, Ring};
use crate::quandle::{BraidAction, BraidWord, Core, Generator, Sl2};
use crate::stokes::{k_invariant, rank4_invariants, StokesMat};

fn check_unimodular<T: Ring>(ms: &[Mat2<T>]) -> Result<()> {
    match ms.iter().position(|m| !m.is_unimodular()) {
        Some(i) => Err(Error::Invalid(format!(
            "element {} has determinant {:?}, expected 1",
            i + 1,
            ms[i].det()
        ))),
        None => Ok(()),
    }
}

/// (a₁, …, a_r) ∈ SL₂^r, a representative of a point of G^r modulo
/// two-sided translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GTuple<T>(Vec<Mat2<T>>);

impl<T: Ring> GTuple<T> {
    pub fn new(ms: Vec<Mat2<T>>) -> Result<Self> {
        check_unimodular(&ms)?;
        if ms.is_empty() {
            return Err(Error::Dimension("empty tuple".into()));
        }
        Ok(GTuple(ms))
    }

    pub fn elems(&self) -> &[Mat2<T>] {
        &self.0
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    /// Core-quandle braid move σ_i: (a, b) ↦ (a b⁻¹ a, a).
    pub fn act_word(&self, w: &BraidWord) -> Result<Self> {
        Ok(GTuple(crate::quandle::braid_act(w, &self.0, &Core(Sl2::<T>::new()))?))
    }
}

/// (b₁, …, b_{r−1}) ∈ SL₂^{r−1}, modulo simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepTuple<T>(Vec<Mat2<T>>);

impl<T: Ring> RepTuple<T> {
    pub fn new(ms: Vec<Mat2<T>>) -> Result<Self> {
        check_unimodular(&ms)?;
        if ms.is_empty() {
            return Err(Error::Dimension("a RepTuple needs r >= 2".into()));
        }
        Ok(RepTuple(ms))
    }

    pub fn elems(&self) -> &[Mat2<T>] {
        &self.0
    }

    /// Number of strands, one more than the number of matrices.
    pub fn r(&self) -> usize {
        self.0.len() + 1
    }

    pub fn identity(r: usize) -> Self {
        RepTuple(vec![Mat2::identity(); r - 1])
    }

    pub fn random(rng: &mut impl rand::Rng, r: usize, word_len: usize) -> Self {
        RepTuple(
            (0..r - 1)
                .map(|_| crate::exact::random_sl2_word(rng, word_len))
                .collect(),
        )
    }

    pub fn conjugate(&self, g: &Mat2<T>) -> Self {
        let gi = g.adj();
        RepTuple(self.0.iter().map(|b| &(g * b) * &gi).collect())
    }
}

/// Φ(a) = (a₁a₂⁻¹, …, a_{r−1}a_r⁻¹).
pub fn phi<T: Ring>(a: &GTuple<T>) -> Result<RepTuple<T>> {
    if a.r() < 2 {
        return Err(Error::Dimension("Φ needs r >= 2".into()));
    }
    Ok(RepTuple(a.0.windows(2).map(|w| &w[0] * &w[1].adj()).collect()))
}

/// Ψ(b) = (b₁⋯b_{r−1}, b₂⋯b_{r−1}, …, b_{r−1}, 1).
pub fn psi<T: Ring>(b: &RepTuple<T>) -> GTuple<T> {
    let mut out = vec![Mat2::identity()];
    for m in b.0.iter().rev() {
        let next = m * out.last().expect("nonempty");
        out.push(next);
    }
    out.reverse();
    GTuple(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transported<T> {
    G(GTuple<T>),
    Rep(RepTuple<T>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Phi,
    Psi,
}

pub fn transport<T: Ring>(dir: Direction, point: &Transported<T>) -> Result<Transported<T>> {
    match (dir, point) {
        (Direction::Phi, Transported::G(a)) => Ok(Transported::Rep(phi(a)?)),
        (Direction::Psi, Transported::Rep(b)) => Ok(Transported::G(psi(b))),
        _ => Err(Error::Invalid("Φ takes a G-tuple and Ψ a RepTuple".into())),
    }
}

/// σ_i^{±1} on RepTuples. For σ_i the entries b_{i−1} ↦ b_{i−1}b_i⁻¹ and
/// b_{i+1} ↦ b_i b_{i+1} change, whichever exist.
fn c_apply<T: Ring>(g: Generator, b: &RepTuple<T>) -> RepTuple<T> {
    let i = g.index - 1;
    let n = b.0.len();
    let mut out = b.0.clone();
    let bi = &b.0[i];
    if g.inverse {
        if i >= 1 {
            out[i - 1] = &b.0[i - 1] * bi;
        }
        if i + 1 < n {
            out[i + 1] = &bi.adj() * &b.0[i + 1];
        }
    } else {
        if i >= 1 {
            out[i - 1] = &b.0[i - 1] * &bi.adj();
        }
        if i + 1 < n {
            out[i + 1] = bi * &b.0[i + 1];
        }
    }
    RepTuple(out)
}

pub fn c_braid_act<T: Ring>(g: Generator, b: &RepTuple<T>) -> Result<RepTuple<T>> {
    g.check(b.r())?;
    Ok(c_apply(g, b))
}

/// The braid action on RepTuples.
#[derive(Debug)]
pub struct CharAction<T>(std::marker::PhantomData<T>);

impl<T> CharAction<T> {
    pub fn new() -> Self {
        CharAction(std::marker::PhantomData)
    }
}

impl<T> Default for CharAction<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Ring> BraidAction for CharAction<T> {
    type Point = RepTuple<T>;
    fn strands(&self, p: &RepTuple<T>) -> usize {
        p.r()
    }
    fn apply_unchecked(&self, g: Generator, p: &RepTuple<T>) -> RepTuple<T> {
        c_apply(g, p)
    }
}

/// s_ij = tr(b_i ⋯ b_{j−1}).
pub fn rep_to_stokes<T: Ring>(b: &RepTuple<T>) -> StokesMat<T> {
    let r = b.r();
    let mut entries = Vec::with_capacity(r * (r - 1) / 2);
    for i in 0..r {
        let mut acc = Mat2::identity();
        for j in i + 1..r {
            acc = &acc * &b.0[j - 1];
            entries.push(acc.trace());
        }
    }
    StokesMat::from_upper(r, entries).expect("sized")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundaryTraces<T> {
    Odd { k: T },
    Even { k1: T, k2: T },
}

impl<T: Ring> BoundaryTraces<T> {
    pub fn parity(&self) -> u8 {
        match self {
            BoundaryTraces::Odd { .. } => 1,
            BoundaryTraces::Even { .. } => 0,
        }
    }
}

fn stride_product<T: Ring>(b: &[Mat2<T>], start: usize, end: usize) -> Mat2<T> {
    product(b[..end].iter().skip(start).step_by(2))
}

/// Traces of the boundary words. For r even these are
/// tr(b₁b₃⋯b_{r−1}) and tr((b₁⋯b_{r−1})⁻¹ b₂b₄⋯b_{r−2}); for r odd the single
/// trace of (b₁b₃⋯b_{r−2})(b₁⋯b_{r−1})⁻¹(b₂b₄⋯b_{r−1}).
pub fn boundary_monodromy<T: Ring>(b: &RepTuple<T>) -> BoundaryTraces<T> {
    let r = b.r();
    let bs = &b.0;
    let full_inv = product(bs.iter()).adj();
    if r % 2 == 0 {
        let odd = stride_product(bs, 0, r - 1);
        let even = stride_product(bs, 1, r - 2);
        BoundaryTraces::Even {
            k1: odd.trace(),
            k2: (&full_inv * &even).trace(),
        }
    } else {
        let odd = stride_product(bs, 0, r - 2);
        let even = stride_product(bs, 1, r - 1);
        BoundaryTraces::Odd {
            k: (&(&odd * &full_inv) * &even).trace(),
        }
    }
}

/// Parameters of the affine surfaces: k for r = 3, (e₁, e₂) for r = 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceParams<T> {
    Rank3 { k: T },
    Rank4 { e1: T, e2: T },
}

impl<T: Ring> From<&BoundaryTraces<T>> for SurfaceParams<T> {
    fn from(t: &BoundaryTraces<T>) -> Self {
        match t {
            BoundaryTraces::Odd { k } => SurfaceParams::Rank3 { k: k.clone() },
            BoundaryTraces::Even { k1, k2 } => SurfaceParams::Rank4 {
                e1: k1.clone() + k2.clone(),
                e2: k1.clone() * k2.clone(),
            },
        }
    }
}

/// Exact evaluation of the defining equations.
pub fn surface_membership<T: Ring>(s: &StokesMat<T>, params: &SurfaceParams<T>) -> Result<bool> {
    match (s.r(), params) {
        (3, SurfaceParams::Rank3 { k }) => Ok(k_invariant(s.s(1, 2), s.s(2, 3), s.s(1, 3)) == *k),
        (4, SurfaceParams::Rank4 { e1, e2 }) => {
            let (f1, f2) = rank4_invariants(s);
            Ok(f1 == *e1 && f2 == *e2)
        }
        (3 | 4, _) => Err(Error::Invalid("surface parameters do not match r".into())),
        (r, _) => Err(Error::Unsupported(format!("surface equations exist for r = 3, 4, not {r}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceIdentityReport {
    pub checked: usize,
    pub failures: usize,
}

/// tr(A²B) = tr(AB)tr(A) − tr(B) on each sample pair.
pub fn trace_identity_check<T: Ring>(samples: &[(Mat2<T>, Mat2<T>)]) -> TraceIdentityReport {
    let failures = samples
        .iter()
        .filter(|(a, b)| {
            let lhs = (&(a * a) * b).trace();
            let rhs = (a * b).trace() * a.trace() - b.trace();
            lhs != rhs
        })
        .count();
    TraceIdentityReport {
        checked: samples.len(),
        failures,
    }
}

/// SL₂(F_p) as index tables.
struct FiniteGroup<const P: u32> {
    elems: Vec<Mat2<Fp<P>>>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<u32>,
}

impl<const P: u32> FiniteGroup<P> {
    fn new() -> Self {
        let mut elems = Vec::new();
        for a in Fp::<P>::elements() {
            for b in Fp::<P>::elements() {
                for c in Fp::<P>::elements() {
                    for d in Fp::<P>::elements() {
                        let m = Mat2::new(a, b, c, d);
                        if m.is_unimodular() {
                            elems.push(m);
                        }
                    }
                }
            }
        }
        elems.sort();
        let index = |m: &Mat2<Fp<P>>| elems.binary_search(m).expect("closed") as u32;
        let n = elems.len();
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index(&(&elems[i] * &elems[j]));
            }
        }
        let inv = elems.iter().map(|m| index(&m.adj())).collect();
        let gens = vec![index(&Mat2::upper()), index(&Mat2::lower())];
        FiniteGroup {
            elems,
            mul,
            inv,
            gens,
        }
    }

    fn n(&self) -> usize {
        self.elems.len()
    }

    fn m(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n() + b as usize]
    }

    fn i(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }
}

struct Codec {
    n: u64,
    len: usize,
}

impl Codec {
    fn total(&self) -> u64 {
        self.n.pow(self.len as u32)
    }

    fn decode(&self, mut code: u64) -> Vec<u32> {
        (0..self.len)
            .map(|_| {
                let d = (code % self.n) as u32;
                code /= self.n;
                d
            })
            .collect()
    }

    fn encode(&self, t: &[u32]) -> u64 {
        t.iter().rev().fold(0, |acc, &d| acc * self.n + d as u64)
    }
}

fn find(parent: &mut [u32], mut i: u32) -> u32 {
    while parent[i as usize] != i {
        let gp = parent[parent[i as usize] as usize];
        parent[i as usize] = gp;
        i = gp;
    }
    i
}

/// Dense orbit labels (numbered by least member) for the group generated by
/// the maps in `images`. Images of each block of codes are computed in
/// parallel and merged sequentially.
fn orbit_labels(total: u64, images: impl Fn(u64) -> Vec<u64> + Sync) -> (Vec<u32>, usize) {
    let mut parent: Vec<u32> = (0..total as u32).collect();
    const BLOCK: u64 = 1 << 16;
    let mut start = 0;
    while start < total {
        let end = (start + BLOCK).min(total);
        let edges: Vec<(u64, Vec<u64>)> = (start..end).into_par_iter().map(|c| (c, images(c))).collect();
        for (c, imgs) in edges {
            for d in imgs {
                let (rc, rd) = (find(&mut parent, c as u32), find(&mut parent, d as u32));
                if rc != rd {
                    let (lo, hi) = (rc.min(rd), rc.max(rd));
                    parent[hi as usize] = lo;
                }
            }
        }
        start = end;
    }
    let mut labels = vec![0u32; total as usize];
    let mut count = 0u32;
    let mut label_of_root = vec![u32::MAX; total as usize];
    for c in 0..total as u32 {
        let root = find(&mut parent, c) as usize;
        if label_of_root[root] == u32::MAX {
            label_of_root[root] = count;
            count += 1;
        }
        labels[c as usize] = label_of_root[root];
    }
    (labels, count as usize)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModelReport {
    pub p: u32,
    pub r: usize,
    pub group_order: usize,
    /// Orbits of G^r under (x, y)·(a_i) = (x a_i y⁻¹).
    pub b_orbits: usize,
    /// Orbits of G^{r−1} under simultaneous conjugation.
    pub c_orbits: usize,
    pub phi_well_defined: bool,
    pub psi_well_defined: bool,
    pub mutually_inverse: bool,
    /// The braid moves descend to orbits and Φ intertwines them.
    pub braid_equivariant: bool,
}

impl FiniteModelReport {
    pub fn all_pass(&self) -> bool {
        self.b_orbits == self.c_orbits
            && self.phi_well_defined
            && self.psi_well_defined
            && self.mutually_inverse
            && self.braid_equivariant
    }
}

/// Exhaustive comparison of the orbit sets on both sides over SL₂(F_P).
pub fn finite_model_compare<const P: u32>(r: usize, budget: u64) -> Result<FiniteModelReport> {
    if r < 2 {
        return Err(Error::Dimension("finite model needs r >= 2".into()));
    }
    let g = FiniteGroup::<P>::new();
    let n = g.n() as u64;
    let size = n.checked_pow(r as u32).filter(|&s| s <= budget && s < u32::MAX as u64);
    let Some(_) = size else {
        return Err(Error::Budget(format!(
            "|SL2(F_{P})|^{r} = {n}^{r} exceeds the budget of {budget} states"
        )));
    };
    let bc = Codec { n, len: r };
    let cc = Codec { n, len: r - 1 };

    let (b_lab, b_orbits) = orbit_labels(bc.total(), |code| {
        let t = bc.decode(code);
        let mut out = Vec::with_capacity(4);
        for &s in &g.gens {
            out.push(bc.encode(&t.iter().map(|&a| g.m(s, a)).collect::<Vec<_>>()));
            out.push(bc.encode(&t.iter().map(|&a| g.m(a, g.i(s))).collect::<Vec<_>>()));
        }
        out
    });
    let (c_lab, c_orbits) = orbit_labels(cc.total(), |code| {
        let t = cc.decode(code);
        g.gens
            .iter()
            .map(|&s| cc.encode(&t.iter().map(|&b| g.m(g.m(s, b), g.i(s))).collect::<Vec<_>>()))
            .collect()
    });

    let phi_idx = |a: &[u32]| -> Vec<u32> { a.windows(2).map(|w| g.m(w[0], g.i(w[1]))).collect() };
    let psi_idx = |b: &[u32]| -> Vec<u32> {
        let id = g.elems.binary_search(&Mat2::identity()).expect("identity") as u32;
        let mut out = vec![id];
        for &m in b.iter().rev() {
            let next = g.m(m, *out.last().expect("nonempty"));
            out.push(next);
        }
        out.reverse();
        out
    };
    // Core quandle move on G^r and the RepTuple move, on indices.
    let b_move = |gen: Generator, a: &[u32]| -> Vec<u32> {
        let i = gen.index - 1;
        let mut out = a.to_vec();
        if gen.inverse {
            out[i] = a[i + 1];
            out[i + 1] = g.m(g.m(a[i + 1], g.i(a[i])), a[i + 1]);
        } else {
            out[i] = g.m(g.m(a[i], g.i(a[i + 1])), a[i]);
            out[i + 1] = a[i];
        }
        out
    };
    let c_move = |gen: Generator, b: &[u32]| -> Vec<u32> {
        let i = gen.index - 1;
        let mut out = b.to_vec();
        let bi = b[i];
        let (left, right) = if gen.inverse { (bi, g.i(bi)) } else { (g.i(bi), bi) };
        if i >= 1 {
            out[i - 1] = g.m(b[i - 1], left);
        }
        if i + 1 < b.len() {
            out[i + 1] = g.m(right, b[i + 1]);
        }
        out
    };
    let gens = Generator::all(r);

    // Per-B-orbit data: Φ-image label, and the label of σ·orbit for each move.
    let per_b: Vec<(u32, u32, Vec<u32>, bool)> = (0..bc.total())
        .into_par_iter()
        .map(|code| {
            let a = bc.decode(code);
            let phi_a = phi_idx(&a);
            let phi_lab = c_lab[cc.encode(&phi_a) as usize];
            let moves: Vec<u32> = gens
                .iter()
                .map(|&m| b_lab[bc.encode(&b_move(m, &a)) as usize])
                .collect();
            let intertwines = gens.iter().all(|&m| {
                let lhs = c_lab[cc.encode(&phi_idx(&b_move(m, &a))) as usize];
                let rhs = c_lab[cc.encode(&c_move(m, &phi_a)) as usize];
                lhs == rhs
            });
            (b_lab[code as usize], phi_lab, moves, intertwines)
        })
        .collect();

    let mut phi_of = vec![u32::MAX; b_orbits];
    let mut moves_of: Vec<Option<Vec<u32>>> = vec![None; b_orbits];
    let mut phi_well_defined = true;
    let mut braid_equivariant = true;
    for (lab, phi_lab, moves, ok) in per_b {
        let slot = &mut phi_of[lab as usize];
        if *slot == u32::MAX {
            *slot = phi_lab;
        } else if *slot != phi_lab {
            phi_well_defined = false;
        }
        match &moves_of[lab as usize] {
            None => moves_of[lab as usize] = Some(moves),
            Some(prev) if *prev != moves => braid_equivariant = false,
            _ => {}
        }
        braid_equivariant &= ok;
    }

    let psi_labels: Vec<(u32, u32)> = (0..cc.total())
        .into_par_iter()
        .map(|code| {
            let b = cc.decode(code);
            (c_lab[code as usize], b_lab[bc.encode(&psi_idx(&b)) as usize])
        })
        .collect();
    let mut psi_of = vec![u32::MAX; c_orbits];
    let mut psi_well_defined = true;
    for (lab, img) in psi_labels {
        let slot = &mut psi_of[lab as usize];
        if *slot == u32::MAX {
            *slot = img;
        } else if *slot != img {
            psi_well_defined = false;
        }
    }
    let mutually_inverse = b_orbits == c_orbits
        && (0..b_orbits).all(|o| psi_of[phi_of[o] as usize] == o as u32)
        && (0..c_orbits).all(|o| phi_of[psi_of[o] as usize] == o as u32);

    Ok(FiniteModelReport {
        p: P,
        r,
        group_order: g.n(),
        b_orbits,
        c_orbits,
        phi_well_defined,
        psi_well_defined,
        mutually_inverse,
        braid_equivariant,
    })
}

/// [`finite_model_compare`] for p ∈ {2, 3, 5, 7}.
pub fn finite_model_compare_dyn(p: u32, r: usize, budget: u64) -> Result<FiniteModelReport> {
    match p {
        2 => finite_model_compare::<2>(r, budget),
        3 => finite_model_compare::<3>(r, budget),
        5 => finite_model_compare::<5>(r, budget),
        7 => finite_model_compare::<7>(r, budget),
        _ => Err(Error::Unsupported(format!("finite models are built for p in {{2,3,5,7}}, not {p}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Int};

    fn u() -> Mat2<Int> {
        Mat2::upper()
    }

    fn l() -> Mat2<Int> {
        Mat2::lower()
    }

    #[test]
    fn transport_examples() {
        let one = Mat2::<Int>::identity();
        let a = GTuple::new(vec![one.clone(); 3]).unwrap();
        assert_eq!(phi(&a).unwrap(), RepTuple::identity(3));
        assert_eq!(psi(&RepTuple::<Int>::identity(3)), a);
        let a = GTuple::new(vec![u(), one.clone(), one.clone()]).unwrap();
        assert_eq!(phi(&a).unwrap().elems(), &[u(), one]);
        assert!(GTuple::new(vec![Mat2::<Int>::from_i64(2, 0, 0, 1)]).is_err());
    }

    #[test]
    fn rank3_moves_and_traces() {
        let b = RepTuple::new(vec![u(), l()]).unwrap();
        let s1 = c_braid_act(Generator::pos(1), &b).unwrap();
        assert_eq!(s1.elems(), &[u(), &u() * &l()]);
        let s2 = c_braid_act(Generator::pos(2), &b).unwrap();
        assert_eq!(s2.elems(), &[&u() * &l().adj(), l()]);
        assert!(c_braid_act(Generator::pos(3), &b).is_err());

        let s = rep_to_stokes(&b);
        assert_eq!(s.upper(), vec![int(2), int(3), int(2)]);
        assert_eq!(boundary_monodromy(&b), BoundaryTraces::Odd { k: int(3) });
        let params = SurfaceParams::from(&boundary_monodromy(&b));
        assert!(surface_membership(&s, &params).unwrap());

        let id = RepTuple::<Int>::identity(3);
        assert_eq!(rep_to_stokes(&id).upper(), vec![int(2); 3]);
        assert_eq!(boundary_monodromy(&id), BoundaryTraces::Odd { k: int(2) });
        assert_eq!(
            boundary_monodromy(&RepTuple::<Int>::identity(4)),
            BoundaryTraces::Even { k1: int(2), k2: int(2) }
        );
    }

    #[test]
    fn membership_examples() {
        let t = |x, y, z| StokesMat::from_upper(3, vec![int(x), int(z), int(y)]).unwrap();
        assert!(surface_membership(&t(3, 3, 3), &SurfaceParams::Rank3 { k: int(-2) }).unwrap());
        assert!(surface_membership(&t(1, 1, 1), &SurfaceParams::Rank3 { k: int(0) }).unwrap());
        assert!(!surface_membership(&t(1, 1, 1), &SurfaceParams::Rank3 { k: int(1) }).unwrap());
        let ones = StokesMat::from_upper(4, vec![int(1); 6]).unwrap();
        let p = SurfaceParams::Rank4 { e1: int(1), e2: int(-1) };
        assert!(surface_membership(&ones, &p).unwrap());
        assert!(surface_membership(&StokesMat::<Int>::identity(5), &p).is_err());
    }

    #[test]
    fn trace_identity_examples() {
        let rep = trace_identity_check(&[(Mat2::<Int>::identity(), Mat2::identity()), (u(), l())]);
        assert_eq!(rep, TraceIdentityReport { checked: 2, failures: 0 });
    }

    #[test]
    fn small_finite_models() {
        let rep = finite_model_compare::<2>(2, 1_000_000).unwrap();
        assert_eq!(rep.group_order, 6);
        assert!(rep.all_pass(), "{rep:?}");
        let rep = finite_model_compare::<3>(2, 1_000_000).unwrap();
        assert_eq!(rep.group_order, 24);
        assert!(rep.all_pass(), "{rep:?}");
        assert!(matches!(finite_model_compare::<7>(3, 10_000_000), Err(Error::Budget(_))));
    }
}
