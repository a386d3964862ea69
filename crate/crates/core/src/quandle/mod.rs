//! Quandles, the braid action on tuples, pseudo-Coxeter products and the
//! orbit engine.

pub mod braid;
pub mod orbit;

use std::fmt::Debug;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::exact::{Field, Int, Mat2, Ring};

pub use braid::{BraidAction, BraidWord, Generator};
pub use orbit::{orbit_enumerate, MoveSystem, OrbitEntry, OrbitStore};

/// A set with a left-translation u◁v whose translations are bijective.
pub trait Quandle: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    /// u◁v
    fn op(&self, u: &Self::Elem, v: &Self::Elem) -> Self::Elem;

    /// The unique y with u◁y = z.
    fn op_inv(&self, u: &Self::Elem, z: &Self::Elem) -> Self::Elem;
}

/// Per-triple result of [`axiom_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub idempotent: bool,
    pub invertible: bool,
    pub distributive: bool,
}

impl AxiomResult {
    pub fn all(&self) -> bool {
        self.idempotent && self.invertible && self.distributive
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(AxiomResult::all)
    }

    /// Failure counts for (idempotence, invertibility, self-distributivity).
    pub fn failures(&self) -> [usize; 3] {
        let mut f = [0; 3];
        for r in &self.results {
            f[0] += usize::from(!r.idempotent);
            f[1] += usize::from(!r.invertible);
            f[2] += usize::from(!r.distributive);
        }
        f
    }
}

/// Evaluates the three quandle axioms on each sample (u, v, w).
///
/// Invertibility is tested as u◁(u◁⁻¹w) = w and u◁⁻¹(u◁w) = w.
pub fn axiom_check<Q: Quandle>(model: &Q, samples: &[(Q::Elem, Q::Elem, Q::Elem)]) -> AxiomReport {
    let results = samples
        .iter()
        .map(|(u, v, w)| {
            let idempotent = model.op(u, u) == *u;
            let invertible = model.op(u, &model.op_inv(u, w)) == *w
                && model.op_inv(u, &model.op(u, w)) == *w;
            let lhs = model.op(u, &model.op(v, w));
            let rhs = model.op(&model.op(u, v), &model.op(u, w));
            AxiomResult {
                idempotent,
                invertible,
                distributive: lhs == rhs,
            }
        })
        .collect();
    AxiomReport { results }
}

/// Z/n with u◁v = 2u − v.
#[derive(Clone, Copy, Debug)]
pub struct Dihedral {
    pub n: u64,
}

impl Quandle for Dihedral {
    type Elem = u64;
    fn op(&self, u: &u64, v: &u64) -> u64 {
        (2 * (u % self.n) + self.n - v % self.n) % self.n
    }
    fn op_inv(&self, u: &u64, z: &u64) -> u64 {
        self.op(u, z)
    }
}

/// A group given by its multiplication, inverse and identity.
pub trait Group: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn identity(&self) -> Self::Elem;
}

/// (Z, +)
#[derive(Clone, Copy, Debug, Default)]
pub struct AdditiveZ;

impl Group for AdditiveZ {
    type Elem = Int;
    fn mul(&self, a: &Int, b: &Int) -> Int {
        a + b
    }
    fn inv(&self, a: &Int) -> Int {
        -a
    }
    fn identity(&self) -> Int {
        Int::from(0)
    }
}

/// SL2 over a commutative ring; inverses are adjugates.
#[derive(Debug)]
pub struct Sl2<T>(PhantomData<T>);

impl<T> Sl2<T> {
    pub fn new() -> Self {
        Sl2(PhantomData)
    }
}

impl<T> Default for Sl2<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Sl2<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> Copy for Sl2<T> {}

impl<T: Ring> Group for Sl2<T> {
    type Elem = Mat2<T>;
    fn mul(&self, a: &Mat2<T>, b: &Mat2<T>) -> Mat2<T> {
        a * b
    }
    fn inv(&self, a: &Mat2<T>) -> Mat2<T> {
        a.adj()
    }
    fn identity(&self) -> Mat2<T> {
        Mat2::identity()
    }
}

/// Multiplicative group of a field (callers keep elements nonzero).
#[derive(Debug)]
pub struct Units<F>(PhantomData<F>);

impl<F> Units<F> {
    pub fn new() -> Self {
        Units(PhantomData)
    }
}

impl<F> Default for Units<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Group for Units<F> {
    type Elem = F;
    fn mul(&self, a: &F, b: &F) -> F {
        a.clone() * b.clone()
    }
    fn inv(&self, a: &F) -> F {
        F::one() / a.clone()
    }
    fn identity(&self) -> F {
        F::one()
    }
}

/// The core quandle of a group: u◁v = u v⁻¹ u.
#[derive(Clone, Copy, Debug, Default)]
pub struct Core<G>(pub G);

impl<G: Group> Quandle for Core<G> {
    type Elem = G::Elem;
    fn op(&self, u: &G::Elem, v: &G::Elem) -> G::Elem {
        let g = &self.0;
        g.mul(&g.mul(u, &g.inv(v)), u)
    }
    fn op_inv(&self, u: &G::Elem, z: &G::Elem) -> G::Elem {
        self.op(u, z)
    }
}

/// The braid group acting on r-tuples of a quandle:
/// σ_i: (…, x_i, x_{i+1}, …) ↦ (…, x_i◁x_{i+1}, x_i, …).
#[derive(Clone, Copy, Debug)]
pub struct Tuples<Q>(pub Q);

impl<Q: Quandle> BraidAction for Tuples<Q> {
    type Point = Vec<Q::Elem>;

    fn strands(&self, p: &Self::Point) -> usize {
        p.len()
    }

    fn apply_unchecked(&self, g: Generator, p: &Self::Point) -> Self::Point {
        let i = g.index - 1;
        let mut out = p.clone();
        if g.inverse {
            // σ_i⁻¹: (a, b) ↦ (b, b◁⁻¹a)
            out[i] = p[i + 1].clone();
            out[i + 1] = self.0.op_inv(&p[i + 1], &p[i]);
        } else {
            out[i] = self.0.op(&p[i], &p[i + 1]);
            out[i + 1] = p[i].clone();
        }
        out
    }
}

/// Applies a braid word to a tuple of quandle elements.
pub fn braid_act<Q: Quandle>(word: &BraidWord, tuple: &[Q::Elem], model: &Q) -> Result<Vec<Q::Elem>> {
    if tuple.len() < 2 && !word.is_empty() {
        return Err(Error::IndexRange {
            index: word.0[0].index,
            strands: tuple.len(),
        });
    }
    let action = Tuples(RefModel(model));
    action.act_word(word, &tuple.to_vec())
}

struct RefModel<'a, Q>(&'a Q);

impl<Q: Quandle> Quandle for RefModel<'_, Q> {
    type Elem = Q::Elem;
    fn op(&self, u: &Q::Elem, v: &Q::Elem) -> Q::Elem {
        self.0.op(u, v)
    }
    fn op_inv(&self, u: &Q::Elem, z: &Q::Elem) -> Q::Elem {
        self.0.op_inv(u, z)
    }
}

/// Element of (G × G) ⋊ C₂, where ι(a, b) = (b, a)ι.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElem<E> {
    pub left: E,
    pub right: E,
    pub odd: bool,
}

impl<E> WreathElem<E> {
    pub fn parity(&self) -> u8 {
        u8::from(self.odd)
    }
}

/// Product in the wreath group over `g`.
pub fn wreath_mul<G: Group>(g: &G, x: &WreathElem<G::Elem>, y: &WreathElem<G::Elem>) -> WreathElem<G::Elem> {
    let (left, right) = if x.odd {
        (g.mul(&x.left, &y.right), g.mul(&x.right, &y.left))
    } else {
        (g.mul(&x.left, &y.left), g.mul(&x.right, &y.right))
    };
    WreathElem {
        left,
        right,
        odd: x.odd ^ y.odd,
    }
}

/// A quandle embedded in an ambient group as a conjugation-closed subset,
/// so that u◁v = j(u) j(v) j(u)⁻¹.
pub trait CoxeterModel: Quandle {
    type Ambient: Clone + PartialEq + Debug + Send + Sync;
    fn embed(&self, x: &Self::Elem) -> Self::Ambient;
    fn ambient_mul(&self, a: &Self::Ambient, b: &Self::Ambient) -> Self::Ambient;
}

impl<G: Group> CoxeterModel for Core<G> {
    type Ambient = WreathElem<G::Elem>;

    /// a ↦ (a, a⁻¹)ι
    fn embed(&self, a: &G::Elem) -> Self::Ambient {
        WreathElem {
            left: a.clone(),
            right: self.0.inv(a),
            odd: true,
        }
    }

    fn ambient_mul(&self, a: &Self::Ambient, b: &Self::Ambient) -> Self::Ambient {
        wreath_mul(&self.0, a, b)
    }
}

/// j(x₁)···j(x_r) in the ambient group.
pub fn pseudo_coxeter<Q: CoxeterModel>(model: &Q, tuple: &[Q::Elem]) -> Result<Q::Ambient> {
    let (first, rest) = tuple
        .split_first()
        .ok_or_else(|| Error::Invalid("pseudo-Coxeter product of an empty tuple".into()))?;
    Ok(rest
        .iter()
        .fold(model.embed(first), |acc, x| model.ambient_mul(&acc, &model.embed(x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn core_z_examples() {
        let q = Core(AdditiveZ);
        let w: BraidWord = "s1".parse().unwrap();
        assert_eq!(braid_act(&w, &[int(0), int(1)], &q).unwrap(), vec![int(-1), int(0)]);
        let c = pseudo_coxeter(&q, &[int(3), int(1)]).unwrap();
        assert_eq!((c.parity(), c.left, c.right), (0, int(2), int(-2)));
        let c = pseudo_coxeter(&q, &[int(5)]).unwrap();
        assert_eq!((c.parity(), c.left, c.right), (1, int(5), int(-5)));
        assert!(pseudo_coxeter(&q, &[]).is_err());
    }

    #[test]
    fn dihedral_axioms_exhaustive() {
        let q = Dihedral { n: 3 };
        let samples: Vec<_> = (0..27u64).map(|t| (t % 3, (t / 3) % 3, t / 9)).collect();
        let rep = axiom_check(&q, &samples);
        assert_eq!(rep.results.len(), 27);
        assert!(rep.all_pass());
    }

    #[test]
    fn out_of_range_word() {
        let q = Core(AdditiveZ);
        let w: BraidWord = "s2".parse().unwrap();
        assert!(braid_act(&w, &[int(0), int(1)], &q).is_err());
        assert_eq!(
            braid_act(&BraidWord::empty(), &[int(4), int(1)], &q).unwrap(),
            vec![int(4), int(1)]
        );
    }
}
