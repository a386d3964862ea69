//! Upper unitriangular (Stokes) matrices and their braid group action.

use std::marker::PhantomData;

use num_traits::Zero;

use crate::clifford::SphereVec;
use crate::error::{Error, Result};
use crate::exact::{charpoly, discriminant, ExactRank, Int, Mat, Mat2, Rat, Ring, UniPoly};
use crate::quandle::{BraidAction, BraidWord, Generator};

/// r×r upper unitriangular matrix, r ≥ 2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StokesMat<T> {
    m: Mat<T>,
}

impl<T: Ring> StokesMat<T> {
    pub fn new(m: Mat<T>) -> Result<Self> {
        if !m.is_square() || m.rows() < 2 {
            return Err(Error::Dimension(format!(
                "Stokes matrices are square with r >= 2, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        if !m.is_upper_unitriangular() {
            return Err(Error::Invalid("matrix is not upper unitriangular".into()));
        }
        Ok(StokesMat { m })
    }

    pub fn identity(r: usize) -> Self {
        StokesMat {
            m: Mat::identity(r),
        }
    }

    /// From the strictly-upper entries in row-major order
    /// (s₁₂, s₁₃, …, s₁ᵣ, s₂₃, …).
    pub fn from_upper(r: usize, entries: Vec<T>) -> Result<Self> {
        if r < 2 || entries.len() != r * (r - 1) / 2 {
            return Err(Error::Dimension(format!(
                "{} upper entries for r = {r}",
                entries.len()
            )));
        }
        let mut m = Mat::identity(r);
        let mut it = entries.into_iter();
        for i in 0..r {
            for j in i + 1..r {
                m.set(i, j, it.next().expect("counted"));
            }
        }
        Ok(StokesMat { m })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(Mat::from_i64_rows(rows)?)
    }

    pub fn r(&self) -> usize {
        self.m.rows()
    }

    /// s_ij with 1-based indices.
    pub fn s(&self, i: usize, j: usize) -> &T {
        self.m.get(i - 1, j - 1)
    }

    pub fn upper(&self) -> Vec<T> {
        let r = self.r();
        (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .map(|(i, j)| self.m.get(i, j).clone())
            .collect()
    }

    pub fn as_mat(&self) -> &Mat<T> {
        &self.m
    }

    pub fn into_mat(self) -> Mat<T> {
        self.m
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> StokesMat<U> {
        StokesMat { m: self.m.map(f) }
    }

    /// s + sᵀ
    pub fn sym(&self) -> Mat<T> {
        self.m.add(&self.m.transpose()).expect("square")
    }

    pub fn inverse(&self) -> Mat<T> {
        self.m.unitriangular_inverse().expect("unitriangular")
    }

    /// s⁻¹ sᵀ
    pub fn serre(&self) -> Mat<T> {
        self.inverse().mul(&self.m.transpose()).expect("square")
    }

    /// σ_g via the 2×2 block conjugation, without a range check.
    fn apply(&self, g: Generator) -> Self {
        let i = g.index - 1;
        let r = self.r();
        let x = self.m.get(i, i + 1).clone();
        let mut m = self.m.clone();
        // Rows (A·s), then columns (·Aᵀ).
        for c in 0..r {
            let (a, b) = (self.m.get(i, c).clone(), self.m.get(i + 1, c).clone());
            let (na, nb) = if g.inverse {
                (b.clone(), x.clone() * b - a)
            } else {
                (x.clone() * a.clone() - b, a)
            };
            m.set(i, c, na);
            m.set(i + 1, c, nb);
        }
        let rows = m.clone();
        for row in 0..r {
            let (a, b) = (rows.get(row, i).clone(), rows.get(row, i + 1).clone());
            let (na, nb) = if g.inverse {
                (b.clone(), x.clone() * b - a)
            } else {
                (x.clone() * a.clone() - b, a)
            };
            m.set(row, i, na);
            m.set(row, i + 1, nb);
        }
        StokesMat { m }
    }

    pub fn act(&self, g: Generator) -> Result<Self> {
        g.check(self.r())?;
        Ok(self.apply(g))
    }

    pub fn act_word(&self, w: &BraidWord) -> Result<Self> {
        w.check(self.r())?;
        Ok(w.0.iter().fold(self.clone(), |s, &g| s.apply(g)))
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for StokesMat<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.m.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// σ_i^{±1}: s ↦ A s Aᵀ with A the identity except for the block
/// [[s_{i,i+1}, −1], [1, 0]] in rows/columns i, i+1 (inverse block for Minus).
pub fn stokes_braid_act<T: Ring>(i: usize, sign: Sign, s: &StokesMat<T>) -> Result<StokesMat<T>> {
    s.act(Generator {
        index: i,
        inverse: sign == Sign::Minus,
    })
}

/// The braid action on Stokes matrices over the ring `T`.
#[derive(Debug)]
pub struct StokesAction<T>(PhantomData<T>);

impl<T> StokesAction<T> {
    pub fn new() -> Self {
        StokesAction(PhantomData)
    }
}

impl<T> Default for StokesAction<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Ring> BraidAction for StokesAction<T> {
    type Point = StokesMat<T>;
    fn strands(&self, p: &StokesMat<T>) -> usize {
        p.r()
    }
    fn apply_unchecked(&self, g: Generator, p: &StokesMat<T>) -> StokesMat<T> {
        p.apply(g)
    }
}

/// p(λ) = det(λI + s⁻¹sᵀ); reciprocity is checked.
pub fn coxeter_charpoly<T: Ring>(s: &StokesMat<T>) -> Result<UniPoly<T>> {
    let p = charpoly(&s.serre().neg())?;
    if !p.is_palindromic() {
        return Err(Error::Internal(format!("non-reciprocal Coxeter polynomial {p:?}")));
    }
    Ok(p)
}

/// det(λI − s⁻¹sᵀ) = p(−λ)·(−1)^r, the other sign convention.
pub fn coxeter_charpoly_alt<T: Ring>(s: &StokesMat<T>) -> Result<UniPoly<T>> {
    charpoly(&s.serre())
}

/// k = x² + y² + z² − xyz − 2 with (x, y, z) = (s₁₂, s₂₃, s₁₃).
pub fn k_invariant<T: Ring>(x: &T, y: &T, z: &T) -> T {
    x.clone() * x.clone() + y.clone() * y.clone() + z.clone() * z.clone()
        - x.clone() * y.clone() * z.clone()
        - T::from_i64(2)
}

/// (e₁, e₂) = (k₁ + k₂, k₁k₂) for
/// s = [[1,a,e,d],[0,1,b,f],[0,0,1,c],[0,0,0,1]].
pub fn rank4_invariants<T: Ring>(s: &StokesMat<T>) -> (T, T) {
    let g = |i, j| s.s(i, j).clone();
    let (a, b, c) = (g(1, 2), g(2, 3), g(3, 4));
    let (d, e, f) = (g(1, 4), g(1, 3), g(2, 4));
    let e1 = a.clone() * c.clone() + b.clone() * d.clone() - e.clone() * f.clone();
    let sq = |t: &T| t.clone() * t.clone();
    let e2 = sq(&a) + sq(&b) + sq(&c) + sq(&d) + sq(&e) + sq(&f)
        - a.clone() * b.clone() * e.clone()
        - a.clone() * d.clone() * f.clone()
        - b.clone() * c.clone() * f.clone()
        - c.clone() * d.clone() * e.clone()
        + a * b * c * d
        - T::from_i64(4);
    (e1, e2)
}

/// (λ+1)(λ² − kλ + 1)
pub fn rank3_poly<T: Ring>(k: &T) -> UniPoly<T> {
    let one = T::one();
    UniPoly::new(vec![one.clone(), one.clone() - k.clone(), one.clone() - k.clone(), one])
}

/// λ⁴ − e₂λ³ + (e₁² − 2e₂ − 2)λ² − e₂λ + 1
pub fn rank4_poly<T: Ring>(e1: &T, e2: &T) -> UniPoly<T> {
    let mid = e1.clone() * e1.clone() - T::from_i64(2) * e2.clone() - T::from_i64(2);
    UniPoly::new(vec![T::one(), -e2.clone(), mid, -e2.clone(), T::one()])
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantRecord<T> {
    pub r: usize,
    pub k: Option<T>,
    pub e1: Option<T>,
    pub e2: Option<T>,
    pub p: UniPoly<T>,
    /// det(λI − s⁻¹sᵀ)
    pub p_alt: UniPoly<T>,
}

/// Closed-form invariants for r ∈ {3, 4}, cross-checked against the
/// characteristic polynomial; for other r only p is filled in.
pub fn invariants<T: Ring>(s: &StokesMat<T>) -> Result<InvariantRecord<T>> {
    let p = coxeter_charpoly(s)?;
    let p_alt = coxeter_charpoly_alt(s)?;
    let mut rec = InvariantRecord {
        r: s.r(),
        k: None,
        e1: None,
        e2: None,
        p,
        p_alt,
    };
    match s.r() {
        3 => {
            let k = k_invariant(s.s(1, 2), s.s(2, 3), s.s(1, 3));
            if rank3_poly(&k) != rec.p {
                return Err(Error::Internal(format!(
                    "k = {k:?} disagrees with p = {:?}",
                    rec.p
                )));
            }
            rec.k = Some(k);
        }
        4 => {
            let (e1, e2) = rank4_invariants(s);
            if rank4_poly(&e1, &e2) != rec.p {
                return Err(Error::Internal(format!(
                    "(e1, e2) = ({e1:?}, {e2:?}) disagrees with p = {:?}",
                    rec.p
                )));
            }
            rec.e1 = Some(e1);
            rec.e2 = Some(e2);
        }
        _ => {}
    }
    Ok(rec)
}

/// disc(p) of the Coxeter polynomial.
pub fn coxeter_discriminant(s: &StokesMat<Int>) -> Result<Int> {
    discriminant(&coxeter_charpoly(s)?)
}

/// s_ij = 2⟨v_i, v_j⟩ for i < j.
pub fn gram_from_sphere(vs: &[SphereVec]) -> Result<StokesMat<Rat>> {
    let r = vs.len();
    if r < 2 {
        return Err(Error::Dimension("need at least two sphere points".into()));
    }
    let mut entries = Vec::with_capacity(r * (r - 1) / 2);
    for i in 0..r {
        for j in i + 1..r {
            entries.push(vs[i].dot(&vs[j])? * Rat::from_i64(2));
        }
    }
    StokesMat::from_upper(r, entries)
}

/// rank(s + sᵀ)
pub fn rank_filtration_level<T: Ring>(s: &StokesMat<T>) -> usize
where
    Mat<T>: ExactRank,
{
    s.sym().rank_exact()
}

/// Basis-coordinate reflection R_i = −I + e_i·row_i(s + sᵀ).
pub fn reflection_matrix<T: Ring>(s: &StokesMat<T>, i: usize) -> Mat<T> {
    let sym = s.sym();
    let r = s.r();
    let mut m = Mat::<T>::identity(r).neg();
    for j in 0..r {
        let v = m.get(i - 1, j).clone() + sym.get(i - 1, j).clone();
        m.set(i - 1, j, v);
    }
    m
}

#[derive(Clone, Debug)]
pub struct CoxeterIdentityReport {
    pub r: usize,
    /// s·R₁···R_r
    pub lhs: Mat<Rat>,
    /// (−1)^{r+1} sᵀ
    pub rhs: Mat<Rat>,
    pub holds: bool,
}

/// Checks s·R₁···R_r = (−1)^{r+1} sᵀ; requires det(s + sᵀ) ≠ 0.
pub fn coxeter_identity_check(s: &StokesMat<Rat>) -> Result<CoxeterIdentityReport> {
    let r = s.r();
    if s.sym().rank_exact() < r {
        return Err(Error::Degenerate("s + s^T is singular".into()));
    }
    let mut prod = s.as_mat().clone();
    for i in 1..=r {
        prod = prod.mul(&reflection_matrix(s, i))?;
    }
    let t = s.as_mat().transpose();
    let rhs = if r % 2 == 0 { t.neg() } else { t };
    Ok(CoxeterIdentityReport {
        r,
        holds: prod == rhs,
        lhs: prod,
        rhs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorVariant {
    /// u ↦ a·adj(u)·b
    Adjugate,
    /// u ↦ a·u·b
    Product,
}

#[derive(Clone, Debug)]
pub struct OperatorCharpolyReport<T> {
    pub matrix: Mat<T>,
    pub charpoly: UniPoly<T>,
    pub closed_form: UniPoly<T>,
    pub agree: bool,
}

/// Characteristic polynomial of a linear map on Mat₂ from its 4×4 matrix in
/// the basis E₁₁, E₁₂, E₂₁, E₂₂, next to the trace closed form.
pub fn operator_charpoly<T: Ring>(
    a: &Mat2<T>,
    b: &Mat2<T>,
    variant: OperatorVariant,
) -> Result<OperatorCharpolyReport<T>> {
    if !a.is_unimodular() || !b.is_unimodular() {
        return Err(Error::Invalid("operator factors must have determinant 1".into()));
    }
    let basis = [
        Mat2::from_i64(1, 0, 0, 0),
        Mat2::from_i64(0, 1, 0, 0),
        Mat2::from_i64(0, 0, 1, 0),
        Mat2::from_i64(0, 0, 0, 1),
    ];
    let mut matrix = Mat::zeros(4, 4);
    for (j, e) in basis.iter().enumerate() {
        let img = match variant {
            OperatorVariant::Adjugate => &(a * &e.adj()) * b,
            OperatorVariant::Product => &(a * e) * b,
        };
        for (i, v) in img.coords().into_iter().enumerate() {
            matrix.set(i, j, v);
        }
    }
    let charpoly = charpoly(&matrix)?;
    let closed_form = match variant {
        OperatorVariant::Adjugate => {
            let k = -(a * &b.adj()).trace();
            let quad = UniPoly::new(vec![T::one(), -k, T::one()]);
            quad * UniPoly::new(vec![T::one(), T::one()]) * UniPoly::new(vec![-T::one(), T::one()])
        }
        OperatorVariant::Product => {
            let (k1, k2) = (a.trace(), b.trace());
            let p = k1.clone() * k2.clone();
            let mid = k1.clone() * k1 + k2.clone() * k2 - T::from_i64(2);
            UniPoly::new(vec![T::one(), -p.clone(), mid, -p, T::one()])
        }
    };
    Ok(OperatorCharpolyReport {
        agree: charpoly == closed_form,
        matrix,
        charpoly,
        closed_form,
    })
}

/// Integer Stokes matrix with entries drawn uniformly from [−bound, bound].
pub fn random_stokes(rng: &mut impl rand::Rng, r: usize, bound: i64) -> StokesMat<Int> {
    let n = r * (r - 1) / 2;
    StokesMat::from_upper(
        r,
        (0..n).map(|_| Int::from(rng.gen_range(-bound..=bound))).collect(),
    )
    .expect("sized")
}

impl StokesMat<Int> {
    pub fn to_rat(&self) -> StokesMat<Rat> {
        self.map(|x| Rat::from_integer(x.clone()))
    }

    pub fn max_abs(&self) -> Int {
        use num_traits::Signed;
        self.upper()
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }

    pub fn sum_squares(&self) -> Int {
        self.upper().iter().map(|x| x * x).sum()
    }
}

impl<T: Ring> StokesMat<T> {
    pub fn is_identity(&self) -> bool {
        self.upper().iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn sm(rows: &[&[i64]]) -> StokesMat<Int> {
        StokesMat::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn sigma1_rank3_example() {
        let s = sm(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        let t = stokes_braid_act(1, Sign::Plus, &s).unwrap();
        assert_eq!(t, sm(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]));
        assert_eq!(stokes_braid_act(1, Sign::Minus, &t).unwrap(), s);
        assert!(stokes_braid_act(3, Sign::Plus, &s).is_err());
    }

    #[test]
    fn coxeter_polys() {
        let id = StokesMat::<Int>::identity(3);
        assert_eq!(coxeter_charpoly(&id).unwrap(), UniPoly::from_i64s(&[1, 3, 3, 1]));
        let s = sm(&[&[1, 3, 3], &[0, 1, 3], &[0, 0, 1]]);
        let rec = invariants(&s).unwrap();
        assert_eq!(rec.k, Some(int(-2)));
        assert_eq!(rec.p, UniPoly::from_i64s(&[1, 3, 3, 1]));
        let d = sm(&[&[1, 2, 2, 4], &[0, 1, 0, 2], &[0, 0, 1, 2], &[0, 0, 0, 1]]);
        let rec = invariants(&d).unwrap();
        assert_eq!((rec.e1.clone().unwrap(), rec.e2.clone().unwrap()), (int(0), int(-4)));
        assert_eq!(rec.p, UniPoly::from_i64s(&[1, 4, 6, 4, 1]));
        assert_eq!(rec.p_alt, UniPoly::from_i64s(&[1, -4, 6, -4, 1]));
        let ones = StokesMat::from_upper(4, vec![int(1); 6]).unwrap();
        let rec = invariants(&ones).unwrap();
        assert_eq!((rec.e1.unwrap(), rec.e2.unwrap()), (int(1), int(-1)));
        assert_eq!(rec.p, UniPoly::from_i64s(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn coxeter_identity_rank2() {
        let s = sm(&[&[1, 1], &[0, 1]]).to_rat();
        assert_eq!(
            reflection_matrix(&s, 1),
            Mat::from_i64_rows(&[&[1, 1], &[0, -1]]).unwrap()
        );
        assert_eq!(
            reflection_matrix(&s, 2),
            Mat::from_i64_rows(&[&[-1, 0], &[1, 1]]).unwrap()
        );
        let rep = coxeter_identity_check(&s).unwrap();
        assert_eq!(rep.lhs, Mat::from_i64_rows(&[&[-1, 0], &[-1, -1]]).unwrap());
        assert!(rep.holds);
        let degenerate = sm(&[&[1, 2], &[0, 1]]).to_rat();
        assert!(matches!(coxeter_identity_check(&degenerate), Err(Error::Degenerate(_))));
    }

    #[test]
    fn operator_identity_cases() {
        let i = Mat2::<Int>::identity();
        let rep = operator_charpoly(&i, &i, OperatorVariant::Product).unwrap();
        assert_eq!(rep.charpoly, UniPoly::from_i64s(&[1, -4, 6, -4, 1]));
        assert!(rep.agree);
        let rep = operator_charpoly(&i, &i, OperatorVariant::Adjugate).unwrap();
        assert_eq!(rep.charpoly, UniPoly::from_i64s(&[-1, -2, 0, 2, 1]));
        assert!(rep.agree);
        let bad = Mat2::<Int>::from_i64(2, 0, 0, 1);
        assert!(operator_charpoly(&bad, &i, OperatorVariant::Product).is_err());
    }
}
