//! Sphere quandles over Q and the small Clifford matrix models M₁, M₂, M₄.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Mat2, Rat, Ring};
use crate::quandle::{CoxeterModel, Quandle};

/// Quadratic form on the coordinate space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuadForm {
    /// x₁² + … + x_m²
    Standard(usize),
    /// q(x, y) = xy
    Split2,
    /// det on 2×2 matrices, coordinates (a, b, c, d) row-major
    Det4,
}

impl QuadForm {
    pub fn dim(&self) -> usize {
        match self {
            QuadForm::Standard(m) => *m,
            QuadForm::Split2 => 2,
            QuadForm::Det4 => 4,
        }
    }

    /// Polarization ⟨u, v⟩ with ⟨v, v⟩ = q(v).
    pub fn bilinear(&self, u: &[Rat], v: &[Rat]) -> Rat {
        match self {
            QuadForm::Standard(_) => u.iter().zip(v).map(|(a, b)| a * b).sum(),
            QuadForm::Split2 => (&u[0] * &v[1] + &u[1] * &v[0]) / Rat::from_i64(2),
            QuadForm::Det4 => {
                (&u[0] * &v[3] + &u[3] * &v[0] - &u[1] * &v[2] - &u[2] * &v[1]) / Rat::from_i64(2)
            }
        }
    }

    pub fn q(&self, v: &[Rat]) -> Rat {
        self.bilinear(v, v)
    }
}

/// A point with q(v) = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SphereVec {
    form: QuadForm,
    coords: Vec<Rat>,
}

impl SphereVec {
    pub fn new(form: QuadForm, coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != form.dim() {
            return Err(Error::Dimension(format!(
                "{} coordinates for {form:?}",
                coords.len()
            )));
        }
        if form.q(&coords) != Rat::one() {
            return Err(Error::Invalid(format!("q(v) != 1 for {coords:?}")));
        }
        Ok(SphereVec { form, coords })
    }

    pub fn form(&self) -> QuadForm {
        self.form
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn from_sl2(x: &Mat2<Rat>) -> Result<Self> {
        Self::new(QuadForm::Det4, x.coords().to_vec())
    }

    pub fn to_mat2(&self) -> Option<Mat2<Rat>> {
        match self.form {
            QuadForm::Det4 => {
                let c = &self.coords;
                Some(Mat2::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()))
            }
            _ => None,
        }
    }

    /// ⟨self, other⟩ in the shared form.
    pub fn dot(&self, other: &SphereVec) -> Result<Rat> {
        if self.form != other.form {
            return Err(Error::Invalid(format!(
                "mismatched forms {:?} and {:?}",
                self.form, other.form
            )));
        }
        Ok(self.form.bilinear(&self.coords, &other.coords))
    }

    /// Image under x ↦ (sign_i · x_{perm_i}); valid for the standard form.
    pub fn signed_permute(&self, perm: &[usize], signs: &[i8]) -> Result<Self> {
        if !matches!(self.form, QuadForm::Standard(_)) {
            return Err(Error::Unsupported("signed permutations need the standard form".into()));
        }
        let coords = perm
            .iter()
            .zip(signs)
            .map(|(&p, &s)| {
                let c = self.coords[p].clone();
                if s < 0 {
                    -c
                } else {
                    c
                }
            })
            .collect();
        Self::new(self.form, coords)
    }
}

/// s_u(v) = 2⟨u, v⟩u − v.
pub fn sphere_reflect(u: &SphereVec, v: &SphereVec) -> Result<SphereVec> {
    let t = u.dot(v)? * Rat::from_i64(2);
    let coords = u
        .coords
        .iter()
        .zip(&v.coords)
        .map(|(a, b)| &t * a - b)
        .collect();
    Ok(SphereVec {
        form: u.form,
        coords,
    })
}

/// The reflection quandle on {q = 1}.
#[derive(Clone, Copy, Debug)]
pub struct SphereQuandle {
    pub form: QuadForm,
}

impl Quandle for SphereQuandle {
    type Elem = SphereVec;
    fn op(&self, u: &SphereVec, v: &SphereVec) -> SphereVec {
        sphere_reflect(u, v).expect("sphere quandle elements share one form")
    }
    fn op_inv(&self, u: &SphereVec, z: &SphereVec) -> SphereVec {
        self.op(u, z)
    }
}

/// Associative algebra used as a component of the pair models.
pub trait PairComponent: Clone + PartialEq + Debug + Send + Sync {
    fn unit() -> Self;
    fn times(&self, o: &Self) -> Self;
    fn try_inv(&self) -> Option<Self>;
}

impl PairComponent for Rat {
    fn unit() -> Self {
        Rat::one()
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl PairComponent for Mat2<Rat> {
    fn unit() -> Self {
        Mat2::identity()
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn try_inv(&self) -> Option<Self> {
        self.inverse()
    }
}

/// (left, right)·ι^parity in A² ⊕ A²ι with ι(a, b) = (b, a)ι.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PinPair<A> {
    pub left: A,
    pub right: A,
    pub odd: bool,
}

/// Element of M₂ = F² ⊕ F²ι.
pub type PinElem2 = PinPair<Rat>;
/// Element of M₄ = Mat₂² ⊕ Mat₂²ι.
pub type PinElem4 = PinPair<Mat2<Rat>>;

impl<A: PairComponent> PinPair<A> {
    pub fn one() -> Self {
        PinPair {
            left: A::unit(),
            right: A::unit(),
            odd: false,
        }
    }

    pub fn parity(&self) -> u8 {
        u8::from(self.odd)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (left, right) = if self.odd {
            (self.left.times(&o.right), self.right.times(&o.left))
        } else {
            (self.left.times(&o.left), self.right.times(&o.right))
        };
        PinPair {
            left,
            right,
            odd: self.odd ^ o.odd,
        }
    }

    /// ((a, b)ι)⁻¹ = (b⁻¹, a⁻¹)ι and (a, b)⁻¹ = (a⁻¹, b⁻¹).
    pub fn inverse(&self) -> Option<Self> {
        let (li, ri) = (self.left.try_inv()?, self.right.try_inv()?);
        Some(if self.odd {
            PinPair {
                left: ri,
                right: li,
                odd: true,
            }
        } else {
            PinPair {
                left: li,
                right: ri,
                odd: false,
            }
        })
    }
}

pub fn pin4_mul(a: &PinElem4, b: &PinElem4) -> PinElem4 {
    a.mul(b)
}

/// j(x) = (x, adj x)ι in M₄.
pub fn j4(u: &SphereVec) -> Result<PinElem4> {
    let x = u
        .to_mat2()
        .ok_or_else(|| Error::Invalid("M4 embedding needs the det form".into()))?;
    Ok(PinPair {
        right: x.adj(),
        left: x,
        odd: true,
    })
}

/// j(x, y) = (x, y)ι in M₂.
pub fn j2(u: &SphereVec) -> Result<PinElem2> {
    if u.form != QuadForm::Split2 {
        return Err(Error::Invalid("M2 embedding needs the split form".into()));
    }
    Ok(PinPair {
        left: u.coords[0].clone(),
        right: u.coords[1].clone(),
        odd: true,
    })
}

/// Both sides of s_u(v) = j(u) j(v) j(u)⁻¹.
#[derive(Clone, Debug)]
pub struct ReflectionReport {
    pub bilinear: SphereVec,
    pub conjugation: Option<SphereVec>,
    pub equal: bool,
}

/// Computes s_u(v) from the bilinear form and by conjugation in M₂ (split
/// form) or M₄ (det form), and compares.
pub fn verify_reflection_conjugation(u: &SphereVec, v: &SphereVec) -> Result<ReflectionReport> {
    let bilinear = sphere_reflect(u, v)?;
    let conjugation = match u.form {
        QuadForm::Det4 => {
            let ju = j4(u)?;
            let c = ju.mul(&j4(v)?).mul(&ju.inverse().ok_or_else(|| {
                Error::Internal("j(u) not invertible".into())
            })?);
            (c.odd && c.right == c.left.adj())
                .then(|| SphereVec::from_sl2(&c.left).ok())
                .flatten()
        }
        QuadForm::Split2 => {
            let ju = j2(u)?;
            let c = ju.mul(&j2(v)?).mul(&ju.inverse().ok_or_else(|| {
                Error::Internal("j(u) not invertible".into())
            })?);
            c.odd
                .then(|| SphereVec::new(QuadForm::Split2, vec![c.left, c.right]).ok())
                .flatten()
        }
        QuadForm::Standard(_) => {
            return Err(Error::Unsupported(
                "conjugation check is implemented for the split and det forms".into(),
            ))
        }
    };
    let equal = conjugation.as_ref() == Some(&bilinear);
    Ok(ReflectionReport {
        bilinear,
        conjugation,
        equal,
    })
}

/// Split-form sphere quandle, embedded in M₂.
#[derive(Clone, Copy, Debug, Default)]
pub struct SplitModel;

impl Quandle for SplitModel {
    type Elem = SphereVec;
    fn op(&self, u: &SphereVec, v: &SphereVec) -> SphereVec {
        sphere_reflect(u, v).expect("split-form elements")
    }
    fn op_inv(&self, u: &SphereVec, z: &SphereVec) -> SphereVec {
        self.op(u, z)
    }
}

impl CoxeterModel for SplitModel {
    type Ambient = PinElem2;
    fn embed(&self, x: &SphereVec) -> PinElem2 {
        j2(x).expect("split-form elements")
    }
    fn ambient_mul(&self, a: &PinElem2, b: &PinElem2) -> PinElem2 {
        a.mul(b)
    }
}

/// Det-form sphere quandle (= SL₂ with u◁v = u v⁻¹ u), embedded in M₄.
#[derive(Clone, Copy, Debug, Default)]
pub struct DetModel;

impl Quandle for DetModel {
    type Elem = SphereVec;
    fn op(&self, u: &SphereVec, v: &SphereVec) -> SphereVec {
        sphere_reflect(u, v).expect("det-form elements")
    }
    fn op_inv(&self, u: &SphereVec, z: &SphereVec) -> SphereVec {
        self.op(u, z)
    }
}

impl CoxeterModel for DetModel {
    type Ambient = PinElem4;
    fn embed(&self, x: &SphereVec) -> PinElem4 {
        j4(x).expect("det-form elements")
    }
    fn ambient_mul(&self, a: &PinElem4, b: &PinElem4) -> PinElem4 {
        a.mul(b)
    }
}

/// Trace-level class of an M₄ Coxeter element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterClass {
    /// (p, q): the traces of both components.
    Even { traces: (Rat, Rat) },
    /// (d, e)ι: the trace of d·e.
    Odd { trace: Rat },
}

impl CoxeterClass {
    pub fn parity(&self) -> u8 {
        match self {
            CoxeterClass::Even { .. } => 0,
            CoxeterClass::Odd { .. } => 1,
        }
    }

    pub fn of(c: &PinElem4) -> Self {
        if c.odd {
            CoxeterClass::Odd {
                trace: (&c.left * &c.right).trace(),
            }
        } else {
            CoxeterClass::Even {
                traces: (c.left.trace(), c.right.trace()),
            }
        }
    }
}

/// Class of j(u₁)···j(u_r) for det-form points.
pub fn coxeter_class4(tuple: &[SphereVec]) -> Result<CoxeterClass> {
    let c = tuple
        .iter()
        .try_fold(PinPair::<Mat2<Rat>>::one(), |acc, u| Ok::<_, Error>(acc.mul(&j4(u)?)))?;
    Ok(CoxeterClass::of(&c))
}

/// Class in G_m ⊔ {*} of a split-form Coxeter element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GmClass {
    Even(Rat),
    Odd,
}

pub fn coxeter_class2(tuple: &[SphereVec]) -> Result<GmClass> {
    let c = tuple
        .iter()
        .try_fold(PinPair::<Rat>::one(), |acc, u| Ok::<_, Error>(acc.mul(&j2(u)?)))?;
    Ok(if c.odd { GmClass::Odd } else { GmClass::Even(c.left) })
}

/// Class in μ₂ ⊔ {*} for the one-dimensional sphere {±1}; the sign is
/// recorded for even length only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mu2Class {
    pub odd: bool,
    pub sign: Option<i8>,
}

/// j(x) = xι in M₁ = F ⊕ Fι; the product of r points is (∏x)ι^r.
pub fn coxeter_class1(signs: &[i8]) -> Result<Mu2Class> {
    if signs.iter().any(|&s| s != 1 && s != -1) {
        return Err(Error::Invalid("points of S(q1) are ±1".into()));
    }
    let odd = signs.len() % 2 == 1;
    let prod = signs.iter().product::<i8>();
    Ok(Mu2Class {
        odd,
        sign: (!odd).then_some(prod),
    })
}

/// Inverse stereographic projection of t ∈ Q^{m−1} onto the unit sphere in Q^m:
/// (2t, |t|² − 1) / (|t|² + 1).
pub fn stereographic(t: &[Rat]) -> SphereVec {
    let n2: Rat = t.iter().map(|x| x * x).sum();
    let den = &n2 + Rat::one();
    let mut coords: Vec<Rat> = t.iter().map(|x| Rat::from_i64(2) * x / &den).collect();
    coords.push((&n2 - Rat::one()) / &den);
    SphereVec {
        form: QuadForm::Standard(t.len() + 1),
        coords,
    }
}

fn small_rat(rng: &mut impl rand::Rng) -> Rat {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

/// Random rational point with q = 1 in the given form.
pub fn rational_sphere_point(form: QuadForm, rng: &mut impl rand::Rng) -> SphereVec {
    match form {
        QuadForm::Standard(0) => panic!("zero-dimensional sphere"),
        QuadForm::Standard(1) => SphereVec {
            form,
            coords: vec![Rat::from_i64(if rng.gen_bool(0.5) { 1 } else { -1 })],
        },
        QuadForm::Standard(m) => {
            let t: Vec<Rat> = (0..m - 1).map(|_| small_rat(rng)).collect();
            stereographic(&t)
        }
        QuadForm::Split2 => {
            let mut t = small_rat(rng);
            while t.is_zero() {
                t = small_rat(rng);
            }
            SphereVec {
                form,
                coords: vec![t.clone(), t.recip()],
            }
        }
        QuadForm::Det4 => {
            let len = rng.gen_range(1..=8);
            let mut x: Mat2<Rat> = crate::exact::sl2::random_sl2_word(rng, len);
            // Rational unipotent factors keep the point off the integer lattice.
            let u = small_rat(rng);
            let l = small_rat(rng);
            x = &(&x * &Mat2::new(Rat::one(), u, Rat::zero(), Rat::one()))
                * &Mat2::new(Rat::one(), Rat::zero(), l, Rat::one());
            SphereVec::from_sl2(&x).expect("unimodular by construction")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    #[test]
    fn split_reflection_example() {
        let u = SphereVec::new(QuadForm::Split2, vec![r(2), rat(1, 2)]).unwrap();
        let v = SphereVec::new(QuadForm::Split2, vec![r(1), r(1)]).unwrap();
        assert_eq!(u.dot(&v).unwrap(), rat(5, 4));
        let s = sphere_reflect(&u, &v).unwrap();
        assert_eq!(s.coords(), &[r(4), rat(1, 4)]);
        assert!(verify_reflection_conjugation(&u, &v).unwrap().equal);
    }

    #[test]
    fn det_reflection_example() {
        let u = SphereVec::from_sl2(&Mat2::upper()).unwrap();
        let v = SphereVec::from_sl2(&Mat2::lower()).unwrap();
        let s = sphere_reflect(&u, &v).unwrap();
        assert_eq!(s.to_mat2().unwrap(), Mat2::from_i64(0, 1, -1, 0));
        let rep = verify_reflection_conjugation(&u, &v).unwrap();
        assert!(rep.equal);
        let same = verify_reflection_conjugation(&u, &u).unwrap();
        assert_eq!(same.bilinear, u);
        assert!(same.equal);
    }

    #[test]
    fn pin4_products() {
        let one = j4(&SphereVec::from_sl2(&Mat2::identity()).unwrap()).unwrap();
        assert_eq!(pin4_mul(&one, &one), PinPair::one());
        let u = Mat2::<Rat>::upper();
        let v = Mat2::<Rat>::lower();
        let p = pin4_mul(
            &j4(&SphereVec::from_sl2(&u).unwrap()).unwrap(),
            &j4(&SphereVec::from_sl2(&v).unwrap()).unwrap(),
        );
        assert!(!p.odd);
        assert_eq!(p.left, &u * &v.adj());
        assert_eq!(p.right, &u.adj() * &v);
    }

    #[test]
    fn stereographic_point() {
        let v = stereographic(&[r(1), r(1)]);
        assert_eq!(v.coords(), &[rat(2, 3), rat(2, 3), rat(1, 3)]);
        assert_eq!(v.form.q(v.coords()), r(1));
    }

    #[test]
    fn mu2_classes() {
        assert_eq!(
            coxeter_class1(&[1, -1]).unwrap(),
            Mu2Class {
                odd: false,
                sign: Some(-1)
            }
        );
        assert_eq!(coxeter_class1(&[1, -1, -1]).unwrap().sign, None);
        assert!(coxeter_class1(&[2]).is_err());
    }
}
