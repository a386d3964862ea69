use std::fmt;
use std::ops::Mul;

use super::matrix::Mat;
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// 2x2 matrix [[a, b], [c, d]].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Ring> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(T::from_i64(a), T::from_i64(b), T::from_i64(c), T::from_i64(d))
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0, 0, 0)
    }

    /// [[1,1],[0,1]]
    pub fn upper() -> Self {
        Self::from_i64(1, 1, 0, 1)
    }

    /// [[1,0],[1,1]]
    pub fn lower() -> Self {
        Self::from_i64(1, 0, 1, 1)
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> T {
        self.a.clone() + self.d.clone()
    }

    /// adj(x), so x·adj(x) = det(x)·I.
    pub fn adj(&self) -> Self {
        Mat2::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn is_unimodular(&self) -> bool {
        self.det() == T::one()
    }

    /// Inverse of a determinant-one matrix.
    pub fn inv_sl2(&self) -> Result<Self> {
        if !self.is_unimodular() {
            return Err(Error::Invalid(format!("determinant is not 1: {self:?}")));
        }
        Ok(self.adj())
    }

    pub fn add(&self, o: &Self) -> Self {
        Mat2::new(
            self.a.clone() + o.a.clone(),
            self.b.clone() + o.b.clone(),
            self.c.clone() + o.c.clone(),
            self.d.clone() + o.d.clone(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Mat2::new(
            s.clone() * self.a.clone(),
            s.clone() * self.b.clone(),
            s.clone() * self.c.clone(),
            s.clone() * self.d.clone(),
        )
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat2<U> {
        Mat2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }

    /// Row-major coordinates (a, b, c, d).
    pub fn coords(&self) -> [T; 4] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }

    pub fn to_mat(&self) -> Mat<T> {
        Mat::new(2, 2, self.coords().to_vec()).expect("2x2")
    }
}

impl<T: Field> Mat2<T> {
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let adj = self.adj();
        Some(adj.map(|x| x.clone() / d.clone()))
    }
}

impl<T: Ring> Mul for Mat2<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl<T: Ring> Mul for &Mat2<T> {
    type Output = Mat2<T>;
    fn mul(self, o: &Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }
}

impl<T: fmt::Debug> fmt::Debug for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{:?},{:?}],[{:?},{:?}]]", self.a, self.b, self.c, self.d)
    }
}

/// Product of all matrices in order, identity when empty.
pub fn product<'a, T: Ring + 'a>(ms: impl IntoIterator<Item = &'a Mat2<T>>) -> Mat2<T> {
    ms.into_iter().fold(Mat2::identity(), |acc, m| &acc * m)
}

/// Random word of length `len` in [[1,±1],[0,1]] and [[1,0],[±1,1]].
pub fn random_sl2_word<T: Ring>(rng: &mut impl rand::Rng, len: usize) -> Mat2<T> {
    let mut m = Mat2::identity();
    for _ in 0..len {
        let g = match rng.gen_range(0..4) {
            0 => Mat2::from_i64(1, 1, 0, 1),
            1 => Mat2::from_i64(1, -1, 0, 1),
            2 => Mat2::from_i64(1, 0, 1, 1),
            _ => Mat2::from_i64(1, 0, -1, 1),
        };
        m = &m * &g;
    }
    m
}
