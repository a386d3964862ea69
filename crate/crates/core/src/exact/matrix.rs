use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::ring::{Int, Rat, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| T::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = out.get(i, j).clone() + a.clone() * o.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.clone() - b.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| c.clone() * a.clone())
    }

    fn zip(&self, o: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Dimension("shape mismatch".into()));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Division-free determinant (via the Berkowitz characteristic polynomial).
    pub fn det(&self) -> Result<T> {
        let p = charpoly(self)?;
        let c0 = p.coeff(0);
        Ok(if self.rows % 2 == 1 { -c0 } else { c0 })
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    match i.cmp(&j) {
                        std::cmp::Ordering::Greater => v.is_zero(),
                        std::cmp::Ordering::Equal => *v == T::one(),
                        std::cmp::Ordering::Less => true,
                    }
                })
            })
    }

    /// Inverse of an upper unitriangular matrix by back-substitution (no division).
    pub fn unitriangular_inverse(&self) -> Result<Self> {
        if !self.is_upper_unitriangular() {
            return Err(Error::Invalid("matrix is not upper unitriangular".into()));
        }
        let n = self.rows;
        let mut inv = Self::identity(n);
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = T::zero();
                for k in i + 1..=j {
                    acc = acc + self.get(i, k).clone() * inv.get(k, j).clone();
                }
                inv.set(i, j, -acc);
            }
        }
        Ok(inv)
    }
}

/// det(λI - M) by the Berkowitz algorithm; uses only ring operations.
pub fn charpoly<T: Ring>(m: &Mat<T>) -> Result<UniPoly<T>> {
    if !m.is_square() {
        return Err(Error::Dimension("charpoly of a non-square matrix".into()));
    }
    let n = m.rows();
    // Coefficients high degree first while accumulating.
    let mut c: Vec<T> = vec![T::one()];
    for k in 0..n {
        // Leading principal (k+1)x(k+1) block: A_k is top-left k x k,
        // R row k (cols 0..k), S column k (rows 0..k), a = m[k][k].
        let a = m.get(k, k).clone();
        // Toeplitz column: [1, -a, -R S, -R A S, -R A^2 S, ...]
        let mut t: Vec<T> = Vec::with_capacity(k + 2);
        t.push(T::one());
        t.push(-a);
        let mut v: Vec<T> = (0..k).map(|i| m.get(i, k).clone()).collect();
        for _ in 0..k {
            let rs = (0..k).fold(T::zero(), |acc, j| acc + m.get(k, j).clone() * v[j].clone());
            t.push(-rs);
            v = (0..k)
                .map(|i| {
                    (0..k).fold(T::zero(), |acc, j| acc + m.get(i, j).clone() * v[j].clone())
                })
                .collect();
        }
        // New coefficient vector = Toeplitz(t) * c, length k+2.
        let mut next = vec![T::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = T::zero();
            for (j, cj) in c.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    acc = acc + t[i - j].clone() * cj.clone();
                }
            }
            *slot = acc;
        }
        c = next;
    }
    c.reverse();
    Ok(UniPoly::new(c))
}

/// Fraction-free (Bareiss) determinant over the integers.
pub fn det_bareiss(m: &Mat<Int>) -> Int {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v.div_floor(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Exact rank by fraction-free elimination.
pub trait ExactRank {
    fn rank_exact(&self) -> usize;
}

fn bareiss_rank(mut a: Vec<Vec<Int>>, cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &a[i][j] * &a[rank][col] - &a[i][col] * &a[rank][j];
                a[i][j] = v.div_floor(&prev);
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

impl ExactRank for Mat<Int> {
    fn rank_exact(&self) -> usize {
        bareiss_rank(self.to_rows(), self.cols())
    }
}

impl ExactRank for Mat<Rat> {
    fn rank_exact(&self) -> usize {
        // Scaling a row by a nonzero integer leaves the rank unchanged.
        let rows = (0..self.rows())
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
                row.iter()
                    .map(|q| q.numer() * (&l / q.denom()))
                    .collect()
            })
            .collect();
        bareiss_rank(rows, self.cols())
    }
}

impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            f.debug_list()
                .entries(&self.data[i * self.cols..(i + 1) * self.cols])
                .finish()?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::int;

    fn m(rows: &[&[i64]]) -> Mat<Int> {
        Mat::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn charpoly_small() {
        assert_eq!(
            charpoly(&Mat::<Int>::identity(3)).unwrap(),
            UniPoly::from_i64s(&[-1, 3, -3, 1])
        );
        assert_eq!(
            charpoly(&m(&[&[0, 1], &[1, 0]])).unwrap(),
            UniPoly::from_i64s(&[-1, 0, 1])
        );
        assert!(charpoly(&Mat::<Int>::zeros(2, 3)).is_err());
    }

    #[test]
    fn determinants_agree() {
        let a = m(&[&[2, -1, 0, 3], &[1, 4, 2, -2], &[0, 5, -3, 1], &[7, 0, 1, 1]]);
        assert_eq!(a.det().unwrap(), det_bareiss(&a));
        let z = m(&[&[0, 1], &[0, 2]]);
        assert_eq!(det_bareiss(&z), int(0));
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(&swap), int(-1));
    }

    #[test]
    fn ranks() {
        assert_eq!(Mat::<Int>::identity(3).scale(&int(2)).rank_exact(), 3);
        assert_eq!(m(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).rank_exact(), 1);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank_exact(), 0);
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 7]]).rank_exact(), 2);
    }

    #[test]
    fn unitriangular_inverse_roundtrip() {
        let s = m(&[&[1, 2, -3], &[0, 1, 5], &[0, 0, 1]]);
        let inv = s.unitriangular_inverse().unwrap();
        assert_eq!(s.mul(&inv).unwrap(), Mat::identity(3));
        assert!(m(&[&[1, 0], &[1, 1]]).unitriangular_inverse().is_err());
    }
}
