use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{det_bareiss, Mat};
use super::ring::{Field, Int, Rat, Ring};
use crate::error::{Error, Result};

/// Univariate polynomial, coefficients stored low degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// λ - a
    pub fn linear_root(a: T) -> Self {
        Self::new(vec![-a, T::one()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_i64(i as i64))
                .collect(),
        )
    }

    /// λ^n p(1/λ) = p(λ) with n = deg p.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// p(-λ)
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Sylvester matrix of (self, other).
    pub fn sylvester(&self, other: &Self) -> Result<Mat<T>> {
        let m = self
            .degree()
            .ok_or_else(|| Error::Invalid("zero polynomial".into()))?;
        let n = other
            .degree()
            .ok_or_else(|| Error::Invalid("zero polynomial".into()))?;
        let size = m + n;
        let mut s = Mat::zeros(size, size);
        for row in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                s.set(row, row + k, c.clone());
            }
        }
        for row in 0..m {
            for (k, c) in other.coeffs.iter().rev().enumerate() {
                s.set(n + row, row + k, c.clone());
            }
        }
        Ok(s)
    }
}

impl<T: Field> UniPoly<T> {
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::Invalid("division by zero polynomial".into()))?;
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let q = rem.last().unwrap().clone() / lead.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - q.clone() * c.clone();
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.map(|c| c.clone() / lead.clone())
    }
}

impl UniPoly<Int> {
    pub fn to_rat(&self) -> UniPoly<Rat> {
        self.map(super::ring::rat_from_int)
    }

    /// Res(self, other) as the Sylvester determinant.
    pub fn resultant(&self, other: &Self) -> Result<Int> {
        Ok(det_bareiss(&self.sylvester(other)?))
    }

    /// Exact quotient by a divisor known to divide; `None` if it does not.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.to_rat().div_rem(&d.to_rat()).ok()?;
        if !r.is_zero() {
            return None;
        }
        q.coeffs
            .iter()
            .map(super::ring::rat_to_int)
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Human-readable form in λ, pulling out factors (λ+1) and (λ-1).
    pub fn factored_display(&self) -> String {
        if self.degree().unwrap_or(0) == 0 {
            return self.to_string();
        }
        let mut rest = self.clone();
        let mut parts = Vec::new();
        for (root, label) in [(-1i64, "(λ+1)"), (1, "(λ-1)")] {
            let lin = UniPoly::linear_root(BigInt::from(root));
            let mut e = 0;
            while rest.degree().unwrap_or(0) >= 1 {
                match rest.exact_div(&lin) {
                    Some(q) => {
                        rest = q;
                        e += 1;
                    }
                    None => break,
                }
            }
            if e == 1 {
                parts.push(label.to_string());
            } else if e > 1 {
                parts.push(format!("{label}^{e}"));
            }
        }
        match rest.degree() {
            Some(0) if rest.coeffs[0] == BigInt::from(1) && !parts.is_empty() => {}
            Some(0) if rest.coeffs[0] == BigInt::from(-1) && !parts.is_empty() => {
                parts.insert(0, "-".into())
            }
            _ => parts.push(if parts.is_empty() {
                rest.to_string()
            } else {
                format!("({rest})")
            }),
        }
        parts.concat()
    }
}

/// disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p).
pub fn discriminant(p: &UniPoly<Int>) -> Result<Int> {
    let n = match p.degree() {
        None | Some(0) => return Err(Error::Invalid("discriminant of a constant".into())),
        Some(n) => n,
    };
    if n == 1 {
        return Ok(BigInt::from(1));
    }
    let res = p.resultant(&p.derivative())?;
    let (q, r) = res.div_rem(&p.leading());
    if !r.is_zero() {
        return Err(Error::Internal("resultant not divisible by leading coefficient".into()));
    }
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

impl<T: Ring> Add for UniPoly<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for UniPoly<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<T: Ring> Neg for UniPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Ring> Mul for UniPoly<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<T: Ring + fmt::Display + Signed> fmt::Display for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = abs == T::one();
            match i {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "λ")?,
                1 => write!(f, "{abs}λ")?,
                _ if unit => write!(f, "λ^{i}")?,
                _ => write!(f, "{abs}λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}
