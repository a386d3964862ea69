use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ring::Ring;

/// Sparse multivariate polynomial.
///
/// Exponent vectors are stored with trailing zeros stripped, so the number of
/// variables is open-ended and `zero()`/`one()` need no arity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Vec<u32>, C>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl<C: Ring> MultiPoly<C> {
    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { terms }
    }

    /// The variable x_i.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exps: Vec<u32>, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        MultiPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero_poly(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Number of variables actually occurring (1 + largest index used).
    pub fn arity(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let Some(&k) = e.get(i) else { continue };
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(trim(ne), c.clone() * C::from_i64(k as i64));
        }
        out
    }

    pub fn eval(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * point[i].pow_u32(k);
                }
            }
            acc = acc + t;
        }
        acc
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly::<D>::zero();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Formatted with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String
    where
        C: fmt::Display + Signed,
    {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut mono = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{i}"));
                match k {
                    0 => {}
                    1 => mono.push(name),
                    _ => mono.push(format!("{name}^{k}")),
                }
            }
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if abs != C::one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl<C: Ring> Add for MultiPoly<C> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<C: Ring> Sub for MultiPoly<C> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        for (e, c) in o.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl<C: Ring> Neg for MultiPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Ring> Mul for MultiPoly<C> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let n = ea.len().max(eb.len());
                let e = (0..n)
                    .map(|i| ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring> Zero for MultiPoly<C> {
    fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for MultiPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Ring for MultiPoly<C> {
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
}

impl<C: fmt::Debug> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::{int, Int};

    type P = MultiPoly<Int>;

    #[test]
    fn arithmetic_and_cancellation() {
        let x = P::var(0);
        let y = P::var(1);
        let sq = (x.clone() + y.clone()) * (x.clone() - y.clone());
        let expect = x.clone() * x.clone() - y.clone() * y.clone();
        assert_eq!(sq, expect);
        assert!((x.clone() - x.clone()).is_zero_poly());
        assert_eq!(sq.total_degree(), 2);
    }

    #[test]
    fn partials_and_eval() {
        let x = P::var(0);
        let z = P::var(2);
        let f = x.clone() * x.clone() * z.clone() + P::from_i64(3);
        assert_eq!(f.partial(0), P::from_i64(2) * x.clone() * z.clone());
        assert_eq!(f.partial(1), P::zero());
        assert_eq!(f.eval(&[int(2), int(7), int(5)]), int(23));
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        assert_eq!(f.display_with(&names), "x^2*z + 3");
    }
}
