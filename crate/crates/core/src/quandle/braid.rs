use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// σ_index (or its inverse); indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub index: usize,
    pub inverse: bool,
}

impl Generator {
    pub fn pos(index: usize) -> Self {
        Generator {
            index,
            inverse: false,
        }
    }

    pub fn neg(index: usize) -> Self {
        Generator {
            index,
            inverse: true,
        }
    }

    pub fn inv(self) -> Self {
        Generator {
            index: self.index,
            inverse: !self.inverse,
        }
    }

    /// Every σ_i^{±1} acting on `strands` strands, in the order s1, S1, s2, S2, ...
    pub fn all(strands: usize) -> Vec<Generator> {
        (1..strands)
            .flat_map(|i| [Generator::pos(i), Generator::neg(i)])
            .collect()
    }

    pub fn check(self, strands: usize) -> Result<()> {
        if self.index == 0 || self.index >= strands {
            return Err(Error::IndexRange {
                index: self.index,
                strands,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.inverse { 'S' } else { 's' }, self.index)
    }
}

/// Word in the standard generators, applied left to right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct BraidWord(pub Vec<Generator>);

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        BraidWord(self.0.iter().rev().map(|g| g.inv()).collect())
    }

    pub fn then(&self, other: &BraidWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BraidWord(v)
    }

    pub fn check(&self, strands: usize) -> Result<()> {
        self.0.iter().try_for_each(|g| g.check(strands))
    }

    /// Uniform random word of the given length on `strands` strands.
    pub fn random(rng: &mut impl rand::Rng, strands: usize, len: usize) -> Self {
        BraidWord(
            (0..len)
                .map(|_| Generator {
                    index: rng.gen_range(1..strands),
                    inverse: rng.gen_bool(0.5),
                })
                .collect(),
        )
    }
}

impl From<Vec<Generator>> for BraidWord {
    fn from(v: Vec<Generator>) -> Self {
        BraidWord(v)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Parses letters `<p><digits>` where `p` is the positive prefix and its
/// uppercase form the inverse (e.g. "s1S2" for braids, "L1R2" handled by
/// callers with their own prefixes).
pub fn parse_letters(s: &str, pos: char, neg: char) -> Result<Vec<Generator>> {
    let mut out = Vec::new();
    let mut chars = s.trim().chars().peekable();
    while let Some(c) = chars.next() {
        let inverse = if c == pos {
            false
        } else if c == neg {
            true
        } else if c.is_whitespace() || c == ',' {
            continue;
        } else {
            return Err(Error::Invalid(format!("unexpected letter {c:?} in word {s:?}")));
        };
        let mut digits = String::new();
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let index: usize = digits
            .parse()
            .map_err(|_| Error::Invalid(format!("missing index after {c:?} in {s:?}")))?;
        if index == 0 {
            return Err(Error::Invalid("generator indices start at 1".into()));
        }
        out.push(Generator { index, inverse });
    }
    Ok(out)
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s, 's', 'S').map(BraidWord)
    }
}

/// A right action of the braid group on some set of points.
pub trait BraidAction: Sync {
    type Point: Clone + Send + Sync;

    fn strands(&self, p: &Self::Point) -> usize;

    /// Applies one generator; the index is assumed to be in range.
    fn apply_unchecked(&self, g: Generator, p: &Self::Point) -> Self::Point;

    fn act(&self, g: Generator, p: &Self::Point) -> Result<Self::Point> {
        g.check(self.strands(p))?;
        Ok(self.apply_unchecked(g, p))
    }

    fn act_word(&self, w: &BraidWord, p: &Self::Point) -> Result<Self::Point> {
        w.check(self.strands(p))?;
        Ok(w.0
            .iter()
            .fold(p.clone(), |acc, &g| self.apply_unchecked(g, &acc)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_roundtrip() {
        let w: BraidWord = "s1S2s3".parse().unwrap();
        assert_eq!(w.to_string(), "s1S2s3");
        assert_eq!(w.inverse().to_string(), "S3s2S1");
        assert_eq!("".parse::<BraidWord>().unwrap(), BraidWord::empty());
        assert!("s0".parse::<BraidWord>().is_err());
        assert!("x1".parse::<BraidWord>().is_err());
        assert!("s".parse::<BraidWord>().is_err());
        assert_eq!("s12".parse::<BraidWord>().unwrap().0[0].index, 12);
    }

    #[test]
    fn range_check() {
        let w: BraidWord = "s3".parse().unwrap();
        assert!(w.check(4).is_ok());
        assert_eq!(
            w.check(3),
            Err(Error::IndexRange {
                index: 3,
                strands: 3
            })
        );
    }
}
