//! The quadratic Poisson bracket on upper-unitriangular matrices, as exact
//! polynomial data over ℚ, with Jacobi and Casimir checks.
//!
//! Coordinates s_ij (i < j) are numbered in row-major order: for r = 3 the
//! variables are x₀ = s₁₂, x₁ = s₁₃, x₂ = s₂₃.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exact::{rat, MultiPoly, Rat};
use crate::stokes::{coxeter_charpoly, StokesMat};
use crate::{Error, Result};

pub type Poly = MultiPoly<Rat>;

/// Which linear term appears when the second index of the first pair equals
/// the first index of the second (j = k).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum JkTerm {
    /// s_iℓ − ½ s_ij s_jℓ.
    #[default]
    Outer,
    /// s_ij − ½ s_ij s_jℓ. Kept only to show that it breaks the Casimirs.
    Left,
}

/// Number of coordinates of V(r).
pub fn num_coords(r: usize) -> usize {
    r * (r - 1) / 2
}

/// Variable index of s_ij (1-based, i < j ≤ r).
pub fn coord_index(i: usize, j: usize, r: usize) -> usize {
    (i - 1) * r - (i - 1) * i / 2 + (j - i - 1)
}

/// (i, j) for every coordinate, in variable order.
pub fn coords(r: usize) -> Vec<(usize, usize)> {
    (1..=r)
        .flat_map(|i| (i + 1..=r).map(move |j| (i, j)))
        .collect()
}

pub fn coord_name(i: usize, j: usize) -> String {
    format!("s{i}{j}")
}

fn s(i: usize, j: usize, r: usize) -> Poly {
    Poly::var(coord_index(i, j, r))
}

fn half() -> Poly {
    Poly::constant(rat(1, 2))
}

fn check_pair(i: usize, j: usize, r: usize) -> Result<()> {
    if i == 0 || i >= j || j > r {
        return Err(Error::Invalid(format!(
            "coordinate s{i}{j} needs 1 <= i < j <= {r}"
        )));
    }
    Ok(())
}

fn ordered_bracket(i: usize, j: usize, k: usize, l: usize, r: usize, jk: JkTerm) -> Poly {
    // Caller guarantees (i, j) < (k, ℓ) lexicographically.
    if i == k {
        return half() * s(i, j, r) * s(i, l, r) - s(j, l, r);
    }
    if j == l {
        return half() * s(i, j, r) * s(k, j, r) - s(i, k, r);
    }
    if j == k {
        let lin = match jk {
            JkTerm::Outer => s(i, l, r),
            JkTerm::Left => s(i, j, r),
        };
        return lin - half() * s(i, j, r) * s(j, l, r);
    }
    if k < j && j < l {
        return s(i, l, r) * s(k, j, r) - s(i, k, r) * s(j, l, r);
    }
    Poly::zero()
}

/// {s_ij, s_kℓ} with the given j = k convention.
pub fn bracket_coords_with(i: usize, j: usize, k: usize, l: usize, r: usize, jk: JkTerm) -> Result<Poly> {
    check_pair(i, j, r)?;
    check_pair(k, l, r)?;
    Ok(match (i, j).cmp(&(k, l)) {
        std::cmp::Ordering::Equal => Poly::zero(),
        std::cmp::Ordering::Less => ordered_bracket(i, j, k, l, r, jk),
        std::cmp::Ordering::Greater => -ordered_bracket(k, l, i, j, r, jk),
    })
}

/// {s_ij, s_kℓ}.
pub fn bracket_coords(i: usize, j: usize, k: usize, l: usize, r: usize) -> Result<Poly> {
    bracket_coords_with(i, j, k, l, r, JkTerm::Outer)
}

/// All coordinate brackets for a fixed r, indexed by variable number.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketTable {
    r: usize,
    jk: JkTerm,
    entries: Vec<Vec<Poly>>,
}

impl BracketTable {
    pub fn new(r: usize) -> Result<Self> {
        Self::with_jk(r, JkTerm::Outer)
    }

    pub fn with_jk(r: usize, jk: JkTerm) -> Result<Self> {
        if r < 2 {
            return Err(Error::Invalid(format!("r = {r} has no coordinates")));
        }
        let cs = coords(r);
        let entries = cs
            .iter()
            .map(|&(i, j)| {
                cs.iter()
                    .map(|&(k, l)| bracket_coords_with(i, j, k, l, r, jk))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BracketTable { r, jk, entries })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn jk(&self) -> JkTerm {
        self.jk
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// {x_p, x_q}.
    pub fn get(&self, p: usize, q: usize) -> &Poly {
        &self.entries[p][q]
    }
}

/// Σ ∂F/∂x_p · {x_p, x_q} · ∂G/∂x_q.
pub fn bracket_poly(f: &Poly, g: &Poly, table: &BracketTable) -> Poly {
    let n = table.len();
    let df: Vec<Poly> = (0..n).map(|p| f.partial(p)).collect();
    let dg: Vec<Poly> = (0..n).map(|q| g.partial(q)).collect();
    let mut acc = Poly::zero();
    for (p, fp) in df.iter().enumerate().filter(|(_, f)| !f.is_zero_poly()) {
        for (q, gq) in dg.iter().enumerate().filter(|(_, g)| !g.is_zero_poly()) {
            let t = table.get(p, q);
            if !t.is_zero_poly() {
                acc = acc + fp.clone() * t.clone() * gq.clone();
            }
        }
    }
    acc
}

/// {F, G} evaluated at a point, without expanding the polynomial.
pub fn bracket_at(f: &Poly, g: &Poly, table: &BracketTable, point: &[Rat]) -> Rat {
    let n = table.len();
    let df: Vec<Rat> = (0..n).map(|p| f.partial(p).eval(point)).collect();
    let dg: Vec<Rat> = (0..n).map(|q| g.partial(q).eval(point)).collect();
    let mut acc = Rat::zero();
    for (p, fp) in df.iter().enumerate().filter(|(_, f)| !f.is_zero()) {
        for (q, gq) in dg.iter().enumerate().filter(|(_, g)| !g.is_zero()) {
            acc += fp * table.get(p, q).eval(point) * gq;
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Symbolic,
    /// Exact evaluation at `points` random rational points.
    Sampled { points: usize, seed: u64 },
}

impl CheckMode {
    pub fn sampled(points: usize) -> Self {
        CheckMode::Sampled { points, seed: 0 }
    }
}

/// Random rational point with numerators in [−9, 9] and denominators in [1, 4].
pub fn random_point(rng: &mut impl Rng, n: usize) -> Vec<Rat> {
    (0..n)
        .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
        .collect()
}

fn sample_points(n: usize, points: usize, seed: u64) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..points).map(|_| random_point(&mut rng, n)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiReport {
    pub r: usize,
    pub mode: CheckMode,
    /// Coordinate triples (as variable indices, a ≤ b ≤ c) checked.
    pub triples: usize,
    /// Triples whose Jacobiator is nonzero (symbolically or at some point).
    pub failures: Vec<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// {x_a, {x_b, x_c}} + {x_b, {x_c, x_a}} + {x_c, {x_a, x_b}} for every
/// multiset of three coordinates.
pub fn check_jacobi(r: usize, mode: CheckMode) -> Result<JacobiReport> {
    check_jacobi_table(&BracketTable::new(r)?, mode)
}

pub fn check_jacobi_table(table: &BracketTable, mode: CheckMode) -> Result<JacobiReport> {
    let n = table.len();
    let ts = triples(n);
    let pts = match mode {
        CheckMode::Symbolic => Vec::new(),
        CheckMode::Sampled { points, seed } => sample_points(n, points, seed),
    };
    let failures: Vec<(usize, usize, usize)> = ts
        .par_iter()
        .copied()
        .filter(|&(a, b, c)| {
            let cyc = [(a, b, c), (b, c, a), (c, a, b)];
            match mode {
                CheckMode::Symbolic => {
                    let sum = cyc.iter().fold(Poly::zero(), |acc, &(u, v, w)| {
                        acc + bracket_poly(&Poly::var(u), table.get(v, w), table)
                    });
                    !sum.is_zero_poly()
                }
                CheckMode::Sampled { .. } => pts.iter().any(|pt| {
                    let sum = cyc.iter().fold(Rat::zero(), |acc, &(u, v, w)| {
                        acc + bracket_at(&Poly::var(u), table.get(v, w), table, pt)
                    });
                    !sum.is_zero()
                }),
            }
        })
        .collect();
    Ok(JacobiReport {
        r: table.r(),
        mode,
        triples: ts.len(),
        failures,
    })
}

/// The Stokes matrix whose entries are the coordinate variables.
pub fn generic_stokes(r: usize) -> StokesMat<Poly> {
    StokesMat::from_upper(r, (0..num_coords(r)).map(Poly::var).collect()).expect("r >= 2")
}

/// Coefficients of det(λI + s⁻¹sᵀ) as polynomials in the coordinates,
/// lowest degree first.
pub fn coxeter_coefficients(r: usize) -> Result<Vec<Poly>> {
    let p = coxeter_charpoly(&generic_stokes(r))?;
    Ok(p.coeffs().to_vec())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CasimirReport {
    pub r: usize,
    pub mode: CheckMode,
    pub jk: JkTerm,
    /// Coefficients of λ⁰, λ¹, … of the Coxeter polynomial.
    pub coefficients: Vec<Poly>,
    /// (coefficient degree, coordinate index) pairs with nonzero bracket.
    pub failures: Vec<(usize, usize)>,
}

impl CasimirReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every Coxeter coefficient brackets to zero with every coordinate.
pub fn check_casimir(r: usize, mode: CheckMode) -> Result<CasimirReport> {
    check_casimir_table(&BracketTable::new(r)?, mode)
}

pub fn check_casimir_table(table: &BracketTable, mode: CheckMode) -> Result<CasimirReport> {
    let r = table.r();
    let n = table.len();
    let coefficients = coxeter_coefficients(r)?;
    let pts = match mode {
        CheckMode::Symbolic => Vec::new(),
        CheckMode::Sampled { points, seed } => sample_points(n, points, seed),
    };
    let jobs: Vec<(usize, usize)> = (0..coefficients.len())
        .flat_map(|t| (0..n).map(move |q| (t, q)))
        .collect();
    let failures = jobs
        .par_iter()
        .copied()
        .filter(|&(t, q)| {
            let c = &coefficients[t];
            let x = Poly::var(q);
            match mode {
                CheckMode::Symbolic => !bracket_poly(c, &x, table).is_zero_poly(),
                CheckMode::Sampled { .. } => pts
                    .iter()
                    .any(|pt| !bracket_at(c, &x, table, pt).is_zero()),
            }
        })
        .collect();
    Ok(CasimirReport {
        r,
        mode,
        jk: table.jk(),
        coefficients,
        failures,
    })
}

/// Integer form of a rational polynomial: (D·F, D) with D the least common
/// denominator.
pub fn clear_denominators(f: &Poly) -> (MultiPoly<crate::exact::Int>, crate::exact::Int) {
    use num_integer::Integer;
    let d = f
        .terms()
        .fold(crate::exact::Int::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let scaled = f.map_coeffs(|c| (c * Rat::from_integer(d.clone())).to_integer());
    (scaled, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    // r = 3 variables: x₀ = s₁₂ = x, x₁ = s₁₃ = z, x₂ = s₂₃ = y.
    fn xyz() -> (Poly, Poly, Poly) {
        (Poly::var(0), Poly::var(2), Poly::var(1))
    }

    #[test]
    fn rank3_entries() {
        let (x, y, z) = xyz();
        assert_eq!(bracket_coords(1, 2, 1, 3, 3).unwrap(), half() * x.clone() * z.clone() - y.clone());
        assert_eq!(bracket_coords(1, 2, 2, 3, 3).unwrap(), z - half() * x * y);
        assert!(bracket_coords(1, 2, 3, 4, 4).unwrap().is_zero_poly());
        assert!(bracket_coords(2, 2, 1, 3, 3).is_err());
        assert!(bracket_coords(1, 4, 1, 3, 3).is_err());
    }

    #[test]
    fn k_commutes_with_x() {
        let (x, y, z) = xyz();
        let two = Poly::constant(rat(2, 1));
        let k = x.clone() * x.clone() + y.clone() * y.clone() + z.clone() * z.clone() - x.clone() * y * z - two;
        let t = BracketTable::new(3).unwrap();
        assert!(bracket_poly(&k, &x, &t).is_zero_poly());
    }

    #[test]
    fn coordinate_numbering() {
        for r in 2..7 {
            for (n, (i, j)) in coords(r).into_iter().enumerate() {
                assert_eq!(coord_index(i, j, r), n);
            }
        }
    }

    #[test]
    fn clearing_denominators() {
        let (x, _, z) = xyz();
        let (f, d) = clear_denominators(&(half() * x * z));
        assert_eq!(d, crate::exact::int(2));
        assert_eq!(f.num_terms(), 1);
    }
}
