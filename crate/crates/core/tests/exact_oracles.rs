use proptest::prelude::*;
use stokes_braid::exact::{charpoly, discriminant, int, rat, ExactRank, Mat, Rat, Ring, UniPoly, Zero};

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::from_i64(1);
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].clone() * cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn small_matrix(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-6i64..=6, n), n))
}

fn to_mat(rows: &[Vec<i64>]) -> Mat<Rat> {
    Mat::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| Rat::from_i64(x)).collect())
            .collect(),
    )
    .unwrap()
}

proptest! {
    #[test]
    fn charpoly_matches_cofactor_expansion(rows in small_matrix(5), tn in -9i64..9, td in 1i64..5) {
        let m = to_mat(&rows);
        let t = rat(tn, td);
        let n = m.rows();
        let shifted: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| {
                let d = if i == j { t.clone() } else { Rat::zero() };
                d - m.get(i, j).clone()
            }).collect())
            .collect();
        prop_assert_eq!(charpoly(&m).unwrap().eval(&t), cofactor_det(&shifted));
    }

    #[test]
    fn rank_is_transpose_invariant(rows in small_matrix(5), drop in 0usize..3) {
        let mut m = to_mat(&rows);
        // Force some rank deficiency by duplicating a row.
        if drop > 0 && m.rows() > 1 {
            let r0 = m.row(0).to_vec();
            for (j, v) in r0.into_iter().enumerate() {
                m.set(m.rows() - 1, j, v);
            }
        }
        prop_assert_eq!(m.rank_exact(), m.transpose().rank_exact());
        let im = m.map(|q| q.to_integer());
        prop_assert_eq!(im.rank_exact(), m.rank_exact());
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_factor(cs in prop::collection::vec(-5i64..=5, 2..6), sq in any::<bool>()) {
        let mut p: UniPoly<stokes_braid::exact::Int> = UniPoly::from_i64s(&cs);
        prop_assume!(p.degree().unwrap_or(0) >= 1);
        if sq {
            p = p.clone() * UniPoly::from_i64s(&cs[..2]).pow(2);
            prop_assume!(p.degree().unwrap_or(0) >= 1);
        }
        let d = discriminant(&p).unwrap();
        let g = p.to_rat().gcd(&p.derivative().to_rat());
        prop_assert_eq!(d.is_zero(), g.degree().unwrap_or(0) >= 1);
    }
}

#[test]
fn charpoly_of_negated_serre_matrix() {
    // s = [[1,2],[0,1]]: s^{-1} s^T = [[-3,-2],[2,1]] and det(λI + M) = (λ-1)^2.
    let m = Mat::<stokes_braid::exact::Int>::from_i64_rows(&[&[-3, -2], &[2, 1]]).unwrap();
    assert_eq!(charpoly(&m.neg()).unwrap(), UniPoly::from_i64s(&[1, -2, 1]));
}

#[test]
fn discriminant_against_root_product() {
    // λ^4 + 7λ^2 + 1 has roots ±i·a, ±i/a; the product over pairs of
    // (r_i - r_j)^2 evaluates to 32400, the boundary-trace discriminant for (3, 0).
    let p = UniPoly::from_i64s(&[1, 0, 7, 0, 1]);
    let d = discriminant(&p).unwrap();
    let (k1, k2) = (3i64, 0i64);
    let delta = (k1 * k1 - 4).pow(2) * (k2 * k2 - 4).pow(2) * (k1 * k1 - k2 * k2).pow(2);
    assert_eq!(delta, 32400);
    assert_eq!(d, int(delta));

    // Monic with integer roots 1, 2, 4: product of squared differences.
    let roots = [1i64, 2, 4];
    let p = roots
        .iter()
        .fold(UniPoly::from_i64s(&[1]), |acc, &r| acc * UniPoly::linear_root(int(r)));
    let mut prod = 1i64;
    for i in 0..3 {
        for j in i + 1..3 {
            prod *= (roots[i] - roots[j]).pow(2);
        }
    }
    assert_eq!(discriminant(&p).unwrap(), int(prod));
}

#[test]
fn rank_examples() {
    let m = Mat::<stokes_braid::exact::Int>::from_i64_rows(&[&[2, 2, 2], &[2, 2, 2], &[2, 2, 2]]).unwrap();
    assert_eq!(m.rank_exact(), 1);
}
