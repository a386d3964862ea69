//! The braid action on Stokes matrices, its invariants, and the reflection
//! product identity on Gram matrices of sphere points.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stokes_braid::clifford::{rational_sphere_point, QuadForm};
use stokes_braid::exact::Int;
use stokes_braid::quandle::BraidWord;
use stokes_braid::stokes::{coxeter_identity_check, gram_from_sphere, invariants, StokesMat};

fn main() {
    let s = StokesMat::<Int>::from_i64_rows(&[&[1, 2, 3, 1], &[0, 1, 1, 2], &[0, 0, 1, 4], &[0, 0, 0, 1]]).unwrap();
    let w: BraidWord = "s1s2S3s1".parse().unwrap();
    let t = s.act_word(&w).unwrap();
    let (a, b) = (invariants(&s).unwrap(), invariants(&t).unwrap());
    println!("s·{w} = {t:?}");
    println!("(e1, e2) before {:?}, after {:?}", (a.e1, a.e2), (b.e1, b.e2));

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let vs: Vec<_> = (0..4).map(|_| rational_sphere_point(QuadForm::Standard(4), &mut rng)).collect();
    let g = gram_from_sphere(&vs).unwrap();
    let rep = coxeter_identity_check(&g).unwrap();
    println!("s·R1···R4 = -sᵀ on a Gram matrix: {}", rep.holds);
}
