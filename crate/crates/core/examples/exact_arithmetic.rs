//! Characteristic polynomials and discriminants over big integers.
use stokes_braid::exact::{charpoly, discriminant, Mat};
use stokes_braid::stokes::{coxeter_charpoly, StokesMat};

fn main() {
    let m = Mat::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
    let p = charpoly(&m).unwrap();
    println!("charpoly = {:?}", p.coeffs());
    println!("disc     = {}", discriminant(&p).unwrap());

    // Entries far beyond 64 bits are fine.
    let big = "123456789012345678901234567890".parse().unwrap();
    let s = StokesMat::from_upper(3, vec![big, 1.into(), 2.into()]).unwrap();
    let q = coxeter_charpoly(&s).unwrap();
    println!("p(λ) of a large Stokes matrix: {}", q.factored_display());
}
