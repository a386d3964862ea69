//! Mutations of Gram matrices and a bounded equivalence search.
use stokes_braid::mutation::{
    mutation_equivalent, serre_operator, Equivalence, MutationWord, SearchOptions,
};
use stokes_braid::stokes::StokesMat;

fn main() {
    // Gram matrix of O, O(1), O(2) on the projective plane.
    let s = StokesMat::from_i64_rows(&[&[1, 3, 6], &[0, 1, 3], &[0, 0, 1]]).unwrap();
    println!("Serre operator {:?}", serre_operator(&s));

    let w = MutationWord::parse("L1R2L1").unwrap();
    let t = w.apply(&s).unwrap();
    println!("after {w}: {t:?}");
    match mutation_equivalent(&s, &t, &SearchOptions::default()).unwrap() {
        Equivalence::Equivalent { word } => println!("search found {word}"),
        other => println!("{other:?}"),
    }

    let ones = StokesMat::from_i64_rows(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]).unwrap();
    println!("{:?}", mutation_equivalent(&s, &ones, &SearchOptions::default()).unwrap());
}
