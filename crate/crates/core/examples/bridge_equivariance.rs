//! Φ/Ψ between G-tuples and representations, traces and boundary monodromy.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stokes_braid::bridge::{
    boundary_monodromy, phi, psi, rep_to_stokes, CharAction, RepTuple,
};
use stokes_braid::exact::Int;
use stokes_braid::quandle::{BraidAction, BraidWord};
use stokes_braid::stokes::rank4_invariants;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let b = RepTuple::<Int>::random(&mut rng, 4, 5);
    let w: BraidWord = "s2S1s3".parse().unwrap();

    let s = rep_to_stokes(&b);
    let moved = CharAction::new().act_word(&w, &b).unwrap();
    println!("traces commute with the braid action: {}", rep_to_stokes(&moved) == s.act_word(&w).unwrap());
    println!("Φ∘Ψ = id: {}", phi(&psi(&b)).unwrap() == b);
    println!("boundary traces {:?}", boundary_monodromy(&b));
    println!("(e1, e2) of the Stokes matrix {:?}", rank4_invariants(&s));
}
