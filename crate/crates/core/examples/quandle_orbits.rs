//! Braid orbits of quandle tuples: dihedral colorings and the SL2 core quandle.
use stokes_braid::exact::{Int, Mat2};
use stokes_braid::quandle::{
    axiom_check, braid_act, orbit_enumerate, Core, Dihedral, Sl2, Tuples,
};

fn main() {
    let d5 = Dihedral { n: 5 };
    let samples: Vec<(u64, u64, u64)> = (0..5).flat_map(|a| (0..5).map(move |b| (a, b, (a + b) % 5))).collect();
    println!("dihedral Z/5 axioms hold: {}", axiom_check(&d5, &samples).all_pass());

    // All orbits of B_3 on triples in Z/5.
    let seeds: Vec<Vec<u64>> = (0..125u64).map(|i| vec![i / 25, (i / 5) % 5, i % 5]).collect();
    let store = orbit_enumerate(&Tuples(d5), &seeds, |_| true, Clone::clone, 10_000);
    println!("B3 orbits on (Z/5)^3: {}", store.representatives().len());

    let a = Mat2::<Int>::from_i64(1, 1, 0, 1);
    let b = Mat2::<Int>::from_i64(1, 0, 1, 1);
    let moved = braid_act(&"s1s1".parse().unwrap(), &[a, b], &Core(Sl2::<Int>::new())).unwrap();
    println!("σ1² on (U, L) in the core quandle: {:?}", moved);
}
