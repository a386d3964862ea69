//! Exhaustive comparison of both orbit sets over SL2(F_p).
use stokes_braid::bridge::finite_model_compare_dyn;

fn main() {
    for (p, r) in [(2, 2), (2, 3), (3, 2), (3, 3), (5, 2)] {
        let rep = finite_model_compare_dyn(p, r, 50_000_000).unwrap();
        println!(
            "p = {p} r = {r}: |G| = {}, orbits {} / {}, all checks {}",
            rep.group_order,
            rep.b_orbits,
            rep.c_orbits,
            rep.all_pass()
        );
    }
}
