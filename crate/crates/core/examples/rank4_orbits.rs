//! Height-bounded B4 orbit enumeration on rank-4 fibers.
use stokes_braid::diophantine::{enumerate_r4, verify_dtdvdb, R4Options};
use stokes_braid::exact::int;

fn main() {
    let opts = R4Options::default();
    for (e1, e2) in [(1, -1), (0, -4)] {
        for h in 3..=5 {
            let rep = enumerate_r4(&int(e1), &int(e2), h, &opts);
            println!(
                "(e1, e2) = ({e1}, {e2}) H = {h}: {} points, {} classes, degenerate {}",
                rep.points_scanned,
                rep.count(),
                rep.degenerate
            );
        }
    }
    println!("dTdVdB shapes up to n = 20: {}", verify_dtdvdb(20).all_pass());
}
