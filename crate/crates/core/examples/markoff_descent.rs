//! Descent on x² + y² + z² − xyz − 2 = k and class counts by height.
use stokes_braid::diophantine::{enumerate_r3, markoff_reduce, Triple};
use stokes_braid::exact::int;

fn main() {
    for t in [Triple::from_i64(3, 6, 15), Triple::from_i64(2, 5, 5), Triple::from_i64(-3, 9, -24)] {
        let red = markoff_reduce(&t);
        println!("{t} -> {} via {} (k = {}, tag {:?})", red.rep, red.word, red.k, red.tag);
    }
    for k in [-2, -1, 0, 3, 7] {
        let rep = enumerate_r3(&int(k), 60, 1_000_000);
        println!("k = {k:>2}: {} points up to 60, {} classes", rep.points_scanned, rep.count());
    }
}
