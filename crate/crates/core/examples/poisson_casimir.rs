//! The quadratic bracket on rank-3 Stokes data and its Casimirs.
use stokes_braid::poisson::{
    bracket_coords, check_casimir, check_jacobi, coords, coord_name, CheckMode,
};

fn main() {
    let names: Vec<String> = coords(3).into_iter().map(|(i, j)| coord_name(i, j)).collect();
    for (a, b) in [((1, 2), (1, 3)), ((1, 2), (2, 3)), ((1, 3), (2, 3))] {
        let br = bracket_coords(a.0, a.1, b.0, b.1, 3).unwrap();
        println!("{{s{}{}, s{}{}}} = {}", a.0, a.1, b.0, b.1, br.display_with(&names));
    }
    println!("Jacobi r = 3 symbolic: {}", check_jacobi(3, CheckMode::Symbolic).unwrap().passed());
    let cas = check_casimir(3, CheckMode::Symbolic).unwrap();
    for (t, c) in cas.coefficients.iter().enumerate() {
        println!("  λ^{t}: {}", c.display_with(&names));
    }
    println!("Casimirs r = 3: {}", cas.passed());
    println!("Casimirs r = 4 at 50 points: {}", check_casimir(4, CheckMode::sampled(50)).unwrap().passed());
}
