//! Reflections on rational quadrics and their Clifford-algebra models.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stokes_braid::clifford::{
    coxeter_class4, rational_sphere_point, sphere_reflect, verify_reflection_conjugation, QuadForm,
    CoxeterClass, SphereVec,
};
use stokes_braid::exact::rat;

fn main() {
    let u = SphereVec::new(QuadForm::Split2, vec![rat(2, 1), rat(1, 2)]).unwrap();
    let v = SphereVec::new(QuadForm::Split2, vec![rat(1, 1), rat(1, 1)]).unwrap();
    let w = sphere_reflect(&u, &v).unwrap();
    let shown: Vec<String> = w.coords().iter().map(|c| c.to_string()).collect();
    println!("split form: s_u(v) = ({})", shown.join(", "));

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pts: Vec<SphereVec> = (0..4).map(|_| rational_sphere_point(QuadForm::Det4, &mut rng)).collect();
    let rep = verify_reflection_conjugation(&pts[0], &pts[1]).unwrap();
    println!("det form: reflection equals conjugation in M4: {}", rep.equal);
    match coxeter_class4(&pts).unwrap() {
        CoxeterClass::Even { traces: (a, b) } => println!("Coxeter class of a 4-tuple: even, traces {a} and {b}"),
        CoxeterClass::Odd { trace } => println!("Coxeter class of a 4-tuple: odd, trace {trace}"),
    }
}
