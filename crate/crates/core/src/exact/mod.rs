//! Exact scalars, dense matrices and polynomials.

pub mod matrix;
pub mod multipoly;
pub mod poly;
pub mod ring;
pub mod sl2;

pub use matrix::{charpoly, det_bareiss, ExactRank, Mat};
pub use multipoly::MultiPoly;
pub use poly::{discriminant, UniPoly};
pub use ring::{int, rat, Field, Fp, Int, Rat, Ring};
pub use sl2::{product, random_sl2_word, Mat2};
pub use num_traits::{One, Zero};
