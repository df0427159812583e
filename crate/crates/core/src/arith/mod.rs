//! Exact arithmetic: rationals, univariate polynomials and rational
//! functions over Q, squarefree decomposition, coprime bases, square tests
//! and resultants.

pub mod bivariate;
pub mod factor;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod resultant;
pub mod square;

pub use bivariate::{YPoly, ZPoly};
pub use factor::{
    coprime_basis, poly_gcd, square_class, squarefree_decompose, squarefree_part, CoprimeBasis,
    SqfDecomp,
};
pub use poly::UPoly;
pub use rat::Rat;
pub use ratfunc::{substitute, RatFunc};
pub use resultant::{clear_denominators_monic, resultant, ClearedMonic};
pub use square::{is_square, SquareTest};
