//! Exact scalars, univariate polynomials over ℚ and the biquadratic
//! Galois classifier.

pub mod biquadratic;
pub mod poly;
pub mod rational;

pub use biquadratic::{biquadratic_galois_class, biquadratic_is_reducible, biquadratic_poly, GaloisClass};
pub use poly::{poly_ext_gcd, poly_gcd, Poly};
pub use rational::{int, is_square_rational, rat, Rational};
