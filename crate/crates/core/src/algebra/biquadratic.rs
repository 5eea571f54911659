//! Galois groups of biquadratic quartics `X^4 + A*X^2 + B` over ℚ.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::{is_square_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GaloisClass {
    /// The quartic factors over ℚ.
    Reducible,
    /// Klein four-group.
    V4,
    /// Cyclic of order four.
    C4,
    /// Dihedral of order eight.
    D4,
}

/// The monic quartic `X^4 + a*X^2 + b`.
pub fn biquadratic_poly(a: &Rational, b: &Rational) -> Poly {
    Poly::new(vec![
        b.clone(),
        Rational::zero(),
        a.clone(),
        Rational::zero(),
        Rational::one(),
    ])
}

/// Whether `X^4 + a*X^2 + b` factors over ℚ.
///
/// Any factorization either splits the quadratic in `X^2` (rational
/// discriminant root) or has the shape `(X^2 + uX + v)(X^2 - uX + v)` with
/// `u != 0`, which forces `v^2 = b` and `u^2 = 2v - a`.
pub fn biquadratic_is_reducible(a: &Rational, b: &Rational) -> bool {
    let disc = a * a - b * Rational::from_integer(4.into());
    if is_square_rational(&disc).is_some() {
        return true;
    }
    let Some(root) = is_square_rational(b) else {
        return false;
    };
    let two = Rational::from_integer(2.into());
    [root.clone(), -root].iter().any(|v| {
        let u2 = &two * v - a;
        !u2.is_zero() && is_square_rational(&u2).is_some()
    })
}

/// Classify the Galois group of `X^4 + a*X^2 + b`.
///
/// For an irreducible biquadratic the group is V4 when `b` is a square,
/// C4 when `b(a^2 - 4b)` is a square, and D4 otherwise.
pub fn biquadratic_galois_class(a: &Rational, b: &Rational) -> GaloisClass {
    if biquadratic_is_reducible(a, b) {
        return GaloisClass::Reducible;
    }
    if is_square_rational(b).is_some() {
        return GaloisClass::V4;
    }
    let four = Rational::from_integer(4.into());
    if is_square_rational(&(b * (a * a - four * b))).is_some() {
        GaloisClass::C4
    } else {
        GaloisClass::D4
    }
}
