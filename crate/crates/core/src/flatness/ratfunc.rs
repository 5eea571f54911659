use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{poly_gcd, Poly};
use crate::error::{Error, Result};

/// A reduced rational function `numerator / denominator` over ℚ with a
/// monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunc {
    numerator: Poly,
    denominator: Poly,
}

impl RatFunc {
    pub fn new(numerator: Poly, denominator: Poly) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let g = poly_gcd(&numerator, &denominator)?;
        let num = numerator.exact_div(&g)?;
        let den = denominator.exact_div(&g)?;
        let lc = den.leading().expect("nonzero").recip();
        Ok(RatFunc {
            numerator: num.scale(&lc),
            denominator: den.scale(&lc),
        })
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string().replace('x', "t");
        if self.denominator.degree() == Some(0) && self.denominator.coeff(0).is_one() {
            write!(f, "{num}")
        } else {
            let den = self.denominator.to_string().replace('x', "t");
            write!(f, "({num}) / ({den})")
        }
    }
}

/// `C_k` with `cot(kx) = C_k(cot x)`, built from `C_1(t) = t` and
/// `C_{j+1} = (C_j t - 1) / (C_j + t)`.
pub fn cot_multiple_rf(k: usize) -> Result<RatFunc> {
    if k == 0 {
        return Err(Error::InvalidArgument("multiple must be at least 1".into()));
    }
    let t = Poly::x();
    let one = Poly::one();
    let mut c = RatFunc::new(t.clone(), one.clone())?;
    for _ in 1..k {
        // (N/D * t - 1) / (N/D + t) = (N t - D) / (N + t D)
        let num = &(&c.numerator * &t) - &c.denominator;
        let den = &c.numerator + &(&t * &c.denominator);
        c = RatFunc::new(num, den)?;
    }
    Ok(c)
}
