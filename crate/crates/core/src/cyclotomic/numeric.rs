//! High-precision numeric evaluation, used only as a guard rail.
//!
//! Values are fixed-point integers scaled by `2^PRECISION_BITS` (about 96
//! decimal digits). Nothing in the crate decides anything from these
//! numbers; tests compare exact constructions against them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::element::CycloElt;

pub const PRECISION_BITS: usize = 320;

/// A real number `value / 2^PRECISION_BITS`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approx(pub BigInt);

/// A complex number with fixed-point parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxComplex {
    pub re: Approx,
    pub im: Approx,
}

fn one() -> BigInt {
    BigInt::one() << PRECISION_BITS
}

fn mul_fixed(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> PRECISION_BITS
}

fn div_fixed(a: &BigInt, b: &BigInt) -> BigInt {
    (a << PRECISION_BITS).div_floor(b)
}

/// `atan(1/x)` by its alternating series.
fn atan_inv(x: u32) -> BigInt {
    let x2 = BigInt::from(x) * x;
    let mut term = one() / x;
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    while !term.is_zero() {
        let t = &term / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    sum
}

/// π via Machin's formula `π = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi() -> Approx {
    Approx(atan_inv(5) * 16 - atan_inv(239) * 4)
}

/// `(cos θ, sin θ)` by Taylor series; intended for `|θ| <= 2π`.
pub fn cos_sin(theta: &Approx) -> (Approx, Approx) {
    let t = &theta.0;
    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    let mut term = one();
    let mut k = 0u64;
    // term holds θ^k / k!
    while !term.is_zero() {
        match k % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        k += 1;
        term = mul_fixed(&term, t) / k;
    }
    (Approx(cos), Approx(sin))
}

/// `2π p / q` as a fixed-point value.
fn angle(p: i64, q: i64) -> Approx {
    Approx((pi().0 * BigInt::from(2 * p)).div_floor(&BigInt::from(q)))
}

/// `cot(π/n)` computed directly from the trigonometric series.
pub fn cot_pi_over(n: usize) -> Approx {
    let (c, s) = cos_sin(&angle(1, 2 * n as i64));
    Approx(div_fixed(&c.0, &s.0))
}

/// `cos(2πk/m)`.
pub fn cos_2pi_over(m: usize, k: i64) -> Approx {
    cos_sin(&angle(k.rem_euclid(m as i64), m as i64)).0
}

/// `sin(2πk/m)`.
pub fn sin_2pi_over(m: usize, k: i64) -> Approx {
    cos_sin(&angle(k.rem_euclid(m as i64), m as i64)).1
}

/// Evaluate an element under the embedding `ζ_m ↦ e^{2πi/m}`.
pub fn eval(u: &CycloElt) -> ApproxComplex {
    let m = u.index();
    let (c, s) = cos_sin(&angle(1, m as i64));
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    let (mut pr, mut pi_) = (one(), BigInt::zero());
    for coef in u.rep().coeffs() {
        if !coef.is_zero() {
            re += (coef.numer() * &pr).div_floor(coef.denom());
            im += (coef.numer() * &pi_).div_floor(coef.denom());
        }
        let nr = mul_fixed(&pr, &c.0) - mul_fixed(&pi_, &s.0);
        let ni = mul_fixed(&pr, &s.0) + mul_fixed(&pi_, &c.0);
        (pr, pi_) = (nr, ni);
    }
    ApproxComplex {
        re: Approx(re),
        im: Approx(im),
    }
}

impl Approx {
    pub fn from_rational(r: &crate::algebra::Rational) -> Self {
        Approx((r.numer() << PRECISION_BITS).div_floor(r.denom()))
    }

    pub fn to_f64(&self) -> f64 {
        let shift = PRECISION_BITS - 64;
        (&self.0 >> shift).to_f64().unwrap_or(f64::NAN) / 2f64.powi(64)
    }

    /// `|self - other| < 10^{-digits}`.
    pub fn agrees_with(&self, other: &Approx, digits: u32) -> bool {
        let diff = (&self.0 - &other.0).abs() * num_traits::pow(BigInt::from(10), digits as usize);
        diff < one()
    }

    pub fn is_negligible(&self, digits: u32) -> bool {
        self.agrees_with(&Approx(BigInt::zero()), digits)
    }

    pub fn add(&self, other: &Approx) -> Approx {
        Approx(&self.0 + &other.0)
    }

    pub fn mul(&self, other: &Approx) -> Approx {
        Approx(mul_fixed(&self.0, &other.0))
    }

    /// Decimal rendering truncated to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = (&self.0 * num_traits::pow(BigInt::from(10), digits)) >> PRECISION_BITS;
        let neg = scaled.is_negative();
        let s = scaled.abs().to_string();
        let s = format!("{s:0>width$}", width = digits + 1);
        let (int, frac) = s.split_at(s.len() - digits);
        format!("{}{int}.{frac}", if neg { "-" } else { "" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        assert_eq!(
            pi().to_decimal(50),
            "3.14159265358979323846264338327950288419716939937510"
        );
    }

    #[test]
    fn trig_against_f64() {
        let (c, s) = cos_sin(&angle(1, 12));
        assert!((c.to_f64() - (std::f64::consts::PI / 6.0).cos()).abs() < 1e-15);
        assert!((s.to_f64() - 0.5).abs() < 1e-15);
        assert!((cot_pi_over(5).to_f64() - 1.0 / (std::f64::consts::PI / 5.0).tan()).abs() < 1e-14);
    }
}
