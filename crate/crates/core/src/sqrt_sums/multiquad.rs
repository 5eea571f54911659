use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{fmt_rational, Rational};
use crate::algebra::Poly;
use crate::cyclotomic::numeric::{Approx, PRECISION_BITS};
use crate::error::{Error, Result};

/// `n = q^2 * s` with `s` squarefree, by trial division.
pub fn squarefree_decompose(n: &BigUint) -> Result<(BigUint, u64)> {
    if n.is_zero() {
        return Ok((BigUint::zero(), 1));
    }
    let mut rest = n.clone();
    let mut square_root = BigUint::one();
    let mut kernel = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square_root *= p.pow(e / 2);
            if e % 2 == 1 {
                kernel *= &p;
            }
        }
        p += 1u32;
    }
    kernel *= rest;
    let s = kernel.to_u64().ok_or_else(|| Error::RadicandTooLarge(n.to_string()))?;
    Ok((square_root, s))
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// An element `Σ c_s √s` of a multiquadratic field, keyed by squarefree
/// `s >= 1` (`s = 1` is the rational part).
///
/// Equality is structural. That is sound because square roots of distinct
/// squarefree positive integers are linearly independent over ℚ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiQuadElt {
    terms: BTreeMap<u64, Rational>,
}

impl MultiQuadElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::term(r, 1)
    }

    /// `c * √s`; `s` must be squarefree.
    pub fn term(c: Rational, s: u64) -> Self {
        assert!(s >= 1, "radicand key must be positive");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(s, c);
        }
        MultiQuadElt { terms }
    }

    /// `√r` in canonical form `q √s`.
    pub fn from_sqrt(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::NegativeRadicand(fmt_rational(r)));
        }
        // √(u/v) = √(u v) / v
        let uv = (r.numer() * r.denom()).to_biguint().expect("nonnegative");
        let (q, s) = squarefree_decompose(&uv)?;
        let coeff = Rational::new(BigInt::from(q), r.denom().clone());
        Ok(Self::term(coeff, s))
    }

    pub fn terms(&self) -> &BTreeMap<u64, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// For a single-term element `q √s`, the pair `(s, q)`.
    pub fn single_term(&self) -> Option<(u64, &Rational)> {
        let mut it = self.terms.iter();
        let (s, q) = it.next()?;
        it.next().is_none().then_some((*s, q))
    }

    /// Primes dividing any radicand key, sorted.
    pub fn primes(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for &s in self.terms.keys() {
            let mut n = s;
            let mut p = 2;
            while p * p <= n {
                if n % p == 0 {
                    out.push(p);
                    n /= p;
                }
                p += 1;
            }
            if n > 1 {
                out.push(n);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultiQuadElt {
            terms: self.terms.iter().map(|(s, v)| (*s, v * c)).collect(),
        }
    }

    fn add_term(&mut self, s: u64, c: Rational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Apply the automorphism `√p ↦ -√p` for every `p` in `flipped_primes`.
    pub fn sign_flip(&self, flipped_primes: &[u64]) -> Self {
        MultiQuadElt {
            terms: self
                .terms
                .iter()
                .map(|(&s, c)| {
                    let hits = flipped_primes.iter().filter(|&&p| s % p == 0).count();
                    (s, if hits % 2 == 1 { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Horner evaluation `f(self)`.
    pub fn eval_poly(&self, f: &Poly) -> Self {
        f.coeffs().iter().rev().fold(Self::zero(), |acc, c| {
            let mut next = &acc * self;
            next.add_term(1, c.clone());
            next
        })
    }

    /// High-precision numeric value (guard rail only).
    pub fn to_approx(&self) -> Approx {
        let mut acc = BigInt::zero();
        for (&s, c) in &self.terms {
            let root = (BigInt::from(s) << (2 * PRECISION_BITS)).sqrt();
            acc += (c.numer() * root).div_floor(c.denom());
        }
        Approx(acc)
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&s, c)| c.to_f64().unwrap_or(f64::NAN) * (s as f64).sqrt())
            .sum()
    }
}

/// `√r` as a canonical multiquadratic element.
pub fn mq_from_sqrt(r: &Rational) -> Result<MultiQuadElt> {
    MultiQuadElt::from_sqrt(r)
}

pub fn mq_sign_flip(flipped_primes: &[u64], u: &MultiQuadElt) -> MultiQuadElt {
    u.sign_flip(flipped_primes)
}

pub fn mq_eval_poly(f: &Poly, u: &MultiQuadElt) -> MultiQuadElt {
    u.eval_poly(f)
}

impl<'a> Add<&'a MultiQuadElt> for &'a MultiQuadElt {
    type Output = MultiQuadElt;
    fn add(self, rhs: &MultiQuadElt) -> MultiQuadElt {
        let mut out = self.clone();
        for (&s, c) in &rhs.terms {
            out.add_term(s, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiQuadElt> for &'a MultiQuadElt {
    type Output = MultiQuadElt;
    fn sub(self, rhs: &MultiQuadElt) -> MultiQuadElt {
        self + &(-rhs)
    }
}

impl Neg for &MultiQuadElt {
    type Output = MultiQuadElt;
    fn neg(self) -> MultiQuadElt {
        MultiQuadElt {
            terms: self.terms.iter().map(|(s, c)| (*s, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a MultiQuadElt> for &'a MultiQuadElt {
    type Output = MultiQuadElt;
    /// `√s √t = g √((s/g)(t/g))` with `g = gcd(s, t)`.
    ///
    /// Panics if a product key overflows `u64`.
    fn mul(self, rhs: &MultiQuadElt) -> MultiQuadElt {
        let mut out = MultiQuadElt::zero();
        for (&s, a) in &self.terms {
            for (&t, b) in &rhs.terms {
                let g = gcd_u64(s, t);
                let key = (s / g).checked_mul(t / g).expect("squarefree key overflows u64");
                let c = a * b * Rational::from_integer(g.into());
                out.add_term(key, c);
            }
        }
        out
    }
}

impl fmt::Display for MultiQuadElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&s, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            match (s, mag.is_one()) {
                (1, _) => write!(f, "{}", fmt_rational(&mag))?,
                (_, true) => write!(f, "√{s}")?,
                _ => write!(f, "{}·√{s}", fmt_rational(&mag))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    radicand: u64,
    #[serde(with = "crate::algebra::rational::serde_rational")]
    coefficient: Rational,
}

impl Serialize for MultiQuadElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(&radicand, c)| TermRepr {
            radicand,
            coefficient: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for MultiQuadElt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermRepr>::deserialize(d)?;
        let mut out = MultiQuadElt::zero();
        for t in terms {
            out.add_term(t.radicand, t.coefficient);
        }
        Ok(out)
    }
}
