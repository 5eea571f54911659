//! Flatness of `ℚ(cot(π/n))` and the supporting Galois-theoretic checks.
//!
//! A real field is *flat* when every subfield has a Galois group in which
//! each element has order one or two. `ℚ(cot(π/n))` sits inside the abelian
//! field `ℚ(ζ_{4n})`, so all its subfields are Galois and their groups are
//! quotients of `G = (ℤ/4n)^* / Stab(cot(π/n))`. Flatness is then the
//! statement that `G` has exponent at most two, i.e. `a^2 ∈ Stab` for every
//! unit `a`. No subfield enumeration is needed.

mod ratfunc;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use ratfunc::{cot_multiple_rf, RatFunc};

use crate::algebra::rational::{int, is_square_rational, Rational};
use crate::algebra::{biquadratic_galois_class, biquadratic_poly, GaloisClass, Poly};
use crate::cyclotomic::units::{is_prime, units};
use crate::cyclotomic::{
    cos_2pi_over, coset_representatives, cot_pi_over, eval_poly, field_membership, CycloElt, UnitSubgroup,
};
use crate::error::{Error, Result};

/// The values of `n >= 3` for which `ℚ(cot(π/n))` is flat.
pub const FLAT_INDICES: [usize; 6] = [3, 4, 6, 8, 12, 24];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatReport {
    pub n: usize,
    pub degree: usize,
    /// Order of every coset in `(ℤ/4n)^* / Stab(cot(π/n))`, sorted.
    pub quotient_orders: Vec<usize>,
    pub is_flat: bool,
    pub is_cyclic: bool,
}

/// Orders of all cosets `aH` in `(ℤ/m)^*/H`, sorted ascending.
pub fn quotient_structure(h: &UnitSubgroup) -> Result<Vec<usize>> {
    // revalidate: H may have been deserialized
    let h = UnitSubgroup::new(h.modulus(), h.elements().to_vec())?;
    let m = h.modulus();
    let mut orders: Vec<usize> = coset_representatives(&h)
        .into_iter()
        .map(|a| {
            let mut x = a % m;
            let mut k = 1;
            while !h.contains(x) {
                x = x * a % m;
                k += 1;
            }
            k
        })
        .collect();
    orders.sort_unstable();
    Ok(orders)
}

fn report_for(n: usize, stab: &UnitSubgroup) -> Result<FlatReport> {
    let m = stab.modulus();
    let quotient_orders = quotient_structure(stab)?;
    let degree = quotient_orders.len();
    let is_flat = units(m).into_iter().all(|a| stab.contains(a * a % m));
    debug_assert_eq!(is_flat, quotient_orders.iter().all(|&o| o <= 2));
    Ok(FlatReport {
        n,
        degree,
        is_cyclic: quotient_orders.last() == Some(&degree),
        quotient_orders,
        is_flat,
    })
}

/// Decide flatness of `ℚ(cot(π/n))` for `n >= 3`.
pub fn is_flat_cot_field(n: usize) -> Result<FlatReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    report_for(n, &cot_pi_over(n)?.stabilizer())
}

/// Flatness reports for every `n` in `[lo, hi]`, sorted by `n`.
pub fn classify_range(lo: usize, hi: usize) -> Result<Vec<FlatReport>> {
    if lo < 3 || lo > hi {
        return Err(Error::InvalidArgument(format!("need 3 <= lo <= hi, got [{lo}, {hi}]")));
    }
    (lo..=hi).into_par_iter().map(is_flat_cot_field).collect()
}

/// Evidence for the cyclic-quartic lemma on one instance `(p, a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub p: u64,
    #[serde(with = "crate::algebra::rational::serde_rational")]
    pub a: Rational,
    #[serde(with = "crate::algebra::rational::serde_rational")]
    pub b: Rational,
    #[serde(with = "crate::algebra::rational::serde_rational")]
    pub c: Rational,
    /// `X^4 - 2aX^2 + (a^2 - p b^2)`.
    pub quartic: Poly,
    pub galois_class: GaloisClass,
    /// `B (A^2 - 4B)` for the quartic `X^4 + A X^2 + B`.
    #[serde(with = "crate::algebra::rational::serde_rational")]
    pub discriminant_product: Rational,
    /// `2pbc`, whose square is `discriminant_product`.
    #[serde(with = "crate::algebra::rational::serde_rational")]
    pub square_witness: Rational,
}

/// Check the lemma: if `a^2 = p(b^2 + c^2)` with `p` prime and `a, b, c > 0`,
/// then `ℚ(sqrt(a + b sqrt p))` is cyclic quartic.
///
/// The minimal polynomial of `sqrt(a + b sqrt p)` is built with constant term
/// `a^2 - p b^2`, the product of the four roots `±sqrt(a ± b sqrt p)`.
pub fn lemma_quartic_check(p: u64, a: &Rational, b: &Rational, c: &Rational) -> Result<LemmaReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if [a, b, c].iter().any(|x| !x.is_positive()) {
        return Err(Error::InvalidArgument("a, b, c must be positive".into()));
    }
    let pr = Rational::from_integer(p.into());
    let lhs = a * a;
    let rhs = &pr * (b * b + c * c);
    if lhs != rhs {
        return Err(Error::LemmaHypothesis {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    let big_a = -(a * int(2));
    let big_b = a * a - &pr * b * b;
    let quartic = biquadratic_poly(&big_a, &big_b);
    let discriminant_product = &big_b * (&big_a * &big_a - &big_b * int(4));
    let square_witness = int(2) * &pr * b * c;
    if &square_witness * &square_witness != discriminant_product {
        return Err(Error::Internal("(2pbc)^2 != B(A^2 - 4B)".into()));
    }
    let galois_class = biquadratic_galois_class(&big_a, &big_b);
    if galois_class != GaloisClass::C4 {
        return Err(Error::Internal(format!(
            "classifier returned {galois_class:?}, expected C4"
        )));
    }
    if is_square_rational(&discriminant_product).as_ref() != Some(&square_witness) {
        return Err(Error::Internal("square witness disagrees with integer sqrt".into()));
    }
    Ok(LemmaReport {
        p,
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        quartic,
        galois_class,
        discriminant_product,
        square_witness,
    })
}

/// Outcome of checking that `cot(π/d)` and `cos(2π/d)` lie in `ℚ(cot(π/n))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CotMultipleReport {
    pub n: usize,
    pub d: usize,
    pub multiple: usize,
    /// `C_{n/d}` rendered in `t`.
    pub recurrence: String,
    /// `C_{n/d}(cot(π/n)) == cot(π/d)` exactly.
    pub recurrence_holds: bool,
    pub cot_in_field: bool,
    /// `(t^2 - 1)/(t^2 + 1) == cos(2π/d)` at `t = cot(π/d)`.
    pub cos_identity_holds: bool,
    pub cos_in_field: bool,
}

impl CotMultipleReport {
    pub fn verified(&self) -> bool {
        self.recurrence_holds && self.cot_in_field && self.cos_identity_holds && self.cos_in_field
    }
}

pub fn verify_cot_multiple(n: usize, d: usize) -> Result<CotMultipleReport> {
    if n < 3 || d < 2 {
        return Err(Error::InvalidArgument(format!(
            "need n >= 3 and d >= 2, got n={n}, d={d}"
        )));
    }
    if !n.is_multiple_of(d) {
        return Err(Error::InvalidArgument(format!("{d} does not divide {n}")));
    }
    let k = n / d;
    let c_k = cot_multiple_rf(k)?;
    let t = cot_pi_over(n)?;
    let den = eval_poly(c_k.denominator(), &t);
    if den.is_zero() {
        return Err(Error::Pole { n, k });
    }
    let value = &eval_poly(c_k.numerator(), &t) * &den.inv()?;
    let cot_d = cot_pi_over(d)?.lift(4 * n)?;

    let s2 = &cot_d * &cot_d;
    let one = CycloElt::one(4 * n);
    let cos_from_cot = &(&s2 - &one) * &(&s2 + &one).inv()?;
    let cos_direct = cos_2pi_over(d, 1)?;

    Ok(CotMultipleReport {
        n,
        d,
        multiple: k,
        recurrence: c_k.to_string(),
        recurrence_holds: value == cot_d,
        cot_in_field: field_membership(&cot_d, &t),
        cos_identity_holds: cos_from_cot == cos_direct,
        cos_in_field: field_membership(&cos_from_cot, &t),
    })
}

/// Degree and cyclicity of a real cyclotomic subfield `ℚ(cos(2π/q))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealCyclotomicReport {
    pub q: usize,
    pub degree: usize,
    pub expected_degree: usize,
    pub quotient_orders: Vec<usize>,
    pub is_cyclic: bool,
    pub min_poly: Poly,
}

impl RealCyclotomicReport {
    pub fn verified(&self) -> bool {
        self.degree == self.expected_degree && self.is_cyclic && self.degree >= 3
    }
}

/// For `q` prime `>= 7` or `q = 9`: `ℚ(cos(2π/q))` is cyclic of degree
/// `(q-1)/2` (resp. 3).
pub fn real_cyclotomic_check(q: usize) -> Result<RealCyclotomicReport> {
    let expected_degree = match q {
        9 => 3,
        q if q >= 7 && is_prime(q as u64) => (q - 1) / 2,
        _ => {
            return Err(Error::InvalidArgument(format!("q must be a prime >= 7 or 9, got {q}")));
        }
    };
    let u = cos_2pi_over(q, 1)?;
    let h = u.stabilizer();
    let quotient_orders = quotient_structure(&h)?;
    let degree = quotient_orders.len();
    Ok(RealCyclotomicReport {
        q,
        degree,
        expected_degree,
        is_cyclic: quotient_orders.last() == Some(&degree),
        quotient_orders,
        min_poly: u.min_poly()?,
    })
}

/// `ℚ(cot(π/n))` for `n ∈ {5, 16}`: cyclic quartic, generated by a
/// lemma-type radical `sqrt(a + b sqrt p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicQuarticReport {
    pub n: usize,
    pub flat: FlatReport,
    pub cot_min_poly: Poly,
    /// The radical `θ = sqrt(a + b sqrt p)` built in the cyclotomic field.
    pub radical: CycloElt,
    pub radical_min_poly: Poly,
    /// `ℚ(cot(π/n)) ⊆ ℚ(θ)` and `ℚ(θ) ⊆ ℚ(cot(π/n))`.
    pub cot_in_radical_field: bool,
    pub radical_in_cot_field: bool,
    pub lemma: LemmaReport,
}

impl CyclicQuarticReport {
    pub fn verified(&self) -> bool {
        self.flat.degree == 4
            && self.flat.is_cyclic
            && !self.flat.is_flat
            && self.radical_min_poly == self.lemma.quartic
            && self.cot_in_radical_field
            && self.radical_in_cot_field
    }
}

pub fn cyclic_quartic_check(n: usize) -> Result<CyclicQuarticReport> {
    let cot = cot_pi_over(n)?;
    // θ = 5 cot(π/5) = sqrt(25 + 10 sqrt 5), or θ = cot(π/16) - 1 - sqrt 2 = sqrt(4 + 2 sqrt 2)
    let (radical, (p, a, b, c)) = match n {
        5 => (cot.scale(&int(5)), (5, 25, 10, 5)),
        16 => {
            let sqrt2 = cos_2pi_over(8, 1)?.scale(&int(2));
            let r = &(&cot - &CycloElt::one(4 * n)) - &sqrt2;
            (r, (2, 4, 2, 2))
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "the cyclic quartic check covers n = 5 and n = 16, got {n}"
            )))
        }
    };
    let lemma = lemma_quartic_check(p, &int(a), &int(b), &int(c))?;
    Ok(CyclicQuarticReport {
        n,
        flat: is_flat_cot_field(n)?,
        cot_min_poly: cot.min_poly()?,
        radical_min_poly: radical.min_poly()?,
        cot_in_radical_field: field_membership(&cot, &radical),
        radical_in_cot_field: field_membership(&radical, &cot),
        radical,
        lemma,
    })
}

/// Degree of `(n/4) cot(π/n)` over ℚ and whether it is a power of two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub n: usize,
    pub degree: usize,
    pub power_of_two: bool,
}

pub fn area_degree_check(n: usize) -> Result<DegreeReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    let degree = cot_pi_over(n)?.degree();
    Ok(DegreeReport {
        n,
        degree,
        power_of_two: degree.is_power_of_two(),
    })
}

/// The minimal polynomial of `area(P_n) = (n/4) cot(π/n)`.
pub fn polygon_area_min_poly(n: usize) -> Result<Poly> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    let area = cot_pi_over(n)?.scale(&Rational::new(n.into(), 4.into()));
    area.min_poly()
}
