//! Elements of cyclotomic fields `ℚ(ζ_m) = ℚ[x]/Φ_m(x)`.

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::units::{euler_phi, gcd, lcm, mobius, prime_factors, units, UnitSubgroup};
use crate::algebra::rational::{int, serde_rational_vec, Rational};
use crate::algebra::{poly_ext_gcd, Poly};
use crate::error::{Error, Result};

/// Per-index data shared by every element of `ℚ(ζ_m)`.
struct Context {
    modulus: usize,
    phi: usize,
    cyclotomic: Arc<Poly>,
    /// Nonzero coefficients of `Φ_m` below the leading term.
    sparse_tail: Vec<(usize, Rational)>,
    primes: Vec<usize>,
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<Context>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Context>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn context(m: usize) -> Arc<Context> {
    if let Some(ctx) = cache().read().expect("cache poisoned").get(&m) {
        return Arc::clone(ctx);
    }
    let cyclotomic = Arc::new(compute_cyclotomic(m));
    let phi = euler_phi(m);
    debug_assert_eq!(cyclotomic.degree(), Some(phi));
    let sparse_tail = cyclotomic.coeffs()[..phi]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j, c.clone()))
        .collect();
    let ctx = Arc::new(Context {
        modulus: m,
        phi,
        cyclotomic,
        sparse_tail,
        primes: prime_factors(m),
    });
    Arc::clone(cache().write().expect("cache poisoned").entry(m).or_insert(ctx))
}

fn compute_cyclotomic(m: usize) -> Poly {
    let mut coeffs = vec![Rational::zero(); m + 1];
    coeffs[0] = int(-1);
    coeffs[m] = int(1);
    let mut f = Poly::new(coeffs);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        f = f
            .exact_div(&cyclotomic_poly(d))
            .expect("cyclotomic polynomials of proper divisors divide x^m - 1");
    }
    f
}

/// The `m`-th cyclotomic polynomial `Φ_m`, memoized.
///
/// Computed as `(x^m - 1) / Π_{d | m, d < m} Φ_d`.
pub fn cyclotomic_poly(m: usize) -> Arc<Poly> {
    assert!(m >= 1, "cyclotomic_poly: m must be positive");
    Arc::clone(&context(m).cyclotomic)
}

/// Reduce a coefficient vector (any length) to a residue mod `Φ_m`.
fn reduce(ctx: &Context, mut v: Vec<Rational>) -> Poly {
    let m = ctx.modulus;
    if v.len() > m {
        // x^m = 1 in ℚ(ζ_m)
        let tail = v.split_off(m);
        for (i, c) in tail.into_iter().enumerate() {
            if !c.is_zero() {
                v[i % m] += c;
            }
        }
    }
    let phi = ctx.phi;
    for i in (phi..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut v[i], Rational::zero());
        for (j, d) in &ctx.sparse_tail {
            v[i - phi + j] -= &c * d;
        }
    }
    v.truncate(phi);
    Poly::new(v)
}

/// An element of `ℚ(ζ_m)`, represented by its residue modulo `Φ_m`.
///
/// Arithmetic between elements of different indices lifts both operands to
/// the least common multiple first; equality does the same.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CycloElt {
    index: usize,
    #[serde(rename = "coefficients", with = "poly_as_vec")]
    rep: Poly,
}

mod poly_as_vec {
    use super::*;
    pub fn serialize<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
        serde_rational_vec::serialize(p.coeffs(), s)
    }
    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Poly, D::Error> {
        serde_rational_vec::deserialize(d).map(Poly::new)
    }
}

impl CycloElt {
    /// Residue of an arbitrary polynomial in `ζ_m`.
    pub fn from_poly(index: usize, f: &Poly) -> Self {
        assert!(index >= 1, "cyclotomic index must be positive");
        let ctx = context(index);
        CycloElt {
            index,
            rep: reduce(&ctx, f.coeffs().to_vec()),
        }
    }

    pub fn from_rational(index: usize, r: Rational) -> Self {
        Self::from_poly(index, &Poly::constant(r))
    }

    pub fn zero(index: usize) -> Self {
        Self::from_rational(index, Rational::zero())
    }

    pub fn one(index: usize) -> Self {
        Self::from_rational(index, Rational::one())
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn zeta_pow(index: usize, k: i64) -> Self {
        let e = k.rem_euclid(index as i64) as usize;
        Self::from_poly(index, &Poly::monomial(Rational::one(), e))
    }

    /// The generator `ζ_m`, the residue class of `x`.
    pub fn zeta(index: usize) -> Self {
        Self::zeta_pow(index, 1)
    }

    /// `i = ζ_m^{m/4}`; requires `4 | m`.
    pub fn imaginary_unit(index: usize) -> Result<Self> {
        if !index.is_multiple_of(4) {
            return Err(Error::InvalidArgument(format!("i is not in Q(zeta_{index})")));
        }
        Ok(Self::zeta_pow(index, (index / 4) as i64))
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// The value as a rational, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.rep.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycloElt {
            index: self.index,
            rep: self.rep.scale(c),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycloElt::one(self.index);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse via extended Euclid against `Φ_m`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::InverseOfZero { index: self.index });
        }
        let ctx = context(self.index);
        let (d, s, _) = poly_ext_gcd(&self.rep, &ctx.cyclotomic)?;
        if d != Poly::one() {
            return Err(Error::Internal(format!(
                "gcd with Phi_{} is {d}; cyclotomic polynomial not irreducible?",
                self.index
            )));
        }
        Ok(CycloElt::from_poly(self.index, &s))
    }

    /// Embed into `ℚ(ζ_M)` via `ζ_m ↦ ζ_M^{M/m}`.
    pub fn lift(&self, target: usize) -> Result<Self> {
        if target == 0 || !target.is_multiple_of(self.index) {
            return Err(Error::IndexNotDivisor {
                from: self.index,
                to: target,
            });
        }
        if target == self.index {
            return Ok(self.clone());
        }
        Ok(CycloElt::from_poly(target, &self.rep.inflate(target / self.index)))
    }

    /// The automorphism `σ_a : ζ ↦ ζ^a`.
    pub fn galois_apply(&self, a: usize) -> Result<Self> {
        let m = self.index;
        if gcd(a % m, m) != 1 {
            return Err(Error::NotAUnit { residue: a, modulus: m });
        }
        Ok(self.galois_apply_unchecked(a))
    }

    fn galois_apply_unchecked(&self, a: usize) -> Self {
        let m = self.index;
        let mut v = vec![Rational::zero(); m];
        for (i, c) in self.rep.coeffs().iter().enumerate() {
            if !c.is_zero() {
                v[(a % m) * i % m] += c;
            }
        }
        CycloElt {
            index: m,
            rep: reduce(&context(m), v),
        }
    }

    /// Complex conjugation `σ_{-1}`.
    pub fn conj(&self) -> Self {
        self.galois_apply_unchecked(self.index - 1)
    }

    pub fn is_real(&self) -> bool {
        self.conj().rep == self.rep
    }

    /// Image of the element in `ℚ[x]/(x^m - 1)` under the primitive
    /// idempotent `e_m = Π_{p | m} (1 - (1/p) Σ_j x^{j m/p})`.
    ///
    /// `ℚ[x]/(x^m - 1) ≅ Π_{d | m} ℚ(ζ_d)` and `e_m` cuts out the `ℚ(ζ_m)`
    /// factor, so this vector is a canonical, Galois-equivariant lift: `σ_a`
    /// acts on it by moving coordinate `i` to `a*i mod m`, and two elements
    /// are equal exactly when their lifts are.
    fn primitive_lift(&self) -> Vec<Rational> {
        let ctx = context(self.index);
        let m = self.index;
        let mut v = self.rep.coeffs().to_vec();
        v.resize(m, Rational::zero());
        for &p in &ctx.primes {
            let stride = m / p;
            let p_inv = Rational::new(1.into(), (p as i64).into());
            let avg: Vec<Rational> = (0..stride)
                .map(|r| (0..p).map(|j| &v[r + j * stride]).sum::<Rational>() * &p_inv)
                .collect();
            for (i, c) in v.iter_mut().enumerate() {
                *c -= &avg[i % stride];
            }
        }
        v
    }

    /// `{ a ∈ (ℤ/m)^* : σ_a(u) = u }`.
    pub fn stabilizer(&self) -> UnitSubgroup {
        let m = self.index;
        if self.as_rational().is_some() {
            return UnitSubgroup::full(m);
        }
        let lift = self.primitive_lift();
        let fixed: Vec<usize> = units(m)
            .into_par_iter()
            .filter(|&a| (0..m).all(|i| lift[a * i % m] == lift[i]))
            .collect();
        UnitSubgroup::new_unchecked(m, fixed)
    }

    /// Degree of `ℚ(u)` over ℚ, `φ(m) / |Stab(u)|`.
    pub fn degree(&self) -> usize {
        self.stabilizer().index()
    }

    /// Distinct conjugates `σ_a(u)`, one per coset of the stabilizer,
    /// together with the coset representatives.
    pub fn conjugates(&self) -> Vec<(usize, CycloElt)> {
        let h = self.stabilizer();
        coset_representatives(&h)
            .into_iter()
            .map(|a| (a, self.galois_apply_unchecked(a)))
            .collect()
    }

    /// `Tr_{ℚ(ζ_m)/ℚ}(u)`, from `Tr(ζ^j) = μ(m/g) φ(m)/φ(m/g)` with
    /// `g = gcd(j, m)`.
    pub fn trace(&self) -> Rational {
        let m = self.index;
        let phi = euler_phi(m) as i64;
        self.rep
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let q = m / gcd(j % m, m);
                c * Rational::from_integer((mobius(q) * phi / euler_phi(q) as i64).into())
            })
            .sum()
    }

    /// Minimal polynomial over ℚ.
    ///
    /// Power sums `p_k` of the conjugates are `Tr(u^k) / |Stab(u)|`;
    /// Newton's identities turn them into the elementary symmetric
    /// functions, i.e. the coefficients of `Π (X - σ_a(u))`.
    pub fn min_poly(&self) -> Result<Poly> {
        let stab = self.stabilizer().order();
        let d = euler_phi(self.index) / stab;
        let stab = Rational::from_integer((stab as i64).into());
        let mut power = CycloElt::one(self.index);
        let mut p = Vec::with_capacity(d + 1);
        p.push(Rational::zero());
        for _ in 0..d {
            power = &power * self;
            p.push(power.trace() / &stab);
        }
        // e_k = (1/k) Σ_{i=1..k} (-1)^{i-1} e_{k-i} p_i
        let mut e = vec![Rational::one()];
        for k in 1..=d {
            let mut acc = Rational::zero();
            for i in 1..=k {
                let t = &e[k - i] * &p[i];
                if i % 2 == 1 {
                    acc += t;
                } else {
                    acc -= t;
                }
            }
            e.push(acc / Rational::from_integer((k as i64).into()));
        }
        let coeffs = (0..=d)
            .map(|j| {
                let k = d - j;
                if k.is_multiple_of(2) {
                    e[k].clone()
                } else {
                    -e[k].clone()
                }
            })
            .collect();
        Ok(Poly::new(coeffs))
    }

    fn aligned<'a>(&'a self, other: &'a CycloElt) -> (Cow<'a, CycloElt>, Cow<'a, CycloElt>) {
        if self.index == other.index {
            return (Cow::Borrowed(self), Cow::Borrowed(other));
        }
        let m = lcm(self.index, other.index);
        let lift = |u: &CycloElt| Cow::Owned(u.lift(m).expect("lcm is a multiple"));
        (lift(self), lift(other))
    }
}

/// Smallest representative of every coset `aH` in `(ℤ/m)^*/H`, sorted.
pub fn coset_representatives(h: &UnitSubgroup) -> Vec<usize> {
    let m = h.modulus();
    let mut seen = vec![false; m];
    let mut reps = Vec::new();
    for a in units(m) {
        if seen[a] {
            continue;
        }
        reps.push(a);
        for &x in h.elements() {
            seen[a * x % m] = true;
        }
    }
    reps
}

/// `u ∈ ℚ(v)`, decided by `Stab(v) ⊆ Stab(u)` in a common cyclotomic field.
pub fn field_membership(u: &CycloElt, v: &CycloElt) -> bool {
    let (u, v) = u.aligned(v);
    v.stabilizer().is_subset_of(&u.stabilizer())
}

/// Horner evaluation of a rational polynomial at a cyclotomic element.
pub fn eval_poly(f: &Poly, u: &CycloElt) -> CycloElt {
    f.coeffs().iter().rev().fold(CycloElt::zero(u.index), |acc, c| {
        let mut next = &acc * u;
        next.rep = &next.rep + &Poly::constant(c.clone());
        next
    })
}

/// `cot(π/n)` in `ℚ(ζ_{4n})`, as `ω^n (ω^4 + 1) / (ω^4 - 1)` with `ω = ζ_{4n}`.
///
/// With `ω = e^{iπ/(2n)}` we have `i = ω^n` and `e^{2iπ/n} = ω^4`, and
/// `cot θ = i (e^{2iθ} + 1) / (e^{2iθ} - 1)`.
pub fn cot_pi_over(n: usize) -> Result<CycloElt> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("cot(pi/{n}) is undefined")));
    }
    let m = 4 * n;
    let w4 = CycloElt::zeta_pow(m, 4);
    let one = CycloElt::one(m);
    let num = &CycloElt::zeta_pow(m, n as i64) * &(&w4 + &one);
    let den = (&w4 - &one).inv()?;
    Ok(&num * &den)
}

/// `cos(2πk/m) = (ζ_m^k + ζ_m^{-k}) / 2` in `ℚ(ζ_m)`.
pub fn cos_2pi_over(m: usize, k: i64) -> Result<CycloElt> {
    if m < 1 {
        return Err(Error::InvalidArgument("index must be positive".into()));
    }
    let s = &CycloElt::zeta_pow(m, k) + &CycloElt::zeta_pow(m, -k);
    Ok(s.scale(&Rational::new(1.into(), 2.into())))
}

/// `sin(2πk/m) = -i (ζ_m^k - ζ_m^{-k}) / 2`; requires `4 | m`.
pub fn sin_2pi_over(m: usize, k: i64) -> Result<CycloElt> {
    let minus_i = -&CycloElt::imaginary_unit(m)?;
    let d = &CycloElt::zeta_pow(m, k) - &CycloElt::zeta_pow(m, -k);
    Ok((&minus_i * &d).scale(&Rational::new(1.into(), 2.into())))
}

impl PartialEq for CycloElt {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        a.rep == b.rep
    }
}

impl Eq for CycloElt {}

impl<'a> Add<&'a CycloElt> for &'a CycloElt {
    type Output = CycloElt;
    fn add(self, rhs: &CycloElt) -> CycloElt {
        let (a, b) = self.aligned(rhs);
        CycloElt {
            index: a.index,
            rep: &a.rep + &b.rep,
        }
    }
}

impl<'a> Sub<&'a CycloElt> for &'a CycloElt {
    type Output = CycloElt;
    fn sub(self, rhs: &CycloElt) -> CycloElt {
        let (a, b) = self.aligned(rhs);
        CycloElt {
            index: a.index,
            rep: &a.rep - &b.rep,
        }
    }
}

impl Neg for &CycloElt {
    type Output = CycloElt;
    fn neg(self) -> CycloElt {
        CycloElt {
            index: self.index,
            rep: -&self.rep,
        }
    }
}

impl<'a> Mul<&'a CycloElt> for &'a CycloElt {
    type Output = CycloElt;
    fn mul(self, rhs: &CycloElt) -> CycloElt {
        let (a, b) = self.aligned(rhs);
        let ctx = context(a.index);
        let prod = &a.rep * &b.rep;
        CycloElt {
            index: a.index,
            rep: reduce(&ctx, prod.into_coeffs()),
        }
    }
}

impl fmt::Display for CycloElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.rep.to_string().replace('x', "z");
        write!(f, "{s} (z = zeta_{})", self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traces() {
        assert_eq!(CycloElt::zeta(5).trace(), int(-1));
        assert_eq!(CycloElt::one(12).trace(), int(4));
        assert_eq!(CycloElt::zeta_pow(12, 6).trace(), int(-4));
        assert_eq!(CycloElt::zeta_pow(12, 4).trace(), int(-2));
    }
    use crate::algebra::rational::rat;

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(*cyclotomic_poly(1), Poly::from_ints(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(12), Poly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(*cyclotomic_poly(20), Poly::from_ints(&[1, 0, -1, 0, 1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(105).coeff(7), int(-2));
    }

    #[test]
    fn field_ops() {
        let x = CycloElt::zeta(5);
        assert_eq!(&x * &x.inv().unwrap(), CycloElt::one(5));
        let i = CycloElt::zeta(4);
        assert_eq!(&i * &i, CycloElt::from_rational(4, int(-1)));
        let z = &CycloElt::zeta(12) + &CycloElt::zeta_pow(12, 11);
        assert_eq!(&z * &z, CycloElt::from_rational(12, int(3)));
        assert_eq!(CycloElt::zero(7).inv(), Err(Error::InverseOfZero { index: 7 }));
    }

    #[test]
    fn lifting() {
        assert_eq!(CycloElt::one(3).lift(12).unwrap(), CycloElt::one(12));
        assert_eq!(CycloElt::zeta(4).lift(8).unwrap(), CycloElt::zeta_pow(8, 2));
        assert!(CycloElt::zeta(4).lift(6).is_err());
        // cross-index equality
        assert_eq!(CycloElt::zeta(4), CycloElt::zeta_pow(8, 2));
    }

    #[test]
    fn galois_action() {
        let u = cot_pi_over(5).unwrap();
        assert_eq!(u.galois_apply(1).unwrap(), u);
        assert_eq!(u.galois_apply(19).unwrap(), u);
        assert_eq!(CycloElt::zeta(5).galois_apply(2).unwrap(), CycloElt::zeta_pow(5, 2));
        assert!(u.galois_apply(4).is_err());
    }

    #[test]
    fn cotangents() {
        assert!(cot_pi_over(2).unwrap().is_zero());
        assert_eq!(cot_pi_over(4).unwrap().as_rational(), Some(int(1)));
        assert_eq!(
            cot_pi_over(5).unwrap().min_poly().unwrap(),
            Poly::new(vec![rat(1, 5), int(0), int(-2), int(0), int(1)])
        );
        assert!(cot_pi_over(1).is_err());
    }

    #[test]
    fn cosines() {
        assert!(cos_2pi_over(4, 1).unwrap().is_zero());
        assert_eq!(cos_2pi_over(6, 1).unwrap().as_rational(), Some(rat(1, 2)));
        assert_eq!(
            cos_2pi_over(5, 1).unwrap().min_poly().unwrap(),
            Poly::new(vec![rat(-1, 4), rat(1, 2), int(1)])
        );
        assert_eq!(
            cos_2pi_over(9, 1).unwrap().min_poly().unwrap(),
            Poly::new(vec![rat(1, 8), rat(-3, 4), int(0), int(1)])
        );
    }

    #[test]
    fn stabilizers() {
        assert_eq!(
            CycloElt::from_rational(20, rat(7, 3)).stabilizer(),
            UnitSubgroup::full(20)
        );
        assert_eq!(cot_pi_over(5).unwrap().stabilizer().elements(), &[1, 19]);
        assert_eq!(CycloElt::zeta(5).stabilizer().elements(), &[1]);
        assert_eq!(
            CycloElt::from_rational(9, rat(7, 3)).min_poly().unwrap(),
            Poly::new(vec![rat(-7, 3), int(1)])
        );
    }

    #[test]
    fn membership() {
        let c5 = cot_pi_over(5).unwrap();
        assert!(field_membership(&c5, &cot_pi_over(10).unwrap()));
        assert!(field_membership(&cos_2pi_over(5, 1).unwrap(), &c5));
        assert!(!field_membership(&c5, &cot_pi_over(7).unwrap()));
    }

    #[test]
    fn lift_keeps_min_poly() {
        let u = cot_pi_over(5).unwrap();
        assert_eq!(u.lift(40).unwrap().min_poly().unwrap(), u.min_poly().unwrap());
    }

    #[test]
    fn serializes_as_index_and_coefficients() {
        let u = cos_2pi_over(6, 1).unwrap();
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(s, r#"{"index":6,"coefficients":[{"num":"1","den":"2"}]}"#);
        assert_eq!(serde_json::from_str::<CycloElt>(&s).unwrap(), u);
    }
}
