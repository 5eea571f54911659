//! Seeded property checks shared by the property tests and the acceptance
//! runner. Each check draws `CASES` inputs from a fixed-seed generator.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use polyflat::algebra::{is_square_rational, poly_gcd, Poly, Rational};
use polyflat::cyclotomic::numeric::{self, Approx, ApproxComplex};
use polyflat::cyclotomic::units::{euler_phi, units};
use polyflat::cyclotomic::{cos_2pi_over, cot_pi_over, sin_2pi_over, CycloElt};
use polyflat::geometry::heron_area_squared;
use polyflat::sqrt_sums::{mq_from_sqrt, mq_sign_flip, MultiQuadElt};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 500;

pub fn runner(seed: u8) -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]))
}

fn run<S>(seed: u8, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S: Strategy,
    S::Value: std::fmt::Debug,
{
    runner(seed).run(&strategy, test).map_err(|e| e.to_string())
}

fn fail(msg: impl Into<String>) -> TestCaseError {
    TestCaseError::fail(msg.into())
}

fn ensure(ok: bool, msg: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(fail(msg))
    }
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new)
}

const INDICES: [usize; 10] = [1, 3, 4, 5, 7, 8, 9, 12, 15, 20];

/// Element of `ℚ(ζ_m)` as a random combination of a few powers of `ζ_m`.
pub fn cyclo_in(m: usize) -> impl Strategy<Value = CycloElt> {
    prop::collection::vec((0..m as i64, rational()), 0..=4).prop_map(move |terms| {
        terms.into_iter().fold(CycloElt::zero(m), |acc, (k, c)| {
            &acc + &CycloElt::zeta_pow(m, k).scale(&c)
        })
    })
}

pub fn cyclo_triple() -> impl Strategy<Value = (CycloElt, CycloElt, CycloElt)> {
    prop::sample::select(INDICES.to_vec()).prop_flat_map(|m| (cyclo_in(m), cyclo_in(m), cyclo_in(m)))
}

/// A cyclotomic element together with a unit of its index.
pub fn cyclo_with_units() -> impl Strategy<Value = (CycloElt, CycloElt, usize, usize)> {
    prop::sample::select(INDICES.to_vec()).prop_flat_map(|m| {
        let us = units(m);
        (
            cyclo_in(m),
            cyclo_in(m),
            prop::sample::select(us.clone()),
            prop::sample::select(us),
        )
    })
}

/// Elements with a nontrivial stabilizer most of the time: orbit sums of a
/// random element over the cyclic group generated by a random unit.
pub fn cyclo_structured() -> impl Strategy<Value = CycloElt> {
    prop::sample::select(INDICES.to_vec()).prop_flat_map(|m| {
        (cyclo_in(m), prop::sample::select(units(m)), any::<bool>()).prop_map(move |(u, a, orbit)| {
            if !orbit {
                return u;
            }
            let mut sum = u.clone();
            let mut g = a % m.max(1);
            while g != 1 % m.max(1) {
                sum = &sum + &u.galois_apply(g).unwrap();
                g = g * a % m;
            }
            sum
        })
    })
}

const RADICANDS: [(i64, i64); 10] = [
    (1, 1),
    (2, 1),
    (3, 1),
    (5, 1),
    (6, 1),
    (12, 1),
    (1, 2),
    (5, 7),
    (10, 3),
    (21, 4),
];

pub fn multiquad() -> impl Strategy<Value = MultiQuadElt> {
    prop::collection::vec((prop::sample::select(RADICANDS.to_vec()), rational()), 0..=4).prop_map(|terms| {
        terms.into_iter().fold(MultiQuadElt::zero(), |acc, ((n, d), c)| {
            let r = Rational::new(BigInt::from(n), BigInt::from(d));
            &acc + &mq_from_sqrt(&r).unwrap().scale(&c)
        })
    })
}

fn complex_mul(a: &ApproxComplex, b: &ApproxComplex) -> ApproxComplex {
    let re = Approx(a.re.mul(&b.re).0 - a.im.mul(&b.im).0);
    let im = a.re.mul(&b.im).add(&a.im.mul(&b.re));
    ApproxComplex { re, im }
}

fn complex_close(a: &ApproxComplex, b: &ApproxComplex, digits: u32) -> bool {
    a.re.agrees_with(&b.re, digits) && a.im.agrees_with(&b.im, digits)
}

pub fn poly_ring_axioms() -> Result<(), String> {
    run(1, (poly(6), poly(6), poly(6)), |(a, b, c)| {
        ensure(&(&a + &b) + &c == &a + &(&b + &c), "addition not associative")?;
        ensure(&a * &b == &b * &a, "multiplication not commutative")?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), "multiplication not associative")?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "not distributive")?;
        ensure((&a + &(-&a)).is_zero(), "a + (-a) != 0")?;
        if !b.is_zero() {
            let (q, r) = a.divrem(&b).map_err(|e| fail(e.to_string()))?;
            ensure(&(&q * &b) + &r == a, "a != qb + r")?;
            ensure(
                r.degree().is_none_or(|d| d < b.degree().unwrap()),
                "remainder too large",
            )?;
        }
        Ok(())
    })
}

pub fn poly_gcd_planted() -> Result<(), String> {
    run(2, (poly(4), poly(4), poly(3)), |(a, b, g)| {
        if g.is_zero() || (a.is_zero() && b.is_zero()) {
            return Ok(());
        }
        let d = poly_gcd(&(&a * &g), &(&b * &g)).map_err(|e| fail(e.to_string()))?;
        ensure(d.is_monic(), "gcd not monic")?;
        ensure(
            d.rem(&g.monic()).map_err(|e| fail(e.to_string()))?.is_zero() || g.degree() == Some(0),
            "planted factor lost",
        )?;
        ensure((&a * &g).rem(&d).unwrap().is_zero(), "gcd does not divide")?;
        Ok(())
    })
}

pub fn square_rational_roundtrip() -> Result<(), String> {
    run(3, rational(), |q| {
        ensure(is_square_rational(&(&q * &q)) == Some(q.abs()), "sqrt(q^2) != |q|")?;
        let nonsquare = &q * &q * Rational::from_integer(2.into());
        ensure(
            q.is_zero() || is_square_rational(&nonsquare).is_none(),
            "2q^2 reported square",
        )
    })
}

pub fn cyclo_ring_axioms() -> Result<(), String> {
    run(4, cyclo_triple(), |(a, b, c)| {
        ensure(&(&a + &b) + &c == &a + &(&b + &c), "addition not associative")?;
        ensure(&a * &b == &b * &a, "multiplication not commutative")?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), "multiplication not associative")?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "not distributive")?;
        ensure((&a + &(-&a)).is_zero(), "a + (-a) != 0")?;
        if !a.is_zero() {
            let inv = a.inv().map_err(|e| fail(e.to_string()))?;
            ensure(&a * &inv == CycloElt::one(a.index()), "a * a^-1 != 1")?;
        }
        Ok(())
    })
}

pub fn galois_homomorphism() -> Result<(), String> {
    run(5, cyclo_with_units(), |(u, v, a, b)| {
        let s = |x: &CycloElt, k: usize| x.galois_apply(k).map_err(|e| fail(e.to_string()));
        ensure(s(&(&u * &v), a)? == &s(&u, a)? * &s(&v, a)?, "sigma not multiplicative")?;
        ensure(s(&(&u + &v), a)? == &s(&u, a)? + &s(&v, a)?, "sigma not additive")?;
        let m = u.index();
        ensure(s(&s(&u, b)?, a)? == s(&u, a * b % m)?, "sigma_a sigma_b != sigma_ab")?;
        Ok(())
    })
}

/// `deg(u) * |Stab(u)| = φ(m)`, with the degree and the stabilizer counted
/// independently by brute force over all units.
pub fn stabilizer_degree_law() -> Result<(), String> {
    run(6, cyclo_structured(), |u| {
        let m = u.index();
        let images: Vec<CycloElt> = units(m).into_iter().map(|a| u.galois_apply(a).unwrap()).collect();
        let distinct: BTreeSet<String> = images.iter().map(|x| format!("{:?}", x.rep())).collect();
        let fixed = images.iter().filter(|x| **x == u).count();
        ensure(distinct.len() * fixed == euler_phi(m), "orbit-stabilizer fails")?;
        ensure(u.degree() == distinct.len(), "degree disagrees with orbit size")?;
        ensure(u.stabilizer().order() == fixed, "stabilizer size disagrees")?;
        let f = u.min_poly().map_err(|e| fail(e.to_string()))?;
        ensure(f.degree() == Some(distinct.len()), "min poly degree")?;
        ensure(
            polyflat::cyclotomic::eval_poly(&f, &u).is_zero(),
            "min poly does not vanish",
        )?;
        Ok(())
    })
}

pub fn multiquad_ring_axioms() -> Result<(), String> {
    run(7, (multiquad(), multiquad(), multiquad()), |(a, b, c)| {
        ensure(&(&a + &b) + &c == &a + &(&b + &c), "addition not associative")?;
        ensure(&a * &b == &b * &a, "multiplication not commutative")?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), "multiplication not associative")?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "not distributive")?;
        ensure((&a + &(-&a)).is_zero(), "a + (-a) != 0")?;
        let prod = (&a * &b).to_approx();
        ensure(
            prod.agrees_with(&a.to_approx().mul(&b.to_approx()), 50),
            "numeric product mismatch",
        )
    })
}

pub fn sign_flip_automorphisms() -> Result<(), String> {
    let flips = prop::sample::subsequence(vec![2u64, 3, 5, 7], 0..=4);
    run(8, (multiquad(), multiquad(), flips), |(u, v, p)| {
        ensure(mq_sign_flip(&p, &mq_sign_flip(&p, &u)) == u, "flip not an involution")?;
        ensure(
            mq_sign_flip(&p, &(&u * &v)) == &mq_sign_flip(&p, &u) * &mq_sign_flip(&p, &v),
            "flip not multiplicative",
        )?;
        ensure(
            mq_sign_flip(&p, &(&u + &v)) == &mq_sign_flip(&p, &u) + &mq_sign_flip(&p, &v),
            "flip not additive",
        )
    })
}

fn triangle() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    (0i64..=40, 0i64..=40, 0i64..=100, 1i64..=6).prop_map(|(a, b, t, d)| {
        // c between |a - b| and a + b
        let lo = (a - b).abs();
        let c = lo * 100 + (a + b - lo) * t;
        let r = |n: i64, den: i64| Rational::new(BigInt::from(n), BigInt::from(den));
        (r(a, d), r(b, d), r(c, 100 * d))
    })
}

pub fn heron_properties() -> Result<(), String> {
    run(9, triangle(), |(a, b, c)| {
        let h = |x: &Rational, y: &Rational, z: &Rational| heron_area_squared(x, y, z).map_err(|e| fail(e.to_string()));
        let base = h(&a, &b, &c)?;
        for (x, y, z) in [(&b, &a, &c), (&c, &b, &a), (&a, &c, &b), (&b, &c, &a), (&c, &a, &b)] {
            ensure(h(x, y, z)? == base, "heron not symmetric")?;
        }
        ensure(!base.is_negative(), "negative area squared")?;
        let (a2, b2, c2) = (&a * &a, &b * &b, &c * &c);
        let t = &a2 + &b2 - &c2;
        let four = Rational::from_integer(4.into());
        let sixteen = Rational::from_integer(16.into());
        ensure(sixteen * &base == four * a2 * b2 - &t * &t, "16 area^2 identity fails")
    })
}

/// 50-digit agreement of exact elements with their numeric values.
pub fn numeric_guards() -> Result<(), String> {
    run(10, cyclo_with_units(), |(u, v, a, _)| {
        let (eu, ev) = (numeric::eval(&u), numeric::eval(&v));
        ensure(
            complex_close(&numeric::eval(&(&u * &v)), &complex_mul(&eu, &ev), 50),
            "product mismatch",
        )?;
        let m = u.index() as i64;
        let k = a as i64;
        let c = cos_2pi_over(m as usize, k).map_err(|e| fail(e.to_string()))?;
        ensure(
            numeric::eval(&c)
                .re
                .agrees_with(&numeric::cos_2pi_over(m as usize, k), 50),
            "cos mismatch",
        )?;
        ensure(numeric::eval(&c).im.is_negligible(50), "cos not real")?;
        if m % 4 == 0 {
            let s = sin_2pi_over(m as usize, k).map_err(|e| fail(e.to_string()))?;
            ensure(
                numeric::eval(&s)
                    .re
                    .agrees_with(&numeric::sin_2pi_over(m as usize, k), 50),
                "sin mismatch",
            )?;
        }
        Ok(())
    })
}

/// `cot(π/n)` for `3 <= n <= 60` against the numeric value, within `1e-40`.
pub fn cot_numeric_guard() -> Result<(), String> {
    for n in 3..=60 {
        let exact = cot_pi_over(n).map_err(|e| e.to_string())?;
        let value = numeric::eval(&exact);
        if !value.re.agrees_with(&numeric::cot_pi_over(n), 40) || !value.im.is_negligible(40) {
            return Err(format!("cot(pi/{n}) numeric mismatch"));
        }
    }
    Ok(())
}

/// Every exact check in the suite, by name.
pub type Property = fn() -> Result<(), String>;

pub fn all_properties() -> Vec<(&'static str, Property)> {
    vec![
        ("poly ring axioms and division", poly_ring_axioms),
        ("poly gcd recovers planted factor", poly_gcd_planted),
        ("is_square_rational(q^2) = |q|", square_rational_roundtrip),
        ("cyclotomic ring axioms and inverses", cyclo_ring_axioms),
        ("galois action is a homomorphism", galois_homomorphism),
        ("deg * |stabilizer| = phi(m)", stabilizer_degree_law),
        ("multiquadratic ring axioms", multiquad_ring_axioms),
        ("sign flips are involutive automorphisms", sign_flip_automorphisms),
        ("heron symmetry and 16 area^2 identity", heron_properties),
        ("50-digit numeric guards", numeric_guards),
        ("cot(pi/n) numeric guard, 3 <= n <= 60", cot_numeric_guard),
    ]
}
