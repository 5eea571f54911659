//! The unit group (ℤ/m)^* and its subgroups.
//!
//! `Gal(ℚ(ζ_m)/ℚ)` is identified with `(ℤ/m)^*` via `a ↦ (ζ ↦ ζ^a)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut m: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

pub fn euler_phi(m: usize) -> usize {
    prime_factors(m).into_iter().fold(m, |acc, p| acc / p * (p - 1))
}

/// Möbius function.
pub fn mobius(m: usize) -> i64 {
    let ps = prime_factors(m);
    if ps.iter().any(|p| m.is_multiple_of(p * p)) {
        0
    } else if ps.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Residues in `[1, m)` coprime to `m` (just `[0]` when `m == 1`).
pub fn units(m: usize) -> Vec<usize> {
    if m == 1 {
        return vec![0];
    }
    (1..m).filter(|&a| gcd(a, m) == 1).collect()
}

/// A subgroup of `(ℤ/m)^*`, stored as a sorted residue list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitSubgroup {
    modulus: usize,
    elements: Vec<usize>,
}

impl UnitSubgroup {
    /// Validates that `elements` is a subgroup (contains 1, closed under
    /// multiplication; inverses follow from finiteness).
    pub fn new(modulus: usize, mut elements: Vec<usize>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        for e in elements.iter_mut() {
            *e %= modulus;
        }
        elements.sort_unstable();
        elements.dedup();
        let bad = |reason: String| Error::NotASubgroup { modulus, reason };
        let one = 1 % modulus;
        if elements.binary_search(&one).is_err() {
            return Err(bad("does not contain 1".into()));
        }
        if let Some(&a) = elements.iter().find(|&&a| gcd(a, modulus) != 1 && modulus > 1) {
            return Err(bad(format!("{a} is not a unit")));
        }
        for &a in &elements {
            for &b in &elements {
                if elements.binary_search(&(a * b % modulus)).is_err() {
                    return Err(bad(format!("{a}*{b} not in set")));
                }
            }
        }
        Ok(UnitSubgroup { modulus, elements })
    }

    pub(crate) fn new_unchecked(modulus: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        UnitSubgroup { modulus, elements }
    }

    pub fn full(modulus: usize) -> Self {
        UnitSubgroup::new_unchecked(modulus, units(modulus))
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&(a % self.modulus)).is_ok()
    }

    pub fn is_subset_of(&self, other: &UnitSubgroup) -> bool {
        self.modulus == other.modulus && self.elements.iter().all(|&a| other.contains(a))
    }

    /// Index in the full unit group.
    pub fn index(&self) -> usize {
        euler_phi(self.modulus) / self.order()
    }
}
