//! Sums of square roots of rationals, the sign-flip automorphisms of
//! multiquadratic fields, and the bounded identity search.

mod multiquad;
mod search;

pub use multiquad::{mq_eval_poly, mq_from_sqrt, mq_sign_flip, squarefree_decompose, MultiQuadElt};
pub use search::{multiset_count, refute_or_find_sum, witness_sum, SearchReport, SignedRadicand};

use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::error::Result;

/// Evidence that `ℚ(√r_1, ..., √r_k)` has a Galois group of exponent two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignFlipReport {
    pub sum: MultiQuadElt,
    pub primes: Vec<u64>,
    /// `2^{#primes}` sign-flip automorphisms were checked.
    pub automorphisms_checked: usize,
    pub all_involutions: bool,
    pub all_homomorphic: bool,
}

impl SignFlipReport {
    pub fn verified(&self) -> bool {
        self.all_involutions && self.all_homomorphic
    }
}

/// For `S = √r_1 + ... + √r_k`, check every sign flip over the primes in
/// the radicands squares to the identity and respects products (on `S`
/// and on every generator `√r_i`).
pub fn sign_flip_check(radicands: &[Rational]) -> Result<SignFlipReport> {
    let roots = radicands.iter().map(mq_from_sqrt).collect::<Result<Vec<_>>>()?;
    let sum = roots.iter().fold(MultiQuadElt::zero(), |acc, r| &acc + r);
    let primes = sum.primes();
    let mut samples = roots.clone();
    samples.push(sum.clone());
    let mut all_involutions = true;
    let mut all_homomorphic = true;
    for mask in 0..1u64 << primes.len() {
        let flip: Vec<u64> = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        for u in &samples {
            all_involutions &= mq_sign_flip(&flip, &mq_sign_flip(&flip, u)) == *u;
            for v in &samples {
                all_homomorphic &= mq_sign_flip(&flip, &(u * v)) == &mq_sign_flip(&flip, u) * &mq_sign_flip(&flip, v);
            }
        }
    }
    Ok(SignFlipReport {
        automorphisms_checked: 1 << primes.len(),
        sum,
        primes,
        all_involutions,
        all_homomorphic,
    })
}
