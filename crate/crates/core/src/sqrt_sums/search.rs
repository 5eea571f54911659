//! Bounded search for identities `α = ±√r_1 ± ... ± √r_k`.
//!
//! A finite search can only ever find witnesses or report that a box of
//! radicands is exhausted. The impossibility of such identities for
//! non-flat `ℚ(α)` is structural and comes from [`crate::flatness`].

use std::cmp::Ordering;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::multiquad::MultiQuadElt;
use crate::algebra::rational::{serde_rational, Rational};
use crate::algebra::Poly;
use crate::cyclotomic::units::is_prime;
use crate::error::{Error, Result};

/// One signed term `±√r` of a candidate sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedRadicand {
    /// `1` or `-1`.
    pub sign: i8,
    #[serde(with = "serde_rational")]
    pub r: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub target_min_poly: Poly,
    pub term_count: usize,
    pub bound: u64,
    pub witness: Option<Vec<SignedRadicand>>,
    pub exhausted: bool,
    pub candidates_tested: u64,
    /// Whether the first sign was fixed to `+` (valid when the target's
    /// roots are closed under negation).
    pub first_sign_fixed: bool,
    /// Number of distinct canonical `√r` values in the box.
    pub distinct_radicals: usize,
}

/// A distinct value `√r = q √s` in the search box.
#[derive(Clone, Debug)]
struct Radical {
    r: Rational,
    s: u64,
    q: Rational,
    value: MultiQuadElt,
}

impl Radical {
    fn order_key(&self) -> (u64, &Rational) {
        (self.s, &self.q)
    }
}

/// All distinct `√(u/v)` with `0 <= u <= bound`, `1 <= v <= bound`, in
/// lexicographic order of `(squarefree kernel, coefficient)`; zero first.
fn radicals_in_box(bound: u64) -> Result<Vec<Radical>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for u in 0..=bound {
        for v in 1..=bound {
            let r = Rational::new(BigInt::from(u), BigInt::from(v));
            if !seen.insert(r.clone()) {
                continue;
            }
            let value = MultiQuadElt::from_sqrt(&r)?;
            let (s, q) = match value.single_term() {
                Some((s, q)) => (s, q.clone()),
                None => (0, Rational::zero()),
            };
            out.push(Radical { r, s, q, value });
        }
    }
    out.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
    Ok(out)
}

/// Advance a non-decreasing index tuple over `0..len`; false when done.
fn next_multiset(idx: &mut [usize], len: usize, from: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > from {
        i -= 1;
        if idx[i] + 1 < len {
            let v = idx[i] + 1;
            for j in idx.iter_mut().skip(i) {
                *j = v;
            }
            return true;
        }
    }
    false
}

struct ChunkResult {
    tested: u64,
    witness: Option<Vec<SignedRadicand>>,
}

fn search_chunk(target: &Poly, radicals: &[Radical], k: usize, prefix: &[usize], sign_masks: &[u64]) -> ChunkResult {
    let last = *prefix.last().expect("nonempty prefix");
    let mut idx = prefix.to_vec();
    idx.resize(k, last);
    let mut tested = 0u64;
    loop {
        for &mask in sign_masks {
            tested += 1;
            let mut sum = MultiQuadElt::zero();
            for (j, &i) in idx.iter().enumerate() {
                sum = if mask >> j & 1 == 1 {
                    &sum - &radicals[i].value
                } else {
                    &sum + &radicals[i].value
                };
            }
            if sum.eval_poly(target).is_zero() {
                let witness = idx
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| SignedRadicand {
                        sign: if mask >> j & 1 == 1 { -1 } else { 1 },
                        r: radicals[i].r.clone(),
                    })
                    .collect();
                return ChunkResult {
                    tested,
                    witness: Some(witness),
                };
            }
        }
        if !next_multiset(&mut idx, radicals.len(), prefix.len()) {
            return ChunkResult { tested, witness: None };
        }
    }
}

/// The sum a witness describes.
pub fn witness_sum(witness: &[SignedRadicand]) -> Result<MultiQuadElt> {
    witness.iter().try_fold(MultiQuadElt::zero(), |acc, t| {
        let v = MultiQuadElt::from_sqrt(&t.r)?;
        Ok(if t.sign < 0 { &acc - &v } else { &acc + &v })
    })
}

fn primorial_fits_u64(bound: u64) -> bool {
    (2..=bound)
        .filter(|&p| is_prime(p))
        .try_fold(1u64, |acc, p| acc.checked_mul(p))
        .is_some()
}

/// Enumerate every multiset of `k` radicals `√(u/v)` from the box
/// `0 <= u <= bound, 1 <= v <= bound` with every sign pattern, and test
/// whether the sum is a root of `target`.
///
/// Multisets are visited in lexicographic order of the sorted canonical
/// radicals, sign patterns in increasing bitmask order, so the first
/// witness and the candidate count are deterministic regardless of how
/// many worker threads run. The first sign is fixed to `+` only when
/// `target(-x) = ±target(x)`.
pub fn refute_or_find_sum(target: &Poly, k: usize, bound: u64) -> Result<SearchReport> {
    if target.degree().unwrap_or(0) < 1 || !target.is_monic() {
        return Err(Error::InvalidArgument("target must be monic of positive degree".into()));
    }
    if k < 1 || bound < 1 {
        return Err(Error::InvalidArgument("need terms >= 1 and bound >= 1".into()));
    }
    if k > 20 {
        return Err(Error::InvalidArgument("at most 20 terms are supported".into()));
    }
    if k >= 2 && !primorial_fits_u64(bound) {
        return Err(Error::RadicandTooLarge(format!("product of primes up to {bound}")));
    }
    let radicals = radicals_in_box(bound)?;
    let reflected = target.reflect();
    let first_sign_fixed = reflected == *target || reflected == -target;
    let sign_masks: Vec<u64> = if first_sign_fixed {
        (0..1u64 << (k - 1)).map(|m| m << 1).collect()
    } else {
        (0..1u64 << k).collect()
    };

    // chunks are the non-decreasing prefixes of length min(k, 2), in
    // lexicographic order, so concatenating them preserves search order
    let len = radicals.len();
    let prefixes: Vec<Vec<usize>> = if k == 1 {
        (0..len).map(|i| vec![i]).collect()
    } else {
        (0..len).flat_map(|i| (i..len).map(move |j| vec![i, j])).collect()
    };
    let best = AtomicUsize::new(usize::MAX);
    let chunks: Vec<Option<ChunkResult>> = prefixes
        .par_iter()
        .enumerate()
        .map(|(pos, prefix)| {
            if pos > best.load(AtomicOrdering::Relaxed) {
                return None;
            }
            let res = search_chunk(target, &radicals, k, prefix, &sign_masks);
            if res.witness.is_some() {
                best.fetch_min(pos, AtomicOrdering::Relaxed);
            }
            Some(res)
        })
        .collect();

    let mut tested = 0u64;
    let mut witness = None;
    for chunk in chunks {
        // every chunk up to and including the first witness ran to completion
        let chunk = chunk.expect("chunk before the first witness was skipped");
        tested += chunk.tested;
        if chunk.witness.is_some() {
            witness = chunk.witness;
            break;
        }
    }
    if let Some(w) = &witness {
        let sum = witness_sum(w)?;
        if !sum.eval_poly(target).is_zero() {
            return Err(Error::Internal("witness does not satisfy the target".into()));
        }
    }
    Ok(SearchReport {
        target_min_poly: target.clone(),
        term_count: k,
        bound,
        exhausted: witness.is_none(),
        witness,
        candidates_tested: tested,
        first_sign_fixed,
        distinct_radicals: radicals.len(),
    })
}

/// Number of multisets of size `k` from `n` items, `C(n + k - 1, k)`.
pub fn multiset_count(n: u64, k: u64) -> u64 {
    if n == 0 {
        return u64::from(k == 0);
    }
    (0..k).fold(1u64, |acc, i| acc * (n + i) / (i + 1))
}

impl PartialOrd for SignedRadicand {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedRadicand {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.r.clone(), self.sign).cmp(&(other.r.clone(), other.sign))
    }
}
