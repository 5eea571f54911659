//! Exact arithmetic in cyclotomic fields and their Galois theory.
//!
//! Every field `ℚ(ζ_m)` is abelian over ℚ with group `(ℤ/m)^*`, so a
//! subfield is determined by its stabilizer subgroup. That turns questions
//! such as "is `cot(π/d)` in `ℚ(cot(π/n))`" into finite subgroup inclusions.

mod element;
pub mod numeric;
pub mod units;

pub use element::{
    cos_2pi_over, coset_representatives, cot_pi_over, cyclotomic_poly, eval_poly, field_membership, sin_2pi_over,
    CycloElt,
};
pub use units::{euler_phi, UnitSubgroup};
