//! Can the area of the unit `n`-gon be written as `±√r_1 ± ... ± √r_k`?
//!
//! Such a sum lies in a multiquadratic field, where every automorphism
//! flips signs of square roots and so has order two. A bounded search
//! looks for witnesses; the flatness test says when none can exist.

use polyflat::algebra::rat;
use polyflat::flatness::{is_flat_cot_field, polygon_area_min_poly};
use polyflat::sqrt_sums::{mq_from_sqrt, refute_or_find_sum, sign_flip_check};

fn main() -> polyflat::Result<()> {
    let s = &mq_from_sqrt(&rat(12, 1))? + &mq_from_sqrt(&rat(5, 7))?;
    println!("sqrt(12) + sqrt(5/7) = {s}");
    let flips = sign_flip_check(&[rat(12, 1), rat(5, 7)])?;
    println!(
        "{} sign flips over primes {:?}: involutions = {}, multiplicative = {}",
        flips.automorphisms_checked, flips.primes, flips.all_involutions, flips.all_homomorphic
    );

    for (n, k, bound) in [(3, 1, 16), (4, 1, 1), (6, 1, 27), (5, 3, 6), (7, 2, 6)] {
        let target = polygon_area_min_poly(n)?;
        let report = refute_or_find_sum(&target, k, bound)?;
        let flat = is_flat_cot_field(n)?.is_flat;
        print!("\nn = {n}: area is a root of {target}\n  k = {k}, bound = {bound}: ");
        match &report.witness {
            Some(w) => {
                let terms: Vec<String> = w
                    .iter()
                    .map(|t| format!("{}sqrt({})", if t.sign < 0 { "-" } else { "+" }, t.r))
                    .collect();
                println!("witness {}", terms.join(" "));
            }
            None => println!("no witness among {} candidates", report.candidates_tested),
        }
        if !flat {
            println!("  Q(cot(pi/{n})) is not flat: no sum of square roots works for any bound");
        }
    }
    Ok(())
}
