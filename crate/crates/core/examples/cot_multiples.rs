//! For `d | n`, `cot(π/d)` is a rational function of `cot(π/n)`, so
//! `ℚ(cot(π/d)) ⊆ ℚ(cot(π/n))`. The same holds for `cos(2π/d)`.

use polyflat::flatness::{cot_multiple_rf, verify_cot_multiple};

fn main() -> polyflat::Result<()> {
    for k in 1..=4 {
        println!("cot({k}x) = C_{k}(cot x) = {}", cot_multiple_rf(k)?);
    }
    println!();
    for (n, d) in [(12, 3), (12, 4), (24, 8), (30, 5), (16, 2)] {
        let r = verify_cot_multiple(n, d)?;
        println!(
            "n={n:>2} d={d}: C_{} exact = {}, cot in field = {}, cos identity = {}, cos in field = {}",
            r.multiple, r.recurrence_holds, r.cot_in_field, r.cos_identity_holds, r.cos_in_field
        );
    }
    Ok(())
}
