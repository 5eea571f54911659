//! `ℚ(cos(2π/q))` for primes `q >= 7` and `q = 9` is cyclic of degree at
//! least three, so it can never sit inside a flat field.

use polyflat::flatness::real_cyclotomic_check;

fn main() -> polyflat::Result<()> {
    for q in [7, 9, 11, 13, 17] {
        let r = real_cyclotomic_check(q)?;
        println!("q = {q:>2}: degree {} (cyclic: {})", r.degree, r.is_cyclic);
        println!("        {}", r.min_poly);
    }
    Ok(())
}
