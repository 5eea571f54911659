//! Which fields `ℚ(cot(π/n))` are flat?
//!
//! Run with `cargo run --example classify_flat_fields -- 60`.

use polyflat::flatness::classify_range;

fn main() -> polyflat::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(48);
    println!(
        "{:>4} {:>6} {:>5} {:>7}  quotient orders",
        "n", "degree", "flat", "cyclic"
    );
    for r in classify_range(3, max_n)? {
        println!(
            "{:>4} {:>6} {:>5} {:>7}  {:?}",
            r.n, r.degree, r.is_flat, r.is_cyclic, r.quotient_orders
        );
    }
    let flat: Vec<_> = classify_range(3, max_n)?
        .into_iter()
        .filter(|r| r.is_flat)
        .map(|r| r.n)
        .collect();
    println!("flat for n in {flat:?}");
    Ok(())
}
