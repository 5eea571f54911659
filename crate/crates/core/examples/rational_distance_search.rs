//! Points at rational distance from every vertex of the unit triangle,
//! square and hexagon, up to a parameter bound.
//!
//! `cargo run --example rational_distance_search -- 6 4` searches the
//! hexagon with bound 4.

use polyflat::algebra::rational::fmt_rational;
use polyflat::geometry::search_rational_points;

fn main() -> polyflat::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let cases = match args.as_slice() {
        [n, b] => vec![(*n as usize, *b)],
        _ => vec![(3, 3), (4, 8), (6, 3)],
    };
    for (n, bound) in cases {
        let hits = search_rational_points(n, bound)?;
        println!("n = {n}, bound = {bound}: {} points", hits.len());
        for h in hits.iter().take(12) {
            let show = |v: &[polyflat::algebra::Rational]| v.iter().map(fmt_rational).collect::<Vec<_>>().join(", ");
            println!(
                "  parameters [{}]  distances [{}]",
                show(&h.parameters),
                show(&h.distances)
            );
        }
    }
    Ok(())
}
