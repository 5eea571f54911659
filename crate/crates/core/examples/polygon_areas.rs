//! Exact unit polygons: side lengths, shoelace area against
//! `(n/4) cot(π/n)`, the fan of signed triangles from an arbitrary point,
//! and Heron's formula.

use polyflat::algebra::{int, rat};
use polyflat::geometry::{
    area_identity_check, heron_area_squared, polygon_area_formula_check, unit_polygon, ExactPoint,
};
use polyflat::sqrt_sums::mq_from_sqrt;

fn main() -> polyflat::Result<()> {
    let hex = unit_polygon(6)?;
    println!("hexagon circumradius: {}", hex.circumradius);
    for v in &hex.vertices {
        println!("  vertex ({}, {})", v.x, v.y);
    }

    for n in [3, 4, 5, 6, 8, 12] {
        let r = polygon_area_formula_check(n)?;
        println!(
            "n = {n:>2}: shoelace = (n/4)cot(pi/n): {}, minimal polynomial {}",
            r.holds, r.min_poly
        );
    }

    let pent = unit_polygon(5)?;
    let p = ExactPoint::from_rationals(pent.index(), int(2), rat(1, 3));
    let r = area_identity_check(&pent, &p)?;
    println!(
        "\npentagon, P = (2, 1/3): identity {} with {} negative and {} degenerate triangles",
        r.holds, r.negative_terms, r.degenerate_terms
    );

    for (a, b, c) in [(3, 4, 5), (1, 1, 1), (2, 3, 4), (1, 2, 3)] {
        let sq = heron_area_squared(&int(a), &int(b), &int(c))?;
        println!("triangle ({a}, {b}, {c}): area^2 = {sq}, area = {}", mq_from_sqrt(&sq)?);
    }
    Ok(())
}
