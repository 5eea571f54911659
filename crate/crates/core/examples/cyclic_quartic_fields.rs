//! `sqrt(a + b sqrt p)` with `a^2 = p(b^2 + c^2)` generates a cyclic quartic
//! field. Two instances show up as `ℚ(cot(π/5))` and `ℚ(cot(π/16))`.

use polyflat::algebra::{biquadratic_galois_class, int};
use polyflat::flatness::{cyclic_quartic_check, lemma_quartic_check};

fn main() -> polyflat::Result<()> {
    for (p, a, b, c) in [(5, 25, 10, 5), (2, 4, 2, 2), (13, 13, 2, 3)] {
        let r = lemma_quartic_check(p, &int(a), &int(b), &int(c))?;
        println!(
            "p={p} (a,b,c)=({a},{b},{c}): {}  -> {:?}, B(A^2-4B) = {} = ({})^2",
            r.quartic, r.galois_class, r.discriminant_product, r.square_witness
        );
    }

    // the other Galois types, for contrast
    for (name, a, b) in [("x^4 + 1", 0, 1), ("x^4 - 2", 0, -2), ("x^4 - 5x^2 + 4", -5, 4)] {
        println!("{name}: {:?}", biquadratic_galois_class(&int(a), &int(b)));
    }

    for n in [5, 16] {
        let r = cyclic_quartic_check(n)?;
        println!("\ncot(pi/{n}) has minimal polynomial {}", r.cot_min_poly);
        println!(
            "  quotient orders {:?}, cyclic = {}",
            r.flat.quotient_orders, r.flat.is_cyclic
        );
        println!("  radical {}", r.radical);
        println!("  radical minimal polynomial {}", r.radical_min_poly);
        println!(
            "  same field: {} (both inclusions checked via stabilizers)",
            r.cot_in_radical_field && r.radical_in_cot_field
        );
        assert_eq!(r.radical_min_poly, r.lemma.quartic);
    }
    Ok(())
}
