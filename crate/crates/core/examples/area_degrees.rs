// Degree of area(P_n) = (n/4) cot(pi/n) over Q. An odd factor in the
// degree rules out any expression through nested square roots.

use polyflat::flatness::area_degree_check;

fn main() -> polyflat::Result<()> {
    for n in 3..=30 {
        let r = area_degree_check(n)?;
        let mark = if r.power_of_two { "" } else { "  <- odd factor" };
        println!("n = {n:>2}: degree {:>2}{mark}", r.degree);
    }
    Ok(())
}
