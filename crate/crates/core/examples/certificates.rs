//! The certificate layer used by the `polyflat` binary, called directly.

use polyflat::cli::{cmd_refute, cmd_search, cmd_verify};

fn main() {
    let args = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let certs = [
        cmd_verify("lemma", &args(&["5", "25", "10", "5"])),
        cmd_verify("heron", &args(&["1", "1", "1"])),
        cmd_refute(6, 1, 27),
        cmd_search(5, 2, None),
    ];
    for c in &certs {
        println!("{} -> {:?} (exit {})", c.claim, c.verdict, c.exit_code());
        println!("{}\n", c.to_json());
    }
}
