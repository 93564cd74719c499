//! Verifies the 3-level Leech construction and prints the report.

use latcc::leech::leech_verify;

fn main() -> latcc::Result<()> {
    let r = leech_verify()?;
    for c in &r.chain_checks {
        println!("{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
    }
    for s in &r.schur_checks {
        println!("Schur closure into level {}: {} ({} pairs)", s.level, s.passed, s.pairs_checked);
    }
    println!("minimum squared norm {}", r.min_norm_sq);
    println!("center density {:?}, packing density {:.6}", r.density.center_density_exact, r.density.packing_density);
    println!("associated C: d^2 = {}, density {:.4e}", r.associated.density.min_distance_sq, r.associated.density.packing_density);
    println!("verdict: {}", r.verdict);
    Ok(())
}
