//! The extended Golay code: rank, weight distribution and parity checks.

use latcc::library::{golay24, golay_syndrome};
use latcc::{BitWord, Limits};

fn main() -> latcc::Result<()> {
    let g = golay24();
    println!("rank {}", g.rank());
    for (w, count) in g.weight_distribution(&Limits::default())? {
        println!("weight {w:2}: {count}");
    }
    let ones = BitWord::ones(24)?;
    println!("syndrome of all-ones: {}", golay_syndrome(&ones)?);
    let e1 = BitWord::unit(24, 0)?;
    println!("syndrome of e1:       {}", golay_syndrome(&e1)?);
    Ok(())
}
