//! Reads a layered code from the text format and summarizes it.

use latcc::codefile::CodeFile;
use latcc::latticeness::decide;
use latcc::{Limits, Strategy};

const TEXT: &str = "\
# three-level code in which C1 is not inside S2(0,...,0)
n=2 L=3
mode=gen
101101
001011
000010
";

fn main() -> latcc::Result<()> {
    let file = match std::env::args().nth(1) {
        Some(path) => CodeFile::read(path.as_ref())?,
        None => CodeFile::parse(TEXT)?,
    };
    let lc = file.to_layered()?;
    println!("n = {}, L = {}, rank {}", lc.block_length(), lc.levels(), lc.rank());
    for (i, (c, s)) in lc.projections()?.iter().zip(lc.antiprojections()?).enumerate() {
        println!("level {}: rank C = {}, rank S = {}", i + 1, c.rank(), s.rank());
    }
    let v = decide(&lc, Strategy::Auto, &Limits::default())?;
    println!("lattice: {:?} ({})", v.is_lattice, v.reason);
    print!("{}", CodeFile::from_layered(&lc).render());
    Ok(())
}
