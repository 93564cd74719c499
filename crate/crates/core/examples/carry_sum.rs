//! Level-wise addition of two points with explicit carry words.
//!
//! 7 + 1 in a 3-level, 1-dimensional layout carries through every level.

use latcc::code::BlockShape;
use latcc::latticeness::{carry_sum, Decomposition};
use latcc::BitWord;

fn digits(v: u8) -> Vec<BitWord> {
    (0..3).map(|i| BitWord::from_bits([v >> i & 1 == 1]).unwrap()).collect()
}

fn main() -> latcc::Result<()> {
    let shape = BlockShape::new(1, 3)?;
    let a = Decomposition::new(digits(7), vec![0])?;
    let b = Decomposition::new(digits(1), vec![0])?;
    let s = carry_sum(shape, &a, &b)?;
    println!("{:?} + {:?} = {:?}", a.reconstruct(), b.reconstruct(), s.sum.reconstruct());
    for (i, (carry, terms)) in s.state.s.iter().zip(&s.state.r).enumerate() {
        println!("level {}: s = {carry}, r = {:?}", i + 1, terms.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    println!("blocks {:?}, translate {:?}", s.sum.blocks, s.sum.translate);
    Ok(())
}
