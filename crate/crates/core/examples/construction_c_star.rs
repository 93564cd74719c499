//! Builds Construction C* and its associated Construction C for a small
//! two-level code and prints the coset representatives and nearby points.

use latcc::construction::{associated_construction_c, construction_c_star};
use latcc::{BitWord, LayeredCode, Limits};

fn main() -> latcc::Result<()> {
    let words: Vec<BitWord> = ["0000", "1001", "1010", "0011"].iter().map(|s| s.parse().unwrap()).collect();
    let lc = LayeredCode::from_codewords(2, 2, &words)?;
    let limits = Limits::default();

    let star = construction_c_star(&lc, &limits)?;
    let assoc = associated_construction_c(&lc, &limits)?;
    println!("Construction C* cosets mod 4:  {:?}", star.cosets()?);
    println!("Construction C  cosets mod 4:  {:?}", assoc.cosets()?);

    for p in [[1, 2], [3, 0], [4, 2]] {
        println!("{p:?} in C*: {:5}   in C: {}", star.contains_point(&p)?, assoc.contains_point(&p)?);
    }

    let points = star.points_in_box(3, &limits)?;
    println!("{} points of C* in [-3, 3]^2", points.len());
    Ok(())
}
