//! Construction D over a nested, Schur-closed family coincides with Construction C.

use latcc::construction::{construction_c, construction_d, NestedFamily};
use latcc::latticeness::theorem1_check;
use latcc::{BitWord, LinearCode, Limits};

fn code(rows: &[&str]) -> LinearCode {
    let rows: Vec<BitWord> = rows.iter().map(|s| s.parse().unwrap()).collect();
    LinearCode::from_generators(4, &rows).unwrap()
}

fn main() -> latcc::Result<()> {
    let limits = Limits::default();
    let codes = vec![code(&["1111"]), code(&["1111", "1100", "1010"]), LinearCode::full(4)?];
    println!("theorem1: {:?}", theorem1_check(&codes)?.is_lattice);
    let d = construction_d(&NestedFamily::new(codes.clone())?, &limits)?;
    let c = construction_c(&codes, &limits)?;
    println!("{} cosets mod 8; Construction C equals Construction D: {}", d.cosets()?.len(), d.cosets()? == c.cosets()?);

    // without the Schur condition, Construction C is not closed
    let loose = vec![code(&["1100", "0110"]), code(&["1100", "0110"])];
    let v = theorem1_check(&loose)?;
    println!("loose family: lattice={:?}, {}", v.is_lattice, v.reason);
    Ok(())
}
