//! Minimum distance and packing density of explicit and structured constellations.

use latcc::builtin::Builtin;
use latcc::construction::{associated_construction_c, construction_c_star};
use latcc::geometry::{min_distance_sq, packing_density, structured_density};
use latcc::Limits;

fn main() -> latcc::Result<()> {
    let limits = Limits::default();
    let lc = Builtin::Ex2.layered();
    for (name, k) in [("C*", construction_c_star(&lc, &limits)?), ("C", associated_construction_c(&lc, &limits)?)] {
        let md = min_distance_sq(&k, &limits)?;
        let d = packing_density(&k, &limits)?;
        println!("{name:2}: d^2 = {} via {:?}, density {:.6} (= {} * {:?})", md.d2, md.witness, d.packing_density, d.ball_volume_formula, d.center_density_exact);
    }
    // The Leech constellation has 2^36 cosets; the structured search never lists them.
    let leech = structured_density(&Builtin::Leech.layered(), &limits)?;
    println!("Leech: d^2 = {}, density {:.6}", leech.min_distance_sq, leech.packing_density);
    Ok(())
}
