//! Decides latticeness of Construction C* for the built-in examples, showing
//! which method decided and the witness when there is one.

use latcc::builtin::Builtin;
use latcc::latticeness::decide;
use latcc::{Limits, Strategy};

fn main() -> latcc::Result<()> {
    for b in [Builtin::Ex1, Builtin::Ex2, Builtin::Ex5, Builtin::Leech] {
        let v = decide(&b.layered(), Strategy::Auto, &Limits::default())?;
        println!("{b:6} lattice={:?} method={:?} precondition={:?}", v.is_lattice, v.method, v.precondition_held);
        if let Some(w) = &v.witness {
            println!("       witness: {w:?}");
        }
        println!("       {}", v.reason);
    }
    Ok(())
}
