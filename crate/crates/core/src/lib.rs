//! Layered binary codes and the lattice constellations they generate.
//!
//! The crate builds Constructions A, C, C* and D from binary codes, decides
//! whether a Construction C* constellation is a lattice, and measures minimum
//! distance and packing density. The 3-level Leech lattice is included as a
//! fully verified worked case.

pub mod bitword;
pub mod builtin;
pub mod cli;
pub mod code;
pub mod codefile;
pub mod construction;
pub mod error;
pub mod geometry;
pub mod latticeness;
pub mod leech;
pub mod library;
pub mod limits;
pub mod report;

pub use bitword::BitWord;
pub use code::{BlockShape, LayeredCode, LinearCode};
pub use construction::{Constellation, Point, Source};
pub use error::{Error, Result};
pub use latticeness::{LatticeVerdict, Method, Strategy};
pub use limits::Limits;
