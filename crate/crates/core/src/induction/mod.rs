pub mod coset;
pub mod induce;

pub use coset::CosetTable;
pub use induce::IndAlgebra;
pub mod restriction;

pub use restriction::Restriction;
pub mod isos;
pub mod primed;
pub mod adjunction;
