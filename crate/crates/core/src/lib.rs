pub mod algebra;
pub mod crossed;
pub mod error;
pub mod fibers;
pub mod fixtures;
pub mod hilbert;
pub mod induction;
pub mod io;
pub mod isg;
pub mod lattice;
pub mod linalg;
pub mod models;
pub mod morphism;
pub mod partial_perm;
pub mod random;
pub mod report;
pub mod ring;
pub mod suites;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use isg::{Isg, SubIsg};
pub use partial_perm::PartialPerm;
pub use scalar::{Rational, Scalar};
