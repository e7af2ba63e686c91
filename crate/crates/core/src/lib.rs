//! Exact computations for hom-Lie algebras, their representations,
//! twisted cohomology, O-operators, their deformations and r-matrices.
//!
//! All arithmetic is over the rationals, so every verdict is exact.

pub mod cochain;
pub mod combin;
pub mod deformation;
pub mod error;
pub mod exactnum;
pub mod fixtures;
pub mod graded;
pub mod io;
pub mod ooperator;
pub mod par;
pub mod report;
pub mod rmatrix;
pub mod sample;
pub mod structures;

pub use error::{Error, Result};
pub use exactnum::{Matrix, Scalar, Vector};
pub use par::Exec;
pub use report::Failure;
pub use structures::{HomLieAlgebra, Representation};
