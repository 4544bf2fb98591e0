//! Exact verification kernel for finite-dimensional Hopf algebras.

pub mod error;
pub mod field;
pub mod fusion;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod modalg;
pub mod rep;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use hopf::HopfAlgebra;
pub use linalg::{Matrix, Polynomial};
pub use rep::Representation;
pub use report::{Report, Verdict};
