//! Exact-arithmetic Drinfel'd doubles, Schrödinger modules, and braided
//! dimension invariants of braid words, cross-checked against a group-theoretic
//! fixed-point oracle.

pub mod braid;
pub mod double;
pub mod error;
pub mod field;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod rep;
pub mod verify;
pub mod zoo;

pub use error::{Error, Result};
pub use field::{FieldDescriptor, Scalar};
pub use hopf::HopfAlgebraData;
