//! Catalan functions, strong marked tableaux and k-Schur functions.

pub mod cores;
pub mod error;
pub mod kschur;
pub mod oracle;
pub mod partition;
pub mod rootcat;
pub mod symfunc;
pub mod tpoly;
pub mod verify;
pub mod vertexops;

pub use error::{Error, Result};
pub use partition::{Partition, Weight};
pub use symfunc::SymFunc;
pub use tpoly::TPoly;
