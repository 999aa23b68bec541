//! Exact verification of monads, distributive laws, (co)quasi-bimonads,
//! Tambara and Yetter-Drinfel'd modules and their category actions in the
//! 2-category of finite dimensional vector spaces.

pub mod axioms;
pub mod constructions;
pub mod diagram;
pub mod error;
pub mod lincat;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod zoo;

pub use error::{Error, Result};
pub use lincat::{comp, equal, hcomp, identity, swap, tensor, vcomp, CellType, Space, TwoCell};
pub use report::{AxiomSuiteReport, CheckReport, Verdict, Witness};
pub use scalar::{Field, Scalar};
