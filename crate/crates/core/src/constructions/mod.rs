//! Derived 2-cells and derived structures.

mod assoc;
mod cocycle;
mod convolution;
mod modules;
mod monads;
mod yd;

pub use assoc::*;
pub use cocycle::*;
pub use convolution::*;
pub use modules::*;
pub use monads::*;
pub use yd::*;
