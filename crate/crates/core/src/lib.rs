//! Cluster variables of type D̃ₙ from SL₂-tilings, with exact arithmetic and
//! an independent mutation oracle.

pub mod boundary;
pub mod cli;
pub mod dtilde;
pub mod error;
pub mod exactalg;
pub mod frieze;
mod mat2;
pub mod oracle;
pub mod quiver;
pub mod tiling;

pub use error::{Error, Result};
pub use exactalg::{Monomial, Polynomial, RationalFunction};
pub use quiver::{DTilde, Quiver, Seed, Walk};
