//! Gorenstein-projective structure, relative Auslander-Reiten translates and
//! 2-term silting data for finite-dimensional algebras over prime fields.

pub mod algebra;
pub mod cli;
pub mod cm_auslander;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod fuzz;
pub mod gorenstein;
pub mod homological;
pub mod io;
pub mod matrix;
pub mod module;
pub mod report;
pub mod silting;
pub mod two_term;
mod radical;

pub use error::{Error, Result};
