//! Exact projective geometry over quadratic fields, with Cayley-Klein models
//! and machine checks of classical incidence theorems.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod involutions;
pub mod model;
pub mod projective;
pub mod theorems;

pub use error::{Error, Result};
