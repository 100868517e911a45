pub mod cli;
pub mod engines;
pub mod error;
pub mod exactmath;
pub mod groebner;
pub mod matroid;
pub mod spaces;
pub mod sympoly;

pub use error::{Error, Result};
