pub mod cli;
pub mod cohomology;
pub mod error;
pub mod f2;
pub mod octonions;
pub mod sp6;
pub mod structures;
pub mod study;

pub use error::{Error, Result};
