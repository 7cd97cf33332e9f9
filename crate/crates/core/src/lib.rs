pub mod cli;
pub mod crosscheck;
pub mod error;
pub mod existence;
pub mod family;
pub mod poly;
pub mod precise;
pub mod quartic;
pub mod residual;
pub mod stability;

pub use error::{Error, Result};
