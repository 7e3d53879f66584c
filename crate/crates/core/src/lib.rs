#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod astro;
pub mod constants;
pub mod entanglement;
pub mod error;
pub mod exchange;
pub mod fermi;
pub mod quadrature;
mod roots;

pub use error::{Error, Result};
