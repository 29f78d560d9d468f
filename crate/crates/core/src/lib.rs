#![no_std]

extern crate alloc;

pub mod error;
pub mod gallery;
pub mod montecarlo;
pub mod numeric;
pub mod ode;
pub mod rogers;
pub mod string_model;

pub use error::{Error, Result};
