//! Std companion of `rotsieve-core`: JSON encodings, the property battery and
//! the command-line interface.

pub mod battery;
pub mod cli;
pub mod json;

pub use rotsieve_core as core;
