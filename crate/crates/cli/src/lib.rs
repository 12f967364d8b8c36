//! Key and ciphertext files plus the commands behind the `qgelgamal`
//! binary.

pub mod commands;
pub mod demo;
pub mod error;
pub mod files;

pub use error::CliError;
