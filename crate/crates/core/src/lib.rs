//! Finite words of the Fibonacci word over the non-negative integers (the
//! fixed point of `φ(2i) = (2i)(2i+1)`, `φ(2i+1) = 2i+2`).
//!
//! - [`word_core`] generates `W_k`, `F_k` and the block factorizations.
//! - [`factor_analysis`] holds brute-force censuses over arbitrary words.
//! - [`closed_forms`] evaluates the exact counting formulas.
//! - [`lyndon_array`] computes the Lyndon array of `W_k` in linear time.
//! - [`verify`] checks every formula against its census.
//! - [`cli`] is the command-line front end.

pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod factor_analysis;
pub mod lyndon_array;
pub mod report;
pub mod verify;
pub mod word;
pub mod word_core;

pub use error::{Error, Result};
pub use lyndon_array::LyndonArray;
pub use word::Word;
