//! Proof checking and normalization for bilateral classical natural
//! deduction, where formulas are asserted (`+`) or denied (`-`).

pub mod analysis;
pub mod generator;
pub mod kernel;
pub mod normalizer;
pub mod syntax;
pub mod textio;
