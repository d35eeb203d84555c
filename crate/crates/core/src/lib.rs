//! Exact arithmetic for block and weight combinatorics of Ariki-Koike
//! algebras, and an engine that builds small algebras over F_p to check
//! weight-one block structure directly.

pub mod blocks;
pub mod error;
pub mod ffield;
pub mod linalg;
pub mod partitions;
pub mod akalgebra;
mod poly;
pub mod selftest;

pub use error::{Error, Result};
