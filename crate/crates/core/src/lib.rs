//! Exact computations with the symplectic representation of braid groups
//! (the Burau representation at `t = -1`) and the congruence subgroups
//! `B_n[m]` it defines.

pub mod braid;
pub mod error;
pub mod group;
pub mod parallel;
pub mod rep;
pub mod report;
pub mod suites;
pub mod symplectic;
pub mod tc;

pub use error::{Error, Result};
