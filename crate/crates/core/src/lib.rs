//! Exact counting, exhaustive oracles and a complete spanning-sphere search
//! for random 2-dimensional simplicial complexes.

pub mod appendix;
pub mod check;
pub mod complex;
pub mod counts;
pub mod enumerate;
pub mod error;
pub mod interval;
pub mod moments;
pub mod planar;
pub mod search;
pub mod sweep;
pub mod verify;

pub use complex::{Complex2, Triangle};
pub use error::{Error, Result};
