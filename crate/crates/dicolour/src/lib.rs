//! File formats, seeded generators, exhaustive enumeration and the
//! command-line driver built on `dicolour-core`.

pub mod cli;
pub mod exhaustive;
pub mod generate;
pub mod io;

pub use dicolour_core as core;
