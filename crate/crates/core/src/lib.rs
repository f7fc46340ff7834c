//! Dicolourings of digraphs and their reconfiguration.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod bits;
pub mod certify;
pub mod dicolouring;
pub mod digraph;
pub mod error;
pub mod gadget;
pub mod oracle;
pub mod redicolouring;

pub use dicolouring::{Dicolouring, ListAssignment, Palette};
pub use digraph::{DegreeProfile, Digraph, Induced, UndirectedGraph};
pub use error::{Endpoint, Error, Result};
pub use redicolouring::{RecolouringSequence, Step};
