//! Exact-arithmetic workbench for extremal triangle-area problems.
//!
//! The crate enumerates triangle areas over rational point sets, generates
//! the classical lower-bound constructions with machine-checkable
//! certificates, runs charging audits for minimum-area triangles and
//! provides incidence tools (rich lines, hyperbola families, cylinders and
//! a three-cylinder intersection counter).

pub mod census;
pub mod charging;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod incidence;
pub mod io;
pub mod poly;

pub use error::{Error, Result};
