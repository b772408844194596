//! Command-line front end, benchmark harness and file output for
//! [`pictura_core`].
//!
//! Everything that touches the clock, the filesystem or process streams
//! lives here; the pictures, geometry and algorithms themselves are in the
//! `no_std` core crate.

pub mod bench;
pub mod cli;
mod error;
pub mod frames;
pub mod measure;
pub mod output;

pub use error::{Error, Result};
pub use pictura_core as core;
