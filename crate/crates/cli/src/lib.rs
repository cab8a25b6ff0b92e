//! Command-line tools, file formats and the exhaustive identity harness for
//! [`chromagraph_core`].

#![forbid(unsafe_code)]

pub mod cli;
pub mod io;
pub mod verify;

pub use chromagraph_core as core;
