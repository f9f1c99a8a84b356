//! File formats, corpus cache, exports and the command line for
//! [`hyperclust_core`].

pub mod app;
pub mod bench;
pub mod cache;
pub mod dot;
pub mod error;
pub mod formats;
pub mod specs;

pub use error::{CliError, CliResult};
