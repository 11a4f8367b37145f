//! File formats, parallel sweeps and the command-line front end for
//! [`gcodelab_core`].

pub mod cli;
mod error;
pub mod files;
pub mod groups;
pub mod report;
pub mod search;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use gcodelab_core as core;
