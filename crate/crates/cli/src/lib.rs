//! File formats, configuration and command implementations behind the
//! `h4e8` binary.

pub mod commands;
pub mod config;
pub mod dump;
pub mod formats;

pub use commands::{run, Outcome};
pub use config::{Command, Format, RunConfig};
