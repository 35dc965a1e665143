//! Command implementations behind the `wsbound` binary.

pub mod commands;
pub mod golden;
pub mod record;

pub use record::{Format, OutputRecord, FORMAT_VERSION};
