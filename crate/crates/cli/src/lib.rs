//! File formats, random instance generation and the subcommands of `bredon`.

pub mod commands;
pub mod error;
pub mod formats;
pub mod generate;
pub mod verify;
