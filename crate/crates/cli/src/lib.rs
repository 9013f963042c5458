//! Config parsing, command execution and diagram rendering for the `barss`
//! command-line tool.

pub mod config;
pub mod diagram;
pub mod run;

pub use config::{Config, ConfigError};
pub use diagram::{Diagram, DiagramKind, WalkSelection};
pub use run::{render_table, run, Command, RunOptions, RunResult};
