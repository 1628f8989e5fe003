//! Library surface of the CLI: command implementations, the report model,
//! and shared plumbing. The `rptri` binary is a thin argument parser over
//! these modules, and the acceptance suite drives them directly.

pub mod commands;
pub mod report;
pub mod util;
