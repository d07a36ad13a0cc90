//! Shared pieces of the `aiforge` command-line tool: output records and the
//! embedded golden tables.

pub mod record;
pub mod tables;

pub use record::{CertifyRecord, FunctionRecord, ParamsRecord};
