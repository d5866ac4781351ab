//! Command-line front end: tables of the algebraic invariants and
//! verification suites over every library crate.

mod config;
mod report;
pub mod suites;
pub mod tables;

pub use config::{Format, RunConfig, CACHE_ENV};
pub use report::{Line, Status, SuiteReport, Table, SCHEMA};
