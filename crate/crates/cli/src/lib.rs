//! Command-line runner, catalog ingestion and report generation built on
//! `evohab-core`.

pub mod catalog;
pub mod cli;
mod commands;
pub mod manifest;
pub mod output;
pub mod report;
