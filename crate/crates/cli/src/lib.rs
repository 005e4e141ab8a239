//! IO companion to `rrverify-core`: canonical JSON/CSV/text renderings of
//! series, reports, and count tables, named series builders for the
//! `series` subcommand, and the parallel runner behind `all`.

pub mod format;
pub mod runner;
pub mod series_cmd;
