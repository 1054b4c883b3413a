//! File formats, reports and the command implementations behind the
//! `lcd-rough` binary.

pub mod app;
pub mod input;
pub mod report;
