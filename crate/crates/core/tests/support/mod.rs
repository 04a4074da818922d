//! Independent oracles shared by the integration tests and the acceptance run.
#![allow(dead_code)]

pub mod kuratowski;
pub mod oracle;
