//! File formats and command-line front end for `singtrans-core`.

pub mod cli;
pub mod json;
