//! Command-line frontend and JSON formats for [`qflag_core`].

pub mod cli;
pub mod formats;
pub mod selftest;
