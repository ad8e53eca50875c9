//! CLI layer for the boxconv library: JSON interchange formats, seeded
//! verification suites and the argument dispatcher.

pub mod cli;
pub mod json;
pub mod verify;
