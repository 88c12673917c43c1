//! Front-end plumbing for the `monogen` binary: polynomial text input and
//! the fixed-schema report records with their JSONL/CSV encodings.

pub mod parse;
pub mod report;
