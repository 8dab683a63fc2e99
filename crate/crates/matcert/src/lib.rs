//! Command-line layer over the certifier core: text formats for rewrite
//! systems and certificates, verdict serialization, and the three commands
//! (check, oracle, analyze). All arithmetic stays exact; this crate only
//! adds input/output.

pub mod certificate;
pub mod commands;
pub mod trs_format;
pub mod verdict;
