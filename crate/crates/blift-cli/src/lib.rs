//! Report records and rendering for the blift command-line tool; the binary
//! lives in `main.rs`. Exposed as a library so integration tests can parse
//! machine-format output back into typed records.

pub mod report;
