//! Instance files, algebra caching, verification suites and DOT export on
//! top of `preproj-core`.

pub mod cache;
pub mod config;
pub mod dot;
pub mod inspect;
pub mod instance;
pub mod report;
pub mod verify;
