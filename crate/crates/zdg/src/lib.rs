//! File formats, caching and parallel verification on top of `zdg-core`.

pub mod cache;
pub mod export;
pub mod graph_file;
pub mod presentation_file;
pub mod report;
pub mod verify;

pub use zdg_core as core;
