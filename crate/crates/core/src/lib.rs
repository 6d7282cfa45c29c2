//! Zero-divisor graphs of finite commutative rings.
//!
//! The crate builds finite commutative rings from a small specification
//! language (`Z12`, `Z2 x Z4`, `Z4[x]/(x^2+2, 2x)`), constructs their
//! zero-divisor graphs with self-loops at square-zero elements, and computes
//! exact domination and total domination numbers alongside girth and
//! diameter. The [`harness`] module checks the known relations between these
//! invariants over catalogs of rings.
//!
//! Everything here is pure computation; file formats, caching and the
//! command-line tool live in the `zdg` crate.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod domination;
pub mod dsl;
pub mod ext;
pub mod graph;
pub mod harness;
pub mod ring;

pub use bitset::BitSet;
pub use domination::{
    domination_number, enumerate_minimum_total_dominating_sets, is_dominating_set,
    is_total_dominating_set, total_domination_number, twin_reduce, DominationResult,
    Enumeration, SolveOptions, TwinReduction,
};
pub use dsl::{compile, format, parse, DslError, RingSpec};
pub use ext::ExtNat;
pub use graph::{build_zdg, GraphError, LoopGraph, ZeroDivisorGraph};
pub use ring::{Element, ElementSet, FiniteRing, Presentation, RingError, ValidateOptions};
pub use harness::{
    analyze, catalog_default, invariant_row, run_all, Catalog, CatalogBounds, CheckResult,
    HarnessOptions, InvariantRow, RingReport, Verdict, VerificationReport,
};
