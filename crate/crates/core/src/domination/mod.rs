//! Exact domination and total domination numbers of loop-annotated graphs.
//!
//! `X` dominates `G` when every vertex outside `X` has a neighbour in `X`;
//! it totally dominates `G` when every vertex, members included, has a
//! neighbour in `X`, a looped vertex counting as its own neighbour. Both are
//! solved as minimum set cover, on the twin-reduced graph by default. The
//! reported witness is always the lexicographically least minimum set of
//! the original graph.

mod cover;
mod twin;

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::ext::ExtNat;
use crate::graph::LoopGraph;

pub use cover::CoverInstance;
pub use twin::{twin_reduce, TwinReduction};

/// Default bound on the number of minimum sets an enumeration returns.
pub const DEFAULT_ENUMERATION_CAP: usize = 10_000;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    /// Sets in lexicographic order.
    pub sets: Vec<Vec<usize>>,
    /// More sets exist beyond `sets`.
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationResult {
    pub value: ExtNat,
    /// Lexicographically least minimum set; `None` when `value` is infinite.
    pub witness: Option<Vec<usize>>,
    pub all_minimum_sets: Option<Enumeration>,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub twin_reduction: bool,
    /// Enumerate minimum sets up to this many.
    pub enumeration_cap: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            twin_reduction: true,
            enumeration_cap: None,
        }
    }
}

pub(crate) fn domination_instance(g: &LoopGraph) -> CoverInstance {
    let n = g.vertex_count();
    CoverInstance::new(n, (0..n).map(|v| g.closed_neighborhood(v)).collect())
}

pub(crate) fn total_domination_instance(g: &LoopGraph) -> CoverInstance {
    let n = g.vertex_count();
    CoverInstance::new(n, (0..n).map(|v| g.total_neighborhood(v)).collect())
}

fn solve(full: CoverInstance, reduced: Option<CoverInstance>, opts: &SolveOptions) -> DominationResult {
    let value = match &reduced {
        Some(r) => r.minimum(),
        None => full.minimum(),
    };
    let Some(k) = value else {
        return DominationResult {
            value: ExtNat::Infinite,
            witness: None,
            all_minimum_sets: opts.enumeration_cap.map(|_| Enumeration::default()),
        };
    };
    let witness = full.lex_first(k);
    debug_assert_eq!(witness.as_ref().map(Vec::len), Some(k));
    DominationResult {
        value: ExtNat::Finite(k),
        witness,
        all_minimum_sets: opts.enumeration_cap.map(|cap| full.enumerate(k, cap)),
    }
}

pub fn domination_number(g: &LoopGraph) -> DominationResult {
    domination_number_with(g, &SolveOptions::default())
}

pub fn domination_number_with(g: &LoopGraph, opts: &SolveOptions) -> DominationResult {
    let reduced = opts
        .twin_reduction
        .then(|| twin_reduce(g).domination_instance());
    solve(domination_instance(g), reduced, opts)
}

pub fn total_domination_number(g: &LoopGraph) -> DominationResult {
    total_domination_number_with(g, &SolveOptions::default())
}

pub fn total_domination_number_with(g: &LoopGraph, opts: &SolveOptions) -> DominationResult {
    let reduced = opts
        .twin_reduction
        .then(|| twin_reduce(g).total_domination_instance());
    solve(total_domination_instance(g), reduced, opts)
}

fn as_bits(g: &LoopGraph, set: &[usize]) -> Option<BitSet> {
    let n = g.vertex_count();
    if set.iter().any(|&v| v >= n) {
        return None;
    }
    Some(BitSet::from_indices(n, set.iter().copied()))
}

pub fn is_dominating_set(g: &LoopGraph, set: &[usize]) -> bool {
    let Some(x) = as_bits(g, set) else {
        return false;
    };
    (0..g.vertex_count()).all(|v| x.contains(v) || g.neighbors(v).intersects(&x))
}

pub fn is_total_dominating_set(g: &LoopGraph, set: &[usize]) -> bool {
    let Some(x) = as_bits(g, set) else {
        return false;
    };
    (0..g.vertex_count()).all(|v| g.total_neighborhood(v).intersects(&x))
}

/// Every minimum total dominating set in lexicographic order, at most `cap`.
pub fn enumerate_minimum_total_dominating_sets(g: &LoopGraph, cap: usize) -> Enumeration {
    let opts = SolveOptions {
        twin_reduction: true,
        enumeration_cap: Some(cap),
    };
    total_domination_number_with(g, &opts)
        .all_minimum_sets
        .unwrap_or_default()
}

/// Every minimum dominating set in lexicographic order, at most `cap`.
pub fn enumerate_minimum_dominating_sets(g: &LoopGraph, cap: usize) -> Enumeration {
    let opts = SolveOptions {
        twin_reduction: true,
        enumeration_cap: Some(cap),
    };
    domination_number_with(g, &opts)
        .all_minimum_sets
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::ring;
    use crate::graph::build_zdg;
    use alloc::vec;

    fn path4() -> LoopGraph {
        LoopGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn z6_values() {
        let g = build_zdg(&ring("Z6").unwrap()).unwrap();
        let d = domination_number(&g);
        assert_eq!(d.value, 1);
        assert_eq!(d.witness, Some(vec![1])); // {3}
        let t = total_domination_number(&g);
        assert_eq!(t.value, 2);
        assert_eq!(t.witness, Some(vec![0, 1])); // {2, 3}
        assert!(is_dominating_set(&g, &[1]));
        assert!(!is_total_dominating_set(&g, &[1]));
        assert_eq!(
            enumerate_minimum_total_dominating_sets(&g, 100).sets,
            vec![vec![0, 1], vec![1, 2]]
        );
    }

    #[test]
    fn z8_values() {
        let g = build_zdg(&ring("Z8").unwrap()).unwrap();
        assert_eq!(domination_number(&g).witness, Some(vec![1]));
        let t = total_domination_number(&g);
        assert_eq!(t.value, 1);
        assert_eq!(t.witness, Some(vec![1])); // {4}
        assert!(is_total_dominating_set(&g, &[1]));
    }

    #[test]
    fn z3_squared_values() {
        let g = build_zdg(&ring("Z3 x Z3").unwrap()).unwrap();
        assert_eq!(domination_number(&g).value, 2);
        let t = total_domination_number(&g);
        assert_eq!(t.value, 2);
        // (1,0) and (0,1) are vertices 0 and 2.
        assert_eq!(t.witness, Some(vec![0, 2]));
        assert!(is_dominating_set(&g, &[0, 2]));
    }

    #[test]
    fn path_values() {
        let g = path4();
        assert_eq!(domination_number(&g).value, 2);
        let t = total_domination_number(&g);
        assert_eq!(t.value, 2);
        assert_eq!(t.witness, Some(vec![1, 2]));
        assert_eq!(enumerate_minimum_total_dominating_sets(&g, 10).sets, vec![vec![1, 2]]);
    }

    #[test]
    fn single_vertices() {
        let mut looped = LoopGraph::new(1);
        looped.add_edge(0, 0).unwrap();
        assert_eq!(total_domination_number(&looped).value, 1);
        assert_eq!(
            enumerate_minimum_total_dominating_sets(&looped, 10).sets,
            vec![vec![0]]
        );
        let bare = LoopGraph::new(1);
        assert_eq!(domination_number(&bare).value, 1);
        let t = total_domination_number(&bare);
        assert_eq!(t.value, ExtNat::Infinite);
        assert_eq!(t.witness, None);
    }

    #[test]
    fn full_vertex_set_is_total_dominating_without_isolated_vertices() {
        let g = path4();
        assert!(is_total_dominating_set(&g, &[0, 1, 2, 3]));
        assert!(!is_total_dominating_set(&g, &[0, 9]));
    }

    #[test]
    fn reduction_can_be_disabled() {
        let g = build_zdg(&ring("Z2 x Z2 x Z2 x Z2").unwrap()).unwrap();
        let plain = SolveOptions {
            twin_reduction: false,
            enumeration_cap: None,
        };
        assert_eq!(domination_number(&g), domination_number_with(&g, &plain));
        assert_eq!(total_domination_number(&g), total_domination_number_with(&g, &plain));
        assert_eq!(domination_number(&g).value, 4);
    }
}
