//! Collapsing vertices with identical total neighbourhoods.
//!
//! Two vertices with the same `N_t` are interchangeable for total domination,
//! so dropping all but the least of them keeps `γ_t`. Such classes are
//! homogeneous: either every member is looped (then `N_t = N[·]` and the
//! same argument keeps `γ`), or none is and the members are pairwise
//! nonadjacent with a common open neighbourhood `N`. In the second case an
//! optimal dominating set either meets `N` or contains the whole class, and
//! the latter can be traded for one member plus one vertex of `N`. So for
//! `γ` the surviving representative is constrained by `N` alone rather than
//! `N[r]`. Unlooped isolated vertices are never merged.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::graph::LoopGraph;

use super::cover::CoverInstance;

#[derive(Clone, Debug)]
pub struct TwinReduction {
    graph: LoopGraph,
    representatives: Vec<usize>,
    class_of: Vec<usize>,
    class_sizes: Vec<usize>,
}

/// Partitions vertices by total neighbourhood and keeps the least vertex of
/// each class, in original order.
pub fn twin_reduce(g: &LoopGraph) -> TwinReduction {
    let n = g.vertex_count();
    let mut classes: BTreeMap<BitSet, usize> = BTreeMap::new();
    let mut representatives = Vec::new();
    let mut class_sizes = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    for v in 0..n {
        let key = g.total_neighborhood(v);
        let existing = if key.is_empty() {
            None
        } else {
            classes.get(&key).copied()
        };
        match existing {
            Some(c) => {
                class_sizes[c] += 1;
                class_of.push(c);
            }
            None => {
                let c = representatives.len();
                if !key.is_empty() {
                    classes.insert(key, c);
                }
                representatives.push(v);
                class_sizes.push(1);
                class_of.push(c);
            }
        }
    }
    TwinReduction {
        graph: g.induced(&representatives),
        representatives,
        class_of,
        class_sizes,
    }
}

impl TwinReduction {
    /// The subgraph induced on the representatives.
    pub fn graph(&self) -> &LoopGraph {
        &self.graph
    }

    /// Reduced vertex holding original vertex `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Original vertex behind reduced vertex `i`.
    pub fn representative(&self, i: usize) -> usize {
        self.representatives[i]
    }

    pub fn class_size(&self, i: usize) -> usize {
        self.class_sizes[i]
    }

    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    /// Maps a set of reduced vertices back to original vertices.
    pub fn lift(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&i| self.representatives[i]).collect();
        out.sort_unstable();
        out
    }

    /// Cover instance whose optimum is `γ` of the original graph.
    pub fn domination_instance(&self) -> CoverInstance {
        let g = &self.graph;
        let constraints = (0..g.vertex_count())
            .map(|i| {
                if self.class_sizes[i] > 1 && !g.has_loop(i) {
                    g.neighbors(i).clone()
                } else {
                    g.closed_neighborhood(i)
                }
            })
            .collect();
        CoverInstance::new(g.vertex_count(), constraints)
    }

    /// Cover instance whose optimum is `γ_t` of the original graph.
    pub fn total_domination_instance(&self) -> CoverInstance {
        super::total_domination_instance(&self.graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::ring;
    use crate::graph::build_zdg;
    use alloc::vec;

    #[test]
    fn z8_collapses_two_and_six() {
        let g = build_zdg(&ring("Z8").unwrap()).unwrap();
        let r = twin_reduce(&g);
        assert_eq!(r.class_count(), 2);
        assert_eq!(r.class_of(0), r.class_of(2));
        assert_eq!(r.graph().labels().unwrap(), ["2", "4"]);
        assert_eq!(r.domination_instance().minimum(), Some(1));
        assert_eq!(r.total_domination_instance().minimum(), Some(1));
    }

    #[test]
    fn z3_squared_collapses_to_an_edge() {
        let g = build_zdg(&ring("Z3 x Z3").unwrap()).unwrap();
        let r = twin_reduce(&g);
        assert_eq!(r.class_count(), 2);
        assert_eq!(r.graph().edges(), vec![(0, 1)]);
        assert_eq!(r.lift(&[1, 0]), vec![0, 2]);
        // A bare edge has γ = 1; the open-neighbourhood constraints keep γ = 2.
        assert_eq!(r.domination_instance().minimum(), Some(2));
        assert_eq!(r.total_domination_instance().minimum(), Some(2));
    }

    #[test]
    fn triangle_is_irreducible() {
        let g = LoopGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = twin_reduce(&g);
        assert_eq!(r.class_count(), 3);
        assert_eq!(r.graph(), &g);
    }

    #[test]
    fn isolated_vertices_stay_apart() {
        let g = LoopGraph::new(3);
        let r = twin_reduce(&g);
        assert_eq!(r.class_count(), 3);
        assert_eq!(r.domination_instance().minimum(), Some(3));
        assert_eq!(r.total_domination_instance().minimum(), None);
    }
}
