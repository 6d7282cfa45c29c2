//! Loop-annotated undirected graphs and zero-divisor graph construction.
//!
//! Metric invariants (connectivity, distance, girth) are taken on the simple
//! graph underneath: loops only matter for total domination.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::bitset::BitSet;
use crate::ext::ExtNat;
use crate::ring::{Element, FiniteRing};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("empty zero-divisor graph: {0} has no nonzero zero-divisors")]
    EmptyGraph(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopGraph {
    n: usize,
    adjacency: Vec<BitSet>,
    loops: BitSet,
    labels: Option<Vec<String>>,
}

impl LoopGraph {
    pub fn new(n: usize) -> Self {
        LoopGraph {
            n,
            adjacency: vec![BitSet::new(n); n],
            loops: BitSet::new(n),
            labels: None,
        }
    }

    /// Builds a graph from an edge list; `(v, v)` sets a loop.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = LoopGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            self.loops.insert(u);
        } else {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
        }
        Ok(())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => alloc::format!("{v}"),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Open neighbourhood, loops excluded.
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            self.loops.contains(u)
        } else {
            self.adjacency[u].contains(v)
        }
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops.contains(v)
    }

    pub fn loops(&self) -> &BitSet {
        &self.loops
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count()
    }

    /// `N[v] = N(v) + v`.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.adjacency[v].clone();
        s.insert(v);
        s
    }

    /// `N(v)`, plus `v` itself when `v` carries a loop.
    pub fn total_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.adjacency[v].clone();
        if self.loops.contains(v) {
            s.insert(v);
        }
        s
    }

    /// Edges `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adjacency[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Subgraph induced on `keep` (in the given order); labels carry over.
    pub fn induced(&self, keep: &[usize]) -> LoopGraph {
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let mut g = LoopGraph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            if self.has_loop(v) {
                g.loops.insert(i);
            }
            for w in self.adjacency[v].iter() {
                if position[w] != usize::MAX {
                    g.adjacency[i].insert(position[w]);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    fn bfs(&self, source: usize, dist: &mut [usize]) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for w in self.adjacency[u].iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut dist = vec![0; self.n];
        self.bfs(0, &mut dist);
        dist.iter().all(|&d| d != usize::MAX)
    }

    /// Largest distance over all vertex pairs; infinite when disconnected.
    pub fn diameter(&self) -> ExtNat {
        let mut dist = vec![0; self.n];
        let mut best = 0;
        for s in 0..self.n {
            self.bfs(s, &mut dist);
            for &d in &dist {
                if d == usize::MAX {
                    return ExtNat::Infinite;
                }
                best = best.max(d);
            }
        }
        ExtNat::Finite(best)
    }

    /// Length of a shortest cycle, ignoring loops.
    ///
    /// From every root, a BFS meeting a non-tree edge `u-w` closes a closed
    /// walk of length `d(u) + d(w) + 1`; the minimum over all roots is the
    /// girth.
    pub fn girth(&self) -> ExtNat {
        let n = self.n;
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.adjacency[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            ExtNat::Infinite
        } else {
            ExtNat::Finite(best)
        }
    }

    /// Least vertex adjacent to every other vertex; a single vertex is
    /// vacuously universal.
    pub fn universal_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) + 1 == self.n)
    }
}

/// `Γ(R)` together with the ring element behind each vertex.
#[derive(Clone, Debug)]
pub struct ZeroDivisorGraph {
    graph: LoopGraph,
    elements: Vec<Element>,
}

impl ZeroDivisorGraph {
    pub fn graph(&self) -> &LoopGraph {
        &self.graph
    }

    pub fn into_graph(self) -> LoopGraph {
        self.graph
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, v: usize) -> Element {
        self.elements[v]
    }

    pub fn vertex_of(&self, e: Element) -> Option<usize> {
        self.elements.binary_search(&e).ok()
    }
}

impl Deref for ZeroDivisorGraph {
    type Target = LoopGraph;

    fn deref(&self) -> &LoopGraph {
        &self.graph
    }
}

/// The zero-divisor graph on `Z(R)*`: `u - v` iff `uv = 0`, with a loop at
/// `v` iff `v^2 = 0`. Vertices follow ring element order.
pub fn build_zdg(ring: &FiniteRing) -> Result<ZeroDivisorGraph, GraphError> {
    let elements = ring.zero_divisors().to_vec();
    if elements.is_empty() {
        return Err(GraphError::EmptyGraph(ring.label().into()));
    }
    let n = elements.len();
    let mut graph = LoopGraph::new(n);
    for (i, &a) in elements.iter().enumerate() {
        if ring.mul(a, a) == Element::ZERO {
            graph.loops.insert(i);
        }
        for (j, &b) in elements.iter().enumerate().skip(i + 1) {
            if ring.mul(a, b) == Element::ZERO {
                graph.adjacency[i].insert(j);
                graph.adjacency[j].insert(i);
            }
        }
    }
    graph.set_labels(elements.iter().map(|&e| ring.element_label(e)).collect());
    Ok(ZeroDivisorGraph { graph, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::ring;

    fn labels_of(g: &LoopGraph) -> Vec<String> {
        g.labels().unwrap().to_vec()
    }

    #[test]
    fn z6_is_a_path() {
        let g = build_zdg(&ring("Z6").unwrap()).unwrap();
        assert_eq!(labels_of(&g), ["2", "3", "4"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.loops().is_empty());
        assert!(g.is_connected());
        assert_eq!(g.diameter(), 2);
        assert_eq!(g.girth(), ExtNat::Infinite);
        assert_eq!(g.universal_vertex().map(|v| g.label(v)), Some("3".into()));
    }

    #[test]
    fn z8_has_a_loop_at_four() {
        let g = build_zdg(&ring("Z8").unwrap()).unwrap();
        assert_eq!(labels_of(&g), ["2", "4", "6"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.loops().iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(g.girth(), ExtNat::Infinite);
        assert_eq!(g.universal_vertex(), Some(1));
    }

    #[test]
    fn z3_squared_is_a_four_cycle() {
        let g = build_zdg(&ring("Z3 x Z3").unwrap()).unwrap();
        assert_eq!(labels_of(&g), ["(1,0)", "(2,0)", "(0,1)", "(0,2)"]);
        assert_eq!(g.edge_count(), 4);
        for v in 0..4 {
            assert_eq!(g.degree(v), 2);
        }
        assert!(g.is_connected());
        assert_eq!(g.diameter(), 2);
        assert_eq!(g.girth(), 4);
        assert_eq!(g.universal_vertex(), None);
    }

    #[test]
    fn boolean_cube_has_a_triangle() {
        let g = build_zdg(&ring("Z2 x Z2 x Z2").unwrap()).unwrap();
        assert_eq!(g.girth(), 3);
    }

    #[test]
    fn single_vertex_metrics() {
        let g = build_zdg(&ring("Z4").unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.has_loop(0));
        assert_eq!(g.diameter(), 0);
        assert_eq!(g.universal_vertex(), Some(0));
        assert_eq!(g.girth(), ExtNat::Infinite);
    }

    #[test]
    fn fields_have_no_graph() {
        assert!(matches!(
            build_zdg(&ring("Z5").unwrap()),
            Err(GraphError::EmptyGraph(_))
        ));
    }

    #[test]
    fn general_graphs() {
        let g = LoopGraph::new(2);
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), ExtNat::Infinite);
        let c5 = LoopGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.girth(), 5);
        assert_eq!(c5.diameter(), 2);
        let c6 = LoopGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(c6.girth(), 6);
        assert!(LoopGraph::from_edges(2, &[(0, 2)]).is_err());
    }
}
