//! Branch and bound against exhaustive search over all vertex subsets.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zdg_core::domination::{
    domination_number_with, enumerate_minimum_dominating_sets,
    enumerate_minimum_total_dominating_sets, total_domination_number_with, SolveOptions,
};
use zdg_core::{is_dominating_set, is_total_dominating_set, ExtNat, LoopGraph};

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> LoopGraph {
    let n = rng.random_range(1..=max_n);
    let p: f64 = rng.random_range(0.05..0.8);
    let q: f64 = rng.random_range(0.0..0.5);
    let mut g = LoopGraph::new(n);
    for u in 0..n {
        if rng.random_bool(q) {
            g.add_edge(u, u).unwrap();
        }
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Adjacency as bitmasks, loops folded in.
fn masks(g: &LoopGraph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u) | (g.has_loop(v) as u32) << v)
        .collect()
}

fn dominates(adj: &[u32], x: u32) -> bool {
    (0..adj.len()).all(|v| x >> v & 1 == 1 || adj[v] & x != 0)
}

fn totally_dominates(adj: &[u32], x: u32) -> bool {
    adj.iter().all(|&row| row & x != 0)
}

fn bits(x: u32) -> Vec<usize> {
    (0..32).filter(|i| x >> i & 1 == 1).collect()
}

/// All minimum sets in lexicographic order, or `None` if none exists.
fn brute(g: &LoopGraph, pred: fn(&[u32], u32) -> bool) -> Option<Vec<Vec<usize>>> {
    let adj = masks(g);
    let n = adj.len();
    let ok: Vec<u32> = (0..1u32 << n).filter(|&x| pred(&adj, x)).collect();
    let k = ok.iter().map(|x| x.count_ones()).min()?;
    let mut sets: Vec<Vec<usize>> = ok.into_iter().filter(|x| x.count_ones() == k).map(bits).collect();
    sets.sort();
    Some(sets)
}

fn check_graph(g: &LoopGraph) {
    let plain = SolveOptions {
        twin_reduction: false,
        enumeration_cap: None,
    };
    let reduced = SolveOptions::default();

    let expected = brute(g, dominates).expect("the whole vertex set dominates");
    let d = domination_number_with(g, &reduced);
    assert_eq!(d.value, expected[0].len(), "gamma of {g:?}");
    assert_eq!(d.witness.as_ref(), Some(&expected[0]), "gamma witness of {g:?}");
    assert!(is_dominating_set(g, d.witness.as_ref().unwrap()));
    assert_eq!(domination_number_with(g, &plain), d);
    assert_eq!(enumerate_minimum_dominating_sets(g, usize::MAX).sets, expected);

    let t = total_domination_number_with(g, &reduced);
    assert_eq!(t, total_domination_number_with(g, &plain));
    match brute(g, totally_dominates) {
        None => {
            assert_eq!(t.value, ExtNat::Infinite);
            assert!(t.witness.is_none());
        }
        Some(expected) => {
            assert_eq!(t.value, expected[0].len(), "gamma_t of {g:?}");
            assert_eq!(t.witness.as_ref(), Some(&expected[0]));
            assert!(is_total_dominating_set(g, &expected[0]));
            assert!(ExtNat::Finite(expected[0].len()) >= d.value);
            let all = enumerate_minimum_total_dominating_sets(g, usize::MAX);
            assert!(!all.truncated);
            assert_eq!(all.sets, expected);
        }
    }
}

#[test]
fn random_graphs_match_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        check_graph(&random_graph(&mut rng, 12));
    }
}

#[test]
fn graphs_with_many_twins_match_exhaustive_search() {
    // Blow up a small graph by copying vertices, which creates twin classes.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let base = random_graph(&mut rng, 5);
        let copies: Vec<usize> = (0..base.vertex_count()).map(|_| rng.random_range(1..=3)).collect();
        let owner: Vec<usize> = copies.iter().enumerate().flat_map(|(v, &c)| std::iter::repeat_n(v, c)).collect();
        let n = owner.len();
        let mut g = LoopGraph::new(n);
        for a in 0..n {
            for b in a..n {
                let (u, v) = (owner[a], owner[b]);
                let linked = if u == v { base.has_loop(u) } else { base.has_edge(u, v) };
                if linked {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        check_graph(&g);
    }
}

#[test]
fn enumeration_cap_flags_truncation() {
    // A perfect matching on 8 vertices has 2^4 minimum dominating sets.
    let g = LoopGraph::from_edges(8, &[(0, 1), (2, 3), (4, 5), (6, 7)]).unwrap();
    let all = enumerate_minimum_dominating_sets(&g, 100);
    assert_eq!(all.sets.len(), 16);
    assert!(!all.truncated);
    let some = enumerate_minimum_dominating_sets(&g, 5);
    assert_eq!(some.sets, all.sets[..5]);
    assert!(some.truncated);
    let exact = enumerate_minimum_dominating_sets(&g, 16);
    assert!(!exact.truncated);
}

#[test]
fn repeated_runs_are_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let g = random_graph(&mut rng, 16);
    let opts = SolveOptions::default();
    assert_eq!(domination_number_with(&g, &opts), domination_number_with(&g, &opts));
    assert_eq!(total_domination_number_with(&g, &opts), total_domination_number_with(&g, &opts));
}

fn arb_graph() -> impl Strategy<Value = LoopGraph> {
    (1usize..=10).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            proptest::collection::vec(proptest::bool::weighted(0.2), n),
        )
            .prop_map(move |(edges, loops)| {
                let mut g = LoopGraph::new(n);
                let mut k = 0;
                for u in 0..n {
                    if loops[u] {
                        g.add_edge(u, u).unwrap();
                    }
                    for v in u + 1..n {
                        if edges[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
    })
}

proptest! {
    #[test]
    fn solver_is_exact(g in arb_graph()) {
        check_graph(&g);
    }
}
