//! Exact minimum set cover over bit vectors.
//!
//! A constraint is satisfied when the chosen set hits its coverer set. Both
//! domination problems are instances: constraint `v` is covered by `N[v]`
//! (domination) or by `N(v)` plus `v` when looped (total domination).

use alloc::vec::Vec;

use crate::bitset::BitSet;

use super::Enumeration;

const INFEASIBLE: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct CoverInstance {
    /// `constraints[c]`: columns that satisfy constraint `c`.
    constraints: Vec<BitSet>,
    /// `columns[x]`: constraints satisfied by column `x`.
    columns: Vec<BitSet>,
}

impl CoverInstance {
    pub fn new(column_count: usize, constraints: Vec<BitSet>) -> Self {
        let mut columns = alloc::vec![BitSet::new(constraints.len()); column_count];
        for (c, cov) in constraints.iter().enumerate() {
            assert_eq!(cov.capacity(), column_count);
            for x in cov.iter() {
                columns[x].insert(c);
            }
        }
        CoverInstance {
            constraints,
            columns,
        }
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_feasible(&self) -> bool {
        self.constraints.iter().all(|c| !c.is_empty())
    }

    pub fn is_cover(&self, set: &[usize]) -> bool {
        let mut covered = BitSet::new(self.constraint_count());
        for &x in set {
            if x >= self.column_count() {
                return false;
            }
            covered.union_with(&self.columns[x]);
        }
        covered.count() == self.constraint_count()
    }

    fn all_constraints(&self) -> BitSet {
        BitSet::full(self.constraint_count())
    }

    /// Lower bound on the columns (from `allowed`) still needed for
    /// `uncovered`: the larger of a greedy packing of constraints with
    /// pairwise disjoint coverer sets and `ceil(|uncovered| / max coverage)`.
    /// Returns `INFEASIBLE` when some constraint has no allowed coverer.
    fn lower_bound(&self, uncovered: &BitSet, allowed: &BitSet) -> usize {
        let remaining = uncovered.count();
        if remaining == 0 {
            return 0;
        }
        let mut used = BitSet::new(self.column_count());
        let mut packing = 0;
        for c in uncovered.iter() {
            let cov = &self.constraints[c];
            if !cov.intersects(allowed) {
                return INFEASIBLE;
            }
            let mut avail = cov.clone();
            avail.intersect_with(allowed);
            if !avail.intersects(&used) {
                packing += 1;
                used.union_with(&avail);
            }
        }
        let widest = allowed
            .iter()
            .map(|x| self.columns[x].intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        if widest == 0 {
            return INFEASIBLE;
        }
        packing.max(remaining.div_ceil(widest))
    }

    fn greedy(&self) -> Option<Vec<usize>> {
        let mut uncovered = self.all_constraints();
        let mut chosen = Vec::new();
        while !uncovered.is_empty() {
            let (best, gain) = (0..self.column_count())
                .map(|x| (x, self.columns[x].intersection_count(&uncovered)))
                .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
            if gain == 0 {
                return None;
            }
            chosen.push(best);
            uncovered.difference_with(&self.columns[best]);
        }
        chosen.sort_unstable();
        Some(chosen)
    }

    /// Size of a minimum cover, or `None` if the instance is infeasible.
    ///
    /// Depth-first branch and bound: start from the greedy cover, branch on
    /// the uncovered constraint with the fewest allowed coverers, try those
    /// coverers in index order and forbid each one in later sibling branches.
    pub fn minimum(&self) -> Option<usize> {
        self.minimum_cover().map(|c| c.len())
    }

    /// Some minimum cover (not necessarily lexicographically least).
    pub fn minimum_cover(&self) -> Option<Vec<usize>> {
        if !self.is_feasible() {
            return None;
        }
        let incumbent = self.greedy()?;
        let mut search = Search {
            inst: self,
            best: incumbent.len(),
            best_set: incumbent,
            chosen: Vec::new(),
        };
        let mut allowed = BitSet::full(self.column_count());
        search.branch(&self.all_constraints(), &mut allowed);
        Some(search.best_set)
    }

    /// Lexicographically least cover with at most `k` columns. Called with
    /// the minimum, this is the least minimum cover.
    pub fn lex_first(&self, k: usize) -> Option<Vec<usize>> {
        let mut out = Collector {
            found: Enumeration::default(),
            cap: 1,
            first_only: true,
        };
        self.lex_search(0, k, &self.all_constraints(), &mut Vec::new(), &mut out);
        out.found.sets.pop()
    }

    /// All covers of size `k` in lexicographic order, up to `cap` of them.
    /// With `k` the minimum this lists every minimum cover.
    pub fn enumerate(&self, k: usize, cap: usize) -> Enumeration {
        if cap == 0 {
            return Enumeration {
                sets: Vec::new(),
                truncated: self.lex_first(k).is_some(),
            };
        }
        let mut out = Collector {
            found: Enumeration::default(),
            cap,
            first_only: false,
        };
        self.lex_search(0, k, &self.all_constraints(), &mut Vec::new(), &mut out);
        out.found
    }

    /// Returns `true` to stop the search.
    fn lex_search(
        &self,
        start: usize,
        budget: usize,
        uncovered: &BitSet,
        prefix: &mut Vec<usize>,
        out: &mut Collector,
    ) -> bool {
        if uncovered.is_empty() {
            if out.found.sets.len() == out.cap {
                out.found.truncated = true;
                return true;
            }
            out.found.sets.push(prefix.clone());
            return out.first_only;
        }
        if budget == 0 || start >= self.column_count() {
            return false;
        }
        let mut allowed = BitSet::full(self.column_count());
        allowed.clear_below(start);
        let lb = self.lower_bound(uncovered, &allowed);
        if lb > budget {
            return false;
        }
        // The next column is the smallest of the rest of the cover, so every
        // uncovered constraint needs a coverer at or after it.
        let mut limit = usize::MAX;
        for c in uncovered.iter() {
            let last = self.constraints[c].last();
            limit = limit.min(last.expect("feasibility checked by the bound"));
        }
        for x in start..=limit {
            if !self.columns[x].intersects(uncovered) {
                continue;
            }
            let mut rest = uncovered.clone();
            rest.difference_with(&self.columns[x]);
            prefix.push(x);
            let stop = self.lex_search(x + 1, budget - 1, &rest, prefix, out);
            prefix.pop();
            if stop {
                return true;
            }
        }
        false
    }
}

struct Collector {
    found: Enumeration,
    cap: usize,
    first_only: bool,
}

struct Search<'a> {
    inst: &'a CoverInstance,
    best: usize,
    best_set: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn branch(&mut self, uncovered: &BitSet, allowed: &mut BitSet) {
        if uncovered.is_empty() {
            if self.chosen.len() < self.best {
                self.best = self.chosen.len();
                self.best_set = self.chosen.clone();
                self.best_set.sort_unstable();
            }
            return;
        }
        let lb = self.inst.lower_bound(uncovered, allowed);
        if lb == INFEASIBLE || self.chosen.len() + lb >= self.best {
            return;
        }
        let pivot = uncovered
            .iter()
            .min_by_key(|&c| self.inst.constraints[c].intersection_count(allowed))
            .expect("uncovered is nonempty");
        let mut candidates = self.inst.constraints[pivot].clone();
        candidates.intersect_with(allowed);
        let mut forbidden = Vec::new();
        for x in candidates.iter() {
            let mut rest = uncovered.clone();
            rest.difference_with(&self.inst.columns[x]);
            self.chosen.push(x);
            self.branch(&rest, allowed);
            self.chosen.pop();
            allowed.remove(x);
            forbidden.push(x);
            if self.chosen.len() + 1 >= self.best {
                break;
            }
        }
        for x in forbidden {
            allowed.insert(x);
        }
    }
}
