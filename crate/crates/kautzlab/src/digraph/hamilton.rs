//! Hamiltonian cycle search by backtracking.
//!
//! The search extends a path from vertex 0, always trying the candidate with
//! the fewest onward options first, and prunes a branch as soon as some
//! unvisited vertex can no longer be entered or left. Work is metered in
//! node expansions: when the budget runs out the result is explicitly
//! indeterminate — exhausting the search space without a budget break is the
//! only way to conclude no cycle exists.

use super::Digraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonianSearch {
    /// A full cycle, as a vertex sequence of length `n` starting at 0;
    /// the closing arc back to 0 exists.
    Found(Vec<usize>),
    /// The whole search space was exhausted: there is no Hamiltonian cycle.
    Exhausted,
    /// The expansion budget ran out first; existence is undecided.
    BudgetExceeded { expanded: u64 },
}

struct Search<'a> {
    g: &'a Digraph,
    visited: Vec<bool>,
    path: Vec<usize>,
    /// unvisited in-/out-neighbor counts, maintained incrementally
    in_avail: Vec<usize>,
    out_avail: Vec<usize>,
    budget: u64,
    expanded: u64,
}

impl Digraph {
    /// Looks for a Hamiltonian cycle within `budget` node expansions.
    pub fn hamiltonian_cycle(&self, budget: u64) -> HamiltonianSearch {
        let n = self.vertex_count();
        if n == 0 || !self.is_strongly_connected() {
            return HamiltonianSearch::Exhausted;
        }
        if n == 1 {
            return HamiltonianSearch::Exhausted; // loopless: no cycle on one vertex
        }
        let mut search = Search {
            g: self,
            visited: vec![false; n],
            path: Vec::with_capacity(n),
            in_avail: (0..n).map(|v| self.in_degree(v)).collect(),
            out_avail: (0..n).map(|v| self.out_degree(v)).collect(),
            budget,
            expanded: 0,
        };
        search.enter(0);
        match search.extend() {
            Some(true) => HamiltonianSearch::Found(search.path),
            Some(false) => HamiltonianSearch::Exhausted,
            None => HamiltonianSearch::BudgetExceeded {
                expanded: search.expanded,
            },
        }
    }
}

impl Search<'_> {
    fn enter(&mut self, v: usize) {
        self.visited[v] = true;
        self.path.push(v);
        for &w in self.g.out_neighbors(v) {
            self.in_avail[w] -= 1;
        }
        for &w in self.g.in_neighbors(v) {
            self.out_avail[w] -= 1;
        }
    }

    fn leave(&mut self, v: usize) {
        self.visited[v] = false;
        self.path.pop();
        for &w in self.g.out_neighbors(v) {
            self.in_avail[w] += 1;
        }
        for &w in self.g.in_neighbors(v) {
            self.out_avail[w] += 1;
        }
    }

    /// `Some(true)` = cycle completed, `Some(false)` = subtree exhausted,
    /// `None` = budget ran out.
    fn extend(&mut self) -> Option<bool> {
        let n = self.g.vertex_count();
        let current = *self.path.last().unwrap();
        if self.path.len() == n {
            return Some(self.g.has_arc(current, 0));
        }
        if self.expanded >= self.budget {
            return None;
        }
        self.expanded += 1;

        // Feasibility: every unvisited vertex must still be enterable from an
        // unvisited vertex or from the path head, and must be leavable
        // towards an unvisited vertex or the start. The incremental counters
        // cover arcs from/to unvisited vertices; the path head and vertex 0
        // are credited separately.
        for v in 0..n {
            if self.visited[v] {
                continue;
            }
            let enterable = self.in_avail[v] > 0 || self.g.has_arc(current, v);
            let leavable = self.out_avail[v] > 0 || self.g.has_arc(v, 0);
            if !enterable || !leavable {
                return Some(false);
            }
        }

        // fewest-onward-options-first candidate order
        let mut candidates: Vec<(usize, usize)> = self
            .g
            .out_neighbors(current)
            .iter()
            .filter(|&&v| !self.visited[v])
            .map(|&v| (self.out_avail[v], v))
            .collect();
        candidates.sort_unstable();

        for (_, v) in candidates {
            self.enter(v);
            match self.extend() {
                Some(true) => return Some(true),
                Some(false) => self.leave(v),
                None => {
                    self.leave(v);
                    return None;
                }
            }
        }
        Some(false)
    }
}
