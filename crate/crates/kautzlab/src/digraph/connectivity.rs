//! Vertex and arc connectivity via max-flow, and exhaustive
//! superconnectivity checks.
//!
//! Connectivities come from Menger's theorem: the arc connectivity is the
//! smallest max-flow over ordered pairs on the unit-capacity arc network
//! (one endpoint may be fixed), and the vertex connectivity is the smallest
//! max-flow over ordered non-adjacent pairs on the vertex-split network.
//!
//! The "super" checks enumerate every candidate minimum cut outright, so
//! they carry an explicit guard on the number of subsets.

use super::Digraph;
use crate::{Error, Result};

/// Outcome of a super-connectivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuperStatus {
    /// Every minimum cut is the full in- or out-neighborhood of one vertex.
    Super,
    /// A minimum cut exists that isolates no single vertex.
    NotSuper(CutWitness),
    /// The connectivity is below the minimum degree, so no minimum cut can
    /// be trivial and the super property is out of reach.
    NotMaximal { connectivity: usize, min_degree: usize },
}

/// A disconnecting set found by the exhaustive scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutWitness {
    Arcs(Vec<(usize, usize)>),
    Vertices(Vec<usize>),
}

/// Minimum degree together with both connectivities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub min_degree: usize,
    pub kappa: usize,
    pub lambda: usize,
}

/// Unit-style max-flow network, reset between terminal pairs.
struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<u32>,
    base: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            base: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, cap: u32) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap);
        self.base.push(cap);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
        self.base.push(0);
    }

    fn reset(&mut self) {
        self.cap.copy_from_slice(&self.base);
    }

    /// BFS-augmenting max-flow, stopping early once `limit` is reached
    /// (callers only care whether the flow is below their current minimum).
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            pred.fill(usize::MAX);
            let mut queue = std::collections::VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && pred[v] == usize::MAX && v != s {
                        pred[v] = e;
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if pred[t] == usize::MAX {
                break;
            }
            // augment by one unit along the predecessor chain
            let mut v = t;
            while v != s {
                let e = pred[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

impl Digraph {
    /// Smallest number of arcs whose removal breaks strong connectivity.
    pub fn arc_connectivity(&self) -> Result<usize> {
        self.check_strongly_connected()?;
        let n = self.vertex_count();
        if n < 2 {
            return Err(Error::Unsupported(
                "arc connectivity needs at least 2 vertices".to_string(),
            ));
        }
        let mut net = FlowNetwork::new(n);
        for (u, v) in self.arcs() {
            net.add_edge(u, v, 1);
        }
        // A minimum cut separates vertex 0 from some vertex, one way or the
        // other, so flows to and from a fixed endpoint suffice.
        let mut best = self.min_degree() as u32;
        for t in 1..n {
            for (s, t) in [(0, t), (t, 0)] {
                net.reset();
                let f = net.max_flow(s, t, best);
                best = best.min(f);
            }
        }
        Ok(best as usize)
    }

    /// Smallest number of vertices whose removal breaks strong connectivity
    /// (or leaves a single vertex). `n - 1` for complete digraphs.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        self.check_strongly_connected()?;
        let n = self.vertex_count();
        if n < 2 {
            return Err(Error::Unsupported(
                "vertex connectivity needs at least 2 vertices".to_string(),
            ));
        }
        // split each vertex: enter at 2v, leave at 2v + 1
        let mut net = FlowNetwork::new(2 * n);
        for v in 0..n {
            net.add_edge(2 * v, 2 * v + 1, 1);
        }
        let unbounded = n as u32;
        for (u, v) in self.arcs() {
            net.add_edge(2 * u + 1, 2 * v, unbounded);
        }
        let mut best = self.min_degree() as u32;
        let mut saw_nonadjacent = false;
        for s in 0..n {
            for t in 0..n {
                if s == t || self.has_arc(s, t) {
                    continue;
                }
                saw_nonadjacent = true;
                net.reset();
                let f = net.max_flow(2 * s + 1, 2 * t, best);
                best = best.min(f);
            }
        }
        if !saw_nonadjacent {
            // every ordered pair is an arc: the complete symmetric digraph
            return Ok(n - 1);
        }
        Ok(best as usize)
    }

    /// Minimum degree, vertex connectivity and arc connectivity in one go.
    pub fn connectivity_report(&self) -> Result<ConnectivityReport> {
        Ok(ConnectivityReport {
            min_degree: self.min_degree(),
            kappa: self.vertex_connectivity()?,
            lambda: self.arc_connectivity()?,
        })
    }

    /// Checks that every minimum arc cut isolates one vertex, by scanning all
    /// arc subsets of size lambda. Errors when the scan would exceed
    /// `subset_limit` subsets.
    pub fn is_super_lambda(&self, subset_limit: u64) -> Result<SuperStatus> {
        self.check_strongly_connected()?;
        let delta = self.min_degree();
        let m = self.arc_count();
        guard_subsets(m, delta, subset_limit)?;
        let lambda = self.arc_connectivity()?;
        if lambda < delta {
            return Ok(SuperStatus::NotMaximal {
                connectivity: lambda,
                min_degree: delta,
            });
        }
        let arcs: Vec<(usize, usize)> = self.arcs().collect();
        let mut status = SuperStatus::Super;
        for_each_combination(arcs.len(), lambda, &mut |pick| {
            let removed: Vec<(usize, usize)> = pick.iter().map(|&i| arcs[i]).collect();
            if self.connected_without_arcs(&removed) {
                return true;
            }
            if !self.is_trivial_arc_cut(&removed) {
                status = SuperStatus::NotSuper(CutWitness::Arcs(removed));
                return false; // stop scanning
            }
            true
        });
        Ok(status)
    }

    /// Checks that every minimum vertex cut is the in- or out-neighborhood of
    /// one vertex, by scanning all vertex subsets of size kappa. Errors when
    /// the scan would exceed `subset_limit` subsets.
    pub fn is_super_kappa(&self, subset_limit: u64) -> Result<SuperStatus> {
        self.check_strongly_connected()?;
        let delta = self.min_degree();
        let n = self.vertex_count();
        guard_subsets(n, delta, subset_limit)?;
        let kappa = self.vertex_connectivity()?;
        if kappa < delta {
            return Ok(SuperStatus::NotMaximal {
                connectivity: kappa,
                min_degree: delta,
            });
        }
        let mut status = SuperStatus::Super;
        for_each_combination(n, kappa, &mut |pick| {
            if self.connected_without_vertices(pick) {
                return true;
            }
            if !self.is_trivial_vertex_cut(pick) {
                status = SuperStatus::NotSuper(CutWitness::Vertices(pick.to_vec()));
                return false;
            }
            true
        });
        Ok(status)
    }

    /// Strong connectivity with a handful of arcs taken out.
    fn connected_without_arcs(&self, removed: &[(usize, usize)]) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        // forward from 0, then backward from 0
        for backward in [false, true] {
            seen.fill(false);
            seen[0] = true;
            let mut stack = vec![0usize];
            let mut count = 1;
            while let Some(u) = stack.pop() {
                let next = if backward {
                    self.in_neighbors(u)
                } else {
                    self.out_neighbors(u)
                };
                for &v in next {
                    let arc = if backward { (v, u) } else { (u, v) };
                    if removed.contains(&arc) || seen[v] {
                        continue;
                    }
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
            if count != n {
                return false;
            }
        }
        true
    }

    /// Strong connectivity of the digraph induced on the complement of `removed`.
    /// A remainder of at most one vertex counts as disconnected (the cut
    /// reduces the digraph to a trivial one).
    fn connected_without_vertices(&self, removed: &[usize]) -> bool {
        let n = self.vertex_count();
        if n - removed.len() <= 1 {
            return false;
        }
        let root = (0..n).find(|v| !removed.contains(v)).unwrap();
        let mut seen = vec![false; n];
        for backward in [false, true] {
            seen.fill(false);
            seen[root] = true;
            let mut stack = vec![root];
            let mut count = 1;
            while let Some(u) = stack.pop() {
                let next = if backward {
                    self.in_neighbors(u)
                } else {
                    self.out_neighbors(u)
                };
                for &v in next {
                    if removed.contains(&v) || seen[v] {
                        continue;
                    }
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
            if count != n - removed.len() {
                return false;
            }
        }
        true
    }

    /// Is this arc set exactly the out-arcs or in-arcs of one vertex?
    fn is_trivial_arc_cut(&self, arcs: &[(usize, usize)]) -> bool {
        let (tail, head) = arcs[0];
        let all_out = arcs.iter().all(|&(u, _)| u == tail) && self.out_degree(tail) == arcs.len();
        let all_in = arcs.iter().all(|&(_, v)| v == head) && self.in_degree(head) == arcs.len();
        all_out || all_in
    }

    /// Is this vertex set exactly the out- or in-neighborhood of some vertex?
    fn is_trivial_vertex_cut(&self, cut: &[usize]) -> bool {
        let mut sorted = cut.to_vec();
        sorted.sort_unstable();
        (0..self.vertex_count()).any(|w| {
            !sorted.contains(&w)
                && (self.out_neighbors(w) == sorted.as_slice()
                    || self.in_neighbors(w) == sorted.as_slice())
        })
    }
}

/// `C(n, k) <= limit`, or a guard error spelling out the size.
fn guard_subsets(n: usize, k: usize, limit: u64) -> Result<()> {
    let mut count: u128 = 1;
    for i in 0..k {
        count = count.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if count > limit as u128 {
            return Err(Error::GuardExceeded(format!(
                "C({n}, {k}) exceeds the {limit}-subset cut enumeration guard"
            )));
        }
    }
    Ok(())
}

/// Calls `visit` with every k-subset of `0..n` in lexicographic order until
/// it returns false.
fn for_each_combination(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&pick) {
            return;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pick[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}
