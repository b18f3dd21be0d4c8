/*!
A small in-memory digraph engine used as the ground truth.

Everything here works on vertex indices with optional word labels attached,
and deliberately knows nothing about how the families are defined: the
metrics in this module (BFS distances, diameter, exact mean distance, girth,
semigirth, connectivities, Euler/Hamilton structure) are the oracles that
the label-based formulas elsewhere are checked against.

Loops and parallel arcs are rejected at construction; neighbor lists are
kept sorted so identical digraphs compare equal structurally.
*/

mod connectivity;
mod hamilton;
mod semigirth;

pub use connectivity::{ConnectivityReport, CutWitness, SuperStatus};
pub use hamilton::HamiltonianSearch;
pub use semigirth::{SemigirthReason, SemigirthResult};

use num_rational::Rational64;

use crate::{Error, Result, Word};

/// Directed graph with sorted adjacency in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    forward: Vec<Vec<usize>>,
    reverse: Vec<Vec<usize>>,
    labels: Option<Vec<Word>>,
}

/// BFS distances from one source; `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    pub source: usize,
    pub dist: Vec<Option<u32>>,
}

impl DistanceField {
    pub fn get(&self, v: usize) -> Option<u32> {
        self.dist[v]
    }

    /// Largest finite distance, or `None` when some vertex is unreachable.
    pub fn eccentricity(&self) -> Option<u32> {
        self.dist
            .iter()
            .map(|d| *d)
            .collect::<Option<Vec<u32>>>()
            .map(|ds| ds.into_iter().max().unwrap_or(0))
    }

    /// Number of vertices at each distance `0, 1, …, ecc` from the source.
    pub fn layers(&self) -> Option<Vec<usize>> {
        let ecc = self.eccentricity()? as usize;
        let mut layers = vec![0usize; ecc + 1];
        for d in self.dist.iter().flatten() {
            layers[*d as usize] += 1;
        }
        Some(layers)
    }
}

/// How far the "one antipode each" structure goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Antipodality {
    /// Every vertex has exactly one vertex at diameter distance, and the
    /// relation is mutual.
    Antipodal,
    /// Every vertex has exactly one vertex at diameter distance, but the
    /// relation is not mutual.
    WeaklyAntipodal,
    /// Some vertex sees zero or several vertices at diameter distance.
    Neither,
}

impl Digraph {
    /// Builds an unlabeled digraph from an arc list.
    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Digraph> {
        Digraph::build(n, arcs, None)
    }

    /// Builds a labeled digraph; labels must be sorted, unique, one per vertex.
    pub fn with_labels(
        labels: Vec<Word>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Digraph> {
        if !labels.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::InvalidDigraph(
                "labels must be strictly increasing".to_string(),
            ));
        }
        let n = labels.len();
        Digraph::build(n, arcs, Some(labels))
    }

    fn build(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
        labels: Option<Vec<Word>>,
    ) -> Result<Digraph> {
        let mut forward = vec![Vec::new(); n];
        let mut reverse = vec![Vec::new(); n];
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(Error::InvalidDigraph(format!(
                    "arc ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidDigraph(format!("loop at vertex {u}")));
            }
            forward[u].push(v);
            reverse[v].push(u);
        }
        for list in forward.iter_mut().chain(reverse.iter_mut()) {
            list.sort_unstable();
            if list.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::InvalidDigraph("parallel arcs".to_string()));
            }
        }
        Ok(Digraph {
            forward,
            reverse,
            labels,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.forward.len()
    }

    pub fn arc_count(&self) -> usize {
        self.forward.iter().map(Vec::len).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.forward[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.reverse[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.forward[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.reverse[v].len()
    }

    /// Minimum over all in- and out-degrees.
    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.out_degree(v).min(self.in_degree(v)))
            .min()
            .unwrap_or(0)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.forward[u].binary_search(&v).is_ok()
    }

    /// All arcs in (tail, head) index order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.forward
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[Word]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Word> {
        self.labels.as_ref().map(|ls| &ls[v])
    }

    /// Index of a labeled vertex, if present.
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        let labels = self.labels.as_ref()?;
        labels.binary_search(w).ok()
    }

    /// Renders a vertex for error messages: its label if any, else its index.
    pub fn describe(&self, v: usize) -> String {
        match self.label(v) {
            Some(w) => w.to_string(),
            None => v.to_string(),
        }
    }

    /// Same vertices and labels, every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph {
            forward: self.reverse.clone(),
            reverse: self.forward.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Breadth-first distances from `source`.
    pub fn bfs(&self, source: usize) -> DistanceField {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.forward[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        DistanceField { source, dist }
    }

    /// BFS with parent pointers; returns the vertex sequence of one shortest path.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent: Vec<Option<usize>> = vec![None; self.vertex_count()];
        let mut seen = vec![false; self.vertex_count()];
        seen[from] = true;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &v in &self.forward[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut path = vec![to];
        let mut cur = to;
        while let Some(p) = parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    /// Checks strong connectivity, naming an unreachable pair on failure.
    pub fn check_strongly_connected(&self) -> Result<()> {
        let n = self.vertex_count();
        if n == 0 {
            return Ok(());
        }
        let (root, unreachable) = (0, |field: &DistanceField| {
            field.dist.iter().position(Option::is_none)
        });
        let fwd = self.bfs(root);
        if let Some(v) = unreachable(&fwd) {
            return Err(Error::NotStronglyConnected {
                from: self.describe(root),
                to: self.describe(v),
            });
        }
        let back = self.converse().bfs(root);
        if let Some(v) = unreachable(&back) {
            return Err(Error::NotStronglyConnected {
                from: self.describe(v),
                to: self.describe(root),
            });
        }
        Ok(())
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.check_strongly_connected().is_ok()
    }

    /// Largest distance over all ordered pairs; errors when not strongly connected.
    pub fn diameter(&self) -> Result<usize> {
        let mut diameter = 0;
        for v in 0..self.vertex_count() {
            let field = self.bfs(v);
            match field.eccentricity() {
                Some(e) => diameter = diameter.max(e as usize),
                None => {
                    let far = field.dist.iter().position(Option::is_none).unwrap();
                    return Err(Error::NotStronglyConnected {
                        from: self.describe(v),
                        to: self.describe(far),
                    });
                }
            }
        }
        Ok(diameter)
    }

    /// Exact mean of `dist(x, y)` over all `n^2` ordered pairs, self-pairs included.
    pub fn mean_distance(&self) -> Result<Rational64> {
        let n = self.vertex_count() as i64;
        let mut total: i64 = 0;
        for v in 0..self.vertex_count() {
            let field = self.bfs(v);
            for (u, d) in field.dist.iter().enumerate() {
                match d {
                    Some(d) => total += *d as i64,
                    None => {
                        return Err(Error::NotStronglyConnected {
                            from: self.describe(v),
                            to: self.describe(u),
                        })
                    }
                }
            }
        }
        Ok(Rational64::new(total, n * n))
    }

    /// Layer sizes `(1, n1, n2, …)` seen from `source`; errors when some vertex
    /// is unreachable.
    pub fn layer_profile(&self, source: usize) -> Result<Vec<usize>> {
        let field = self.bfs(source);
        field.layers().ok_or_else(|| {
            let far = field.dist.iter().position(Option::is_none).unwrap();
            Error::NotStronglyConnected {
                from: self.describe(source),
                to: self.describe(far),
            }
        })
    }

    /// Length of a shortest cycle, found by BFS from every vertex; `None` if acyclic.
    ///
    /// A shortest cycle through `v` consists of a shortest path from `v` to
    /// one of its in-neighbors plus the closing arc.
    pub fn girth_bfs(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.vertex_count() {
            let field = self.bfs(v);
            for &u in &self.reverse[v] {
                if let Some(d) = field.get(u) {
                    let cycle = d as usize + 1;
                    if best.map_or(true, |b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
            if best == Some(2) {
                break; // loopless, so no shorter cycle exists
            }
        }
        best
    }

    /// True when every vertex has equal in- and out-degree and the digraph is
    /// strongly connected — the Euler circuit criterion.
    pub fn is_eulerian(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.in_degree(v) == self.out_degree(v))
            && self.is_strongly_connected()
    }

    /// Classifies the diameter-distance structure; see [`Antipodality`].
    pub fn antipodality(&self) -> Result<Antipodality> {
        let n = self.vertex_count();
        let fields: Vec<DistanceField> = (0..n).map(|v| self.bfs(v)).collect();
        let mut diameter = 0u32;
        for (v, field) in fields.iter().enumerate() {
            match field.eccentricity() {
                Some(e) => diameter = diameter.max(e),
                None => {
                    let far = field.dist.iter().position(Option::is_none).unwrap();
                    return Err(Error::NotStronglyConnected {
                        from: self.describe(v),
                        to: self.describe(far),
                    });
                }
            }
        }
        let mut far_sets: Vec<Vec<usize>> = Vec::with_capacity(n);
        for field in &fields {
            far_sets.push(
                (0..n)
                    .filter(|&u| field.dist[u] == Some(diameter))
                    .collect(),
            );
        }
        if far_sets.iter().any(|s| s.len() != 1) {
            return Ok(Antipodality::Neither);
        }
        let mutual = (0..n).all(|v| {
            let u = far_sets[v][0];
            far_sets[u][0] == v
        });
        Ok(if mutual {
            Antipodality::Antipodal
        } else {
            Antipodality::WeaklyAntipodal
        })
    }
}

#[cfg(test)]
pub(crate) fn directed_cycle(n: usize) -> Digraph {
    Digraph::from_arcs(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build;
    use crate::{Family, FamilySpec, Word};

    fn ck33() -> Digraph {
        build(&FamilySpec::new(Family::CyclicKautz, 3, 3).unwrap()).unwrap()
    }

    fn sk32() -> Digraph {
        build(&FamilySpec::new(Family::SubKautz, 3, 2).unwrap()).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_arcs() {
        assert!(Digraph::from_arcs(2, [(0, 0)]).is_err());
        assert!(Digraph::from_arcs(2, [(0, 1), (0, 1)]).is_err());
        assert!(Digraph::from_arcs(2, [(0, 2)]).is_err());
    }

    #[test]
    fn bfs_on_directed_cycle() {
        let g = directed_cycle(3);
        let field = g.bfs(0);
        assert_eq!(field.dist, vec![Some(0), Some(1), Some(2)]);
        assert_eq!(field.layers().unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn bfs_from_012_in_ck33() {
        let g = ck33();
        let src = g.index_of(&Word::parse("012", 3).unwrap()).unwrap();
        let field = g.bfs(src);
        assert_eq!(field.eccentricity(), Some(5));
        let farthest: Vec<String> = (0..g.vertex_count())
            .filter(|&v| field.dist[v] == Some(5))
            .map(|v| g.label(v).unwrap().to_string())
            .collect();
        assert_eq!(farthest, ["210", "213"]);
    }

    #[test]
    fn sk32_layers_from_01() {
        let g = sk32();
        let src = g.index_of(&Word::parse("01", 3).unwrap()).unwrap();
        assert_eq!(g.layer_profile(src).unwrap(), vec![1, 2, 4, 4, 1]);
    }

    #[test]
    fn diameter_and_mean_distance() {
        assert_eq!(ck33().diameter().unwrap(), 5);
        assert_eq!(sk32().diameter().unwrap(), 4);
        assert_eq!(ck33().mean_distance().unwrap(), Rational64::new(73, 24));
        assert_eq!(sk32().mean_distance().unwrap(), Rational64::new(13, 6));
    }

    #[test]
    fn diameter_reports_unreachable_pair() {
        // two vertices, one arc: 1 cannot reach 0
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        match g.diameter() {
            Err(Error::NotStronglyConnected { .. }) => {}
            other => panic!("expected connectivity error, got {other:?}"),
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(directed_cycle(4).girth_bfs(), Some(4));
        assert_eq!(ck33().girth_bfs(), Some(3));
        let ck34 = build(&FamilySpec::new(Family::CyclicKautz, 3, 4).unwrap()).unwrap();
        assert_eq!(ck34.girth_bfs(), Some(2)); // 0101 <-> 1010
        let acyclic = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(acyclic.girth_bfs(), None);
    }

    #[test]
    fn eulerian_check() {
        assert!(ck33().is_eulerian());
        assert!(sk32().is_eulerian());
        // unbalanced: 0 has out 2 / in 0
        let g = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2), (2, 1)]).unwrap();
        assert!(!g.is_eulerian());
    }

    #[test]
    fn antipodality_classes() {
        // directed cycle: unique farthest vertex, not mutual
        assert_eq!(
            directed_cycle(5).antipodality().unwrap(),
            Antipodality::WeaklyAntipodal
        );
        // complete symmetric digraph on 3 vertices: everyone is at distance 1
        let complete =
            Digraph::from_arcs(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]).unwrap();
        assert_eq!(complete.antipodality().unwrap(), Antipodality::Neither);
        assert_eq!(sk32().antipodality().unwrap(), Antipodality::Antipodal);
    }

    #[test]
    fn converse_is_an_involution() {
        let g = ck33();
        assert_eq!(g.converse().converse(), g);
        assert_eq!(g.converse().arc_count(), g.arc_count());
    }

    #[test]
    fn shortest_path_follows_arcs() {
        let g = ck33();
        let from = g.index_of(&Word::parse("012", 3).unwrap()).unwrap();
        let to = g.index_of(&Word::parse("210", 3).unwrap()).unwrap();
        let path = g.shortest_path(from, to).unwrap();
        assert_eq!(path.len(), 6); // distance 5
        assert!(path.windows(2).all(|p| g.has_arc(p[0], p[1])));
    }
}
