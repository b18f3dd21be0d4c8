/*!
Label-based distance, routing and prediction machinery.

A walk in any of the shift families is fully described by a single symbol
sequence: `t` hops from `x` to `y` correspond to a sequence `s` of length
`l + t` that starts with `x`, ends with `y`, and is valid in the sense that
every length-`l` window is a vertex and every pair of consecutive windows is
an arc. All distance machinery in this module works on such sequences and
never touches a built digraph:

* [`pathword`] decides, by exact backtracking over the free middle symbols,
  whether a `t`-hop walk exists, and scans `t` upwards for shortest walks;
* [`overlap`] answers cyclic-family distance queries directly from how the
  two labels overlap, falling back to the solver only where no closed form
  is known;
* [`formulas`] collects the parameter-only predictions (diameter, girth
  bounds, mean distance, layer counts, connectivity conditions);
* [`periodic`] finds shortest cycles as periodic symbol patterns, which is
  what makes girth computations feasible far beyond buildable sizes.
*/

pub mod formulas;
pub mod overlap;
pub mod pathword;
pub mod periodic;

pub use overlap::{distance_analytic, AnalyticDistance};
pub use pathword::{default_search_cap, shortest_walk, walk_exists};
pub use periodic::girth_periodic_search;

use std::fmt;

use crate::{families, FamilySpec, Result, Symbol, Word};

/// How a distance was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceCase {
    /// The target label overlaps the source label in `shared` symbols, so
    /// the whole walk is already spelled out by the two labels.
    Overlap { shared: usize },
    /// The labels share nothing and are walked through back to back.
    Concatenated,
    /// `gap` fresh symbols had to be inserted between the two labels.
    Bridged { gap: usize },
    /// Found by the exact solver rather than by overlap analysis.
    BySearch,
}

impl fmt::Display for DistanceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceCase::Overlap { shared } => write!(f, "overlap of {shared} symbols"),
            DistanceCase::Concatenated => write!(f, "labels concatenated"),
            DistanceCase::Bridged { gap } => write!(f, "bridged with {gap} fresh symbols"),
            DistanceCase::BySearch => write!(f, "exact search"),
        }
    }
}

/// A walk certificate: the full symbol sequence of a walk, together with the
/// family it lives in.
///
/// The certificate can replay itself vertex by vertex, which is how tests
/// confirm that claimed distances are witnessed by real walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWord {
    spec: FamilySpec,
    symbols: Vec<Symbol>,
}

impl PathWord {
    pub(crate) fn new(spec: FamilySpec, symbols: Vec<Symbol>) -> PathWord {
        debug_assert!(symbols.len() >= spec.len);
        PathWord { spec, symbols }
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Number of arcs the walk uses.
    pub fn hops(&self) -> usize {
        self.symbols.len() - self.spec.len
    }

    /// The vertices visited, in order; `hops() + 1` of them.
    pub fn vertices(&self) -> Vec<Word> {
        self.symbols
            .windows(self.spec.len)
            .map(|w| Word::new(w.to_vec(), self.spec.d).expect("walk symbols fit the alphabet"))
            .collect()
    }

    /// Replays the walk against the family rules: every window must be a
    /// vertex and every step an arc.
    pub fn validate(&self) -> Result<()> {
        let vertices = self.vertices();
        for pair in vertices.windows(2) {
            let next = families::successors(&self.spec, &pair[0])?;
            if next.binary_search(&pair[1]).is_err() {
                return Err(crate::Error::InvalidDigraph(format!(
                    "walk step {} -> {} is not an arc of {}",
                    pair[0], pair[1], self.spec
                )));
            }
        }
        // single-vertex walks still need their one window checked
        if let [only] = vertices.as_slice() {
            if !self.spec.is_valid_vertex(only)? {
                return Err(crate::Error::WordSpecMismatch {
                    word: only.to_string(),
                    spec: self.spec.to_string(),
                    reason: "walk window is not a vertex".to_string(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = Word::new(self.symbols.clone(), self.spec.d)
            .expect("walk symbols fit the alphabet");
        write!(f, "{rendered}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Family;

    #[test]
    fn path_word_replay_accepts_real_walks() {
        let spec = FamilySpec::new(Family::CyclicKautz, 3, 3).unwrap();
        // 012 -> 120 -> 203
        let walk = PathWord::new(spec, vec![0, 1, 2, 0, 3]);
        assert_eq!(walk.hops(), 2);
        let names: Vec<String> = walk.vertices().iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["012", "120", "203"]);
        walk.validate().unwrap();
    }

    #[test]
    fn path_word_replay_rejects_non_arcs() {
        let spec = FamilySpec::new(Family::CyclicKautz, 3, 3).unwrap();
        // 012 -> 121 re-appends the second symbol, which the cyclic rule forbids
        let walk = PathWord::new(spec, vec![0, 1, 2, 1]);
        assert!(walk.validate().is_err());
    }

    #[test]
    fn zero_hop_walks_check_their_window() {
        let spec = FamilySpec::new(Family::CyclicKautz, 3, 3).unwrap();
        assert!(PathWord::new(spec, vec![0, 1, 2]).validate().is_ok());
        assert!(PathWord::new(spec, vec![0, 1, 0]).validate().is_err());
    }
}
