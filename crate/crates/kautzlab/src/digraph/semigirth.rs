//! Semigirth of a strongly connected loopless digraph.
//!
//! The semigirth is the largest `g` (capped by the diameter) such that for
//! every ordered vertex pair `(x, y)` with `d = dist(x, y)`:
//!
//! * if `d < g`, the shortest `x -> y` path is unique and there is no walk
//!   of length `d + 1` from `x` to `y`;
//! * if `d = g`, the shortest `x -> y` path is unique.
//!
//! For `x = y` the distance is read as the length of a shortest closed walk
//! through `x` (the all-pairs clause is taken over not necessarily distinct
//! vertices). Because the digraph is loopless, every walk of length `d` is a
//! shortest path and every walk of length `d + 1` is a path, so walk counts
//! saturated at "two or more" decide both clauses exactly.

use super::Digraph;
use crate::Result;

/// Which defining clause a witness pair violates one level above the semigirth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemigirthReason {
    /// Two distinct shortest walks exist for the pair.
    MultipleShortestWalks,
    /// A walk one step longer than the distance exists for the pair.
    LongerWalkExists,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigirthResult {
    pub gamma: usize,
    /// A pair whose walk structure stops `gamma` from being one larger,
    /// with the clause it violates. `None` when only the diameter caps it.
    pub witness: Option<(usize, usize, SemigirthReason)>,
}

impl Digraph {
    /// Computes the semigirth by saturating walk counts. Errors when the
    /// digraph is not strongly connected.
    pub fn semigirth(&self) -> Result<SemigirthResult> {
        self.check_strongly_connected()?;
        let n = self.vertex_count();
        let diameter = self.diameter()?;

        // Every pair contributes upper bounds on gamma: `dist - 1` when its
        // shortest walk is not unique, `dist` when a walk of length
        // `dist + 1` exists. Track the smallest bound and the first pair
        // attaining it (scan order is fixed, so results are stable).
        let mut best = usize::MAX;
        let mut best_witness: Option<(usize, usize, SemigirthReason)> = None;

        for x in 0..n {
            let field = self.bfs(x);
            // distance of (x, x) = shortest closed walk through x
            let closed = self
                .in_neighbors(x)
                .iter()
                .filter_map(|&u| field.get(u))
                .min()
                .map(|d| d as usize + 1)
                .expect("strongly connected digraph has a closed walk through every vertex");
            let horizon = (diameter + 1).max(closed + 1);

            // walk counts from x, saturated at 2
            let mut cur = vec![0u8; n];
            cur[x] = 1;
            for t in 1..=horizon {
                let mut next = vec![0u8; n];
                for v in 0..n {
                    let mut total = 0u8;
                    for &u in self.in_neighbors(v) {
                        total = (total + cur[u]).min(2);
                        if total == 2 {
                            break;
                        }
                    }
                    next[v] = total;
                }
                for y in 0..n {
                    let dist = if y == x {
                        closed
                    } else {
                        field.get(y).unwrap() as usize
                    };
                    let bound = if t == dist && next[y] >= 2 {
                        Some((dist - 1, SemigirthReason::MultipleShortestWalks))
                    } else if t == dist + 1 && next[y] >= 1 {
                        Some((dist, SemigirthReason::LongerWalkExists))
                    } else {
                        None
                    };
                    if let Some((bound, reason)) = bound {
                        if bound < best {
                            best = bound;
                            best_witness = Some((x, y, reason));
                        }
                    }
                }
                cur = next;
            }
        }

        if best <= diameter {
            Ok(SemigirthResult {
                gamma: best,
                witness: best_witness,
            })
        } else {
            // only the diameter caps gamma
            Ok(SemigirthResult {
                gamma: diameter,
                witness: None,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::directed_cycle;
    use crate::families::build;
    use crate::{Family, FamilySpec};

    fn semigirth_of(family: Family, d: u8, len: usize) -> SemigirthResult {
        build(&FamilySpec::new(family, d, len).unwrap())
            .unwrap()
            .semigirth()
            .unwrap()
    }

    #[test]
    fn directed_cycle_semigirth_is_diameter() {
        let g = directed_cycle(5);
        let r = g.semigirth().unwrap();
        assert_eq!(r.gamma, 4);
        assert!(r.witness.is_none());
    }

    #[test]
    fn kautz_semigirth_equals_word_length() {
        assert_eq!(semigirth_of(Family::Kautz, 2, 2).gamma, 2);
        assert_eq!(semigirth_of(Family::Kautz, 3, 3).gamma, 3);
    }

    #[test]
    fn subkautz_32_semigirth() {
        // two triangles through every vertex cap gamma at 2
        let r = semigirth_of(Family::SubKautz, 3, 2);
        assert_eq!(r.gamma, 2);
        assert!(r.witness.is_some());
    }

    #[test]
    fn disconnected_input_is_an_error() {
        let g = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(g.semigirth().is_err());
    }

    /// Brute-force oracle: enumerate all walks up to a given length.
    fn count_walks(g: &Digraph, from: usize, to: usize, len: usize) -> usize {
        if len == 0 {
            return usize::from(from == to);
        }
        g.out_neighbors(from)
            .iter()
            .map(|&v| count_walks(g, v, to, len - 1))
            .sum()
    }

    fn semigirth_by_enumeration(g: &Digraph) -> usize {
        let n = g.vertex_count();
        let diameter = g.diameter().unwrap();
        let dist_of = |x: usize, y: usize| -> usize {
            let field = g.bfs(x);
            if x == y {
                g.in_neighbors(x)
                    .iter()
                    .filter_map(|&u| field.get(u))
                    .min()
                    .unwrap() as usize
                    + 1
            } else {
                field.get(y).unwrap() as usize
            }
        };
        let mut gamma = diameter;
        for x in 0..n {
            for y in 0..n {
                let d = dist_of(x, y);
                if count_walks(g, x, y, d) >= 2 {
                    gamma = gamma.min(d - 1);
                }
                if count_walks(g, x, y, d + 1) >= 1 {
                    gamma = gamma.min(d);
                }
            }
        }
        gamma
    }

    #[test]
    fn walk_counts_match_walk_enumeration_on_small_instances() {
        let instances = [
            build(&FamilySpec::new(Family::Kautz, 2, 2).unwrap()).unwrap(),
            build(&FamilySpec::new(Family::Kautz, 2, 3).unwrap()).unwrap(),
            build(&FamilySpec::new(Family::SubKautz, 3, 2).unwrap()).unwrap(),
            build(&FamilySpec::new(Family::CyclicKautz, 3, 3).unwrap()).unwrap(),
            directed_cycle(6),
        ];
        for g in instances {
            assert_eq!(g.semigirth().unwrap().gamma, semigirth_by_enumeration(&g));
        }
    }
}
