/*!
Shortest cycles found as periodic label patterns.

Every arc in the shift families moves a vertex label one symbol to the
left, so following a cycle of length `k` returns the label to itself after
`k` shifts: all labels on the cycle are windows of one `k`-periodic symbol
stream. Conversely, a `k`-symbol pattern whose periodic stream has only
valid windows and arcs spells out a closed `k`-walk, and if any shorter
closed walk existed its own pattern would have been found at a smaller `k`.
Scanning `k` upwards therefore yields the girth — and the search space
depends only on `d` and `k`, never on the vertex count, which keeps
instances far beyond building range in reach.

The search enumerates patterns lexicographically, so the returned witness
vertex is deterministic.
*/

use super::PathWord;
use crate::{Error, Family, FamilySpec, Result, Symbol, Word};

/// Cyclic offsets `o` with `p[i] != p[(i + o) % k]` required at every
/// position of a `k`-pattern `p`.
fn forbidden_offsets(spec: &FamilySpec) -> Result<Vec<usize>> {
    match spec.family {
        Family::Kautz => Ok(vec![1]),
        Family::SubKautz => Ok(vec![1, spec.len]),
        Family::CyclicKautz => Ok(vec![1, spec.len - 1]),
        Family::ModifiedCyclicKautz => Err(Error::Unsupported(
            "substitute arcs are not label shifts, so cycles of the modified \
             cyclic family have no periodic-pattern description"
                .to_string(),
        )),
    }
}

/// Largest cycle length worth scanning by default.
pub fn default_cycle_length_cap(spec: &FamilySpec) -> usize {
    2 * spec.len + 2
}

/// Girth and a vertex on a shortest cycle, by scanning cycle lengths
/// `2..=k_max` for a realizable periodic pattern.
///
/// Returns `Ok(None)` if no cycle of length at most `k_max` exists, and
/// [`Error::GuardExceeded`] if the pattern search visits more than
/// `node_budget` states in total.
pub fn girth_periodic_search(
    spec: &FamilySpec,
    k_max: usize,
    node_budget: u64,
) -> Result<Option<(usize, Word)>> {
    let offsets = forbidden_offsets(spec)?;
    let mut nodes = 0u64;
    for k in 2..=k_max {
        // an offset divisible by k would force p[i] != p[i]
        if offsets.iter().any(|o| o % k == 0) {
            continue;
        }
        let mut pattern = vec![0; k];
        if fill(spec.d, &offsets, &mut pattern, 0, &mut nodes, node_budget)? {
            let symbols: Vec<Symbol> = (0..spec.len + k).map(|i| pattern[i % k]).collect();
            let walk = PathWord::new(*spec, symbols);
            walk.validate()?;
            let witness = walk.vertices().swap_remove(0);
            return Ok(Some((k, witness)));
        }
    }
    Ok(None)
}

/// Assigns `pattern[depth..]` to the lexicographically least completion, if
/// one exists.
fn fill(
    d: Symbol,
    offsets: &[usize],
    pattern: &mut [Symbol],
    depth: usize,
    nodes: &mut u64,
    node_budget: u64,
) -> Result<bool> {
    let k = pattern.len();
    if depth == k {
        return Ok(true);
    }
    'candidates: for c in 0..=d {
        *nodes += 1;
        if *nodes > node_budget {
            return Err(Error::GuardExceeded(format!(
                "periodic cycle search exceeded {node_budget} states at cycle length {k}"
            )));
        }
        for &o in offsets {
            // partners of `depth` at cyclic distance o, in both directions
            for partner in [(depth + o) % k, (depth + k - o % k) % k] {
                if partner < depth && pattern[partner] == c {
                    continue 'candidates;
                }
            }
        }
        pattern[depth] = c;
        if fill(d, offsets, pattern, depth + 1, nodes, node_budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, order_formula};
    use crate::routing::formulas::girth_lower_bound;

    fn spec(family: Family, d: u8, len: usize) -> FamilySpec {
        FamilySpec::new(family, d, len).unwrap()
    }

    fn search(s: &FamilySpec) -> Option<(usize, Word)> {
        girth_periodic_search(s, default_cycle_length_cap(s), 1_000_000).unwrap()
    }

    #[test]
    fn kautz_girth_is_two_with_alternating_witness() {
        let (girth, witness) = search(&spec(Family::Kautz, 3, 3)).unwrap();
        assert_eq!(girth, 2);
        assert_eq!(witness.to_string(), "010");
    }

    #[test]
    fn pattern_girths_match_breadth_first_girths() {
        for family in [Family::Kautz, Family::SubKautz, Family::CyclicKautz] {
            for d in 2..=4u8 {
                for len in 2..=5usize {
                    let s = spec(family, d, len);
                    if order_formula(&s).is_none_or(|n| n > 150) {
                        continue;
                    }
                    let direct = build(&s).unwrap().girth_bfs();
                    assert_eq!(search(&s).map(|(k, _)| k), direct, "{s}");
                }
            }
        }
    }

    #[test]
    fn small_alphabets_can_push_the_girth_above_its_bound() {
        let s = spec(Family::CyclicKautz, 3, 13);
        let (girth, witness) = search(&s).unwrap();
        assert_eq!(girth, 7);
        assert_eq!(witness.to_string(), "0120123012012");
        assert!(girth_lower_bound(&s).unwrap() < girth);
    }

    #[test]
    fn node_budget_is_enforced() {
        let err = girth_periodic_search(&spec(Family::CyclicKautz, 3, 13), 28, 10).unwrap_err();
        assert!(matches!(err, Error::GuardExceeded(_)), "{err}");
    }

    #[test]
    fn cap_below_the_girth_finds_nothing() {
        let s = spec(Family::CyclicKautz, 3, 3);
        assert_eq!(girth_periodic_search(&s, 2, 1_000).unwrap(), None);
    }

    #[test]
    fn modified_family_is_refused() {
        let s = spec(Family::ModifiedCyclicKautz, 3, 3);
        assert!(matches!(
            girth_periodic_search(&s, 8, 1_000),
            Err(Error::Unsupported(_))
        ));
    }
}
