/*!
Exact walk solver on symbol sequences.

A `t`-hop walk from `x` to `y` exists exactly when some sequence `s` of
length `l + t` has `x` as its prefix, `y` as its suffix, and satisfies the
family's window constraints. With both ends pinned, only the `t - l` middle
positions (if any) are free, and every constraint reaches at most `l`
positions back, so a small backtracking search decides existence exactly.
*/

use super::PathWord;
use crate::{Error, Family, FamilySpec, Result, Symbol, Word};

/// Window constraints as distances between sequence positions that must
/// carry different symbols.
///
/// * every family: `s[j] != s[j-1]` (consecutive symbols differ);
/// * cyclic: `s[j] != s[j-l+1]` (each window's first and last differ);
/// * subKautz: `s[j] != s[j-l]` (no arc re-appends its tail's first symbol).
fn constraint_offsets(spec: &FamilySpec) -> Vec<usize> {
    match spec.family {
        Family::Kautz => vec![1],
        Family::SubKautz => vec![1, spec.len],
        Family::CyclicKautz => vec![1, spec.len - 1],
        Family::ModifiedCyclicKautz => Vec::new(), // rejected before use
    }
}

fn require_shift_family(spec: &FamilySpec) -> Result<()> {
    if spec.family == Family::ModifiedCyclicKautz {
        return Err(Error::Unsupported(format!(
            "{spec} has substitute arcs that are not shifts; walk sequences cannot express \
             them, use the built digraph instead"
        )));
    }
    Ok(())
}

fn check_vertex(spec: &FamilySpec, w: &Word) -> Result<()> {
    if !spec.is_valid_vertex(w)? {
        return Err(Error::WordSpecMismatch {
            word: w.to_string(),
            spec: spec.to_string(),
            reason: "not a vertex of this family".to_string(),
        });
    }
    Ok(())
}

/// Decides whether a walk of exactly `hops` arcs runs from `x` to `y`,
/// returning its symbol sequence when one exists.
pub fn walk_exists(
    spec: &FamilySpec,
    x: &Word,
    y: &Word,
    hops: usize,
) -> Result<Option<PathWord>> {
    require_shift_family(spec)?;
    check_vertex(spec, x)?;
    check_vertex(spec, y)?;
    let l = spec.len;

    // where x and y overlap, their symbols must agree literally
    if hops < l && x.symbols()[hops..] != y.symbols()[..l - hops] {
        return Ok(None);
    }

    let mut s: Vec<Symbol> = x.symbols().to_vec();
    s.resize(l + hops, 0);
    let offsets = constraint_offsets(spec);
    let ok = fill(&mut s, l, spec.d, hops, y.symbols(), &offsets);
    Ok(ok.then(|| PathWord::new(*spec, s)))
}

/// Backtracking over positions `j, j+1, …`; positions at or past
/// `l + hops - l = hops` are pinned to `y`.
fn fill(
    s: &mut Vec<Symbol>,
    j: usize,
    d: Symbol,
    hops: usize,
    y: &[Symbol],
    offsets: &[usize],
) -> bool {
    if j == s.len() {
        return true;
    }
    let satisfies = |s: &[Symbol], j: usize| offsets.iter().all(|&o| s[j] != s[j - o]);
    if j >= hops {
        // suffix region: the symbol is forced by y
        s[j] = y[j - hops];
        return satisfies(s, j) && fill(s, j + 1, d, hops, y, offsets);
    }
    for c in 0..=d {
        s[j] = c;
        if satisfies(s, j) && fill(s, j + 1, d, hops, y, offsets) {
            return true;
        }
    }
    false
}

/// Largest number of hops worth scanning before declaring a pair
/// unreachable; covers the known diameters of each family with room to
/// spare on the small alphabets.
pub fn default_search_cap(spec: &FamilySpec) -> Result<usize> {
    require_shift_family(spec)?;
    Ok(match spec.family {
        Family::Kautz => spec.len,
        Family::SubKautz if spec.d >= 3 => 2 * spec.len,
        Family::CyclicKautz if spec.d >= 3 => 2 * spec.len - 1,
        _ => 3 * spec.len,
    })
}

/// Shortest walk from `x` to `y` within `cap` hops, scanning hop counts
/// upwards; errors when none exists within the cap.
pub fn shortest_walk(spec: &FamilySpec, x: &Word, y: &Word, cap: usize) -> Result<PathWord> {
    for hops in 0..=cap {
        if let Some(walk) = walk_exists(spec, x, y, hops)? {
            return Ok(walk);
        }
    }
    Err(Error::Unreachable {
        from: x.to_string(),
        to: y.to_string(),
        limit: cap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build;

    fn spec(family: Family, d: u8, len: usize) -> FamilySpec {
        FamilySpec::new(family, d, len).unwrap()
    }

    fn parse(spec: &FamilySpec, t: &str) -> Word {
        spec.parse_vertex(t).unwrap()
    }

    #[test]
    fn zero_hops_means_equality() {
        let s = spec(Family::CyclicKautz, 3, 3);
        let x = parse(&s, "012");
        let y = parse(&s, "120");
        assert!(walk_exists(&s, &x, &x, 0).unwrap().is_some());
        assert!(walk_exists(&s, &x, &y, 0).unwrap().is_none());
    }

    #[test]
    fn single_hops_are_arcs() {
        let s = spec(Family::SubKautz, 3, 2);
        let x = parse(&s, "01");
        assert!(walk_exists(&s, &x, &parse(&s, "12"), 1).unwrap().is_some());
        // 10 re-appends the first symbol: not a subKautz arc
        assert!(walk_exists(&s, &x, &parse(&s, "10"), 1).unwrap().is_none());
    }

    #[test]
    fn solved_walks_replay_cleanly() {
        let s = spec(Family::CyclicKautz, 3, 3);
        let walk = shortest_walk(&s, &parse(&s, "012"), &parse(&s, "210"), 7).unwrap();
        assert_eq!(walk.hops(), 5);
        walk.validate().unwrap();
        assert_eq!(walk.symbols()[..3], [0, 1, 2]);
        assert_eq!(walk.symbols()[walk.symbols().len() - 3..], [2, 1, 0]);
    }

    #[test]
    fn scan_agrees_with_breadth_first_distances_everywhere() {
        for s in [
            spec(Family::Kautz, 2, 3),
            spec(Family::SubKautz, 3, 2),
            spec(Family::SubKautz, 3, 3),
            spec(Family::CyclicKautz, 3, 3),
            spec(Family::CyclicKautz, 4, 3),
        ] {
            let g = build(&s).unwrap();
            let cap = default_search_cap(&s).unwrap();
            for u in 0..g.vertex_count() {
                let field = g.bfs(u);
                for v in 0..g.vertex_count() {
                    let by_scan = shortest_walk(&s, g.label(u).unwrap(), g.label(v).unwrap(), cap)
                        .map(|w| w.hops());
                    match field.get(v) {
                        Some(dist) => assert_eq!(by_scan.unwrap(), dist as usize, "{s} {u}->{v}"),
                        None => assert!(by_scan.is_err()),
                    }
                }
            }
        }
    }

    #[test]
    fn unreachable_within_cap_is_an_error() {
        let s = spec(Family::SubKautz, 2, 2); // splits into two 3-cycles
        let x = parse(&s, "01");
        let y = parse(&s, "02");
        match shortest_walk(&s, &x, &y, 6) {
            Err(Error::Unreachable { limit: 6, .. }) => {}
            other => panic!("expected unreachable, got {other:?}"),
        }
    }

    #[test]
    fn modified_family_is_rejected() {
        let s = spec(Family::ModifiedCyclicKautz, 3, 3);
        let x = Word::parse("012", 3).unwrap();
        assert!(matches!(
            walk_exists(&s, &x, &x, 0),
            Err(Error::Unsupported(_))
        ));
        assert!(default_search_cap(&s).is_err());
    }
}
