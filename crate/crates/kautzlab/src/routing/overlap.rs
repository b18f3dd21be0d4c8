/*!
Distance queries answered from label overlap alone.

For the cyclic family the walk sequence of a `t`-hop walk from `x` to `y` is
`x`, then `t - l` free symbols (only when `t > l`), then the part of `y`
that sticks out. Whether such a sequence can be completed is decided by
three ingredients, each read off the labels directly:

* the literal overlap: where `x` and `y` share positions, their symbols must
  agree (`y[j] == x[t + j]`);
* the window bars: each window whose first symbol lies in `x` and whose last
  symbol lies in `y` forces `x[i] != y[i + l - 1 - t]`;
* the bridge: the free middle symbols form a chain whose members avoid a
  handful of pinned symbols and their own neighbors, checked by a tiny
  feasibility sweep over the alphabet.

Scanning `t` upwards, the first completable value is the distance. Up to
`t = 2l - 1` no two free symbols are a full window apart, so the chain sweep
is exact; beyond that (only relevant when `d = 2`) the exact solver takes
over. The Kautz and subKautz families have no such overlap treatment and go
straight to the solver.
*/

use super::{pathword, DistanceCase};
use crate::{Error, Family, FamilySpec, Result, Symbol, Word};

/// A distance together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyticDistance {
    pub hops: usize,
    pub case: DistanceCase,
}

/// Distance from `x` to `y` computed from the labels, without building the
/// digraph.
///
/// Exact for the Kautz, subKautz and cyclic families; the modified family
/// is rejected because its substitute arcs are invisible to the labels.
pub fn distance_analytic(spec: &FamilySpec, x: &Word, y: &Word) -> Result<AnalyticDistance> {
    match spec.family {
        Family::CyclicKautz => cyclic_distance(spec, x, y),
        Family::Kautz | Family::SubKautz => {
            let cap = pathword::default_search_cap(spec)?;
            let walk = pathword::shortest_walk(spec, x, y, cap)?;
            Ok(AnalyticDistance {
                hops: walk.hops(),
                case: DistanceCase::BySearch,
            })
        }
        Family::ModifiedCyclicKautz => Err(Error::Unsupported(format!(
            "{spec} has substitute arcs that are not shifts; use the built digraph for \
             distance queries"
        ))),
    }
}

fn cyclic_distance(spec: &FamilySpec, x: &Word, y: &Word) -> Result<AnalyticDistance> {
    for w in [x, y] {
        if !spec.is_valid_vertex(w)? {
            return Err(Error::WordSpecMismatch {
                word: w.to_string(),
                spec: spec.to_string(),
                reason: "not a vertex of this family".to_string(),
            });
        }
    }
    let l = spec.len;
    let (xs, ys) = (x.symbols(), y.symbols());
    for t in 0..=(2 * l - 1) {
        if !alignment_matches(xs, ys, t) {
            continue;
        }
        if t < l {
            return Ok(AnalyticDistance {
                hops: t,
                case: DistanceCase::Overlap { shared: l - t },
            });
        }
        if t == l {
            if xs[l - 1] != ys[0] {
                return Ok(AnalyticDistance {
                    hops: t,
                    case: DistanceCase::Concatenated,
                });
            }
            continue;
        }
        if bridge_feasible(spec.d, xs, ys, t) {
            return Ok(AnalyticDistance {
                hops: t,
                case: DistanceCase::Bridged { gap: t - l },
            });
        }
    }
    // d = 2 instances can have pairs farther apart than 2l - 1 (or none at
    // all); hand those to the solver rather than declaring a formula
    if spec.d == 2 {
        for t in 2 * l..=3 * l {
            if pathword::walk_exists(spec, x, y, t)?.is_some() {
                return Ok(AnalyticDistance {
                    hops: t,
                    case: DistanceCase::BySearch,
                });
            }
        }
        return Err(Error::Unreachable {
            from: x.to_string(),
            to: y.to_string(),
            limit: 3 * l,
        });
    }
    Err(Error::Unreachable {
        from: x.to_string(),
        to: y.to_string(),
        limit: 2 * l - 1,
    })
}

/// The label-only part of "a `t`-hop walk from `x` to `y` can exist":
/// literal agreement on shared positions plus the window bars between `x`
/// and `y` symbols.
pub fn alignment_matches(xs: &[Symbol], ys: &[Symbol], t: usize) -> bool {
    let l = xs.len();
    // literal overlap: y starts at position t of the sequence
    for j in 0..l.saturating_sub(t) {
        if ys[j] != xs[t + j] {
            return false;
        }
    }
    // window bars: window i starts at x[i] and ends at y[i + l - 1 - t];
    // only windows strictly between the two ends (1 <= i <= t - 1) whose
    // last symbol still lands inside y (i >= t - l + 1) are of that shape
    let lo = 1.max((t + 1).saturating_sub(l));
    let hi = (l - 1).min(t.saturating_sub(1));
    for i in lo..=hi {
        if xs[i] == ys[i + l - 1 - t] {
            return false;
        }
    }
    true
}

/// Whether the `t - l` free middle symbols can be chosen. Each position
/// must avoid its predecessor, one symbol of `x`, and one or two symbols of
/// `y`; a left-to-right sweep over feasible symbol sets decides this
/// exactly because no two free positions are a full window apart.
fn bridge_feasible(d: Symbol, xs: &[Symbol], ys: &[Symbol], t: usize) -> bool {
    let l = xs.len();
    let gap = t - l;
    debug_assert!((1..l).contains(&gap));
    let alphabet = d as usize + 1;
    // feasible symbols for the previous position; the fixed tail of x seeds it
    let mut prev = vec![false; alphabet];
    prev[xs[l - 1] as usize] = true;
    for j in 0..gap {
        let live = prev.iter().filter(|&&p| p).count();
        if live == 0 {
            return false;
        }
        let mut feasible = vec![false; alphabet];
        for c in 0..alphabet {
            if live == 1 && prev[c] {
                continue; // the only viable predecessor is c itself
            }
            if c == xs[j + 1] as usize {
                continue; // the window starting at x[j + 1] ends here
            }
            if c == ys[j + 2 * l - 1 - t] as usize {
                continue; // the window starting here ends at that y symbol
            }
            if j == gap - 1 && c == ys[0] as usize {
                continue; // the last free symbol immediately precedes y
            }
            feasible[c] = true;
        }
        prev = feasible;
    }
    prev.iter().any(|&p| p)
}
