/*!
Predictions computable from the family parameters alone.

Everything in this module is a pure function of the family, the degree
parameter `d`, and the label length `l` — no digraph is ever built. The
verification layer compares these predictions against measured values; the
command-line `analyze` output prints them directly.

Predictions that only hold for part of the parameter range return `None`
outside it rather than guessing. Each diameter prediction carries a short
`basis` string naming the regime it comes from, so a mismatch report can say
which regime failed.
*/

use num_rational::Rational64;

use crate::{Family, FamilySpec};

/// A predicted value together with the regime that produces it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prediction<T> {
    pub value: T,
    pub basis: &'static str,
}

impl<T> Prediction<T> {
    fn new(value: T, basis: &'static str) -> Self {
        Prediction { value, basis }
    }
}

/// Exact diameter, where one is known for the parameter regime.
///
/// Nothing is predicted for degree parameter 2 (where some instances are
/// not even strongly connected) or for the modified cyclic family.
pub fn diameter_formula(spec: &FamilySpec) -> Option<Prediction<usize>> {
    let (d, l) = (spec.d as usize, spec.len);
    match spec.family {
        Family::Kautz => Some(Prediction::new(
            l,
            "rewriting one window symbol per step reaches any target in l steps",
        )),
        Family::SubKautz if d == 2 => None,
        Family::SubKautz => {
            if l == 2 || d == 3 && l >= 4 {
                Some(Prediction::new(2 * l, "2l regime: l = 2, or d = 3 with l >= 4"))
            } else {
                Some(Prediction::new(
                    2 * l - 1,
                    "2l - 1 regime: d >= 4 with l >= 3, or (d, l) = (3, 3)",
                ))
            }
        }
        Family::CyclicKautz if d == 2 => None,
        Family::CyclicKautz => {
            if l == 2 {
                Some(Prediction::new(2, "length-2 labels shift like plain Kautz words"))
            } else if l == 3 || d == 3 && l >= 5 {
                Some(Prediction::new(
                    2 * l - 1,
                    "2l - 1 regime: l = 3, or d = 3 with l >= 5",
                ))
            } else {
                Some(Prediction::new(
                    2 * l - 2,
                    "2l - 2 regime: d >= 4 with l >= 4, or (d, l) = (3, 4)",
                ))
            }
        }
        Family::ModifiedCyclicKautz => None,
    }
}

/// Smallest cycle length not excluded by the window constraints.
///
/// A closed `k`-walk forces the vertex label to be `k`-periodic, so `k` is
/// impossible whenever the period would collide with a forbidden window
/// position: `l % k == 0` repeats the first symbol after `l` steps (ruled
/// out in the subKautz family), and `l % k == 1` repeats the second symbol
/// at the cyclic family's forbidden offset. The bound is not always
/// attained — small alphabets can exclude the first admissible `k` as well.
pub fn girth_lower_bound(spec: &FamilySpec) -> Option<usize> {
    let l = spec.len;
    match spec.family {
        Family::Kautz => Some(2),
        Family::SubKautz => (2..).find(|k| l % k != 0),
        Family::CyclicKautz => (2..).find(|k| l % k != 1),
        Family::ModifiedCyclicKautz => None,
    }
}

/// Claimed lower bound on the semigirth, and whether it is exact.
///
/// The semigirth is the largest `g` such that every vertex pair at distance
/// below `g` is joined by a unique shortest walk and admits no equally
/// short detour. Kautz digraphs attain exactly `l`; the subKautz and cyclic
/// families are only claimed to reach at least `l`, and only where they are
/// strongly connected.
pub fn semigirth_floor(spec: &FamilySpec) -> Option<(usize, bool)> {
    let (d, l) = (spec.d, spec.len);
    match spec.family {
        Family::Kautz => Some((l, true)),
        Family::CyclicKautz if l == 2 => Some((l, true)),
        Family::SubKautz | Family::CyclicKautz if d >= 3 => Some((l, false)),
        _ => None,
    }
}

/// Exact mean distance over all ordered vertex pairs (self-pairs included),
/// for the two regimes with a closed form.
pub fn mean_distance_formula(spec: &FamilySpec) -> Option<Rational64> {
    let d = spec.d as i64;
    match (spec.family, spec.len) {
        (Family::SubKautz, 2) if d >= 3 => {
            Some(Rational64::new(2 * d * d + 3 * d - 1, d * d + d))
        }
        (Family::CyclicKautz, 3) if d >= 3 => Some(Rational64::new(
            3 * d * d * d + d * d - 5 * d - 2,
            d * d * d - d,
        )),
        _ => None,
    }
}

/// Number of vertices at each distance from any fixed source, for the two
/// regimes where the count is independent of the source.
pub fn layer_formula(spec: &FamilySpec) -> Option<Vec<u128>> {
    let e = spec.d as u128 - 1;
    match (spec.family, spec.len) {
        (Family::SubKautz, 2) if spec.d >= 3 => Some(vec![1, e, e * e, 2 * e, 1]),
        (Family::CyclicKautz, 3) if spec.d >= 3 => {
            Some(vec![1, e, e * e, e * e * e - 1, 2 * e * e, e])
        }
        _ => None,
    }
}

/// Attained `(min, max)` ranges for out- and in-degrees, predicted from the
/// degree rules: `((out_min, out_max), (in_min, in_max))`.
pub fn degree_range(spec: &FamilySpec) -> ((usize, usize), (usize, usize)) {
    let (d, l) = (spec.d as usize, spec.len);
    let exact = |k: usize| ((k, k), (k, k));
    match spec.family {
        Family::Kautz => exact(d),
        Family::SubKautz => {
            if l == 2 {
                exact(d - 1)
            } else {
                ((d - 1, d), (d - 1, d))
            }
        }
        Family::CyclicKautz => match l {
            2 => exact(d),
            3 => exact(d - 1),
            _ => ((d - 1, d), (d - 1, d)),
        },
        Family::ModifiedCyclicKautz => {
            let in_range = match l {
                2 => (d, d),
                // every valid length-3 word over a 3-symbol alphabet starts
                // with the unique symbol its substitute arc requires, so the
                // repair bonus reaches every vertex
                3 if d == 2 => (d, d),
                3 => (d - 1, 2 * d - 2),
                _ => (d - 1, 2 * d - 1),
            };
            ((d, d), in_range)
        }
    }
}

/// Which of the sufficient conditions tying connectivity to the semigirth
/// fire for the measured minimum degree, diameter and semigirth.
///
/// When a flag is set the corresponding conclusion must hold: `max_arc` and
/// `max_vertex` force the arc- and vertex-connectivity up to the minimum
/// degree, and the `super_` variants additionally force every minimum cut
/// to be trivial (the arc set around a single vertex, or a single
/// vertex's neighborhood).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityConditions {
    pub max_arc: bool,
    pub max_vertex: bool,
    pub super_arc: bool,
    pub super_vertex: bool,
}

pub fn connectivity_conditions(
    min_degree: usize,
    diameter: usize,
    semigirth: usize,
) -> ConnectivityConditions {
    ConnectivityConditions {
        max_arc: min_degree > 1 && diameter <= 2 * semigirth,
        max_vertex: min_degree > 1 && diameter + 1 <= 2 * semigirth,
        super_arc: min_degree >= 3 && diameter <= 2 * semigirth,
        super_vertex: min_degree >= 3 && diameter + 2 <= 2 * semigirth,
    }
}

/// Claimed exact `(vertex, arc)` connectivities, where known.
pub fn connectivity_claim(spec: &FamilySpec) -> Option<(usize, usize)> {
    let (d, l) = (spec.d as usize, spec.len);
    if d == 2 {
        return None;
    }
    match spec.family {
        Family::Kautz => Some((d, d)),
        Family::SubKautz => Some((d - 1, d - 1)),
        Family::CyclicKautz if l == 2 => Some((d, d)),
        Family::CyclicKautz => Some((d - 1, d - 1)),
        Family::ModifiedCyclicKautz => None,
    }
}

/// Instances claimed superconnected even though their minimum degree is too
/// small for the sufficient conditions: `(super_arc, super_vertex)`.
pub fn superconnectivity_examples(spec: &FamilySpec) -> (Option<bool>, Option<bool>) {
    match (spec.family, spec.d, spec.len) {
        (Family::SubKautz, 3, 2) => (Some(true), None),
        (Family::CyclicKautz, 3, 4) => (None, Some(true)),
        _ => (None, None),
    }
}

/// Whether the instance has an Euler circuit, where the degree rules decide
/// it. `None` where balance holds but strong connectivity is unsettled.
pub fn eulerian_claim(spec: &FamilySpec) -> Option<bool> {
    let (d, l) = (spec.d, spec.len);
    match spec.family {
        // regular and strongly connected
        Family::Kautz => Some(true),
        // in- and out-degree agree at every vertex; connectivity needs d >= 3
        Family::SubKautz => (d >= 3).then_some(true),
        Family::CyclicKautz => match l {
            2 => Some(true),
            // disconnected at d = 2, balanced and connected otherwise
            3 => Some(d >= 3),
            // a vertex with repeated second-and-last symbol sends d arcs but
            // receives d - 1, so balance always fails
            _ => Some(false),
        },
        Family::ModifiedCyclicKautz => match l {
            2 => Some(true),
            3 if d == 2 => None,
            // any vertex reached by a substitute arc receives more than d
            _ => Some(false),
        },
    }
}

/// Whether the instance has a Hamiltonian cycle, where one is forced by the
/// line-digraph structure (a digraph's line digraph is Hamiltonian exactly
/// when the digraph itself has an Euler circuit).
pub fn hamiltonian_claim(spec: &FamilySpec) -> Option<bool> {
    let (d, l) = (spec.d, spec.len);
    match spec.family {
        Family::Kautz => Some(true),
        Family::CyclicKautz => {
            if l == 2 || d >= 3 {
                Some(true)
            } else if spec.known_disconnected() {
                Some(false)
            } else {
                None
            }
        }
        Family::SubKautz | Family::ModifiedCyclicKautz => None,
    }
}

/// Largest vertex count of a digraph with maximum out-degree `degree` and
/// diameter `diameter`.
pub fn moore_bound(degree: usize, diameter: usize) -> u128 {
    (0..=diameter as u32).map(|i| (degree as u128).pow(i)).sum()
}

/// Mean distance of a hypothetical digraph meeting [`moore_bound`] exactly,
/// over all ordered pairs including self-pairs; the natural yardstick for
/// measured mean distances. `None` if the counts overflow.
pub fn moore_mean_distance(degree: usize, diameter: usize) -> Option<Rational64> {
    let mut total = 0i64;
    let mut pairs = 0i64;
    for i in 0..=diameter {
        let layer = (degree as i64).checked_pow(u32::try_from(i).ok()?)?;
        total = total.checked_add((i as i64).checked_mul(layer)?)?;
        pairs = pairs.checked_add(layer)?;
    }
    Some(Rational64::new(total, pairs))
}
