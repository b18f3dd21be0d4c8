/*!
Construction of the four families and the operators relating them.

All four families share the same mechanics: vertices are words, and moving
along an arc shifts the word one symbol to the left and appends a new symbol.
They differ only in which appended symbols are allowed:

* Kautz: anything except the last symbol (so consecutive symbols stay
  distinct);
* subKautz: additionally not the first symbol of the source;
* cyclic Kautz: additionally not the second symbol of the source, which keeps
  the target's first and last symbols distinct;
* modified cyclic Kautz: the cyclic rules, plus one substitute arc replacing
  each shift the cyclic rule forbids, which restores out-degree `d`.

The operators `line_digraph`, `partial_line_digraph`,
`subkautz_by_arc_removal` and `reversal_is_isomorphism` express the
relations between the families (and their converses) that the test suite
checks structurally, vertex for vertex and arc for arc.
*/

use crate::digraph::Digraph;
use crate::{Error, Family, FamilySpec, Result, Symbol, Word};

/// Builds the digraph of a family instance with lexicographically sorted
/// word labels.
pub fn build(spec: &FamilySpec) -> Result<Digraph> {
    let labels = spec.enumerate_vertices();
    let mut arcs = Vec::new();
    for (i, x) in labels.iter().enumerate() {
        for y in successors(spec, x)? {
            let j = labels.binary_search(&y).map_err(|_| {
                Error::InvalidDigraph(format!("successor {y} of {x} is not a vertex"))
            })?;
            arcs.push((i, j));
        }
    }
    Digraph::with_labels(labels, arcs)
}

/// Out-neighbors of `x` in the given family, in sorted order.
pub fn successors(spec: &FamilySpec, x: &Word) -> Result<Vec<Word>> {
    if !spec.is_valid_vertex(x)? {
        return Err(Error::WordSpecMismatch {
            word: x.to_string(),
            spec: spec.to_string(),
            reason: "not a vertex of this family".to_string(),
        });
    }
    let s = x.symbols();
    let (first, second, last) = (s[0], s[1], s[s.len() - 1]);
    let blocked: [Symbol; 2] = match spec.family {
        Family::Kautz => [last, last],
        Family::SubKautz => [first, last],
        Family::CyclicKautz | Family::ModifiedCyclicKautz => [second, last],
    };
    let mut out = Vec::new();
    for y in 0..=spec.d {
        if y == blocked[0] || y == blocked[1] {
            continue;
        }
        let mut symbols = s[1..].to_vec();
        symbols.push(y);
        out.push(Word::new(symbols, spec.d)?);
    }
    if spec.family == Family::ModifiedCyclicKautz {
        if let Some(w) = repaired_successor(spec, x) {
            out.push(w);
        }
    }
    out.sort();
    Ok(out)
}

/// The substitute out-neighbor of a modified cyclic vertex.
///
/// When `x2 != xl`, the shift appending `x2` would produce a word whose first
/// and last symbols coincide; the substitute keeps that word's tail but
/// patches its head to the smallest symbol that makes it a vertex again.
fn repaired_successor(spec: &FamilySpec, x: &Word) -> Option<Word> {
    let s = x.symbols();
    let (second, last) = (s[1], s[s.len() - 1]);
    if second == last {
        return None; // appending x2 is already excluded by the shift rule
    }
    // second != last forces len >= 3, so s[2] exists
    let head = smallest_avoiding(spec.d, second, s[2]);
    let mut symbols = vec![head];
    symbols.extend_from_slice(&s[2..]);
    symbols.push(second);
    Some(Word::new(symbols, spec.d).expect("patched word stays in the alphabet"))
}

/// Smallest symbol of `{0, …, d}` different from both `a` and `b`.
fn smallest_avoiding(d: u8, a: Symbol, b: Symbol) -> Symbol {
    (0..=d)
        .find(|&y| y != a && y != b)
        .expect("an alphabet of size d + 1 >= 3 always has a third symbol")
}

/// Number of vertices predicted from the parameters alone:
/// `d^l + d^(l-1)` for the Kautz families, `d^l + (-1)^l d` for the cyclic
/// ones. `None` when the count exceeds the 128-bit range.
pub fn order_formula(spec: &FamilySpec) -> Option<u128> {
    let d = spec.d as u128;
    let l = u32::try_from(spec.len).ok()?;
    let power = d.checked_pow(l)?;
    match spec.family {
        Family::Kautz | Family::SubKautz => power.checked_add(d.checked_pow(l - 1)?),
        Family::CyclicKautz | Family::ModifiedCyclicKautz => {
            if l % 2 == 0 {
                power.checked_add(d)
            } else {
                Some(power - d) // d^l > d whenever l >= 2
            }
        }
    }
}

/// Number of closed walks of length `len` in the complete digraph on
/// `d + 1` vertices, computed as the trace of a power of its adjacency
/// matrix.
///
/// Cyclic vertex labels are exactly such walks read off vertex by vertex,
/// so this re-derives the cyclic order count without enumerating words.
/// `None` when an entry exceeds the 128-bit range.
pub fn complete_digraph_closed_walks(d: u8, len: usize) -> Option<u128> {
    let n = d as usize + 1;
    let adjacency: Vec<Vec<u128>> = (0..n)
        .map(|i| (0..n).map(|j| u128::from(i != j)).collect())
        .collect();
    let mut power = adjacency.clone();
    for _ in 1..len {
        let mut next = vec![vec![0u128; n]; n];
        for (i, row) in power.iter().enumerate() {
            for (k, &a) in row.iter().enumerate() {
                if a != 0 {
                    for (j, cell) in next[i].iter_mut().enumerate() {
                        *cell = cell.checked_add(a.checked_mul(adjacency[k][j])?)?;
                    }
                }
            }
        }
        power = next;
    }
    (0..n).map(|i| power[i][i]).try_fold(0u128, u128::checked_add)
}

/// Out- and in-degree of `w` predicted from its label alone.
pub fn degree_formula(spec: &FamilySpec, w: &Word) -> Result<(usize, usize)> {
    if !spec.is_valid_vertex(w)? {
        return Err(Error::WordSpecMismatch {
            word: w.to_string(),
            spec: spec.to_string(),
            reason: "not a vertex of this family".to_string(),
        });
    }
    let s = w.symbols();
    let k = spec.d as usize + 1;
    let count = |a: Symbol, b: Symbol| if a == b { 1 } else { 2 };
    Ok(match spec.family {
        Family::Kautz => (k - 1, k - 1),
        Family::SubKautz => {
            let t = k - count(s[0], s[s.len() - 1]);
            (t, t)
        }
        Family::CyclicKautz => (
            k - count(s[1], s[s.len() - 1]),
            k - count(s[0], s[s.len() - 2]),
        ),
        Family::ModifiedCyclicKautz => {
            // substitute arcs end at words whose head is the smallest symbol
            // compatible with their second and last symbols; each such word
            // gains d - 1 extra in-arcs
            let base = k - count(s[0], s[s.len() - 2]);
            let receives = s[1] != s[s.len() - 1]
                && s[0] == smallest_avoiding(spec.d, s[1], s[s.len() - 1]);
            (k - 1, base + if receives { k - 2 } else { 0 })
        }
    })
}

/// The line digraph: one vertex per arc, with an arc wherever one arc's head
/// is another's tail.
///
/// When the input is labeled, each arc label is the tail word extended by the
/// head word's final symbol, so labels grow one symbol per application; this
/// requires every arc to be a shift.
pub fn line_digraph(g: &Digraph) -> Result<Digraph> {
    partial_line_digraph(g, |_, _| true)
}

/// The line digraph restricted to the arcs selected by `keep`.
///
/// Every vertex of `g` must remain the head of some kept arc. A kept arc
/// `uv` points at the kept arc `vw` when that arc survives, and otherwise at
/// the kept arc into `w` with the smallest tail, so out-degrees are
/// preserved exactly.
pub fn partial_line_digraph(
    g: &Digraph,
    keep: impl Fn(usize, usize) -> bool,
) -> Result<Digraph> {
    let kept: Vec<(usize, usize)> = g.arcs().filter(|&(u, v)| keep(u, v)).collect();
    let mut representative: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for (e, &(_, v)) in kept.iter().enumerate() {
        // kept is sorted by (tail, head), so the first arc into v wins
        representative[v].get_or_insert(e);
    }
    if let Some(v) = representative.iter().position(Option::is_none) {
        return Err(Error::InvalidDigraph(format!(
            "vertex {} is not the head of any kept arc",
            g.describe(v)
        )));
    }
    let mut arcs = Vec::new();
    for (e, &(_, v)) in kept.iter().enumerate() {
        for &w in g.out_neighbors(v) {
            let target = match kept.binary_search(&(v, w)) {
                Ok(t) => t,
                Err(_) => representative[w].unwrap(),
            };
            arcs.push((e, target));
        }
    }
    match g.labels() {
        None => Digraph::from_arcs(kept.len(), arcs),
        Some(labels) => {
            let merged: Vec<Word> = kept
                .iter()
                .map(|&(u, v)| merge_arc_label(&labels[u], &labels[v]))
                .collect::<Result<_>>()?;
            Digraph::with_labels(merged, arcs)
        }
    }
}

/// Label of the arc `tail -> head`: the tail word plus the head's last symbol.
fn merge_arc_label(tail: &Word, head: &Word) -> Result<Word> {
    let (t, h) = (tail.symbols(), head.symbols());
    if tail.len() != head.len() || t[1..] != h[..h.len() - 1] {
        return Err(Error::Unsupported(format!(
            "arc {tail} -> {head} is not a shift, so it has no merged label"
        )));
    }
    let mut symbols = t.to_vec();
    symbols.push(h[h.len() - 1]);
    Word::new(symbols, tail.d())
}

/// The subKautz digraph obtained by deleting, from the Kautz digraph, every
/// arc that re-appends the first symbol of its tail.
///
/// Comparing this against the direct construction checks that the two
/// descriptions of the family agree arc for arc.
pub fn subkautz_by_arc_removal(d: u8, len: usize) -> Result<Digraph> {
    let kautz = build(&FamilySpec::new(Family::Kautz, d, len)?)?;
    let labels = kautz.labels().expect("family digraphs are labeled").to_vec();
    let kept: Vec<(usize, usize)> = kautz
        .arcs()
        .filter(|&(u, v)| labels[v].symbols()[len - 1] != labels[u].symbols()[0])
        .collect();
    Digraph::with_labels(labels, kept)
}

/// Whether reading every label back to front maps the digraph onto its own
/// converse — i.e. `x -> y` is an arc exactly when `reverse(y) -> reverse(x)` is.
pub fn reversal_is_isomorphism(g: &Digraph) -> Result<bool> {
    let labels = g
        .labels()
        .ok_or_else(|| Error::Unsupported("reversal check needs vertex labels".to_string()))?;
    let mut image = Vec::with_capacity(labels.len());
    for w in labels {
        match g.index_of(&w.reversed()) {
            Some(i) => image.push(i),
            None => return Ok(false), // some reversed label is not a vertex
        }
    }
    // reversal is injective, so arc-by-arc containment already forces equality
    Ok(g.arcs().all(|(u, v)| g.has_arc(image[v], image[u])))
}
