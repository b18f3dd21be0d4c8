/*!
Construction and analysis of Kautz-style digraph families.

The crate covers four related families of labeled digraphs over the alphabet
`{0, …, d}`: the classical Kautz digraphs `K(d, l)`, the subKautz digraphs
`sK(d, l)` obtained by deleting the arcs that re-append the first symbol of
their tail, the cyclic Kautz digraphs `CK(d, l)` whose vertex labels
additionally have distinct first and last symbols, and the modified cyclic
Kautz digraphs `MCK(d, l)` which repair the out-degree of `CK(d, l)` by
redirecting the forbidden shifts.

Everything a query needs is carried by the vertex labels: distances and
shortest paths are answered by overlap analysis and by an exact path-word
solver, without traversing the digraph. The [`digraph`] module supplies
independent brute-force oracles (BFS metrics, walk-count semigirth, max-flow
connectivity, exhaustive cut enumeration), and [`verify`] cross-checks every
closed-form claim against those oracles, producing deterministic reports.
*/

mod error;

pub mod digraph;
pub mod families;
pub mod routing;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use words::{Family, FamilySpec, Symbol, Word};
