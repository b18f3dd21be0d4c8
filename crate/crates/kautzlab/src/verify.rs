/*!
Measured-versus-predicted verification.

Every structural prediction the crate makes — orders, degree rules, line
digraph identities, label-based distances, diameters, girths, semigirths,
connectivities, mean distances, layer counts, antipodality, and circuit
structure — is checked here against values measured on actually built
digraphs by independent means (breadth-first search, max-flow, exhaustive
cut scans, backtracking searches).

Each check yields a [`Verdict`]:

* `Match` — a prediction existed and the measurement confirmed it;
* `Mismatch` — a prediction existed and the measurement contradicted it;
* `Skipped` — nothing is predicted for these parameters, or a resource
  budget ruled the measurement out before it started;
* `Indeterminate` — a prediction existed but a guard stopped the
  measurement partway.

Checks never fabricate agreement: a prediction outside its regime is
skipped, not bent. Budgets are explicit in [`Budget`] and every skip or
guard names its reason in the record's detail text.

Instances too large to build still get the checks that need no digraph:
the order cross-derivation and the periodic-pattern girth.
*/

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::digraph::{Antipodality, Digraph, HamiltonianSearch, SuperStatus};
use crate::families::{
    build, complete_digraph_closed_walks, degree_formula, line_digraph, order_formula,
    partial_line_digraph, reversal_is_isomorphism, subkautz_by_arc_removal,
};
use crate::routing::formulas::{
    connectivity_claim, connectivity_conditions, degree_range, diameter_formula, eulerian_claim,
    girth_lower_bound, hamiltonian_claim, layer_formula, mean_distance_formula,
    moore_mean_distance, semigirth_floor, superconnectivity_examples,
};
use crate::routing::{distance_analytic, periodic, shortest_walk, DistanceCase};
use crate::{Error, Family, FamilySpec};

/// Resource limits for the expensive measurements.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Largest order for which the digraph is built at all.
    pub max_build_order: u128,
    /// Largest order for which all-pairs work (distance comparison,
    /// max-flow connectivities) runs.
    pub max_pairwise_order: usize,
    /// Node budget for the Hamiltonian cycle search.
    pub hamiltonian_expansions: u64,
    /// Subset budget for the exhaustive minimum-cut scans.
    pub superconn_subsets: u64,
    /// State budget for the periodic-pattern girth search.
    pub periodic_nodes: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_build_order: 100_000,
            max_pairwise_order: 300,
            hamiltonian_expansions: 10_000_000,
            superconn_subsets: 10_000_000,
            periodic_nodes: 1_000_000,
        }
    }
}

/// One verifiable aspect of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Order,
    Degrees,
    LineDigraph,
    Converse,
    SubkautzRemoval,
    Distances,
    Diameter,
    Girth,
    Semigirth,
    Connectivity,
    Superconnectivity,
    MeanDistance,
    Layers,
    Antipodality,
    EulerianHamiltonian,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::Order,
        Check::Degrees,
        Check::LineDigraph,
        Check::Converse,
        Check::SubkautzRemoval,
        Check::Distances,
        Check::Diameter,
        Check::Girth,
        Check::Semigirth,
        Check::Connectivity,
        Check::Superconnectivity,
        Check::MeanDistance,
        Check::Layers,
        Check::Antipodality,
        Check::EulerianHamiltonian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Order => "order",
            Check::Degrees => "degrees",
            Check::LineDigraph => "line-digraph",
            Check::Converse => "converse",
            Check::SubkautzRemoval => "subkautz-removal",
            Check::Distances => "distances",
            Check::Diameter => "diameter",
            Check::Girth => "girth",
            Check::Semigirth => "semigirth",
            Check::Connectivity => "connectivity",
            Check::Superconnectivity => "superconnectivity",
            Check::MeanDistance => "mean-distance",
            Check::Layers => "layers",
            Check::Antipodality => "antipodality",
            Check::EulerianHamiltonian => "eulerian-hamiltonian",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check, Error> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown check {s:?}")))
    }
}

/// Outcome class of one check on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    Skipped,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Skipped => "skipped",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

/// One check's result on one instance.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub check: Check,
    pub verdict: Verdict,
    pub detail: String,
    pub runtime_ms: u128,
}

/// All requested checks on one instance.
#[derive(Debug, Clone)]
pub struct InstanceReport {
    pub spec: FamilySpec,
    pub records: Vec<CheckRecord>,
}

impl InstanceReport {
    pub fn has_mismatch(&self) -> bool {
        self.records.iter().any(|r| r.verdict == Verdict::Mismatch)
    }
}

/// Reports for a whole batch of instances, in input order.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub instances: Vec<InstanceReport>,
}

impl AnalysisReport {
    pub fn has_mismatch(&self) -> bool {
        self.instances.iter().any(InstanceReport::has_mismatch)
    }

    /// Fixed-width text, one line per check.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for inst in &self.instances {
            for r in &inst.records {
                out.push_str(&format!(
                    "{:<12} {:<21} {:<13} {}\n",
                    inst.spec.to_string(),
                    r.check.name(),
                    r.verdict.as_str(),
                    r.detail
                ));
            }
        }
        out
    }

    /// JSON value; timings are left out unless asked for, so repeated runs
    /// produce byte-identical output.
    pub fn render_json(&self, include_timings: bool) -> Value {
        let instances: Vec<Value> = self
            .instances
            .iter()
            .map(|inst| {
                let checks: Vec<Value> = inst
                    .records
                    .iter()
                    .map(|r| {
                        let mut record = json!({
                            "check": r.check.name(),
                            "verdict": r.verdict.as_str(),
                            "detail": r.detail,
                        });
                        if include_timings {
                            record["runtime_ms"] = json!(r.runtime_ms);
                        }
                        record
                    })
                    .collect();
                json!({
                    "spec": inst.spec,
                    "name": inst.spec.to_string(),
                    "checks": checks,
                })
            })
            .collect();
        json!({ "instances": instances })
    }
}

/// The instances every test sweep covers: all four families at small
/// parameters, capped at 120 vertices.
pub fn quick_grid() -> Vec<FamilySpec> {
    grid(&[3, 4], 2..=4, 120)
}

/// A wider sweep for command-line verification runs, plus one instance far
/// beyond building range that still has label-only checks.
pub fn full_grid() -> Vec<FamilySpec> {
    let mut out = grid(&[2, 3, 4, 5, 6], 2..=6, 300);
    out.push(FamilySpec::new(Family::CyclicKautz, 3, 13).expect("valid parameters"));
    out
}

fn grid(ds: &[u8], lens: std::ops::RangeInclusive<usize>, max_order: u128) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for &d in ds {
            for len in lens.clone() {
                let spec = FamilySpec::new(family, d, len).expect("valid parameters");
                if order_formula(&spec).is_some_and(|n| n <= max_order) {
                    out.push(spec);
                }
            }
        }
    }
    out
}

/// Runs `checks` against one instance. The digraph is built once, if the
/// order fits the budget; checks that need it and cannot have it are
/// skipped with that reason.
pub fn run_instance(spec: &FamilySpec, checks: &[Check], budget: &Budget) -> InstanceReport {
    let graph = match order_formula(spec) {
        Some(n) if n <= budget.max_build_order => {
            Some(build(spec).expect("family construction is internally consistent"))
        }
        _ => None,
    };
    let records = checks
        .iter()
        .map(|&check| {
            let start = Instant::now();
            let (verdict, detail) = run_check(check, spec, graph.as_ref(), budget);
            CheckRecord {
                check,
                verdict,
                detail,
                runtime_ms: start.elapsed().as_millis(),
            }
        })
        .collect();
    InstanceReport {
        spec: *spec,
        records,
    }
}

/// Runs `checks` against every instance, in parallel, preserving order.
pub fn run_suite(specs: &[FamilySpec], checks: &[Check], budget: &Budget) -> AnalysisReport {
    let instances = specs
        .par_iter()
        .map(|spec| run_instance(spec, checks, budget))
        .collect();
    AnalysisReport { instances }
}

type Outcome = (Verdict, String);

fn matched(detail: impl Into<String>) -> Outcome {
    (Verdict::Match, detail.into())
}

fn mismatch(detail: impl Into<String>) -> Outcome {
    (Verdict::Mismatch, detail.into())
}

fn skipped(detail: impl Into<String>) -> Outcome {
    (Verdict::Skipped, detail.into())
}

fn indeterminate(detail: impl Into<String>) -> Outcome {
    (Verdict::Indeterminate, detail.into())
}

fn built(graph: Option<&Digraph>) -> Result<&Digraph, Outcome> {
    graph.ok_or_else(|| skipped("digraph not built: order exceeds the build budget"))
}

fn run_check(check: Check, spec: &FamilySpec, graph: Option<&Digraph>, budget: &Budget) -> Outcome {
    match check {
        Check::Order => check_order(spec, graph),
        Check::Degrees => check_degrees(spec, graph),
        Check::LineDigraph => check_line_digraph(spec, graph, budget),
        Check::Converse => check_converse(spec, graph),
        Check::SubkautzRemoval => check_subkautz_removal(spec, graph),
        Check::Distances => check_distances(spec, graph, budget),
        Check::Diameter => check_diameter(spec, graph),
        Check::Girth => check_girth(spec, graph, budget),
        Check::Semigirth => check_semigirth(spec, graph),
        Check::Connectivity => check_connectivity(spec, graph, budget),
        Check::Superconnectivity => check_superconnectivity(spec, graph, budget),
        Check::MeanDistance => check_mean_distance(spec, graph),
        Check::Layers => check_layers(spec, graph),
        Check::Antipodality => check_antipodality(spec, graph),
        Check::EulerianHamiltonian => check_circuits(spec, graph, budget),
    }
}

fn check_order(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    let Some(predicted) = order_formula(spec) else {
        return indeterminate("order exceeds the 128-bit range");
    };
    let mut detail = format!("formula gives {predicted}");
    if spec.family.cyclic_labels() {
        match complete_digraph_closed_walks(spec.d, spec.len) {
            Some(walks) if walks == predicted => {
                detail.push_str("; closed-walk count agrees");
            }
            Some(walks) => {
                return mismatch(format!(
                    "formula gives {predicted} but the closed-walk count is {walks}"
                ));
            }
            None => detail.push_str("; closed-walk count exceeds the 128-bit range"),
        }
    }
    match graph {
        Some(g) if g.vertex_count() as u128 == predicted => {
            detail.push_str(&format!("; built digraph has {} vertices", g.vertex_count()));
            matched(detail)
        }
        Some(g) => mismatch(format!(
            "formula gives {predicted} but the built digraph has {} vertices",
            g.vertex_count()
        )),
        None if spec.family.cyclic_labels() => {
            detail.push_str(" (digraph not built)");
            matched(detail)
        }
        None => skipped(format!("{detail}; nothing independent to compare without the digraph")),
    }
}

fn check_degrees(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let n = g.vertex_count();
    let mut out_range = (usize::MAX, 0);
    let mut in_range = (usize::MAX, 0);
    for v in 0..n {
        let label = g.label(v).expect("built digraphs are labeled");
        let predicted = degree_formula(spec, label).expect("labels are valid vertices");
        let actual = (g.out_degree(v), g.in_degree(v));
        if predicted != actual {
            return mismatch(format!(
                "vertex {} has degrees {actual:?} but the rule gives {predicted:?}",
                g.describe(v)
            ));
        }
        out_range = (out_range.0.min(actual.0), out_range.1.max(actual.0));
        in_range = (in_range.0.min(actual.1), in_range.1.max(actual.1));
    }
    let predicted_ranges = degree_range(spec);
    if predicted_ranges != (out_range, in_range) {
        return mismatch(format!(
            "degree ranges out {:?} in {:?} differ from the predicted {:?}",
            out_range, in_range, predicted_ranges
        ));
    }
    matched(format!(
        "degree rule holds at all {n} vertices; out {}..={}, in {}..={}",
        out_range.0, out_range.1, in_range.0, in_range.1
    ))
}

fn check_line_digraph(spec: &FamilySpec, graph: Option<&Digraph>, budget: &Budget) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let companion = |family: Family, len: usize| -> Result<Digraph, Outcome> {
        let companion_spec = FamilySpec::new(family, spec.d, len).expect("valid parameters");
        match order_formula(&companion_spec) {
            Some(n) if n <= budget.max_build_order => {
                Ok(build(&companion_spec).expect("family construction is internally consistent"))
            }
            _ => Err(skipped(format!(
                "companion {companion_spec} exceeds the build budget"
            ))),
        }
    };
    let (outcome_detail, equal) = match spec.family {
        Family::Kautz => {
            let bigger = match companion(Family::Kautz, spec.len + 1) {
                Ok(g) => g,
                Err(out) => return out,
            };
            let lifted = line_digraph(g).expect("shift arcs always merge");
            (
                format!("line digraph equals K({}, {}) labels included", spec.d, spec.len + 1),
                lifted == bigger,
            )
        }
        Family::SubKautz => {
            let cyclic = match companion(Family::CyclicKautz, spec.len + 1) {
                Ok(g) => g,
                Err(out) => return out,
            };
            let lifted = line_digraph(g).expect("shift arcs always merge");
            (
                format!("line digraph equals CK({}, {}) labels included", spec.d, spec.len + 1),
                lifted == cyclic,
            )
        }
        Family::CyclicKautz if spec.len == 2 => {
            let kautz = match companion(Family::Kautz, 2) {
                Ok(g) => g,
                Err(out) => return out,
            };
            (
                format!("coincides with K({}, 2): length-2 labels are never cyclic-blocked", spec.d),
                *g == kautz,
            )
        }
        Family::CyclicKautz => {
            let smaller = match companion(Family::SubKautz, spec.len - 1) {
                Ok(g) => g,
                Err(out) => return out,
            };
            (
                format!(
                    "equals the line digraph of sK({}, {}) labels included",
                    spec.d,
                    spec.len - 1
                ),
                line_digraph(&smaller).expect("shift arcs always merge") == *g,
            )
        }
        Family::ModifiedCyclicKautz if spec.len == 2 => {
            let kautz = match companion(Family::Kautz, 2) {
                Ok(g) => g,
                Err(out) => return out,
            };
            (
                format!("coincides with K({}, 2): no substitute arcs at length 2", spec.d),
                *g == kautz,
            )
        }
        Family::ModifiedCyclicKautz => {
            let smaller = match companion(Family::Kautz, spec.len - 1) {
                Ok(g) => g,
                Err(out) => return out,
            };
            let labels = smaller.labels().expect("built digraphs are labeled").to_vec();
            let len = spec.len - 1;
            let cyclic_word =
                move |u: usize, v: usize| labels[v].symbols()[len - 1] != labels[u].symbols()[0];
            let partial =
                partial_line_digraph(&smaller, cyclic_word).expect("every head keeps an arc");
            (
                format!(
                    "equals the partial line digraph of K({}, {}) on cyclically valid arc words",
                    spec.d,
                    spec.len - 1
                ),
                partial == *g,
            )
        }
    };
    if equal {
        matched(outcome_detail)
    } else {
        mismatch(format!("expected: {outcome_detail}; the digraphs differ"))
    }
}

fn check_converse(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let expected = spec.family != Family::ModifiedCyclicKautz || spec.len == 2;
    match reversal_is_isomorphism(g) {
        Ok(actual) if actual == expected => matched(if expected {
            "label reversal maps the digraph onto its converse".to_string()
        } else {
            "label reversal fails on the converse, as expected: substitute arcs break the symmetry"
                .to_string()
        }),
        Ok(actual) => mismatch(format!(
            "label reversal gives an isomorphism onto the converse: {actual}, expected {expected}"
        )),
        Err(e) => indeterminate(format!("reversal test unavailable: {e}")),
    }
}

fn check_subkautz_removal(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    if spec.family != Family::SubKautz {
        return skipped("only meaningful for the subKautz family");
    }
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let removed = subkautz_by_arc_removal(spec.d, spec.len).expect("valid parameters");
    if removed == *g {
        matched("deleting first-symbol re-append arcs from the Kautz digraph reproduces it exactly")
    } else {
        mismatch("arc removal from the Kautz digraph differs from direct construction")
    }
}

fn check_distances(spec: &FamilySpec, graph: Option<&Digraph>, budget: &Budget) -> Outcome {
    if spec.family == Family::ModifiedCyclicKautz {
        return skipped("substitute arcs have no label-only distance rule");
    }
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let n = g.vertex_count();
    if n > budget.max_pairwise_order {
        return skipped(format!(
            "{n} vertices exceed the all-pairs budget of {}",
            budget.max_pairwise_order
        ));
    }
    let replay_stride = if n <= 64 { 1 } else { (n * n / 2048).max(1) };
    let mut case_counts = [0u64; 4];
    let mut replayed = 0u64;
    let mut unreachable = 0u64;
    for u in 0..n {
        let field = g.bfs(u);
        let x = g.label(u).expect("built digraphs are labeled");
        for v in 0..n {
            let y = g.label(v).expect("built digraphs are labeled");
            let analytic = distance_analytic(spec, x, y);
            match (field.get(v), analytic) {
                (Some(t), Ok(result)) if result.hops == t as usize => {
                    case_counts[case_slot(result.case)] += 1;
                    if (u * n + v) % replay_stride == 0 {
                        let walk = match shortest_walk(spec, x, y, result.hops) {
                            Ok(walk) => walk,
                            Err(e) => {
                                return mismatch(format!(
                                    "no walk certificate for {x} -> {y} at {t}: {e}"
                                ));
                            }
                        };
                        if walk.hops() != t as usize || walk.validate().is_err() {
                            return mismatch(format!(
                                "walk certificate for {x} -> {y} fails replay at {t} hops"
                            ));
                        }
                        replayed += 1;
                    }
                }
                (None, Err(Error::Unreachable { .. })) => unreachable += 1,
                (direct, analytic) => {
                    return mismatch(format!(
                        "distance {x} -> {y}: breadth-first {direct:?} vs label-based {analytic:?}"
                    ));
                }
            }
        }
    }
    let pairs = (n as u64) * (n as u64);
    matched(format!(
        "all {pairs} ordered pairs agree with breadth-first search \
         (overlap {}, concatenated {}, bridged {}, by search {}, unreachable {unreachable}); \
         {replayed} walk certificates replayed",
        case_counts[0], case_counts[1], case_counts[2], case_counts[3]
    ))
}

fn case_slot(case: DistanceCase) -> usize {
    match case {
        DistanceCase::Overlap { .. } => 0,
        DistanceCase::Concatenated => 1,
        DistanceCase::Bridged { .. } => 2,
        DistanceCase::BySearch => 3,
    }
}

fn check_diameter(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    match diameter_formula(spec) {
        Some(predicted) => match g.diameter() {
            Ok(measured) if measured == predicted.value => {
                matched(format!("diameter {measured}; {}", predicted.basis))
            }
            Ok(measured) => mismatch(format!(
                "predicted {} ({}) but measured {measured}",
                predicted.value, predicted.basis
            )),
            Err(e) => mismatch(format!("predicted {} but {e}", predicted.value)),
        },
        None => match g.diameter() {
            Ok(measured) => skipped(format!(
                "no prediction for these parameters; measured {measured}"
            )),
            Err(e) => skipped(format!("no prediction for these parameters; {e}")),
        },
    }
}

fn check_girth(spec: &FamilySpec, graph: Option<&Digraph>, budget: &Budget) -> Outcome {
    if spec.family == Family::ModifiedCyclicKautz {
        let g = match built(graph) {
            Ok(g) => g,
            Err(out) => return out,
        };
        return match g.girth_bfs() {
            Some(k) => skipped(format!(
                "substitute arcs have no pattern model; breadth-first girth {k}"
            )),
            None => skipped("substitute arcs have no pattern model; no cycle found"),
        };
    }
    let cap = periodic::default_cycle_length_cap(spec);
    let found = match periodic::girth_periodic_search(spec, cap, budget.periodic_nodes) {
        Ok(found) => found,
        Err(Error::GuardExceeded(msg)) => return indeterminate(msg),
        Err(e) => return mismatch(format!("pattern search failed: {e}")),
    };
    let bound = girth_lower_bound(spec).expect("shift families always have a bound");
    match found {
        Some((girth, witness)) => {
            if girth < bound {
                return mismatch(format!(
                    "pattern search found a {girth}-cycle below the lower bound {bound}"
                ));
            }
            let bound_text = if girth == bound {
                format!("lower bound {bound} attained")
            } else {
                format!("above the lower bound {bound}: the alphabet excludes shorter patterns")
            };
            if let Some(g) = graph {
                match g.girth_bfs() {
                    Some(direct) if direct == girth => matched(format!(
                        "girth {girth} by pattern search and breadth-first search; \
                         witness {witness}; {bound_text}"
                    )),
                    direct => mismatch(format!(
                        "pattern search gives {girth} but breadth-first search gives {direct:?}"
                    )),
                }
            } else {
                matched(format!(
                    "girth {girth} by pattern search (digraph not built); \
                     witness {witness} replayed against the arc rules; {bound_text}"
                ))
            }
        }
        None => indeterminate(format!(
            "no cycle of length at most {cap} found; nothing to cross-check"
        )),
    }
}

fn check_semigirth(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let claim = semigirth_floor(spec);
    let result = match g.semigirth() {
        Ok(result) => result,
        Err(e) => {
            return match claim {
                Some((floor, _)) => mismatch(format!("claimed semigirth >= {floor} but {e}")),
                None => skipped(format!("no claim for these parameters; {e}")),
            };
        }
    };
    let Some((floor, exact)) = claim else {
        return skipped(format!(
            "no claim for these parameters; measured semigirth {}",
            result.gamma
        ));
    };
    let holds = if exact {
        result.gamma == floor
    } else {
        result.gamma >= floor
    };
    if !holds {
        let witness = result
            .witness
            .map(|(u, v, reason)| {
                format!(" (witness {} -> {}, {reason:?})", g.describe(u), g.describe(v))
            })
            .unwrap_or_default();
        return mismatch(format!(
            "semigirth {} violates the claim {} {floor}{witness}",
            result.gamma,
            if exact { "=" } else { ">=" }
        ));
    }
    let mut detail = format!(
        "semigirth {} ({} the claimed {floor})",
        result.gamma,
        if exact { "exactly" } else { "at least" }
    );
    if spec.family == Family::SubKautz {
        // the line digraph must push both semigirth and diameter up by one
        let lifted = line_digraph(g).expect("shift arcs always merge");
        let lifted_gamma = match lifted.semigirth() {
            Ok(r) => r.gamma,
            Err(e) => return mismatch(format!("line digraph lost connectivity: {e}")),
        };
        let diameter = g.diameter().expect("strongly connected here");
        let lifted_diameter = lifted.diameter().expect("line digraph stays connected");
        if lifted_gamma != result.gamma + 1 || lifted_diameter != diameter + 1 {
            return mismatch(format!(
                "line digraph semigirth {lifted_gamma} and diameter {lifted_diameter} \
                 should each sit one above {} and {diameter}",
                result.gamma
            ));
        }
        detail.push_str(&format!(
            "; line digraph raises semigirth to {lifted_gamma} and diameter to {lifted_diameter}"
        ));
    }
    matched(detail)
}

fn check_connectivity(spec: &FamilySpec, graph: Option<&Digraph>, budget: &Budget) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let claim = connectivity_claim(spec);
    if !g.is_strongly_connected() {
        return match (spec.known_disconnected(), claim) {
            (true, _) => skipped("disconnected by construction; nothing claimed"),
            (false, Some(_)) => mismatch("claimed connectivities but not strongly connected"),
            (false, None) => skipped("not strongly connected and nothing claimed"),
        };
    }
    if g.vertex_count() > budget.max_pairwise_order {
        return skipped(format!(
            "{} vertices exceed the all-pairs budget of {} for max-flow scans",
            g.vertex_count(),
            budget.max_pairwise_order
        ));
    }
    let report = g.connectivity_report().expect("strongly connected here");
    if !(report.kappa <= report.lambda && report.lambda <= report.min_degree) {
        return mismatch(format!(
            "connectivity order violated: kappa {} lambda {} delta {}",
            report.kappa, report.lambda, report.min_degree
        ));
    }
    let gamma = g.semigirth().expect("strongly connected here").gamma;
    let diameter = g.diameter().expect("strongly connected here");
    let conditions = connectivity_conditions(report.min_degree, diameter, gamma);
    if conditions.max_arc && report.lambda != report.min_degree {
        return mismatch(format!(
            "diameter {diameter} <= 2 * semigirth {gamma} forces lambda = delta, measured {} < {}",
            report.lambda, report.min_degree
        ));
    }
    if conditions.max_vertex && report.kappa != report.min_degree {
        return mismatch(format!(
            "diameter {diameter} < 2 * semigirth {gamma} forces kappa = delta, measured {} < {}",
            report.kappa, report.min_degree
        ));
    }
    if let Some((kappa, lambda)) = claim {
        if (report.kappa, report.lambda) != (kappa, lambda) {
            return mismatch(format!(
                "claimed kappa {kappa} lambda {lambda}, measured kappa {} lambda {}",
                report.kappa, report.lambda
            ));
        }
    }
    let fired = [
        conditions.max_arc.then_some("lambda=delta"),
        conditions.max_vertex.then_some("kappa=delta"),
    ]
    .into_iter()
    .flatten()
    .collect::<Vec<_>>();
    matched(format!(
        "kappa {} lambda {} delta {}{}{}",
        report.kappa,
        report.lambda,
        report.min_degree,
        if claim.is_some() { ", matching the claim" } else { "" },
        if fired.is_empty() {
            String::new()
        } else {
            format!("; conditions fired: {}", fired.join(", "))
        }
    ))
}

fn check_superconnectivity(spec: &FamilySpec, graph: Option<&Digraph>, budget: &Budget) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    if !g.is_strongly_connected() {
        return skipped(if spec.known_disconnected() {
            "disconnected by construction; nothing claimed"
        } else {
            "not strongly connected; nothing claimed"
        });
    }
    let arc_status = g.is_super_lambda(budget.superconn_subsets);
    let vertex_status = g.is_super_kappa(budget.superconn_subsets);
    // the sufficient conditions need semigirth and diameter; only pay for
    // them when at least one scan actually ran
    let conditions = if arc_status.is_ok() || vertex_status.is_ok() {
        let gamma = g.semigirth().expect("strongly connected here").gamma;
        let diameter = g.diameter().expect("strongly connected here");
        Some(connectivity_conditions(g.min_degree(), diameter, gamma))
    } else {
        None
    };
    let (example_arc, example_vertex) = superconnectivity_examples(spec);
    let mut parts = Vec::new();
    let mut any_guard = false;
    let mut any_expectation = false;
    for (kind, status, condition, example) in [
        (
            "arc",
            arc_status,
            conditions.map(|c| c.super_arc).unwrap_or(false),
            example_arc,
        ),
        (
            "vertex",
            vertex_status,
            conditions.map(|c| c.super_vertex).unwrap_or(false),
            example_vertex,
        ),
    ] {
        let expectation = if condition { Some(true) } else { example };
        match status {
            Err(Error::GuardExceeded(msg)) => {
                any_guard = true;
                parts.push(format!("{kind} scan guarded: {msg}"));
            }
            Err(e) => return mismatch(format!("{kind} scan failed: {e}")),
            Ok(status) => {
                let is_super = matches!(status, SuperStatus::Super);
                let description = match status {
                    SuperStatus::Super => format!("every minimum {kind} cut isolates a vertex"),
                    SuperStatus::NotSuper(_) => {
                        format!("a minimum {kind} cut isolates no vertex")
                    }
                    SuperStatus::NotMaximal {
                        connectivity,
                        min_degree,
                    } => format!(
                        "{kind} connectivity {connectivity} sits below the degree {min_degree}"
                    ),
                };
                match expectation {
                    Some(expected) => {
                        any_expectation = true;
                        if expected != is_super {
                            return mismatch(format!(
                                "expected {kind} superconnectivity {expected}; {description}"
                            ));
                        }
                        parts.push(format!("{description}, as expected"));
                    }
                    None => parts.push(description),
                }
            }
        }
    }
    let detail = parts.join("; ");
    if any_guard {
        indeterminate(detail)
    } else if any_expectation {
        matched(detail)
    } else {
        skipped(format!("nothing claimed for these parameters; {detail}"))
    }
}

fn check_mean_distance(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    match mean_distance_formula(spec) {
        Some(expected) => match g.mean_distance() {
            Ok(measured) if measured == expected => {
                let context = g
                    .diameter()
                    .ok()
                    .and_then(|dm| {
                        let degree = degree_range(spec).0 .1;
                        moore_mean_distance(degree, dm)
                            .map(|ideal| format!("; ideal degree-{degree} mean at diameter {dm} is {ideal}"))
                    })
                    .unwrap_or_default();
                matched(format!("mean distance exactly {measured}{context}"))
            }
            Ok(measured) => mismatch(format!("predicted {expected} but measured {measured}")),
            Err(e) => mismatch(format!("predicted {expected} but {e}")),
        },
        None => match g.mean_distance() {
            Ok(measured) => skipped(format!("no closed form; measured {measured}")),
            Err(e) => skipped(format!("no closed form; {e}")),
        },
    }
}

fn check_layers(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    match layer_formula(spec) {
        Some(expected) => {
            for v in 0..g.vertex_count() {
                let measured: Vec<u128> = match g.layer_profile(v) {
                    Ok(layers) => layers.into_iter().map(|c| c as u128).collect(),
                    Err(e) => return mismatch(format!("layer counts claimed but {e}")),
                };
                if measured != expected {
                    return mismatch(format!(
                        "source {} sees layers {measured:?} instead of {expected:?}",
                        g.describe(v)
                    ));
                }
            }
            matched(format!(
                "every one of the {} sources sees layers {expected:?}",
                g.vertex_count()
            ))
        }
        None => match g.layer_profile(0) {
            Ok(layers) => skipped(format!(
                "no prediction; profile from {} is {layers:?}",
                g.describe(0)
            )),
            Err(e) => skipped(format!("no prediction; {e}")),
        },
    }
}

fn check_antipodality(spec: &FamilySpec, graph: Option<&Digraph>) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let claimed = spec.family == Family::SubKautz && spec.len == 2 && spec.d >= 3;
    if !claimed {
        return match g.antipodality() {
            Ok(class) => skipped(format!("no claim for these parameters; measured {class:?}")),
            Err(e) => skipped(format!("no claim for these parameters; {e}")),
        };
    }
    match g.antipodality() {
        Ok(Antipodality::Antipodal) => {
            let diameter = g.diameter().expect("strongly connected here") as u32;
            for v in 0..g.vertex_count() {
                let label = g.label(v).expect("built digraphs are labeled");
                let partner = g
                    .index_of(&label.reversed())
                    .expect("reversed labels stay valid here");
                let field = g.bfs(v);
                let far: Vec<usize> = (0..g.vertex_count())
                    .filter(|&u| field.get(u) == Some(diameter))
                    .collect();
                if far != [partner] {
                    return mismatch(format!(
                        "antipode of {} is not its reversal",
                        g.describe(v)
                    ));
                }
            }
            matched(format!(
                "antipodal: each vertex's unique farthest vertex is its reversed label, \
                 at distance {diameter}"
            ))
        }
        Ok(class) => mismatch(format!("expected an antipodal structure, measured {class:?}")),
        Err(e) => mismatch(format!("expected an antipodal structure but {e}")),
    }
}

fn check_circuits(spec: &FamilySpec, graph: Option<&Digraph>, budget: &Budget) -> Outcome {
    let g = match built(graph) {
        Ok(g) => g,
        Err(out) => return out,
    };
    let n = g.vertex_count();
    let predicted_balance = (0..n).all(|v| {
        let label = g.label(v).expect("built digraphs are labeled");
        let (out_d, in_d) = degree_formula(spec, label).expect("labels are valid vertices");
        out_d == in_d
    });
    let measured_balance = (0..n).all(|v| g.out_degree(v) == g.in_degree(v));
    if predicted_balance != measured_balance {
        return mismatch(format!(
            "degree rules predict balance {predicted_balance} but measured {measured_balance}"
        ));
    }
    let eulerian = g.is_eulerian();
    let mut parts = vec![match eulerian_claim(spec) {
        Some(expected) if expected != eulerian => {
            return mismatch(format!(
                "euler circuit claimed {expected} but measured {eulerian}"
            ));
        }
        Some(_) => format!("euler circuit: {eulerian}, as claimed"),
        None => format!("euler circuit: {eulerian} (no claim)"),
    }];
    let mut verdict = Verdict::Match;
    match (hamiltonian_claim(spec), g.hamiltonian_cycle(budget.hamiltonian_expansions)) {
        (Some(true), HamiltonianSearch::Found(cycle)) => parts.push(format!(
            "hamiltonian cycle through all {} vertices, as claimed",
            cycle.len()
        )),
        (Some(false), HamiltonianSearch::Exhausted) => {
            parts.push("no hamiltonian cycle, as claimed".to_string());
        }
        (Some(false), HamiltonianSearch::Found(_)) => {
            return mismatch("claimed no hamiltonian cycle but the search found one");
        }
        (Some(true), HamiltonianSearch::Exhausted) => {
            return mismatch("claimed a hamiltonian cycle but the exhaustive search found none");
        }
        (Some(_), HamiltonianSearch::BudgetExceeded { expanded }) => {
            verdict = Verdict::Indeterminate;
            parts.push(format!(
                "hamiltonian claim unresolved after {expanded} expansions"
            ));
        }
        (None, result) => parts.push(match result {
            HamiltonianSearch::Found(cycle) =>

                format!("hamiltonian cycle found through all {} vertices (no claim)", cycle.len()),
            HamiltonianSearch::Exhausted => "no hamiltonian cycle (no claim)".to_string(),
            HamiltonianSearch::BudgetExceeded { expanded } => {
                format!("hamiltonian search open after {expanded} expansions (no claim)")
            }
        }),
    }
    (verdict, parts.join("; "))
}
