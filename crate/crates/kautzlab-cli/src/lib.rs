/*!
Command-line surface of the toolkit: build instances and export them as
DOT, edge lists or JSON; answer distance queries straight from vertex
labels; and run the prediction-versus-measurement checks on single
instances or whole parameter grids.

Exit codes are stable so scripts can branch on them:

* `0` — success (including skipped or indeterminate checks),
* `1` — at least one verification check measured a contradiction,
* `2` — bad input (unknown family, malformed word, unknown check),
* `3` — an output file could not be written,
* `4` — a distance query between vertices that cannot reach each other.

The `KAUTZLAB_THREADS` environment variable caps the thread pool used for
grid verification; all output orderings are deterministic regardless.
*/

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kautzlab::digraph::Digraph;
use kautzlab::families::{build, order_formula};
use kautzlab::routing::{default_search_cap, distance_analytic, shortest_walk};
use kautzlab::verify::{full_grid, quick_grid, run_suite, Budget, Check};
use kautzlab::{Error, Family, FamilySpec, Word};

const EXIT_OK: i32 = 0;
const EXIT_MISMATCH: i32 = 1;
const EXIT_BAD_INPUT: i32 = 2;
const EXIT_IO: i32 = 3;
const EXIT_UNREACHABLE: i32 = 4;

/// Largest order the CLI will materialize as an explicit digraph.
const MAX_BUILD_ORDER: u128 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "kautzlab",
    version,
    about = "Build, query and verify Kautz-style digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an instance and write it as DOT, an edge list, or JSON
    Gen {
        /// Family code: K, sK, CK or MCK
        family: String,
        /// Alphabet parameter; symbols are 0..=d
        d: u8,
        /// Label length
        len: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Dot)]
        format: OutputFormat,
        /// Write to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance from one vertex to another, answered from the labels
    Dist {
        /// Family code: K, sK, CK or MCK
        family: String,
        d: u8,
        len: usize,
        /// Source vertex label
        from: String,
        /// Target vertex label
        to: String,
        /// Also print the vertices of one shortest walk
        #[arg(long)]
        show_path: bool,
    },
    /// Run prediction-versus-measurement checks on a single instance
    Analyze {
        /// Family code: K, sK, CK or MCK
        family: String,
        d: u8,
        len: usize,
        /// Comma-separated subset of checks (default: all of them)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Include per-check runtimes in the report
        #[arg(long)]
        timings: bool,
    },
    /// Sweep a grid of instances and report every check
    Verify {
        /// Instance grid preset, used when no explicit --spec is given
        #[arg(long, value_enum, default_value_t = GridPreset::Quick, conflicts_with = "spec")]
        grid: GridPreset,
        /// Explicit instance as FAMILY,D,L; repeat for several
        #[arg(long)]
        spec: Vec<String>,
        /// Comma-separated subset of checks (default: all of them)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Print the report as JSON instead of a table
        #[arg(long)]
        json: bool,
        /// Include per-check runtimes in JSON reports
        #[arg(long)]
        timings: bool,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Dot,
    Edges,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridPreset {
    Quick,
    Full,
}

/// A command that could not finish, sorted by which exit code it earns.
enum Failure {
    BadInput(String),
    Io(String),
    Unreachable(String),
}

fn bad_input(e: Error) -> Failure {
    Failure::BadInput(e.to_string())
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    configure_threads();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Failure::BadInput(msg)) => {
            eprintln!("error: {msg}");
            EXIT_BAD_INPUT
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            EXIT_IO
        }
        Err(Failure::Unreachable(msg)) => {
            eprintln!("unreachable: {msg}");
            EXIT_UNREACHABLE
        }
    }
}

fn configure_threads() {
    if let Ok(text) = std::env::var("KAUTZLAB_THREADS") {
        if let Ok(n) = text.parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Gen {
            family,
            d,
            len,
            format,
            out,
        } => cmd_gen(&family, d, len, format, out.as_deref()),
        Command::Dist {
            family,
            d,
            len,
            from,
            to,
            show_path,
        } => cmd_dist(&family, d, len, &from, &to, show_path),
        Command::Analyze {
            family,
            d,
            len,
            checks,
            timings,
        } => cmd_analyze(&family, d, len, &checks, timings),
        Command::Verify {
            grid,
            spec,
            checks,
            json,
            timings,
            out,
        } => cmd_verify(grid, &spec, &checks, json, timings, out.as_deref()),
    }
}

fn parse_spec(family: &str, d: u8, len: usize) -> Result<FamilySpec, Failure> {
    let family: Family = family.parse().map_err(bad_input)?;
    FamilySpec::new(family, d, len).map_err(bad_input)
}

/// Parses one `--spec` value of the form `FAMILY,D,L`.
fn parse_spec_triple(text: &str) -> Result<FamilySpec, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [family, d, len] = parts.as_slice() else {
        return Err(Failure::BadInput(format!(
            "spec {text:?} is not of the form FAMILY,D,L"
        )));
    };
    let d: u8 = d
        .parse()
        .map_err(|_| Failure::BadInput(format!("spec {text:?}: {d:?} is not a valid d")))?;
    let len: usize = len
        .parse()
        .map_err(|_| Failure::BadInput(format!("spec {text:?}: {len:?} is not a valid length")))?;
    parse_spec(family, d, len)
}

fn parse_checks(names: &[String]) -> Result<Vec<Check>, Failure> {
    if names.is_empty() {
        return Ok(Check::ALL.to_vec());
    }
    names
        .iter()
        .map(|name| name.parse::<Check>().map_err(bad_input))
        .collect()
}

fn build_guarded(spec: &FamilySpec) -> Result<Digraph, Failure> {
    match order_formula(spec) {
        Some(n) if n <= MAX_BUILD_ORDER => build(spec).map_err(bad_input),
        _ => Err(Failure::BadInput(format!(
            "{spec} has more than {MAX_BUILD_ORDER} vertices; \
             only verification checks scale that far"
        ))),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(
    family: &str,
    d: u8,
    len: usize,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<i32, Failure> {
    let spec = parse_spec(family, d, len)?;
    if spec.known_disconnected() {
        eprintln!("warning: {spec} is disconnected");
    }
    let g = build_guarded(&spec)?;
    let text = match format {
        OutputFormat::Dot => render_dot(&spec, &g),
        OutputFormat::Edges => render_edges(&g),
        OutputFormat::Json => format!("{:#}\n", render_json(&spec, &g)),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

/// DOT with one node line per vertex and one edge line per arc, both in
/// lexicographic label order so outputs diff cleanly.
fn render_dot(spec: &FamilySpec, g: &Digraph) -> String {
    let mut out = format!("digraph \"{spec}\" {{\n");
    for v in 0..g.vertex_count() {
        out.push_str(&format!("    \"{}\";\n", g.describe(v)));
    }
    for (u, v) in g.arcs() {
        out.push_str(&format!("    \"{}\" -> \"{}\";\n", g.describe(u), g.describe(v)));
    }
    out.push_str("}\n");
    out
}

fn render_edges(g: &Digraph) -> String {
    let mut out = String::new();
    for (u, v) in g.arcs() {
        out.push_str(&format!("{},{}\n", g.describe(u), g.describe(v)));
    }
    out
}

fn render_json(spec: &FamilySpec, g: &Digraph) -> Value {
    let vertices: Vec<String> = (0..g.vertex_count()).map(|v| g.describe(v)).collect();
    let arcs: Vec<Value> = g
        .arcs()
        .map(|(u, v)| json!([g.describe(u), g.describe(v)]))
        .collect();
    let degrees: Vec<(usize, usize)> = (0..g.vertex_count())
        .map(|v| (g.out_degree(v), g.in_degree(v)))
        .collect();
    let regularity = match degrees.first() {
        Some(&(out_deg, in_deg))
            if out_deg == in_deg && degrees.iter().all(|&d| d == (out_deg, in_deg)) =>
        {
            json!(out_deg)
        }
        _ => Value::Null,
    };
    json!({
        "spec": spec,
        "vertices": vertices,
        "arcs": arcs,
        "metadata": {
            "order": g.vertex_count(),
            "arc_count": g.arc_count(),
            "regularity": regularity,
        },
    })
}

fn cmd_dist(
    family: &str,
    d: u8,
    len: usize,
    from: &str,
    to: &str,
    show_path: bool,
) -> Result<i32, Failure> {
    let spec = parse_spec(family, d, len)?;
    let x = spec.parse_vertex(from).map_err(bad_input)?;
    let y = spec.parse_vertex(to).map_err(bad_input)?;
    if spec.family == Family::ModifiedCyclicKautz {
        return dist_by_breadth_first(&spec, &x, &y, show_path);
    }
    let answer = match distance_analytic(&spec, &x, &y) {
        Ok(answer) => answer,
        Err(Error::Unreachable { .. }) | Err(Error::NotStronglyConnected { .. }) => {
            return Err(Failure::Unreachable(format!("no walk from {x} to {y}")));
        }
        Err(e) => return Err(Failure::BadInput(e.to_string())),
    };
    println!("{}", answer.hops);
    println!("case: {}", answer.case);
    if show_path {
        let cap = default_search_cap(&spec).map_err(bad_input)?;
        let walk = shortest_walk(&spec, &x, &y, cap).map_err(bad_input)?;
        let stops: Vec<String> = walk.vertices().iter().map(Word::to_string).collect();
        println!("path: {}", stops.join(" "));
    }
    Ok(EXIT_OK)
}

/// Distance on the one family whose substitute arcs are not plain shifts,
/// measured on the built digraph instead of from the labels.
fn dist_by_breadth_first(
    spec: &FamilySpec,
    x: &Word,
    y: &Word,
    show_path: bool,
) -> Result<i32, Failure> {
    let g = build_guarded(spec)?;
    let u = g.index_of(x).expect("validated labels are present");
    let v = g.index_of(y).expect("validated labels are present");
    let field = g.bfs(u);
    let Some(dist) = field.get(v) else {
        return Err(Failure::Unreachable(format!("no walk from {x} to {y}")));
    };
    println!("{dist}");
    println!("case: breadth-first search");
    if show_path {
        let mut stops = vec![v];
        let mut current = v;
        for level in (0..dist).rev() {
            current = g
                .in_neighbors(current)
                .iter()
                .copied()
                .find(|&p| field.get(p) == Some(level))
                .expect("every reached vertex has a predecessor one level up");
            stops.push(current);
        }
        stops.reverse();
        let words: Vec<String> = stops.into_iter().map(|w| g.describe(w)).collect();
        println!("path: {}", words.join(" "));
    }
    Ok(EXIT_OK)
}

fn cmd_analyze(
    family: &str,
    d: u8,
    len: usize,
    checks: &[String],
    timings: bool,
) -> Result<i32, Failure> {
    let spec = parse_spec(family, d, len)?;
    let checks = parse_checks(checks)?;
    let report = run_suite(&[spec], &checks, &Budget::default());
    println!("{:#}", report.render_json(timings));
    Ok(if report.has_mismatch() { EXIT_MISMATCH } else { EXIT_OK })
}

fn cmd_verify(
    grid: GridPreset,
    specs: &[String],
    checks: &[String],
    json: bool,
    timings: bool,
    out: Option<&Path>,
) -> Result<i32, Failure> {
    let instances = if specs.is_empty() {
        match grid {
            GridPreset::Quick => quick_grid(),
            GridPreset::Full => full_grid(),
        }
    } else {
        specs
            .iter()
            .map(|text| parse_spec_triple(text))
            .collect::<Result<Vec<_>, _>>()?
    };
    let checks = parse_checks(checks)?;
    let report = run_suite(&instances, &checks, &Budget::default());
    if json {
        println!("{:#}", report.render_json(timings));
    } else {
        print!("{}", report.render_table());
    }
    if out.is_some() {
        emit(out, &format!("{:#}\n", report.render_json(timings)))?;
    }
    Ok(if report.has_mismatch() { EXIT_MISMATCH } else { EXIT_OK })
}
