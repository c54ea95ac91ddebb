use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use toricrank::complex::{self, DimensionSet};
use toricrank::ideal::{self, GDegree, GeneratorOptions};
use toricrank::invariants::{self, AnalysisOptions};
use toricrank::{linalg, Graph};

#[derive(Parser)]
#[command(name = "toricrank", version, about = "Invariants of toric ideals of graphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Full invariant report.
    Analyze(Common),
    /// Circuits of the incidence matrix as binomials.
    Circuits(Common),
    /// Even cycles, marking chordless ones.
    Cycles(Common),
    /// The complex on minimal circuit supports and its matching numbers.
    Complex(ComplexArgs),
    /// Members of one fiber and its connectivity under the generators.
    Fibers(FiberArgs),
    /// A minimal binomial generating set.
    Generators(Common),
    /// Internal consistency checks; compares against closed forms for --kn.
    Selftest(SelftestArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list file, one `u v` pair per line (1-based).
    file: Option<PathBuf>,
    /// Complete graph on N vertices.
    #[arg(long, value_name = "N")]
    kn: Option<usize>,
    /// Complete bipartite graph K_{A,B}.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    kmn: Option<Vec<usize>>,
    /// Cycle of length L.
    #[arg(long, value_name = "L")]
    cycle: Option<usize>,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    source: Source,
    /// Largest monomial degree examined when building generators.
    #[arg(long, value_name = "D")]
    max_degree: Option<usize>,
    /// Bound on enumerated cycle length.
    #[arg(long, value_name = "L")]
    max_cycle_len: Option<usize>,
    /// Write machine-readable output to PATH.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ComplexArgs {
    #[command(flatten)]
    common: Common,
    /// Dimension set for the matching number, `0,1` or `omega`; repeatable.
    #[arg(long = "j", value_name = "J")]
    j: Vec<String>,
}

#[derive(Args)]
struct FiberArgs {
    #[command(flatten)]
    common: Common,
    /// Comma-separated vertex degree vector of length n.
    #[arg(long, value_name = "b")]
    degree: String,
}

#[derive(Args)]
struct SelftestArgs {
    #[command(flatten)]
    common: Common,
    /// Seed for the sampled divisibility check.
    #[arg(long, value_name = "S", default_value_t = 1)]
    seed: u64,
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(src: &Source) -> CliResult<Graph> {
    let g = if let Some(path) = &src.file {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Graph::parse(&text)
    } else if let Some(n) = src.kn {
        Graph::complete(n)
    } else if let Some(ab) = &src.kmn {
        Graph::complete_bipartite(ab[0], ab[1])
    } else if let Some(len) = src.cycle {
        Graph::cycle(len)
    } else {
        unreachable!("clap enforces one source")
    };
    g.map_err(|e| e.to_string())
}

fn generator_options(c: &Common) -> GeneratorOptions {
    GeneratorOptions {
        degree_bound: c.max_degree,
        max_cycle_len: c.max_cycle_len,
        ..GeneratorOptions::default()
    }
}

fn emit(c: &Common, text: &str, value: &Value) -> CliResult<()> {
    print!("{text}");
    if let Some(path) = &c.json {
        let body = serde_json::to_string_pretty(value).map_err(|e| e.to_string())? + "\n";
        std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn run(verb: Verb) -> CliResult<bool> {
    match verb {
        Verb::Analyze(c) => analyze(&c),
        Verb::Circuits(c) => circuits(&c),
        Verb::Cycles(c) => cycles(&c),
        Verb::Complex(a) => complex_cmd(&a),
        Verb::Fibers(a) => fibers(&a),
        Verb::Generators(c) => generators(&c),
        Verb::Selftest(a) => selftest(&a),
    }
}

fn analyze(c: &Common) -> CliResult<bool> {
    let g = load(&c.source)?;
    let opts = AnalysisOptions { generators: generator_options(c), ..AnalysisOptions::default() };
    let r = invariants::analyze(&g, &opts).map_err(|e| e.to_string())?.report;
    let mut out = String::new();
    let _ = writeln!(out, "graph: n={} m={}", r.n, r.m);
    let _ = writeln!(out, "bipartite: {}", r.bipartite);
    let _ = writeln!(out, "quadratically generated: {}", r.quadratic_generated);
    let _ = writeln!(out, "ht = {}", r.height);
    let rel = if r.mu_bound_relative { format!(" (up to degree {})", r.degree_bound) } else { String::new() };
    let _ = writeln!(out, "mu = {}{rel}", r.mu);
    let _ = writeln!(out, "delta_01 = {}", r.delta01);
    let _ = writeln!(out, "delta_omega = {}", r.delta_omega);
    let _ = writeln!(out, "bar = {}", r.bar);
    let _ = writeln!(out, "araG = {}", r.ara_g);
    let _ = writeln!(out, "ara in [{}, {}]", r.ara_bracket[0], r.ara_bracket[1]);
    let _ = writeln!(out, "complete intersection: {}", r.complete_intersection);
    let cc = r.component_census;
    let _ = writeln!(out, "components: {} edge, {} 2-simplex, {} other", cc.edge, cc.two_simplex, cc.other);
    let _ = writeln!(out, "indispensable: {}", r.indispensable_count);
    emit(c, &out, &serde_json::to_value(&r).map_err(|e| e.to_string())?)?;
    Ok(true)
}

fn circuits(c: &Common) -> CliResult<bool> {
    let g = load(&c.source)?;
    let cs = linalg::circuits(&g.incidence_columns(), linalg::DEFAULT_CIRCUIT_EDGE_CAP).map_err(|e| e.to_string())?;
    let mut out = format!("{} circuits\n", cs.len());
    let mut items = Vec::new();
    for circ in &cs {
        let b = ideal::Binomial::from_circuit(circ).format(&g);
        let _ = writeln!(out, "{b}");
        items.push(json!({
            "entries": circ.entries(),
            "positive": one_based(&circ.positive_support()),
            "negative": one_based(&circ.negative_support()),
            "binomial": b,
        }));
    }
    emit(c, &out, &json!({ "schema": 1, "circuits": items }))?;
    Ok(true)
}

fn cycles(c: &Common) -> CliResult<bool> {
    let g = load(&c.source)?;
    let cs = g.even_cycles(c.max_cycle_len).map_err(|e| e.to_string())?;
    let mut out = format!("{} even cycles\n", cs.len());
    let mut items = Vec::new();
    for cyc in &cs {
        let chord = g.cycle_has_chord(cyc).map_err(|e| e.to_string())?;
        let verts: Vec<String> = cyc.vertices.iter().map(|v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "{}{}", verts.join("-"), if chord { "" } else { "  chordless" });
        items.push(json!({
            "vertices": one_based(&cyc.vertices),
            "edges": one_based(&cyc.edges),
            "chordless": !chord,
        }));
    }
    emit(c, &out, &json!({ "schema": 1, "cycles": items }))?;
    Ok(true)
}

fn complex_cmd(a: &ComplexArgs) -> CliResult<bool> {
    let g = load(&a.common.source)?;
    let js: Vec<DimensionSet> = if a.j.is_empty() {
        vec![DimensionSet::dims(&[0, 1]), DimensionSet::Omega]
    } else {
        a.j.iter().map(|s| s.parse()).collect::<Result<_, _>>().map_err(|e: toricrank::Error| e.to_string())?
    };
    let d = complex::build_delta(&g, complex::DEFAULT_MAX_FACE_CARD).map_err(|e| e.to_string())?;
    let dump = complex::dump(&d, &js).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let _ = writeln!(out, "{} vertices, {} faces, dim {}", d.vertices.len(), d.faces.len(), d.dim().map_or(-1, |x| x as i64));
    for (i, s) in d.vertices.iter().enumerate() {
        let labels: Vec<String> = s.0.iter().map(|&e| g.edge_label(e)).collect();
        let _ = writeln!(out, "  E{} = {{{}}}", i + 1, labels.join(", "));
    }
    for (k, comp) in dump.components.iter().enumerate() {
        let _ = writeln!(out, "component {}: {} {}", k + 1, comp.shape, e_list(&comp.vertices));
    }
    for entry in &dump.delta {
        let w: Vec<String> = entry.witness.iter().map(|f| e_list(f)).collect();
        let _ = writeln!(out, "delta_{} = {}  witness {}", entry.j, entry.value, w.join(" "));
    }
    emit(&a.common, &out, &serde_json::to_value(&dump).map_err(|e| e.to_string())?)?;
    Ok(true)
}

fn fibers(a: &FiberArgs) -> CliResult<bool> {
    let g = load(&a.common.source)?;
    let b = GDegree::parse(&a.degree, g.n()).map_err(|e| e.to_string())?;
    let set = ideal::minimal_generating_set(&g, &generator_options(&a.common)).map_err(|e| e.to_string())?;
    let fiber = ideal::enumerate_fiber(&g, &b).map_err(|e| e.to_string())?;
    let fiber = ideal::fiber_graph(fiber, &set.binomials());
    let mut out = format!("{} monomials\n", fiber.members.len());
    for mon in &fiber.members {
        let _ = writeln!(out, "{}", mon.format(&g));
    }
    let connected = fiber.connected.unwrap_or(true);
    let _ = writeln!(out, "connected under generators: {connected}");
    let members: Vec<String> = fiber.members.iter().map(|x| x.format(&g)).collect();
    let value = json!({
        "schema": 1,
        "degree": fiber.degree.0,
        "members": members,
        "moves": fiber.adjacency,
        "connected": connected,
    });
    emit(&a.common, &out, &value)?;
    Ok(true)
}

fn generators(c: &Common) -> CliResult<bool> {
    let g = load(&c.source)?;
    let set = ideal::minimal_generating_set(&g, &generator_options(c)).map_err(|e| e.to_string())?;
    let mut out = format!("mu = {}", set.mu());
    if set.bound_relative {
        let _ = write!(out, " (up to degree {})", set.degree_bound);
    }
    out.push('\n');
    let mut items = Vec::new();
    for gen in &set.generators {
        let b = gen.binomial.format(&g);
        let _ = writeln!(out, "{b}{}", if gen.indispensable { "  indispensable" } else { "" });
        items.push(json!({ "binomial": b, "indispensable": gen.indispensable }));
    }
    let value = json!({
        "schema": 1,
        "mu": set.mu(),
        "degree_bound": set.degree_bound,
        "bound_relative": set.bound_relative,
        "generators": items,
    });
    emit(c, &out, &value)?;
    Ok(true)
}

fn selftest(a: &SelftestArgs) -> CliResult<bool> {
    let c = &a.common;
    let g = load(&c.source)?;
    let opts = AnalysisOptions { generators: generator_options(c), ..AnalysisOptions::default() };
    let an = invariants::analyze(&g, &opts).map_err(|e| e.to_string())?;
    let r = &an.report;
    let mut checks: Vec<(String, bool)> = Vec::new();
    if let Some(n) = c.source.kn {
        let e = invariants::kn_expected(n).map_err(|e| e.to_string())?;
        checks.push((format!("mu = {}", e.mu), r.mu == e.mu));
        checks.push((format!("ht = {}", e.height), r.height == e.height));
        checks.push((format!("vertices = {}", e.vertices), an.delta.vertices.len() == e.vertices));
        checks.push((format!("components = {}", e.components), r.component_census.total() == e.components));
        checks.push(("all components are 2-simplices".into(), r.component_census.two_simplex == e.components));
        checks.push((format!("indispensable = {}", e.indispensable), r.indispensable_count == e.indispensable));
        checks.push((format!("bar = araG = {}", e.bar), r.bar.exact() == Some(e.bar) && r.ara_g.exact() == Some(e.ara_g)));
    }
    checks.push(("extremal".into(), invariants::extremality_check(&g).map_err(|e| e.to_string())?));
    checks.push(("fibers connected".into(), ideal::verify_generation(&g, &an.generating_set)));
    checks.push(("ht <= delta_omega-bounded araG <= bar <= mu".into(), r.height <= r.ara_g.hi() && r.ara_g.hi() <= r.bar.hi() && r.bar.hi() <= r.mu));
    if r.bipartite || r.quadratic_generated {
        checks.push(("delta_01 = mu".into(), r.delta01 == r.mu));
    }
    if r.quadratic_generated {
        let want = r.indispensable_count + 2 * r.component_census.two_simplex;
        checks.push((format!("mu = g + 2t = {want}"), r.mu == want));
    }
    if r.bipartite {
        let fours: Vec<_> = an.hints.chordless_even_cycles.iter().filter(|cy| cy.len() == 4).take(3).collect();
        let mut ok = true;
        for cy in fours {
            ok &= ideal::sample_multiple_divisibility(&g, cy, 20, a.seed).map_err(|e| e.to_string())?;
        }
        checks.push(("4-cycle multiples contain both cycle monomials".into(), ok));
    }
    let mut out = String::new();
    let mut all = true;
    for (name, ok) in &checks {
        all &= ok;
        let _ = writeln!(out, "{} {name}", if *ok { "PASS" } else { "FAIL" });
    }
    let _ = writeln!(out, "{}", if all { "PASS" } else { "FAIL" });
    let value = json!({
        "schema": 1,
        "pass": all,
        "checks": checks.iter().map(|(n, ok)| json!({ "check": n, "pass": ok })).collect::<Vec<_>>(),
        "report": r,
    });
    emit(c, &out, &value)?;
    Ok(all)
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

fn e_list(vs: &[usize]) -> String {
    let names: Vec<String> = vs.iter().map(|v| format!("E{}", v + 1)).collect();
    format!("{{{}}}", names.join(","))
}
