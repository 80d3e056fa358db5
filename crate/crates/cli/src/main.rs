//! `uig` — upper ideal relation graphs of finite commutative rings.
//!
//! Subcommands: `rings list` (the local-ring catalog), `graph` (emit
//! Γ_U(R) as DOT or JSON), `classify` (all graph-class recognizers),
//! `surface` (genus/crosscap bounds, exact on request), `certificate`
//! (stored embedding certificates), and `verify` (re-check the
//! classification theorems over a bounded ring universe).
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;
use uig::catalog::{
    catalog_local_rings, enumerate_factor_multisets, parse_ring_expr, RingUniverseFilter,
    MAX_CATALOG_ORDER,
};
use uig::classify::Witness;
use uig::graph::{upper_ideal_graph, SimpleGraph};
use uig::ring::FiniteRing;
use uig::surface::{
    certificate_names, planar_embedding, search_embedding, surface_invariants, trace_faces,
    verify_certificate, Decision, SchemeError, SearchBudget, Surface, SurfaceOptions,
};
use uig::verify::{
    classify_graph, verify_all, verify_theorem, TheoremId, VerificationReport, ALL_THEOREMS,
};

#[derive(Parser)]
#[command(name = "uig", version, about = "Upper ideal relation graphs of finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect the catalog of local rings of order < 10.
    Rings {
        #[command(subcommand)]
        cmd: RingsCmd,
    },
    /// Construct Γ_U(R) and print it.
    Graph {
        /// Ring expression: catalog ids joined by `*`, e.g. Z2*F4.
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Run every graph-class recognizer on Γ_U(R).
    Classify {
        #[arg(long)]
        ring: String,
        /// Emit the full report as JSON, witnesses included.
        #[arg(long)]
        json: bool,
    },
    /// Genus and crosscap of Γ_U(R): bounds by default, exact with --exact.
    Surface {
        #[arg(long)]
        ring: String,
        /// Run the embedding searches to exact values.
        #[arg(long)]
        exact: bool,
        /// Node budget for each exhaustive embedding search.
        #[arg(long)]
        budget: Option<u64>,
        /// Seed for the stochastic embedding search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write found embedding certificates (.emb) to the current directory.
        #[arg(long, requires = "exact")]
        save: bool,
        #[arg(long)]
        json: bool,
    },
    /// Stored embedding certificates.
    Certificate {
        #[command(subcommand)]
        cmd: CertCmd,
    },
    /// Re-verify classification theorems over a bounded ring universe.
    Verify {
        /// Theorem id (split, threshold, cograph, cactus, unicyclic,
        /// ringgraph, outerplanar, planar, genus1, genus2, crosscap1,
        /// crosscap2) or `all`.
        #[arg(long)]
        theorem: String,
        /// Largest local factor order admitted into the universe.
        #[arg(long, default_value_t = MAX_CATALOG_ORDER)]
        max_order: u16,
        /// Largest number of local factors per ring.
        #[arg(long, default_value_t = 4)]
        max_factors: u8,
        /// Worker threads for the classification pass.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RingsCmd {
    /// List the catalog, smallest order first.
    List {
        #[arg(long, default_value_t = MAX_CATALOG_ORDER)]
        max_order: u16,
    },
}

#[derive(Subcommand)]
enum CertCmd {
    /// List the stored certificates.
    List,
    /// Re-trace one certificate and check its surface.
    Verify { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

/// A subcommand's outcome: an exit code, or a usage error (exit 2).
type CmdResult = Result<u8, String>;

fn main() -> ExitCode {
    match Cli::parse().cmd.run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_ring(expr: &str) -> Result<FiniteRing, String> {
    parse_ring_expr(expr).map_err(|e| {
        format!("{e}\nring expressions are catalog ids joined by `*`, e.g. Z2*F4 or Z3*Z2[x]/(x^2)")
    })
}

fn surface_name(s: Surface) -> String {
    match s {
        Surface::Orientable(g) => format!("S{g}"),
        Surface::NonOrientable(k) => format!("N{k}"),
    }
}

/// Ring expression reduced to a filename stem.
fn slug(expr: &str) -> String {
    let mut out = String::new();
    for c in expr.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c);
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

fn labels(g: &SimpleGraph, vs: &[usize]) -> String {
    vs.iter()
        .map(|&v| g.label(v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn witness_text(w: &Witness, g: &SimpleGraph) -> String {
    match w {
        Witness::InducedSubgraph { pattern, vertices } => {
            format!("induced {pattern} on {}", labels(g, vertices))
        }
        Witness::Clique { n, vertices } => format!("K{n} on {}", labels(g, vertices)),
        Witness::Subdivision { of, branch, edges } => format!(
            "{of} subdivision, branch vertices {}, {} edges",
            labels(g, branch),
            edges.len()
        ),
        Witness::CountMismatch { what, left, right } => format!("{what}: {left} vs {right}"),
        Witness::Block { vertices, edges } => format!(
            "block on {} with {edges} edges is neither an edge nor a cycle",
            labels(g, vertices)
        ),
        Witness::CyclePair { first, second } => format!(
            "chordless cycles {} and {} share two edges",
            labels(g, first),
            labels(g, second)
        ),
        Witness::Disconnected { a, b } => format!(
            "{} and {} lie in different components",
            g.label(*a),
            g.label(*b)
        ),
    }
}

impl Cmd {
    fn run(self) -> CmdResult {
        match self {
            Cmd::Rings { cmd } => rings(cmd),
            Cmd::Graph { ring, format } => graph(&ring, format),
            Cmd::Classify { ring, json } => classify(&ring, json),
            Cmd::Surface {
                ring,
                exact,
                budget,
                seed,
                save,
                json,
            } => surface(&ring, exact, budget, seed, save, json),
            Cmd::Certificate { cmd } => certificate(cmd),
            Cmd::Verify {
                theorem,
                max_order,
                max_factors,
                jobs,
                json,
            } => verify(&theorem, max_order, max_factors, jobs, json),
        }
    }
}

fn rings(cmd: RingsCmd) -> CmdResult {
    let RingsCmd::List { max_order } = cmd;
    let specs = catalog_local_rings(max_order).map_err(|e| e.to_string())?;
    for s in specs {
        let kind = if s.is_field() {
            "field".to_string()
        } else {
            format!(
                "|m| = {}, {}",
                s.maximal_ideal().len(),
                if s.maximal_ideal_is_principal() {
                    "m principal"
                } else {
                    "m not principal"
                }
            )
        };
        println!("{:<22} order {:<2} {kind}", s.id(), s.order());
    }
    Ok(0)
}

fn graph(expr: &str, format: GraphFormat) -> CmdResult {
    let r = parse_ring(expr)?;
    let g = upper_ideal_graph(&r);
    match format {
        GraphFormat::Dot => print!("{}", g.to_dot()),
        GraphFormat::Json => println!("{}", g.to_json(Some(&r.expr()))),
    }
    Ok(0)
}

fn classify(expr: &str, json: bool) -> CmdResult {
    let r = parse_ring(expr)?;
    let g = upper_ideal_graph(&r);
    let rep = classify_graph(r.expr(), &g);
    if json {
        println!("{}", rep.to_json(&g));
        return Ok(0);
    }
    println!("Γ_U({}): {} vertices, {} edges", rep.ring, rep.vertices, rep.edges);
    let rows = [
        ("split", Some(&rep.split)),
        ("threshold", Some(&rep.threshold)),
        ("cograph", Some(&rep.cograph)),
        ("cactus", Some(&rep.cactus)),
        ("unicyclic", Some(&rep.unicyclic)),
        ("outerplanar", Some(&rep.outerplanar)),
        ("planar", Some(&rep.planar)),
        ("ring graph", rep.ring_graph.as_ref()),
    ];
    for (name, verdict) in rows {
        match verdict {
            None => println!("  {name:<12} withheld (chordless-cycle cap)"),
            Some(v) if v.holds => println!("  {name:<12} yes"),
            Some(v) => {
                let why = v
                    .witness
                    .as_ref()
                    .map(|w| witness_text(w, &g))
                    .unwrap_or_default();
                println!("  {name:<12} no   {why}");
            }
        }
    }
    print_invariants(&rep.surface);
    Ok(0)
}

fn print_invariants(s: &uig::surface::SurfaceInvariants) {
    let fmt = |lo: u32, hi: u32, exact: bool| {
        if exact {
            format!("{lo} (exact)")
        } else {
            format!("in [{lo}, {hi}]")
        }
    };
    println!(
        "  genus        {}",
        fmt(s.genus_lower, s.genus_upper, s.genus_exact)
    );
    println!(
        "  crosscap     {}",
        fmt(s.crosscap_lower, s.crosscap_upper, s.crosscap_exact)
    );
    if let Some(mu) = s.mu {
        println!("  mu           {mu}");
    }
}

fn surface(
    expr: &str,
    exact: bool,
    budget: Option<u64>,
    seed: u64,
    save: bool,
    json: bool,
) -> CmdResult {
    let r = parse_ring(expr)?;
    let g = upper_ideal_graph(&r);
    let mut opts = SurfaceOptions {
        seed,
        ..SurfaceOptions::default()
    };
    if !exact {
        // Bounds mode: no embedding searches, only arithmetic, clique, and
        // closed-form block values.
        opts.budget = SearchBudget {
            exhaustive_nodes: 0,
            restarts: 0,
            steps_per_restart: 0,
        };
    }
    if let Some(n) = budget {
        opts.budget.exhaustive_nodes = n;
    }
    let inv = surface_invariants(&g, &opts);
    if json {
        println!(
            "{}",
            serde_json::json!({
                "ring": r.expr(),
                "v": g.v(),
                "e": g.e(),
                "seed": seed,
                "surface": inv,
            })
        );
    } else {
        println!(
            "Γ_U({}): {} vertices, {} edges (seed {seed})",
            r.expr(),
            g.v(),
            g.e()
        );
        print_invariants(&inv);
    }
    if save {
        save_certificates(&r.expr(), &g, &inv, &opts)?;
    }
    Ok(0)
}

/// Re-search at the proven values and write any embedding found.
fn save_certificates(
    expr: &str,
    g: &SimpleGraph,
    inv: &uig::surface::SurfaceInvariants,
    opts: &SurfaceOptions,
) -> Result<(), String> {
    let stem = slug(expr);
    let mut wrote = false;
    if inv.genus_exact {
        let scheme = if inv.genus_lower == 0 {
            planar_embedding(g)
        } else {
            match search_embedding(g, Surface::Orientable(inv.genus_lower), &opts.budget, opts.seed)
            {
                Decision::Found(s) => Some(s),
                _ => None,
            }
        };
        if let Some(s) = scheme {
            let path = format!("{stem}_s{}.emb", inv.genus_lower);
            write_certificate(&path, g, &s)?;
            wrote = true;
        }
    }
    if inv.crosscap_exact && inv.crosscap_lower >= 1 {
        if let Decision::Found(s) = search_embedding(
            g,
            Surface::NonOrientable(inv.crosscap_lower),
            &opts.budget,
            opts.seed,
        ) {
            let path = format!("{stem}_n{}.emb", inv.crosscap_lower);
            write_certificate(&path, g, &s)?;
            wrote = true;
        }
    }
    if !wrote {
        eprintln!("no exact embedding available to save (try a larger --budget)");
    }
    Ok(())
}

fn write_certificate(
    path: &str,
    g: &SimpleGraph,
    scheme: &uig::surface::EmbeddingScheme,
) -> Result<(), String> {
    // Refuse to write anything that does not re-trace.
    trace_faces(g, scheme).map_err(|e| format!("refusing to save a broken scheme: {e}"))?;
    std::fs::write(path, scheme.to_text()).map_err(|e| format!("writing {path}: {e}"))?;
    println!("wrote {path}");
    Ok(())
}

fn certificate(cmd: CertCmd) -> CmdResult {
    match cmd {
        CertCmd::List => {
            for name in certificate_names() {
                match verify_certificate(name) {
                    Ok(rep) => println!(
                        "{:<14} {:<26} v={:<3} e={:<3} f={:<3} {}",
                        rep.name,
                        rep.graph,
                        rep.v,
                        rep.e,
                        rep.faces,
                        surface_name(rep.surface)
                    ),
                    Err(e) => println!("{name:<14} BROKEN: {e}"),
                }
            }
            Ok(0)
        }
        CertCmd::Verify { name } => match verify_certificate(&name) {
            Ok(rep) => {
                println!(
                    "{}: embedding of {} (v={}, e={}) traces {} faces on {}",
                    rep.name,
                    rep.graph,
                    rep.v,
                    rep.e,
                    rep.faces,
                    surface_name(rep.surface)
                );
                Ok(0)
            }
            Err(SchemeError::MissingCertificate(_)) => Err(format!(
                "unknown certificate `{name}`; stored: {}",
                certificate_names().join(" ")
            )),
            Err(e) => {
                eprintln!("certificate {name} failed: {e}");
                Ok(1)
            }
        },
    }
}

fn verify(
    theorem: &str,
    max_order: u16,
    max_factors: u8,
    jobs: Option<usize>,
    json: bool,
) -> CmdResult {
    let filter = RingUniverseFilter {
        max_factor_order: max_order,
        max_factors,
        ..RingUniverseFilter::default()
    };
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    let reports: Vec<VerificationReport> = if theorem == "all" {
        verify_all(&filter, jobs).map_err(|e| e.to_string())?
    } else {
        let th = TheoremId::from_name(theorem).ok_or_else(|| {
            format!(
                "unknown theorem `{theorem}`; valid: {} all",
                ALL_THEOREMS.map(|t| t.name()).join(" ")
            )
        })?;
        vec![verify_theorem(th, &filter, jobs).map_err(|e| e.to_string())?]
    };
    let all_pass = reports.iter().all(|r| r.pass);
    if json {
        let out = if theorem == "all" {
            serde_json::to_string_pretty(&reports)
        } else {
            serde_json::to_string_pretty(&reports[0])
        };
        println!("{}", out.expect("report serialization cannot fail"));
        return Ok(u8::from(!all_pass));
    }
    let universe = enumerate_factor_multisets(&filter).map_err(|e| e.to_string())?;
    println!(
        "universe: factor order ≤ {max_order}, ≤ {max_factors} factors, total order ≤ {} — {} rings",
        filter.max_total_order.map_or("∞".to_string(), |c| c.to_string()),
        universe.len()
    );
    for rep in &reports {
        println!(
            "{:<12} {}  {} of {} expected rings, {} ms",
            rep.theorem.name(),
            if rep.pass { "PASS" } else { "FAIL" },
            rep.computed.len(),
            rep.expected.len(),
            rep.ms
        );
        if !rep.pass {
            if !rep.missing.is_empty() {
                println!("  missing: {}", rep.missing.join(" "));
            }
            if !rep.extra.is_empty() {
                println!("  extra:   {}", rep.extra.join(" "));
            }
            for (ring, w) in &rep.witnesses {
                println!("  witness {ring}: {w}");
            }
        }
    }
    Ok(u8::from(!all_pass))
}
