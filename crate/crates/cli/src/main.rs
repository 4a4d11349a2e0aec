//! Command-line front end: file-based expansion, invariant reports and the
//! seeded randomized verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite reports failures,
//! 2 on usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use expanse_core::homology::{
    hochster_betti, is_cohen_macaulay, is_sequentially_cohen_macaulay, is_shellable_capped,
    is_vertex_decomposable_budgeted, reduced_homology, FieldSpec, HomologyError, Shelling,
};
use expanse_core::io::{self, AnyInput};
use expanse_core::{
    run_suite, BettiTable, Caps, Decision, ExpansionVector, Graph, LinearQuotients, ModuleKind,
    MonomialIdeal, SimplicialComplex,
};

#[derive(Parser)]
#[command(
    name = "expanse",
    about = "Exact computations with simplicial complexes, squarefree monomial ideals and graphs under vertex expansion",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a complex: replace vertex i by alpha_i copies and every facet
    /// by all mixed-copy selections.
    Expand {
        /// Complex file (JSON: {"vertices": [...], "facets": [[...]] | null}).
        input: PathBuf,
        /// Comma-separated positive multiplicities, one per vertex.
        #[arg(long)]
        alpha: String,
    },
    /// Report dimension, Betti tables, regularity, projective dimension and
    /// the CM / sequentially-CM / shellable / vertex-decomposable flags.
    Invariants {
        /// Complex, ideal or graph file (detected by its top-level keys).
        input: PathBuf,
        /// Coefficient field: q, f2, or f<p> for a prime p. Default: both q and f2.
        #[arg(long)]
        field: Option<String>,
    },
    /// Ideal constructions.
    Ideal {
        #[command(subcommand)]
        op: IdealOp,
    },
    /// Graph constructions.
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Run a seeded randomized verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum IdealOp {
    /// Facet ideal of a complex: one generator per facet.
    Facet { input: PathBuf },
    /// Stanley-Reisner ideal of a complex: one generator per minimal non-face.
    Sr { input: PathBuf },
    /// Alexander dual of an ideal: minimal transversals of the generator supports.
    Dual { input: PathBuf },
    /// Search for an order of linear quotients of an ideal.
    Lq { input: PathBuf },
}

#[derive(Subcommand)]
enum GraphOp {
    /// Independence complex (facets are the maximal independent sets).
    Indcomplex { input: PathBuf },
    /// Expansion with copies of one vertex non-adjacent.
    Expand {
        input: PathBuf,
        #[arg(long)]
        alpha: String,
    },
    /// Expansion with copies of one vertex pairwise adjacent.
    ExpandHat {
        input: PathBuf,
        #[arg(long)]
        alpha: String,
    },
    /// Chordality of the graph and of its complement.
    Chordal { input: PathBuf },
    /// All pairs of vertices with equal closed neighborhoods.
    Twins { input: PathBuf },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (see README for the list).
    #[arg(long)]
    suite: String,
    #[arg(long, default_value_t = 200)]
    trials: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Cap on random instance vertices (default: 6 for complexes, 7 for graphs).
    #[arg(long)]
    max_vertices: Option<usize>,
    /// Cap on multiplicity entries.
    #[arg(long, default_value_t = 3)]
    max_mult: u32,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Expand { input, alpha } => {
            let complex = read_complex(&input)?;
            let alpha = parse_alpha(&alpha, complex.vertex_count())?;
            if complex.is_void() || complex.is_irrelevant() {
                eprintln!("note: degenerate input (void or irrelevant complex); expansion only renames the vertex table");
            }
            let expanded = complex.expand(&alpha)?;
            print_json(&io::complex_to_file(&expanded))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { input, field } => {
            let text = fs::read_to_string(&input)
                .with_context(|| format!("reading {}", input.display()))?;
            let fields = parse_fields(field.as_deref())?;
            match io::parse_any(&text)? {
                AnyInput::Complex(c) => complex_invariants(&c, &fields)?,
                AnyInput::Ideal(i) => ideal_invariants(&i, &fields)?,
                AnyInput::Graph(g) => graph_invariants(&g, &fields)?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ideal { op } => {
            ideal_command(op)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph { op } => {
            graph_command(op)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify_command(args),
    }
}

fn read_complex(path: &PathBuf) -> Result<SimplicialComplex> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: io::ComplexFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {} as a complex", path.display()))?;
    Ok(io::complex_from_file(&file)?)
}

fn read_ideal(path: &PathBuf) -> Result<MonomialIdeal> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: io::IdealFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {} as an ideal", path.display()))?;
    Ok(io::ideal_from_file(&file)?)
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: io::GraphFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing {} as a graph", path.display()))?;
    Ok(io::graph_from_file(&file)?)
}

fn parse_alpha(text: &str, expected: usize) -> Result<ExpansionVector> {
    let entries: Vec<u32> = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .with_context(|| format!("multiplicity `{s}` is not a positive integer"))
        })
        .collect::<Result<_>>()?;
    if entries.len() != expected {
        bail!(
            "--alpha has {} entries, the vertex table has {expected}",
            entries.len()
        );
    }
    Ok(ExpansionVector::new(entries)?)
}

fn parse_fields(arg: Option<&str>) -> Result<Vec<FieldSpec>> {
    match arg {
        None => Ok(vec![FieldSpec::Rationals, FieldSpec::PrimeField(2)]),
        Some("q") => Ok(vec![FieldSpec::Rationals]),
        Some(other) => {
            let p: u64 = other
                .strip_prefix('f')
                .and_then(|digits| digits.parse().ok())
                .ok_or_else(|| anyhow!("--field must be q, f2, or f<p> for a prime p"))?;
            Ok(vec![FieldSpec::prime_field(p)?])
        }
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn print_betti(table: &BettiTable) {
    println!("{table}");
    println!("  totals = {:?}", table.total_betti());
}

fn betti_or_note(ideal: &MonomialIdeal, field: FieldSpec, kind: ModuleKind) {
    match hochster_betti(ideal, field, kind) {
        Ok(t) => print_betti(&t),
        Err(HomologyError::AmbientTooLarge(n)) => {
            println!("betti: unavailable ({n} variables exceeds the restriction-sum cap)")
        }
        Err(e) => println!("betti: {e}"),
    }
}

fn flag(label: &str, value: impl std::fmt::Display) {
    println!("  {label}: {value}");
}

fn tri(d: Decision) -> &'static str {
    match d {
        Decision::Yes => "yes",
        Decision::No => "no",
        Decision::Undecided => "undecided",
    }
}

fn shelling_text(s: &Shelling) -> String {
    match s {
        Shelling::Shellable(order) => format!("yes (order {order:?})"),
        Shelling::NotShellable => "no".to_string(),
        Shelling::Undecided => "undecided".to_string(),
    }
}

fn complex_invariants(c: &SimplicialComplex, fields: &[FieldSpec]) -> Result<()> {
    match c.dim() {
        None => println!("dim: void"),
        Some(d) => println!("dim: {d}"),
    }
    if c.is_void() {
        println!("(void complex: no further invariants)");
        return Ok(());
    }
    println!("facets: {}", c.facet_count());
    match MonomialIdeal::stanley_reisner_ideal(c) {
        Ok(sr) if sr.is_zero() => {
            println!("stanley-reisner ideal: zero (full simplex; free quotient)")
        }
        Ok(sr) => {
            for &field in fields {
                println!("over {field}, quotient by the stanley-reisner ideal:");
                betti_or_note(&sr, field, ModuleKind::Quotient);
            }
        }
        Err(e) => println!("stanley-reisner ideal: {e}"),
    }
    for &field in fields {
        match reduced_homology(c, field) {
            Ok(profile) => flag(
                &format!("reduced homology over {field}"),
                serde_json::to_string(&io::profile_to_file(&profile))?,
            ),
            Err(e) => flag(&format!("reduced homology over {field}"), e),
        }
        flag(
            &format!("cohen-macaulay over {field}"),
            is_cohen_macaulay(c, field)?,
        );
        flag(
            &format!("sequentially cohen-macaulay over {field}"),
            is_sequentially_cohen_macaulay(c, field)?,
        );
    }
    flag(
        "shellable",
        shelling_text(&is_shellable_capped(c, Caps::default().shelling_cap)?),
    );
    flag(
        "vertex decomposable",
        tri(is_vertex_decomposable_budgeted(
            c,
            Caps::default().vd_budget,
        )),
    );
    Ok(())
}

fn ideal_invariants(i: &MonomialIdeal, fields: &[FieldSpec]) -> Result<()> {
    if i.is_zero() {
        println!("zero ideal (free quotient)");
        return Ok(());
    }
    println!("generators: {}", i.generator_count());
    for &field in fields {
        println!("over {field}:");
        betti_or_note(i, field, ModuleKind::Quotient);
        betti_or_note(i, field, ModuleKind::Ideal);
    }
    match i.linear_quotients_order() {
        Ok(LinearQuotients::Found(cert)) => flag(
            "linear quotients",
            format!("yes (order {:?})", cert.order()),
        ),
        Ok(LinearQuotients::NotFound) => flag("linear quotients", "no"),
        Ok(LinearQuotients::Undecided) => flag("linear quotients", "undecided"),
        Err(e) => flag("linear quotients", e),
    }
    let c = i.complex_of_ideal();
    println!("associated complex (faces avoiding every generator):");
    complex_invariants(&c, fields)
}

fn graph_invariants(g: &Graph, fields: &[FieldSpec]) -> Result<()> {
    println!("vertices: {}, edges: {}", g.vertex_count(), g.edge_count());
    flag("chordal", g.is_chordal());
    flag("co-chordal", g.is_co_chordal());
    if g.edge_count() > 0 {
        let ei = g.edge_ideal()?;
        for &field in fields {
            println!("edge ideal over {field}:");
            betti_or_note(&ei, field, ModuleKind::Ideal);
        }
    } else {
        println!("edge ideal: none (edgeless graph)");
    }
    println!("independence complex:");
    complex_invariants(&g.independence_complex(), fields)
}

fn ideal_command(op: IdealOp) -> Result<()> {
    match op {
        IdealOp::Facet { input } => {
            let c = read_complex(&input)?;
            print_json(&io::ideal_to_file(&MonomialIdeal::facet_ideal(&c)?))?;
        }
        IdealOp::Sr { input } => {
            let c = read_complex(&input)?;
            print_json(&io::ideal_to_file(&MonomialIdeal::stanley_reisner_ideal(
                &c,
            )?))?;
        }
        IdealOp::Dual { input } => {
            let i = read_ideal(&input)?;
            print_json(&io::ideal_to_file(&i.alexander_dual_ideal()?))?;
        }
        IdealOp::Lq { input } => {
            let i = read_ideal(&input)?;
            match i.linear_quotients_order()? {
                LinearQuotients::Found(cert) => {
                    println!("order: {:?}", cert.order());
                    for (t, set) in cert.sets().iter().enumerate() {
                        let names: Vec<&str> =
                            set.iter().map(|v| i.variables()[v].as_str()).collect();
                        println!("set[{t}] = {{{}}}", names.join(", "));
                    }
                }
                LinearQuotients::NotFound => println!("none"),
                LinearQuotients::Undecided => println!("undecided (generator cap exceeded)"),
            }
        }
    }
    Ok(())
}

fn graph_command(op: GraphOp) -> Result<()> {
    match op {
        GraphOp::Indcomplex { input } => {
            let g = read_graph(&input)?;
            print_json(&io::complex_to_file(&g.independence_complex()))?;
        }
        GraphOp::Expand { input, alpha } => {
            let g = read_graph(&input)?;
            let alpha = parse_alpha(&alpha, g.vertex_count())?;
            print_json(&io::graph_to_file(&g.expand(&alpha)?))?;
        }
        GraphOp::ExpandHat { input, alpha } => {
            let g = read_graph(&input)?;
            let alpha = parse_alpha(&alpha, g.vertex_count())?;
            print_json(&io::graph_to_file(&g.expand_hat(&alpha)?))?;
        }
        GraphOp::Chordal { input } => {
            let g = read_graph(&input)?;
            println!("chordal: {}", g.is_chordal());
            println!("co-chordal: {}", g.is_co_chordal());
        }
        GraphOp::Twins { input } => {
            let g = read_graph(&input)?;
            let twins = g.closed_twins();
            if twins.is_empty() {
                println!("no closed twins");
            } else {
                for (a, b) in twins {
                    println!("{} {}", g.vertex_names()[a], g.vertex_names()[b]);
                }
            }
        }
    }
    Ok(())
}

fn verify_command(args: VerifyArgs) -> Result<ExitCode> {
    let mut caps = Caps {
        max_mult: args.max_mult,
        ..Caps::default()
    };
    if let Some(v) = args.max_vertices {
        caps.max_vertices = v;
        caps.max_graph_vertices = v;
    }
    let report = run_suite(&args.suite, args.trials, args.seed, &caps)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("{report}");
    }
    for failure in &report.failures {
        let path = format!("counterexample-{}-{}.json", report.suite, failure.seed);
        if let Err(e) = fs::write(&path, serde_json::to_string_pretty(&failure.instance)?) {
            eprintln!("warning: could not write {path}: {e}");
        } else {
            eprintln!("counterexample written to {path}");
        }
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
