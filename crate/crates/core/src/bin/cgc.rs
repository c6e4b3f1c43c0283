//! `cgc`: connected greedy coloring toolkit.
//!
//! Exit codes: 0 answered or proved, 1 refuted, 2 budget exhausted, 3 bad input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cgc_core::chromatic::Witness;
use cgc_core::formats::{apply_sidecar, read_graph, write_graph, write_sidecar, Format};
use cgc_core::gadgets::{
    edge_gadget_line, gadget_G3k, gadget_G5k, gadget_Gk, gadget_P9, gadget_line, reduce_append_Gk, reduce_cycle,
    reduce_line, reduce_p9, GadgetArtifact,
};
use cgc_core::params::{
    cgc_spectrum_with, connected_chromatic_index_with, connected_chromatic_number_with, connected_grundy_number_with,
    grundy_number_with,
};
use cgc_core::structure::p4_plus_k1;
use cgc_core::verifier::{self, ReductionVariant, Status, VerificationReport};
use cgc_core::{
    chromatic_number_with, contains_induced, exists_cgc_with, Color, Error, Graph, Outcome, SearchBudget,
    SearchOptions, SearchResult, Verdict,
};

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_EXHAUSTED: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "cgc", version, about = "Connected greedy colorings: parameters, gadgets, reductions, certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Dimacs,
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Dimacs => Format::Dimacs,
            FormatArg::Edgelist => Format::EdgeList,
        }
    }
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Search node limit per property
    #[arg(long, default_value_t = SearchBudget::DEFAULT_NODES, value_parser = clap::value_parser!(u64).range(1..))]
    budget_nodes: u64,
    /// Wall-clock limit in seconds per property
    #[arg(long, default_value_t = SearchBudget::DEFAULT_SECS, value_parser = clap::value_parser!(u64).range(1..))]
    budget_secs: u64,
    /// Worker threads for independent seeds (0 = all cores)
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl BudgetArgs {
    fn options(&self) -> SearchOptions {
        let budget = SearchBudget::nodes(self.budget_nodes).with_time(Duration::from_secs(self.budget_secs));
        SearchOptions::new(budget).with_workers(self.workers)
    }
}

#[derive(Args, Clone)]
struct Input {
    /// Graph file, or `-` for standard input
    input: PathBuf,
    /// Input format; detected from the content when omitted
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args, Clone)]
struct Output {
    /// Output format
    #[arg(long, value_enum, default_value = "graph6")]
    format: FormatArg,
    /// Write here instead of standard output; labels go to `<PATH>.terminals`
    /// unless the format is DIMACS
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number
    Chi(ParamArgs),
    /// Connected chromatic number, optionally from a seed `(v, a)`
    Chic(SeededArgs),
    /// Grundy number
    Grundy(ParamArgs),
    /// Connected Grundy number
    Grundyc(ParamArgs),
    /// Connected chromatic index
    #[command(name = "chiprime-c")]
    ChiprimeC(ParamArgs),
    /// Achievable color counts over connected greedy colorings
    Spectrum(ParamArgs),
    /// Whether the graph avoids an induced pattern
    Hfree {
        #[command(flatten)]
        input: Input,
        /// `Pn`, `Cn`, `Kn`, `P4+K1`, or a graph file
        #[arg(long)]
        pattern: String,
    },
    /// Generate a gadget
    Gadget {
        #[arg(value_enum)]
        name: GadgetName,
        /// Gadget parameter k
        k: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Build a reduction instance from a host graph
    Reduce {
        #[arg(value_enum)]
        variant: VariantArg,
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: Option<u32>,
        /// For cycle variants, emit `G*` instead of `G**`
        #[arg(long)]
        star: bool,
        /// Output format
        #[arg(long = "out-format", value_enum, default_value = "graph6")]
        out_format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify properties; exit code reflects the worst status
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ParamArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Print the witness ordering and coloring
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct SeededArgs {
    #[command(flatten)]
    param: ParamArgs,
    /// Start vertex of a seeded query (0-based)
    #[arg(long, requires = "seed_color")]
    seed_vertex: Option<usize>,
    /// Forced color of the start vertex
    #[arg(long, requires = "seed_vertex", value_parser = clap::value_parser!(u32).range(1..))]
    seed_color: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetName {
    #[value(name = "Gk", alias = "gk")]
    Gk,
    #[value(name = "G5k", alias = "g5k")]
    G5k,
    #[value(name = "G3k", alias = "g3k")]
    G3k,
    #[value(name = "edge-line")]
    EdgeLine,
    #[value(name = "line")]
    Line,
    #[value(name = "P9", alias = "p9")]
    P9,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Cycle5,
    Cycle3,
    Line,
    P9,
}

impl From<VariantArg> for ReductionVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Cycle5 => ReductionVariant::Cycle5,
            VariantArg::Cycle3 => ReductionVariant::Cycle3,
            VariantArg::Line => ReductionVariant::Line,
            VariantArg::P9 => ReductionVariant::P9,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// All properties of a generated gadget
    Gadget,
    /// Global hard-to-color property at `--k`
    HardToColor,
    /// The `(k, ell)`-gadget definition
    Kl,
    /// `chi <= chi_c <= chi + 1` over small connected graphs
    Bounds,
    /// `chi_c(G + K1) = chi(G) + 1` over small connected graphs
    Universal,
    /// Both directions of a reduction on a host graph
    Reduction,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    /// Graph file (instead of `--gadget`)
    input: Option<PathBuf>,
    /// Input format; detected when omitted
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Verify a generated gadget
    #[arg(long, value_enum)]
    gadget: Option<GadgetName>,
    /// Apply the gadget's documented single-edge mutation first
    #[arg(long)]
    mutate: bool,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    ell: Option<usize>,
    /// Terminal vertex: an index or a label
    #[arg(long)]
    vertex: Option<String>,
    /// Largest order for sweeps
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Include evidence in text output
    #[arg(long)]
    witness: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e == Error::Exhausted { EXIT_EXHAUSTED } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

type CliResult = std::result::Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Chi(a) => {
            let g = load(&a.input)?;
            let opts = a.budget.options();
            print_result(&chromatic_number_with(&g, &opts.budget), a.witness)
        }
        Command::Chic(a) => chic(a),
        Command::Grundy(a) => {
            let g = load(&a.input)?;
            print_result(&grundy_number_with(&g, &a.budget.options())?, a.witness)
        }
        Command::Grundyc(a) => {
            let g = load(&a.input)?;
            print_result(&connected_grundy_number_with(&g, &a.budget.options())?, a.witness)
        }
        Command::ChiprimeC(a) => {
            let g = load(&a.input)?;
            let r = connected_chromatic_index_with(&g, &a.budget.options())?;
            let code = print_result(&SearchResult { witness: None, ..r.result.clone() }, false)?;
            if let (true, Some(seq)) = (a.witness, &r.edge_order) {
                let items: Vec<String> = seq.iter().map(|((u, v), c)| format!("{u}-{v}:{c}")).collect();
                println!("edge-order: {}", items.join(" "));
            }
            Ok(code)
        }
        Command::Spectrum(a) => {
            let g = load(&a.input)?;
            let s = cgc_spectrum_with(&g, &a.budget.options())?;
            println!("{s}");
            println!("outcome: {}, nodes: {}", s.outcome, s.nodes);
            if !s.is_interval() {
                println!("note: spectrum is not an interval");
            }
            Ok(outcome_code(s.outcome))
        }
        Command::Hfree { input, pattern } => {
            let g = load(&input)?;
            let (name, h) = pattern_graph(&pattern)?;
            match contains_induced(&g, &h) {
                None => println!("{name}-free: yes"),
                Some(e) => {
                    println!("{name}-free: no");
                    let items: Vec<String> = e.mapping.iter().map(|v| v.to_string()).collect();
                    println!("embedding: {}", items.join(" "));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gadget { name, k, output } => {
            let art = build_gadget(name, k)?;
            emit(&art.graph, output.format.into(), output.out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Reduce { variant, input, k, star, out_format, out } => {
            let g = load(&input)?;
            let need_k = || k.ok_or_else(|| input_error("--k is required for this variant"));
            let graph = match variant {
                VariantArg::Cycle5 | VariantArg::Cycle3 if star => reduce_append_Gk(&g, need_k()?)?.graph,
                VariantArg::Cycle5 => reduce_cycle(&g, need_k()?, 5)?.1.graph,
                VariantArg::Cycle3 => reduce_cycle(&g, need_k()?, 3)?.1.graph,
                VariantArg::Line => reduce_line(&g, need_k()?)?.graph,
                VariantArg::P9 => {
                    let u = (0..g.order())
                        .find(|&v| g.degree(v) + 1 == g.order())
                        .ok_or_else(|| input_error("host has no universal vertex"))?;
                    reduce_p9(&g, u)?.graph
                }
            };
            emit(&graph, out_format.into(), out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Verify(a) => verify(a),
    }
}

fn read_source(path: &Path) -> io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

/// Reads a graph, applying `terminal` lines found inline (after a graph6
/// line) or in a `<path>.terminals` sidecar.
fn load_graph(path: &Path, format: Option<FormatArg>) -> std::result::Result<Graph, Failure> {
    let text = read_source(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let format = format.map(Format::from).unwrap_or_else(|| Format::detect(&text));
    let (body, inline): (Vec<&str>, Vec<&str>) = if format == Format::Dimacs {
        (text.lines().collect(), Vec::new())
    } else {
        text.lines().partition(|l| !l.trim_start().starts_with("terminal"))
    };
    let mut g = read_graph(&body.join("\n"), format)?;
    apply_sidecar(&mut g, &inline.join("\n"))?;
    let sidecar = PathBuf::from(format!("{}.terminals", path.display()));
    if path.as_os_str() != "-" && sidecar.exists() {
        apply_sidecar(&mut g, &fs::read_to_string(sidecar)?)?;
    }
    Ok(g)
}

fn load(input: &Input) -> std::result::Result<Graph, Failure> {
    load_graph(&input.input, input.format)
}

/// Writes a graph; labels follow as a sidecar (stdout: appended lines).
fn emit(g: &Graph, format: Format, out: Option<&Path>) -> std::result::Result<(), Failure> {
    let body = write_graph(g, format);
    let side = if format == Format::Dimacs { String::new() } else { write_sidecar(g) };
    match out {
        Some(path) => {
            fs::write(path, body)?;
            if !side.is_empty() {
                fs::write(format!("{}.terminals", path.display()), side)?;
            }
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.write_all(side.as_bytes())?;
        }
    }
    Ok(())
}

fn outcome_code(o: Outcome) -> u8 {
    match o {
        Outcome::Proved => EXIT_OK,
        Outcome::Disproved => EXIT_REFUTED,
        Outcome::Exhausted => EXIT_EXHAUSTED,
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn print_result(r: &SearchResult, witness: bool) -> CliResult {
    println!("{}", r.value);
    println!("outcome: {}, nodes: {}", r.outcome, r.nodes);
    if witness {
        match &r.witness {
            Some(Witness::Run(run)) => {
                println!("ordering: {}", join(run.ordering.as_slice()));
                println!("coloring: {}", join(run.coloring.as_slice()));
            }
            Some(Witness::Coloring(c)) => println!("coloring: {}", join(c.as_slice())),
            None => {}
        }
    }
    Ok(outcome_code(r.outcome))
}

/// Unseeded: `χ_c`. Seeded: the fewest colors of a `(v, a)`-CGC.
fn chic(a: SeededArgs) -> CliResult {
    let g = load(&a.param.input)?;
    let opts = a.param.budget.options();
    let (v, alpha) = match (a.seed_vertex, a.seed_color) {
        (Some(v), Some(c)) => (v, c as Color),
        _ => return print_result(&connected_chromatic_number_with(&g, &opts)?, a.param.witness),
    };
    g.require_connected()?;
    g.check_vertex(v)?;
    let chi = chromatic_number_with(&g, &opts.budget);
    let mut exact = chi.is_exact();
    let mut nodes = chi.nodes;
    let start = if exact { chi.value } else { g.clique_number() as Color }.max(alpha);
    for k in start..=alpha.max(chi.value + 1) {
        let r = exists_cgc_with(&g, k, Some((v, alpha)), &opts)?;
        nodes += r.nodes;
        match r.verdict {
            Verdict::Present { run } => {
                let outcome = if exact { Outcome::Proved } else { Outcome::Exhausted };
                let result = SearchResult { value: run.num_colors(), witness: Some(Witness::Run(run)), outcome, nodes };
                return print_result(&result, a.param.witness);
            }
            Verdict::Exhausted => exact = false,
            Verdict::Absent => {}
        }
    }
    Err(Error::Exhausted.into())
}

fn pattern_graph(text: &str) -> std::result::Result<(String, Graph), Failure> {
    let upper = text.to_ascii_uppercase();
    if upper == "P4+K1" {
        return Ok((text.to_string(), p4_plus_k1()));
    }
    let sized = |prefix: char| -> Option<usize> {
        upper.strip_prefix(prefix).and_then(|n| n.parse().ok()).filter(|&n| n >= 1)
    };
    if let Some(n) = sized('P') {
        return Ok((text.to_string(), Graph::path(n)));
    }
    if let Some(n) = sized('C').filter(|&n| n >= 3) {
        return Ok((text.to_string(), Graph::cycle(n)));
    }
    if let Some(n) = sized('K') {
        return Ok((text.to_string(), Graph::complete(n)));
    }
    let path = Path::new(text);
    if path.exists() {
        return Ok(("pattern".to_string(), load_graph(path, None)?));
    }
    Err(input_error(format!("unknown pattern {text}")))
}

fn build_gadget(name: GadgetName, k: Option<u32>) -> std::result::Result<GadgetArtifact, Failure> {
    let need = || k.ok_or_else(|| input_error("this gadget needs a parameter k"));
    Ok(match name {
        GadgetName::Gk => gadget_Gk(need()?)?,
        GadgetName::G5k => gadget_G5k(need()?)?,
        GadgetName::G3k => gadget_G3k(need()?)?,
        GadgetName::EdgeLine => edge_gadget_line(need()?)?,
        GadgetName::Line => gadget_line(need()?)?,
        GadgetName::P9 => gadget_P9(),
    })
}

fn resolve_vertex(g: &Graph, text: &str) -> std::result::Result<usize, Failure> {
    if let Ok(v) = text.parse::<usize>() {
        g.check_vertex(v)?;
        return Ok(v);
    }
    g.find_label(text).ok_or_else(|| input_error(format!("no vertex labelled {text}")))
}

fn verify(a: VerifyArgs) -> CliResult {
    let opts = a.budget.options();
    let artifact = match a.gadget {
        Some(name) => {
            let art = build_gadget(name, a.k)?;
            Some(if a.mutate { verifier::documented_mutation(&art)? } else { art })
        }
        None => None,
    };
    let graph = || -> std::result::Result<Graph, Failure> {
        match (&artifact, &a.input) {
            (Some(art), None) => Ok(art.graph.clone()),
            (None, Some(path)) => load_graph(path, a.format),
            _ => Err(input_error("give exactly one of a graph file or --gadget")),
        }
    };
    let need_k = || a.k.ok_or_else(|| input_error("--k is required"));
    let reports: Vec<VerificationReport> = match a.target {
        Target::Gadget => {
            let art = artifact.as_ref().ok_or_else(|| input_error("--gadget is required"))?;
            verifier::verify_artifact(art, &opts)?
        }
        Target::HardToColor => vec![verifier::verify_hard_to_color(&graph()?, need_k()?, &opts)?],
        Target::Kl => {
            let g = graph()?;
            let v = match (&a.vertex, &artifact) {
                (Some(text), _) => resolve_vertex(&g, text)?,
                (None, Some(art)) if art.name == "P9" => art.terminal(cgc_core::gadgets::P9_TERMINAL)?,
                _ => return Err(input_error("--vertex is required")),
            };
            let ell = a.ell.ok_or_else(|| input_error("--ell is required"))?;
            verifier::verify_kl_gadget(&g, v, need_k()?, ell, &opts)?
        }
        Target::Bounds => vec![verifier::verify_bounds_sweep(a.max_n, &opts)?],
        Target::Universal => vec![verifier::verify_universal_sweep(a.max_n, &opts)?],
        Target::Reduction => {
            let variant = a.variant.ok_or_else(|| input_error("--variant is required"))?;
            let k = match variant {
                VariantArg::P9 => a.k.unwrap_or(5),
                _ => need_k()?,
            };
            verifier::verify_reduction(&graph()?, k, variant.into(), &opts)?
        }
    };
    let text = if a.json {
        let mut s = verifier::render_json(&reports);
        s.push('\n');
        s
    } else {
        verifier::render_text(&reports, a.witness)
    };
    match &a.out {
        Some(path) => fs::write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(match verifier::overall(&reports) {
        Status::Proved => EXIT_OK,
        Status::Refuted => EXIT_REFUTED,
        Status::Exhausted => EXIT_EXHAUSTED,
    })
}
