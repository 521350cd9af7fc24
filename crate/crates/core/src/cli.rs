//! Command-line front end. Every command writes a [`ReportDocument`] (an array of them when
//! several `--in` files are given, in input order).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bitset::VertexSet;
use crate::conversion::{flips_to_deletions, ConversionConfig, ConversionOutcome, Mode, TraceStep};
use crate::error::{Error, Result};
use crate::families::ramsey::{iterated_ramsey_upper_with_ceiling, DEFAULT_CEILING_BITS};
use crate::families::{counterexample_experiment, generate, FamilySpec};
use crate::flip::{apply_flips, normalize, normalized_toggle_bound, normalized_toggle_bound_with_reflexive, FlipSet};
use crate::graph::Graph;
use crate::io::json::{parse_flips, Instance, NormalizedJson, WitnessJson};
use crate::io::{graph_digest, read_graph, write_graph, write_graph6, Format};
use crate::report::{batch_exit_code, InputInfo, ReportDocument, Status};
use crate::witness::{find_flat_subset, search_deletion_witness, verify_flippable, verify_widenable, FlippableInstance, SearchLimits, WidenableInstance};

#[derive(Debug, Parser)]
#[command(name = "flipwide", version, about = "Flip-flatness and wideness witnesses for graphs")]
pub struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormatArg {
    Auto,
    Graph6,
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Auto => Format::Auto,
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edgelist => Format::Edgelist,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeArg {
    Guaranteed,
    BestEffort,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Guaranteed => Mode::Guaranteed,
            ModeArg::BestEffort => Mode::BestEffort,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Inputs {
    /// Input graph file (graph6 or edge list); repeat for a batch. `-` reads standard input.
    #[arg(long = "in", required = true, value_name = "PATH")]
    pub paths: Vec<String>,
    /// Input format; `auto` recognises edge lists by their `n <count>` header.
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GenerateArgs {
    /// Family term, e.g. `biclique(2,6)`, `subdivide(2,biclique(2,6))`, `random(30,0.1)`.
    #[arg(long)]
    pub family: String,
    /// Seed for random families (required for them).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Also write the graph itself to this file.
    #[arg(long)]
    pub emit: Option<PathBuf>,
    /// Format of the emitted graph.
    #[arg(long = "emit-format", value_enum, default_value_t = FormatArg::Graph6)]
    pub emit_format: FormatArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FlipArgs {
    /// Flip set as JSON (`[[A, B], …]`), inline or a file path.
    #[arg(long)]
    pub flips: String,
    /// Also write the flipped graph (graph6) to this file; single input only.
    #[arg(long)]
    pub emit: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct NormalizeArgs {
    /// Flip set as JSON, inline or a file path.
    #[arg(long)]
    pub flips: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct BicliqueArgs {
    /// Side size of the complete bipartite subgraph to look for (at most 4).
    #[arg(long)]
    pub t: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FindFlatArgs {
    /// Flip set as JSON, inline or a file path; no flips when omitted.
    #[arg(long)]
    pub flips: Option<String>,
    /// Candidate set A as a JSON vertex array; all vertices when omitted.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub m: usize,
    /// Largest pool searched exactly; larger pools use a greedy independent set.
    #[arg(long = "exact-pool", default_value_t = crate::witness::DEFAULT_EXACT_POOL)]
    pub exact_pool: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SearchWideArgs {
    /// Candidate set A as a JSON vertex array; all vertices when omitted.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub m: usize,
    /// Largest deletion set tried (at most 3; graphs up to 24 vertices).
    #[arg(long)]
    pub budget: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ConvertArgs {
    /// Flip set as JSON, inline or a file path.
    #[arg(long)]
    pub flips: String,
    /// Flip-flatness witness B as a JSON vertex array; found by search over A when omitted.
    #[arg(long)]
    pub b: Option<String>,
    /// Candidate set A for the witness search; all vertices when omitted.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub m: usize,
    /// Excluded biclique size; values below 8 are raised to 8.
    #[arg(long, default_value_t = 8)]
    pub t0: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Guaranteed)]
    pub mode: ModeArg,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ExperimentArgs {
    /// Subdivision depth and left-side size of the biclique.
    #[arg(long)]
    pub s: usize,
    /// Right-side size of the biclique.
    #[arg(long = "N", alias = "big-n")]
    pub big_n: usize,
    /// Radius; defaults to 2(s+1).
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RamseyArgs {
    /// Number of iterations.
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub m: u64,
    /// Computes the chain size R^k(m, t0^2 + t0 + m - 2) with t0 raised to at least 8.
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    pub t0: Option<usize>,
    /// Computes R^k(m, n) directly.
    #[arg(long)]
    pub n: Option<u64>,
    /// Results above 2^bits are reported as an overflow.
    #[arg(long = "ceiling-bits", default_value_t = DEFAULT_CEILING_BITS)]
    pub ceiling_bits: u64,
    /// Print only the number.
    #[arg(long)]
    #[serde(skip)]
    pub plain: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Witness instance as JSON, inline or a file path.
    #[arg(long)]
    pub witness: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from a family term.
    Generate(GenerateArgs),
    /// Apply a flip set.
    Flip {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        args: FlipArgs,
    },
    /// Normalise a flip set into atoms and toggles.
    Normalize {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        args: NormalizeArgs,
    },
    /// Look for a K_{t,t} subgraph.
    CheckBiclique {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        args: BicliqueArgs,
    },
    /// Find an r-independent m-subset of A after flips.
    FindFlat {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        args: FindFlatArgs,
    },
    /// Search deletion sets up to a budget for an r-independent m-subset of A.
    SearchWide {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        args: SearchWideArgs,
    },
    /// Convert a flip witness into a deletion witness.
    Convert {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        args: ConvertArgs,
    },
    /// Deletion budgets on the s-subdivided biclique K_{s,N}.
    Experiment(ExperimentArgs),
    /// Binomial Ramsey upper bounds.
    Ramsey(RamseyArgs),
    /// Check a flippable or widenable witness instance.
    Verify {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        args: VerifyArgs,
    },
}

/// Inline JSON when the text starts with `[` or `{`, otherwise a file to read.
fn inline_or_file(text: &str) -> Result<String> {
    let t = text.trim_start();
    if t.starts_with('[') || t.starts_with('{') {
        Ok(text.to_string())
    } else {
        std::fs::read_to_string(text).map_err(|e| Error::InvalidParameter(format!("cannot read `{text}`: {e}")))
    }
}

fn vertex_list(text: &str, n: usize) -> Result<VertexSet> {
    let vs: Vec<usize> = serde_json::from_str(&inline_or_file(text)?)
        .map_err(|e| Error::Malformed(format!("vertex array: {e}")))?;
    VertexSet::from_vertices(n, vs)
}

fn set_or_all(text: &Option<String>, n: usize) -> Result<VertexSet> {
    match text {
        Some(t) => vertex_list(t, n),
        None => Ok(VertexSet::full(n)),
    }
}

fn load_flips(text: &str, n: usize) -> Result<FlipSet> {
    parse_flips(&inline_or_file(text)?, n)
}

fn load_graph(path: &str, format: Format) -> Result<Graph> {
    let bytes = if path == "-" {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf)
            .map_err(|e| Error::InvalidParameter(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read(path).map_err(|e| Error::InvalidParameter(format!("cannot read `{path}`: {e}")))?
    };
    read_graph(&bytes, format)
}

fn params<T: Serialize>(args: &T, format: Option<FormatArg>) -> Value {
    let mut v = serde_json::to_value(args).expect("arguments serialise");
    if let (Some(f), Some(obj)) = (format, v.as_object_mut()) {
        obj.insert("format".into(), serde_json::to_value(f).unwrap());
    }
    v
}

/// Runs `body` and records its outcome, or the error that stopped it, in `doc`.
fn finish(mut doc: ReportDocument, start: Instant, body: impl FnOnce(&mut ReportDocument) -> Result<()>) -> ReportDocument {
    if let Err(e) = body(&mut doc) {
        doc.fail_with(&e);
    }
    doc.duration_ms = start.elapsed().as_millis() as u64;
    doc
}

fn per_input<F>(command: &str, inputs: &Inputs, params: Value, f: F) -> Vec<ReportDocument>
where
    F: Fn(&Graph, &mut ReportDocument) -> Result<()> + Sync,
{
    let format: Format = inputs.format.into();
    inputs
        .paths
        .par_iter()
        .map(|path| {
            let start = Instant::now();
            let doc = ReportDocument::new(command, params.clone());
            finish(doc, start, |doc| {
                let g = load_graph(path, format)?;
                doc.input = Some(InputInfo {
                    source: path.clone(),
                    digest: graph_digest(&g)?,
                    n: g.n(),
                    edges: g.edge_count(),
                });
                f(&g, doc)
            })
        })
        .collect()
}

fn cmd_generate(args: &GenerateArgs, doc: &mut ReportDocument) -> Result<()> {
    let spec = FamilySpec::parse_with_seed(&args.family, args.seed)?;
    if spec.is_randomized() && args.seed.is_none() {
        return Err(Error::InvalidParameter("random families require --seed".into()));
    }
    let g = generate(&spec)?;
    if let Some(path) = &args.emit {
        write_file(path, &write_graph(&g, args.emit_format.into())?)?;
    }
    doc.result = Some(json!({
        "family": spec.to_string(),
        "n": g.n(),
        "edges": g.edge_count(),
        "digest": graph_digest(&g)?,
        "graph6": String::from_utf8(write_graph6(&g)?).expect("graph6 is ASCII"),
    }));
    Ok(())
}

fn cmd_flip(g: &Graph, args: &FlipArgs, doc: &mut ReportDocument) -> Result<()> {
    let flips = load_flips(&args.flips, g.n())?;
    let h = apply_flips(g, &flips)?;
    if let Some(path) = &args.emit {
        write_file(path, &write_graph(&h, Format::Graph6)?)?;
    }
    doc.result = Some(json!({
        "flips": flips.len(),
        "edges_before": g.edge_count(),
        "edges_after": h.edge_count(),
        "digest": graph_digest(&h)?,
        "graph6": String::from_utf8(write_graph6(&h)?).expect("graph6 is ASCII"),
    }));
    Ok(())
}

fn cmd_normalize(g: &Graph, args: &NormalizeArgs, doc: &mut ReportDocument) -> Result<()> {
    let flips = load_flips(&args.flips, g.n())?;
    let nf = normalize(&flips, g.n())?;
    let bound = if nf.has_reflexive() {
        normalized_toggle_bound_with_reflexive(flips.len())
    } else {
        normalized_toggle_bound(flips.len())
    };
    let mut v = serde_json::to_value(NormalizedJson::from(&nf)).expect("serialises");
    v["toggle_bound"] = json!(bound.map(|b| b.to_string()));
    doc.result = Some(v);
    Ok(())
}

fn cmd_biclique(g: &Graph, args: &BicliqueArgs, doc: &mut ReportDocument) -> Result<()> {
    let found = g.contains_biclique(args.t)?;
    doc.exhaustive = Some(true);
    doc.result = Some(json!({
        "t": args.t,
        "found": found.is_some(),
        "left": found.as_ref().map(|(x, _)| x.to_vec()),
        "right": found.as_ref().map(|(_, y)| y.to_vec()),
    }));
    Ok(())
}

fn cmd_find_flat(g: &Graph, args: &FindFlatArgs, doc: &mut ReportDocument) -> Result<()> {
    let flips = match &args.flips {
        Some(f) => load_flips(f, g.n())?,
        None => FlipSet::default(),
    };
    let a_set = set_or_all(&args.a, g.n())?;
    let limits = SearchLimits {
        exact_pool: args.exact_pool,
        ..SearchLimits::default()
    };
    let found = find_flat_subset(g, &flips, &a_set, args.r, args.m, &limits)?;
    doc.exhaustive = Some(found.exact);
    match found.witness {
        Some(b) => {
            let inst = FlippableInstance {
                a_set,
                flips,
                r: args.r,
                m: args.m,
                witness: Some(b.clone()),
            };
            doc.result = Some(json!({ "B": b.to_vec(), "witness": WitnessJson::from(&inst) }));
        }
        None => {
            doc.status = Status::Failure;
            doc.reason = Some(format!(
                "no {}-independent subset of size {} found{}",
                args.r,
                args.m,
                if found.exact { "" } else { " by the greedy search" }
            ));
        }
    }
    Ok(())
}

fn cmd_search_wide(g: &Graph, args: &SearchWideArgs, doc: &mut ReportDocument) -> Result<()> {
    let a_set = set_or_all(&args.a, g.n())?;
    let found = search_deletion_witness(g, &a_set, args.r, args.m, args.budget, &SearchLimits::default())?;
    doc.exhaustive = Some(true);
    match found {
        Some(w) => {
            let inst = WidenableInstance {
                a_set,
                s_set: w.s_set.clone(),
                r: args.r,
                m: args.m,
                witness: Some(w.b_set.clone()),
            };
            doc.result = Some(json!({
                "S": w.s_set.to_vec(),
                "B": w.b_set.to_vec(),
                "witness": WitnessJson::from(&inst),
            }));
        }
        None => {
            doc.status = Status::Failure;
            doc.reason = Some(format!("no deletion set of at most {} vertices suffices", args.budget));
        }
    }
    Ok(())
}

fn cmd_convert(g: &Graph, args: &ConvertArgs, doc: &mut ReportDocument) -> Result<()> {
    let flips = load_flips(&args.flips, g.n())?;
    let (b, search_exact) = match &args.b {
        Some(b) => (vertex_list(b, g.n())?, true),
        None => {
            let a_set = set_or_all(&args.a, g.n())?;
            let found = find_flat_subset(g, &flips, &a_set, args.r, args.m, &SearchLimits::default())?;
            match found.witness {
                Some(b) => (b, found.exact),
                None => {
                    doc.status = Status::Failure;
                    doc.exhaustive = Some(found.exact);
                    doc.reason = Some("no flip-flatness witness found to convert".into());
                    return Ok(());
                }
            }
        }
    };
    let cfg = ConversionConfig::new(args.r, args.m, args.t0, args.mode.into());
    let outcome = flips_to_deletions(g, &flips, &b, &cfg)?;
    let exact = search_exact
        && outcome.trace().steps.iter().all(|s| match s {
            TraceStep::CloseExtraction { exact, .. } | TraceStep::FarShortcut { exact, .. } => *exact,
            _ => true,
        });
    doc.exhaustive = Some(exact);
    match outcome {
        ConversionOutcome::Success { s_set, b_final, trace } => {
            doc.result = Some(json!({
                "S": s_set.to_vec(),
                "B": b_final.to_vec(),
                "s_size": s_set.len(),
                "flip_witness": b.to_vec(),
                "bound": trace.normalized_flips * trace.per_flip_bound,
                "trace": trace,
            }));
        }
        ConversionOutcome::Failure { level, reason, trace } => {
            doc.status = Status::Failure;
            doc.reason = Some(reason);
            doc.result = Some(json!({ "level": level, "flip_witness": b.to_vec(), "trace": trace }));
        }
    }
    Ok(())
}

fn cmd_experiment(args: &ExperimentArgs, doc: &mut ReportDocument) -> Result<()> {
    let r = args.r.unwrap_or(2 * (args.s as u32 + 1));
    let report = counterexample_experiment(args.s, args.big_n, r, args.m)?;
    doc.exhaustive = Some(report.budget_results.iter().all(|b| b.exhaustive));
    doc.result = Some(serde_json::to_value(&report).expect("serialises"));
    Ok(())
}

fn ramsey_value(args: &RamseyArgs) -> Result<num_bigint::BigUint> {
    match (args.t0, args.n) {
        (Some(t0), None) => {
            let sp = crate::conversion::EffectiveSparsity::new(t0);
            crate::conversion::required_chain_size_with_ceiling(args.k, &sp, args.m as usize, args.ceiling_bits)
        }
        (None, Some(n)) => iterated_ramsey_upper_with_ceiling(args.k, args.m, n, args.ceiling_bits),
        _ => Err(Error::InvalidParameter("give exactly one of --t0 and --n".into())),
    }
}

fn cmd_ramsey(args: &RamseyArgs, doc: &mut ReportDocument) -> Result<()> {
    let v = ramsey_value(args)?;
    let mut result = json!({ "value": v.to_string(), "bits": v.bits() });
    if let Some(t0) = args.t0 {
        let sp = crate::conversion::EffectiveSparsity::new(t0);
        result["t0_eff"] = json!(sp.t0_eff);
        result["n"] = json!(sp.lemma_pool(args.m as usize));
    }
    doc.result = Some(result);
    Ok(())
}

fn cmd_verify(g: &Graph, args: &VerifyArgs, doc: &mut ReportDocument) -> Result<()> {
    let inst = WitnessJson::parse(&inline_or_file(&args.witness)?)?.resolve(g.n())?;
    let (kind, verdict) = match &inst {
        Instance::Widenable(w) => ("widenable", verify_widenable(g, w)?),
        Instance::Flippable(f) => ("flippable", verify_flippable(g, f)?),
    };
    doc.result = Some(json!({ "kind": kind, "valid": verdict.is_valid() }));
    match verdict {
        crate::witness::Verdict::Valid => doc.status = Status::Valid,
        crate::witness::Verdict::Invalid(reason) => {
            doc.status = Status::Invalid;
            doc.reason = Some(reason);
        }
    }
    Ok(())
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|e| Error::InvalidParameter(format!("cannot write `{}`: {e}", path.display())))
}

fn single(command: &str, params: Value, body: impl FnOnce(&mut ReportDocument) -> Result<()>) -> Vec<ReportDocument> {
    let start = Instant::now();
    vec![finish(ReportDocument::new(command, params), start, body)]
}

/// Executes a parsed command and returns its reports, one per input.
pub fn execute(command: &Command) -> Vec<ReportDocument> {
    match command {
        Command::Generate(a) => single("generate", params(a, None), |d| cmd_generate(a, d)),
        Command::Flip { inputs, args } => {
            if args.emit.is_some() && inputs.paths.len() > 1 {
                let err = Error::InvalidParameter("--emit takes a single --in".into());
                return single("flip", params(args, Some(inputs.format)), |_| Err(err));
            }
            per_input("flip", inputs, params(args, Some(inputs.format)), |g, d| cmd_flip(g, args, d))
        }
        Command::Normalize { inputs, args } => {
            per_input("normalize", inputs, params(args, Some(inputs.format)), |g, d| cmd_normalize(g, args, d))
        }
        Command::CheckBiclique { inputs, args } => {
            per_input("check-biclique", inputs, params(args, Some(inputs.format)), |g, d| cmd_biclique(g, args, d))
        }
        Command::FindFlat { inputs, args } => {
            per_input("find-flat", inputs, params(args, Some(inputs.format)), |g, d| cmd_find_flat(g, args, d))
        }
        Command::SearchWide { inputs, args } => {
            per_input("search-wide", inputs, params(args, Some(inputs.format)), |g, d| cmd_search_wide(g, args, d))
        }
        Command::Convert { inputs, args } => {
            per_input("convert", inputs, params(args, Some(inputs.format)), |g, d| cmd_convert(g, args, d))
        }
        Command::Experiment(a) => single("experiment", params(a, None), |d| cmd_experiment(a, d)),
        Command::Ramsey(a) => single("ramsey", params(a, None), |d| cmd_ramsey(a, d)),
        Command::Verify { inputs, args } => {
            per_input("verify", inputs, params(args, Some(inputs.format)), |g, d| cmd_verify(g, args, d))
        }
    }
}

/// Parses `argv` (program name first), runs the command and writes its output. Returns the
/// process exit code: 0 success, 1 invalid witness or failed search, 2 usage or input error.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let reports = execute(&cli.command);
    let code = batch_exit_code(&reports);

    let text = match &cli.command {
        Command::Ramsey(a) if a.plain => match &reports[0].result {
            Some(r) => format!("{}\n", r["value"].as_str().unwrap_or_default()),
            None => {
                let _ = writeln!(stderr, "{}", reports[0].reason.as_deref().unwrap_or("error"));
                return code;
            }
        },
        _ => {
            let value = match &cli.command {
                Command::Generate(_) | Command::Experiment(_) | Command::Ramsey(_) => {
                    serde_json::to_value(&reports[0]).expect("serialises")
                }
                _ if reports.len() == 1 => serde_json::to_value(&reports[0]).expect("serialises"),
                _ => serde_json::to_value(&reports).expect("serialises"),
            };
            serde_json::to_string_pretty(&value).expect("serialises") + "\n"
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let _ = writeln!(stderr, "cannot write `{}`: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    for r in &reports {
        if let Some(reason) = &r.reason {
            let _ = writeln!(stderr, "{}: {reason}", r.input.as_ref().map_or(r.command.as_str(), |i| i.source.as_str()));
        }
    }
    code
}
