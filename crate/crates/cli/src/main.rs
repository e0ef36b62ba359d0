use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use tough_core::bounds::{write_csv, BoundReport, Tolerances, EPS_EQUALITY, EPS_SLACK};
use tough_core::exact::{independence_number, toughness, vertex_connectivity};
use tough_core::extremal::{build_extremal, detect_join_form, equality_case_verdict};
use tough_core::io::{parse_graph6, write_graph6, CorpusSource, Format, LabeledGraphs};
use tough_core::spectra::spectral_summary;
use tough_core::sweep::{sweep, Check, Execution, SweepConfig};
use tough_core::Graph;

#[derive(Parser)]
#[command(name = "toughness", version, about = "Exact toughness, spectral bounds and exhaustive sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact toughness with a witness cut.
    Tough(Common),
    /// Exact independence number with a witness set.
    Alpha(Common),
    /// Vertex connectivity with a minimum separator.
    Kappa(Common),
    /// Adjacency, Laplacian and normalized Laplacian spectra.
    Spectra(Common),
    /// Every toughness bound for each input graph.
    Bounds {
        #[command(flatten)]
        common: Common,
        /// Write CSV with a header row instead of JSON lines.
        #[arg(long, conflicts_with_all = ["json", "table"])]
        csv: bool,
    },
    /// Build `H ∨ (n−|H|)K₁`, or test input graphs for that form.
    Extremal {
        #[command(flatten)]
        common: Common,
        /// Base graph H in graph6.
        #[arg(long, requires = "n")]
        h_graph6: Option<String>,
        /// Order of the graph to build.
        #[arg(long, requires = "h_graph6")]
        n: Option<usize>,
    },
    /// Emit every labeled graph on n vertices as graph6.
    Gen {
        #[arg(long)]
        n: usize,
        /// Only connected graphs.
        #[arg(long)]
        connected: bool,
    },
    /// Sweep a corpus against the selected checks.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Sweep the generated labeled corpus on n vertices instead of reading input.
        #[arg(long, conflicts_with = "file")]
        n: Option<usize>,
        /// With --n, only connected graphs.
        #[arg(long, requires = "n")]
        connected: bool,
        /// Comma-separated checks; all when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Worker threads (0 = all cores, 1 = sequential).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Stop at the first malformed corpus line.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Args)]
struct Common {
    /// Input file; standard input when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
    /// JSON lines (the default).
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// Human-readable key/value table.
    #[arg(long)]
    table: bool,
    /// Inequality slack.
    #[arg(long, default_value_t = EPS_SLACK)]
    tol: f64,
    /// Equality tolerance.
    #[arg(long, default_value_t = EPS_EQUALITY)]
    tol_eq: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edges,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Self {
        match f {
            InputFormat::Graph6 => Format::Graph6,
            InputFormat::Edges => Format::EdgeList,
        }
    }
}

impl Common {
    fn tolerances(&self) -> Tolerances {
        Tolerances { slack: self.tol, equality: self.tol_eq }
    }

    fn source(&self) -> Result<CorpusSource> {
        let text = match &self.file {
            Some(path) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
            None => {
                let mut buf = String::new();
                io::stdin().read_to_string(&mut buf).context("reading standard input")?;
                buf
            }
        };
        Ok(CorpusSource::Text { text, format: self.format.into() })
    }

    fn graphs(&self) -> Result<Vec<Graph>> {
        let source = self.source()?;
        let mut graphs = Vec::new();
        for item in source.stream()? {
            match item {
                Ok(g) => graphs.push(g),
                Err(d) => bail!("line {}: {}", d.line, d.error),
            }
        }
        if graphs.is_empty() {
            bail!("no graphs in input");
        }
        Ok(graphs)
    }
}

/// Failures that map to exit status 1 rather than 2.
struct Findings(bool);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Findings(false)) => ExitCode::SUCCESS,
        Ok(Findings(true)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Findings> {
    let mut out = io::BufWriter::new(io::stdout().lock());
    let findings = match cli.command {
        Command::Tough(c) => per_graph(&c, &mut out, |g| {
            let cert = toughness(g)?;
            let mut obj = Map::new();
            obj.insert("tau".into(), json!(cert.tau().to_string()));
            obj.insert("cut".into(), json!(cert.cut.to_vec()));
            obj.insert("omega".into(), json!(cert.omega));
            Ok(obj)
        })?,
        Command::Alpha(c) => per_graph(&c, &mut out, |g| {
            let cert = independence_number(g);
            let mut obj = Map::new();
            obj.insert("alpha".into(), json!(cert.alpha));
            obj.insert("witness".into(), json!(cert.witness.to_vec()));
            Ok(obj)
        })?,
        Command::Kappa(c) => per_graph(&c, &mut out, |g| {
            let cert = vertex_connectivity(g)?;
            let mut obj = Map::new();
            obj.insert("kappa".into(), json!(cert.kappa));
            obj.insert("separator".into(), json!(cert.separator.map(|s| s.to_vec())));
            Ok(obj)
        })?,
        Command::Spectra(c) => per_graph(&c, &mut out, |g| {
            let s = spectral_summary(g)?;
            let Value::Object(fields) = serde_json::to_value(&s)? else { unreachable!() };
            Ok(fields)
        })?,
        Command::Bounds { common, csv } => {
            if csv {
                let reports = common
                    .graphs()?
                    .iter()
                    .map(|g| BoundReport::compute(g, common.tolerances()))
                    .collect::<Result<Vec<_>, _>>()?;
                write_csv(&reports, &mut out)?;
                Findings(false)
            } else {
                let tol = common.tolerances();
                per_graph(&common, &mut out, |g| {
                    let Value::Object(mut fields) = serde_json::to_value(BoundReport::compute(g, tol)?)? else {
                        unreachable!()
                    };
                    fields.shift_remove("graph_id");
                    Ok(fields)
                })?
            }
        }
        Command::Extremal { common, h_graph6, n } => {
            let tol = common.tolerances();
            if let (Some(h), Some(n)) = (h_graph6, n) {
                let h = parse_graph6(&h).context("parsing --h-graph6")?;
                let g = build_extremal(&h, n)?;
                emit(&common, &mut out, &g, extremal_fields(&g, tol)?)?;
                Findings(false)
            } else {
                per_graph(&common, &mut out, |g| extremal_fields(g, tol))?
            }
        }
        Command::Gen { n, connected } => {
            for g in LabeledGraphs::new(n, connected)? {
                writeln!(out, "{}", write_graph6(&g)?)?;
            }
            Findings(false)
        }
        Command::Verify { common, n, connected, checks, jobs, strict } => {
            let source = match n {
                Some(n) => CorpusSource::Labeled { n, connected_only: connected },
                None => common.source()?,
            };
            let checks: BTreeSet<Check> = if checks.is_empty() {
                Check::all()
            } else {
                checks.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
            };
            let config = SweepConfig {
                source,
                checks,
                tolerances: common.tolerances(),
                execution: Execution::with_jobs(jobs),
                strict,
            };
            let report = sweep(&config)?;
            for line in report.record_lines() {
                writeln!(out, "{line}")?;
            }
            eprintln!("{}", report.summary_json());
            Findings(!report.is_clean())
        }
    };
    out.flush()?;
    Ok(findings)
}

fn extremal_fields(g: &Graph, tol: Tolerances) -> Result<Map<String, Value>> {
    let mut obj = Map::new();
    obj.insert("witness".into(), serde_json::to_value(detect_join_form(g, tol)?)?);
    obj.insert("verdict".into(), serde_json::to_value(equality_case_verdict(g, tol)?)?);
    Ok(obj)
}

/// Runs `f` on every input graph. A graph the command does not apply to (for
/// example a disconnected graph for `tough`) yields an `error` record and a
/// nonzero exit status.
fn per_graph<W: Write>(
    common: &Common,
    out: &mut W,
    f: impl Fn(&Graph) -> Result<Map<String, Value>>,
) -> Result<Findings> {
    let mut failed = false;
    for g in common.graphs()? {
        let fields = match f(&g) {
            Ok(fields) => fields,
            Err(e) => {
                failed = true;
                let mut obj = Map::new();
                obj.insert("error".into(), json!(format!("{e:#}")));
                obj
            }
        };
        emit(common, out, &g, fields)?;
    }
    if failed {
        bail!("some graphs could not be processed");
    }
    Ok(Findings(false))
}

fn emit<W: Write>(common: &Common, out: &mut W, g: &Graph, fields: Map<String, Value>) -> Result<()> {
    let mut obj = Map::new();
    obj.insert("graph6".into(), json!(write_graph6(g)?));
    obj.extend(fields);
    if common.table {
        let width = obj.keys().map(String::len).max().unwrap_or(0);
        for (key, value) in &obj {
            let shown = match value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            writeln!(out, "{key:<width$}  {shown}")?;
        }
        writeln!(out)?;
    } else {
        writeln!(out, "{}", Value::Object(obj))?;
    }
    Ok(())
}
