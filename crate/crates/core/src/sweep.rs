//! Exhaustive verification sweeps over a corpus of graphs.
//!
//! Every graph is evaluated independently, so the corpus is split into chunks
//! that run on a rayon pool (feature `parallel`) or one after another. Records
//! are sorted before they are returned, which makes the report independent of
//! scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bounds::{
    cut_partition_bounds, degree_spectral_terms, independence_upper_bounds, mixing_gap,
    semiregular_equality_check, BoundReport, Tolerances,
};
use crate::error::{Error, Result};
use crate::exact::{independence_number, toughness, Tau};
use crate::extremal::{detect_join_form, EqualityVerdict};
use crate::graph::{Graph, VertexSet};
use crate::io::{mask_count, write_graph6, CorpusSource, LabeledGraphs, ParseDiagnostic};
use crate::spectra::{spectral_summary, SpectralSummary};

/// Largest order for which the mixing check enumerates all subset pairs.
pub const MIXING_MAX_N: usize = 6;

/// Equality tolerance for the cut-partition "equality forces |X| = |Y|" check.
pub const CUT_PARTITION_EQUALITY: f64 = 1e-9;

const LABELED_CHUNK: u64 = 1 << 12;
const TEXT_CHUNK: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// τ ≥ 1/Δ, (Δ+δ)/(Δn) and the normalized-spectrum term.
    DegreeSpectral,
    /// τ ≥ the bound built from the Laplacian spectral radius.
    SpectralRadius,
    /// τ ≥ the algebraic connectivity bound.
    AlgebraicConnectivity,
    /// μ_{n−1} ≤ τ/(τ+1) μ₁, with equality exactly on the extremal family.
    FiedlerCap,
    /// The three regular-graph bounds.
    Regular,
    /// α below its three upper bounds, semiregularity when the last is tight.
    AlphaBounds,
    /// Both forms of the irregular mixing inequality over all subset pairs.
    Mixing,
    /// Size cap and separator floor for every cut and grouping of components.
    CutPartition,
    /// Laplacian bound equality if and only if the extremal join structure.
    ExtremalIff,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::DegreeSpectral,
        Check::SpectralRadius,
        Check::AlgebraicConnectivity,
        Check::FiedlerCap,
        Check::Regular,
        Check::AlphaBounds,
        Check::Mixing,
        Check::CutPartition,
        Check::ExtremalIff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::DegreeSpectral => "degree-spectral",
            Check::SpectralRadius => "spectral-radius",
            Check::AlgebraicConnectivity => "algebraic-connectivity",
            Check::FiedlerCap => "fiedler-cap",
            Check::Regular => "regular",
            Check::AlphaBounds => "alpha-bounds",
            Check::Mixing => "mixing",
            Check::CutPartition => "cut-partition",
            Check::ExtremalIff => "extremal-iff",
        }
    }

    pub fn all() -> BTreeSet<Check> {
        Check::ALL.into_iter().collect()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown check {s:?}")))
    }
}

/// How the corpus is scheduled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// A dedicated rayon pool; `jobs = 0` lets rayon pick the thread count.
    #[cfg(feature = "parallel")]
    Parallel { jobs: usize },
}

impl Default for Execution {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Execution::Parallel { jobs: 0 }
        }
        #[cfg(not(feature = "parallel"))]
        {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// `Parallel` with `jobs` threads when the feature is enabled and `jobs`
    /// is not 1, otherwise `Sequential`.
    pub fn with_jobs(jobs: usize) -> Self {
        #[cfg(feature = "parallel")]
        if jobs != 1 {
            return Execution::Parallel { jobs };
        }
        let _ = jobs;
        Execution::Sequential
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub source: CorpusSource,
    pub checks: BTreeSet<Check>,
    pub tolerances: Tolerances,
    pub execution: Execution,
    /// Abort on the first malformed corpus line instead of recording it.
    pub strict: bool,
}

impl SweepConfig {
    pub fn new(source: CorpusSource) -> Self {
        SweepConfig {
            source,
            checks: Check::all(),
            tolerances: Tolerances::default(),
            execution: Execution::default(),
            strict: false,
        }
    }
}

/// A failed check. The checked relation is `lhs ≤ rhs` (within the slack);
/// for equivalence checks `lhs` and `rhs` are the two sides as 0/1.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub check: String,
    #[serde(serialize_with = "crate::bounds::real")]
    pub lhs: f64,
    #[serde(serialize_with = "crate::bounds::real")]
    pub rhs: f64,
}

/// A graph where some bound is attained.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Interesting {
    pub graph6: String,
    pub tag: String,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepReport {
    pub corpus_id: String,
    pub graphs_checked: u64,
    pub violations: Vec<Violation>,
    pub interesting: Vec<Interesting>,
    pub diagnostics: Vec<ParseDiagnostic>,
    pub wall_time: f64,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum Record<'a> {
    Violation(&'a Violation),
    Interesting(&'a Interesting),
    ParseError { line: usize, error: String },
}

#[derive(Serialize)]
struct Summary<'a> {
    corpus: &'a str,
    graphs_checked: u64,
    violations: usize,
    interesting: usize,
    parse_errors: usize,
    wall_time: f64,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// One JSON object per record: violations, then interesting graphs, then
    /// parse diagnostics. Contains no timing, so equal sweeps give equal lines.
    pub fn record_lines(&self) -> Vec<String> {
        let violations = self.violations.iter().map(Record::Violation);
        let interesting = self.interesting.iter().map(Record::Interesting);
        let diagnostics = self.diagnostics.iter().map(|d| Record::ParseError {
            line: d.line,
            error: d.error.to_string(),
        });
        violations
            .chain(interesting)
            .chain(diagnostics)
            .map(|r| serde_json::to_string(&r).expect("record serializes"))
            .collect()
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string(&Summary {
            corpus: &self.corpus_id,
            graphs_checked: self.graphs_checked,
            violations: self.violations.len(),
            interesting: self.interesting.len(),
            parse_errors: self.diagnostics.len(),
            wall_time: self.wall_time,
        })
        .expect("summary serializes")
    }
}

/// Findings for a single graph.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub violations: Vec<Violation>,
    pub interesting: Vec<Interesting>,
}

impl Outcome {
    fn merge(&mut self, other: Outcome) {
        self.violations.extend(other.violations);
        self.interesting.extend(other.interesting);
    }
}

#[derive(Default)]
struct Partial {
    graphs: u64,
    outcome: Outcome,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.graphs += other.graphs;
        self.outcome.merge(other.outcome);
        self
    }
}

pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    if config.checks.is_empty() {
        return Err(Error::Precondition("no checks selected".into()));
    }
    let start = Instant::now();
    let eval = |g: &Graph| evaluate(g, &config.checks, config.tolerances);

    let (partial, diagnostics) = match &config.source {
        CorpusSource::Labeled { n, connected_only } => {
            // Validates n before splitting.
            LabeledGraphs::new(*n, *connected_only)?;
            let total = mask_count(*n);
            let ranges: Vec<_> = (0..total)
                .step_by(LABELED_CHUNK as usize)
                .map(|lo| lo..(lo + LABELED_CHUNK).min(total))
                .collect();
            let run = |range: std::ops::Range<u64>| -> Result<Partial> {
                let mut part = Partial::default();
                for g in LabeledGraphs::with_range(*n, *connected_only, range)? {
                    part.graphs += 1;
                    part.outcome.merge(eval(&g)?);
                }
                Ok(part)
            };
            (run_chunks(config.execution, ranges, run)?, Vec::new())
        }
        CorpusSource::Text { .. } => {
            let mut graphs = Vec::new();
            let mut diagnostics = Vec::new();
            for item in config.source.stream()? {
                match item {
                    Ok(g) => graphs.push(g),
                    Err(d) if config.strict => {
                        return Err(Error::CorpusLine { line: d.line, source: d.error })
                    }
                    Err(d) => diagnostics.push(d),
                }
            }
            let chunks: Vec<Vec<Graph>> = graphs.chunks(TEXT_CHUNK).map(<[Graph]>::to_vec).collect();
            let run = |chunk: Vec<Graph>| -> Result<Partial> {
                let mut part = Partial::default();
                for g in &chunk {
                    part.graphs += 1;
                    part.outcome.merge(eval(g)?);
                }
                Ok(part)
            };
            (run_chunks(config.execution, chunks, run)?, diagnostics)
        }
    };

    let Partial { graphs, outcome } = partial;
    let Outcome { mut violations, mut interesting } = outcome;
    violations.sort_by(|a, b| {
        (&a.graph6, &a.check)
            .cmp(&(&b.graph6, &b.check))
            .then(a.lhs.total_cmp(&b.lhs))
            .then(a.rhs.total_cmp(&b.rhs))
    });
    interesting.sort();
    Ok(SweepReport {
        corpus_id: config.source.id(),
        graphs_checked: graphs,
        violations,
        interesting,
        diagnostics,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

fn run_chunks<T, F>(execution: Execution, chunks: Vec<T>, run: F) -> Result<Partial>
where
    T: Send,
    F: Fn(T) -> Result<Partial> + Sync,
{
    match execution {
        Execution::Sequential => chunks
            .into_iter()
            .try_fold(Partial::default(), |acc, c| Ok(acc.merge(run(c)?))),
        #[cfg(feature = "parallel")]
        Execution::Parallel { jobs } => {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
            pool.install(|| {
                chunks
                    .into_par_iter()
                    .map(&run)
                    .try_reduce(Partial::default, |a, b| Ok(a.merge(b)))
            })
        }
    }
}

struct Ctx<'a> {
    g: &'a Graph,
    id: &'a str,
    tol: Tolerances,
    out: Outcome,
}

impl Ctx<'_> {
    /// Records a violation unless `lhs ≤ rhs + slack`.
    fn at_most(&mut self, check: Check, detail: &str, lhs: f64, rhs: f64) {
        // NaN on either side counts as a violation.
        let holds = lhs <= rhs + self.tol.slack;
        if !holds {
            self.violation(check, detail, lhs, rhs);
        }
    }

    fn violation(&mut self, check: Check, detail: &str, lhs: f64, rhs: f64) {
        let check = if detail.is_empty() {
            check.name().to_string()
        } else {
            format!("{}:{detail}", check.name())
        };
        self.out.violations.push(Violation { graph6: self.id.to_string(), check, lhs, rhs });
    }

    fn same(&mut self, check: Check, detail: &str, a: bool, b: bool) {
        if a != b {
            self.violation(check, detail, f64::from(u8::from(a)), f64::from(u8::from(b)));
        }
    }

    fn tag(&mut self, tag: &str) {
        self.out.interesting.push(Interesting { graph6: self.id.to_string(), tag: tag.into() });
    }

    fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.tol.equality
    }
}

/// Runs the enabled checks on one graph.
///
/// Toughness checks apply to connected non-complete graphs, the independence
/// and mixing checks to any graph with an edge. Mixing is skipped above
/// [`MIXING_MAX_N`] vertices.
pub fn evaluate(g: &Graph, checks: &BTreeSet<Check>, tol: Tolerances) -> Result<Outcome> {
    let n = g.n();
    if n < 2 {
        return Ok(Outcome::default());
    }
    let id = write_graph6(g)?;
    let mut ctx = Ctx { g, id: &id, tol, out: Outcome::default() };
    let spectra = spectral_summary(g)?;
    let on = |c: Check| checks.contains(&c);

    if g.is_connected() && !g.is_complete() {
        toughness_checks(&mut ctx, &spectra, checks)?;
    }
    if g.m() > 0 {
        if on(Check::AlphaBounds) {
            alpha_checks(&mut ctx, &spectra)?;
        }
        if on(Check::Mixing) && n <= MIXING_MAX_N {
            mixing_checks(&mut ctx, &spectra)?;
        }
    }
    Ok(ctx.out)
}

fn toughness_checks(ctx: &mut Ctx, spectra: &SpectralSummary, checks: &BTreeSet<Check>) -> Result<()> {
    let on = |c: Check| checks.contains(&c);
    let g = ctx.g;
    let cert = toughness(g)?;
    let tau = match cert.tau() {
        Tau::Finite(r) => r.to_f64(),
        Tau::Infinite => unreachable!("non-complete graphs have finite toughness"),
    };
    let report = BoundReport::from_parts(g, spectra, &cert, ctx.tol)?;

    if on(Check::DegreeSpectral) {
        let terms = degree_spectral_terms(g, spectra)?;
        let named = [
            ("inv_max_degree", terms.inv_max_degree),
            ("degree_ratio", terms.degree_ratio),
            ("normalized_spectral", terms.normalized_spectral),
        ];
        for (name, value) in named {
            if name == "normalized_spectral" && terms.xi_anomaly {
                ctx.tag("xi-anomaly");
                continue;
            }
            ctx.at_most(Check::DegreeSpectral, name, value, tau);
        }
        let best = named
            .iter()
            .filter(|(name, _)| !(terms.xi_anomaly && *name == "normalized_spectral"))
            .map(|&(_, v)| v)
            .fold(f64::NEG_INFINITY, f64::max);
        if ctx.close(best, tau) {
            ctx.tag("degree-spectral-tight");
        }
    }
    if on(Check::SpectralRadius) {
        ctx.at_most(Check::SpectralRadius, "", report.spectral_radius_bound, tau);
        if report.equality_spectral_radius {
            ctx.tag("spectral-radius-equality");
        }
    }
    if on(Check::AlgebraicConnectivity) {
        ctx.at_most(Check::AlgebraicConnectivity, "", report.algebraic_connectivity_bound, tau);
        if report.equality_algebraic_connectivity {
            ctx.tag("algebraic-connectivity-equality");
        }
    }
    if on(Check::Regular) {
        if let (Some(brouwer), Some(strict), Some(alon)) =
            (report.regular_brouwer, report.regular_brouwer_strict, report.regular_alon)
        {
            ctx.at_most(Check::Regular, "brouwer", brouwer, tau);
            // Strict inequalities are only checkable up to the slack.
            ctx.at_most(Check::Regular, "brouwer_strict", strict, tau);
            ctx.at_most(Check::Regular, "alon", alon, tau);
        }
    }

    if on(Check::FiedlerCap) || on(Check::ExtremalIff) {
        let witness = detect_join_form(g, ctx.tol)?;
        let structural = witness.as_ref().is_some_and(|w| w.eigen_condition_ok);
        if on(Check::FiedlerCap) {
            let a = spectra.algebraic_connectivity();
            ctx.at_most(Check::FiedlerCap, "", a, report.fiedler_cap);
            let equal = ctx.close(a, report.fiedler_cap);
            if equal {
                ctx.tag("fiedler-cap-equality");
            }
            ctx.same(Check::FiedlerCap, "equality-vs-structure", equal, structural);
        }
        if on(Check::ExtremalIff) {
            let verdict = EqualityVerdict::new(&report, witness.as_ref());
            ctx.same(
                Check::ExtremalIff,
                "spectral-radius",
                verdict.spectral_radius_equality,
                structural,
            );
            ctx.same(
                Check::ExtremalIff,
                "algebraic-connectivity",
                verdict.algebraic_connectivity_equality,
                structural,
            );
            if structural {
                ctx.tag("extremal-structure");
            }
        }
    }

    if on(Check::CutPartition) {
        cut_partition_checks(ctx, spectra)?;
    }
    Ok(())
}

fn cut_partition_checks(ctx: &mut Ctx, spectra: &SpectralSummary) -> Result<()> {
    let g = ctx.g;
    let all = g.vertices();
    for mask in 1..all.bits() {
        let cut = VertexSet::from_bits(mask);
        if g.component_count(cut) < 2 {
            continue;
        }
        let parts = g.components(cut)?;
        let blocks = parts.blocks();
        let rest = all - cut;
        for pick in 1..(1u64 << blocks.len()) - 1 {
            let x: VertexSet = blocks
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .fold(VertexSet::EMPTY, |acc, (_, &b)| acc | b);
            let y = rest - x;
            if x.len() > y.len() {
                continue;
            }
            let bounds = cut_partition_bounds(g, cut, x, y, spectra)?;
            let size_x = x.len() as f64;
            let size_s = cut.len() as f64;
            ctx.at_most(Check::CutPartition, "size_cap", size_x, bounds.size_cap);
            ctx.at_most(Check::CutPartition, "separator_floor", bounds.separator_floor, size_s);
            let tight = (size_x - bounds.size_cap).abs() <= CUT_PARTITION_EQUALITY
                || (size_s - bounds.separator_floor).abs() <= CUT_PARTITION_EQUALITY;
            if tight && x.len() != y.len() {
                ctx.violation(Check::CutPartition, "equality-unbalanced", size_x, y.len() as f64);
            }
        }
    }
    Ok(())
}

fn alpha_checks(ctx: &mut Ctx, spectra: &SpectralSummary) -> Result<()> {
    let cert = independence_number(ctx.g);
    let alpha = cert.alpha as f64;
    let bounds = independence_upper_bounds(ctx.g, spectra)?;
    ctx.at_most(Check::AlphaBounds, "degree_ratio", alpha, bounds.degree_ratio);
    ctx.at_most(Check::AlphaBounds, "normalized_spectral", alpha, bounds.normalized_spectral);
    ctx.at_most(Check::AlphaBounds, "laplacian_radius", alpha, bounds.laplacian_radius);
    if ctx.close(alpha, bounds.laplacian_radius) {
        ctx.tag("alpha-laplacian-equality");
        if !semiregular_equality_check(ctx.g, cert.witness, spectra, ctx.tol)? {
            ctx.violation(Check::AlphaBounds, "semiregular", 0.0, 1.0);
        }
    }
    Ok(())
}

fn mixing_checks(ctx: &mut Ctx, spectra: &SpectralSummary) -> Result<()> {
    let g = ctx.g;
    let full = 1u64 << g.n();
    for xb in 0..full {
        let x = VertexSet::from_bits(xb);
        for yb in 0..full {
            let gap = mixing_gap(g, x, VertexSet::from_bits(yb), spectra)?;
            ctx.at_most(Check::Mixing, "pair", gap.lhs, gap.rhs);
            if yb == 0 {
                ctx.at_most(Check::Mixing, "single", gap.lhs_single, gap.rhs_single);
            }
        }
    }
    Ok(())
}
