//! Experiment harness: exhaustive classification by order, random-model
//! sweeps and audits of real networks, with CSV and JSON-lines writers.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::antiresolve::{analyze, BoundSource, EffortPolicy, Verdict};
use crate::enumerate::{canonical_form, CanonicalKey, CANONICAL_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{vertex_connectivity, Graph};
use crate::ingest::{largest_component, LabeledGraph};
use crate::randgen::RandomModelConfig;

/// Version of the JSON-lines record layout.
pub const SCHEMA_VERSION: u32 = 1;

const CHUNK: usize = 4096;

/// `x` truncated (not rounded) to `digits` decimals.
pub fn truncate_decimal(x: f64, digits: usize) -> String {
    let scale = 10f64.powi(digits as i32);
    let t = (x * scale + 1e-9).floor() / scale;
    format!("{t:.digits$}")
}

fn format_histogram(h: &BTreeMap<usize, usize>) -> String {
    h.iter()
        .map(|(k, c)| format!("{k}:{c}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Whether a connected graph of order at least two is 1-metric antidimensional.
fn is_one(g: &Graph, policy: &EffortPolicy) -> Result<bool> {
    Ok(analyze(g, policy)?.is_one() == Some(true))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityCount {
    /// Density truncated to two decimals.
    pub density: String,
    pub connectivity: usize,
    pub count: usize,
}

/// One row of the exhaustive table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationRow {
    pub order: usize,
    /// All inputs of this order; set only when the stream held disconnected graphs.
    pub total: Option<usize>,
    pub connected: usize,
    pub found: usize,
    pub ratio: f64,
    /// `κ -> count` over found graphs.
    pub connectivity: BTreeMap<usize, usize>,
    pub max_density: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density_breakdown: Option<Vec<DensityCount>>,
}

impl ClassificationRow {
    pub fn ratio_text(&self) -> String {
        truncate_decimal(self.ratio, 6)
    }

    pub fn max_density_text(&self) -> String {
        self.max_density.map(|d| truncate_decimal(d, 2)).unwrap_or_default()
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Classification {
    pub rows: Vec<ClassificationRow>,
    /// Stream entries that failed to parse.
    pub malformed: usize,
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    pub policy: EffortPolicy,
    pub density_breakdown: bool,
}

#[derive(Default)]
struct OrderTally {
    inputs: usize,
    connected: usize,
    found: usize,
    connectivity: BTreeMap<usize, usize>,
    max_edges: Option<usize>,
    by_density: BTreeMap<(usize, usize), usize>,
}

impl OrderTally {
    fn merge(&mut self, other: OrderTally) {
        self.inputs += other.inputs;
        self.connected += other.connected;
        self.found += other.found;
        for (k, c) in other.connectivity {
            *self.connectivity.entry(k).or_default() += c;
        }
        self.max_edges = self.max_edges.max(other.max_edges);
        for (k, c) in other.by_density {
            *self.by_density.entry(k).or_default() += c;
        }
    }
}

fn tally_one(g: &Graph, policy: &EffortPolicy) -> Result<OrderTally> {
    let mut t = OrderTally {
        inputs: 1,
        ..Default::default()
    };
    if !g.is_connected() {
        return Ok(t);
    }
    t.connected = 1;
    if g.n() >= 2 && is_one(g, policy)? {
        t.found = 1;
        let kappa = vertex_connectivity(g);
        t.connectivity.insert(kappa, 1);
        t.max_edges = Some(g.edge_count());
        t.by_density.insert((g.edge_count(), kappa), 1);
    }
    Ok(t)
}

/// Classifies a stream of graphs, one row per order present. Disconnected
/// inputs are counted and skipped; unparsable entries are counted.
pub fn classify_stream<I>(graphs: I, opts: &ClassifyOptions) -> Result<Classification>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut tallies: BTreeMap<usize, OrderTally> = BTreeMap::new();
    let mut malformed = 0;
    let mut iter = graphs.into_iter();
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for item in iter.by_ref().take(CHUNK) {
            match item {
                Ok(g) => chunk.push(g),
                Err(e) => {
                    log::warn!("skipping malformed entry: {e}");
                    malformed += 1;
                }
            }
        }
        if chunk.is_empty() {
            break;
        }
        let partial: Vec<(usize, OrderTally)> = chunk
            .par_iter()
            .map(|g| Ok((g.n(), tally_one(g, &opts.policy)?)))
            .collect::<Result<_>>()?;
        for (n, t) in partial {
            tallies.entry(n).or_default().merge(t);
        }
    }
    let rows = tallies
        .into_iter()
        .map(|(order, t)| {
            let pairs = (order * order.saturating_sub(1) / 2).max(1) as f64;
            let density_breakdown = opts.density_breakdown.then(|| {
                t.by_density
                    .iter()
                    .rev()
                    .map(|(&(m, kappa), &count)| DensityCount {
                        density: truncate_decimal(m as f64 / pairs, 2),
                        connectivity: kappa,
                        count,
                    })
                    .collect()
            });
            ClassificationRow {
                order,
                total: (t.inputs > t.connected).then_some(t.inputs),
                connected: t.connected,
                found: t.found,
                ratio: if t.connected == 0 { 0.0 } else { t.found as f64 / t.connected as f64 },
                connectivity: t.connectivity,
                max_density: t.max_edges.map(|m| m as f64 / pairs),
                density_breakdown,
            }
        })
        .collect();
    Ok(Classification { rows, malformed })
}

/// CSV table with the columns
/// `order,total,connected,found,ratio,connectivity,max_density`.
pub fn write_classification_csv<W: Write>(out: W, rows: &[ClassificationRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["order", "total", "connected", "found", "ratio", "connectivity", "max_density"])?;
    for r in rows {
        w.write_record([
            r.order.to_string(),
            r.total.map(|t| t.to_string()).unwrap_or_default(),
            r.connected.to_string(),
            r.found.to_string(),
            r.ratio_text(),
            format_histogram(&r.connectivity),
            r.max_density_text(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Aggregate of one random-model sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub config: RandomModelConfig,
    pub generated: usize,
    pub connected: usize,
    pub found: usize,
    /// Isomorphism classes among found graphs; `None` above the canonical limit.
    pub distinct_found: Option<usize>,
    pub distinct_disabled: bool,
    pub connectivity: BTreeMap<usize, usize>,
    pub max_found_edges: Option<usize>,
    pub max_found_density: Option<f64>,
}

#[derive(Default)]
struct SweepTally {
    generated: usize,
    connected: usize,
    found: usize,
    keys: BTreeSet<CanonicalKey>,
    connectivity: BTreeMap<usize, usize>,
    max_edges: Option<usize>,
}

impl SweepTally {
    fn merge(mut self, other: SweepTally) -> SweepTally {
        self.generated += other.generated;
        self.connected += other.connected;
        self.found += other.found;
        self.keys.extend(other.keys);
        for (k, c) in other.connectivity {
            *self.connectivity.entry(k).or_default() += c;
        }
        self.max_edges = self.max_edges.max(other.max_edges);
        self
    }
}

fn sweep_sample(cfg: &RandomModelConfig, index: u64, policy: &EffortPolicy) -> Result<SweepTally> {
    let g = cfg.generate(index)?;
    let mut t = SweepTally {
        generated: 1,
        ..Default::default()
    };
    if !g.is_connected() {
        return Ok(t);
    }
    t.connected = 1;
    if g.n() >= 2 && is_one(&g, policy)? {
        t.found = 1;
        *t.connectivity.entry(vertex_connectivity(&g)).or_default() += 1;
        t.max_edges = Some(g.edge_count());
        if g.n() <= CANONICAL_LIMIT {
            t.keys.insert(canonical_form(&g)?);
        }
    }
    Ok(t)
}

/// Generates `cfg.samples` graphs, keeps the connected ones and counts the
/// 1-metric antidimensional among them. `workers = 0` uses every core. The
/// result does not depend on the worker count.
pub fn sweep(cfg: &RandomModelConfig, workers: usize) -> Result<SweepRecord> {
    sweep_with(cfg, workers, &EffortPolicy::default())
}

pub fn sweep_with(cfg: &RandomModelConfig, workers: usize, policy: &EffortPolicy) -> Result<SweepRecord> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let samples = cfg.samples as u64;
    let tally = pool.install(|| {
        (0..samples)
            .into_par_iter()
            .map(|i| sweep_sample(cfg, i, policy))
            .try_reduce(SweepTally::default, |a, b| Ok(a.merge(b)))
    })?;
    log::debug!(
        "sweep {:?} n={}: {} generated, {} connected, {} found",
        cfg.model,
        cfg.n,
        tally.generated,
        tally.connected,
        tally.found
    );
    let distinct_disabled = cfg.n > CANONICAL_LIMIT;
    let pairs = (cfg.n * cfg.n.saturating_sub(1) / 2).max(1) as f64;
    Ok(SweepRecord {
        config: cfg.clone(),
        generated: tally.generated,
        connected: tally.connected,
        found: tally.found,
        distinct_found: (!distinct_disabled).then_some(tally.keys.len()),
        distinct_disabled,
        connectivity: tally.connectivity,
        max_found_edges: tally.max_edges,
        max_found_density: tally.max_edges.map(|m| m as f64 / pairs),
    })
}

pub fn write_sweep_csv<W: Write>(out: W, records: &[SweepRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "model",
        "n",
        "m",
        "p",
        "seed",
        "generated",
        "connected",
        "found",
        "distinct_found",
        "connectivity",
        "max_found_edges",
        "max_found_density",
    ])?;
    for r in records {
        let c = &r.config;
        w.write_record([
            serde_json::to_value(c.model)?.as_str().unwrap_or_default().to_string(),
            c.n.to_string(),
            c.m.map(|m| m.to_string()).unwrap_or_default(),
            c.p.map(|p| p.to_string()).unwrap_or_default(),
            c.seed.to_string(),
            r.generated.to_string(),
            r.connected.to_string(),
            r.found.to_string(),
            r.distinct_found.map(|d| d.to_string()).unwrap_or_default(),
            format_histogram(&r.connectivity),
            r.max_found_edges.map(|m| m.to_string()).unwrap_or_default(),
            r.max_found_density.map(|d| truncate_decimal(d, 2)).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Header statistics and verdict for one network.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NetworkAudit {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub density: f64,
    pub max_degree: usize,
    pub min_degree: usize,
    pub connected: bool,
    /// Order of the component that was analyzed.
    pub analyzed_order: usize,
    pub duplicate_edges: usize,
    pub self_loops: usize,
    pub verdict: Option<Verdict>,
    pub witness_k: Option<usize>,
    pub decided_by: Option<BoundSource>,
    pub seconds: f64,
    pub budget_exceeded: bool,
}

impl NetworkAudit {
    pub fn is_one(&self) -> Option<bool> {
        self.verdict.map(|v| v == Verdict::IsOne)
    }
}

/// Header statistics of `g`, then [`analyze`] on its largest component.
/// A budget overrun yields an audit without a verdict instead of an error.
pub fn audit_network(g: &LabeledGraph, name: &str, policy: &EffortPolicy) -> Result<NetworkAudit> {
    let graph = &g.graph;
    let connected = graph.is_connected();
    let component;
    let target = if connected {
        graph
    } else {
        log::warn!("{name} is disconnected; auditing its largest component");
        component = largest_component(g);
        &component.graph
    };
    let started = Instant::now();
    let (report, budget_exceeded) = if target.n() < 2 {
        (None, false)
    } else {
        match analyze(target, policy) {
            Ok(r) => (Some(r), false),
            Err(Error::BudgetExceeded { partial, .. }) => (Some(*partial), true),
            Err(e) => return Err(e),
        }
    };
    let seconds = started.elapsed().as_secs_f64();
    Ok(NetworkAudit {
        name: name.to_string(),
        n: graph.n(),
        m: graph.edge_count(),
        density: graph.density(),
        max_degree: graph.max_degree(),
        min_degree: graph.min_degree(),
        connected,
        analyzed_order: target.n(),
        duplicate_edges: g.stats.duplicate_edges,
        self_loops: g.stats.self_loops,
        verdict: report.as_ref().and_then(|r| r.verdict),
        witness_k: report.as_ref().and_then(|r| r.witness.as_ref().map(|w| w.k)),
        decided_by: report.as_ref().and_then(|r| r.decided_by),
        seconds,
        budget_exceeded,
    })
}

/// Default per-network budget used by the audit subcommand.
pub const AUDIT_BUDGET: Duration = Duration::from_secs(600);

pub fn write_audit_csv<W: Write>(out: W, audits: &[NetworkAudit]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "name", "n", "m", "density", "max_degree", "min_degree", "connected", "is_one", "witness_k",
        "decided_by", "seconds",
    ])?;
    for a in audits {
        w.write_record([
            a.name.clone(),
            a.n.to_string(),
            a.m.to_string(),
            format!("{:.6}", a.density),
            a.max_degree.to_string(),
            a.min_degree.to_string(),
            a.connected.to_string(),
            a.is_one().map(|b| b.to_string()).unwrap_or_default(),
            a.witness_k.map(|k| k.to_string()).unwrap_or_default(),
            a.decided_by
                .map(|d| serde_json::to_value(d).map(|v| v.as_str().unwrap_or_default().to_string()))
                .transpose()?
                .unwrap_or_default(),
            format!("{:.3}", a.seconds),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonLine<'a, C: Serialize, M: Serialize> {
    schema: u32,
    #[serde(rename = "type")]
    kind: &'a str,
    config: C,
    metrics: M,
}

/// Appends one `{schema, type, config, metrics}` record and a newline.
pub fn write_json_line<W: Write, C: Serialize, M: Serialize>(
    mut out: W,
    kind: &str,
    config: C,
    metrics: M,
) -> Result<()> {
    let line = JsonLine {
        schema: SCHEMA_VERSION,
        kind,
        config,
        metrics,
    };
    serde_json::to_writer(&mut out, &line)?;
    out.write_all(b"\n")?;
    Ok(())
}
