//! Metric partitions, k-antiresolving sets and the recognition of graphs
//! with `Adim(G) = 1`.
//!
//! For a vertex set `S`, two outside vertices are equivalent when their
//! distance vectors to `S` coincide; `S` is a k-antiresolving set where `k`
//! is the smallest equivalence class. `Adim(G)` is the largest `k` realized
//! by any nonempty proper `S`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs, ecc_profile, vertex_connectivity, DistanceOracle, EccProfile, Graph, Vertex};
use crate::structure;

/// Classes of `V \ S` under equality of distance vectors to `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricPartition {
    /// `S` in the caller's order, duplicates removed.
    pub set: Vec<Vertex>,
    /// Classes sorted internally and ordered by smallest member.
    pub classes: Vec<Vec<Vertex>>,
    /// `r(x | S)` shared by the members of each class.
    pub representations: Vec<Vec<u32>>,
    /// Smallest class size.
    pub k: usize,
}

fn validate_set(g: &Graph, set: &[Vertex]) -> Result<Vec<Vertex>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut seen = vec![false; g.n()];
    let mut out = Vec::with_capacity(set.len());
    for &v in set {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, order: g.n() });
        }
        if !seen[v] {
            seen[v] = true;
            out.push(v);
        }
    }
    if out.len() == g.n() {
        return Err(Error::FullSet);
    }
    Ok(out)
}

pub fn partition_by(g: &Graph, set: &[Vertex]) -> Result<MetricPartition> {
    g.require_connected()?;
    let set = validate_set(g, set)?;
    let rows: Vec<Vec<u32>> = set.iter().map(|&s| bfs(g, s)).collect();
    let mut in_set = vec![false; g.n()];
    set.iter().for_each(|&s| in_set[s] = true);

    let mut by_rep: BTreeMap<Vec<u32>, Vec<Vertex>> = BTreeMap::new();
    for x in (0..g.n()).filter(|&x| !in_set[x]) {
        let rep = rows.iter().map(|r| r[x]).collect();
        by_rep.entry(rep).or_default().push(x);
    }
    let mut pairs: Vec<(Vec<u32>, Vec<Vertex>)> = by_rep.into_iter().collect();
    pairs.sort_by_key(|(_, class)| class[0]);
    let k = pairs.iter().map(|(_, c)| c.len()).min().unwrap_or(0);
    let (representations, classes) = pairs.into_iter().unzip();
    Ok(MetricPartition {
        set,
        classes,
        representations,
        k,
    })
}

/// Incremental partition of `V \ S` used by the recognition loop. Class ids
/// are refined one distance row at a time, so no vectors are materialized.
struct Refinement {
    in_set: Vec<bool>,
    class: Vec<u32>,
    scratch: Vec<(u32, u32, u32)>,
}

impl Refinement {
    fn new(n: usize) -> Self {
        Self {
            in_set: vec![false; n],
            class: vec![0; n],
            scratch: Vec::with_capacity(n),
        }
    }

    fn reset(&mut self) {
        self.in_set.iter_mut().for_each(|b| *b = false);
        self.class.iter_mut().for_each(|c| *c = 0);
    }

    /// Splits every class by the distances in `row`.
    fn refine(&mut self, row: &[u32]) {
        self.scratch.clear();
        for (x, &inside) in self.in_set.iter().enumerate() {
            if !inside {
                self.scratch.push((self.class[x], row[x], x as u32));
            }
        }
        self.scratch.sort_unstable();
        let mut id = 0u32;
        for i in 0..self.scratch.len() {
            let (c, d, x) = self.scratch[i];
            if i > 0 {
                let (pc, pd, _) = self.scratch[i - 1];
                if (pc, pd) != (c, d) {
                    id += 1;
                }
            }
            self.class[x as usize] = id;
        }
    }

    /// Smallest class size and the members of singleton classes.
    fn min_class(&mut self) -> Option<(usize, Vec<Vertex>)> {
        self.scratch.clear();
        for (x, &inside) in self.in_set.iter().enumerate() {
            if !inside {
                self.scratch.push((self.class[x], 0, x as u32));
            }
        }
        if self.scratch.is_empty() {
            return None;
        }
        self.scratch.sort_unstable();
        let mut min = usize::MAX;
        let mut singles = Vec::new();
        let mut start = 0;
        for i in 1..=self.scratch.len() {
            if i == self.scratch.len() || self.scratch[i].0 != self.scratch[start].0 {
                let len = i - start;
                min = min.min(len);
                if len == 1 {
                    singles.push(self.scratch[start].2 as Vertex);
                }
                start = i;
            }
        }
        Some((min, singles))
    }
}

/// Distance rows for the recognition loop: cached for moderate orders,
/// recomputed on demand for very large graphs.
enum Rows<'g> {
    Cached(DistanceOracle<'g>),
    Fresh(&'g Graph),
}

/// Above this order rows are not retained (a full cache would need `4n²` bytes).
const ROW_CACHE_LIMIT: usize = 8192;

impl<'g> Rows<'g> {
    fn new(g: &'g Graph) -> Self {
        if g.n() <= ROW_CACHE_LIMIT {
            Rows::Cached(DistanceOracle::new_unchecked(g))
        } else {
            Rows::Fresh(g)
        }
    }

    fn with_row<R>(&self, u: Vertex, f: impl FnOnce(&[u32]) -> R) -> R {
        match self {
            Rows::Cached(o) => f(o.row(u)),
            Rows::Fresh(g) => f(&bfs(g, u)),
        }
    }
}

/// A k-antiresolving set together with its `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "S")]
    pub set: Vec<Vertex>,
    pub k: usize,
}

/// One pass of the recognition loop from `start`. Returns the set and `k`
/// as soon as some `k > 1` appears, or `None` once `S` swallows `V`.
fn grow_from(rows: &Rows<'_>, refinement: &mut Refinement, start: Vertex) -> Option<Witness> {
    refinement.reset();
    let mut set = vec![start];
    let mut pending = vec![start];
    refinement.in_set[start] = true;
    loop {
        for &s in &pending {
            rows.with_row(s, |row| refinement.refine(row));
        }
        let (k, singles) = refinement.min_class()?;
        if k > 1 {
            return Some(Witness { set, k });
        }
        for &x in &singles {
            refinement.in_set[x] = true;
        }
        set.extend_from_slice(&singles);
        pending = singles;
    }
}

#[derive(Debug)]
struct Timeout;

/// Runs the loop over all start vertices in ascending order. The first
/// start (by id) that exposes a `k > 1` supplies the witness.
fn run_adim1(g: &Graph, deadline: Option<Instant>) -> std::result::Result<Option<Witness>, Timeout> {
    let n = g.n();
    let rows = Rows::new(g);
    let expired = || deadline.is_some_and(|d| Instant::now() >= d);
    if n < 128 {
        let mut refinement = Refinement::new(n);
        for v in 0..n {
            if expired() {
                return Err(Timeout);
            }
            if let Some(w) = grow_from(&rows, &mut refinement, v) {
                return Ok(Some(w));
            }
        }
        return Ok(None);
    }
    let found = (0..n).into_par_iter().map_init(
        || Refinement::new(n),
        |refinement, v| {
            if expired() {
                return Err(Timeout);
            }
            Ok(grow_from(&rows, refinement, v))
        },
    );
    match found.find_map_first(|r| match r {
        Ok(Some(w)) => Some(Ok(w)),
        Ok(None) => None,
        Err(t) => Some(Err(t)),
    }) {
        None => Ok(None),
        Some(Ok(w)) => Ok(Some(w)),
        Some(Err(t)) => Err(t),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    IsOne,
    NotOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// Which argument produced a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    /// `Adim(G) <= Δ(G)`.
    MaxDegree,
    /// `V \ M` is an `|M|`-ARS for a nontrivial module `M`.
    Module,
    /// Diameter-two graphs have `Adim >= 2`.
    DiameterTwo,
    /// `Adim(G) >= min{κ(G), #ε(G)}`.
    ConnectivityEcc,
    /// κ-regular, diameter two, `κ <= (n-1)/2` gives `Adim = κ`.
    RegularDiameterTwo,
    /// The recognition loop.
    Adim1,
    /// Exhaustive search over all subsets.
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub kind: BoundKind,
    pub value: usize,
    pub source: BoundSource,
}

/// Verdict on `Adim(G) = 1` together with every bound established on the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdimReport {
    /// `None` only in partial reports returned when a budget runs out.
    pub verdict: Option<Verdict>,
    pub witness: Option<Witness>,
    pub bounds: Vec<Bound>,
    pub exact: Option<usize>,
    /// Stage that settled the verdict.
    pub decided_by: Option<BoundSource>,
}

impl AdimReport {
    fn new(g: &Graph) -> Self {
        Self {
            verdict: None,
            witness: None,
            bounds: vec![Bound {
                kind: BoundKind::Upper,
                value: g.max_degree(),
                source: BoundSource::MaxDegree,
            }],
            exact: None,
            decided_by: None,
        }
    }

    fn push(&mut self, kind: BoundKind, value: usize, source: BoundSource) {
        self.bounds.push(Bound { kind, value, source });
    }

    pub fn best_lower(&self) -> usize {
        self.bounds
            .iter()
            .filter(|b| b.kind == BoundKind::Lower)
            .map(|b| b.value)
            .max()
            .unwrap_or(1)
    }

    pub fn best_upper(&self) -> Option<usize> {
        self.bounds
            .iter()
            .filter(|b| b.kind == BoundKind::Upper)
            .map(|b| b.value)
            .min()
    }

    pub fn is_one(&self) -> Option<bool> {
        self.verdict.map(|v| v == Verdict::IsOne)
    }

    fn settle_not_one(&mut self, witness: Witness, source: BoundSource) {
        self.verdict = Some(Verdict::NotOne);
        self.witness = Some(witness);
        self.decided_by = Some(source);
    }
}

fn require_order(g: &Graph) -> Result<()> {
    g.require_connected()?;
    if g.n() < 2 {
        return Err(Error::InvalidParameter(
            "antiresolving sets need at least two vertices".into(),
        ));
    }
    Ok(())
}

/// The recognition loop: seeds `S` with each vertex in turn and absorbs
/// singleton classes until either `S = V` or a class structure with
/// `k > 1` appears.
pub fn adim1_check(g: &Graph) -> Result<AdimReport> {
    require_order(g)?;
    let mut report = AdimReport::new(g);
    apply_adim1(g, &mut report, None).map_err(|_| unreachable_timeout())?;
    Ok(report)
}

fn unreachable_timeout() -> Error {
    Error::InvalidParameter("unexpected timeout without deadline".into())
}

fn apply_adim1(
    g: &Graph,
    report: &mut AdimReport,
    deadline: Option<Instant>,
) -> std::result::Result<(), Timeout> {
    match run_adim1(g, deadline)? {
        Some(w) => {
            report.push(BoundKind::Lower, w.k, BoundSource::Adim1);
            report.settle_not_one(w, BoundSource::Adim1);
        }
        None => {
            report.push(BoundKind::Upper, 1, BoundSource::Adim1);
            report.verdict = Some(Verdict::IsOne);
            report.decided_by = Some(BoundSource::Adim1);
        }
    }
    Ok(())
}

/// Exact `Adim(G)` and `adim_k(G)` for every realized `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdimTable {
    pub adim: usize,
    /// `k -> adim_k(G)`.
    pub adim_k: BTreeMap<usize, usize>,
    /// One smallest k-ARS per realized `k`.
    pub witnesses: BTreeMap<usize, Vec<Vertex>>,
}

pub const DEFAULT_ORACLE_LIMIT: usize = 12;

/// Brute force over every nonempty proper subset, in order of size, so the
/// first set seen for each `k` is a smallest one.
pub fn adim_oracle(g: &Graph, limit: usize) -> Result<AdimTable> {
    let n = g.n();
    if n > limit || n > 30 {
        return Err(Error::TooLarge { order: n, limit: limit.min(30) });
    }
    require_order(g)?;
    let oracle = DistanceOracle::new_unchecked(g);
    oracle.fill();
    let rows: Vec<&[u32]> = (0..n).map(|u| oracle.row(u)).collect();

    let mut adim_k = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for size in 1..n {
        let masks = subsets_of_size(n, size);
        let per_size: Vec<(usize, u32)> = masks
            .par_iter()
            .map_init(Vec::new, |keys, &mask| (subset_k(&rows, n, mask, keys), mask))
            .collect();
        for (k, mask) in per_size {
            if let std::collections::btree_map::Entry::Vacant(e) = adim_k.entry(k) {
                e.insert(size);
                witnesses.insert(k, (0..n).filter(|&v| mask & (1 << v) != 0).collect());
            }
        }
    }
    let adim = *adim_k.keys().next_back().expect("n >= 2 gives at least one subset");
    Ok(AdimTable {
        adim,
        adim_k,
        witnesses,
    })
}

/// All `n`-bit masks with `size` bits set, ascending.
fn subsets_of_size(n: usize, size: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if size == 0 || size > n {
        return out;
    }
    let mut mask: u32 = (1u32 << size) - 1;
    let limit: u64 = 1u64 << n;
    while (mask as u64) < limit {
        out.push(mask);
        // Gosper's hack
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        if r == 0 {
            break;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}

/// Minimum class size of the partition induced by `mask`. Distance vectors
/// are packed five bits per coordinate when they fit in 128 bits.
fn subset_k(rows: &[&[u32]], n: usize, mask: u32, keys: &mut Vec<u128>) -> usize {
    let members: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
    keys.clear();
    if members.len() * 5 <= 128 {
        for x in (0..n).filter(|&x| mask & (1 << x) == 0) {
            let mut key = 0u128;
            for &s in &members {
                key = (key << 5) | rows[s][x] as u128;
            }
            keys.push(key);
        }
        keys.sort_unstable();
        min_run(keys)
    } else {
        let mut wide: Vec<Vec<u32>> = (0..n)
            .filter(|&x| mask & (1 << x) == 0)
            .map(|x| members.iter().map(|&s| rows[s][x]).collect())
            .collect();
        wide.sort_unstable();
        min_run(&wide)
    }
}

fn min_run<T: PartialEq>(sorted: &[T]) -> usize {
    let mut min = usize::MAX;
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i] != sorted[start] {
            min = min.min(i - start);
            start = i;
        }
    }
    min
}

/// `min{κ(G), #ε(G)}` with the singleton witness realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityEccBound {
    pub bound: usize,
    pub kappa: usize,
    pub sharp_ecc: usize,
    /// `{x}` with `#ε(x) = #ε(G)`; it is a k-ARS for some `k >= bound`.
    pub witness: Witness,
}

pub fn bound_connectivity_ecc(g: &Graph) -> Result<ConnectivityEccBound> {
    require_order(g)?;
    let profile = ecc_profile(g)?;
    Ok(connectivity_ecc_from(g, &profile, vertex_connectivity(g)))
}

fn connectivity_ecc_from(g: &Graph, profile: &EccProfile, kappa: usize) -> ConnectivityEccBound {
    let x = profile.sharp_ecc_vertex();
    let k = partition_by(g, &[x]).expect("connected, n >= 2").k;
    ConnectivityEccBound {
        bound: kappa.min(profile.sharp_ecc()),
        kappa,
        sharp_ecc: profile.sharp_ecc(),
        witness: Witness { set: vec![x], k },
    }
}

/// `Some(2)` exactly when `diam(G) = 2`.
pub fn bound_diam2(g: &Graph) -> Result<Option<usize>> {
    g.require_connected()?;
    Ok((ecc_profile(g)?.diameter == 2).then_some(2))
}

/// A 2-ARS for a diameter-two graph, following the case analysis of the
/// diameter-two bound: a support vertex of a leaf, a vertex whose first two
/// levels both have two members, the first level of a vertex with a twin
/// antipode, or that antipode itself.
pub fn diam2_witness(g: &Graph) -> Result<Option<Witness>> {
    g.require_connected()?;
    let oracle = DistanceOracle::new_unchecked(g);
    if (0..g.n()).any(|u| oracle.eccentricity(u) > 2) || g.is_complete() {
        return Ok(None);
    }
    let set = diam2_set(g, &oracle);
    let k = partition_by(g, &set)?.k;
    debug_assert!(k >= 2, "diameter-two witness must have k >= 2");
    Ok(Some(Witness { set, k }))
}

fn diam2_set(g: &Graph, oracle: &DistanceOracle<'_>) -> Vec<Vertex> {
    if let Some(x) = (0..g.n()).find(|&v| g.degree(v) == 1) {
        return vec![g.neighbors(x)[0]];
    }
    let x = 0;
    let levels = oracle.levels(x);
    if levels[2].len() >= 2 {
        return vec![x];
    }
    let y = levels[2][0];
    if g.neighbors(x) == g.neighbors(y) {
        return levels[1].clone();
    }
    vec![y]
}

/// `Adim(G) = κ(G)` for κ-regular diameter-two graphs with `κ <= (n-1)/2`.
pub fn exact_regular_diam2(g: &Graph) -> Result<Option<usize>> {
    g.require_connected()?;
    if g.n() < 2 || ecc_profile(g)?.diameter != 2 || !g.is_regular() {
        return Ok(None);
    }
    Ok(exact_regular_from(g, vertex_connectivity(g)))
}

fn exact_regular_from(g: &Graph, kappa: usize) -> Option<usize> {
    (g.is_regular() && g.max_degree() == kappa && 2 * kappa < g.n()).then_some(kappa)
}

/// Knobs for [`analyze`].
#[derive(Clone, Debug)]
pub struct EffortPolicy {
    /// Run the exhaustive oracle for an exact value when `n` is at most this (0 disables).
    pub oracle_limit: usize,
    /// Wall-clock budget for the recognition loop.
    pub time_limit: Option<Duration>,
    /// Above this order the module search is restricted to twin classes.
    pub module_closure_limit: usize,
    /// Above this order the κ / #ε stage is skipped.
    pub connectivity_limit: usize,
    /// Above this order the diameter-two stage is skipped. Below it, one BFS
    /// with eccentricity above two skips it as well.
    pub diameter_limit: usize,
}

impl Default for EffortPolicy {
    fn default() -> Self {
        Self {
            oracle_limit: 0,
            time_limit: None,
            module_closure_limit: 64,
            connectivity_limit: 1024,
            diameter_limit: 4096,
        }
    }
}

impl EffortPolicy {
    pub fn with_oracle(mut self, limit: usize) -> Self {
        self.oracle_limit = limit;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

/// Cheapest-first cascade: module bound, diameter two, κ / #ε, then the
/// recognition loop. Stops as soon as the verdict is known, then optionally
/// runs the oracle for an exact value.
pub fn analyze(g: &Graph, policy: &EffortPolicy) -> Result<AdimReport> {
    require_order(g)?;
    let started = Instant::now();
    let n = g.n();
    let mut report = AdimReport::new(g);

    let module = if n <= policy.module_closure_limit {
        structure::find_nontrivial_module(g).module
    } else {
        structure::largest_twin_class(g)
    };
    if let Some(m) = module {
        report.push(BoundKind::Lower, m.len(), BoundSource::Module);
        let outside: Vec<Vertex> = (0..n).filter(|v| m.binary_search(v).is_err()).collect();
        let k = partition_by(g, &outside)?.k;
        report.settle_not_one(Witness { set: outside, k }, BoundSource::Module);
    }

    let mut profile = None;
    if report.verdict.is_none() {
        let cheap_reject = bfs(g, 0).iter().any(|&d| d > 2);
        if !cheap_reject && n <= policy.diameter_limit {
            let p = ecc_profile(g)?;
            if p.diameter == 2 {
                report.push(BoundKind::Lower, 2, BoundSource::DiameterTwo);
                let w = diam2_witness(g)?.expect("diameter two");
                report.settle_not_one(w, BoundSource::DiameterTwo);
            }
            profile = Some(p);
        }
    }

    if report.verdict.is_none() && n <= policy.connectivity_limit {
        let p = match profile.take() {
            Some(p) => p,
            None => ecc_profile(g)?,
        };
        let kappa = vertex_connectivity(g);
        let b = connectivity_ecc_from(g, &p, kappa);
        if b.bound >= 2 {
            report.push(BoundKind::Lower, b.bound, BoundSource::ConnectivityEcc);
            report.settle_not_one(b.witness, BoundSource::ConnectivityEcc);
        }
    }

    if report.verdict.is_none() {
        let deadline = policy.time_limit.map(|t| started + t);
        if apply_adim1(g, &mut report, deadline).is_err() {
            return Err(Error::BudgetExceeded {
                limit: policy.time_limit.unwrap_or_default(),
                partial: Box::new(report),
            });
        }
    }

    if n <= policy.oracle_limit {
        if report.verdict == Some(Verdict::NotOne) {
            if let Some(k) = exact_regular_diam2(g)? {
                report.push(BoundKind::Lower, k, BoundSource::RegularDiameterTwo);
                report.push(BoundKind::Upper, k, BoundSource::RegularDiameterTwo);
            }
        }
        let table = adim_oracle(g, policy.oracle_limit)?;
        report.push(BoundKind::Lower, table.adim, BoundSource::Oracle);
        report.push(BoundKind::Upper, table.adim, BoundSource::Oracle);
        report.exact = Some(table.adim);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, petersen, t_star_times_even_path};

    fn classes(p: &MetricPartition) -> Vec<Vec<Vertex>> {
        p.classes.clone()
    }

    #[test]
    fn partition_examples() {
        let p4 = path(4).unwrap();
        let part = partition_by(&p4, &[1]).unwrap();
        assert_eq!(classes(&part), vec![vec![0, 2], vec![3]]);
        assert_eq!(part.representations, vec![vec![1], vec![2]]);
        assert_eq!(part.k, 1);

        let p5 = path(5).unwrap();
        let part = partition_by(&p5, &[2]).unwrap();
        assert_eq!(classes(&part), vec![vec![0, 4], vec![1, 3]]);
        assert_eq!(part.k, 2);

        let c4 = cycle(4).unwrap();
        let part = partition_by(&c4, &[0, 2]).unwrap();
        assert_eq!(classes(&part), vec![vec![1, 3]]);
        assert_eq!(part.representations, vec![vec![1, 1]]);
        assert_eq!(part.k, 2);
    }

    #[test]
    fn partition_errors() {
        let p4 = path(4).unwrap();
        assert!(matches!(partition_by(&p4, &[]), Err(Error::EmptySet)));
        assert!(matches!(partition_by(&p4, &[0, 1, 2, 3]), Err(Error::FullSet)));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(partition_by(&split, &[0]), Err(Error::DisconnectedGraph)));
    }

    #[test]
    fn adim1_examples() {
        assert_eq!(adim1_check(&path(4).unwrap()).unwrap().verdict, Some(Verdict::IsOne));
        let p5 = adim1_check(&path(5).unwrap()).unwrap();
        assert_eq!(p5.verdict, Some(Verdict::NotOne));
        let w = p5.witness.unwrap();
        assert_eq!(w.k, 2);
        assert_eq!(partition_by(&path(5).unwrap(), &w.set).unwrap().k, 2);
        let tp = t_star_times_even_path(1).unwrap();
        assert_eq!(adim1_check(&tp).unwrap().verdict, Some(Verdict::IsOne));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(adim_oracle(&petersen(), 12).unwrap().adim, 3);
        let k4 = adim_oracle(&complete(4).unwrap(), 12).unwrap();
        assert_eq!(k4.adim, 3);
        assert_eq!(k4.adim_k[&3], 1);
        let c4 = adim_oracle(&cycle(4).unwrap(), 12).unwrap();
        assert_eq!(c4.adim, 2);
        assert_eq!(c4.witnesses[&2], vec![0, 2]);
        assert!(matches!(
            adim_oracle(&path(13).unwrap(), 12),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn subsets_by_size() {
        assert_eq!(subsets_of_size(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        let total: usize = (1..20).map(|s| subsets_of_size(20, s).len()).sum();
        assert_eq!(total, (1 << 20) - 2);
    }

    #[test]
    fn connectivity_ecc_examples() {
        let pet = bound_connectivity_ecc(&petersen()).unwrap();
        assert_eq!((pet.kappa, pet.sharp_ecc, pet.bound), (3, 6, 3));
        assert!(pet.witness.k >= 3);
        assert_eq!(bound_connectivity_ecc(&path(4).unwrap()).unwrap().bound, 1);
        let c6 = bound_connectivity_ecc(&cycle(6).unwrap()).unwrap();
        assert_eq!((c6.kappa, c6.sharp_ecc, c6.bound), (2, 1, 1));
    }

    #[test]
    fn diameter_two_examples() {
        assert_eq!(bound_diam2(&petersen()).unwrap(), Some(2));
        assert_eq!(bound_diam2(&path(4).unwrap()).unwrap(), None);
        assert_eq!(bound_diam2(&cycle(5).unwrap()).unwrap(), Some(2));
        assert!(diam2_witness(&cycle(5).unwrap()).unwrap().unwrap().k >= 2);
    }

    #[test]
    fn regular_diameter_two_examples() {
        assert_eq!(exact_regular_diam2(&petersen()).unwrap(), Some(3));
        assert_eq!(exact_regular_diam2(&complete(4).unwrap()).unwrap(), None);
        assert_eq!(exact_regular_diam2(&cycle(5).unwrap()).unwrap(), Some(2));
        assert_eq!(adim_oracle(&cycle(5).unwrap(), 12).unwrap().adim, 2);
    }

    #[test]
    fn analyze_examples() {
        let policy = EffortPolicy::default();
        let pet = analyze(&petersen(), &policy).unwrap();
        assert_eq!(pet.verdict, Some(Verdict::NotOne));
        assert_eq!(pet.decided_by, Some(BoundSource::DiameterTwo));
        assert!(!pet.bounds.iter().any(|b| b.source == BoundSource::Adim1));

        let p6 = analyze(&path(6).unwrap(), &policy).unwrap();
        assert_eq!(p6.verdict, Some(Verdict::IsOne));
        assert_eq!(p6.decided_by, Some(BoundSource::Adim1));

        let c4 = analyze(&cycle(4).unwrap(), &policy).unwrap();
        assert_eq!(c4.verdict, Some(Verdict::NotOne));
        assert_eq!(c4.decided_by, Some(BoundSource::Module));
        let w = c4.witness.unwrap();
        assert_eq!(partition_by(&cycle(4).unwrap(), &w.set).unwrap().k, w.k);
    }

    #[test]
    fn analyze_with_oracle_fills_exact() {
        let r = analyze(&petersen(), &EffortPolicy::default().with_oracle(12)).unwrap();
        assert_eq!(r.exact, Some(3));
        assert!(r.best_lower() <= r.best_upper().unwrap());
    }

    #[test]
    fn report_json_shape() {
        let r = adim1_check(&path(5).unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"], "NOT_ONE");
        assert_eq!(v["witness"]["k"], 2);
        assert!(v["witness"]["S"].is_array());
        assert_eq!(v["bounds"][0]["kind"], "UPPER");
        assert_eq!(v["bounds"][0]["source"], "max_degree");
    }
}
