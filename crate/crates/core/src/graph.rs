//! Simple undirected graphs and the metric substrate: BFS distances,
//! eccentricity statistics, vertex connectivity, blocks, intervals and
//! shortest-path counts.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Dense vertex id in `0..n`.
pub type Vertex = usize;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and deduplicated, so two graphs built from the
/// same edge set compare equal regardless of insertion order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// are merged; self-loops and out-of-range ids are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Normalizes raw (symmetric) neighbor lists. Callers guarantee symmetry
    /// and the absence of self-loops.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut degree_sum = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        Self {
            adj,
            edge_count: degree_sum / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// `m / (n(n-1)/2)`; zero for graphs with fewer than two vertices.
    pub fn density(&self) -> f64 {
        let n = self.n();
        if n < 2 {
            return 0.0;
        }
        self.edge_count as f64 / (n * (n - 1) / 2) as f64
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as disconnected; `K_1` is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        bfs(self, 0).iter().all(|&d| d != UNREACHABLE_RAW)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedGraph)
        }
    }

    /// Induced subgraph on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Self::from_adjacency(adj)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Self::from_adjacency(adj)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
        }
        Self::from_adjacency(adj)
    }

    /// Copy of the graph without the edge `uv`.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if u >= self.n() || v >= self.n() || !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(format!("{u}-{v}")));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Self::from_adjacency(adj))
    }

    /// Tree test: connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count + 1 == self.n() && self.is_connected()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

const UNREACHABLE_RAW: u32 = u32::MAX;

/// A BFS distance, or the dedicated [`Dist::UNREACHABLE`] marker.
///
/// There is deliberately no `Add` impl: arithmetic must go through
/// [`Dist::get`] or [`Dist::checked_add`], which refuse the marker.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dist(u32);

impl Dist {
    pub const UNREACHABLE: Dist = Dist(UNREACHABLE_RAW);

    pub fn new(d: u32) -> Self {
        assert_ne!(d, UNREACHABLE_RAW, "distance overflow");
        Dist(d)
    }

    pub fn get(self) -> Option<u32> {
        (self.0 != UNREACHABLE_RAW).then_some(self.0)
    }

    pub fn is_reachable(self) -> bool {
        self.0 != UNREACHABLE_RAW
    }

    pub fn checked_add(self, other: Dist) -> Option<Dist> {
        let s = self.get()?.checked_add(other.get()?)?;
        (s != UNREACHABLE_RAW).then_some(Dist(s))
    }
}

impl fmt::Debug for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.get() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("∞"),
        }
    }
}

/// Raw BFS row; unreachable entries hold `u32::MAX`.
pub(crate) fn bfs(g: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE_RAW; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let next = dist[v] + 1;
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHABLE_RAW {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Single-source BFS distances.
pub fn distances_from(g: &Graph, u: Vertex) -> Result<Vec<Dist>> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            order: g.n(),
        });
    }
    Ok(bfs(g, u).into_iter().map(Dist).collect())
}

/// Lazily filled distance rows of a connected graph.
///
/// Each row is computed at most once; concurrent callers either observe the
/// row as absent (and race to compute the identical value) or fully written.
pub struct DistanceOracle<'g> {
    graph: &'g Graph,
    rows: Vec<OnceLock<Box<[u32]>>>,
}

impl<'g> DistanceOracle<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        graph.require_connected()?;
        Ok(Self::new_unchecked(graph))
    }

    pub(crate) fn new_unchecked(graph: &'g Graph) -> Self {
        Self {
            graph,
            rows: (0..graph.n()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        self.rows[u].get_or_init(|| bfs(self.graph, u).into_boxed_slice())
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.row(u)[v]
    }

    pub fn eccentricity(&self, u: Vertex) -> u32 {
        self.row(u).iter().copied().max().unwrap_or(0)
    }

    /// Level sets `L_i(u)` for `i = 0..=ecc(u)`.
    pub fn levels(&self, u: Vertex) -> Vec<Vec<Vertex>> {
        let row = self.row(u);
        let mut levels = vec![Vec::new(); self.eccentricity(u) as usize + 1];
        for (v, &d) in row.iter().enumerate() {
            levels[d as usize].push(v);
        }
        levels
    }

    /// Forces every row, in parallel.
    pub fn fill(&self) {
        (0..self.graph.n()).into_par_iter().for_each(|u| {
            self.row(u);
        });
    }
}

/// Eccentricity statistics of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccProfile {
    pub eccentricity: Vec<u32>,
    /// `#ε(x)`: number of vertices at distance exactly `ε(x)` from `x`.
    pub count_at_ecc: Vec<usize>,
    pub diameter: u32,
    pub center: Vec<Vertex>,
}

impl EccProfile {
    /// `#ε(G)`, the maximum of `#ε(x)` over all vertices.
    pub fn sharp_ecc(&self) -> usize {
        self.count_at_ecc.iter().copied().max().unwrap_or(0)
    }

    /// A vertex attaining `#ε(G)` (smallest id on ties).
    pub fn sharp_ecc_vertex(&self) -> Vertex {
        let best = self.sharp_ecc();
        self.count_at_ecc.iter().position(|&c| c == best).unwrap_or(0)
    }

    pub fn radius(&self) -> u32 {
        self.eccentricity.iter().copied().min().unwrap_or(0)
    }
}

pub fn ecc_profile(g: &Graph) -> Result<EccProfile> {
    g.require_connected()?;
    let stats: Vec<(u32, usize)> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let row = bfs(g, u);
            let ecc = row.iter().copied().max().unwrap_or(0);
            let count = if g.n() == 1 {
                0
            } else {
                row.iter().filter(|&&d| d == ecc).count()
            };
            (ecc, count)
        })
        .collect();
    let eccentricity: Vec<u32> = stats.iter().map(|s| s.0).collect();
    let count_at_ecc = stats.iter().map(|s| s.1).collect();
    let diameter = eccentricity.iter().copied().max().unwrap_or(0);
    let radius = eccentricity.iter().copied().min().unwrap_or(0);
    let center = (0..g.n()).filter(|&v| eccentricity[v] == radius).collect();
    Ok(EccProfile {
        eccentricity,
        count_at_ecc,
        diameter,
        center,
    })
}

/// Diameter of a connected graph.
pub fn diameter(g: &Graph) -> Result<u32> {
    Ok(ecc_profile(g)?.diameter)
}

/// Cut vertices, found with an iterative lowpoint DFS.
pub fn articulation_points(g: &Graph) -> Vec<Vertex> {
    let blocks = biconnected_components(g);
    blocks.cut_vertices
}

/// Blocks (maximal biconnected subgraphs, bridges included) and cut
/// vertices. Isolated vertices form no block.
#[derive(Clone, Debug, Default)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
}

pub fn biconnected_components(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// Unit-capacity flow network on the vertex-split graph.
struct SplitNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u8>,
    next: Vec<usize>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let nodes = 2 * g.n();
        let mut net = Self {
            head: vec![usize::MAX; nodes],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        };
        for v in 0..g.n() {
            net.add(2 * v, 2 * v + 1);
        }
        for (u, v) in g.edges() {
            net.add(2 * u + 1, 2 * v);
            net.add(2 * v + 1, 2 * u);
        }
        net
    }

    fn add(&mut self, a: usize, b: usize) {
        for (x, y, c) in [(a, b, 1u8), (b, a, 0u8)] {
            self.to.push(y);
            self.cap.push(c);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// Number of internally vertex-disjoint `s`–`t` paths, capped at `limit`.
    fn disjoint_paths(&mut self, s: Vertex, t: Vertex, limit: usize) -> usize {
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut flow = 0;
        let mut pred = vec![usize::MAX; self.head.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([source]);
            pred[source] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                let mut e = self.head[x];
                while e != usize::MAX {
                    let y = self.to[e];
                    if self.cap[e] > 0 && pred[y] == usize::MAX {
                        pred[y] = e;
                        queue.push_back(y);
                    }
                    e = self.next[e];
                }
            }
            if pred[sink] == usize::MAX {
                break;
            }
            let mut x = sink;
            while x != source {
                let e = pred[x];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                x = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Local connectivity between two non-adjacent vertices, capped at `limit`.
fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    SplitNetwork::new(g).disjoint_paths(s, t, limit)
}

/// Exact vertex connectivity `κ(G)`.
///
/// Disconnected graphs give 0 and complete graphs `n - 1`. An articulation
/// vertex short-circuits to 1; otherwise the minimum-degree vertex `v` is
/// tested against its non-neighbors and against non-adjacent pairs of its
/// neighbors, which together always meet some minimum separator.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!(n >= 2, "vertex connectivity needs at least two vertices");
    if !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !articulation_points(g).is_empty() {
        return 1;
    }
    let v = (0..n).min_by_key(|&x| g.degree(x)).unwrap();
    let mut best = g.degree(v);
    for w in 0..n {
        if w != v && !g.has_edge(v, w) {
            best = best.min(local_connectivity(g, v, w, best));
        }
    }
    let nbrs = g.neighbors(v);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(local_connectivity(g, x, y, best));
            }
        }
    }
    best
}

/// The interval `I[u,v]`: vertices lying on some shortest `u`–`v` path.
pub fn interval(g: &Graph, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
    g.require_connected()?;
    let du = bfs(g, u);
    let dv = bfs(g, v);
    Ok(interval_from_rows(&du, &dv, du[v]))
}

fn interval_from_rows(du: &[u32], dv: &[u32], d: u32) -> Vec<Vertex> {
    (0..du.len()).filter(|&w| du[w] + dv[w] == d).collect()
}

/// A pair `(u, v)` with `I[u,v] = V(G)`, if one exists (first in
/// lexicographic order). `K_1` has no pair.
pub fn has_geodetic_number_two(g: &Graph) -> Result<Option<(Vertex, Vertex)>> {
    g.require_connected()?;
    let oracle = DistanceOracle::new_unchecked(g);
    let n = g.n();
    for u in 0..n {
        let du = oracle.row(u);
        // Only vertices at maximal distance from u can pair with it.
        let ecc = du.iter().copied().max().unwrap_or(0);
        for v in (u + 1)..n {
            if du[v] != ecc {
                continue;
            }
            let dv = oracle.row(v);
            if (0..n).all(|w| du[w] + dv[w] == ecc) {
                return Ok(Some((u, v)));
            }
        }
    }
    Ok(None)
}

/// Number of distinct shortest `u`–`w` paths for every `w`, saturating at
/// `u64::MAX`.
pub fn count_shortest_paths(g: &Graph, u: Vertex) -> Result<Vec<u64>> {
    g.require_connected()?;
    let dist = bfs(g, u);
    let mut order: Vec<Vertex> = (0..g.n()).collect();
    order.sort_by_key(|&v| dist[v]);
    let mut count = vec![0u64; g.n()];
    count[u] = 1;
    for &v in &order[1..] {
        count[v] = g
            .neighbors(v)
            .iter()
            .filter(|&&w| dist[w] + 1 == dist[v])
            .fold(0u64, |acc, &w| acc.saturating_add(count[w]));
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn build_path_singleton_and_dedup() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p4.edge_count(), 3);
        let k1 = g(1, &[]);
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        let dup = g(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (1, 0)]);
        assert_eq!(dup, p4);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn bfs_examples() {
        let d = |g: &Graph, u| distances_from(g, u).unwrap();
        assert_eq!(
            d(&families::path(4).unwrap(), 0),
            [0, 1, 2, 3].map(Dist::new).to_vec()
        );
        assert_eq!(
            d(&families::cycle(4).unwrap(), 0),
            [0, 1, 2, 1].map(Dist::new).to_vec()
        );
        let two = g(4, &[(0, 1), (2, 3)]);
        let row = d(&two, 0);
        assert_eq!(&row[..2], &[Dist::new(0), Dist::new(1)]);
        assert!(!row[2].is_reachable() && !row[3].is_reachable());
        assert_eq!(row[2].checked_add(Dist::new(1)), None);
        assert!(distances_from(&two, 9).is_err());
    }

    #[test]
    fn ecc_profiles() {
        let pet = ecc_profile(&families::petersen()).unwrap();
        assert_eq!(pet.diameter, 2);
        assert_eq!(pet.sharp_ecc(), 6);

        let p5 = ecc_profile(&families::path(5).unwrap()).unwrap();
        assert_eq!(p5.center, vec![2]);
        assert_eq!(p5.count_at_ecc[2], 2);
        assert_eq!(p5.sharp_ecc(), 2);

        let k6 = ecc_profile(&families::complete(6).unwrap()).unwrap();
        assert!(k6.eccentricity.iter().all(|&e| e == 1));
        assert_eq!(k6.sharp_ecc(), 5);

        assert!(matches!(
            ecc_profile(&g(3, &[(0, 1)])),
            Err(Error::DisconnectedGraph)
        ));
    }

    /// Brute-force κ: smallest vertex set whose removal disconnects the graph
    /// (or leaves a single vertex).
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.n();
        for k in 0..n - 1 {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let keep: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
                if !g.induced_subgraph(&keep).is_connected() {
                    return k;
                }
            }
        }
        n - 1
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&families::path(4).unwrap()), 1);
        let pet = families::petersen();
        assert_eq!(brute_connectivity(&pet), 3);
        assert_eq!(vertex_connectivity(&pet), 3);
        assert_eq!(vertex_connectivity(&families::hamming(4).unwrap()), 6);
        assert_eq!(vertex_connectivity(&g(4, &[(0, 1), (2, 3)])), 0);
        assert_eq!(vertex_connectivity(&families::complete(5).unwrap()), 4);
    }

    #[test]
    fn connectivity_matches_brute_force_on_small_graphs() {
        for n in 2..=6 {
            for graph in crate::enumerate::enumerate_connected(n).unwrap() {
                assert_eq!(vertex_connectivity(&graph), brute_connectivity(&graph), "{graph:?}");
            }
        }
    }

    #[test]
    fn intervals() {
        let p4 = families::path(4).unwrap();
        assert_eq!(interval(&p4, 0, 3).unwrap(), vec![0, 1, 2, 3]);
        let c4 = families::cycle(4).unwrap();
        assert_eq!(interval(&c4, 0, 1).unwrap(), vec![0, 1]);
        assert_eq!(interval(&c4, 0, 2).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn geodetic_number_two() {
        assert_eq!(
            has_geodetic_number_two(&families::path(6).unwrap()).unwrap(),
            Some((0, 5))
        );
        assert_eq!(
            has_geodetic_number_two(&families::cycle(4).unwrap()).unwrap(),
            Some((0, 2))
        );
        assert_eq!(has_geodetic_number_two(&families::star(4).unwrap()).unwrap(), None);
    }

    #[test]
    fn shortest_path_counts() {
        let c4 = families::cycle(4).unwrap();
        assert_eq!(count_shortest_paths(&c4, 0).unwrap(), vec![1, 1, 2, 1]);
        let t = families::t_star();
        assert!(count_shortest_paths(&t, 3).unwrap().iter().all(|&c| c == 1));
        let k4 = families::complete(4).unwrap();
        assert_eq!(count_shortest_paths(&k4, 2).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn blocks_of_b2() {
        let b2 = families::b_t(2).unwrap();
        let dec = biconnected_components(&b2);
        let mut blocks = dec.blocks.clone();
        blocks.sort();
        assert_eq!(blocks, vec![vec![0, 1], vec![1, 2, 4], vec![2, 3]]);
        assert_eq!(dec.cut_vertices, vec![1, 2]);
    }
}
