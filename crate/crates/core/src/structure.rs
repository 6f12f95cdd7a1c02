//! Structural tests: modules and twins, tree balancing factors, geodetic
//! graphs via their shortest-path trees, and block-graph conditions.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs, biconnected_components, ecc_profile, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ModuleKind {
    /// Smallest module containing some vertex pair.
    PairClosure,
    /// Union of components of `G` or of its complement.
    DegenerateRoot,
}

/// Outcome of the module search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleWitness {
    /// Sorted nontrivial module (`1 < |M| < n`), if any.
    pub module: Option<Vec<Vertex>>,
    pub kind: Option<ModuleKind>,
    pub is_prime: bool,
}

impl ModuleWitness {
    fn prime() -> Self {
        Self {
            module: None,
            kind: None,
            is_prime: true,
        }
    }

    fn found(module: Vec<Vertex>, kind: ModuleKind) -> Self {
        Self {
            module: Some(module),
            kind: Some(kind),
            is_prime: false,
        }
    }

    /// Size of the largest known proper module, 1 for prime graphs.
    pub fn size(&self) -> usize {
        self.module.as_ref().map_or(1, Vec::len)
    }
}

/// `M` is a module when no outside vertex sees part of `M` but not all of it.
pub fn is_module(g: &Graph, module: &[Vertex]) -> bool {
    let mut inside = vec![false; g.n()];
    module.iter().for_each(|&v| inside[v] = true);
    (0..g.n()).filter(|&z| !inside[z]).all(|z| {
        let hits = module.iter().filter(|&&m| g.has_edge(z, m)).count();
        hits == 0 || hits == module.len()
    })
}

/// Union of all parts but the smallest (the last one on ties), when that is
/// a nontrivial set.
fn all_but_smallest(parts: Vec<Vec<Vertex>>, n: usize) -> Option<Vec<Vertex>> {
    let smallest = parts
        .iter()
        .enumerate()
        .rev()
        .min_by_key(|(_, p)| p.len())
        .map(|(i, _)| i)?;
    let mut module: Vec<Vertex> = parts
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != smallest)
        .flat_map(|(_, p)| p)
        .collect();
    module.sort_unstable();
    (module.len() > 1 && module.len() < n).then_some(module)
}

/// Smallest module containing `u` and `v`: repeatedly absorb splitters.
pub fn pair_closure(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vertex> {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut hits = vec![0usize; n];
    let mut size = 0;
    let mut queue = vec![u, v];
    while let Some(x) = queue.pop() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        size += 1;
        for &w in g.neighbors(x) {
            hits[w] += 1;
        }
        if queue.is_empty() {
            queue.extend((0..n).filter(|&z| !inside[z] && hits[z] > 0 && hits[z] < size));
        }
    }
    (0..n).filter(|&z| inside[z]).collect()
}

/// Finds a nontrivial module, preferring a largest one.
///
/// Degenerate roots (disconnected graph or complement) return the union of
/// all components but the smallest. Otherwise every pair closure is tried
/// and the largest proper one is returned; the graph is prime iff every
/// closure is `V`.
pub fn find_nontrivial_module(g: &Graph) -> ModuleWitness {
    let n = g.n();
    if n < 3 {
        return ModuleWitness::prime();
    }
    let comps = g.components();
    if comps.len() > 1 {
        return match all_but_smallest(comps, n) {
            Some(m) => ModuleWitness::found(m, ModuleKind::DegenerateRoot),
            None => ModuleWitness::prime(),
        };
    }
    let co = g.complement().components();
    if co.len() > 1 {
        return match all_but_smallest(co, n) {
            Some(m) => ModuleWitness::found(m, ModuleKind::DegenerateRoot),
            None => ModuleWitness::prime(),
        };
    }
    let best = (0..n)
        .into_par_iter()
        .flat_map_iter(|u| ((u + 1)..n).map(move |v| (u, v)))
        .map(|(u, v)| pair_closure(g, u, v))
        .filter(|m| m.len() < n)
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
    match best {
        Some(m) => ModuleWitness::found(m, ModuleKind::PairClosure),
        None => ModuleWitness::prime(),
    }
}

fn group_by_key<K: std::hash::Hash + Eq>(n: usize, key: impl Fn(Vertex) -> K) -> Vec<Vec<Vertex>> {
    let mut groups: HashMap<K, Vec<Vertex>> = HashMap::new();
    for v in 0..n {
        groups.entry(key(v)).or_default().push(v);
    }
    let mut out: Vec<Vec<Vertex>> = groups.into_values().filter(|g| g.len() > 1).collect();
    out.sort();
    out
}

/// Classes of false twins (equal open neighborhoods) and true twins (equal
/// closed neighborhoods). Every class is a module.
pub fn twin_classes(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut classes = group_by_key(n, |v| g.neighbors(v).to_vec());
    classes.extend(group_by_key(n, |v| {
        let mut closed = g.neighbors(v).to_vec();
        let pos = closed.binary_search(&v).unwrap_err();
        closed.insert(pos, v);
        closed
    }));
    classes.sort();
    classes
}

/// Largest twin class, trimmed to stay a proper subset of `V`.
pub fn largest_twin_class(g: &Graph) -> Option<Vec<Vertex>> {
    let mut best = twin_classes(g).into_iter().max_by_key(Vec::len)?;
    if best.len() == g.n() {
        best.pop();
    }
    (best.len() > 1).then_some(best)
}

/// All pairs `u < v` with `N(u) \ {v} = N(v) \ {u}`.
pub fn find_twins(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut pairs: Vec<(Vertex, Vertex)> = twin_classes(g)
        .iter()
        .flat_map(|c| {
            c.iter()
                .enumerate()
                .flat_map(move |(i, &u)| c[i + 1..].iter().map(move |&v| (u, v)))
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Shortest-path tree `T_u(G)` of a geodetic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedSPTree {
    pub root: Vertex,
    pub parent: Vec<Option<Vertex>>,
    pub children: Vec<Vec<Vertex>>,
    pub depth: Vec<u32>,
}

impl RootedSPTree {
    pub fn descendants(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut stack = self.children[v].clone();
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend_from_slice(&self.children[x]);
        }
        out.sort_unstable();
        out
    }

    /// Vertex set of the `u`-branch at child `v`: `{u, v} ∪ D(v)`.
    pub fn branch(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = self.descendants(v);
        out.push(v);
        out.push(self.root);
        out.sort_unstable();
        out
    }

    /// The tree as a graph on the original vertex ids.
    pub fn to_graph(&self) -> Graph {
        let edges = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)));
        Graph::new(self.parent.len(), edges).expect("parent map is a forest")
    }
}

/// `T_u(G)`; fails on the first vertex with two shortest-path parents.
pub fn sp_tree(g: &Graph, u: Vertex) -> Result<RootedSPTree> {
    g.require_connected()?;
    let depth = bfs(g, u);
    let n = g.n();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    for v in (0..n).filter(|&v| v != u) {
        let mut ups = g.neighbors(v).iter().filter(|&&w| depth[w] + 1 == depth[v]);
        let p = *ups.next().expect("connected");
        if ups.next().is_some() {
            return Err(Error::NotGeodetic(u, v));
        }
        parent[v] = Some(p);
        children[p].push(v);
    }
    Ok(RootedSPTree {
        root: u,
        parent,
        children,
        depth,
    })
}

pub fn is_geodetic(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    Ok((0..g.n()).into_par_iter().all(|u| sp_tree(g, u).is_ok()))
}

/// Branch eccentricities at a tree vertex and the balancing factor `ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchProfile {
    pub root: Vertex,
    /// `(neighbor, eccentricity of the root within that branch)`.
    pub branches: Vec<(Vertex, u32)>,
    /// Largest number of branches sharing one eccentricity (1 when none do).
    pub xi: usize,
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

fn branch_profile(t: &Graph, u: Vertex) -> BranchProfile {
    let depth = bfs(t, u);
    // Each vertex inherits the branch of its parent; process by depth.
    let mut order: Vec<Vertex> = (0..t.n()).collect();
    order.sort_by_key(|&v| depth[v]);
    let mut branch_of = vec![usize::MAX; t.n()];
    let nbrs = t.neighbors(u);
    let mut ecc = vec![1u32; nbrs.len()];
    for (i, &v) in nbrs.iter().enumerate() {
        branch_of[v] = i;
    }
    for &v in &order {
        if depth[v] < 2 {
            continue;
        }
        let p = *t
            .neighbors(v)
            .iter()
            .find(|&&w| depth[w] + 1 == depth[v])
            .expect("tree parent");
        branch_of[v] = branch_of[p];
        let b = branch_of[v];
        ecc[b] = ecc[b].max(depth[v]);
    }
    let branches: Vec<(Vertex, u32)> = nbrs.iter().copied().zip(ecc.iter().copied()).collect();
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for &e in &ecc {
        *counts.entry(e).or_default() += 1;
    }
    let xi = counts.values().copied().max().unwrap_or(1);
    BranchProfile {
        root: u,
        branches,
        xi,
    }
}

pub fn balancing_factor(t: &Graph, u: Vertex) -> Result<BranchProfile> {
    require_tree(t)?;
    if u >= t.n() {
        return Err(Error::VertexOutOfRange { vertex: u, order: t.n() });
    }
    Ok(branch_profile(t, u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TreeCheck {
    /// `ξ(v) = 1` for every vertex.
    pub holds: bool,
    /// First vertex (by id) with `ξ(v) >= 2`.
    pub violator: Option<Vertex>,
}

/// A tree has `Adim = 1` iff every vertex has balancing factor 1.
pub fn tree_adim1_check(t: &Graph) -> Result<TreeCheck> {
    require_tree(t)?;
    let violator = (0..t.n()).find(|&v| branch_profile(t, v).xi >= 2);
    Ok(TreeCheck {
        holds: violator.is_none(),
        violator,
    })
}

/// True when every shortest-path tree `T_u(G)` of a geodetic graph passes
/// [`tree_adim1_check`]. A true answer implies `Adim(G) = 1`. The converse
/// fails: ``FAE`W`` (a triangle with pendant paths) has `Adim = 1` while some
/// `T_u(G)` has a branch tie, because the tree drops a triangle edge and
/// with it distances that separate vertices in `G`.
pub fn geodetic_adim1_check(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    let trees = (0..g.n())
        .map(|u| sp_tree(g, u).map(|t| t.to_graph()))
        .collect::<Result<Vec<_>>>()?;
    Ok(trees
        .par_iter()
        .all(|t| tree_adim1_check(t).expect("shortest-path tree").holds))
}

/// Necessary conditions for a block graph to have `Adim = 1`. Any `false`
/// item proves `Adim >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockChecklist {
    pub diameter_odd: bool,
    pub prime: bool,
    pub at_most_one_non_cut_per_block: bool,
    pub pendant_blocks_are_k2: bool,
}

impl BlockChecklist {
    pub fn all_hold(&self) -> bool {
        self.diameter_odd && self.prime && self.at_most_one_non_cut_per_block && self.pendant_blocks_are_k2
    }
}

pub fn is_block_graph(g: &Graph) -> bool {
    g.is_connected()
        && biconnected_components(g).blocks.iter().all(|b| {
            b.iter()
                .enumerate()
                .all(|(i, &x)| b[i + 1..].iter().all(|&y| g.has_edge(x, y)))
        })
}

pub fn block_graph_necessary(g: &Graph) -> Result<BlockChecklist> {
    g.require_connected()?;
    if !is_block_graph(g) {
        return Err(Error::NotBlockGraph);
    }
    let dec = biconnected_components(g);
    let mut is_cut = vec![false; g.n()];
    dec.cut_vertices.iter().for_each(|&v| is_cut[v] = true);
    let cuts_in = |b: &Vec<Vertex>| b.iter().filter(|&&v| is_cut[v]).count();
    Ok(BlockChecklist {
        diameter_odd: ecc_profile(g)?.diameter % 2 == 1,
        prime: find_nontrivial_module(g).is_prime,
        at_most_one_non_cut_per_block: dec.blocks.iter().all(|b| b.len() - cuts_in(b) <= 1),
        pendant_blocks_are_k2: dec
            .blocks
            .iter()
            .filter(|b| cuts_in(b) == 1)
            .all(|b| b.len() == 2),
    })
}
