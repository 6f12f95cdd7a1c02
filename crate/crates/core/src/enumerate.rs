//! Isomorph-free generation of small connected graphs and free trees.
//!
//! Dedup runs through [`canonical_form`], an individualization-refinement
//! search over equitable partitions that keeps the lexicographically
//! smallest adjacency bit string among the leaves. Subtrees that are images
//! of already explored ones under a known automorphism are skipped.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 10;
/// Default cap of [`enumerate_connected`].
pub const ENUMERATION_CAP: usize = 8;
/// Cap of [`enumerate_connected_extended`]; order 9 takes about a minute
/// and a few hundred MB.
pub const EXTENDED_CAP: usize = 9;

/// Isomorphism-invariant key: the order followed by the minimal upper
/// triangle (column-major, big-endian) over all leaf labelings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

struct Canon {
    n: usize,
    adj: Vec<u16>,
    best: Option<(u64, Vec<Vertex>)>,
    first: Option<(u64, Vec<Vertex>)>,
    generators: Vec<Vec<Vertex>>,
}

type Partition = Vec<Vec<Vertex>>;

impl Canon {
    /// Splits cells by neighbor counts into each cell until stable. Sub-cells
    /// are ordered by count, which keeps the result label-invariant.
    fn refine(&self, mut cells: Partition) -> Partition {
        loop {
            let mut changed = false;
            let mut w = 0;
            while w < cells.len() {
                let mask = cells[w].iter().fold(0u16, |m, &v| m | 1 << v);
                let mut next = Vec::with_capacity(cells.len());
                for cell in &cells {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut groups: BTreeMap<u32, Vec<Vertex>> = BTreeMap::new();
                    for &v in cell {
                        groups.entry((self.adj[v] & mask).count_ones()).or_default().push(v);
                    }
                    if groups.len() > 1 {
                        changed = true;
                    }
                    next.extend(groups.into_values());
                }
                cells = next;
                w += 1;
            }
            if !changed {
                return cells;
            }
        }
    }

    fn code(&self, order: &[Vertex]) -> u64 {
        let mut code = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                code = (code << 1) | ((self.adj[order[i]] >> order[j]) & 1) as u64;
            }
        }
        code
    }

    /// Union-find orbits of the generators fixing `prefix` pointwise.
    fn orbits(&self, prefix: &[Vertex]) -> Vec<Vertex> {
        let mut parent: Vec<Vertex> = (0..self.n).collect();
        fn find(p: &mut [Vertex], mut x: Vertex) -> Vertex {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            if prefix.iter().any(|&v| g[v] != v) {
                continue;
            }
            for (v, &image) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn record_automorphism(&mut self, from: &[Vertex], to: &[Vertex]) {
        let mut gamma = vec![0; self.n];
        for i in 0..self.n {
            gamma[from[i]] = to[i];
        }
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.generators.push(gamma);
        }
    }

    fn search(&mut self, cells: Partition, prefix: &mut Vec<Vertex>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
            let code = self.code(&order);
            match &self.first {
                None => self.first = Some((code, order.clone())),
                Some((c, f)) if *c == code => {
                    let f = f.clone();
                    self.record_automorphism(&f, &order);
                }
                _ => {}
            }
            match &self.best {
                Some((c, b)) if *c == code => {
                    let b = b.clone();
                    self.record_automorphism(&b, &order);
                }
                Some((c, _)) if *c < code => {}
                _ => self.best = Some((code, order)),
            }
            return;
        };
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cells[target] {
            if !tried.is_empty() {
                let orbit = self.orbits(prefix);
                if tried.iter().any(|&t| orbit[t] == orbit[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
        }
    }
}

/// Canonical labeling of `g`: `order[i]` is the vertex placed at position `i`.
fn canonical_order(g: &Graph) -> Result<(u64, Vec<Vertex>)> {
    let n = g.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: CANONICAL_LIMIT,
        });
    }
    let adj = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | 1 << w))
        .collect();
    let mut canon = Canon {
        n,
        adj,
        best: None,
        first: None,
        generators: Vec::new(),
    };
    let root = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    canon.search(root, &mut Vec::new());
    Ok(canon.best.unwrap_or((0, Vec::new())))
}

/// Key that is equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    let (code, _) = canonical_order(g)?;
    let mut bytes = vec![g.n() as u8];
    bytes.extend_from_slice(&code.to_be_bytes());
    Ok(CanonicalKey(bytes))
}

/// `g` relabeled into its canonical labeling, together with its key.
pub fn canonical_graph(g: &Graph) -> Result<(CanonicalKey, Graph)> {
    let (_, order) = canonical_order(g)?;
    let mut perm = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    Ok((canonical_form(g)?, g.relabel(&perm)))
}

/// Adds a vertex joined to `mask` (bit `i` = old vertex `i`).
fn extend(parent: &Graph, mask: u32) -> Graph {
    let n = parent.n();
    let mut edges: Vec<(Vertex, Vertex)> = parent.edges().collect();
    edges.extend((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n)));
    Graph::new(n + 1, edges).expect("ids in range")
}

/// One augmentation level: every child from `children_of`, deduplicated and
/// returned in canonical-key order, each in its canonical labeling.
fn augment<F>(parents: &[Graph], children_of: F) -> Vec<Graph>
where
    F: Fn(&Graph) -> Vec<Graph> + Sync,
{
    let shards: Vec<Vec<(CanonicalKey, Graph)>> = parents
        .par_iter()
        .map(|p| {
            let mut local = HashSet::new();
            children_of(p)
                .into_iter()
                .filter_map(|c| {
                    let (key, canon) = canonical_graph(&c).expect("order below canonical limit");
                    local.insert(key.clone()).then_some((key, canon))
                })
                .collect()
        })
        .collect();
    let mut merged: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    for (key, g) in shards.into_iter().flatten() {
        merged.entry(key).or_insert(g);
    }
    merged.into_values().collect()
}

fn check_order(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    Ok(())
}

fn connected_up_to(n: usize) -> Vec<Graph> {
    // Every connected graph has a non-cut vertex, so each one arises from a
    // connected graph of order n - 1 plus a vertex with a nonempty neighbor set.
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        level = augment(&level, |p| (1..1u32 << k).map(|mask| extend(p, mask)).collect());
    }
    level
}

/// One representative per isomorphism class of connected graphs of order
/// `n`, in canonical labeling and a deterministic order. `n <= 8`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    check_order(n, ENUMERATION_CAP)?;
    Ok(connected_up_to(n))
}

/// [`enumerate_connected`] with the cap raised to [`EXTENDED_CAP`].
pub fn enumerate_connected_extended(n: usize) -> Result<Vec<Graph>> {
    check_order(n, EXTENDED_CAP)?;
    Ok(connected_up_to(n))
}

/// All free trees of order `n <= 10`, built by leaf augmentation.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    check_order(n, CANONICAL_LIMIT)?;
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        level = augment(&level, |p| (0..k).map(|v| extend(p, 1 << v)).collect());
    }
    Ok(level)
}

/// All graphs of order `n <= 5` (connected or not), one per class.
pub fn enumerate_all_small(n: usize) -> Result<Vec<Graph>> {
    check_order(n, 5)?;
    let pairs: Vec<(Vertex, Vertex)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut merged = BTreeMap::new();
    for mask in 0..1u32 << pairs.len() {
        let g = Graph::new(
            n,
            pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e),
        )?;
        let (key, canon) = canonical_graph(&g)?;
        merged.entry(key).or_insert(canon);
    }
    Ok(merged.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, petersen, star};

    #[test]
    fn keys_are_invariant_and_separating() {
        let p4 = path(4).unwrap();
        let a = p4.relabel(&[2, 0, 3, 1]);
        let b = p4.relabel(&[3, 1, 0, 2]);
        let k = canonical_form(&p4).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), k);
        assert_eq!(canonical_form(&b).unwrap(), k);
        assert_ne!(canonical_form(&star(4).unwrap()).unwrap(), k);
        let pet = petersen();
        let shuffled = pet.relabel(&[7, 3, 9, 0, 5, 1, 8, 2, 6, 4]);
        assert_eq!(canonical_form(&pet).unwrap(), canonical_form(&shuffled).unwrap());
        assert!(canonical_form(&complete(11).unwrap()).is_err());
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let c = cycle(6).unwrap().relabel(&[4, 1, 5, 0, 2, 3]);
        let (key, canon) = canonical_graph(&c).unwrap();
        assert_eq!(canonical_form(&canon).unwrap(), key);
        assert_eq!(canon.edge_count(), 6);
    }

    #[test]
    fn order_four_has_eleven_classes() {
        assert_eq!(enumerate_all_small(4).unwrap().len(), 11);
        assert_eq!(enumerate_all_small(5).unwrap().len(), 34);
    }

    #[test]
    fn connected_counts() {
        let want = [1, 1, 2, 6, 21, 112, 853];
        for (n, &count) in (1..=7).zip(&want) {
            let gs = enumerate_connected(n).unwrap();
            assert_eq!(gs.len(), count, "order {n}");
            assert!(gs.iter().all(|g| g.is_connected()));
        }
        assert!(matches!(
            enumerate_connected(9),
            Err(Error::OrderTooLarge { order: 9, cap: 8 })
        ));
        assert!(enumerate_connected_extended(10).is_err());
    }

    #[test]
    fn tree_counts() {
        let want = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (n, &count) in (1..=10).zip(&want) {
            let ts = enumerate_trees(n).unwrap();
            assert_eq!(ts.len(), count, "order {n}");
            assert!(ts.iter().all(Graph::is_tree));
        }
    }
}
