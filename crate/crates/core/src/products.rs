//! Cartesian, strong and lexicographic products, the lower bounds they
//! guarantee, and an advisor that embeds a weak graph into a product.
//!
//! Product vertex `(g, h)` always has flat id `g * n(H) + h`.

use std::fmt;

use serde::Serialize;

use crate::antiresolve::{adim1_check, adim_oracle, partition_by, Verdict, Witness, DEFAULT_ORACLE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{ecc_profile, has_geodetic_number_two, Graph, Vertex};
use crate::structure::find_nontrivial_module;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ProductKind {
    Strong,
    Lexicographic,
    Cartesian,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Cartesian => "cartesian",
        })
    }
}

/// A product request.
#[derive(Clone, Debug)]
pub struct ProductSpec<'a> {
    pub kind: ProductKind,
    pub left: &'a Graph,
    pub right: &'a Graph,
}

impl ProductSpec<'_> {
    pub fn flat_id(&self, g: Vertex, h: Vertex) -> Vertex {
        g * self.right.n() + h
    }

    pub fn coordinates(&self, id: Vertex) -> (Vertex, Vertex) {
        (id / self.right.n(), id % self.right.n())
    }

    pub fn build(&self) -> Graph {
        product(self.kind, self.left, self.right)
    }
}

/// Builds `G □ H`, `G ⊠ H` or `G ∘ H`.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.n(), h.n());
    let id = |a: Vertex, b: Vertex| a * nh + b;
    let mut adj = vec![Vec::new(); ng * nh];
    for a in 0..ng {
        for b in 0..nh {
            let list = &mut adj[id(a, b)];
            // same first coordinate, adjacent second
            list.extend(h.neighbors(b).iter().map(|&b2| id(a, b2)));
            match kind {
                ProductKind::Cartesian => {
                    list.extend(g.neighbors(a).iter().map(|&a2| id(a2, b)));
                }
                ProductKind::Strong => {
                    for &a2 in g.neighbors(a) {
                        list.push(id(a2, b));
                        list.extend(h.neighbors(b).iter().map(|&b2| id(a2, b2)));
                    }
                }
                ProductKind::Lexicographic => {
                    for &a2 in g.neighbors(a) {
                        list.extend((0..nh).map(|b2| id(a2, b2)));
                    }
                }
            }
        }
    }
    Graph::from_adjacency(adj)
}

fn require_factor(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::FactorTooSmall(g.n()));
    }
    g.require_connected()
}

/// Strong products of connected factors with at least two vertices have
/// `Adim >= 2`, and `>= 3` when both factors have at least three. Any single
/// vertex is a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongBound {
    pub bound: usize,
    /// `{(0, 0)}` with its actual `k`.
    pub witness: Witness,
}

pub fn strong_product_bound(g: &Graph, h: &Graph) -> Result<StrongBound> {
    require_factor(g)?;
    require_factor(h)?;
    let bound = if g.n() >= 3 && h.n() >= 3 { 3 } else { 2 };
    let prod = product(ProductKind::Strong, g, h);
    let k = partition_by(&prod, &[0])?.k;
    Ok(StrongBound {
        bound,
        witness: Witness { set: vec![0], k },
    })
}

/// `Adim(G ∘ H) >= |M| n(H)` for a largest proper module `M` of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexicographicBound {
    pub bound: usize,
    pub module: Vec<Vertex>,
    /// `V(G ∘ H) \ (M × V(H))` and its `k`.
    pub witness: Witness,
}

pub fn lexicographic_bound(g: &Graph, h: &Graph) -> Result<LexicographicBound> {
    require_factor(g)?;
    if h.n() == 0 {
        return Err(Error::FactorTooSmall(0));
    }
    let module = find_nontrivial_module(g).module.unwrap_or_else(|| vec![0]);
    let nh = h.n();
    let in_module = |a: Vertex| module.binary_search(&a).is_ok();
    let set: Vec<Vertex> = (0..g.n() * nh).filter(|&id| !in_module(id / nh)).collect();
    let prod = product(ProductKind::Lexicographic, g, h);
    let k = partition_by(&prod, &set)?.k;
    Ok(LexicographicBound {
        bound: module.len() * nh,
        module,
        witness: Witness { set, k },
    })
}

/// `Adim(G □ H) >= 2` when either factor has two vertices at maximum
/// distance from a common vertex (and the other factor is nontrivial).
pub fn cartesian_bound_ecc(g: &Graph, h: &Graph) -> Result<Option<usize>> {
    g.require_connected()?;
    h.require_connected()?;
    let sharp = |x: &Graph| -> Result<usize> {
        Ok(if x.n() < 2 { 0 } else { ecc_profile(x)?.sharp_ecc() })
    };
    let fires = (sharp(g)? >= 2 && h.n() >= 2) || (sharp(h)? >= 2 && g.n() >= 2);
    Ok(fires.then_some(2))
}

/// `Adim(G □ H) >= 2` when both factors have geodetic number two; the two
/// product vertices built from the covering pairs form a 2-ARS.
pub fn cartesian_bound_geodetic2(g: &Graph, h: &Graph) -> Result<Option<(usize, Witness)>> {
    let (Some((g1, g2)), Some((h1, h2))) = (has_geodetic_number_two(g)?, has_geodetic_number_two(h)?)
    else {
        return Ok(None);
    };
    let nh = h.n();
    let set = vec![g1 * nh + h1, g2 * nh + h2];
    let prod = product(ProductKind::Cartesian, g, h);
    let k = partition_by(&prod, &set)?.k;
    Ok(Some((2, Witness { set, k })))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Verification {
    /// Exact value from the exhaustive oracle (product small enough).
    Oracle { adim: usize },
    /// The recognition loop ran on the product and found `k > 1`.
    Recognition { k: usize },
    /// Bound comes from the theorem alone.
    CertifiedOnly,
    /// The product is itself 1-metric antidimensional.
    Unsafe,
    /// No applicable result and the product was too large to check.
    NoGuarantee,
}

/// One candidate embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Advice {
    pub construction: ProductKind,
    pub factor: String,
    pub bound: Option<usize>,
    pub theorem: String,
    pub verified: Verification,
    pub order: usize,
}

/// Ranked candidate embeddings: strong products first, then lexicographic,
/// then Cartesian; within a construction by bound (descending) and then
/// product order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HardeningAdvice {
    pub entries: Vec<Advice>,
}

/// Products up to this order are also checked with the recognition loop.
const RECOGNITION_CHECK_LIMIT: usize = 4096;

fn verify(prod: &Graph, bound: Option<usize>) -> Result<Verification> {
    if prod.n() <= DEFAULT_ORACLE_LIMIT {
        let adim = adim_oracle(prod, DEFAULT_ORACLE_LIMIT)?.adim;
        if adim == 1 {
            return Ok(Verification::Unsafe);
        }
        return Ok(Verification::Oracle { adim });
    }
    if bound.is_some() {
        return Ok(Verification::CertifiedOnly);
    }
    if prod.n() <= RECOGNITION_CHECK_LIMIT {
        let report = adim1_check(prod)?;
        return Ok(match (report.verdict, report.witness) {
            (Some(Verdict::NotOne), Some(w)) => Verification::Recognition { k: w.k },
            _ => Verification::Unsafe,
        });
    }
    Ok(Verification::NoGuarantee)
}

pub fn harden(g: &Graph, catalog: &[(String, Graph)]) -> Result<HardeningAdvice> {
    g.require_connected()?;
    let mut entries = Vec::new();
    for (name, h) in catalog {
        if h.n() >= 2 && h.is_connected() && g.n() >= 2 {
            let b = strong_product_bound(g, h)?;
            let prod = product(ProductKind::Strong, g, h);
            entries.push(Advice {
                construction: ProductKind::Strong,
                factor: name.clone(),
                bound: Some(b.bound),
                theorem: "strong product of nontrivial connected factors".into(),
                verified: verify(&prod, Some(b.bound))?,
                order: prod.n(),
            });
        }
        if g.n() >= 2 && h.n() >= 1 {
            let b = lexicographic_bound(g, h)?;
            let prod = product(ProductKind::Lexicographic, g, h);
            entries.push(Advice {
                construction: ProductKind::Lexicographic,
                factor: name.clone(),
                bound: Some(b.bound),
                theorem: format!("largest module of size {} times n(H)", b.module.len()),
                verified: verify(&prod, Some(b.bound))?,
                order: prod.n(),
            });
        }
        if h.is_connected() && h.n() >= 2 {
            let prod = product(ProductKind::Cartesian, g, h);
            let (bound, theorem) = if cartesian_bound_ecc(g, h)?.is_some() {
                (Some(2), "a factor with #ecc >= 2".to_string())
            } else if cartesian_bound_geodetic2(g, h)?.is_some() {
                (Some(2), "both factors have geodetic number 2".to_string())
            } else {
                (
                    None,
                    "no guarantee: Cartesian products can stay 1-metric antidimensional (T* x P_2n)"
                        .to_string(),
                )
            };
            entries.push(Advice {
                construction: ProductKind::Cartesian,
                factor: name.clone(),
                bound,
                theorem,
                verified: verify(&prod, bound)?,
                order: prod.n(),
            });
        }
    }
    entries.sort_by(|a, b| {
        a.construction
            .cmp(&b.construction)
            .then_with(|| b.bound.cmp(&a.bound))
            .then_with(|| a.order.cmp(&b.order))
    });
    Ok(HardeningAdvice { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, star, t_star};

    #[test]
    fn small_products() {
        let p2 = path(2).unwrap();
        assert_eq!(product(ProductKind::Cartesian, &p2, &p2), cycle(4).unwrap().relabel(&[0, 1, 3, 2]));
        assert_eq!(product(ProductKind::Strong, &p2, &p2), complete(4).unwrap());
        assert_eq!(product(ProductKind::Lexicographic, &p2, &p2), complete(4).unwrap());
    }

    #[test]
    fn flat_ids() {
        let (g, h) = (path(3).unwrap(), path(4).unwrap());
        let spec = ProductSpec {
            kind: ProductKind::Cartesian,
            left: &g,
            right: &h,
        };
        assert_eq!(spec.flat_id(2, 1), 9);
        assert_eq!(spec.coordinates(9), (2, 1));
        assert_eq!(spec.build().n(), 12);
    }

    #[test]
    fn strong_bounds() {
        let b = strong_product_bound(&path(3).unwrap(), &path(3).unwrap()).unwrap();
        assert_eq!(b.bound, 3);
        assert!(b.witness.k >= 3);
        assert_eq!(strong_product_bound(&path(2).unwrap(), &path(5).unwrap()).unwrap().bound, 2);
        assert!(matches!(
            strong_product_bound(&path(1).unwrap(), &path(3).unwrap()),
            Err(Error::FactorTooSmall(1))
        ));
        let prod = product(ProductKind::Strong, &path(3).unwrap(), &path(3).unwrap());
        assert!(adim_oracle(&prod, 12).unwrap().adim >= 3);
    }

    #[test]
    fn lexicographic_bounds() {
        let c4k2 = lexicographic_bound(&cycle(4).unwrap(), &complete(2).unwrap()).unwrap();
        assert_eq!((c4k2.bound, c4k2.module.clone()), (4, vec![0, 2]));
        assert!(c4k2.witness.k >= 4);
        assert_eq!(lexicographic_bound(&path(4).unwrap(), &complete(3).unwrap()).unwrap().bound, 3);
        assert_eq!(lexicographic_bound(&complete(2).unwrap(), &complete(2).unwrap()).unwrap().bound, 2);
    }

    #[test]
    fn cartesian_ecc_rule() {
        assert_eq!(cartesian_bound_ecc(&path(5).unwrap(), &path(2).unwrap()).unwrap(), Some(2));
        assert_eq!(cartesian_bound_ecc(&t_star(), &path(2).unwrap()).unwrap(), None);
        assert_eq!(cartesian_bound_ecc(&cycle(4).unwrap(), &path(2).unwrap()).unwrap(), None);
        // symmetric use
        assert_eq!(cartesian_bound_ecc(&path(2).unwrap(), &path(5).unwrap()).unwrap(), Some(2));
    }

    #[test]
    fn cartesian_geodetic_rule() {
        let (b, w) = cartesian_bound_geodetic2(&path(3).unwrap(), &path(4).unwrap()).unwrap().unwrap();
        assert_eq!(b, 2);
        assert!(w.k >= 2);
        let (_, w) = cartesian_bound_geodetic2(&cycle(4).unwrap(), &cycle(4).unwrap()).unwrap().unwrap();
        assert!(w.k >= 2);
        assert!(cartesian_bound_geodetic2(&star(4).unwrap(), &path(2).unwrap()).unwrap().is_none());
    }

    #[test]
    fn harden_examples() {
        let advice = harden(&t_star(), &[("P3".into(), path(3).unwrap())]).unwrap();
        let first = &advice.entries[0];
        assert_eq!(first.construction, ProductKind::Strong);
        assert_eq!(first.bound, Some(3));

        let advice = harden(&path(4).unwrap(), &[("K3".into(), complete(3).unwrap())]).unwrap();
        let lex = advice
            .entries
            .iter()
            .find(|a| a.construction == ProductKind::Lexicographic)
            .unwrap();
        assert_eq!(lex.bound, Some(3));
        assert!(matches!(lex.verified, Verification::Oracle { adim } if adim >= 3));

        let advice = harden(&t_star(), &[("P2".into(), path(2).unwrap())]).unwrap();
        let cart = advice.entries.last().unwrap();
        assert_eq!(cart.construction, ProductKind::Cartesian);
        assert_eq!(cart.bound, None);
        assert_eq!(cart.verified, Verification::Unsafe);
    }

    #[test]
    fn advice_json_shape() {
        let advice = harden(&path(4).unwrap(), &[("P2".into(), path(2).unwrap())]).unwrap();
        let v = serde_json::to_value(&advice).unwrap();
        let first = &v[0];
        for key in ["construction", "factor", "bound", "theorem", "verified"] {
            assert!(first.get(key).is_some(), "missing {key}");
        }
    }
}
