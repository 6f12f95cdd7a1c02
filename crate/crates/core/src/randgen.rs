//! Seeded random graph models: Barabási–Albert preferential attachment,
//! uniform `G(n, m)` and Bernoulli `G(n, p)`.
//!
//! Every sample is drawn from its own ChaCha8 stream seeded with
//! `seed ^ splitmix64(index)`, so sample `i` of a configuration is the same
//! graph no matter how a sweep is scheduled.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    #[serde(alias = "barabasi_albert")]
    Ba,
    Gnm,
    Gnp,
}

/// Parameters of one random model. `m` is edges-per-step for BA and the
/// total edge count for `G(n, m)`; `p` is only used by `G(n, p)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomModelConfig {
    pub model: Model,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

fn default_samples() -> usize {
    1
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl RandomModelConfig {
    pub fn barabasi_albert(n: usize, m: usize) -> Self {
        Self {
            model: Model::Ba,
            n,
            m: Some(m),
            p: None,
            seed: 0,
            samples: 1,
        }
    }

    pub fn gnm(n: usize, m: usize) -> Self {
        Self {
            model: Model::Gnm,
            ..Self::barabasi_albert(n, m)
        }
    }

    pub fn gnp(n: usize, p: f64) -> Self {
        Self {
            model: Model::Gnp,
            n,
            m: None,
            p: Some(p),
            seed: 0,
            samples: 1,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    /// Checks that exactly the chosen model's parameters are set and in range.
    pub fn validate(&self) -> Result<()> {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        match self.model {
            Model::Ba | Model::Gnm if self.p.is_some() => {
                Err(bad("p is only meaningful for the gnp model"))
            }
            Model::Gnp if self.m.is_some() => Err(bad("m is not a gnp parameter")),
            Model::Ba => match self.m {
                Some(m) if m >= 1 && m < self.n => Ok(()),
                Some(m) => Err(bad(format!("ba needs 1 <= m < n, got m={m}, n={}", self.n))),
                None => Err(bad("ba needs m")),
            },
            Model::Gnm => match self.m {
                Some(m) if m <= pairs => Ok(()),
                Some(m) => Err(bad(format!("gnm needs m <= {pairs}, got {m}"))),
                None => Err(bad("gnm needs m")),
            },
            Model::Gnp => match self.p {
                Some(p) if (0.0..=1.0).contains(&p) => Ok(()),
                Some(p) => Err(bad(format!("gnp needs 0 <= p <= 1, got {p}"))),
                None => Err(bad("gnp needs p")),
            },
        }
    }

    /// Sample `index` of this configuration.
    pub fn generate(&self, index: u64) -> Result<Graph> {
        self.validate()?;
        let mut rng = sample_rng(self.seed, index);
        Ok(match self.model {
            Model::Ba => barabasi_albert(self.n, self.m.unwrap_or(1), &mut rng)?,
            Model::Gnm => gnm(self.n, self.m.unwrap_or(0), &mut rng)?,
            Model::Gnp => gnp(self.n, self.p.unwrap_or(0.0), &mut rng)?,
        })
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ splitmix64(index))
}

/// `p = (1 + eps) ln n / n`, just above the connectivity threshold.
pub fn connectivity_threshold_p(n: usize, eps: f64) -> f64 {
    (1.0 + eps) * (n as f64).ln() / n as f64
}

/// Preferential attachment grown from `K_{m+1}`. Each new vertex takes `m`
/// distinct neighbors, drawn one at a time with probability proportional
/// to current degree among those not yet chosen.
pub fn barabasi_albert<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    if m < 1 || m >= n {
        return Err(bad(format!("ba needs 1 <= m < n, got m={m}, n={n}")));
    }
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m * n);
    // Every vertex appears once per incident edge.
    let mut endpoints: Vec<Vertex> = Vec::with_capacity(2 * m * n);
    for u in 0..=m {
        for v in (u + 1)..=m {
            edges.push((u, v));
            endpoints.extend([u, v]);
        }
    }
    let mut chosen = Vec::with_capacity(m);
    for v in (m + 1)..n {
        chosen.clear();
        while chosen.len() < m {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !chosen.contains(&t) {
                chosen.push(t);
            }
        }
        for &t in &chosen {
            edges.push((t, v));
            endpoints.extend([t, v]);
        }
    }
    Graph::new(n, edges)
}

/// Decodes a column-major upper-triangle index into `(i, j)` with `i < j`.
fn pair_at(idx: usize) -> (Vertex, Vertex) {
    let mut j = ((1.0 + (1.0 + 8.0 * idx as f64).sqrt()) / 2.0) as usize;
    while j * (j - 1) / 2 > idx {
        j -= 1;
    }
    while (j + 1) * j / 2 <= idx {
        j += 1;
    }
    (idx - j * (j - 1) / 2, j)
}

/// Uniform graph with exactly `m` edges.
pub fn gnm<R: Rng>(n: usize, m: usize, rng: &mut R) -> Result<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    if m > pairs {
        return Err(bad(format!("gnm needs m <= {pairs}, got {m}")));
    }
    let picks = index::sample(rng, pairs, m);
    Graph::new(n, picks.into_iter().map(pair_at))
}

/// Each pair independently with probability `p`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(bad(format!("gnp needs 0 <= p <= 1, got {p}")));
    }
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_decoding_is_column_major() {
        let got: Vec<_> = (0..6).map(pair_at).collect();
        assert_eq!(got, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        let mut idx = 0;
        for j in 1..200 {
            for i in 0..j {
                assert_eq!(pair_at(idx), (i, j));
                idx += 1;
            }
        }
    }

    #[test]
    fn ba_trees_and_seed_clique() {
        for i in 0..50 {
            let g = RandomModelConfig::barabasi_albert(30, 1).with_seed(7).generate(i).unwrap();
            assert!(g.is_tree());
        }
        let g = RandomModelConfig::barabasi_albert(11, 2).with_seed(1).generate(0).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 2 * (11 - 3) + 3);
        let k = RandomModelConfig::barabasi_albert(5, 4).generate(0).unwrap();
        assert!(k.is_complete());
    }

    #[test]
    fn gnm_extremes() {
        let k = RandomModelConfig::gnm(7, 21).generate(3).unwrap();
        assert!(k.is_complete());
        assert_eq!(RandomModelConfig::gnm(7, 0).generate(3).unwrap().edge_count(), 0);
        let g = RandomModelConfig::gnm(13, 34).generate(0).unwrap();
        assert_eq!(g.edge_count(), 34);
        assert_eq!(format!("{:.2}", g.density()), "0.44");
        assert!((g.density() - 34.0 / 78.0).abs() < 1e-12);
    }

    #[test]
    fn gnp_extremes() {
        assert!(RandomModelConfig::gnp(9, 1.0).generate(0).unwrap().is_complete());
        assert_eq!(RandomModelConfig::gnp(9, 0.0).generate(0).unwrap().edge_count(), 0);
        let p = connectivity_threshold_p(50, 0.001);
        assert!((p - 1.001 * 50f64.ln() / 50.0).abs() < 1e-15);
    }

    #[test]
    fn validation() {
        assert!(RandomModelConfig::barabasi_albert(5, 5).validate().is_err());
        assert!(RandomModelConfig::barabasi_albert(5, 0).validate().is_err());
        assert!(RandomModelConfig::gnm(4, 7).validate().is_err());
        assert!(RandomModelConfig::gnp(4, 1.5).validate().is_err());
        let mut mixed = RandomModelConfig::gnp(4, 0.5);
        mixed.m = Some(2);
        assert!(mixed.validate().is_err());
    }

    #[test]
    fn deterministic_per_index() {
        let cfg = RandomModelConfig::gnp(20, 0.3).with_seed(99);
        assert_eq!(cfg.generate(5).unwrap(), cfg.generate(5).unwrap());
        assert_ne!(cfg.generate(5).unwrap(), cfg.generate(6).unwrap());
    }

    #[test]
    fn manifest_roundtrip() {
        let cfg: RandomModelConfig =
            serde_json::from_str(r#"{"model":"gnp","n":12,"p":0.25,"seed":3,"samples":10}"#).unwrap();
        assert_eq!(cfg, RandomModelConfig::gnp(12, 0.25).with_seed(3).with_samples(10));
    }
}
