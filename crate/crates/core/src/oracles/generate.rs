//! Seeded random graph generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::p4sparse::{construct_spider, SpiderFlavor};

/// Pieces larger than this are only ever split by a disjoint union, which
/// keeps big P4-sparse instances sparse.
const DENSE_BLOCK: usize = 32;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub seed: u64,
    pub flavor: Flavor,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Flavor {
    Cograph {
        p_join: f64,
    },
    P4Sparse {
        spider_rate: f64,
        max_head: usize,
        #[serde(default = "half")]
        p_join: f64,
    },
    ErdosRenyi {
        p: f64,
    },
    Spider {
        k: usize,
        flavor: SpiderFlavor,
        head_n: usize,
    },
}

fn half() -> f64 {
    0.5
}

impl GeneratorConfig {
    pub fn cograph(n: usize, seed: u64, p_join: f64) -> Self {
        GeneratorConfig {
            n,
            seed,
            flavor: Flavor::Cograph { p_join },
        }
    }

    pub fn p4sparse(n: usize, seed: u64, spider_rate: f64, max_head: usize) -> Self {
        GeneratorConfig {
            n,
            seed,
            flavor: Flavor::P4Sparse {
                spider_rate,
                max_head,
                p_join: 0.5,
            },
        }
    }

    pub fn erdos_renyi(n: usize, seed: u64, p: f64) -> Self {
        GeneratorConfig {
            n,
            seed,
            flavor: Flavor::ErdosRenyi { p },
        }
    }

    pub fn spider(seed: u64, k: usize, flavor: SpiderFlavor, head_n: usize) -> Self {
        GeneratorConfig {
            n: 2 * k + head_n,
            seed,
            flavor: Flavor::Spider { k, flavor, head_n },
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        let probs: Vec<(&str, f64)> = match &self.flavor {
            Flavor::Cograph { p_join } => vec![("p_join", *p_join)],
            Flavor::P4Sparse {
                spider_rate,
                p_join,
                ..
            } => vec![("spider_rate", *spider_rate), ("p_join", *p_join)],
            Flavor::ErdosRenyi { p } => vec![("p", *p)],
            Flavor::Spider { k, head_n, .. } => {
                if *k < 2 {
                    return bad(format!("spider body size {k} below 2"));
                }
                if self.n != 2 * k + head_n {
                    return bad(format!(
                        "spider with k = {k} and head {head_n} has {} vertices, not {}",
                        2 * k + head_n,
                        self.n
                    ));
                }
                Vec::new()
            }
        };
        for (name, p) in probs {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("{name} = {p} is not a probability"));
            }
        }
        Ok(())
    }
}

/// Builds the graph described by `config`. Equal configs give equal graphs.
pub fn generate(config: &GeneratorConfig) -> Result<Graph> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.n;
    let mut edges = Vec::new();
    match &config.flavor {
        Flavor::ErdosRenyi { p } => {
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(*p) {
                        edges.push((u, v));
                    }
                }
            }
            return Graph::from_edges(n, edges);
        }
        Flavor::Cograph { p_join } => {
            let mut ids: Vec<usize> = (0..n).collect();
            ids.shuffle(&mut rng);
            split_cotree(&ids, *p_join, &mut rng, &mut edges);
        }
        Flavor::P4Sparse {
            spider_rate,
            max_head,
            p_join,
        } => {
            let mut ids: Vec<usize> = (0..n).collect();
            ids.shuffle(&mut rng);
            p4sparse_pieces(ids, *spider_rate, *max_head, *p_join, &mut rng, &mut edges);
        }
        Flavor::Spider { k, flavor, head_n } => {
            let head = match head_n {
                0 => Graph::empty(0),
                h => generate(&GeneratorConfig::cograph(*h, rng.gen(), 0.5))?,
            };
            let (g, _) = construct_spider(*k, *flavor, &head)?;
            let mut ids: Vec<usize> = (0..n).collect();
            ids.shuffle(&mut rng);
            edges.extend(g.edges().map(|(u, v)| (ids[u], ids[v])));
        }
    }
    Graph::from_edges(n, edges)
}

/// Random binary cotree over `ids`: split at a uniform point, join the two
/// halves with probability `p_join`.
fn split_cotree(ids: &[usize], p_join: f64, rng: &mut ChaCha8Rng, edges: &mut Vec<(usize, usize)>) {
    let mut stack = vec![ids];
    while let Some(part) = stack.pop() {
        if part.len() < 2 {
            continue;
        }
        let cut = rng.gen_range(1..part.len());
        let (a, b) = part.split_at(cut);
        if rng.gen_bool(p_join) {
            join_all(a, b, edges);
        }
        stack.push(a);
        stack.push(b);
    }
}

fn join_all(a: &[usize], b: &[usize], edges: &mut Vec<(usize, usize)>) {
    for &u in a {
        edges.extend(b.iter().map(|&v| (u, v)));
    }
}

/// Like [`split_cotree`], but a piece of at least four vertices becomes a
/// spider with probability `spider_rate`; its head is split further.
fn p4sparse_pieces(
    ids: Vec<usize>,
    spider_rate: f64,
    max_head: usize,
    p_join: f64,
    rng: &mut ChaCha8Rng,
    edges: &mut Vec<(usize, usize)>,
) {
    let mut stack = vec![ids];
    while let Some(part) = stack.pop() {
        let s = part.len();
        if s < 2 {
            continue;
        }
        if (4..=DENSE_BLOCK).contains(&s) && rng.gen_bool(spider_rate) {
            let top = max_head.min(s - 4);
            let mut head = rng.gen_range(0..=top);
            if (s - head) % 2 == 1 {
                if head < top {
                    head += 1;
                } else {
                    head = head.saturating_sub(1);
                }
            }
            if (s - head) % 2 == 0 {
                let k = (s - head) / 2;
                let flavor = if rng.gen_bool(0.5) {
                    SpiderFlavor::Thin
                } else {
                    SpiderFlavor::Thick
                };
                let (body, rest) = part.split_at(k);
                let (legs, head_ids) = rest.split_at(k);
                for i in 0..k {
                    for j in i + 1..k {
                        edges.push((body[i], body[j]));
                    }
                    match flavor {
                        SpiderFlavor::Thin => edges.push((body[i], legs[i])),
                        SpiderFlavor::Thick => {
                            edges.extend((0..k).filter(|&j| j != i).map(|j| (body[i], legs[j])))
                        }
                    }
                }
                join_all(body, head_ids, edges);
                stack.push(head_ids.to_vec());
                continue;
            }
        }
        let cut = rng.gen_range(1..s);
        if s <= DENSE_BLOCK && rng.gen_bool(p_join) {
            join_all(&part[..cut], &part[cut..], edges);
        }
        let mut left = part;
        let right = left.split_off(cut);
        stack.push(left);
        stack.push(right);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::is_cograph;
    use crate::p4sparse::{is_p4_sparse, recognize_spider};

    #[test]
    fn cographs_are_cographs() {
        for seed in 0..30 {
            assert!(is_cograph(
                &generate(&GeneratorConfig::cograph(12, seed, 0.5)).unwrap()
            ));
        }
        assert!(is_cograph(
            &generate(&GeneratorConfig::cograph(6, 1, 0.5)).unwrap()
        ));
    }

    #[test]
    fn spider_round_trip() {
        let g = generate(&GeneratorConfig::spider(3, 3, SpiderFlavor::Thin, 0)).unwrap();
        let sd = recognize_spider(&g).unwrap();
        assert_eq!((sd.flavor, sd.body.len()), (SpiderFlavor::Thin, 3));
    }

    #[test]
    fn p4sparse_instances() {
        assert!(is_p4_sparse(
            &generate(&GeneratorConfig::p4sparse(50, 7, 0.3, 3)).unwrap()
        ));
        for seed in 0..50 {
            assert!(is_p4_sparse(
                &generate(&GeneratorConfig::p4sparse(40, seed, 0.5, 4)).unwrap()
            ));
        }
    }

    #[test]
    fn reproducible() {
        let c = GeneratorConfig::erdos_renyi(20, 9, 0.3);
        assert_eq!(generate(&c).unwrap(), generate(&c).unwrap());
        let c = GeneratorConfig::p4sparse(200, 9, 0.4, 3);
        assert_eq!(generate(&c).unwrap(), generate(&c).unwrap());
    }

    #[test]
    fn invalid_configs() {
        assert!(matches!(
            generate(&GeneratorConfig::erdos_renyi(5, 0, 1.5)),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            generate(&GeneratorConfig::cograph(0, 0, 0.5)),
            Err(Error::InvalidConfig(_))
        ));
        let mut bad = GeneratorConfig::spider(0, 3, SpiderFlavor::Thick, 1);
        bad.n = 9;
        assert!(generate(&bad).is_err());
    }

    #[test]
    fn config_json() {
        let c: GeneratorConfig =
            serde_json::from_str(r#"{"n": 10, "seed": 3, "flavor": {"kind": "p4_sparse", "spider_rate": 0.2, "max_head": 2}}"#)
                .unwrap();
        assert_eq!(c, GeneratorConfig::p4sparse(10, 3, 0.2, 2));
    }
}
