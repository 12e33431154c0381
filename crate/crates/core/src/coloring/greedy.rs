//! Greedy colorings.
//!
//! A coloring counts as greedy when some vertex order makes the
//! first-fit procedure produce the same color classes. Color names play no
//! role: `σ` is greedy iff its colors can be ranked so that every vertex
//! sees every lower-ranked color among its neighbors.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

/// First-fit coloring along `order`.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let n = g.n();
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::NotAPermutation);
        }
    }
    let mut colors: Vec<Color> = vec![0; n];
    let mut stamp = vec![usize::MAX; n + 2];
    for (step, &v) in order.iter().enumerate() {
        for &u in g.neighbors(v) {
            let c = colors[u] as usize;
            if c > 0 {
                stamp[c] = step;
            }
        }
        colors[v] = (1..)
            .find(|&c| stamp[c] != step)
            .expect("some color is free") as Color;
    }
    Ok(Coloring::from_vec_unchecked(colors))
}

/// Two colors that cannot be ranked, or a cycle of forced precedences, as
/// evidence that `σ` is not greedy.
pub fn greedy_violation(g: &Graph, sigma: &Coloring) -> Result<Option<Vec<Color>>> {
    g.check_proper(sigma)?;
    let palette = sigma.palette(&(0..g.n()).collect::<Vec<_>>());
    let k = palette.len();
    let idx = |c: Color| palette.binary_search(&c).expect("color in palette");
    let mut class_size = vec![0usize; k];
    // hits[(a, b)]: vertices of color a with a neighbor of color b
    let mut hits: HashMap<(usize, usize), usize> = HashMap::new();
    let mut local = Vec::new();
    for v in 0..g.n() {
        let a = idx(sigma.color(v));
        class_size[a] += 1;
        local.clear();
        local.extend(g.neighbors(v).iter().map(|&u| idx(sigma.color(u))));
        local.sort_unstable();
        local.dedup();
        for &b in &local {
            *hits.entry((a, b)).or_default() += 1;
        }
    }
    // b may be ranked below a iff every vertex colored a sees b
    let below = |a: usize, b: usize| hits.get(&(a, b)).copied().unwrap_or(0) == class_size[a];
    let mut out_edges = vec![Vec::new(); k];
    let mut indeg = vec![0usize; k];
    for a in 0..k {
        for b in a + 1..k {
            match (below(a, b), below(b, a)) {
                (false, false) => return Ok(Some(vec![palette[a], palette[b]])),
                (true, false) => {
                    out_edges[a].push(b);
                    indeg[b] += 1;
                }
                (false, true) => {
                    out_edges[b].push(a);
                    indeg[a] += 1;
                }
                (true, true) => {}
            }
        }
    }
    // forced precedences must be acyclic
    let mut queue: Vec<usize> = (0..k).filter(|&c| indeg[c] == 0).collect();
    let mut done = 0;
    while let Some(c) = queue.pop() {
        done += 1;
        for &d in &out_edges[c] {
            indeg[d] -= 1;
            if indeg[d] == 0 {
                queue.push(d);
            }
        }
    }
    if done < k {
        let cyclic = (0..k)
            .filter(|&c| indeg[c] > 0)
            .map(|c| palette[c])
            .collect();
        return Ok(Some(cyclic));
    }
    Ok(None)
}

pub fn is_greedy_coloring(g: &Graph, sigma: &Coloring) -> Result<bool> {
    Ok(greedy_violation(g, sigma)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::OracleCaps;
    use proptest::prelude::*;

    fn k2_k1_k1() -> Graph {
        Graph::from_edges(4, [(0, 1)]).unwrap()
    }

    #[test]
    fn k2_k1_k1_colorings() {
        let a = greedy_coloring(&k2_k1_k1(), &[0, 1, 2, 3]).unwrap();
        assert_eq!(a.as_slice(), &[1, 2, 1, 1]);
        assert!(is_greedy_coloring(&k2_k1_k1(), &a).unwrap());
        let b = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        assert!(!is_greedy_coloring(&k2_k1_k1(), &b).unwrap());
    }

    #[test]
    fn k1_and_errors() {
        assert_eq!(
            greedy_coloring(&Graph::empty(1), &[0]).unwrap().as_slice(),
            &[1]
        );
        assert!(matches!(
            greedy_coloring(&Graph::path(3), &[0, 0, 1]),
            Err(Error::NotAPermutation)
        ));
        assert!(matches!(
            greedy_coloring(&Graph::path(3), &[0, 1]),
            Err(Error::NotAPermutation)
        ));
        let bad = Coloring::new(vec![1, 1]).unwrap();
        assert!(matches!(
            is_greedy_coloring(&Graph::complete(2), &bad),
            Err(Error::ImproperColoring(0, 1))
        ));
    }

    #[test]
    fn renamed_colors_stay_greedy() {
        let p4 = Graph::path(4);
        // order 0,3,1,2 yields the three-color Grundy coloring
        let c = greedy_coloring(&p4, &[0, 3, 1, 2]).unwrap();
        assert_eq!(c.num_colors(), 3);
        let renamed = Coloring::new(c.as_slice().iter().map(|&x| 10 - x).collect()).unwrap();
        assert!(is_greedy_coloring(&p4, &renamed).unwrap());
    }

    #[test]
    fn matches_all_orders_on_small_graphs() {
        for n in 1..=5 {
            for g in crate::oracles::all_graphs_degree_sorted(n) {
                let reachable = OracleCaps::default().greedy_partitions(&g).unwrap();
                for sigma in crate::oracles::enumerate_colorings(&g, n, false).unwrap() {
                    let expected = reachable.contains(sigma.canonicalize().as_slice());
                    assert_eq!(is_greedy_coloring(&g, &sigma).unwrap(), expected);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn greedy_output_is_proper_and_greedy(g in crate::graph::tests::arb_graph(9), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut order: Vec<usize> = (0..g.n()).collect();
            order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let c = greedy_coloring(&g, &order).unwrap();
            prop_assert!(g.is_proper_coloring(&c));
            prop_assert!(is_greedy_coloring(&g, &c).unwrap());
        }
    }
}
