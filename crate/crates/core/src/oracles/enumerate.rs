//! Exhaustive corpora: all labeled graphs, cotree shapes, colorings.

use crate::cotree::{Cotree, Op};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

use super::OracleCaps;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    Graph::from_edges(n, edges).expect("pairs are valid")
}

/// Every labeled graph on `n <= 8` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "2^(n choose 2) graphs is too many beyond n = 8");
    let p = pairs(n);
    (0..1u64 << p.len()).map(move |mask| graph_from_mask(n, &p, mask))
}

/// Labeled graphs whose degree sequence is non-increasing in vertex order.
/// Every isomorphism class has at least one such member.
pub fn all_graphs_degree_sorted(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "2^(n choose 2) graphs is too many beyond n = 8");
    let p = pairs(n);
    (0..1u64 << p.len()).filter_map(move |mask| {
        let mut deg = [0u8; 8];
        for (i, &(u, v)) in p.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg[..n]
            .windows(2)
            .all(|w| w[0] >= w[1])
            .then(|| graph_from_mask(n, &p, mask))
    })
}

#[derive(Clone)]
enum Shape {
    Leaf,
    Node(Vec<usize>),
}

/// Rooted trees without unary nodes, one per isomorphism class, grouped by
/// leaf count. A tree is a non-increasing list of indices into `all`.
fn shapes(max_n: usize) -> (Vec<Shape>, Vec<usize>, Vec<Vec<usize>>) {
    let mut all = vec![Shape::Leaf];
    let mut size = vec![1];
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(), vec![0]];
    for n in 2..=max_n {
        let mut found = Vec::new();
        let mut current = Vec::new();
        multisets(n, all.len(), &size, &mut current, &mut found);
        let mut ids = Vec::new();
        for children in found {
            ids.push(all.len());
            all.push(Shape::Node(children));
            size.push(n);
        }
        by_size.push(ids);
    }
    (all, size, by_size)
}

/// Non-increasing index sequences of length >= 2 over `0..bound` whose
/// sizes sum to `remaining`.
fn multisets(
    remaining: usize,
    bound: usize,
    size: &[usize],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        if current.len() >= 2 {
            out.push(current.clone());
        }
        return;
    }
    for i in (0..bound).rev() {
        if size[i] <= remaining && !(current.is_empty() && size[i] == remaining) {
            current.push(i);
            multisets(remaining - size[i], i + 1, size, current, out);
            current.pop();
        }
    }
}

fn label(all: &[Shape], id: usize, op: Op, next: &mut usize) -> Cotree {
    match &all[id] {
        Shape::Leaf => {
            *next += 1;
            Cotree::Leaf(*next - 1)
        }
        Shape::Node(children) => {
            let flip = if op == Op::Union { Op::Join } else { Op::Union };
            Cotree::Inner {
                op,
                children: children
                    .iter()
                    .map(|&c| label(all, c, flip, next))
                    .collect(),
            }
        }
    }
}

/// Discriminating cotrees of all cographs on `n` vertices up to
/// isomorphism, leaves numbered `0..n` in depth-first order.
pub fn unlabeled_cographs(n: usize) -> Vec<Cotree> {
    if n == 0 {
        return Vec::new();
    }
    let (all, _, by_size) = shapes(n);
    let roots = if n == 1 {
        vec![Op::Union]
    } else {
        vec![Op::Union, Op::Join]
    };
    let mut out = Vec::new();
    for &id in &by_size[n] {
        for &op in &roots {
            out.push(label(&all, id, op, &mut 0));
        }
    }
    out
}

/// Proper colorings of `g` with colors from `1..=k`, optionally only those
/// using every color.
pub struct Colorings<'a> {
    g: &'a Graph,
    k: Color,
    surjective: bool,
    current: Vec<Color>,
    done: bool,
}

impl OracleCaps {
    pub fn enumerate_colorings<'a>(
        &self,
        g: &'a Graph,
        k: usize,
        surjective: bool,
    ) -> Result<Colorings<'a>> {
        let n = g.n();
        let total = (k as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
        if total > self.colorings {
            return Err(Error::CapExceeded {
                what: "coloring enumeration",
                size: total.min(usize::MAX as u64) as usize,
                cap: self.colorings as usize,
            });
        }
        let done = k == 0 && n > 0;
        Ok(Colorings {
            g,
            k: k as Color,
            surjective,
            current: vec![1; n],
            done,
        })
    }
}

pub fn enumerate_colorings(g: &Graph, k: usize, surjective: bool) -> Result<Colorings<'_>> {
    OracleCaps::default().enumerate_colorings(g, k, surjective)
}

impl Colorings<'_> {
    fn accept(&self) -> bool {
        if self
            .g
            .edges()
            .any(|(u, v)| self.current[u] == self.current[v])
        {
            return false;
        }
        if self.surjective {
            let mut seen = vec![false; self.k as usize + 1];
            self.current.iter().for_each(|&c| seen[c as usize] = true);
            return seen[1..].iter().all(|&s| s);
        }
        true
    }

    fn advance(&mut self) {
        for c in self.current.iter_mut() {
            if *c < self.k {
                *c += 1;
                return;
            }
            *c = 1;
        }
        self.done = true;
    }
}

impl Iterator for Colorings<'_> {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        while !self.done {
            let ok = self.accept();
            let out = ok.then(|| Coloring::from_vec_unchecked(self.current.clone()));
            self.advance();
            if out.is_some() {
                return out;
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::{cograph_from_cotree, discriminating_cotree, is_cograph};

    #[test]
    fn graph_counts() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(0).count(), 1);
        assert!(all_graphs_degree_sorted(4).count() < 64);
    }

    #[test]
    fn cograph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| unlabeled_cographs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 24, 66]);
        for n in 1..=6 {
            for t in unlabeled_cographs(n) {
                let g = cograph_from_cotree(&t).unwrap();
                assert!(is_cograph(&g));
                assert_eq!(
                    discriminating_cotree(&g).unwrap().canonical(),
                    t.canonical()
                );
            }
        }
    }

    #[test]
    fn coloring_enumeration() {
        assert_eq!(
            enumerate_colorings(&Graph::complete(2), 2, false)
                .unwrap()
                .count(),
            2
        );
        assert_eq!(
            enumerate_colorings(&Graph::complete(3), 2, false)
                .unwrap()
                .count(),
            0
        );
        assert_eq!(
            enumerate_colorings(&Graph::empty(2), 2, true)
                .unwrap()
                .count(),
            2
        );
        assert_eq!(
            enumerate_colorings(&Graph::empty(0), 3, false)
                .unwrap()
                .count(),
            1
        );
        assert!(enumerate_colorings(&Graph::empty(30), 3, false).is_err());
    }

    #[test]
    fn hc_filtered_count_on_k2_k1_k1() {
        use crate::coloring::is_hc_coloring;
        use crate::cotree::BinaryCotree;
        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        let t = BinaryCotree::new(Cotree::union(vec![
            Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
            Cotree::union(vec![Cotree::leaf(2), Cotree::leaf(3)]),
        ]))
        .unwrap();
        let count = enumerate_colorings(&g, 2, true)
            .unwrap()
            .filter(|s| is_hc_coloring(&g, s, &t).unwrap())
            .count();
        assert_eq!(count, 4);
    }
}
