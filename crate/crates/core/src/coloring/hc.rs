//! Colorings checked and built against a fixed binary cotree.
//!
//! A coloring is hc for a binary cotree when the two children of every
//! join node have disjoint color sets and the two children of every union
//! node have nested color sets.

use serde::Serialize;

use super::{is_disjoint, is_subset, palette_of, recolor, Injection, Injector};
use crate::cotree::{BinaryCotree, Cotree, Op};
use crate::error::Result;
use crate::graph::{Color, Coloring, Graph};

/// A cotree node whose children break the hc condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HcViolation {
    pub vertices: Vec<usize>,
    pub op: &'static str,
    pub left: Vec<Color>,
    pub right: Vec<Color>,
}

/// The violating node closest to the root (first in pre-order on ties).
pub fn hc_violation(
    g: &Graph,
    sigma: &Coloring,
    tree: &BinaryCotree,
) -> Result<Option<HcViolation>> {
    tree.tree().validate_against(g)?;
    g.check_size(sigma)?;
    let mut found: Option<(usize, usize, HcViolation)> = None;
    let mut visit = 0;
    hc_rec(tree.tree(), sigma.as_slice(), 0, &mut visit, &mut found);
    Ok(found.map(|(_, _, v)| v))
}

fn hc_rec(
    t: &Cotree,
    colors: &[Color],
    depth: usize,
    visit: &mut usize,
    found: &mut Option<(usize, usize, HcViolation)>,
) -> (Vec<usize>, Vec<Color>) {
    let order = *visit;
    *visit += 1;
    let Cotree::Inner { op, children } = t else {
        let Cotree::Leaf(v) = t else { unreachable!() };
        return (vec![*v], vec![colors[*v]]);
    };
    let (lv, lp) = hc_rec(&children[0], colors, depth + 1, visit, found);
    let (rv, rp) = hc_rec(&children[1], colors, depth + 1, visit, found);
    let ok = match op {
        Op::Join => is_disjoint(&lp, &rp),
        Op::Union => is_subset(&lp, &rp) || is_subset(&rp, &lp),
    };
    let mut vertices = [lv, rv].concat();
    vertices.sort_unstable();
    if !ok
        && found
            .as_ref()
            .is_none_or(|(d, o, _)| (depth, order) < (*d, *o))
    {
        let op = if *op == Op::Join { "join" } else { "union" };
        *found = Some((
            depth,
            order,
            HcViolation {
                vertices: vertices.clone(),
                op,
                left: lp.clone(),
                right: rp.clone(),
            },
        ));
    }
    let mut palette = [lp, rp].concat();
    palette.sort_unstable();
    palette.dedup();
    (vertices, palette)
}

pub fn is_hc_coloring(g: &Graph, sigma: &Coloring, tree: &BinaryCotree) -> Result<bool> {
    Ok(hc_violation(g, sigma, tree)?.is_none())
}

/// A node whose subgraph uses more colors than its chromatic number, as
/// `(vertices, colors used, chromatic number)`.
pub fn tt_violation(
    g: &Graph,
    sigma: &Coloring,
    tree: &BinaryCotree,
) -> Result<Option<(Vec<usize>, usize, usize)>> {
    tree.tree().validate_against(g)?;
    g.check_size(sigma)?;
    let mut found = None;
    tt_rec(tree.tree(), sigma.as_slice(), 0, &mut found);
    Ok(found.map(|(_, v)| v))
}

type TtFound = Option<(usize, (Vec<usize>, usize, usize))>;

fn tt_rec(t: &Cotree, colors: &[Color], depth: usize, found: &mut TtFound) -> (Vec<usize>, usize) {
    let (vertices, chi) = match t {
        Cotree::Leaf(v) => (vec![*v], 1),
        Cotree::Inner { op, children } => {
            let (lv, lc) = tt_rec(&children[0], colors, depth + 1, found);
            let (rv, rc) = tt_rec(&children[1], colors, depth + 1, found);
            let chi = if *op == Op::Join { lc + rc } else { lc.max(rc) };
            let mut v = [lv, rv].concat();
            v.sort_unstable();
            (v, chi)
        }
    };
    let used = palette_of(colors, &vertices).len();
    if used != chi && found.as_ref().is_none_or(|(d, _)| depth <= *d) {
        *found = Some((depth, (vertices.clone(), used, chi)));
    }
    (vertices, chi)
}

/// True iff every node's subgraph uses exactly its chromatic number of
/// colors.
pub fn is_tt_minimal(g: &Graph, sigma: &Coloring, tree: &BinaryCotree) -> Result<bool> {
    Ok(tt_violation(g, sigma, tree)?.is_none())
}

/// Builds a (T,t)-minimal coloring bottom-up: every vertex starts with its
/// own color, join nodes keep their disjoint palettes, and union nodes
/// inject the palette of the child with fewer colors into the other's.
pub fn tt_minimal_coloring(
    g: &Graph,
    tree: &BinaryCotree,
    injection: Injection,
) -> Result<Coloring> {
    tree.tree().validate_against(g)?;
    let mut colors: Vec<Color> = (1..=g.n() as Color).collect();
    let mut injector = Injector::new(injection);
    tt_build(tree.tree(), &mut colors, &mut injector);
    Ok(Coloring::from_vec_unchecked(colors))
}

fn tt_build(t: &Cotree, colors: &mut [Color], injector: &mut Injector) -> (Vec<usize>, Vec<Color>) {
    let Cotree::Inner { op, children } = t else {
        let Cotree::Leaf(v) = t else { unreachable!() };
        return (vec![*v], vec![colors[*v]]);
    };
    let (lv, lp) = tt_build(&children[0], colors, injector);
    let (rv, rp) = tt_build(&children[1], colors, injector);
    let palette = match op {
        Op::Join => {
            let mut p = [lp, rp].concat();
            p.sort_unstable();
            p
        }
        Op::Union => {
            let (small_v, small_p, big_p) = if rp.len() > lp.len() {
                (&lv, lp, rp)
            } else {
                (&rv, rp, lp)
            };
            let images = injector.map(&small_p, &big_p);
            recolor(colors, small_v, &small_p, &images);
            big_p
        }
    };
    ([lv, rv].concat(), palette)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::{
        binary_refine, discriminating_cotree, enumerate_binary_cotrees, RefinePolicy,
    };
    use crate::oracles::{enumerate_colorings, generate, GeneratorConfig};

    fn k2_k1_k1() -> Graph {
        Graph::from_edges(4, [(0, 1)]).unwrap()
    }

    fn t_nested() -> BinaryCotree {
        BinaryCotree::new(Cotree::union(vec![
            Cotree::union(vec![
                Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
                Cotree::leaf(2),
            ]),
            Cotree::leaf(3),
        ]))
        .unwrap()
    }

    fn t_split() -> BinaryCotree {
        BinaryCotree::new(Cotree::union(vec![
            Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
            Cotree::union(vec![Cotree::leaf(2), Cotree::leaf(3)]),
        ]))
        .unwrap()
    }

    #[test]
    fn hc_depends_on_the_cotree() {
        // 0 shares a color with 3, and 1 with 2
        let sigma = Coloring::new(vec![1, 2, 2, 1]).unwrap();
        assert!(is_hc_coloring(&k2_k1_k1(), &sigma, &t_nested()).unwrap());
        let v = hc_violation(&k2_k1_k1(), &sigma, &t_split())
            .unwrap()
            .unwrap();
        assert_eq!(v.vertices, vec![2, 3]);
        assert_eq!(v.op, "union");
    }

    #[test]
    fn k1_is_always_hc() {
        let t = BinaryCotree::new(Cotree::leaf(0)).unwrap();
        assert!(is_hc_coloring(&Graph::empty(1), &Coloring::new(vec![7]).unwrap(), &t).unwrap());
        assert_eq!(
            tt_minimal_coloring(&Graph::empty(1), &t, Injection::Canonical)
                .unwrap()
                .as_slice(),
            &[1]
        );
    }

    #[test]
    fn construction_trace_on_k2_k1_k1() {
        let c = tt_minimal_coloring(&k2_k1_k1(), &t_nested(), Injection::Canonical).unwrap();
        assert_eq!(c.canonicalize().as_slice(), &[1, 2, 1, 1]);
        assert!(is_tt_minimal(&k2_k1_k1(), &c, &t_nested()).unwrap());
    }

    #[test]
    fn wasteful_p3_is_not_minimal() {
        let g = Graph::complete(3).disjoint_union(&Graph::path(3));
        let t = binary_refine(&discriminating_cotree(&g).unwrap(), RefinePolicy::LeftComb).unwrap();
        let sigma = Coloring::new(vec![1, 2, 3, 1, 2, 3]).unwrap();
        let (vertices, used, chi) = tt_violation(&g, &sigma, &t).unwrap().unwrap();
        assert_eq!((used, chi), (3, 2));
        assert!(vertices.contains(&3));
    }

    #[test]
    fn mismatched_tree_is_an_error() {
        assert!(is_hc_coloring(
            &Graph::complete(4),
            &Coloring::new(vec![1, 2, 3, 4]).unwrap(),
            &t_nested()
        )
        .is_err());
    }

    #[test]
    fn tt_minimal_equals_hc_on_small_cographs() {
        for n in 1..=5 {
            for g in crate::oracles::all_graphs(n).filter(crate::cotree::is_cograph) {
                for t in enumerate_binary_cotrees(&g, 1000).unwrap() {
                    for sigma in enumerate_colorings(&g, n, false).unwrap() {
                        assert_eq!(
                            is_tt_minimal(&g, &sigma, &t).unwrap(),
                            is_hc_coloring(&g, &sigma, &t).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn algorithm_output_is_hc_for_all_policies() {
        for seed in 0..40 {
            let g = generate(&GeneratorConfig::cograph(10, seed, 0.5)).unwrap();
            let disc = discriminating_cotree(&g).unwrap();
            let greedy =
                crate::coloring::greedy_coloring(&g, &(0..g.n()).collect::<Vec<_>>()).unwrap();
            for policy in [
                RefinePolicy::LeftComb,
                RefinePolicy::BalancedSplit,
                RefinePolicy::ColorSorted(&greedy),
            ] {
                let t = binary_refine(&disc, policy).unwrap();
                for inj in [Injection::Canonical, Injection::Seeded(seed)] {
                    let c = tt_minimal_coloring(&g, &t, inj).unwrap();
                    assert!(g.is_proper_coloring(&c));
                    assert!(is_hc_coloring(&g, &c, &t).unwrap());
                    assert!(is_tt_minimal(&g, &c, &t).unwrap());
                }
            }
        }
    }
}
