//! Hierarchical and strictly hierarchical colorings, judged on the
//! disconnected strong modules of the modular decomposition.

use super::{is_subset, palette_of};
use crate::error::Result;
use crate::graph::{Color, Coloring, Graph};
use crate::mdtree::{modular_decomposition, NodeKind};

/// The first parallel strong module (in tree order) whose children's color
/// sets are not dominated by one of them, or with `strict`, not pairwise
/// nested.
pub fn hierarchy_violation(
    g: &Graph,
    sigma: &Coloring,
    strict: bool,
) -> Result<Option<Vec<usize>>> {
    g.check_proper(sigma)?;
    if g.n() == 0 {
        return Ok(None);
    }
    let md = modular_decomposition(g)?;
    let colors = sigma.as_slice();
    for node in md.nodes().iter().filter(|n| n.kind == NodeKind::Parallel) {
        let mut palettes: Vec<Vec<Color>> = node
            .children
            .iter()
            .map(|&c| palette_of(colors, &md.node(c).vertices))
            .collect();
        palettes.sort_by_key(|p| std::cmp::Reverse(p.len()));
        let ok = if strict {
            palettes.windows(2).all(|w| is_subset(&w[1], &w[0]))
        } else {
            palettes[1..].iter().all(|p| is_subset(p, &palettes[0]))
        };
        if !ok {
            return Ok(Some(node.vertices.clone()));
        }
    }
    Ok(None)
}

pub fn is_hierarchical(g: &Graph, sigma: &Coloring) -> Result<bool> {
    Ok(hierarchy_violation(g, sigma, false)?.is_none())
}

pub fn is_strictly_hierarchical(g: &Graph, sigma: &Coloring) -> Result<bool> {
    Ok(hierarchy_violation(g, sigma, true)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn k4_k2_k2() -> Graph {
        Graph::complete(4)
            .disjoint_union(&Graph::complete(2))
            .disjoint_union(&Graph::complete(2))
    }

    #[test]
    fn k4_k2_k2_is_hierarchical_but_not_strictly() {
        let sigma = Coloring::new(vec![1, 2, 3, 4, 1, 2, 3, 4]).unwrap();
        assert!(is_hierarchical(&k4_k2_k2(), &sigma).unwrap());
        assert!(!is_strictly_hierarchical(&k4_k2_k2(), &sigma).unwrap());
        assert_eq!(
            hierarchy_violation(&k4_k2_k2(), &sigma, true).unwrap(),
            Some((0..8).collect())
        );
    }

    #[test]
    fn connected_graphs_are_vacuously_hierarchical() {
        let sigma = Coloring::new(vec![4, 1, 7, 2]).unwrap();
        assert!(is_strictly_hierarchical(&Graph::path(4), &sigma).unwrap());
    }

    #[test]
    fn non_dominated_children() {
        let g = Graph::empty(2);
        let sigma = Coloring::new(vec![1, 2]).unwrap();
        assert!(!is_hierarchical(&g, &sigma).unwrap());
    }

    #[test]
    fn improper_input_is_rejected() {
        let sigma = Coloring::new(vec![1, 1]).unwrap();
        assert!(matches!(
            is_hierarchical(&Graph::complete(2), &sigma),
            Err(Error::ImproperColoring(0, 1))
        ));
    }

    #[test]
    fn strict_implies_hierarchical_small() {
        for n in 1..=5 {
            for g in crate::oracles::all_graphs(n) {
                for sigma in crate::oracles::enumerate_colorings(&g, 3, false).unwrap() {
                    if is_strictly_hierarchical(&g, &sigma).unwrap() {
                        assert!(is_hierarchical(&g, &sigma).unwrap());
                    }
                }
            }
        }
    }
}
