//! Counting hc-colorings of a cograph along a binary cotree.
//!
//! Leaves count 1, join nodes multiply their children's counts, and union
//! nodes additionally multiply by the number of injections of the smaller
//! child palette into the larger one. The count is taken up to renaming of
//! the global color set: the number of hc-colorings with colors exactly
//! `1..=χ` is this count times `χ!`.

use num_bigint::BigUint;

use crate::cotree::{binary_refine, discriminating_cotree, BinaryCotree, Cotree, Op, RefinePolicy};
use crate::error::Result;
use crate::graph::Graph;

pub type HcCount = BigUint;

/// Injections from a set of `small` elements into one of `large`:
/// `large! / (large - small)!`, zero when `small > large`.
pub fn injections(small: usize, large: usize) -> BigUint {
    if small > large {
        return BigUint::ZERO;
    }
    (large - small + 1..=large).fold(BigUint::from(1u32), |acc, x| acc * x)
}

pub fn count_hc_colorings(g: &Graph, tree: &BinaryCotree) -> Result<HcCount> {
    tree.tree().validate_against(g)?;
    Ok(count_rec(tree.tree()).1)
}

fn count_rec(t: &Cotree) -> (usize, BigUint) {
    match t {
        Cotree::Leaf(_) => (1, BigUint::from(1u32)),
        Cotree::Inner { op, children } => {
            let (c1, z1) = count_rec(&children[0]);
            let (c2, z2) = count_rec(&children[1]);
            match op {
                Op::Join => (c1 + c2, z1 * z2),
                Op::Union => (c1.max(c2), z1 * z2 * injections(c1.min(c2), c1.max(c2))),
            }
        }
    }
}

/// The count along the caterpillar refinement of the discriminating
/// cotree in which every union node adds its children in ascending order
/// of chromatic number.
pub fn count_hc_colorings_total(g: &Graph) -> Result<HcCount> {
    let tree = binary_refine(&discriminating_cotree(g)?, RefinePolicy::ChiSorted)?;
    count_hc_colorings(g, &tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_hc_coloring;
    use crate::cotree::enumerate_binary_cotrees;
    use crate::oracles::enumerate_colorings;

    fn k2_k1_k1() -> Graph {
        Graph::from_edges(4, [(0, 1)]).unwrap()
    }

    #[test]
    fn injection_kernel() {
        assert_eq!(injections(2, 3), BigUint::from(6u32));
        assert_eq!(injections(0, 3), BigUint::from(1u32));
        assert_eq!(injections(3, 3), BigUint::from(6u32));
        assert_eq!(injections(4, 3), BigUint::ZERO);
    }

    #[test]
    fn worked_values() {
        let split = BinaryCotree::new(Cotree::union(vec![
            Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
            Cotree::union(vec![Cotree::leaf(2), Cotree::leaf(3)]),
        ]))
        .unwrap();
        let nested = BinaryCotree::new(Cotree::union(vec![
            Cotree::union(vec![
                Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
                Cotree::leaf(2),
            ]),
            Cotree::leaf(3),
        ]))
        .unwrap();
        assert_eq!(
            count_hc_colorings(&k2_k1_k1(), &split).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            count_hc_colorings(&k2_k1_k1(), &nested).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            count_hc_colorings_total(&k2_k1_k1()).unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn labeled_count_is_count_times_factorial() {
        for n in 1..=5 {
            for g in crate::oracles::all_graphs(n).filter(crate::cotree::is_cograph) {
                let chi = crate::cotree::discriminating_cotree(&g)
                    .unwrap()
                    .chromatic_number();
                let fact: BigUint = (1..=chi).fold(BigUint::from(1u32), |a, x| a * x);
                for t in enumerate_binary_cotrees(&g, 1000).unwrap() {
                    let labeled = enumerate_colorings(&g, chi, true)
                        .unwrap()
                        .filter(|s| is_hc_coloring(&g, s, &t).unwrap())
                        .count();
                    assert_eq!(
                        BigUint::from(labeled),
                        count_hc_colorings(&g, &t).unwrap() * &fact
                    );
                }
            }
        }
    }
}
