//! Modularly-minimal colorings: every strong module uses exactly its
//! chromatic number of colors.
//!
//! The construction walks the modular decomposition bottom-up starting from
//! an all-distinct coloring. Series nodes keep their children's disjoint
//! palettes, parallel nodes inject every child into the palette of a child
//! with the largest chromatic number, and prime nodes go to a
//! [`PrimeSolver`].

use serde::Serialize;

use super::solver::{PrimeModule, PrimeSolver};
use super::{palette_of, recolor, Injection, Injector};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};
use crate::mdtree::{modular_decomposition, MdTree, NodeKind};

/// Result of a bottom-up run: the colors and each tree node's chromatic
/// number, indexed like the tree's nodes.
struct Run {
    colors: Vec<Color>,
    chi: Vec<usize>,
}

fn run(g: &Graph, md: &MdTree, solver: &dyn PrimeSolver, injection: Injection) -> Result<Run> {
    let mut colors: Vec<Color> = (1..=g.n() as Color).collect();
    let mut chi = vec![0usize; md.len()];
    let mut injector = Injector::new(injection);
    for id in md.post_order() {
        let node = md.node(id);
        match node.kind {
            NodeKind::Leaf(_) => chi[id] = 1,
            NodeKind::Series => chi[id] = node.children.iter().map(|&c| chi[c]).sum(),
            NodeKind::Parallel => {
                let mut best = node.children[0];
                for &c in &node.children[1..] {
                    if chi[c] > chi[best] {
                        best = c;
                    }
                }
                let target = palette_of(&colors, &md.node(best).vertices);
                for &c in node.children.iter().filter(|&&c| c != best) {
                    let child = &md.node(c).vertices;
                    let source = palette_of(&colors, child);
                    let images = injector.map(&source, &target);
                    recolor(&mut colors, child, &source, &images);
                }
                chi[id] = chi[best];
            }
            NodeKind::Prime => {
                chi[id] = color_prime_node(g, md, id, solver, &mut colors, &mut injector)?;
            }
        }
    }
    Ok(Run { colors, chi })
}

fn color_prime_node(
    g: &Graph,
    md: &MdTree,
    id: usize,
    solver: &dyn PrimeSolver,
    colors: &mut [Color],
    injector: &mut Injector,
) -> Result<usize> {
    let node = md.node(id);
    let x = &node.vertices;
    let local = |v: usize| x.binary_search(&v).expect("child vertex inside its parent");
    let children: Vec<Vec<usize>> = node
        .children
        .iter()
        .map(|&c| md.node(c).vertices.iter().map(|&v| local(v)).collect())
        .collect();
    let h = g.induced_sorted(x);
    let local_colors: Vec<Color> = x.iter().map(|&v| colors[v]).collect();
    let module = PrimeModule {
        graph: &h,
        children: &children,
        coloring: &local_colors,
    };
    let tau = solver
        .color_prime(&module)
        .ok_or_else(|| Error::UnsupportedPrime(x.clone()))?;
    let budget = module.budget();
    let contract = |msg: &'static str| Error::SolverContract {
        module: x.clone(),
        msg,
    };
    if tau.len() != x.len() || tau.iter().any(|c| budget.binary_search(c).is_err()) {
        return Err(contract("solver left the budget"));
    }
    if h.edges().any(|(u, v)| tau[u] == tau[v]) {
        return Err(contract("solver returned an improper coloring"));
    }
    // Keep each child's own coloring, renamed into the colors the solver
    // gave that child.
    for (child, &c) in children.iter().zip(&node.children) {
        let source = palette_of(&local_colors, child);
        let target = palette_of(&tau, child);
        if target.len() < source.len() {
            return Err(contract("solver merged colors inside a child"));
        }
        let images = injector.map(&source, &target);
        recolor(colors, &md.node(c).vertices, &source, &images);
    }
    Ok(palette_of(colors, x).len())
}

/// Chromatic number from the modular decomposition; prime nodes are solved
/// by `solver`.
pub fn chromatic_number(g: &Graph, solver: &dyn PrimeSolver) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let md = modular_decomposition(g)?;
    Ok(run(g, &md, solver, Injection::Canonical)?.chi[md.root()])
}

/// A modularly-minimal coloring with colors renamed to `1..=χ` in order of
/// first appearance.
pub fn modularly_minimal_coloring(g: &Graph, solver: &dyn PrimeSolver) -> Result<Coloring> {
    modularly_minimal_coloring_with(g, solver, Injection::Canonical)
}

pub fn modularly_minimal_coloring_with(
    g: &Graph,
    solver: &dyn PrimeSolver,
    injection: Injection,
) -> Result<Coloring> {
    if g.n() == 0 {
        return Ok(Coloring::from_vec_unchecked(Vec::new()));
    }
    let md = modular_decomposition(g)?;
    let out = run(g, &md, solver, injection)?;
    Ok(Coloring::from_vec_unchecked(out.colors).canonicalize())
}

/// A strong module colored with more colors than it needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModminViolation {
    pub module: Vec<usize>,
    pub colors: usize,
    pub chi: usize,
}

impl From<ModminViolation> for Error {
    fn from(v: ModminViolation) -> Self {
        Error::NotModularlyMinimal {
            module: v.module,
            colors: v.colors,
            chi: v.chi,
        }
    }
}

/// The largest strong module (first in tree order) whose color count
/// differs from its chromatic number.
pub fn modmin_violation(
    g: &Graph,
    sigma: &Coloring,
    solver: &dyn PrimeSolver,
) -> Result<Option<ModminViolation>> {
    g.check_proper(sigma)?;
    if g.n() == 0 {
        return Ok(None);
    }
    let md = modular_decomposition(g)?;
    let chi = run(g, &md, solver, Injection::Canonical)?.chi;
    let colors = sigma.as_slice();
    let mut queue = std::collections::VecDeque::from([md.root()]);
    while let Some(id) = queue.pop_front() {
        let node = md.node(id);
        let used = palette_of(colors, &node.vertices).len();
        if used != chi[id] {
            return Ok(Some(ModminViolation {
                module: node.vertices.clone(),
                colors: used,
                chi: chi[id],
            }));
        }
        queue.extend(&node.children);
    }
    Ok(None)
}

pub fn is_modularly_minimal(g: &Graph, sigma: &Coloring, solver: &dyn PrimeSolver) -> Result<bool> {
    Ok(modmin_violation(g, sigma, solver)?.is_none())
}

/// Turns a modularly-minimal coloring into one that is also strictly
/// hierarchical: top-down, every child of a parallel node has its palette
/// renamed by rank onto the smallest colors of the node's palette.
pub fn strictify(g: &Graph, sigma: &Coloring, solver: &dyn PrimeSolver) -> Result<Coloring> {
    if let Some(v) = modmin_violation(g, sigma, solver)? {
        return Err(v.into());
    }
    if g.n() == 0 {
        return Ok(sigma.clone());
    }
    let md = modular_decomposition(g)?;
    let mut colors = sigma.as_slice().to_vec();
    let mut stack = vec![md.root()];
    while let Some(id) = stack.pop() {
        let node = md.node(id);
        if node.kind == NodeKind::Parallel {
            let target = palette_of(&colors, &node.vertices);
            for &c in &node.children {
                let child = &md.node(c).vertices;
                let source = palette_of(&colors, child);
                let images = target[..source.len()].to_vec();
                recolor(&mut colors, child, &source, &images);
            }
        }
        stack.extend(&node.children);
    }
    Ok(Coloring::from_vec_unchecked(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::solver::{BruteForceSolver, FallbackSolver, NoPrimeSolver};
    use crate::coloring::{is_hierarchical, is_strictly_hierarchical};
    use crate::oracles::chi_bruteforce;
    use proptest::prelude::*;

    fn k3_p3() -> Graph {
        Graph::complete(3).disjoint_union(&Graph::path(3))
    }

    fn k4_k2_k2() -> Graph {
        Graph::complete(4)
            .disjoint_union(&Graph::complete(2))
            .disjoint_union(&Graph::complete(2))
    }

    #[test]
    fn chromatic_numbers_of_worked_examples() {
        assert_eq!(chromatic_number(&k3_p3(), &NoPrimeSolver).unwrap(), 3);
        assert_eq!(chromatic_number(&k4_k2_k2(), &NoPrimeSolver).unwrap(), 4);
        assert_eq!(
            chromatic_number(&Graph::cycle(5), &BruteForceSolver::default()).unwrap(),
            3
        );
        assert!(
            matches!(chromatic_number(&Graph::cycle(5), &NoPrimeSolver), Err(Error::UnsupportedPrime(m)) if m == vec![0, 1, 2, 3, 4])
        );
    }

    #[test]
    fn minimal_but_not_modularly_minimal() {
        let nested = Coloring::new(vec![1, 2, 3, 1, 2, 1]).unwrap();
        let wasteful = Coloring::new(vec![1, 2, 3, 1, 2, 3]).unwrap();
        assert!(is_modularly_minimal(&k3_p3(), &nested, &NoPrimeSolver).unwrap());
        assert_eq!(wasteful.num_colors(), 3);
        let v = modmin_violation(&k3_p3(), &wasteful, &NoPrimeSolver)
            .unwrap()
            .unwrap();
        assert_eq!((v.module, v.colors, v.chi), (vec![3, 4, 5], 3, 2));
    }

    #[test]
    fn k4_k2_k2_coloring() {
        let c = modularly_minimal_coloring(&k4_k2_k2(), &NoPrimeSolver).unwrap();
        assert_eq!(c.num_colors(), 4);
        let k4 = c.palette(&[0, 1, 2, 3]);
        for pair in [[4, 5], [6, 7]] {
            let p = c.palette(&pair);
            assert_eq!(p.len(), 2);
            assert!(p.iter().all(|x| k4.contains(x)));
        }
        assert_eq!(
            modularly_minimal_coloring(&Graph::empty(1), &NoPrimeSolver)
                .unwrap()
                .as_slice(),
            &[1]
        );
    }

    #[test]
    fn strictify_nests_k2_palettes() {
        let sigma = Coloring::new(vec![1, 2, 3, 4, 1, 2, 3, 4]).unwrap();
        let s = strictify(&k4_k2_k2(), &sigma, &NoPrimeSolver).unwrap();
        assert_eq!(s.palette(&[4, 5]), vec![1, 2]);
        assert_eq!(s.palette(&[6, 7]), vec![1, 2]);
        assert!(is_strictly_hierarchical(&k4_k2_k2(), &s).unwrap());
        assert!(is_modularly_minimal(&k4_k2_k2(), &s, &NoPrimeSolver).unwrap());
        let wasteful = Coloring::new(vec![1, 2, 3, 1, 2, 3]).unwrap();
        assert!(matches!(
            strictify(&k3_p3(), &wasteful, &NoPrimeSolver),
            Err(Error::NotModularlyMinimal { .. })
        ));
    }

    #[test]
    fn seeded_injection_stays_modularly_minimal() {
        let g = k4_k2_k2()
            .disjoint_union(&Graph::path(4))
            .join(&Graph::empty(2));
        for seed in 0..20 {
            let c = modularly_minimal_coloring_with(
                &g,
                &FallbackSolver::default(),
                Injection::Seeded(seed),
            )
            .unwrap();
            assert!(is_modularly_minimal(&g, &c, &FallbackSolver::default()).unwrap());
        }
    }

    proptest! {
        #[test]
        fn modmin_matches_bruteforce_and_strictifies(g in crate::graph::tests::arb_graph(8)) {
            let solver = BruteForceSolver::default();
            let c = modularly_minimal_coloring(&g, &solver).unwrap();
            prop_assert!(g.is_proper_coloring(&c));
            prop_assert_eq!(c.num_colors(), chi_bruteforce(&g).unwrap());
            prop_assert!(is_modularly_minimal(&g, &c, &solver).unwrap());
            prop_assert!(is_hierarchical(&g, &c).unwrap());
            let s = strictify(&g, &c, &solver).unwrap();
            prop_assert!(is_strictly_hierarchical(&g, &s).unwrap());
            prop_assert!(is_modularly_minimal(&g, &s, &solver).unwrap());
        }
    }
}
