//! Strategies for coloring prime nodes of the modular decomposition.

use crate::graph::{Color, Graph};
use crate::mdtree::quotient_unchecked;
use crate::oracles::brute::chi_coloring_capped;
use crate::p4sparse::SpiderSolver;

/// A prime strong module handed to a solver.
///
/// `graph` is the module's induced subgraph, `children` its maximal strong
/// submodules in local ids, and `coloring` the current local coloring, in
/// which every child is already colored minimally and the children's
/// palettes are pairwise disjoint.
#[derive(Clone, Copy, Debug)]
pub struct PrimeModule<'a> {
    pub graph: &'a Graph,
    pub children: &'a [Vec<usize>],
    pub coloring: &'a [Color],
}

impl PrimeModule<'_> {
    /// The colors a solver may use: the union of the children's palettes.
    pub fn budget(&self) -> Vec<Color> {
        let mut b = self.coloring.to_vec();
        b.sort_unstable();
        b.dedup();
        b
    }
}

/// Colors a prime module with its chromatic number of colors, drawn from
/// the module's budget, or refuses with `None`.
pub trait PrimeSolver {
    fn color_prime(&self, module: &PrimeModule<'_>) -> Option<Vec<Color>>;
}

impl<T: PrimeSolver + ?Sized> PrimeSolver for &T {
    fn color_prime(&self, module: &PrimeModule<'_>) -> Option<Vec<Color>> {
        (**self).color_prime(module)
    }
}

/// Refuses every prime module. Enough for cographs.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoPrimeSolver;

impl PrimeSolver for NoPrimeSolver {
    fn color_prime(&self, _: &PrimeModule<'_>) -> Option<Vec<Color>> {
        None
    }
}

/// Exact solver by backtracking on the quotient with each child blown up
/// to a clique of its color count. Refuses when that graph exceeds `cap`
/// vertices.
#[derive(Clone, Copy, Debug)]
pub struct BruteForceSolver {
    pub cap: usize,
}

impl Default for BruteForceSolver {
    fn default() -> Self {
        BruteForceSolver { cap: 16 }
    }
}

impl PrimeSolver for BruteForceSolver {
    fn color_prime(&self, module: &PrimeModule<'_>) -> Option<Vec<Color>> {
        let g = module.graph;
        let mut part_of = vec![usize::MAX; g.n()];
        for (i, child) in module.children.iter().enumerate() {
            for &v in child {
                part_of[v] = i;
            }
        }
        let quotient = quotient_unchecked(g, module.children, &part_of);
        let palettes: Vec<Vec<Color>> = module
            .children
            .iter()
            .map(|child| {
                let mut p: Vec<Color> = child.iter().map(|&v| module.coloring[v]).collect();
                p.sort_unstable();
                p.dedup();
                p
            })
            .collect();
        let mut offset = Vec::with_capacity(palettes.len() + 1);
        offset.push(0);
        for p in &palettes {
            offset.push(offset.last().unwrap() + p.len());
        }
        let size = *offset.last().unwrap();
        if size > self.cap {
            return None;
        }
        let mut edges = Vec::new();
        for (i, p) in palettes.iter().enumerate() {
            for a in 0..p.len() {
                edges.extend((a + 1..p.len()).map(|b| (offset[i] + a, offset[i] + b)));
            }
        }
        for (i, j) in quotient.edges() {
            for a in offset[i]..offset[i + 1] {
                edges.extend((offset[j]..offset[j + 1]).map(|b| (a, b)));
            }
        }
        let blown = Graph::from_edges(size, edges).ok()?;
        let chi_colors = chi_coloring_capped(&blown, self.cap).ok()?;
        let budget = module.budget();
        let chi = chi_colors.iter().copied().max().unwrap_or(0) as usize;
        if chi > budget.len() {
            return None;
        }
        let mut out = module.coloring.to_vec();
        for (i, child) in module.children.iter().enumerate() {
            let mut images: Vec<Color> = (offset[i]..offset[i + 1])
                .map(|x| budget[chi_colors[x] as usize - 1])
                .collect();
            images.sort_unstable();
            super::recolor(&mut out, child, &palettes[i], &images);
        }
        Some(out)
    }
}

/// Tries the spider construction first and falls back to brute force.
#[derive(Clone, Copy, Debug, Default)]
pub struct FallbackSolver {
    pub brute: BruteForceSolver,
}

impl PrimeSolver for FallbackSolver {
    fn color_prime(&self, module: &PrimeModule<'_>) -> Option<Vec<Color>> {
        SpiderSolver
            .color_prime(module)
            .or_else(|| self.brute.color_prime(module))
    }
}
