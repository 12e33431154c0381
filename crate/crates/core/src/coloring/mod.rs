//! Coloring construction and verification.

pub mod count;
pub mod greedy;
pub mod hc;
pub mod hierarchy;
pub mod modmin;
pub mod solver;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Color;

pub use count::{count_hc_colorings, count_hc_colorings_total, injections, HcCount};
pub use greedy::{greedy_coloring, greedy_violation, is_greedy_coloring};
pub use hc::{
    hc_violation, is_hc_coloring, is_tt_minimal, tt_minimal_coloring, tt_violation, HcViolation,
};
pub use hierarchy::{hierarchy_violation, is_hierarchical, is_strictly_hierarchical};
pub use modmin::{
    chromatic_number, is_modularly_minimal, modmin_violation, modularly_minimal_coloring,
    modularly_minimal_coloring_with, strictify, ModminViolation,
};
pub use solver::{BruteForceSolver, FallbackSolver, NoPrimeSolver, PrimeModule, PrimeSolver};

/// How a smaller palette is mapped into a larger one when two color sets
/// must be nested.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Injection {
    /// The i-th smallest source color goes to the i-th smallest target color.
    #[default]
    Canonical,
    /// A uniformly random injection drawn from a seeded generator.
    Seeded(u64),
}

pub(crate) struct Injector {
    rng: Option<ChaCha8Rng>,
}

impl Injector {
    pub(crate) fn new(mode: Injection) -> Self {
        match mode {
            Injection::Canonical => Injector { rng: None },
            Injection::Seeded(seed) => Injector {
                rng: Some(ChaCha8Rng::seed_from_u64(seed)),
            },
        }
    }

    /// Images of the sorted `source` colors inside the sorted `target`.
    pub(crate) fn map(&mut self, source: &[Color], target: &[Color]) -> Vec<Color> {
        debug_assert!(source.len() <= target.len());
        match &mut self.rng {
            None => target[..source.len()].to_vec(),
            Some(rng) => {
                let mut pool = target.to_vec();
                let (chosen, _) = pool.partial_shuffle(rng, source.len());
                chosen.to_vec()
            }
        }
    }
}

/// Replaces each color of `vertices` found in the sorted `source` by the
/// aligned entry of `images`.
pub(crate) fn recolor(
    colors: &mut [Color],
    vertices: &[usize],
    source: &[Color],
    images: &[Color],
) {
    for &v in vertices {
        if let Ok(i) = source.binary_search(&colors[v]) {
            colors[v] = images[i];
        }
    }
}

/// Sorted distinct colors on `vertices`.
pub(crate) fn palette_of(colors: &[Color], vertices: &[usize]) -> Vec<Color> {
    let mut p: Vec<Color> = vertices.iter().map(|&v| colors[v]).collect();
    p.sort_unstable();
    p.dedup();
    p
}

/// True iff the sorted `small` is a subset of the sorted `large`.
pub(crate) fn is_subset(small: &[Color], large: &[Color]) -> bool {
    let mut it = large.iter();
    small.iter().all(|c| it.by_ref().any(|d| d == c))
}

/// True iff the sorted slices share no color.
pub(crate) fn is_disjoint(a: &[Color], b: &[Color]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}
