//! Brute-force ground truth and random instances for testing.

pub mod brute;
pub mod enumerate;
pub mod generate;

pub use brute::{
    brute_force_strong_modules, chi_bruteforce, chi_coloring_bruteforce, find_p4_bruteforce,
    grundy_bruteforce, is_greedy_bruteforce, is_p4_sparse_bruteforce, OracleCaps,
};
pub use enumerate::{
    all_graphs, all_graphs_degree_sorted, enumerate_colorings, unlabeled_cographs, Colorings,
};
pub use generate::{generate, Flavor, GeneratorConfig};
