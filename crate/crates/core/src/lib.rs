//! Hierarchical and modularly-minimal vertex colorings.
//!
//! The crate builds modular decomposition trees, cotrees of cographs and
//! spider decompositions, and uses them to construct and verify several
//! kinds of colorings:
//!
//! * greedy colorings,
//! * colorings that are hierarchical with respect to a binary cotree,
//! * (T,t)-minimal colorings,
//! * hierarchical, strictly hierarchical and modularly-minimal colorings,
//!
//! along with an exact count of hierarchical colorings along a cotree.
//! The [`oracles`] module holds brute-force references and seeded
//! generators used by the test suites.
//!
//! ```
//! use modcolor::{coloring, Graph, NoPrimeSolver};
//!
//! let g = Graph::complete(3).disjoint_union(&Graph::path(3));
//! let sigma = coloring::modularly_minimal_coloring(&g, &NoPrimeSolver).unwrap();
//! assert_eq!(sigma.num_colors(), 3);
//! assert!(coloring::is_modularly_minimal(&g, &sigma, &NoPrimeSolver).unwrap());
//! ```

pub mod cli;
pub mod coloring;
pub mod cotree;
pub mod error;
pub mod graph;
pub mod io;
pub mod mdtree;
pub mod oracles;
pub mod p4sparse;

pub use coloring::{
    BruteForceSolver, FallbackSolver, Injection, NoPrimeSolver, PrimeModule, PrimeSolver,
};
pub use cotree::{BinaryCotree, Cotree, Op, RefinePolicy};
pub use error::{Error, Result};
pub use graph::{Color, Coloring, Graph};
pub use mdtree::{MdNode, MdTree, NodeKind};
pub use p4sparse::{SpiderDecomposition, SpiderFlavor, SpiderSolver};
