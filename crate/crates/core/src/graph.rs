//! Simple undirected graphs on vertices `0..n` and vertex colorings.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};

/// A color. Colors are positive; `0` never appears in a valid [`Coloring`].
pub type Color = u32;

/// Undirected simple graph with sorted adjacency lists.
///
/// Neighbor iteration is always in ascending vertex order, so everything
/// built on top of it is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj }
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    /// The cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Wraps adjacency lists that are already sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(v, l)| {
            l.windows(2).all(|w| w[0] < w[1])
                && l.iter()
                    .all(|&u| u != v && adj[u].binary_search(&v).is_ok())
        }));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut nb = self.adj[v].iter().peekable();
                let mut out = Vec::with_capacity(n - 1 - self.adj[v].len());
                for u in 0..n {
                    if nb.peek() == Some(&&u) {
                        nb.next();
                    } else if u != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Graph { adj }
    }

    /// The subgraph induced by `vertices`, relabeled `0..k` in ascending
    /// order of the original ids. The returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut ids = vertices.to_vec();
        ids.sort_unstable();
        ids.dedup();
        if let Some(&v) = ids.last() {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
        }
        Ok((self.induced_sorted(&ids), ids))
    }

    /// Induced subgraph on a sorted, deduplicated, in-range vertex list.
    pub(crate) fn induced_sorted(&self, ids: &[usize]) -> Graph {
        // Dense scratch map when the subgraph is a large share of the graph,
        // binary search otherwise.
        let adj = if ids.len() * 4 >= self.n() {
            let mut pos = vec![usize::MAX; self.n()];
            for (i, &v) in ids.iter().enumerate() {
                pos[v] = i;
            }
            ids.iter()
                .map(|&v| {
                    self.adj[v]
                        .iter()
                        .filter_map(|&u| Some(pos[u]).filter(|&p| p != usize::MAX))
                        .collect()
                })
                .collect()
        } else {
            ids.iter()
                .map(|&v| {
                    self.adj[v]
                        .iter()
                        .filter_map(|u| ids.binary_search(u).ok())
                        .collect()
                })
                .collect()
        };
        Graph { adj }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Connected components of the complement, computed in `O(n + m)`
    /// without materializing the complement. Same ordering as
    /// [`Graph::connected_components`].
    pub fn co_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut unvisited: Vec<usize> = (0..n).collect();
        let mut mark = vec![usize::MAX; n];
        let mut comps = Vec::new();
        let mut queue = Vec::new();
        let mut keep = Vec::with_capacity(n);
        while let Some(s) = unvisited.pop() {
            queue.push(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    mark[u] = v;
                }
                // Unvisited non-neighbors of v join the component; the
                // neighbors stay behind, paid for by v's adjacency list.
                keep.clear();
                for &u in &unvisited {
                    if mark[u] == v {
                        keep.push(u);
                    } else {
                        queue.push(u);
                    }
                }
                std::mem::swap(&mut unvisited, &mut keep);
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_unstable_by_key(|c| c[0]);
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&u| u + off).collect()),
        );
        Graph { adj }
    }

    /// Join: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.n(), other.n());
        let mut adj: Vec<Vec<usize>> = self
            .adj
            .iter()
            .map(|l| l.iter().copied().chain(a..a + b).collect())
            .collect();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| (0..a).chain(l.iter().map(|&u| u + a)).collect()),
        );
        Graph { adj }
    }

    /// True iff no edge is monochromatic. A coloring of the wrong length is
    /// never proper.
    pub fn is_proper_coloring(&self, sigma: &Coloring) -> bool {
        sigma.len() == self.n() && self.monochromatic_edge(sigma).is_none()
    }

    /// First monochromatic edge in lexicographic order.
    pub fn monochromatic_edge(&self, sigma: &Coloring) -> Option<(usize, usize)> {
        self.edges()
            .find(|&(u, v)| sigma.color(u) == sigma.color(v))
    }

    /// Errors unless `sigma` is a proper coloring of this graph.
    pub(crate) fn check_proper(&self, sigma: &Coloring) -> Result<()> {
        self.check_size(sigma)?;
        match self.monochromatic_edge(sigma) {
            Some((u, v)) => Err(Error::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }

    pub(crate) fn check_size(&self, sigma: &Coloring) -> Result<()> {
        if sigma.len() != self.n() {
            return Err(Error::ColoringSize {
                expected: self.n(),
                got: sigma.len(),
            });
        }
        Ok(())
    }
}

/// A total map from vertices to positive colors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor(v));
        }
        Ok(Coloring { colors })
    }

    pub(crate) fn from_vec_unchecked(colors: Vec<Color>) -> Self {
        debug_assert!(colors.iter().all(|&c| c > 0));
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.colors
    }

    /// The distinct colors on `vertices`.
    pub fn color_set(&self, vertices: &[usize]) -> BTreeSet<Color> {
        vertices.iter().map(|&v| self.colors[v]).collect()
    }

    /// The distinct colors on `vertices`, sorted.
    pub fn palette(&self, vertices: &[usize]) -> Vec<Color> {
        let mut p: Vec<Color> = vertices.iter().map(|&v| self.colors[v]).collect();
        p.sort_unstable();
        p.dedup();
        p
    }

    /// Number of distinct colors.
    pub fn num_colors(&self) -> usize {
        let mut p = self.colors.clone();
        p.sort_unstable();
        p.dedup();
        p.len()
    }

    /// Renames colors to `1..=k` in order of first appearance by vertex id.
    pub fn canonicalize(&self) -> Coloring {
        let mut rename: HashMap<Color, Color> = HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = rename.len() as Color + 1;
                *rename.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }

    /// The coloring restricted to `vertices`, relabeled in the given order.
    pub fn restrict(&self, vertices: &[usize]) -> Coloring {
        Coloring {
            colors: vertices.iter().map(|&v| self.colors[v]).collect(),
        }
    }
}

impl TryFrom<Vec<Color>> for Coloring {
    type Error = Error;

    fn try_from(colors: Vec<Color>) -> Result<Self> {
        Coloring::new(colors)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p4() -> Graph {
        Graph::path(4)
    }

    fn col(c: &[Color]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    #[test]
    fn from_edges_builds_path() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g, p4());
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn from_edges_single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(4, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.connected_components(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
    }

    #[test]
    fn p4_is_self_complementary() {
        // complement of 0-1-2-3 is the path 1-3-0-2
        let expected = Graph::from_edges(4, [(1, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(p4().complement(), expected);
    }

    #[test]
    fn induced_subgraphs() {
        let (h, map) = p4().induced_subgraph(&[2, 0, 1]).unwrap();
        assert_eq!(h, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (h, map) = p4().induced_subgraph(&[3]).unwrap();
        assert_eq!(h, Graph::empty(1));
        assert_eq!(map, vec![3]);
        let g = Graph::complete(3).disjoint_union(&Graph::path(3));
        let (h, _) = g.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(h, Graph::complete(3));
        assert!(matches!(
            p4().induced_subgraph(&[]),
            Err(Error::EmptyVertexSet)
        ));
    }

    #[test]
    fn components() {
        assert_eq!(p4().connected_components(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            Graph::empty(3).connected_components(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn co_components_of_join() {
        let g = Graph::empty(2).join(&Graph::path(3));
        assert_eq!(g.co_components(), vec![vec![0, 1], vec![2, 4], vec![3]]);
        let g = Graph::empty(2).join(&Graph::path(4));
        assert_eq!(g.co_components(), vec![vec![0, 1], vec![2, 3, 4, 5]]);
        assert_eq!(
            Graph::complete(3).co_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(p4().co_components(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn proper_colorings() {
        let k2 = Graph::complete(2);
        assert!(k2.is_proper_coloring(&col(&[1, 2])));
        assert!(!k2.is_proper_coloring(&col(&[1, 1])));
        assert!(p4().is_proper_coloring(&col(&[1, 2, 1, 2])));
        assert!(!p4().is_proper_coloring(&col(&[1, 2])));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(col(&[5, 5, 9]).canonicalize(), col(&[1, 1, 2]));
        assert_eq!(col(&[1, 2, 1, 3]).canonicalize(), col(&[1, 2, 1, 3]));
        assert!(Coloring::new(vec![1, 0]).is_err());
    }

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(8)) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            prop_assert_eq!(g.complement().co_components(), g.connected_components());
            prop_assert_eq!(g.co_components(), g.complement().connected_components());
        }

        #[test]
        fn canonicalize_is_idempotent_and_preserves_classes(c in proptest::collection::vec(1u32..6, 1..10)) {
            let sigma = Coloring::new(c).unwrap();
            let canon = sigma.canonicalize();
            prop_assert_eq!(canon.canonicalize(), canon.clone());
            for u in 0..sigma.len() {
                for v in 0..sigma.len() {
                    prop_assert_eq!(sigma.color(u) == sigma.color(v), canon.color(u) == canon.color(v));
                }
            }
        }

        #[test]
        fn properness_is_componentwise(g in arb_graph(8), seed in any::<u64>()) {
            let colors: Vec<Color> = (0..g.n()).map(|v| ((seed >> (v % 60)) & 3) as Color + 1).collect();
            let sigma = Coloring::new(colors).unwrap();
            let per_comp = g.connected_components().iter().all(|comp| {
                let (h, _) = g.induced_subgraph(comp).unwrap();
                h.is_proper_coloring(&sigma.restrict(comp))
            });
            prop_assert_eq!(g.is_proper_coloring(&sigma), per_comp);
            prop_assert_eq!(g.is_proper_coloring(&sigma), g.is_proper_coloring(&sigma.canonicalize()));
        }
    }
}
