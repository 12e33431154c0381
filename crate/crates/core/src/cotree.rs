//! Cotrees: cograph recognition, discriminating cotrees, binary refinements
//! and their enumeration, and reconstruction of a cograph from a cotree.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::mdtree::{modular_decomposition, MdTree, NodeId, NodeKind};

/// Label of an inner cotree node: `t = 0` is a disjoint union, `t = 1` a join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Union,
    Join,
}

impl Op {
    pub fn label(self) -> usize {
        match self {
            Op::Union => 0,
            Op::Join => 1,
        }
    }

    pub fn from_label(label: usize) -> Option<Op> {
        match label {
            0 => Some(Op::Union),
            1 => Some(Op::Join),
            _ => None,
        }
    }
}

/// A rooted cotree with arbitrary arity. Leaves carry vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cotree {
    Leaf(usize),
    Inner { op: Op, children: Vec<Cotree> },
}

impl Cotree {
    pub fn leaf(v: usize) -> Cotree {
        Cotree::Leaf(v)
    }

    pub fn union(children: Vec<Cotree>) -> Cotree {
        Cotree::Inner {
            op: Op::Union,
            children,
        }
    }

    pub fn join(children: Vec<Cotree>) -> Cotree {
        Cotree::Inner {
            op: Op::Join,
            children,
        }
    }

    /// `L(T)` in depth-first order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Inner { children, .. } => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn min_leaf(&self) -> usize {
        match self {
            Cotree::Leaf(v) => *v,
            Cotree::Inner { children, .. } => children
                .iter()
                .map(Cotree::min_leaf)
                .min()
                .unwrap_or(usize::MAX),
        }
    }

    pub fn is_binary(&self) -> bool {
        match self {
            Cotree::Leaf(_) => true,
            Cotree::Inner { children, .. } => {
                children.len() == 2 && children.iter().all(Cotree::is_binary)
            }
        }
    }

    /// Every node's leaf set (sorted) with its label; leaves have no label.
    pub fn node_sets(&self) -> Vec<(Vec<usize>, Option<Op>)> {
        let mut out = Vec::new();
        self.collect_sets(&mut out);
        out
    }

    fn collect_sets(&self, out: &mut Vec<(Vec<usize>, Option<Op>)>) -> Vec<usize> {
        match self {
            Cotree::Leaf(v) => {
                out.push((vec![*v], None));
                vec![*v]
            }
            Cotree::Inner { op, children } => {
                let mut all: Vec<usize> =
                    children.iter().flat_map(|c| c.collect_sets(out)).collect();
                all.sort_unstable();
                out.push((all.clone(), Some(*op)));
                all
            }
        }
    }

    /// Chromatic number of the generated cograph: 1 at leaves, max over a
    /// union, sum over a join.
    pub fn chromatic_number(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Inner {
                op: Op::Union,
                children,
            } => children
                .iter()
                .map(Cotree::chromatic_number)
                .max()
                .unwrap_or(0),
            Cotree::Inner {
                op: Op::Join,
                children,
            } => children.iter().map(Cotree::chromatic_number).sum(),
        }
    }

    /// Same tree with children ordered by smallest leaf, recursively. Two
    /// cotrees induce the same labeled set system iff their canonical forms
    /// are equal.
    pub fn canonical(&self) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(*v),
            Cotree::Inner { op, children } => {
                let mut children: Vec<Cotree> = children.iter().map(Cotree::canonical).collect();
                children.sort_by_key(Cotree::min_leaf);
                Cotree::Inner { op: *op, children }
            }
        }
    }

    /// Merges every inner child into its parent when both carry the same
    /// label. Applied to any cotree of a cograph this yields the
    /// discriminating cotree.
    pub fn contract(&self) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(*v),
            Cotree::Inner { op, children } => {
                let mut merged = Vec::new();
                for child in children.iter().map(Cotree::contract) {
                    match child {
                        Cotree::Inner {
                            op: cop,
                            children: grand,
                        } if cop == *op => merged.extend(grand),
                        other => merged.push(other),
                    }
                }
                Cotree::Inner {
                    op: *op,
                    children: merged,
                }
            }
        }
    }

    /// Checks arity (every inner node has at least two children) and that
    /// no leaf label repeats.
    pub fn validate_structure(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        self.validate_rec(&mut seen)
    }

    fn validate_rec(&self, seen: &mut BTreeSet<usize>) -> Result<()> {
        match self {
            Cotree::Leaf(v) => {
                if !seen.insert(*v) {
                    return Err(Error::DuplicateLeaf(*v));
                }
                Ok(())
            }
            Cotree::Inner { children, .. } => {
                if children.len() < 2 {
                    return Err(Error::InvalidCotree(format!(
                        "inner node with {} children",
                        children.len()
                    )));
                }
                children.iter().try_for_each(|c| c.validate_rec(seen))
            }
        }
    }

    /// Checks that this is a cotree of `g`: the leaves are exactly the
    /// vertices of `g` and every inner node joins (or separates) its
    /// children exactly as its label says.
    pub fn validate_against(&self, g: &Graph) -> Result<()> {
        self.validate_structure()?;
        let leaves = self.leaves();
        let n = g.n();
        if leaves.len() != n || leaves.iter().any(|&v| v >= n) {
            return Err(Error::CotreeMismatch(format!(
                "leaf set has {} labels, graph has {} vertices",
                leaves.len(),
                n
            )));
        }
        let mut owner = vec![(usize::MAX, usize::MAX); n];
        let mut stamp = 0;
        self.check_node(g, &mut owner, &mut stamp)?;
        Ok(())
    }

    fn check_node(
        &self,
        g: &Graph,
        owner: &mut [(usize, usize)],
        stamp: &mut usize,
    ) -> Result<Vec<usize>> {
        let Cotree::Inner { op, children } = self else {
            let Cotree::Leaf(v) = self else {
                unreachable!()
            };
            return Ok(vec![*v]);
        };
        let parts: Vec<Vec<usize>> = children
            .iter()
            .map(|c| c.check_node(g, owner, stamp))
            .collect::<Result<_>>()?;
        *stamp += 1;
        let total: usize = parts.iter().map(Vec::len).sum();
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                owner[v] = (*stamp, i);
            }
        }
        for (i, part) in parts.iter().enumerate() {
            let expected = match op {
                Op::Union => 0,
                Op::Join => total - part.len(),
            };
            for &v in part {
                let across = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| owner[u].0 == *stamp && owner[u].1 != i)
                    .count();
                if across != expected {
                    return Err(Error::CotreeMismatch(format!(
                        "vertex {v} has {across} neighbors in sibling subtrees of a {} node, expected {expected}",
                        if *op == Op::Join { "join" } else { "union" }
                    )));
                }
            }
        }
        Ok(parts.concat())
    }

    /// Newick rendering with inner labels `0`/`1` after each parenthesis,
    /// e.g. `((0,1)1,2,3)0;`.
    pub fn newick(&self) -> String {
        let mut s = self.to_string();
        s.push(';');
        s
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Leaf(v) => write!(f, "{v}"),
            Cotree::Inner { op, children } => {
                f.write_str("(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "){}", op.label())
            }
        }
    }
}

/// JSON shape: `{"label": 0|1, "children": [...]}` for inner nodes and
/// `{"label": vertex}` for leaves.
#[derive(Serialize, Deserialize)]
struct CotreeJson {
    label: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    children: Vec<CotreeJson>,
}

impl From<&Cotree> for CotreeJson {
    fn from(t: &Cotree) -> Self {
        match t {
            Cotree::Leaf(v) => CotreeJson {
                label: *v,
                children: Vec::new(),
            },
            Cotree::Inner { op, children } => CotreeJson {
                label: op.label(),
                children: children.iter().map(CotreeJson::from).collect(),
            },
        }
    }
}

impl TryFrom<CotreeJson> for Cotree {
    type Error = Error;

    fn try_from(j: CotreeJson) -> Result<Self> {
        if j.children.is_empty() {
            return Ok(Cotree::Leaf(j.label));
        }
        let op = Op::from_label(j.label).ok_or_else(|| {
            Error::InvalidCotree(format!("inner label {} is neither 0 nor 1", j.label))
        })?;
        let children = j
            .children
            .into_iter()
            .map(Cotree::try_from)
            .collect::<Result<_>>()?;
        Ok(Cotree::Inner { op, children })
    }
}

impl Serialize for Cotree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CotreeJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cotree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = CotreeJson::deserialize(d)?;
        Cotree::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// A cotree in which every inner node has exactly two children.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BinaryCotree(Cotree);

impl BinaryCotree {
    pub fn new(tree: Cotree) -> Result<Self> {
        tree.validate_structure()?;
        if !tree.is_binary() {
            return Err(Error::InvalidCotree(
                "inner node without exactly two children".into(),
            ));
        }
        Ok(BinaryCotree(tree))
    }

    /// Builds a binary cotree and checks that it generates `g`.
    pub fn for_graph(tree: Cotree, g: &Graph) -> Result<Self> {
        let t = Self::new(tree)?;
        t.0.validate_against(g)?;
        Ok(t)
    }

    pub fn tree(&self) -> &Cotree {
        &self.0
    }

    pub fn into_inner(self) -> Cotree {
        self.0
    }
}

impl<'de> Deserialize<'de> for BinaryCotree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let t = Cotree::deserialize(d)?;
        BinaryCotree::new(t).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for BinaryCotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An induced P4 `a-b-c-d`, if `g` has one, normalized so that `a < d`.
///
/// Inside a prime node of the modular decomposition the quotient (one
/// representative per child) is prime and therefore contains a P4, which
/// lifts to `g` through the representatives.
pub fn find_p4(g: &Graph) -> Option<[usize; 4]> {
    if g.n() < 4 {
        return None;
    }
    let md = modular_decomposition(g).ok()?;
    let prime = md.nodes().iter().find(|n| n.kind == NodeKind::Prime)?;
    let reps: Vec<usize> = prime
        .children
        .iter()
        .map(|&c| md.node(c).vertices[0])
        .collect();
    let k = reps.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    if let Some(p) = induced_p4(g, [reps[a], reps[b], reps[c], reps[d]]) {
                        return Some(p);
                    }
                }
            }
        }
    }
    unreachable!("a prime quotient always contains an induced P4")
}

/// If the four vertices induce a P4, returns it in path order with the
/// smaller endpoint first.
pub(crate) fn induced_p4(g: &Graph, q: [usize; 4]) -> Option<[usize; 4]> {
    let mut deg = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if g.has_edge(q[i], q[j]) {
                deg[i] += 1;
                deg[j] += 1;
                edges += 1;
            }
        }
    }
    // P4 is the only 4-vertex graph with 3 edges and degrees (1,1,2,2)
    // besides the star and triangle-plus-isolated, which have other degrees.
    let ones = deg.iter().filter(|&&d| d == 1).count();
    let twos = deg.iter().filter(|&&d| d == 2).count();
    if edges != 3 || ones != 2 || twos != 2 {
        return None;
    }
    let ends: Vec<usize> = (0..4).filter(|&i| deg[i] == 1).map(|i| q[i]).collect();
    let (a, d) = (ends[0].min(ends[1]), ends[0].max(ends[1]));
    let mids: Vec<usize> = (0..4).filter(|&i| deg[i] == 2).map(|i| q[i]).collect();
    let (b, c) = if g.has_edge(a, mids[0]) {
        (mids[0], mids[1])
    } else {
        (mids[1], mids[0])
    };
    Some([a, b, c, d])
}

pub fn is_cograph(g: &Graph) -> bool {
    g.n() == 0
        || !modular_decomposition(g)
            .map(|md| md.has_prime())
            .unwrap_or(false)
}

/// The discriminating cotree, read off the modular decomposition.
pub fn discriminating_cotree(g: &Graph) -> Result<Cotree> {
    let md = modular_decomposition(g)?;
    if md.has_prime() {
        return Err(Error::NotACograph(
            find_p4(g).expect("prime node implies a P4"),
        ));
    }
    Ok(from_md(&md, md.root()))
}

fn from_md(md: &MdTree, id: NodeId) -> Cotree {
    let node = md.node(id);
    let op = match node.kind {
        NodeKind::Leaf(v) => return Cotree::Leaf(v),
        NodeKind::Parallel => Op::Union,
        NodeKind::Series => Op::Join,
        NodeKind::Prime => unreachable!("cographs have no prime nodes"),
    };
    Cotree::Inner {
        op,
        children: node.children.iter().map(|&c| from_md(md, c)).collect(),
    }
}

/// How a k-ary node is replaced by a binary tree.
#[derive(Clone, Copy, Debug)]
pub enum RefinePolicy<'a> {
    /// `((c1, c2), c3), ...` in the given child order.
    LeftComb,
    /// Split the child list in halves recursively.
    BalancedSplit,
    /// Union nodes become caterpillars over children sorted by ascending
    /// number of colors under the given coloring; join nodes a left comb.
    ColorSorted(&'a Coloring),
    /// Like `ColorSorted` but ordering union children by chromatic number.
    ChiSorted,
}

/// Replaces every node with more than two children by a binary tree with
/// the same label. Nodes with two children keep their order.
pub fn binary_refine(tree: &Cotree, policy: RefinePolicy<'_>) -> Result<BinaryCotree> {
    tree.validate_structure()?;
    if let RefinePolicy::ColorSorted(sigma) = policy {
        if let Some(&v) = tree.leaves().iter().find(|&&v| v >= sigma.len()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: sigma.len(),
            });
        }
    }
    Ok(BinaryCotree(refine_rec(tree, policy)))
}

fn refine_rec(tree: &Cotree, policy: RefinePolicy<'_>) -> Cotree {
    let Cotree::Inner { op, children } = tree else {
        return tree.clone();
    };
    let op = *op;
    let mut parts: Vec<(usize, Cotree)> = children
        .iter()
        .map(|c| {
            let key = match policy {
                RefinePolicy::ColorSorted(sigma) => sigma.palette(&c.leaves()).len(),
                RefinePolicy::ChiSorted => c.chromatic_number(),
                _ => 0,
            };
            (key, refine_rec(c, policy))
        })
        .collect();
    if parts.len() == 2 {
        let [(_, a), (_, b)]: [(usize, Cotree); 2] = parts.try_into().expect("two children");
        return Cotree::Inner {
            op,
            children: vec![a, b],
        };
    }
    match policy {
        RefinePolicy::BalancedSplit => balanced(op, parts.into_iter().map(|(_, t)| t).collect()),
        RefinePolicy::ColorSorted(_) | RefinePolicy::ChiSorted if op == Op::Union => {
            parts.sort_by_key(|(k, _)| *k);
            left_comb(op, parts.into_iter().map(|(_, t)| t))
        }
        _ => left_comb(op, parts.into_iter().map(|(_, t)| t)),
    }
}

fn left_comb(op: Op, items: impl IntoIterator<Item = Cotree>) -> Cotree {
    let mut it = items.into_iter();
    let first = it.next().expect("at least one child");
    it.fold(first, |acc, t| Cotree::Inner {
        op,
        children: vec![acc, t],
    })
}

fn balanced(op: Op, mut items: Vec<Cotree>) -> Cotree {
    if items.len() == 1 {
        return items.pop().expect("one item");
    }
    let right = items.split_off(items.len().div_ceil(2));
    Cotree::Inner {
        op,
        children: vec![balanced(op, items), balanced(op, right)],
    }
}

/// Builds the cograph generated by a cotree whose leaves are exactly
/// `0..n`.
pub fn cograph_from_cotree(tree: &Cotree) -> Result<Graph> {
    tree.validate_structure()?;
    let leaves = tree.leaves();
    let n = leaves.len();
    if let Some(&v) = leaves.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidCotree(format!(
            "leaf {v} out of range for {n} leaves"
        )));
    }
    let mut edges = Vec::new();
    collect_edges(tree, &mut edges);
    Graph::from_edges(n, edges)
}

fn collect_edges(tree: &Cotree, edges: &mut Vec<(usize, usize)>) -> Vec<usize> {
    match tree {
        Cotree::Leaf(v) => vec![*v],
        Cotree::Inner { op, children } => {
            let parts: Vec<Vec<usize>> = children.iter().map(|c| collect_edges(c, edges)).collect();
            if *op == Op::Join {
                for i in 0..parts.len() {
                    for j in i + 1..parts.len() {
                        for &u in &parts[i] {
                            edges.extend(parts[j].iter().map(|&v| (u, v)));
                        }
                    }
                }
            }
            parts.concat()
        }
    }
}

/// Number of binary refinements of `tree`: the product over inner nodes of
/// `(2k - 3)!!` for a node with `k` children, saturating at `u128::MAX`.
pub fn binary_refinement_count(tree: &Cotree) -> u128 {
    match tree {
        Cotree::Leaf(_) => 1,
        Cotree::Inner { children, .. } => {
            let own =
                (2..children.len()).fold(1u128, |acc, i| acc.saturating_mul(2 * i as u128 - 1));
            children
                .iter()
                .fold(own, |acc, c| acc.saturating_mul(binary_refinement_count(c)))
        }
    }
}

/// Lazily enumerates the binary cotrees of a cograph.
///
/// Each k-ary node of the discriminating cotree is refined by every
/// unordered binary tree on its k children. Such trees are encoded by
/// inserting child `i` (for `i = 2..k`) above one of the `2i - 1` nodes of
/// the tree built so far, so a node contributes `(2k - 3)!!` shapes and the
/// whole cotree the product of those. Distinct codes give distinct trees.
#[derive(Debug)]
pub struct BinaryCotrees {
    base: Cotree,
    radices: Vec<usize>,
    digits: Vec<usize>,
    remaining: usize,
    done: bool,
}

/// All binary cotrees of `g`, at most `limit` of them.
pub fn enumerate_binary_cotrees(g: &Graph, limit: usize) -> Result<BinaryCotrees> {
    let base = discriminating_cotree(g)?;
    Ok(BinaryCotrees::new(base, limit))
}

impl BinaryCotrees {
    pub fn new(base: Cotree, limit: usize) -> Self {
        let mut radices = Vec::new();
        collect_radices(&base, &mut radices);
        let digits = vec![0; radices.len()];
        BinaryCotrees {
            base,
            radices,
            digits,
            remaining: limit,
            done: limit == 0,
        }
    }

    fn build(&self) -> Cotree {
        let mut cursor = 0;
        build_from_digits(&self.base, &self.digits, &mut cursor)
    }

    fn advance(&mut self) {
        for (d, &r) in self.digits.iter_mut().zip(&self.radices) {
            *d += 1;
            if *d < r {
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

impl Iterator for BinaryCotrees {
    type Item = BinaryCotree;

    fn next(&mut self) -> Option<BinaryCotree> {
        if self.done {
            return None;
        }
        let tree = self.build();
        self.remaining -= 1;
        if self.remaining == 0 {
            self.done = true;
        } else {
            self.advance();
        }
        Some(BinaryCotree(tree))
    }
}

fn collect_radices(tree: &Cotree, radices: &mut Vec<usize>) {
    if let Cotree::Inner { children, .. } = tree {
        radices.extend((2..children.len()).map(|i| 2 * i - 1));
        children.iter().for_each(|c| collect_radices(c, radices));
    }
}

fn build_from_digits(tree: &Cotree, digits: &[usize], cursor: &mut usize) -> Cotree {
    let Cotree::Inner { op, children } = tree else {
        return tree.clone();
    };
    let k = children.len();
    let own = &digits[*cursor..*cursor + k.saturating_sub(2)];
    *cursor += k.saturating_sub(2);
    let built: Vec<Cotree> = children
        .iter()
        .map(|c| build_from_digits(c, digits, cursor))
        .collect();
    Shape::from_code(k, own).materialize(*op, &built)
}

/// Unordered binary tree over `k` labeled slots, built by edge insertion.
struct Shape {
    nodes: Vec<ShapeNode>,
    parent: Vec<Option<usize>>,
    root: usize,
}

#[derive(Clone, Copy)]
enum ShapeNode {
    Slot(usize),
    Inner(usize, usize),
}

impl Shape {
    fn from_code(k: usize, code: &[usize]) -> Shape {
        let mut s = Shape {
            nodes: vec![
                ShapeNode::Slot(0),
                ShapeNode::Slot(1),
                ShapeNode::Inner(0, 1),
            ],
            parent: vec![Some(2), Some(2), None],
            root: 2,
        };
        for i in 2..k {
            s.insert_above(code[i - 2], i);
        }
        s
    }

    fn insert_above(&mut self, target: usize, slot: usize) {
        let leaf = self.nodes.len();
        self.nodes.push(ShapeNode::Slot(slot));
        let inner = self.nodes.len();
        self.nodes.push(ShapeNode::Inner(target, leaf));
        let up = self.parent[target];
        self.parent.push(Some(inner));
        self.parent.push(up);
        match up {
            Some(q) => {
                if let ShapeNode::Inner(a, b) = &mut self.nodes[q] {
                    if *a == target {
                        *a = inner;
                    } else {
                        *b = inner;
                    }
                }
            }
            None => self.root = inner,
        }
        self.parent[target] = Some(inner);
    }

    fn materialize(&self, op: Op, built: &[Cotree]) -> Cotree {
        self.materialize_at(self.root, op, built)
    }

    fn materialize_at(&self, id: usize, op: Op, built: &[Cotree]) -> Cotree {
        match self.nodes[id] {
            ShapeNode::Slot(i) => built[i].clone(),
            ShapeNode::Inner(a, b) => Cotree::Inner {
                op,
                children: vec![
                    self.materialize_at(a, op, built),
                    self.materialize_at(b, op, built),
                ],
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn k2_k1_k1() -> Graph {
        Graph::from_edges(4, [(0, 1)]).unwrap()
    }

    #[test]
    fn recognition() {
        assert!(!is_cograph(&Graph::path(4)));
        assert_eq!(find_p4(&Graph::path(4)), Some([0, 1, 2, 3]));
        let g = Graph::complete(4)
            .disjoint_union(&Graph::complete(2))
            .disjoint_union(&Graph::complete(2));
        assert!(is_cograph(&g));
        assert_eq!(find_p4(&g), None);
        assert!(!is_cograph(&Graph::cycle(5)));
        let w = find_p4(&Graph::cycle(5)).unwrap();
        assert!(induced_p4(&Graph::cycle(5), w).is_some());
    }

    #[test]
    fn discriminating_cotree_of_k2_k1_k1() {
        let t = discriminating_cotree(&k2_k1_k1()).unwrap();
        let expected = Cotree::union(vec![
            Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
            Cotree::leaf(2),
            Cotree::leaf(3),
        ]);
        assert_eq!(t, expected);
        assert_eq!(
            discriminating_cotree(&Graph::empty(1)).unwrap(),
            Cotree::leaf(0)
        );
        assert!(matches!(
            discriminating_cotree(&Graph::path(4)),
            Err(Error::NotACograph(_))
        ));
    }

    #[test]
    fn cograph_from_k2_k1_k1_cotree() {
        let t = Cotree::union(vec![
            Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
            Cotree::union(vec![Cotree::leaf(2), Cotree::leaf(3)]),
        ]);
        assert_eq!(cograph_from_cotree(&t).unwrap(), k2_k1_k1());
        assert_eq!(
            cograph_from_cotree(&Cotree::leaf(0)).unwrap(),
            Graph::empty(1)
        );
        let dup = Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(0)]);
        assert!(matches!(
            cograph_from_cotree(&dup),
            Err(Error::DuplicateLeaf(0))
        ));
    }

    #[test]
    fn left_comb_refinement() {
        let t = Cotree::union(vec![Cotree::leaf(0), Cotree::leaf(1), Cotree::leaf(2)]);
        let b = binary_refine(&t, RefinePolicy::LeftComb).unwrap();
        let expected = Cotree::union(vec![
            Cotree::union(vec![Cotree::leaf(0), Cotree::leaf(1)]),
            Cotree::leaf(2),
        ]);
        assert_eq!(b.tree(), &expected);
    }

    #[test]
    fn binary_trees_are_fixed_points() {
        let t = Cotree::union(vec![
            Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
            Cotree::leaf(2),
        ]);
        let sigma = Coloring::new(vec![3, 1, 2]).unwrap();
        for policy in [
            RefinePolicy::LeftComb,
            RefinePolicy::BalancedSplit,
            RefinePolicy::ColorSorted(&sigma),
            RefinePolicy::ChiSorted,
        ] {
            assert_eq!(binary_refine(&t, policy).unwrap().tree(), &t);
        }
    }

    #[test]
    fn color_sorted_builds_caterpillar() {
        // K2 on {0,1}, isolated 2 and 3; the K2 needs the most colors and
        // goes last.
        let t = discriminating_cotree(&k2_k1_k1()).unwrap();
        let sigma = Coloring::new(vec![1, 2, 1, 1]).unwrap();
        let b = binary_refine(&t, RefinePolicy::ColorSorted(&sigma)).unwrap();
        assert_eq!(b.to_string(), "((2,3)0,(0,1)1)0");
    }

    #[test]
    fn balanced_split_shape() {
        let t = Cotree::join((0..4).map(Cotree::leaf).collect());
        let b = binary_refine(&t, RefinePolicy::BalancedSplit).unwrap();
        assert_eq!(b.to_string(), "((0,1)1,(2,3)1)1");
    }

    #[test]
    fn enumeration_counts() {
        // one 3-child union node: 3 binary trees
        let trees: Vec<_> = enumerate_binary_cotrees(&k2_k1_k1(), 100)
            .unwrap()
            .collect();
        assert_eq!(trees.len(), 3);
        let distinct: HashSet<Cotree> = trees.iter().map(|t| t.tree().canonical()).collect();
        assert_eq!(distinct.len(), 3);
        for t in &trees {
            t.tree().validate_against(&k2_k1_k1()).unwrap();
        }
        // all-binary discriminating cotree
        let p3 = Graph::path(3);
        assert_eq!(enumerate_binary_cotrees(&p3, 100).unwrap().count(), 1);
        // K5: (2*5-3)!! = 105
        let k5: Vec<_> = enumerate_binary_cotrees(&Graph::complete(5), 1000)
            .unwrap()
            .collect();
        assert_eq!(k5.len(), 105);
        assert_eq!(
            k5.iter()
                .map(|t| t.tree().canonical())
                .collect::<HashSet<_>>()
                .len(),
            105
        );
        assert_eq!(
            enumerate_binary_cotrees(&Graph::complete(5), 10)
                .unwrap()
                .count(),
            10
        );
        assert_eq!(
            binary_refinement_count(&discriminating_cotree(&Graph::complete(5)).unwrap()),
            105
        );
    }

    #[test]
    fn json_round_trip_and_newick() {
        let t = Cotree::union(vec![
            Cotree::join(vec![Cotree::leaf(0), Cotree::leaf(1)]),
            Cotree::leaf(2),
            Cotree::leaf(3),
        ]);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"label":0,"children":[{"label":1,"children":[{"label":0},{"label":1}]},{"label":2},{"label":3}]}"#
        );
        let back: Cotree = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.newick(), "((0,1)1,2,3)0;");
        assert!(serde_json::from_str::<Cotree>(
            r#"{"label":7,"children":[{"label":0},{"label":1}]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<BinaryCotree>(&json).is_err());
    }

    #[test]
    fn validate_against_detects_mismatch() {
        let t = Cotree::union(vec![Cotree::leaf(0), Cotree::leaf(1)]);
        assert!(t.validate_against(&Graph::empty(2)).is_ok());
        assert!(matches!(
            t.validate_against(&Graph::complete(2)),
            Err(Error::CotreeMismatch(_))
        ));
        assert!(matches!(
            t.validate_against(&Graph::empty(3)),
            Err(Error::CotreeMismatch(_))
        ));
    }

    #[test]
    fn contraction_recovers_discriminating_cotree() {
        let g = Graph::complete(3)
            .disjoint_union(&Graph::empty(2))
            .join(&Graph::empty(1));
        let disc = discriminating_cotree(&g).unwrap();
        for t in enumerate_binary_cotrees(&g, 1000).unwrap() {
            assert_eq!(t.tree().contract().canonical(), disc.canonical());
        }
    }
}
