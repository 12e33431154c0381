//! Modular decomposition.
//!
//! The tree is built top-down. A disconnected module splits into its
//! connected components (parallel), a module whose complement is
//! disconnected splits into the co-components (series), and otherwise the
//! module is prime and splits into its inclusion-maximal proper modules.
//!
//! Prime modules that are spiders are split directly from the spider
//! partition (body and legs are singletons, the head is one module). Any
//! other prime module falls back to growing module closures of vertex
//! pairs, which is polynomial but far from linear.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::rc::Rc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::p4sparse::recognize_spider;

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf(usize),
    Parallel,
    Series,
    Prime,
}

impl NodeKind {
    pub fn name(&self) -> &'static str {
        match self {
            NodeKind::Leaf(_) => "leaf",
            NodeKind::Parallel => "parallel",
            NodeKind::Series => "series",
            NodeKind::Prime => "prime",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdNode {
    pub kind: NodeKind,
    pub children: Vec<NodeId>,
    /// The strong module of this node, sorted.
    pub vertices: Vec<usize>,
}

/// Modular decomposition tree stored as an arena. Children are ordered by
/// the smallest vertex of their module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdTree {
    nodes: Vec<MdNode>,
    root: NodeId,
}

impl MdTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &MdNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[MdNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node ids with every child listed before its parent.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if expanded {
                out.push(id);
            } else {
                stack.push((id, true));
                for &c in self.nodes[id].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// The set of node modules, i.e. the strong modules of the graph.
    pub fn modules(&self) -> BTreeSet<Vec<usize>> {
        self.nodes.iter().map(|n| n.vertices.clone()).collect()
    }

    pub fn has_prime(&self) -> bool {
        self.nodes.iter().any(|n| n.kind == NodeKind::Prime)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.json_node(self.root)).expect("tree serializes")
    }

    fn json_node(&self, id: NodeId) -> JsonNode {
        let node = &self.nodes[id];
        JsonNode {
            kind: node.kind.name(),
            vertices: node.vertices.clone(),
            children: node.children.iter().map(|&c| self.json_node(c)).collect(),
        }
    }

    /// Graphviz rendering; inner nodes show their kind, leaves their vertex.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph mdtree {\n");
        for (id, node) in self.nodes.iter().enumerate() {
            let label = match node.kind {
                NodeKind::Leaf(v) => v.to_string(),
                kind => kind.name().to_string(),
            };
            let _ = writeln!(out, "  n{id} [label=\"{label}\"];");
        }
        for (id, node) in self.nodes.iter().enumerate() {
            for c in &node.children {
                let _ = writeln!(out, "  n{id} -> n{c};");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize)]
struct JsonNode {
    kind: &'static str,
    vertices: Vec<usize>,
    children: Vec<JsonNode>,
}

/// True iff every vertex outside `x` sees all of `x` or none of it.
pub fn is_module(g: &Graph, x: &[usize]) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let n = g.n();
    let mut inside = vec![false; n];
    let mut size = 0;
    for &v in x {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if !inside[v] {
            inside[v] = true;
            size += 1;
        }
    }
    let mut hits = vec![0usize; n];
    for v in (0..n).filter(|&v| inside[v]) {
        for &u in g.neighbors(v) {
            hits[u] += 1;
        }
    }
    Ok((0..n).all(|y| inside[y] || hits[y] == 0 || hits[y] == size))
}

/// `Pmax(G)` together with the kind of the root module.
pub fn maximal_modular_partition(g: &Graph) -> Result<(Vec<Vec<usize>>, NodeKind)> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices {
            needed: 2,
            got: g.n(),
        });
    }
    Ok(split(g))
}

fn split(g: &Graph) -> (Vec<Vec<usize>>, NodeKind) {
    let comps = g.connected_components();
    if comps.len() > 1 {
        return (comps, NodeKind::Parallel);
    }
    let co = g.co_components();
    if co.len() > 1 {
        return (co, NodeKind::Series);
    }
    let parts = prime_partition(g);
    assert!(
        parts.len() >= 4,
        "a prime module has at least four maximal submodules"
    );
    (parts, NodeKind::Prime)
}

/// Maximal proper modules of a graph that is connected and co-connected.
fn prime_partition(g: &Graph) -> Vec<Vec<usize>> {
    if let Some(sd) = recognize_spider(g) {
        let mut parts: Vec<Vec<usize>> = sd.body.iter().chain(&sd.legs).map(|&v| vec![v]).collect();
        if !sd.head.is_empty() {
            parts.push(sd.head.clone());
        }
        parts.sort_unstable_by_key(|p| p[0]);
        return parts;
    }
    // Two vertices share a maximal proper module iff the smallest module
    // containing both is not the whole vertex set.
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let id = parts.len();
        part_of[v] = id;
        let mut part = vec![v];
        for w in v + 1..n {
            if part_of[w] != usize::MAX {
                continue;
            }
            let closure = module_closure(g, &[v, w]);
            if closure.len() < n {
                for u in closure {
                    if part_of[u] == usize::MAX {
                        part_of[u] = id;
                        part.push(u);
                    }
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    parts
}

/// Smallest module containing `seed`: repeatedly absorb any outside vertex
/// with both a neighbor and a non-neighbor inside.
pub(crate) fn module_closure(g: &Graph, seed: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut inside = vec![false; n];
    let mut hits = vec![0usize; n];
    let mut members = Vec::new();
    let mut pending: Vec<usize> = seed.to_vec();
    loop {
        for v in pending.drain(..) {
            if inside[v] {
                continue;
            }
            inside[v] = true;
            members.push(v);
            for &u in g.neighbors(v) {
                hits[u] += 1;
            }
        }
        let size = members.len();
        pending.extend((0..n).filter(|&y| !inside[y] && hits[y] > 0 && hits[y] < size));
        if pending.is_empty() {
            break;
        }
    }
    members.sort_unstable();
    members
}

/// Where a pending node's subgraph comes from: the input itself, or a part
/// of an already split parent, induced only once the node is processed.
enum Source<'a> {
    Root(&'a Graph),
    Part(Parent<'a>, Vec<usize>),
    Single,
}

#[derive(Clone)]
enum Parent<'a> {
    Input(&'a Graph),
    Sub(Rc<Graph>),
}

impl Parent<'_> {
    fn graph(&self) -> &Graph {
        match self {
            Parent::Input(g) => g,
            Parent::Sub(g) => g,
        }
    }
}

struct Work<'a> {
    source: Source<'a>,
    ids: Vec<usize>,
    parent: Option<NodeId>,
}

/// Computes the modular decomposition tree of `g`.
pub fn modular_decomposition(g: &Graph) -> Result<MdTree> {
    if g.n() == 0 {
        return Err(Error::TooFewVertices { needed: 1, got: 0 });
    }
    let mut nodes: Vec<MdNode> = Vec::new();
    let mut stack = vec![Work {
        source: if g.n() == 1 {
            Source::Single
        } else {
            Source::Root(g)
        },
        ids: (0..g.n()).collect(),
        parent: None,
    }];
    while let Some(Work {
        source,
        ids,
        parent,
    }) = stack.pop()
    {
        let id = nodes.len();
        if let Some(p) = parent {
            nodes[p].children.push(id);
        }
        let (parts, kind, local) = match source {
            Source::Single => {
                nodes.push(MdNode {
                    kind: NodeKind::Leaf(ids[0]),
                    children: Vec::new(),
                    vertices: ids,
                });
                continue;
            }
            Source::Root(local) => {
                let (parts, kind) = split(local);
                (parts, kind, Some(Parent::Input(local)))
            }
            Source::Part(up, part) if part.len() == 2 => {
                let kind = match up.graph().has_edge(part[0], part[1]) {
                    true => NodeKind::Series,
                    false => NodeKind::Parallel,
                };
                (vec![vec![0], vec![1]], kind, None)
            }
            Source::Part(up, part) => {
                let local = up.graph().induced_sorted(&part);
                drop(up);
                let (parts, kind) = split(&local);
                (parts, kind, Some(Parent::Sub(Rc::new(local))))
            }
        };
        for part in parts.into_iter().rev() {
            let child_ids: Vec<usize> = part.iter().map(|&v| ids[v]).collect();
            let source = match (&local, part.len()) {
                (Some(local), 2..) => Source::Part(local.clone(), part),
                _ => Source::Single,
            };
            stack.push(Work {
                source,
                ids: child_ids,
                parent: Some(id),
            });
        }
        nodes.push(MdNode {
            kind,
            children: Vec::new(),
            vertices: ids,
        });
    }
    Ok(MdTree { nodes, root: 0 })
}

/// The strong modules of `g`.
pub fn strong_modules(g: &Graph) -> Result<BTreeSet<Vec<usize>>> {
    Ok(modular_decomposition(g)?.modules())
}

/// Contracts each part of a modular partition to a single vertex.
pub fn quotient_graph(g: &Graph, partition: &[Vec<usize>]) -> Result<Graph> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        for &v in part {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if part_of[v] != usize::MAX {
                return Err(Error::NotAPartition);
            }
            part_of[v] = i;
        }
    }
    if part_of.contains(&usize::MAX) {
        return Err(Error::NotAPartition);
    }
    for part in partition {
        if !is_module(g, part)? {
            return Err(Error::NotAModule(part.clone()));
        }
    }
    Ok(quotient_unchecked(g, partition, &part_of))
}

pub(crate) fn quotient_unchecked(g: &Graph, partition: &[Vec<usize>], part_of: &[usize]) -> Graph {
    let mut adj = vec![Vec::new(); partition.len()];
    for (i, part) in partition.iter().enumerate() {
        // Parts are modules, so one representative decides adjacency.
        for &u in g.neighbors(part[0]) {
            let j = part_of[u];
            if j != i && j != usize::MAX {
                adj[i].push(j);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    Graph::from_sorted_adjacency(adj)
}
