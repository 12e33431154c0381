//! Spiders and P4-sparse graphs.
//!
//! A thin spider splits into a clique body `K`, a stable set of legs `S`
//! with `|K| = |S| >= 2` and a perfect matching between them, and a head
//! `R` adjacent to all of `K` and none of `S`. In a thick spider each body
//! vertex sees every leg except its partner instead.

use serde::{Deserialize, Serialize};

use crate::coloring::solver::{FallbackSolver, PrimeModule, PrimeSolver};
use crate::coloring::{chromatic_number, modularly_minimal_coloring};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};
use crate::mdtree::{modular_decomposition, quotient_unchecked, NodeKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpiderFlavor {
    Thin,
    Thick,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderDecomposition {
    pub flavor: SpiderFlavor,
    #[serde(rename = "K")]
    pub body: Vec<usize>,
    #[serde(rename = "S")]
    pub legs: Vec<usize>,
    #[serde(rename = "R")]
    pub head: Vec<usize>,
    /// `(body vertex, leg)` pairs ordered by body vertex.
    pub matching: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Body,
    Leg,
    Head,
}

/// Recognizes a spider from degree signatures and verifies every defining
/// condition. Thin is tried first, so the four-vertex path and other
/// spiders with `|K| = 2` come back thin.
pub fn recognize_spider(h: &Graph) -> Option<SpiderDecomposition> {
    let n = h.n();
    if n < 4 {
        return None;
    }
    let min_deg = (0..n).map(|v| h.degree(v)).min()?;
    let lows: Vec<usize> = (0..n).filter(|&v| h.degree(v) == min_deg).collect();
    if min_deg == 1 {
        let mut body: Vec<usize> = lows.iter().map(|&s| h.neighbors(s)[0]).collect();
        body.sort_unstable();
        if let Some(sd) = verify(h, body, lows, SpiderFlavor::Thin) {
            return Some(sd);
        }
        return None;
    }
    let k = lows.len();
    if k >= 3 && min_deg == k - 1 {
        let mut body: Vec<usize> = lows
            .iter()
            .flat_map(|&s| h.neighbors(s).iter().copied())
            .collect();
        body.sort_unstable();
        body.dedup();
        return verify(h, body, lows, SpiderFlavor::Thick);
    }
    None
}

/// Checks the spider conditions for a candidate body and leg set (both
/// sorted); the head is everything else.
fn verify(
    h: &Graph,
    body: Vec<usize>,
    legs: Vec<usize>,
    flavor: SpiderFlavor,
) -> Option<SpiderDecomposition> {
    let n = h.n();
    let k = body.len();
    if k < 2 || legs.len() != k {
        return None;
    }
    let mut role = vec![Role::Head; n];
    for &v in &body {
        role[v] = Role::Body;
    }
    for &s in &legs {
        if role[s] != Role::Head {
            return None;
        }
        role[s] = Role::Leg;
    }
    let count = |v: usize, r: Role| h.neighbors(v).iter().filter(|&&u| role[u] == r).count();
    let head: Vec<usize> = (0..n).filter(|&v| role[v] == Role::Head).collect();
    if body.iter().any(|&v| count(v, Role::Body) != k - 1) {
        return None;
    }
    if head
        .iter()
        .any(|&r| count(r, Role::Body) != k || count(r, Role::Leg) != 0)
    {
        return None;
    }
    let leg_degree = match flavor {
        SpiderFlavor::Thin => 1,
        SpiderFlavor::Thick => k - 1,
    };
    let mut partner = vec![usize::MAX; n];
    for &s in &legs {
        if h.degree(s) != leg_degree || count(s, Role::Body) != leg_degree {
            return None;
        }
        let b = match flavor {
            SpiderFlavor::Thin => h.neighbors(s)[0],
            SpiderFlavor::Thick => {
                let nb = h.neighbors(s);
                *body.iter().find(|b| nb.binary_search(b).is_err())?
            }
        };
        if partner[b] != usize::MAX {
            return None;
        }
        partner[b] = s;
    }
    let matching = body.iter().map(|&b| (b, partner[b])).collect();
    Some(SpiderDecomposition {
        flavor,
        body,
        legs,
        head,
        matching,
    })
}

/// Builds a spider with body `0..k`, legs `k..2k` (leg `k + i` matched to
/// body vertex `i`) and the head graph on `2k..`.
pub fn construct_spider(
    k: usize,
    flavor: SpiderFlavor,
    head: &Graph,
) -> Result<(Graph, SpiderDecomposition)> {
    if k < 2 {
        return Err(Error::InvalidSpider(format!("body size {k} below 2")));
    }
    let r = head.n();
    let n = 2 * k + r;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
        match flavor {
            SpiderFlavor::Thin => edges.push((i, k + i)),
            SpiderFlavor::Thick => edges.extend((0..k).filter(|&j| j != i).map(|j| (i, k + j))),
        }
        edges.extend((0..r).map(|x| (i, 2 * k + x)));
    }
    edges.extend(head.edges().map(|(u, v)| (2 * k + u, 2 * k + v)));
    let g = Graph::from_edges(n, edges)?;
    let sd = SpiderDecomposition {
        flavor,
        body: (0..k).collect(),
        legs: (k..2 * k).collect(),
        head: (2 * k..n).collect(),
        matching: (0..k).map(|i| (i, k + i)).collect(),
    };
    Ok((g, sd))
}

/// Errors unless `sd` is a valid spider decomposition of `h`.
pub fn validate_spider(h: &Graph, sd: &SpiderDecomposition) -> Result<()> {
    let mut body = sd.body.clone();
    let mut legs = sd.legs.clone();
    body.sort_unstable();
    legs.sort_unstable();
    let n = h.n();
    if let Some(&v) = body.iter().chain(&legs).chain(&sd.head).find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let found = verify(h, body, legs, sd.flavor)
        .ok_or_else(|| Error::InvalidSpider("spider conditions fail".into()))?;
    let mut head = sd.head.clone();
    head.sort_unstable();
    if head != found.head {
        return Err(Error::InvalidSpider(
            "head is not the complement of body and legs".into(),
        ));
    }
    let mut matching = sd.matching.clone();
    matching.sort_unstable();
    if matching != found.matching {
        return Err(Error::InvalidSpider(
            "matching disagrees with the edges".into(),
        ));
    }
    Ok(())
}

/// Colors a spider from a minimal coloring of its head (listed in the order
/// of `sd.head`). Body and legs share `|K|` colors fresh from the head's.
pub fn color_spider(
    h: &Graph,
    sd: &SpiderDecomposition,
    head_coloring: Option<&Coloring>,
) -> Result<Coloring> {
    validate_spider(h, sd)?;
    let head_colors: Vec<Color> = match head_coloring {
        None if sd.head.is_empty() => Vec::new(),
        None => {
            return Err(Error::InvalidHeadColoring(
                "nonempty head needs a coloring".into(),
            ))
        }
        Some(c) if c.len() != sd.head.len() => {
            return Err(Error::InvalidHeadColoring(format!(
                "{} colors for a head of {} vertices",
                c.len(),
                sd.head.len()
            )))
        }
        Some(c) => c.as_slice().to_vec(),
    };
    if !sd.head.is_empty() {
        let mut head = sd.head.clone();
        head.sort_unstable();
        let (hg, _) = h.induced_subgraph(&sd.head)?;
        let hc = Coloring::new(head_colors.clone())
            .map_err(|e| Error::InvalidHeadColoring(e.to_string()))?;
        if let Some((u, v)) = hg.monochromatic_edge(&hc) {
            return Err(Error::InvalidHeadColoring(format!(
                "edge {}-{} is monochromatic",
                sd.head[u], sd.head[v]
            )));
        }
        let chi = chromatic_number(&hg, &FallbackSolver::default())?;
        if hc.num_colors() != chi {
            return Err(Error::InvalidHeadColoring(format!(
                "uses {} colors, head needs {chi}",
                hc.num_colors()
            )));
        }
    }
    let top = head_colors.iter().copied().max().unwrap_or(0);
    let fresh: Vec<Color> = (1..=sd.body.len() as Color).map(|c| top + c).collect();
    let mut colors = vec![0; h.n()];
    for (&v, &c) in sd.head.iter().zip(&head_colors) {
        colors[v] = c;
    }
    paint_body_and_legs(sd, &fresh, &mut colors);
    Ok(Coloring::from_vec_unchecked(colors))
}

/// Thin: body vertex `i` (in matching order) gets `fresh[i]`, its partner
/// leg gets the next body vertex's color. Thick: leg `i` gets `fresh[i]`
/// and its partner body vertex the same color.
fn paint_body_and_legs(sd: &SpiderDecomposition, fresh: &[Color], colors: &mut [Color]) {
    let k = sd.matching.len();
    for (i, &(b, s)) in sd.matching.iter().enumerate() {
        match sd.flavor {
            SpiderFlavor::Thin => {
                colors[b] = fresh[i];
                colors[s] = fresh[(i + 1) % k];
            }
            SpiderFlavor::Thick => {
                colors[s] = fresh[i];
                colors[b] = fresh[i];
            }
        }
    }
}

/// Prime solver for spider quotients: body and legs must be singleton
/// children and the head at most one child, whose colors are kept.
#[derive(Clone, Copy, Debug, Default)]
pub struct SpiderSolver;

impl PrimeSolver for SpiderSolver {
    fn color_prime(&self, module: &PrimeModule<'_>) -> Option<Vec<Color>> {
        let h = module.graph;
        let sd = recognize_spider(h)?;
        if !sd.head.is_empty() && !module.children.iter().any(|c| c == &sd.head) {
            return None;
        }
        if module.children.iter().any(|c| c.len() > 1 && c != &sd.head) {
            return None;
        }
        let mut head_palette: Vec<Color> = sd.head.iter().map(|&v| module.coloring[v]).collect();
        head_palette.sort_unstable();
        head_palette.dedup();
        let fresh: Vec<Color> = module
            .budget()
            .into_iter()
            .filter(|c| head_palette.binary_search(c).is_err())
            .take(sd.body.len())
            .collect();
        if fresh.len() < sd.body.len() {
            return None;
        }
        let mut colors = module.coloring.to_vec();
        paint_body_and_legs(&sd, &fresh, &mut colors);
        Some(colors)
    }
}

/// First prime module whose quotient is not a spider with singleton body
/// and leg children.
pub fn p4_sparse_violation(g: &Graph) -> Option<Vec<usize>> {
    if g.n() == 0 {
        return None;
    }
    let md = modular_decomposition(g).ok()?;
    for node in md.nodes().iter().filter(|n| n.kind == NodeKind::Prime) {
        let parts: Vec<Vec<usize>> = node
            .children
            .iter()
            .map(|&c| md.node(c).vertices.clone())
            .collect();
        let mut part_of = vec![usize::MAX; g.n()];
        for (i, p) in parts.iter().enumerate() {
            for &v in p {
                part_of[v] = i;
            }
        }
        let q = quotient_unchecked(g, &parts, &part_of);
        let ok = recognize_spider(&q).is_some_and(|sd| {
            sd.head.len() <= 1 && sd.body.iter().chain(&sd.legs).all(|&i| parts[i].len() == 1)
        });
        if !ok {
            return Some(node.vertices.clone());
        }
    }
    None
}

pub fn is_p4_sparse(g: &Graph) -> bool {
    p4_sparse_violation(g).is_none()
}

/// Modularly-minimal coloring of a P4-sparse graph, solving every prime
/// node as a spider.
pub fn p4sparse_modmin_coloring(g: &Graph) -> Result<Coloring> {
    modularly_minimal_coloring(g, &SpiderSolver).map_err(|e| match e {
        Error::UnsupportedPrime(m) => Error::NotP4Sparse(m),
        other => other,
    })
}
