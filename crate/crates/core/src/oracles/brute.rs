//! Exhaustive reference implementations. Every oracle refuses inputs above
//! its cap instead of running for hours.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::cotree::induced_p4;
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

/// Size limits for the exhaustive oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct OracleCaps {
    /// Vertices for exact chromatic number.
    pub chi: usize,
    /// Vertices for anything that walks all vertex orders.
    pub orders: usize,
    /// Vertices for subset enumeration of modules.
    pub modules: usize,
    /// Candidate colorings (`k^n`) for coloring enumeration.
    pub colorings: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            chi: 12,
            orders: 8,
            modules: 9,
            colorings: 10_000_000,
        }
    }
}

fn cap(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::CapExceeded {
            what,
            size,
            cap: limit,
        });
    }
    Ok(())
}

impl OracleCaps {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn chi_coloring(&self, g: &Graph) -> Result<Coloring> {
        Ok(Coloring::from_vec_unchecked(chi_coloring_capped(
            g, self.chi,
        )?))
    }

    pub fn chi(&self, g: &Graph) -> Result<usize> {
        Ok(chi_coloring_capped(g, self.chi)?
            .iter()
            .copied()
            .max()
            .unwrap_or(0) as usize)
    }

    /// Largest palette over all first-fit orders.
    pub fn grundy(&self, g: &Graph) -> Result<usize> {
        cap("grundy number", g.n(), self.orders)?;
        let mut best = 0;
        let mut colors = vec![0; g.n()];
        grundy_dfs(g, &mut colors, 0, 0, &mut best);
        Ok(best)
    }

    /// Canonical forms of every coloring first-fit can produce.
    pub fn greedy_partitions(&self, g: &Graph) -> Result<HashSet<Vec<Color>>> {
        cap("greedy order enumeration", g.n(), self.orders)?;
        let mut out = HashSet::new();
        let mut colors = vec![0; g.n()];
        greedy_all(g, &mut colors, 0, &mut out);
        Ok(out)
    }

    pub fn is_greedy(&self, g: &Graph, sigma: &Coloring) -> Result<bool> {
        g.check_proper(sigma)?;
        Ok(self
            .greedy_partitions(g)?
            .contains(sigma.canonicalize().as_slice()))
    }

    /// Every module of `g` as a bitmask over the vertices.
    pub fn modules(&self, g: &Graph) -> Result<Vec<u32>> {
        let n = g.n();
        cap("module enumeration", n, self.modules.min(31))?;
        let nb: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
            .collect();
        let full: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
        Ok((1..=full)
            .filter(|&x| {
                (0..n)
                    .filter(|&y| x & 1 << y == 0)
                    .all(|y| nb[y] & x == 0 || nb[y] & x == x)
            })
            .collect())
    }

    /// Modules that overlap no other module.
    pub fn strong_modules(&self, g: &Graph) -> Result<BTreeSet<Vec<usize>>> {
        let mods = self.modules(g)?;
        let overlap = |a: u32, b: u32| a & b != 0 && a & b != a && a & b != b;
        Ok(mods
            .iter()
            .filter(|&&x| !mods.iter().any(|&y| overlap(x, y)))
            .map(|&x| (0..g.n()).filter(|&v| x & 1 << v != 0).collect())
            .collect())
    }
}

pub fn chi_bruteforce(g: &Graph) -> Result<usize> {
    OracleCaps::default().chi(g)
}

pub fn chi_coloring_bruteforce(g: &Graph) -> Result<Coloring> {
    OracleCaps::default().chi_coloring(g)
}

pub fn grundy_bruteforce(g: &Graph) -> Result<usize> {
    OracleCaps::default().grundy(g)
}

pub fn brute_force_strong_modules(g: &Graph) -> Result<BTreeSet<Vec<usize>>> {
    OracleCaps::default().strong_modules(g)
}

/// True iff some vertex order makes first-fit produce the color classes of
/// `sigma`.
pub fn is_greedy_bruteforce(g: &Graph, sigma: &Coloring) -> Result<bool> {
    OracleCaps::default().is_greedy(g, sigma)
}

/// A minimum coloring with colors `1..=χ`, by backtracking for
/// `k = 1, 2, ...` over vertices in decreasing degree order.
pub(crate) fn chi_coloring_capped(g: &Graph, limit: usize) -> Result<Vec<Color>> {
    let n = g.n();
    cap("chromatic number", n, limit)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![0; n];
    for k in 1..=n as Color {
        if try_color(g, &order, 0, k, 0, &mut colors) {
            return Ok(colors);
        }
    }
    Ok(colors)
}

fn try_color(
    g: &Graph,
    order: &[usize],
    i: usize,
    k: Color,
    used: Color,
    colors: &mut [Color],
) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    for c in 1..=(used + 1).min(k) {
        if g.neighbors(v).iter().all(|&u| colors[u] != c) {
            colors[v] = c;
            if try_color(g, order, i + 1, k, used.max(c), colors) {
                return true;
            }
        }
    }
    colors[v] = 0;
    false
}

fn first_fit(g: &Graph, colors: &[Color], v: usize) -> Color {
    (1..)
        .find(|c| g.neighbors(v).iter().all(|&u| colors[u] != *c))
        .expect("a free color exists")
}

fn grundy_dfs(g: &Graph, colors: &mut [Color], placed: usize, top: usize, best: &mut usize) {
    let n = g.n();
    if placed == n {
        *best = (*best).max(top);
        return;
    }
    // a vertex colored c needs c - 1 neighbors, so max degree + 1 bounds it
    let bound = top.max(
        (0..n)
            .filter(|&v| colors[v] == 0)
            .map(|v| g.degree(v) + 1)
            .max()
            .unwrap_or(0),
    );
    if bound <= *best {
        return;
    }
    for v in 0..n {
        if colors[v] == 0 {
            let c = first_fit(g, colors, v);
            colors[v] = c;
            grundy_dfs(g, colors, placed + 1, top.max(c as usize), best);
            colors[v] = 0;
        }
    }
}

fn greedy_all(g: &Graph, colors: &mut [Color], placed: usize, out: &mut HashSet<Vec<Color>>) {
    if placed == g.n() {
        out.insert(
            Coloring::from_vec_unchecked(colors.to_vec())
                .canonicalize()
                .into_vec(),
        );
        return;
    }
    for v in 0..g.n() {
        if colors[v] == 0 {
            colors[v] = first_fit(g, colors, v);
            greedy_all(g, colors, placed + 1, out);
            colors[v] = 0;
        }
    }
}

/// An induced P4 found by scanning all quadruples.
pub fn find_p4_bruteforce(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if let Some(p) = induced_p4(g, [a, b, c, d]) {
                        return Some(p);
                    }
                }
            }
        }
    }
    None
}

/// True iff every five vertices induce at most one P4.
pub fn is_p4_sparse_bruteforce(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let five = [a, b, c, d, e];
                        let p4s = (0..5)
                            .filter(|&skip| {
                                let q: Vec<usize> =
                                    (0..5).filter(|&i| i != skip).map(|i| five[i]).collect();
                                induced_p4(g, [q[0], q[1], q[2], q[3]]).is_some()
                            })
                            .count();
                        if p4s > 1 {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
