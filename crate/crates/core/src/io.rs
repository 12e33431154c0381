//! Text formats.
//!
//! Graphs are edge lists: a header line `n m` followed by `m` lines `u v`
//! with 0-based vertex ids. Colorings are one `vertex color` line per
//! vertex. Blank lines and `#` comments are ignored in both.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, Graph};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn field<T: std::str::FromStr>(line_no: usize, tok: Option<&str>, name: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::Parse {
        line: line_no,
        msg: format!("missing {name}"),
    })?;
    tok.parse().map_err(|_| Error::Parse {
        line: line_no,
        msg: format!("{name} `{tok}` is not a non-negative integer"),
    })
}

fn pair<A: std::str::FromStr, B: std::str::FromStr>(line_no: usize, line: &str) -> Result<(A, B)> {
    let mut it = line.split_whitespace();
    let a = field(line_no, it.next(), "first field")?;
    let b = field(line_no, it.next(), "second field")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("unexpected trailing `{extra}`"),
        });
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m): (usize, usize) = pair(line_no, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = line_no;
    for (line_no, line) in lines {
        let (u, v): (usize, usize) = pair(line_no, line)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("vertex {w} out of range for n = {n}"),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        edges.push((u, v));
        last = line_no;
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut entries: Vec<(usize, usize, Color)> = Vec::new();
    for (line_no, line) in content_lines(text) {
        let (v, c): (usize, Color) = pair(line_no, line)?;
        if c == 0 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} has color 0; colors are positive"),
            });
        }
        entries.push((line_no, v, c));
    }
    let n = entries.len();
    let mut colors = vec![0; n];
    for (line_no, v, c) in entries {
        if v >= n {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} out of range for {n} entries"),
            });
        }
        if colors[v] != 0 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("vertex {v} colored twice"),
            });
        }
        colors[v] = c;
    }
    Coloring::new(colors)
}

pub fn write_coloring(sigma: &Coloring) -> String {
    let mut out = String::new();
    for (v, c) in sigma.as_slice().iter().enumerate() {
        let _ = writeln!(out, "{v} {c}");
    }
    out
}
