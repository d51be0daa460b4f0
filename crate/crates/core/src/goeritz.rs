//! Goeritz matrices of checkerboard graphs of alternating diagrams.
//!
//! For a connected, loop-free multigraph with vertices `v₀..v_n`, deleting a basepoint leaves the
//! `n × n` matrix with `−deg(vᵢ)` on the diagonal and edge multiplicities off it. For a reduced
//! alternating diagram this is the intersection form of a sharp negative-definite filling of the
//! branched double cover, and `|det|` is the order of its first homology.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::lattice::GramMatrix;

/// Connected loop-free multigraph on the vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckerboardGraph {
    vertex_count: usize,
    /// Each edge once, as `(min, max)`; multiplicity by repetition.
    edges: Vec<(usize, usize)>,
}

impl CheckerboardGraph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return domain("a checkerboard graph needs at least one vertex");
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return domain(format!("edge {u}-{v} mentions a vertex outside 0..{vertex_count}"));
            }
            if u == v {
                return domain(format!("loop at vertex {u}: the diagram is not reduced"));
            }
            list.push((u.min(v), u.max(v)));
        }
        let g = CheckerboardGraph { vertex_count, edges: list };
        if !g.is_connected() {
            return domain("checkerboard graph is disconnected");
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let other = if a == u { b } else if b == u { a } else { continue };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Vertex count on the first line, then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.vertex_count);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl FromStr for CheckerboardGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing vertex count".into() })?;
        let n: usize = first.parse().map_err(|_| Error::Parse { line: line_no, msg: format!("bad vertex count {first:?}") })?;
        let mut edges = Vec::new();
        for (line_no, line) in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parse = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse { line: line_no, msg: format!("bad vertex {t:?}") });
            match parts.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => return Err(Error::Parse { line: line_no, msg: "expected an edge \"u v\"".into() }),
            }
        }
        CheckerboardGraph::new(n, edges)
    }
}

impl fmt::Display for CheckerboardGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Goeritz matrix of `g` with `basepoint` deleted; rows follow the remaining vertices in order.
pub fn goeritz_matrix(g: &CheckerboardGraph, basepoint: usize) -> Result<GramMatrix> {
    if basepoint >= g.vertex_count {
        return domain(format!("basepoint {basepoint} is not a vertex"));
    }
    let keep: Vec<usize> = (0..g.vertex_count).filter(|&v| v != basepoint).collect();
    if keep.is_empty() {
        return domain("a one-vertex graph has an empty Goeritz matrix");
    }
    let mut index = vec![usize::MAX; g.vertex_count];
    for (i, &v) in keep.iter().enumerate() {
        index[v] = i;
    }
    let n = keep.len();
    let mut m = vec![vec![0i64; n]; n];
    for &(u, v) in &g.edges {
        for (x, y) in [(u, v), (v, u)] {
            if x != basepoint {
                m[index[x]][index[x]] -= 1;
                if y != basepoint {
                    m[index[x]][index[y]] += 1;
                }
            }
        }
    }
    GramMatrix::new(m)
}

/// `|det G|`, the order of the homology group presented by `G`.
pub fn det_h1_order(g: &GramMatrix) -> u128 {
    g.determinant().unsigned_abs()
}

/// Black-graph Goeritz matrix of the alternating diagram of `L(T_{2a+1,2}, T_{2b+1,2})`;
/// equal to [`fig3_black`]`(a, 2, b, 2)` with vertex 0 deleted.
pub fn family_2odd_2odd(a: i64, b: i64) -> Result<GramMatrix> {
    if a < 1 || b < 1 {
        return domain(format!("family parameters must be positive, got ({a},{b})"));
    }
    GramMatrix::new(vec![
        vec![-3, 1, 0, 1, 0],
        vec![1, -3, 1, 0, 0],
        vec![0, 1, -b - 1, b, 0],
        vec![1, 0, b, -b - 2, 1],
        vec![0, 0, 0, 1, -a - 1],
    ])
}

/// White graph of the alternating diagram of `L(T_{3,5}, T_{−3,5})`, regions numbered `0..6`.
fn l35_white() -> CheckerboardGraph {
    let edges = [(0, 1), (0, 5), (1, 2), (1, 2), (1, 3), (2, 3), (2, 5), (2, 6), (3, 4), (3, 4), (3, 6), (4, 5)];
    CheckerboardGraph::new(7, edges).expect("builtin graph is valid")
}

/// Black graph of the alternating diagram of `L(T_{p,q}, T_{r,s})` with `p/q = a₀ + 1/a₁` and
/// `r/s = b₀ + 1/b₁`. Vertices `0..6` are the labeled regions; the two long twist regions add
/// `b₁ − 2` vertices on a path from 2 to 3 and `a₁ − 2` on a path from 4 to 5.
pub fn fig3_black(a0: i64, a1: i64, b0: i64, b1: i64) -> Result<CheckerboardGraph> {
    if a0 < 1 || b0 < 1 || a1 < 2 || b1 < 2 {
        return domain(format!("need a0, b0 >= 1 and a1, b1 >= 2, got ({a0},{a1},{b0},{b1})"));
    }
    let (a0, a1, b0, b1) = (a0 as usize, a1 as usize, b0 as usize, b1 as usize);
    let mut next = 6;
    let mut edges = Vec::new();
    let mut path = |from: usize, to: usize, len: usize, edges: &mut Vec<(usize, usize)>| {
        let mut prev = from;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, to));
    };
    edges.extend(std::iter::repeat((0, 1)).take(b1 - 1));
    edges.extend(std::iter::repeat((1, 2)).take(a1 - 1));
    path(2, 3, b1 - 1, &mut edges);
    edges.extend(std::iter::repeat((3, 4)).take(b0));
    path(4, 5, a1 - 1, &mut edges);
    edges.extend(std::iter::repeat((5, 0)).take(a0));
    edges.extend([(0, 2), (1, 4)]);
    CheckerboardGraph::new(a1 + b1 + 2, edges)
}

/// Looks up `"L35-white"` or `"fig3-black(a0,a1,b0,b1)"`.
pub fn builtin_diagram(name: &str) -> Option<CheckerboardGraph> {
    let name = name.trim();
    if name == "L35-white" {
        return Some(l35_white());
    }
    let args = name.strip_prefix("fig3-black(")?.strip_suffix(')')?;
    let v: Vec<i64> = args.split(',').map(|t| t.trim().parse().ok()).collect::<Option<_>>()?;
    match v.as_slice() {
        &[a0, a1, b0, b1] => fig3_black(a0, a1, b0, b1).ok(),
        _ => None,
    }
}

/// The fixed builtin diagrams, plus the smallest member of the parametrized family.
pub fn builtin_diagrams() -> BTreeMap<String, CheckerboardGraph> {
    ["L35-white", "fig3-black(1,2,1,2)"]
        .into_iter()
        .map(|n| (n.to_string(), builtin_diagram(n).expect("builtin name resolves")))
        .collect()
}
