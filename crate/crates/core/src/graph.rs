//! Simple undirected graphs with dense vertex ids and hop-count distances.
//!
//! Vertex ids are `0..vertex_count`. Adjacency lists are sorted and the edge
//! list is kept in lexicographic `(min, max)` order, so every derived output
//! (codes, witnesses, serialized files) is stable across runs.

use std::collections::VecDeque;
use std::fmt;
use std::io::BufRead;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hop distance. Silicate diameters grow linearly in the tetrahedron count,
/// so 16 bits is plenty for any graph that fits a dense matrix.
pub type Distance = u16;

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Canonical edge from an unordered pair. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn contains(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a canonical graph. Duplicate pairs (in either orientation) are
    /// collapsed; self-loops and out-of-range ids are rejected.
    pub fn new<I>(vertex_count: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    u: a,
                    v: b,
                    vertex_count,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); vertex_count];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph { adjacency, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Position of an edge in the canonical edge list.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs_distances(0).is_ok()
    }

    /// Hop distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Distance>> {
        let n = self.vertex_count();
        if source >= n {
            return Err(Error::VertexOutOfRange {
                u: source,
                v: source,
                vertex_count: n,
            });
        }
        let mut dist = vec![Distance::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let next = dist[v] + 1;
            for &w in &self.adjacency[v] {
                if dist[w] == Distance::MAX {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        match dist.iter().position(|&d| d == Distance::MAX) {
            Some(v) => Err(Error::Disconnected(v)),
            None => Ok(dist),
        }
    }

    /// All-pairs hop distances, one BFS per source. Rows are computed in
    /// parallel; the result does not depend on scheduling.
    pub fn all_pairs_distances(&self) -> Result<DistanceMatrix> {
        let n = self.vertex_count();
        let rows: Vec<Vec<Distance>> = (0..n)
            .into_par_iter()
            .map(|s| self.bfs_distances(s))
            .collect::<Result<_>>()?;
        Ok(DistanceMatrix { n, d: rows.concat() })
    }

    /// Writes the `p <n> <m>` edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.vertex_count(), self.edge_count());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    /// Parses the edge-list format. Blank lines and `c` comment lines are
    /// skipped; the declared edge count must match the number of pairs read.
    pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let lineno = idx + 1;
            let line = line.map_err(|e| parse_err(lineno, e.to_string()))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match header {
                None => {
                    if fields.len() != 3 || fields[0] != "p" {
                        return Err(parse_err(lineno, "expected header `p <vertices> <edges>`"));
                    }
                    header = Some((parse_num(fields[1], lineno)?, parse_num(fields[2], lineno)?));
                }
                Some(_) => {
                    if fields.len() != 2 {
                        return Err(parse_err(lineno, "expected `u v`"));
                    }
                    pairs.push((parse_num(fields[0], lineno)?, parse_num(fields[1], lineno)?));
                }
            }
        }
        let (n, m) = header.ok_or_else(|| parse_err(1, "missing header"))?;
        if pairs.len() != m {
            return Err(parse_err(
                0,
                format!("header declares {m} edges but {} were listed", pairs.len()),
            ));
        }
        Graph::new(n, pairs)
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(s: &str, line: usize) -> Result<usize> {
    s.parse()
        .map_err(|_| parse_err(line, format!("not a non-negative integer: {s:?}")))
}

/// Dense row-major matrix of hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> Distance {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// `d(e, w) = min(d(u, w), d(v, w))`.
    #[inline]
    pub fn edge_vertex_distance(&self, e: Edge, w: usize) -> Distance {
        self.get(e.u, w).min(self.get(e.v, w))
    }
}

/// Free-function form of [`DistanceMatrix::edge_vertex_distance`].
pub fn edge_vertex_distance(d: &DistanceMatrix, e: Edge, w: usize) -> Distance {
    d.edge_vertex_distance(e, w)
}
