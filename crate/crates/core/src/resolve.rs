//! Distance codes and (edge) resolving set verification.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Distance, DistanceMatrix, Edge, Graph};

/// Ordered list of distinct landmark vertices. Codes are order-sensitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LandmarkSet(Vec<usize>);

impl LandmarkSet {
    pub fn new(ids: Vec<usize>, vertex_count: usize) -> Result<Self> {
        if let Some(&bad) = ids.iter().find(|&&v| v >= vertex_count) {
            return Err(Error::InvalidLandmarks(format!(
                "vertex {bad} out of range for {vertex_count} vertices"
            )));
        }
        let mut seen = vec![false; vertex_count];
        for &v in &ids {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidLandmarks(format!("duplicate vertex {v}")));
            }
        }
        Ok(LandmarkSet(ids))
    }

    /// Sorted landmark set from any collection of distinct ids.
    pub fn sorted(mut ids: Vec<usize>, vertex_count: usize) -> Result<Self> {
        ids.sort_unstable();
        Self::new(ids, vertex_count)
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// Distance vector of a vertex or edge relative to a landmark set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Code(pub Vec<Distance>);

/// `r(v | X)`.
pub fn vertex_code(d: &DistanceMatrix, v: usize, landmarks: &LandmarkSet) -> Code {
    Code(landmarks.ids().iter().map(|&u| d.get(v, u)).collect())
}

/// `r(e | S)`, each coordinate the nearer endpoint's distance.
pub fn edge_code(d: &DistanceMatrix, e: Edge, landmarks: &LandmarkSet) -> Code {
    Code(landmarks.ids().iter().map(|&u| d.edge_vertex_distance(e, u)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "pair")]
pub enum Collision {
    Vertices(usize, usize),
    Edges(Edge, Edge),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub resolving: bool,
    pub witness: Option<Collision>,
}

impl VerificationResult {
    fn from_collision(witness: Option<Collision>) -> Self {
        VerificationResult {
            resolving: witness.is_none(),
            witness,
        }
    }
}

/// Lexicographically first pair `(i, j)`, `i < j`, of objects with equal
/// codes. Codes are packed big-endian into one byte buffer and sorted, so
/// byte order matches numeric order.
fn first_collision<F>(objects: usize, landmarks: &[usize], dist: F) -> Option<(usize, usize)>
where
    F: Fn(usize, usize) -> Distance,
{
    let stride = 2 * landmarks.len();
    let mut packed = Vec::with_capacity(objects * stride);
    for obj in 0..objects {
        for &l in landmarks {
            packed.extend_from_slice(&dist(obj, l).to_be_bytes());
        }
    }
    let code = |i: usize| &packed[i * stride..(i + 1) * stride];
    let mut order: Vec<usize> = (0..objects).collect();
    order.sort_by(|&a, &b| code(a).cmp(code(b)).then(a.cmp(&b)));

    // Within a run of equal codes the first two entries are the run's
    // smallest pair; the overall answer is the run with the smallest head.
    let mut best: Option<(usize, usize)> = None;
    let mut k = 0;
    while k + 1 < objects {
        if code(order[k]) == code(order[k + 1]) {
            let pair = (order[k], order[k + 1]);
            if best.is_none_or(|b| pair < b) {
                best = Some(pair);
            }
            let head = code(order[k]);
            while k + 1 < objects && code(order[k + 1]) == head {
                k += 1;
            }
        }
        k += 1;
    }
    best
}

pub fn edge_resolving_with(g: &Graph, d: &DistanceMatrix, landmarks: &LandmarkSet) -> VerificationResult {
    let edges = g.edges();
    let hit = first_collision(edges.len(), landmarks.ids(), |i, l| d.edge_vertex_distance(edges[i], l));
    VerificationResult::from_collision(hit.map(|(i, j)| Collision::Edges(edges[i], edges[j])))
}

pub fn vertex_resolving_with(d: &DistanceMatrix, landmarks: &LandmarkSet) -> VerificationResult {
    let hit = first_collision(d.len(), landmarks.ids(), |v, l| d.get(v, l));
    VerificationResult::from_collision(hit.map(|(a, b)| Collision::Vertices(a, b)))
}

/// Whether every edge of `g` gets a distinct code. On failure the witness is
/// the first colliding pair in canonical edge order.
pub fn is_edge_resolving(g: &Graph, landmarks: &LandmarkSet) -> Result<VerificationResult> {
    let d = g.all_pairs_distances()?;
    Ok(edge_resolving_with(g, &d, landmarks))
}

pub fn is_vertex_resolving(g: &Graph, landmarks: &LandmarkSet) -> Result<VerificationResult> {
    let d = g.all_pairs_distances()?;
    Ok(vertex_resolving_with(&d, landmarks))
}

/// One row per edge, in canonical order.
pub fn edge_code_table(g: &Graph, d: &DistanceMatrix, landmarks: &LandmarkSet) -> Vec<(Edge, Code)> {
    g.edges().iter().map(|&e| (e, edge_code(d, e, landmarks))).collect()
}

pub fn vertex_code_table(d: &DistanceMatrix, landmarks: &LandmarkSet) -> Vec<(usize, Code)> {
    (0..d.len()).map(|v| (v, vertex_code(d, v, landmarks))).collect()
}
