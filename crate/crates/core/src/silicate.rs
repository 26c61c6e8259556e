//! Chain, cyclic and skeleton silicate networks.
//!
//! Numbering contract for chain and cyclic networks: tetrahedra are emitted
//! in order `w_1..w_n`, and each one assigns fresh ids to its not-yet-seen
//! vertices in the order shared-with-previous, privates, shared-with-next.
//! For `CS_n` this puts the shared vertex between `w_i` and `w_{i+1}` at id
//! `3i`; for `CC_n` the shared vertex `c_i` sits at id `3(i - 1)`.
//!
//! Skeleton expansion keeps the base vertex ids `0..|V|` as corners and gives
//! the `i`-th base edge the private ids `|V| + 2i` and `|V| + 2i + 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Chain,
    Cyclic,
    Skeleton,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Chain => "chain",
            Family::Cyclic => "cyclic",
            Family::Skeleton => "skeleton",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(Family::Chain),
            "cyclic" => Ok(Family::Cyclic),
            "skeleton" => Ok(Family::Skeleton),
            other => Err(Error::InvalidSilicate(format!("unknown family {other:?}"))),
        }
    }
}

/// Family plus tetrahedron count. For the skeleton family `n` is the number
/// of base edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SilicateSpec {
    pub family: Family,
    pub n: usize,
}

impl SilicateSpec {
    pub fn chain(n: usize) -> Self {
        SilicateSpec {
            family: Family::Chain,
            n,
        }
    }

    pub fn cyclic(n: usize) -> Self {
        SilicateSpec {
            family: Family::Cyclic,
            n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.family {
            Family::Chain if self.n < 1 => Err(Error::InvalidSilicate("chain silicate needs n >= 1".into())),
            Family::Cyclic if self.n < 3 => Err(Error::InvalidSilicate("cyclic silicate needs n >= 3".into())),
            _ => Ok(()),
        }
    }

    /// Generates the network. Skeleton specs carry no base graph and are
    /// rejected here; use [`silicate_of_skeleton`].
    pub fn generate(&self) -> Result<LabeledSilicate> {
        match self.family {
            Family::Chain => chain_silicate(self.n),
            Family::Cyclic => cyclic_silicate(self.n),
            Family::Skeleton => Err(Error::Unsupported(
                "skeleton family needs an explicit base graph".into(),
            )),
        }
    }
}

impl fmt::Display for SilicateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Chain => write!(f, "CS_{}", self.n),
            Family::Cyclic => write!(f, "CC_{}", self.n),
            Family::Skeleton => write!(f, "skeleton({} edges)", self.n),
        }
    }
}

/// A silicate network together with its generator-side structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSilicate {
    pub spec: SilicateSpec,
    pub graph: Graph,
    /// Tetrahedron `i` corresponds to skeleton vertex `w_{i+1}`; vertex ids
    /// are ascending within each entry.
    pub tetrahedra: Vec<[usize; 4]>,
    /// Vertices lying in two or more tetrahedra, ascending.
    pub shared_vertices: Vec<usize>,
    /// Per tetrahedron, the vertices lying in no other tetrahedron.
    pub private_vertices: Vec<Vec<usize>>,
}

impl LabeledSilicate {
    fn assemble(spec: SilicateSpec, vertex_count: usize, tetrahedra: Vec<[usize; 4]>) -> Result<Self> {
        let mut membership = vec![0usize; vertex_count];
        let mut pairs = Vec::with_capacity(6 * tetrahedra.len());
        for t in &tetrahedra {
            for (i, &a) in t.iter().enumerate() {
                membership[a] += 1;
                for &b in &t[i + 1..] {
                    pairs.push((a, b));
                }
            }
        }
        let graph = Graph::new(vertex_count, pairs)?;
        let shared_vertices = (0..vertex_count).filter(|&v| membership[v] > 1).collect();
        let private_vertices = tetrahedra
            .iter()
            .map(|t| t.iter().copied().filter(|&v| membership[v] == 1).collect())
            .collect();
        Ok(LabeledSilicate {
            spec,
            graph,
            tetrahedra,
            shared_vertices,
            private_vertices,
        })
    }

    /// Degree-3 vertices of tetrahedron `i`, ascending.
    pub fn cubic_vertices(&self, i: usize) -> Vec<usize> {
        self.tetrahedra[i]
            .iter()
            .copied()
            .filter(|&v| self.graph.degree(v) == 3)
            .collect()
    }
}

fn sorted4(mut t: [usize; 4]) -> [usize; 4] {
    t.sort_unstable();
    t
}

/// Chain silicate `CS_n`: `3n + 1` vertices, `6n` edges.
pub fn chain_silicate(n: usize) -> Result<LabeledSilicate> {
    let spec = SilicateSpec::chain(n);
    spec.validate()?;
    let mut tetrahedra = Vec::with_capacity(n);
    let mut next = 0;
    let mut previous_shared: Option<usize> = None;
    for _ in 0..n {
        let mut t = Vec::with_capacity(4);
        if let Some(s) = previous_shared {
            t.push(s);
        }
        while t.len() < 4 {
            t.push(next);
            next += 1;
        }
        previous_shared = Some(t[3]);
        tetrahedra.push(sorted4([t[0], t[1], t[2], t[3]]));
    }
    LabeledSilicate::assemble(spec, 3 * n + 1, tetrahedra)
}

/// Cyclic silicate `CC_n`: `3n` vertices, `6n` edges.
pub fn cyclic_silicate(n: usize) -> Result<LabeledSilicate> {
    let spec = SilicateSpec::cyclic(n);
    spec.validate()?;
    let corner = |i: usize| 3 * (i % n);
    let tetrahedra = (0..n)
        .map(|i| sorted4([corner(i), 3 * i + 1, 3 * i + 2, corner(i + 1)]))
        .collect();
    LabeledSilicate::assemble(spec, 3 * n, tetrahedra)
}

/// Replaces every base edge `uv` by a tetrahedron on `u`, `v` and two fresh
/// vertices.
pub fn silicate_of_skeleton(base: &Graph) -> Result<LabeledSilicate> {
    if base.edge_count() == 0 {
        return Err(Error::InvalidSilicate("skeleton has no edges".into()));
    }
    if !base.is_connected() {
        return Err(Error::InvalidSilicate("skeleton is disconnected".into()));
    }
    let corners = base.vertex_count();
    let tetrahedra = base
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| sorted4([e.u, e.v, corners + 2 * i, corners + 2 * i + 1]))
        .collect();
    let spec = SilicateSpec {
        family: Family::Skeleton,
        n: base.edge_count(),
    };
    LabeledSilicate::assemble(spec, corners + 2 * base.edge_count(), tetrahedra)
}
