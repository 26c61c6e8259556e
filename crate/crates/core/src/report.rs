//! Serializable reports: structure sidecars, verification and construction
//! certificates, and the dimension table.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::construct::{construct_ers, labeling_for, predicted_dimension};
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph};
use crate::resolve::{
    edge_code_table, edge_resolving_with, vertex_code_table, vertex_resolving_with, Code, Collision, LandmarkSet,
};
use crate::silicate::{Family, LabeledSilicate, SilicateSpec};
use crate::solver::{exact_edge_metric_dimension, SolveOptions, Target};
use crate::structure::{
    check_necessary, check_sufficient, lemma_lower_bound, ConditionReport, Decomposition, Tetrahedron, TwinTetrahedron,
};

pub const STRUCTURE_FORMAT: &str = "emdim-structure/1";
pub const DECOMPOSITION_FORMAT: &str = "emdim-decomposition/1";
pub const VERIFY_FORMAT: &str = "emdim-verify/1";
pub const TABLE_FORMAT: &str = "emdim-table/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub vertex_count: usize,
    pub edge_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
}

impl GraphDescriptor {
    /// Describes `g`, naming the family when it is a recognizable chain or
    /// cyclic silicate.
    pub fn of(g: &Graph) -> Self {
        let spec = Decomposition::of(g).ok().and_then(|d| d.recognize(g));
        GraphDescriptor {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            family: spec.map(|s| s.family),
            n: spec.map(|s| s.n),
        }
    }
}

/// JSON sidecar written next to a generated edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSidecar {
    pub format: String,
    pub family: Family,
    pub n: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub tetrahedra: Vec<[usize; 4]>,
    pub shared_vertices: Vec<usize>,
    pub private_vertices: Vec<Vec<usize>>,
}

impl From<&LabeledSilicate> for StructureSidecar {
    fn from(s: &LabeledSilicate) -> Self {
        StructureSidecar {
            format: STRUCTURE_FORMAT.into(),
            family: s.spec.family,
            n: s.spec.n,
            vertex_count: s.graph.vertex_count(),
            edge_count: s.graph.edge_count(),
            tetrahedra: s.tetrahedra.clone(),
            shared_vertices: s.shared_vertices.clone(),
            private_vertices: s.private_vertices.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRow {
    pub object: String,
    pub code: Code,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationCertificate {
    pub format: String,
    pub graph: GraphDescriptor,
    pub target: Target,
    pub landmarks: LandmarkSet,
    pub resolving: bool,
    pub witness: Option<Collision>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub codes: Option<Vec<CodeRow>>,
}

pub fn verification_certificate(
    g: &Graph,
    d: &DistanceMatrix,
    landmarks: &LandmarkSet,
    target: Target,
    with_codes: bool,
) -> VerificationCertificate {
    let result = match target {
        Target::Edge => edge_resolving_with(g, d, landmarks),
        Target::Vertex => vertex_resolving_with(d, landmarks),
    };
    let codes = with_codes.then(|| match target {
        Target::Edge => edge_code_table(g, d, landmarks)
            .into_iter()
            .map(|(e, code)| CodeRow {
                object: e.to_string(),
                code,
            })
            .collect(),
        Target::Vertex => vertex_code_table(d, landmarks)
            .into_iter()
            .map(|(v, code)| CodeRow {
                object: v.to_string(),
                code,
            })
            .collect(),
    });
    VerificationCertificate {
        format: VERIFY_FORMAT.into(),
        graph: GraphDescriptor::of(g),
        target,
        landmarks: landmarks.clone(),
        resolving: result.resolving,
        witness: result.witness,
        codes,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub format: String,
    pub graph: GraphDescriptor,
    pub tetrahedra: Vec<Tetrahedron>,
    pub twins: Vec<TwinTetrahedron>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<CandidateReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub landmarks: LandmarkSet,
    /// Twin indices failing the necessary condition.
    pub necessary_violations: Vec<usize>,
    pub conditions: ConditionReport,
}

pub fn decomposition_report(g: &Graph, candidate: Option<&LandmarkSet>) -> Result<DecompositionReport> {
    let dec = Decomposition::of(g)?;
    let candidate = candidate.map(|s| {
        let necessary_violations = check_necessary(s, &dec.twins)
            .into_iter()
            .map(|t| dec.twins.iter().position(|u| u == t).expect("twin from list"))
            .collect();
        CandidateReport {
            landmarks: s.clone(),
            necessary_violations,
            conditions: check_sufficient(g, s, &dec.tetrahedra, &dec.twins),
        }
    });
    Ok(DecompositionReport {
        format: DECOMPOSITION_FORMAT.into(),
        graph: GraphDescriptor::of(g),
        tetrahedra: dec.tetrahedra,
        twins: dec.twins,
        candidate,
    })
}

/// A labeling-built set in the same shape as solver certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCertificate {
    pub source: String,
    pub family: Family,
    pub n: usize,
    pub target: Target,
    pub dimension: usize,
    pub witness: LandmarkSet,
    pub labeling: Vec<usize>,
    pub resolving: bool,
    pub sufficient: bool,
}

pub fn construction_certificate(spec: SilicateSpec) -> Result<ConstructionCertificate> {
    let sil = spec.generate()?;
    let lab = labeling_for(spec.family, spec.n)?;
    let set = construct_ers(&sil, &lab)?;
    let d = sil.graph.all_pairs_distances()?;
    let dec = Decomposition::of(&sil.graph)?;
    Ok(ConstructionCertificate {
        source: "theorem-construction".into(),
        family: spec.family,
        n: spec.n,
        target: Target::Edge,
        dimension: set.len(),
        resolving: edge_resolving_with(&sil.graph, &d, &set).resolving,
        sufficient: check_sufficient(&sil.graph, &set, &dec.tetrahedra, &dec.twins).sufficient,
        labeling: lab.values,
        witness: set,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: Family,
    pub n: usize,
    pub lower_bound: usize,
    pub constructed_size: usize,
    pub constructed_verified: bool,
    pub exact_dimension: Option<usize>,
    pub predicted: usize,
    /// Every present value equals the prediction and the constructed set
    /// verifies.
    pub agree: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableOptions {
    /// Subset budget per exact solve; `Some(0)` skips the exact column.
    pub budget_subsets: Option<u64>,
    pub workers: usize,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            budget_subsets: None,
            workers: 1,
        }
    }
}

pub fn table_row(spec: SilicateSpec, opts: TableOptions) -> Result<TableRow> {
    let construction = construction_certificate(spec)?;
    let predicted = predicted_dimension(spec.family, spec.n)?;
    let lower_bound = lemma_lower_bound(&spec)?;
    let exact_dimension = if opts.budget_subsets == Some(0) {
        None
    } else {
        let sil = spec.generate()?;
        let solve = SolveOptions {
            budget_subsets: opts.budget_subsets,
            workers: opts.workers,
            ..SolveOptions::edge()
        };
        let cert = exact_edge_metric_dimension(&sil.graph, &solve)?;
        cert.is_optimal().then_some(cert.dimension).flatten()
    };
    let agree = construction.resolving
        && lower_bound == predicted
        && construction.dimension == predicted
        && exact_dimension.is_none_or(|e| e == predicted);
    Ok(TableRow {
        family: spec.family,
        n: spec.n,
        lower_bound,
        constructed_size: construction.dimension,
        constructed_verified: construction.resolving,
        exact_dimension,
        predicted,
        agree,
    })
}

pub fn table(family: Family, from: usize, to: usize, opts: TableOptions) -> Result<Vec<TableRow>> {
    (from..=to)
        .map(|n| table_row(SilicateSpec { family, n }, opts))
        .collect()
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut out = String::from("family  n  lower  constructed  exact  predicted  agree\n");
    for r in rows {
        let constructed = if r.constructed_verified {
            r.constructed_size.to_string()
        } else {
            format!("{}!", r.constructed_size)
        };
        let exact = r.exact_dimension.map_or("-".to_string(), |e| e.to_string());
        let _ = writeln!(
            out,
            "{:<6} {:>3} {:>6} {:>12} {:>6} {:>10}  {}",
            r.family,
            r.n,
            r.lower_bound,
            constructed,
            exact,
            r.predicted,
            if r.agree { "yes" } else { "NO" }
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub format: String,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn new(rows: Vec<TableRow>) -> Self {
        TableReport {
            format: TABLE_FORMAT.into(),
            rows,
        }
    }
}
