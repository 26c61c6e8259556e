//! Tetrahedron decomposition, twin tetrahedra and the cubic-set conditions
//! on edge resolving sets.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::resolve::LandmarkSet;
use crate::silicate::{Family, SilicateSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TetrahedronKind {
    /// Three degree-3 vertices (end of a chain).
    TypeI,
    /// Two degree-3 vertices.
    TypeII,
    /// All four vertices have degree 3: the lone tetrahedron `CS_1`.
    Isolated,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tetrahedron {
    pub vertices: [usize; 4],
    pub cubic_vertices: Vec<usize>,
    pub kind: TetrahedronKind,
}

impl Tetrahedron {
    fn classify(g: &Graph, vertices: [usize; 4]) -> Self {
        let cubic_vertices: Vec<usize> = vertices.iter().copied().filter(|&v| g.degree(v) == 3).collect();
        let kind = match cubic_vertices.len() {
            4 => TetrahedronKind::Isolated,
            3 => TetrahedronKind::TypeI,
            2 => TetrahedronKind::TypeII,
            _ => TetrahedronKind::Other,
        };
        Tetrahedron {
            vertices,
            cubic_vertices,
            kind,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edges(&self) -> [Edge; 6] {
        let [a, b, c, d] = self.vertices;
        [
            Edge::new(a, b),
            Edge::new(a, c),
            Edge::new(a, d),
            Edge::new(b, c),
            Edge::new(b, d),
            Edge::new(c, d),
        ]
    }
}

/// Two tetrahedra meeting in exactly one vertex, the hinge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinTetrahedron {
    /// Indices into the tetrahedron list, `left < right`.
    pub left: usize,
    pub right: usize,
    pub hinge: usize,
    /// Degree-3 vertices of both tetrahedra, ascending.
    pub cubic_set: Vec<usize>,
}

impl TwinTetrahedron {
    /// Cubic vertices not in `s`.
    pub fn excluded(&self, s: &LandmarkSet) -> usize {
        self.cubic_set.iter().filter(|&&v| !s.contains(v)).count()
    }
}

/// Finds the edge-disjoint cover of `g` by complete 4-vertex subgraphs.
///
/// Tetrahedra come back ordered by their vertex sets compared from the
/// largest id down, which reproduces the generator order for chain, cyclic
/// and skeleton networks.
pub fn find_tetrahedra(g: &Graph) -> Result<Vec<Tetrahedron>> {
    let mut covered = vec![false; g.edge_count()];
    let mut chosen = Vec::new();
    let mut stuck = None;
    if !cover_from(g, 0, &mut covered, &mut chosen, &mut stuck) {
        let edge = stuck.unwrap_or_else(|| g.edges()[0]);
        return Err(Error::NoTetrahedronCover(edge));
    }
    chosen.sort_by_key(|t: &[usize; 4]| {
        let mut key = *t;
        key.reverse();
        key
    });
    Ok(chosen.into_iter().map(|t| Tetrahedron::classify(g, t)).collect())
}

fn k4_candidates(g: &Graph, e: Edge, covered: &[bool]) -> Vec<[usize; 4]> {
    let common: Vec<usize> = g
        .neighbors(e.u)
        .iter()
        .copied()
        .filter(|&w| g.has_edge(e.v, w))
        .collect();
    let mut out = Vec::new();
    for (i, &a) in common.iter().enumerate() {
        for &b in &common[i + 1..] {
            if !g.has_edge(a, b) {
                continue;
            }
            let mut t = [e.u, e.v, a, b];
            t.sort_unstable();
            let free = Tetrahedron::classify(g, t)
                .edges()
                .iter()
                .all(|&f| !covered[g.edge_index(f).expect("K4 edge")]);
            if free {
                out.push(t);
            }
        }
    }
    out
}

fn cover_from(
    g: &Graph,
    start: usize,
    covered: &mut Vec<bool>,
    chosen: &mut Vec<[usize; 4]>,
    stuck: &mut Option<Edge>,
) -> bool {
    let Some(first) = (start..covered.len()).find(|&i| !covered[i]) else {
        return true;
    };
    let e = g.edges()[first];
    let candidates = k4_candidates(g, e, covered);
    if candidates.is_empty() {
        stuck.get_or_insert(e);
        return false;
    }
    for t in candidates {
        let idx: Vec<usize> = Tetrahedron::classify(g, t)
            .edges()
            .iter()
            .map(|&f| g.edge_index(f).expect("K4 edge"))
            .collect();
        for &i in &idx {
            covered[i] = true;
        }
        chosen.push(t);
        if cover_from(g, first + 1, covered, chosen, stuck) {
            return true;
        }
        chosen.pop();
        for &i in &idx {
            covered[i] = false;
        }
    }
    false
}

/// Every pair of tetrahedra sharing exactly one vertex, ordered by
/// `(left, right)`.
pub fn find_twins(g: &Graph, tets: &[Tetrahedron]) -> Vec<TwinTetrahedron> {
    let mut membership = vec![Vec::new(); g.vertex_count()];
    for (i, t) in tets.iter().enumerate() {
        for &v in &t.vertices {
            membership[v].push(i);
        }
    }
    let mut pairs = BTreeSet::new();
    for list in &membership {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                pairs.insert((i.min(j), i.max(j)));
            }
        }
    }
    pairs
        .into_iter()
        .filter_map(|(i, j)| {
            let shared: Vec<usize> = tets[i]
                .vertices
                .iter()
                .copied()
                .filter(|&v| tets[j].contains(v))
                .collect();
            if shared.len() != 1 {
                return None;
            }
            let mut cubic_set: Vec<usize> = tets[i]
                .cubic_vertices
                .iter()
                .chain(&tets[j].cubic_vertices)
                .copied()
                .collect();
            cubic_set.sort_unstable();
            Some(TwinTetrahedron {
                left: i,
                right: j,
                hinge: shared[0],
                cubic_set,
            })
        })
        .collect()
}

/// Twins leaving two or more cubic vertices outside `s`. Any such twin
/// makes `s` fail: the two hinge edges to the excluded vertices have equal
/// distance to every other vertex.
pub fn check_necessary<'a>(s: &LandmarkSet, twins: &'a [TwinTetrahedron]) -> Vec<&'a TwinTetrahedron> {
    twins.iter().filter(|t| t.excluded(s) >= 2).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// Twin indices with `|C \ S| >= 2`.
    pub twin_violations: Vec<usize>,
    /// Type I tetrahedra with fewer than two cubic vertices in `S`.
    pub type_i_violations: Vec<usize>,
    /// Type II tetrahedra with no cubic vertex in `S`.
    pub type_ii_violations: Vec<usize>,
    /// Isolated tetrahedra with fewer than three vertices in `S`.
    pub isolated_violations: Vec<usize>,
    /// Members of `S` that are not degree-3 vertices; ignored by the checks.
    pub non_cubic_members: Vec<usize>,
    pub sufficient: bool,
}

pub fn check_sufficient(
    g: &Graph,
    s: &LandmarkSet,
    tets: &[Tetrahedron],
    twins: &[TwinTetrahedron],
) -> ConditionReport {
    let cubic_in = |t: &Tetrahedron| t.cubic_vertices.iter().filter(|&&v| s.contains(v)).count();
    let violations = |kind: TetrahedronKind, need: usize| -> Vec<usize> {
        tets.iter()
            .enumerate()
            .filter(|(_, t)| t.kind == kind && cubic_in(t) < need)
            .map(|(i, _)| i)
            .collect()
    };
    let twin_violations: Vec<usize> = twins
        .iter()
        .enumerate()
        .filter(|(_, t)| t.excluded(s) >= 2)
        .map(|(i, _)| i)
        .collect();
    let type_i_violations = violations(TetrahedronKind::TypeI, 2);
    let type_ii_violations = violations(TetrahedronKind::TypeII, 1);
    let isolated_violations = violations(TetrahedronKind::Isolated, 3);
    let non_cubic_members = s.ids().iter().copied().filter(|&v| g.degree(v) != 3).collect();
    let sufficient = twin_violations.is_empty()
        && type_i_violations.is_empty()
        && type_ii_violations.is_empty()
        && isolated_violations.is_empty();
    ConditionReport {
        twin_violations,
        type_i_violations,
        type_ii_violations,
        isolated_violations,
        non_cubic_members,
        sufficient,
    }
}

/// Lower bound on the edge metric dimension obtained by charging each twin
/// of an edge-disjoint pairing `|C| - 1` landmarks.
pub fn lemma_lower_bound(spec: &SilicateSpec) -> Result<usize> {
    spec.validate()?;
    let n = spec.n;
    match spec.family {
        Family::Chain => Ok(match n {
            1 => 3,
            2 => 5,
            _ if n.is_multiple_of(2) => 3 * n / 2 + 2,
            _ => 3 * (n + 1) / 2,
        }),
        Family::Cyclic => Ok(if n.is_multiple_of(2) {
            3 * n / 2
        } else {
            3 * (n + 1) / 2 - 1
        }),
        Family::Skeleton => Err(Error::Unsupported(
            "no lower bound for general skeleton silicates".into(),
        )),
    }
}

/// Tetrahedra and twins of a silicate network.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub tetrahedra: Vec<Tetrahedron>,
    pub twins: Vec<TwinTetrahedron>,
}

impl Decomposition {
    pub fn of(g: &Graph) -> Result<Self> {
        let tetrahedra = find_tetrahedra(g)?;
        let twins = find_twins(g, &tetrahedra);
        Ok(Decomposition { tetrahedra, twins })
    }

    /// Recognizes `CS_n` (tetrahedra linked as a path) or `CC_n` (linked as
    /// a cycle) up to relabeling.
    pub fn recognize(&self, g: &Graph) -> Option<SilicateSpec> {
        let t = self.tetrahedra.len();
        if t == 0 || (0..g.vertex_count()).any(|v| g.degree(v) != 3 && g.degree(v) != 6) {
            return None;
        }
        if t == 1 {
            return (g.vertex_count() == 4).then(|| SilicateSpec::chain(1));
        }
        let mut links = vec![0usize; t];
        for tw in &self.twins {
            links[tw.left] += 1;
            links[tw.right] += 1;
        }
        if links.iter().any(|&l| l == 0 || l > 2) || !self.links_connected() {
            return None;
        }
        let ends = links.iter().filter(|&&l| l == 1).count();
        if ends == 2 && self.twins.len() == t - 1 && g.vertex_count() == 3 * t + 1 {
            Some(SilicateSpec::chain(t))
        } else if ends == 0 && t >= 3 && self.twins.len() == t && g.vertex_count() == 3 * t {
            Some(SilicateSpec::cyclic(t))
        } else {
            None
        }
    }

    fn links_connected(&self) -> bool {
        let t = self.tetrahedra.len();
        let mut adj = vec![Vec::new(); t];
        for tw in &self.twins {
            adj[tw.left].push(tw.right);
            adj[tw.right].push(tw.left);
        }
        let mut seen = vec![false; t];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if !std::mem::replace(&mut seen[j], true) {
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolve::is_edge_resolving;
    use crate::silicate::{chain_silicate, cyclic_silicate, silicate_of_skeleton};

    fn kinds(tets: &[Tetrahedron], kind: TetrahedronKind) -> usize {
        tets.iter().filter(|t| t.kind == kind).count()
    }

    #[test]
    fn chain_seven_kinds() {
        let s = chain_silicate(7).unwrap();
        let tets = find_tetrahedra(&s.graph).unwrap();
        assert_eq!(tets.len(), 7);
        assert_eq!(kinds(&tets, TetrahedronKind::TypeI), 2);
        assert_eq!(kinds(&tets, TetrahedronKind::TypeII), 5);
        assert_eq!(tets[0].kind, TetrahedronKind::TypeI);
        assert_eq!(tets[6].kind, TetrahedronKind::TypeI);
    }

    #[test]
    fn cyclic_all_type_two() {
        let s = cyclic_silicate(8).unwrap();
        let tets = find_tetrahedra(&s.graph).unwrap();
        assert_eq!(kinds(&tets, TetrahedronKind::TypeII), 8);
    }

    #[test]
    fn lone_tetrahedron() {
        let s = chain_silicate(1).unwrap();
        let tets = find_tetrahedra(&s.graph).unwrap();
        assert_eq!(tets.len(), 1);
        assert_eq!(tets[0].kind, TetrahedronKind::Isolated);
        assert_eq!(tets[0].cubic_vertices.len(), 4);
    }

    #[test]
    fn recovers_generator_order() {
        for s in [
            chain_silicate(5).unwrap(),
            cyclic_silicate(3).unwrap(),
            cyclic_silicate(6).unwrap(),
        ] {
            let tets = find_tetrahedra(&s.graph).unwrap();
            let found: Vec<[usize; 4]> = tets.iter().map(|t| t.vertices).collect();
            assert_eq!(found, s.tetrahedra);
        }
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = silicate_of_skeleton(&star).unwrap();
        let found: Vec<[usize; 4]> = find_tetrahedra(&s.graph).unwrap().iter().map(|t| t.vertices).collect();
        assert_eq!(found, s.tetrahedra);
    }

    #[test]
    fn non_silicate_reports_uncovered_edge() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_tetrahedra(&path), Err(Error::NoTetrahedronCover(Edge::new(0, 1))));
        // K5 has 10 edges, not a multiple of 6
        let k5 = Graph::new(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
        assert!(find_tetrahedra(&k5).is_err());
    }

    #[test]
    fn twin_counts() {
        for n in 2..9 {
            let s = chain_silicate(n).unwrap();
            let d = Decomposition::of(&s.graph).unwrap();
            assert_eq!(d.twins.len(), n - 1);
            assert!(d.twins.iter().all(|t| s.graph.degree(t.hinge) == 6));
        }
        for n in 3..9 {
            let s = cyclic_silicate(n).unwrap();
            let d = Decomposition::of(&s.graph).unwrap();
            assert_eq!(d.twins.len(), n);
            assert!(d.twins.iter().all(|t| t.cubic_set.len() == 4));
        }
    }

    #[test]
    fn even_chain_pairing_cubic_sizes() {
        let s = chain_silicate(6).unwrap();
        let d = Decomposition::of(&s.graph).unwrap();
        let pairing: Vec<usize> = d
            .twins
            .iter()
            .filter(|t| t.left % 2 == 0)
            .map(|t| t.cubic_set.len())
            .collect();
        assert_eq!(pairing, vec![5, 4, 5]);
    }

    #[test]
    fn necessary_condition_cases() {
        let s = chain_silicate(2).unwrap();
        let d = Decomposition::of(&s.graph).unwrap();
        let all_cubic = LandmarkSet::new(vec![0, 1, 2, 4, 5, 6], 7).unwrap();
        assert!(check_necessary(&all_cubic, &d.twins).is_empty());

        let missing_two = LandmarkSet::new(vec![0, 1, 2, 6], 7).unwrap();
        assert_eq!(check_necessary(&missing_two, &d.twins).len(), 1);
        assert!(!is_edge_resolving(&s.graph, &missing_two).unwrap().resolving);

        // CC_4, one cubic vertex per tetrahedron: every twin misses two
        let s = cyclic_silicate(4).unwrap();
        let d = Decomposition::of(&s.graph).unwrap();
        let one_each = LandmarkSet::new(vec![1, 4, 7, 10], 12).unwrap();
        assert_eq!(check_necessary(&one_each, &d.twins).len(), 4);
        assert!(!is_edge_resolving(&s.graph, &one_each).unwrap().resolving);
    }

    #[test]
    fn sufficient_condition_cases() {
        let s = cyclic_silicate(8).unwrap();
        let d = Decomposition::of(&s.graph).unwrap();
        let cubic: Vec<usize> = (0..24).filter(|&v| s.graph.degree(v) == 3).collect();
        let all = LandmarkSet::new(cubic, 24).unwrap();
        let report = check_sufficient(&s.graph, &all, &d.tetrahedra, &d.twins);
        assert!(report.sufficient);
        assert!(report.non_cubic_members.is_empty());

        let with_hinge = LandmarkSet::new(vec![0, 1, 2], 24).unwrap();
        let report = check_sufficient(&s.graph, &with_hinge, &d.tetrahedra, &d.twins);
        assert_eq!(report.non_cubic_members, vec![0]);
        assert!(!report.sufficient);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lemma_lower_bound(&SilicateSpec::chain(6)).unwrap(), 11);
        assert_eq!(lemma_lower_bound(&SilicateSpec::chain(1)).unwrap(), 3);
        assert_eq!(lemma_lower_bound(&SilicateSpec::chain(2)).unwrap(), 5);
        assert_eq!(lemma_lower_bound(&SilicateSpec::chain(7)).unwrap(), 12);
        assert_eq!(lemma_lower_bound(&SilicateSpec::cyclic(8)).unwrap(), 12);
        assert_eq!(lemma_lower_bound(&SilicateSpec::cyclic(3)).unwrap(), 5);
        let skel = SilicateSpec {
            family: Family::Skeleton,
            n: 3,
        };
        assert!(matches!(lemma_lower_bound(&skel), Err(Error::Unsupported(_))));
    }

    #[test]
    fn recognizes_families() {
        for n in 1..8 {
            let s = chain_silicate(n).unwrap();
            let d = Decomposition::of(&s.graph).unwrap();
            assert_eq!(d.recognize(&s.graph), Some(SilicateSpec::chain(n)));
        }
        for n in 3..8 {
            let s = cyclic_silicate(n).unwrap();
            let d = Decomposition::of(&s.graph).unwrap();
            assert_eq!(d.recognize(&s.graph), Some(SilicateSpec::cyclic(n)));
        }
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = silicate_of_skeleton(&star).unwrap();
        let d = Decomposition::of(&s.graph).unwrap();
        assert_eq!(d.recognize(&s.graph), None);
    }
}
