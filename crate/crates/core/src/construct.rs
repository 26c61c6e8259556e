//! Explicit edge resolving sets built from a per-tetrahedron labeling.
//!
//! A labeling assigns each tetrahedron `w_i` a count `l(w_i)` in `{1, 2}`.
//! The constructed set takes that many degree-3 vertices from each one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::resolve::LandmarkSet;
use crate::silicate::{Family, LabeledSilicate};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Labeling {
    pub family: Family,
    pub values: Vec<usize>,
}

impl Labeling {
    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }
}

/// Labels for `CS_n`: 2 on the two tetrahedra at each end, alternating
/// 1 (odd position) / 2 (even position) in between.
///
/// `n = 1` and `n = 2` are degenerate: a lone tetrahedron takes 3 vertices,
/// and the two end tetrahedra of `CS_2` take 3 and 2.
pub fn labeling_chain(n: usize) -> Result<Labeling> {
    let values = match n {
        0 => return Err(Error::InvalidSilicate("chain silicate needs n >= 1".into())),
        1 => vec![3],
        2 => vec![3, 2],
        _ => (1..=n)
            .map(|i| if i <= 2 || i >= n - 1 || i % 2 == 0 { 2 } else { 1 })
            .collect(),
    };
    Ok(Labeling {
        family: Family::Chain,
        values,
    })
}

/// Labels for `CC_n`: alternating 1 / 2 around the cycle, with the last
/// tetrahedron raised to 2 when `n` is odd.
pub fn labeling_cyclic(n: usize) -> Result<Labeling> {
    if n < 3 {
        return Err(Error::InvalidSilicate("cyclic silicate needs n >= 3".into()));
    }
    let values = (1..=n).map(|i| if i % 2 == 0 || i == n { 2 } else { 1 }).collect();
    Ok(Labeling {
        family: Family::Cyclic,
        values,
    })
}

pub fn labeling_for(family: Family, n: usize) -> Result<Labeling> {
    match family {
        Family::Chain => labeling_chain(n),
        Family::Cyclic => labeling_cyclic(n),
        Family::Skeleton => Err(Error::Unsupported("no labeling for skeleton silicates".into())),
    }
}

/// Closed-form edge metric dimension claimed for `CS_n` / `CC_n`.
pub fn predicted_dimension(family: Family, n: usize) -> Result<usize> {
    match (family, n.is_multiple_of(2)) {
        (Family::Chain, _) if n < 1 => Err(Error::InvalidSilicate("chain silicate needs n >= 1".into())),
        (Family::Cyclic, _) if n < 3 => Err(Error::InvalidSilicate("cyclic silicate needs n >= 3".into())),
        (Family::Chain, true) => Ok(3 * n / 2 + 2),
        (Family::Chain, false) => Ok(3 * (n + 1) / 2),
        (Family::Cyclic, true) => Ok(3 * n / 2),
        (Family::Cyclic, false) => Ok(3 * (n + 1) / 2 - 1),
        (Family::Skeleton, _) => Err(Error::Unsupported("no dimension formula for skeleton silicates".into())),
    }
}

/// Takes the `l(w_i)` smallest degree-3 vertices of each tetrahedron.
pub fn construct_ers(sil: &LabeledSilicate, lab: &Labeling) -> Result<LandmarkSet> {
    construct_ers_by(sil, lab, |_, cubic, count| cubic[..count].to_vec())
}

/// Like [`construct_ers`] with a caller-chosen selection. `choose` gets the
/// tetrahedron index, its degree-3 vertices (ascending) and the count, and
/// must return exactly `count` of those vertices.
pub fn construct_ers_by<F>(sil: &LabeledSilicate, lab: &Labeling, mut choose: F) -> Result<LandmarkSet>
where
    F: FnMut(usize, &[usize], usize) -> Vec<usize>,
{
    if lab.values.len() != sil.tetrahedra.len() {
        return Err(Error::InvalidSilicate(format!(
            "labeling has {} entries for {} tetrahedra",
            lab.values.len(),
            sil.tetrahedra.len()
        )));
    }
    let mut ids = Vec::with_capacity(lab.total());
    for (i, &count) in lab.values.iter().enumerate() {
        let cubic = sil.cubic_vertices(i);
        if count > cubic.len() {
            return Err(Error::Construction {
                index: i,
                wanted: count,
                available: cubic.len(),
            });
        }
        let picked = choose(i, &cubic, count);
        debug_assert!(picked.len() == count && picked.iter().all(|v| cubic.contains(v)));
        ids.extend(picked);
    }
    LandmarkSet::sorted(ids, sil.graph.vertex_count())
}
