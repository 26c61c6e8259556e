//! Shared inputs for the criterion benchmarks.

use emdim::{construct_ers, labeling_for, LabeledSilicate, LandmarkSet, SilicateSpec};

/// Networks the benchmarks run on, smallest first.
pub fn instances() -> Vec<LabeledSilicate> {
    [
        SilicateSpec::chain(4),
        SilicateSpec::cyclic(5),
        SilicateSpec::chain(6),
        SilicateSpec::cyclic(7),
    ]
    .iter()
    .map(|s| s.generate().expect("valid spec"))
    .collect()
}

/// The labeled construction for a chain or cyclic network.
pub fn constructed_set(sil: &LabeledSilicate) -> LandmarkSet {
    let lab = labeling_for(sil.spec.family, sil.spec.n).expect("chain or cyclic");
    construct_ers(sil, &lab).expect("labels fit")
}
