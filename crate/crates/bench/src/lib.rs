//! Shared fixtures for the criterion benchmarks.

use incidence_core::seeded::{random_supported, SplitMix64};
use incidence_core::zoo::{build, FamilySpec};
use incidence_core::{PosetView, SupportedFunction};

/// A poset together with its frontier and a seeded small-support function.
pub struct TransformFixture {
    pub poset: PosetView,
    pub frontier: Vec<incidence_core::ElementKey>,
    pub f: SupportedFunction,
}

pub fn transform_fixture(spec: &FamilySpec, bound: u32, seed: u64) -> TransformFixture {
    let poset = build(spec).expect("fixture family builds");
    let frontier = poset.frontier(bound).expect("fixture frontier");
    let mut rng = SplitMix64::new(seed);
    let f = random_supported(&mut rng, &frontier, 5, 3);
    TransformFixture { poset, frontier, f }
}
