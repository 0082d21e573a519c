//! Certificate checkers and theorem-inequality validators.

pub mod bounds;
pub mod doubling;
pub mod hamming;
pub mod hyperplane;
pub mod interval;
pub mod ratio;
pub mod walks;

use serde::Serialize;

pub use bounds::{plunnecke_check, theorem_bound_check, Theorem};
pub use doubling::{saturation_lower_bound, unique_doubling_check, unique_representations};
pub use hamming::{hamming_neighborhood, harper_check, niveau_containment_check};
pub use hyperplane::{hyperplane_cover_check, CoverWitness, HyperplaneVerdict};
pub use interval::{interval_cover_check, min_cyclic_interval};
pub use ratio::{nonsaturation_ratio, RatioReport, RatioRow};
pub use walks::{min_walks, walk_bound_certificate, WalkCertificate};

/// Outcome of a check. `pass` is `None` for measurements that are reported
/// rather than asserted.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub params: serde_json::Value,
    pub seed: Option<u64>,
    pub pass: Option<bool>,
    pub slack: Option<f64>,
    pub witness: serde_json::Value,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.pass != Some(false)
    }
}
