//! Selection procedures: greedy small-subset saturation, medium-sized
//! saturation, exhaustive search oracles, saturating covers, and
//! full-dimensional subset selection.

mod cover;
mod fulldim;
mod greedy;
mod medium;
mod search;

use serde::{Deserialize, Serialize};

use crate::group::Element;
use crate::set::{serialize_rational, GSet, Rational};

pub use cover::{saturating_cover, CoverOutcome};
pub use fulldim::select_full_dim_subset;
pub use greedy::{greedy_diff_saturate, greedy_pair_saturate, greedy_self_saturate, MAX_C};
pub use medium::{medium_saturate, MediumParams};
pub use search::{brute_min_subset, find_triple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

/// One greedy step: the element taken, the set it was taken from, and the
/// exact growth of the sumset it was added against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub element: Element,
    pub side: Side,
    pub gain: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationOutcome {
    pub algorithm: String,
    /// `|A|`.
    pub n: usize,
    pub a_sub: GSet,
    pub b_sub: GSet,
    /// `|A + B_(s)|` (for the difference variant, `|A - A_(s)|`).
    pub achieved_a: usize,
    /// `|B + A_(s)|`.
    pub achieved_b: usize,
    /// `|A_(s) + B_(s)|`, reported by the medium-sized procedure.
    pub achieved_joint: Option<usize>,
    /// `|A' + B'|` of the medium baseline pair.
    pub baseline: Option<usize>,
    pub trace: Vec<TraceStep>,
    #[serde(serialize_with = "serialize_rational")]
    pub kappa: Rational,
    pub s_budget: usize,
}
