//! Generators for the extremal set families.

pub mod behrend;
pub mod lift;
pub mod lower_exponent;
pub mod neg_blt;
pub mod niveau;
pub mod tricolored;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Result;
use crate::group::GroupCtx;
use crate::set::{deserialize_rational, serialize_rational, sumset, Rational};
use crate::GSet;

pub use behrend::{behrend_sphere, behrend_z_set, digit_map};
pub use lift::{lift_construction, Lift};
pub use lower_exponent::{ap_plus_spikes, interval_union_lattice, spike_pair};
pub use neg_blt::{neg_blt_set, NegBlt};
pub use niveau::{niveau_f2, niveau_zn, NiveauMeta};
pub use tricolored::{brute_tricolored, fpn_nonsaturating, fpn_targets, tricolored_valid, Triple};

fn default_budget() -> u64 {
    64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ConstructionParams {
    LowerExponent {
        d: usize,
        m: u64,
        #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
        delta: Rational,
        #[serde(default, with = "opt_rational")]
        eps: Option<Rational>,
    },
    SpikePair {
        n: u64,
        k: u64,
        #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
        eps: Rational,
    },
    ApSpikes {
        n: u64,
        k: u64,
    },
    Behrend {
        r: u64,
        n: usize,
    },
    BehrendZ {
        r: u64,
        n: usize,
    },
    Tricolored {
        p: u64,
        n: usize,
        #[serde(default = "default_budget")]
        budget: u64,
        #[serde(default)]
        seed: u64,
    },
    /// The non-saturating set in `F_p^n` over a collection found in `F_p^{n-2}`.
    Fpn {
        p: u64,
        n: usize,
        #[serde(default = "default_budget")]
        budget: u64,
        #[serde(default)]
        seed: u64,
    },
    NiveauF2 {
        p: usize,
        m: usize,
        #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
        theta: Rational,
        #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
        delta: Rational,
    },
    NiveauZn {
        q: u64,
        primes: Vec<u64>,
        #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
        theta: Rational,
        #[serde(serialize_with = "serialize_rational", deserialize_with = "deserialize_rational")]
        delta: Rational,
    },
    NegBlt {
        d: usize,
        t: usize,
        n: usize,
    },
}

mod opt_rational {
    use super::Rational;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => crate::set::serialize_rational(r, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        crate::set::deserialize_rational(de).map(Some)
    }
}

/// A generated family: the main set, named companion sets, and metadata.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Construction {
    pub params: ConstructionParams,
    pub primary: GSet,
    pub companions: Vec<(String, GSet)>,
    pub meta: Value,
}

impl ConstructionParams {
    pub fn name(&self) -> &'static str {
        match self {
            ConstructionParams::LowerExponent { .. } => "lower-exponent",
            ConstructionParams::SpikePair { .. } => "spike-pair",
            ConstructionParams::ApSpikes { .. } => "ap-spikes",
            ConstructionParams::Behrend { .. } => "behrend",
            ConstructionParams::BehrendZ { .. } => "behrend-z",
            ConstructionParams::Tricolored { .. } => "tricolored",
            ConstructionParams::Fpn { .. } => "fpn",
            ConstructionParams::NiveauF2 { .. } => "niveau-f2",
            ConstructionParams::NiveauZn { .. } => "niveau-zn",
            ConstructionParams::NegBlt { .. } => "neg-blt",
        }
    }
}

fn doubling(a: &GSet) -> Result<usize> {
    Ok(sumset(a, a)?.len())
}

/// Runs the generator named by `params`.
pub fn construct(params: &ConstructionParams) -> Result<Construction> {
    let mut companions = Vec::new();
    let (primary, meta) = match params {
        ConstructionParams::LowerExponent { d, m, delta, eps } => {
            let a = interval_union_lattice(*d, *m, *delta, *eps)?;
            let meta = json!({ "size": a.len(), "base": lower_exponent::interval_union_base(*m, *delta, *eps)? });
            (a, meta)
        }
        ConstructionParams::SpikePair { n, k, eps } => {
            let (a, b) = spike_pair(*n, *k, *eps)?;
            let meta = json!({ "size_a": a.len(), "size_b": b.len(), "sumset": sumset(&a, &b)?.len() });
            companions.push(("B".to_string(), b));
            (a, meta)
        }
        ConstructionParams::ApSpikes { n, k } => {
            let a = ap_plus_spikes(*n, *k)?;
            let meta = json!({
                "size": a.len(),
                "n0": n - k + 1,
                "doubling": doubling(&a)?,
                "closed_form": lower_exponent::ap_plus_spikes_closed_form(*n, *k),
            });
            (a, meta)
        }
        ConstructionParams::Behrend { r, n } => {
            let (t, x) = behrend_sphere(*r, *n)?;
            let meta = json!({ "t_star": t, "size": x.len(), "ambient_modulus": 2 * r });
            (x, meta)
        }
        ConstructionParams::BehrendZ { r, n } => {
            let (a, a0) = behrend_z_set(*r, *n)?;
            let meta = json!({
                "T": (2 * r).pow(*n as u32),
                "size": a.len(),
                "a0_size": a0.len(),
                "doubling": doubling(&a)?,
            });
            companions.push(("A0".to_string(), a0));
            (a, meta)
        }
        ConstructionParams::Tricolored { p, n, budget, seed } => {
            let triples = brute_tricolored(*p, *n, *budget, *seed)?;
            let ctx = GroupCtx::vector(*p, *n)?;
            let pick = |f: fn(&Triple) -> &crate::Element| GSet::new(&ctx, triples.iter().map(|t| f(t).clone()));
            let (x, y, z) = (pick(|t| &t.0)?, pick(|t| &t.1)?, pick(|t| &t.2)?);
            let meta = json!({ "m": triples.len(), "triples": triples, "valid": tricolored_valid(&ctx, &triples)? });
            companions.push(("Y".to_string(), y));
            companions.push(("Z".to_string(), z));
            (x, meta)
        }
        ConstructionParams::Fpn { p, n, budget, seed } => {
            let triples = if *n >= 3 { brute_tricolored(*p, n - 2, *budget, *seed)? } else { Vec::new() };
            let a = fpn_nonsaturating(*p, *n, &triples)?;
            let meta = json!({ "m": triples.len(), "triples": triples, "size": a.len(), "doubling": doubling(&a)? });
            (a, meta)
        }
        ConstructionParams::NiveauF2 { p, m, theta, delta } => {
            let (a, meta) = niveau_f2(*p, *m, *theta, *delta)?;
            (a, serde_json::to_value(meta).expect("serializable"))
        }
        ConstructionParams::NiveauZn { q, primes, theta, delta } => {
            let (a, meta) = niveau_zn(*q, primes, *theta, *delta)?;
            (a, serde_json::to_value(meta).expect("serializable"))
        }
        ConstructionParams::NegBlt { d, t, n } => {
            let c = neg_blt_set(*d, *t, *n)?;
            let meta = json!({ "size": c.set.len(), "core_size": c.core.len(), "cube_side": c.cube_side });
            companions.push(("core".to_string(), c.core));
            (c.set, meta)
        }
    };
    Ok(Construction { params: params.clone(), primary, companions, meta })
}
