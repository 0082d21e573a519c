//! Measured non-saturation ratios `|A' + A_(s)| / |A' + A|`.

use rand::seq::index::sample;
use serde::Serialize;

use crate::error::{Result, SumsetError};
use crate::rng::{instance_rng, random_subset};
use crate::set::{serialize_rational, sumset, Rational};
use crate::GSet;

/// Candidates examined per greedy step of the adversarial sampler.
pub const GREEDY_POOL: usize = 256;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioRow {
    pub sampler: String,
    pub trials: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub max_ratio: Rational,
    pub max_ratio_f64: f64,
    pub mean_ratio_f64: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioReport {
    pub size: usize,
    pub a_prime_size: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub eps: Rational,
    pub s: usize,
    pub seed: u64,
    pub rows: Vec<RatioRow>,
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Greedy `A_(s)` maximising `|A' + A_(s)|`, each step over a random pool of candidates.
fn greedy_sub<R: rand::Rng>(rng: &mut R, a: &GSet, a_prime: &GSet, s: usize) -> Result<GSet> {
    let mut chosen = GSet::empty(a.ctx());
    let mut cover = GSet::empty(a.ctx());
    for _ in 0..s {
        let pool = sample(rng, a.len(), GREEDY_POOL.min(a.len()));
        let mut best: Option<(usize, usize)> = None;
        for pos in pool.into_iter() {
            let single = a.select([pos]);
            let sums = sumset(a_prime, &single)?;
            let gain = match (sums.mask(), cover.mask()) {
                (Some(x), Some(y)) => x.count_minus(y),
                _ => sums.minus(&cover)?.len(),
            };
            if best.is_none_or(|(bp, g)| gain > g || (gain == g && pos < bp)) {
                best = Some((pos, gain));
            }
        }
        let Some((pos, _)) = best else { break };
        let single = a.select([pos]);
        cover = cover.union(&sumset(a_prime, &single)?)?;
        chosen = chosen.union(&single)?;
    }
    Ok(chosen)
}

/// Samples `A' ⊆ A` of size `ceil((1-eps)|A|)` and, against the same `A'`,
/// `A_(s) ⊆ A` of size `s` uniformly and by a greedy adversary; reports the
/// largest observed `|A' + A_(s)| / |A' + A|` per sampler.
pub fn nonsaturation_ratio(a: &GSet, eps: Rational, s: usize, trials: u64, seed: u64) -> Result<RatioReport> {
    if a.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    if eps > Rational::from_integer(1) {
        return Err(SumsetError::BadParams("eps must lie in [0, 1]".into()));
    }
    let n = a.len() as u64;
    let keep = Rational::from_integer(1) - eps;
    let a_prime_size = ((keep * Rational::from_integer(n)).ceil().to_integer() as usize).max(1);
    let mut max = [Rational::from_integer(0); 2];
    let mut sum = [0.0; 2];
    for trial in 0..trials {
        let mut rng = instance_rng(seed, trial);
        let a_prime = random_subset(&mut rng, a, a_prime_size);
        let den = sumset(&a_prime, a)?.len() as u64;
        for k in 0..2 {
            let a_s = if s == 0 {
                GSet::empty(a.ctx())
            } else if k == 0 {
                random_subset(&mut rng, a, s)
            } else {
                greedy_sub(&mut rng, a, &a_prime, s)?
            };
            let r = Rational::new(sumset(&a_prime, &a_s)?.len() as u64, den);
            max[k] = max[k].max(r);
            sum[k] += to_f64(r);
        }
    }
    let rows = ["uniform", "greedy"]
        .into_iter()
        .enumerate()
        .map(|(k, sampler)| RatioRow {
            sampler: sampler.into(),
            trials,
            max_ratio: max[k],
            max_ratio_f64: to_f64(max[k]),
            mean_ratio_f64: if trials == 0 { 0.0 } else { sum[k] / trials as f64 },
        })
        .collect();
    Ok(RatioReport { size: a.len(), a_prime_size, eps, s, seed, rows })
}
