//! Deterministic seeding. A single seed is split into independent per-instance
//! streams (ChaCha8 stream selection), so inserting instances never shifts the
//! randomness seen by existing ones.

use rand::seq::index::sample;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::group::GroupCtx;
use crate::set::GSet;

pub fn instance_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Derived 64-bit seed for instance `id`.
pub fn instance_seed(seed: u64, id: u64) -> u64 {
    instance_rng(seed, id).next_u64()
}

/// Uniform `k`-subset of `set` (all of it when `k >= |set|`).
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, set: &GSet, k: usize) -> GSet {
    let n = set.len();
    if k >= n {
        return set.clone();
    }
    set.select(sample(rng, n, k))
}

/// Uniform `k`-subset of `{lo, ..., hi}` in `Z`.
pub fn random_ints<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64, k: usize) -> GSet {
    let span = (hi - lo + 1) as usize;
    let v: Vec<i64> = sample(rng, span, k.min(span)).into_iter().map(|i| lo + i as i64).collect();
    GSet::ints(&v)
}

/// Uniform `k`-subset of a finite group.
pub fn random_finite<R: Rng + ?Sized>(rng: &mut R, ctx: &GroupCtx, k: usize) -> Result<GSet> {
    let order = ctx.order().ok_or_else(|| crate::error::SumsetError::Unsupported("random set in a lattice".into()))?;
    let order = usize::try_from(order).map_err(|_| crate::error::SumsetError::Overflow)?;
    GSet::from_indices(ctx, sample(rng, order, k.min(order)).into_iter().map(|i| i as u64))
}
