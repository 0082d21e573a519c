//! Interval-union lattice sets, spike pairs, and progressions with spikes.

use crate::arith::isqrt;
use crate::error::{Result, SumsetError};
use crate::group::GroupCtx;
use crate::set::Rational;
use crate::GSet;

/// Largest set size the lattice generator will build.
pub const MAX_POINTS: usize = 1 << 20;

/// The one-dimensional base `{1, ..., ⌊δm⌋} ∪ {k√m : 0 <= k < √m} ∪ {m - k : 0 <= k < √m}`.
pub fn interval_union_base(m: u64, delta: Rational, eps: Option<Rational>) -> Result<Vec<i64>> {
    let r = isqrt(m);
    if m <= 1 || r * r != m {
        return Err(SumsetError::BadParams(format!("m = {m} must be a perfect square > 1")));
    }
    let (dn, dd) = (*delta.numer() as u128, *delta.denom() as u128);
    if dn == 0 || dn * r as u128 >= (r as u128 - 1) * dd {
        return Err(SumsetError::BadParams(format!("δ = {delta} must lie in (0, 1 - 1/√m)")));
    }
    if let Some(eps) = eps {
        let (en, ed) = (*eps.numer() as u128, *eps.denom() as u128);
        if en == 0 || en >= ed {
            return Err(SumsetError::BadParams(format!("ε = {eps} must lie in (0, 1)")));
        }
        // δ > 2 / (ε √m)
        if dn * en * (r as u128) <= 2 * dd * ed {
            return Err(SumsetError::BadParams(format!("δ = {delta} must exceed 2/(ε√m)")));
        }
    }
    let top = (delta * Rational::from_integer(m)).floor().to_integer() as i64;
    let (m, r) = (m as i64, r as i64);
    let mut v: Vec<i64> = (1..=top).collect();
    v.extend((0..r).map(|k| k * r));
    v.extend((0..r).map(|k| m - k));
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// `([δm] ∪ B)^d ⊂ Z^d`.
pub fn interval_union_lattice(d: usize, m: u64, delta: Rational, eps: Option<Rational>) -> Result<GSet> {
    let base = interval_union_base(m, delta, eps)?;
    let ctx = GroupCtx::lattice(d)?;
    let total = (base.len() as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if d == 0 || total > MAX_POINTS as u128 {
        return Err(SumsetError::BadParams(format!("|A| = {}^{d} is out of range", base.len())));
    }
    let mut pts = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; d];
    loop {
        pts.push(ctx.element(&idx.iter().map(|&i| base[i]).collect::<Vec<_>>())?);
        let mut k = d;
        loop {
            if k == 0 {
                return GSet::new(&ctx, pts);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < base.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Decomposition bound for `|A + A_(s)|` on the interval-union set: sums whose
/// coordinates never pair two elements of `B` stay in the box `[0, ⌊(1+δ)m⌋]^d`,
/// and each element of `A_(s)` contributes at most `d |B| |S|^{d-1}` others.
pub fn interval_union_sub_bound(d: usize, m: u64, delta: Rational, s: usize) -> Result<u128> {
    let base = interval_union_base(m, delta, None)?;
    let r = isqrt(m) as u128;
    let side = ((Rational::from_integer(1) + delta) * Rational::from_integer(m)).floor().to_integer() as u128 + 1;
    let spikes = 2 * r;
    Ok(side.pow(d as u32) + s as u128 * d as u128 * spikes * (base.len() as u128).pow(d as u32 - 1))
}

/// `A = [n] ∪ {n/ε, 2n/ε, ..., kn/ε}` and `B = [n]` with `[n] = {1, ..., n}`;
/// spikes sit at `⌈in/ε⌉` when `n/ε` is not an integer.
pub fn spike_pair(n: u64, k: u64, eps: Rational) -> Result<(GSet, GSet)> {
    if n == 0 || k == 0 {
        return Err(SumsetError::BadParams("n and k must be positive".into()));
    }
    if *eps.numer() == 0 || eps >= Rational::from_integer(1) {
        return Err(SumsetError::BadParams(format!("ε = {eps} must lie in (0, 1)")));
    }
    let step = Rational::from_integer(n) / eps;
    let mut a: Vec<i64> = (1..=n as i64).collect();
    for i in 1..=k {
        a.push((step * Rational::from_integer(i)).ceil().to_integer() as i64);
    }
    Ok((GSet::ints(&a), GSet::interval(1, n as i64 + 1)))
}

/// `A = {0, ..., n0-1} ∪ {2n0, 3n0, ..., kn0}` with `n0 = n - k + 1`, so `|A| = n`.
pub fn ap_plus_spikes(n: u64, k: u64) -> Result<GSet> {
    if k == 0 || k * k > n {
        return Err(SumsetError::BadParams(format!("need 1 <= k <= √n, got n = {n}, k = {k}")));
    }
    let n0 = (n - k + 1) as i64;
    let mut v: Vec<i64> = (0..n0).collect();
    v.extend((2..=k as i64).map(|j| j * n0));
    Ok(GSet::ints(&v))
}

/// `(k+1)(n-k+1) + k - 1`.
pub fn ap_plus_spikes_closed_form(n: u64, k: u64) -> u64 {
    (k + 1) * (n - k + 1) + k - 1
}

/// Exact `|A + A|` for `ap_plus_spikes(n, k)`: the closed form for `k >= 3`;
/// `3n0` for `k = 2` and `2n - 1` for `k = 1`.
pub fn ap_plus_spikes_doubling(n: u64, k: u64) -> u64 {
    let n0 = n - k + 1;
    match k {
        1 => 2 * n - 1,
        2 => 3 * n0,
        _ => ap_plus_spikes_closed_form(n, k),
    }
}
