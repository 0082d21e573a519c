//! Hamming-cube neighbourhoods, Harper's vertex isoperimetry, and the layer
//! structure of niveau sets.

use serde_json::json;

use crate::arith::ball_size;
use crate::bitmask::BitMask;
use crate::constructions::niveau::NiveauMeta;
use crate::error::{Result, SumsetError};
use crate::group::GroupCtx;
use crate::set::sumset;
use crate::GSet;

use super::Verdict;

fn cube_dim(a: &GSet) -> Result<usize> {
    match a.ctx() {
        GroupCtx::Vector { p: 2, n } if *n <= 24 => Ok(*n),
        _ => Err(SumsetError::Unsupported("Hamming neighbourhoods need F_2^m with m <= 24".into())),
    }
}

/// `Γ₊^k(A)`: points within Hamming distance `k` of `A`, i.e. `A + {|x|₁ <= k}`.
pub fn hamming_neighborhood(a: &GSet, k: usize) -> Result<GSet> {
    let m = cube_dim(a)?;
    let mut cur = a.mask().expect("dense").clone();
    let shifts: Vec<u64> = std::iter::once(0).chain((0..m).map(|i| 1u64 << i)).collect();
    for _ in 0..k.min(m) {
        let mut next = BitMask::new(cur.len());
        next.or_xor_translates(&cur, &shifts);
        if next == cur {
            break;
        }
        cur = next;
    }
    GSet::from_mask(a.ctx(), cur)
}

/// Largest `q` with `|A| >= Σ_{j<=q} C(m, j)`, then `|Γ₊(A)| >= Σ_{j<=q+1} C(m, j)`.
pub fn harper_check(a: &GSet) -> Result<Verdict> {
    let m = cube_dim(a)? as u64;
    if a.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let size = a.len() as u64;
    let q = (0..=m as i64).take_while(|&q| ball_size(m, q) <= size).last().unwrap_or(0);
    let grown = hamming_neighborhood(a, 1)?.len() as u64;
    let need = ball_size(m, q + 1);
    Ok(Verdict {
        check: "harper".into(),
        params: json!({ "m": m, "size": size, "q": q }),
        seed: None,
        pass: Some(grown >= need),
        slack: Some(grown as f64 - need as f64),
        witness: json!({ "neighbourhood": grown, "ball": need }),
    })
}

/// `A + A ⊆ (head ≠ 0 ⇒ tail weight <= m/2)`: every sum whose head coordinates
/// are not all zero has tail weight at most `m/2`. Returns the worst sum found.
pub fn niveau_containment_check(a: &GSet, meta: &NiveauMeta) -> Result<Verdict> {
    let sums = sumset(a, a)?;
    let mut worst = 0usize;
    let mut offenders = 0usize;
    for x in sums.iter() {
        if x.coords()[..meta.head].iter().all(|&c| c == 0) {
            continue;
        }
        let w = meta.tail_weight(&x);
        worst = worst.max(w);
        if 2 * w > meta.m {
            offenders += 1;
        }
    }
    Ok(Verdict {
        check: "niveau-containment".into(),
        params: json!({ "variant": meta.variant, "m": meta.m, "size": a.len() }),
        seed: None,
        pass: Some(offenders == 0),
        slack: Some(meta.m as f64 / 2.0 - worst as f64),
        witness: json!({ "sumset": sums.len(), "max_off_head_weight": worst, "offenders": offenders }),
    })
}
