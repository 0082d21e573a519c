//! A full-dimensional core joined to a long progression.

use serde::Serialize;

use crate::error::{Result, SumsetError};
use crate::group::GroupCtx;
use crate::saturator::select_full_dim_subset;
use crate::GSet;

/// Largest lattice cube searched for the core.
pub const MAX_CUBE: u64 = 500;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NegBlt {
    pub set: GSet,
    pub core: GSet,
    pub progression: GSet,
    pub cube_side: u64,
}

fn cube(d: usize, side: u64) -> Result<GSet> {
    let ctx = GroupCtx::lattice(d)?;
    let total = side.pow(d as u32);
    let pts = (0..total).map(|mut i| {
        let mut c = vec![0i64; d];
        for k in (0..d).rev() {
            c[k] = (i % side) as i64;
            i /= side;
        }
        ctx.element(&c)
    });
    GSet::new(&ctx, pts.collect::<Result<Vec<_>>>()?)
}

/// `A = A_C ∪ P ⊂ Z^d`: `A_C` a subset of a lattice cube not covered by `t`
/// parallel hyperplanes, `P` a progression of length `n - |A_C|` along the
/// first axis starting just past the cube. For `t = 0` the core is empty.
pub fn neg_blt_set(d: usize, t: usize, n: usize) -> Result<NegBlt> {
    if d == 0 || d > 3 {
        return Err(SumsetError::DimensionTooLarge(d));
    }
    let ctx = GroupCtx::lattice(d)?;
    let (core, side) = if t == 0 {
        (GSet::empty(&ctx), 1)
    } else {
        let need = (t as u64).checked_pow(1 << (d - 1)).map(|v| v + 1).unwrap_or(u64::MAX);
        let side = (t as u64 + 1..)
            .take_while(|l| l.pow(d as u32) <= MAX_CUBE)
            .find(|l| l.pow(d as u32) >= need)
            .ok_or_else(|| SumsetError::Infeasible(format!("no cube of at most {MAX_CUBE} points fits t = {t}")))?;
        (select_full_dim_subset(&cube(d, side)?, t, d - 1, d)?, side)
    };
    if n <= core.len() {
        return Err(SumsetError::BadParams(format!("n = {n} must exceed |A_C| = {}", core.len())));
    }
    let start = if t == 0 { 0 } else { side as i64 };
    let progression = GSet::new(
        &ctx,
        (0..(n - core.len()) as i64)
            .map(|j| {
                let mut c = vec![0i64; d];
                c[0] = start + j;
                ctx.element(&c)
            })
            .collect::<Result<Vec<_>>>()?,
    )?;
    let set = core.union(&progression)?;
    Ok(NegBlt { set, core, progression, cube_side: side })
}

/// `2|P| + |A_C| s`, the decomposition bound on `|A' + A'|` for `|A'| = s`.
pub fn neg_blt_bound(c: &NegBlt, s: usize) -> usize {
    2 * c.progression.len() + c.core.len() * s
}
