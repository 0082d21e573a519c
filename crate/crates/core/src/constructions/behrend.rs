//! Progression-free sphere slices and the Behrend-type set in `Z`.

use crate::error::{Result, SumsetError};
use crate::group::GroupCtx;
use crate::GSet;

/// Largest `(2r)^n` accepted by the integer construction.
pub const MAX_T: u64 = 1_000_000;

fn points(r: u64, n: usize) -> Result<Vec<Vec<i64>>> {
    let total = r.checked_pow(n as u32).filter(|&t| t <= MAX_T).ok_or_else(|| {
        SumsetError::BadParams(format!("r^n = {r}^{n} is too large to enumerate"))
    })?;
    let mut out = Vec::with_capacity(total as usize);
    let mut x = vec![1i64; n];
    loop {
        out.push(x.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            x[k] += 1;
            if x[k] <= r as i64 {
                break;
            }
            x[k] = 1;
        }
    }
}

/// `X_{r,n}(t★) = {x ∈ [1, r]^n : |x|² = t★}` for the smallest `t★` maximising the slice.
pub fn behrend_sphere(r: u64, n: usize) -> Result<(u64, GSet)> {
    if r == 0 || n == 0 {
        return Err(SumsetError::BadParams("r and n must be positive".into()));
    }
    let pts = points(r, n)?;
    let norm = |x: &Vec<i64>| x.iter().map(|c| (c * c) as u64).sum::<u64>();
    let top = n as u64 * r * r;
    let mut count = vec![0usize; top as usize + 1];
    for x in &pts {
        count[norm(x) as usize] += 1;
    }
    let best = *count.iter().max().expect("nonempty");
    let t = count.iter().position(|&c| c == best).expect("maximum exists") as u64;
    let ctx = GroupCtx::lattice(n)?;
    let slice = GSet::from_coords(&ctx, pts.iter().filter(|x| norm(x) == t).map(|x| x.as_slice()))?;
    Ok((t, slice))
}

/// Base-`2r` digit map `φ(x) = Σ x_i (2r)^{i-1}`, `x_1` least significant.
pub fn digit_map(x: &[i64], r: u64) -> i64 {
    x.iter().rev().fold(0i64, |acc, &d| acc * 2 * r as i64 + d)
}

/// `A = A_0 ∪ A_1` with `A_0 = φ(X_{r,n}(t★))` and `A_1 = [-2T, -T-1]`, `T = (2r)^n`.
/// Returns `(A, A_0)`.
pub fn behrend_z_set(r: u64, n: usize) -> Result<(GSet, GSet)> {
    if r < 2 || n == 0 {
        return Err(SumsetError::BadParams("need r >= 2 and n >= 1".into()));
    }
    let t_big = (2 * r)
        .checked_pow(n as u32)
        .filter(|&t| t <= MAX_T)
        .ok_or_else(|| SumsetError::BadParams(format!("T = (2r)^n exceeds {MAX_T}")))? as i64;
    let (_, x) = behrend_sphere(r, n)?;
    let a0: Vec<i64> = x.iter().map(|p| digit_map(p.coords(), r)).collect();
    let a0 = GSet::ints(&a0);
    let a1 = GSet::interval(-2 * t_big, -t_big);
    Ok((a0.union(&a1)?, a0))
}
