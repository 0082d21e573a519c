use serde_json::json;

use crate::arith::is_prime;
use crate::error::{Result, SumsetError};
use crate::group::GroupCtx;
use crate::set::{difference_set, Rational};
use crate::GSet;

use super::Verdict;

/// Length of the shortest cyclic interval `{x, x+1, ..., x+L-1}` of `Z_N`
/// containing `B`, with its start. `None` for the empty set.
pub fn min_cyclic_interval(b: &GSet) -> Result<Option<(u64, u64)>> {
    let GroupCtx::Cyclic { n } = b.ctx() else {
        return Err(SumsetError::Unsupported("cyclic intervals need Z_N".into()));
    };
    let idx = b.indices().expect("finite");
    if idx.is_empty() {
        return Ok(None);
    }
    // the complement of the largest gap between cyclically consecutive elements
    let mut best_gap = 0;
    let mut start = idx[0];
    for (i, &x) in idx.iter().enumerate() {
        let next = idx[(i + 1) % idx.len()];
        let gap = (next + n - x) % n;
        let gap = if gap == 0 { *n } else { gap };
        if gap > best_gap {
            best_gap = gap;
            start = next;
        }
    }
    Ok(Some((n - best_gap + 1, start)))
}

/// If `|B - B| < (2+c)|B| < 4cp`, asserts `B` lies in a cyclic interval of
/// length at most `(1+c)|B|`; passes vacuously when the hypothesis fails.
pub fn interval_cover_check(b: &GSet, c: Rational) -> Result<Verdict> {
    let p = match b.ctx() {
        GroupCtx::Cyclic { n } if is_prime(*n) => *n as u128,
        _ => return Err(SumsetError::Unsupported("interval covers need Z_p".into())),
    };
    if b.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let (cn, cd) = (*c.numer() as u128, *c.denom() as u128);
    let m = b.len() as u128;
    let diff = difference_set(b, b)?.len() as u128;
    let hypothesis = diff * cd < (2 * cd + cn) * m && (2 * cd + cn) * m < 4 * cn * p;
    let (len, start) = min_cyclic_interval(b)?.expect("nonempty");
    let fits = len as u128 * cd <= (cd + cn) * m;
    Ok(Verdict {
        check: "interval-cover".into(),
        params: json!({ "p": p as u64, "size": b.len(), "c": c.to_string() }),
        seed: None,
        pass: Some(!hypothesis || fits),
        slack: Some((1.0 + cn as f64 / cd as f64) * m as f64 - len as f64),
        witness: json!({ "hypothesis": hypothesis, "difference_set": diff as u64, "interval_start": start, "interval_length": len }),
    })
}
