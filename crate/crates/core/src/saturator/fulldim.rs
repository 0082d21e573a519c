use crate::error::{Result, SumsetError};
use crate::group::GroupCtx;
use crate::verifier::hyperplane::{hyperplane_cover_check, translate_classes};
use crate::GSet;

fn describe(basis: &[Vec<i64>], count: usize) -> String {
    format!("covered by {count} translates of span {basis:?}")
}

fn select(a: &GSet, t: usize, k: usize) -> Result<GSet> {
    if k == 0 {
        if a.len() <= t {
            return Err(SumsetError::Infeasible(format!("only {} points, need {}", a.len(), t + 1)));
        }
        return Ok(a.select(0..=t));
    }
    let mut x = match select(a, t.saturating_mul(t), k - 1) {
        Ok(x) => x,
        Err(SumsetError::Infeasible(_)) => {
            let v = hyperplane_cover_check(a, t, k)?;
            return match v.witness {
                Some(w) => Err(SumsetError::Infeasible(describe(&w.basis, w.offsets.len()))),
                None => Ok(a.clone()),
            };
        }
        Err(e) => return Err(e),
    };
    loop {
        let v = hyperplane_cover_check(&x, t, k)?;
        let Some(w) = v.witness else { return Ok(x) };
        let classes = translate_classes(a, &w.basis);
        if classes.len() <= t {
            return Err(SumsetError::Infeasible(describe(&w.basis, classes.len())));
        }
        let spread = a.select(classes.iter().take(t + 1).map(|c| c[0]));
        let grown = x.union(&spread)?;
        if grown.len() == x.len() {
            return Err(SumsetError::Infeasible(describe(&w.basis, classes.len())));
        }
        x = grown;
    }
}

/// A bounded-size subset of `A ⊆ Z^d` not covered by `t` parallel translates of
/// any `k`-dimensional subspace, built by induction on `k`: a subset that is
/// full-dimensional at level `k - 1` with parameter `t^2`, augmented with `t + 1`
/// points in distinct translates of the (at most one) covering subspace.
pub fn select_full_dim_subset(a: &GSet, t: usize, k: usize, d: usize) -> Result<GSet> {
    match a.ctx() {
        GroupCtx::Lattice { d: ad } if *ad == d => {}
        other => return Err(SumsetError::ContextMismatch(format!("expected Z^{d}, got {other:?}"))),
    }
    if d > 3 {
        return Err(SumsetError::DimensionTooLarge(d));
    }
    if k >= d {
        return Err(SumsetError::BadParams(format!("subspace dimension {k} must be below d = {d}")));
    }
    if a.len() > 500 {
        return Err(SumsetError::BadParams(format!("|A| = {} exceeds 500", a.len())));
    }
    select(a, t, k)
}
