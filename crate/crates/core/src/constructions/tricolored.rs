//! Tricolored sum-free collections in `F_p^n` and the non-saturating set built from them.

use rand::seq::SliceRandom;

use crate::bitmask::BitMask;
use crate::error::{Result, SumsetError};
use crate::group::{Element, GroupCtx};
use crate::rng::instance_rng;
use crate::GSet;

/// Largest `p^n` searched by the brute-force generator.
pub const MAX_SPACE: u64 = 729;

pub type Triple = (Element, Element, Element);

/// `x_i + y_j + z_k = 0` exactly when `i = j = k`, checked over all `m^3` index triples.
pub fn tricolored_valid(ctx: &GroupCtx, triples: &[Triple]) -> Result<bool> {
    for (i, (x, _, _)) in triples.iter().enumerate() {
        for (j, (_, y, _)) in triples.iter().enumerate() {
            let xy = ctx.add(x, y)?;
            for (k, (_, _, z)) in triples.iter().enumerate() {
                let zero = ctx.add(&xy, z)? == ctx.zero();
                if zero != (i == j && j == k) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

struct Greedy {
    used: [BitMask; 3],
    // forbidden[c]: values of colour c that would close a zero-sum with the other two colours
    forbidden: [BitMask; 3],
    picks: Vec<[u64; 3]>,
}

impl Greedy {
    fn new(size: u64) -> Self {
        let blank = || BitMask::new(size as usize);
        Greedy { used: [blank(), blank(), blank()], forbidden: [blank(), blank(), blank()], picks: Vec::new() }
    }

    fn admissible(&self, t: [u64; 3]) -> bool {
        (0..3).all(|c| !self.used[c].get(t[c] as usize) && !self.forbidden[c].get(t[c] as usize))
    }

    fn push(&mut self, t: [u64; 3], add: &crate::group::IndexAdder) {
        for prev in &self.picks {
            for c in 0..3 {
                let (a, b) = ((c + 1) % 3, (c + 2) % 3);
                self.forbidden[c].set(add.neg(add.add(t[a], prev[b])) as usize);
                self.forbidden[c].set(add.neg(add.add(prev[a], t[b])) as usize);
            }
        }
        for (used, &x) in self.used.iter_mut().zip(&t) {
            used.set(x as usize);
        }
        self.picks.push(t);
    }
}

/// Randomised greedy search for a large tricolored sum-free collection in
/// `F_p^n`: each of `budget` restarts scans all triples `(x, y, -x-y)` in a
/// seeded random order and keeps those compatible with the collection so far.
/// Returns the largest collection found.
pub fn brute_tricolored(p: u64, n: usize, budget: u64, seed: u64) -> Result<Vec<Triple>> {
    let ctx = GroupCtx::vector(p, n)?;
    let size = ctx.order().expect("finite");
    if size > MAX_SPACE {
        return Err(SumsetError::BadParams(format!("p^n = {size} exceeds {MAX_SPACE}")));
    }
    let add = ctx.index_adder().expect("finite");
    let mut cand: Vec<[u64; 3]> = Vec::with_capacity((size * size) as usize);
    for x in 0..size {
        for y in 0..size {
            cand.push([x, y, add.neg(add.add(x, y))]);
        }
    }
    let mut best: Vec<[u64; 3]> = Vec::new();
    for restart in 0..budget.max(1) {
        let mut rng = instance_rng(seed, restart);
        if restart > 0 {
            cand.shuffle(&mut rng);
        }
        let mut g = Greedy::new(size);
        for &t in &cand {
            if g.admissible(t) {
                g.push(t, &add);
            }
        }
        if g.picks.len() > best.len() {
            best = g.picks;
        }
    }
    best.iter()
        .map(|t| Ok((ctx.from_index(t[0])?, ctx.from_index(t[1])?, ctx.from_index(t[2])?)))
        .collect()
}

fn prefixed(ctx: &GroupCtx, head: [i64; 2], tail: &Element) -> Result<Element> {
    let mut c = head.to_vec();
    c.extend_from_slice(tail.coords());
    ctx.element(&c)
}

/// `A = ({(0,0)} × X) ∪ ({(0,1)} × Y) ∪ ({(1,0)} × F_p^{n-2}) ⊂ F_p^n` for a
/// tricolored sum-free collection `(x_i, y_i, z_i)` in `F_p^{n-2}`.
pub fn fpn_nonsaturating(p: u64, n: usize, triples: &[Triple]) -> Result<GSet> {
    if n < 3 {
        return Err(SumsetError::BadParams(format!("need n >= 3, got {n}")));
    }
    let ctx = GroupCtx::vector(p, n)?;
    let inner = GroupCtx::vector(p, n - 2)?;
    for (x, y, z) in triples {
        for e in [x, y, z] {
            inner.validate(e).map_err(|e| SumsetError::BadParams(e.to_string()))?;
        }
    }
    if !tricolored_valid(&inner, triples)? {
        return Err(SumsetError::BadParams("triples are not tricolored sum-free".into()));
    }
    let mut pts = Vec::new();
    for (x, y, _) in triples {
        pts.push(prefixed(&ctx, [0, 0], x)?);
        pts.push(prefixed(&ctx, [0, 1], y)?);
    }
    for i in 0..inner.order().expect("finite") {
        pts.push(prefixed(&ctx, [1, 0], &inner.from_index(i)?)?);
    }
    GSet::new(&ctx, pts)
}

/// Targets `(0, 1, -z_i)` with their intended representations
/// `(0, 0, x_i) + (0, 1, y_i)`.
pub fn fpn_targets(p: u64, n: usize, triples: &[Triple]) -> Result<Vec<Triple>> {
    let ctx = GroupCtx::vector(p, n)?;
    let inner = GroupCtx::vector(p, n - 2)?;
    triples
        .iter()
        .map(|(x, y, z)| {
            Ok((
                prefixed(&ctx, [0, 1], &inner.neg(z)?)?,
                prefixed(&ctx, [0, 0], x)?,
                prefixed(&ctx, [0, 1], y)?,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::sumset;

    fn el(c: &[i64]) -> Element {
        Element::new(c)
    }

    #[test]
    fn known_collection() {
        let ctx = GroupCtx::vector(2, 2).unwrap();
        let good = vec![(el(&[0, 0]), el(&[0, 0]), el(&[0, 0])), (el(&[0, 1]), el(&[1, 1]), el(&[1, 0]))];
        assert!(tricolored_valid(&ctx, &good).unwrap());
        let bad = vec![(el(&[0, 0]), el(&[0, 0]), el(&[0, 0])), (el(&[0, 1]), el(&[0, 1]), el(&[0, 0]))];
        assert!(!tricolored_valid(&ctx, &bad).unwrap());
    }

    #[test]
    fn search_finds_valid_collections() {
        for (p, n) in [(2, 2), (3, 1), (3, 2), (2, 3)] {
            let t = brute_tricolored(p, n, 8, 5).unwrap();
            assert!(t.len() >= 2, "p={p} n={n}");
            assert!(tricolored_valid(&GroupCtx::vector(p, n).unwrap(), &t).unwrap());
        }
        assert_eq!(brute_tricolored(2, 2, 8, 5).unwrap().len(), 2);
        assert!(brute_tricolored(3, 7, 1, 0).is_err());
    }

    #[test]
    fn fpn_set() {
        let t = vec![(el(&[0, 0]), el(&[0, 0]), el(&[0, 0])), (el(&[0, 1]), el(&[1, 1]), el(&[1, 0]))];
        let a = fpn_nonsaturating(2, 4, &t).unwrap();
        assert_eq!(a.len(), 8);
        assert!(sumset(&a, &a).unwrap().len() <= 6 * a.len());
        let empty = fpn_nonsaturating(2, 4, &[]).unwrap();
        assert_eq!(empty.len(), 4);
        assert_eq!(sumset(&empty, &empty).unwrap().len(), 4);
        assert!(fpn_nonsaturating(2, 2, &[]).is_err());
    }
}
