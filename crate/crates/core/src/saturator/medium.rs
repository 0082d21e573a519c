use crate::arith::{ceil_scaled_sqrt, is_prime};
use crate::bitmask::BitMask;
use crate::error::{Result, SumsetError};
use crate::group::GroupCtx;
use crate::rng::{instance_rng, random_subset};
use crate::set::{sumset, Rational};
use crate::GSet;

use rand::Rng;

use super::{SaturationOutcome, Side, TraceStep};

/// Number of randomized baseline searches tried after the deterministic one.
pub const BASELINE_RESTARTS: u64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MediumParams {
    /// Augmentation threshold as a fraction of `n`.
    pub c2: Rational,
    /// Size of the random augmentation, as a multiple of `sqrt(n)`.
    pub c: Rational,
    pub trials: u64,
    pub seed: u64,
}

impl Default for MediumParams {
    fn default() -> Self {
        MediumParams { c2: Rational::new(1, 4), c: Rational::from_integer(1), trials: 64, seed: 0 }
    }
}

/// Sums of `Z_p` index lists, tracked as a dense mask.
struct Pair<'a> {
    p: u64,
    a: &'a [u64],
    b: &'a [u64],
    a_sel: Vec<usize>,
    b_sel: Vec<usize>,
    sums: BitMask,
    size: usize,
}

impl<'a> Pair<'a> {
    fn new(p: u64, a: &'a [u64], b: &'a [u64]) -> Self {
        Pair { p, a, b, a_sel: Vec::new(), b_sel: Vec::new(), sums: BitMask::new(p as usize), size: 0 }
    }

    fn add(&self, x: u64, y: u64) -> usize {
        ((x + y) % self.p) as usize
    }

    fn gain_a(&self, i: usize) -> usize {
        self.b_sel.iter().filter(|&&j| !self.sums.get(self.add(self.a[i], self.b[j]))).count()
    }

    fn gain_b(&self, j: usize) -> usize {
        self.a_sel.iter().filter(|&&i| !self.sums.get(self.add(self.a[i], self.b[j]))).count()
    }

    fn push_a(&mut self, i: usize) {
        self.a_sel.push(i);
        for k in 0..self.b_sel.len() {
            let s = self.add(self.a[i], self.b[self.b_sel[k]]);
            if !self.sums.get(s) {
                self.sums.set(s);
                self.size += 1;
            }
        }
    }

    fn push_b(&mut self, j: usize) {
        self.b_sel.push(j);
        for k in 0..self.a_sel.len() {
            let s = self.add(self.a[self.a_sel[k]], self.b[j]);
            if !self.sums.get(s) {
                self.sums.set(s);
                self.size += 1;
            }
        }
    }

    /// Grows both sides greedily (A first, then B) until `|A' + B'| >= target`
    /// or both sides reach `cap`.
    fn grow(&mut self, target: usize, cap: usize) -> bool {
        while self.size < target {
            let mut moved = false;
            if self.a_sel.len() < cap {
                if let Some(i) = argmax((0..self.a.len()).filter(|i| !self.a_sel.contains(i)), |i| self.gain_a(i)) {
                    self.push_a(i);
                    moved = true;
                }
            }
            if self.size >= target {
                break;
            }
            if self.b_sel.len() < cap {
                if let Some(j) = argmax((0..self.b.len()).filter(|j| !self.b_sel.contains(j)), |j| self.gain_b(j)) {
                    self.push_b(j);
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        self.size >= target
    }
}

/// First index of maximal score.
fn argmax(items: impl Iterator<Item = usize>, score: impl Fn(usize) -> usize) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for i in items {
        let s = score(i);
        if best.is_none_or(|(_, b)| s > b) {
            best = Some((i, s));
        }
    }
    best.map(|(i, _)| i)
}

/// Searches for `A' ⊆ A`, `B' ⊆ B` with `|A'|, |B'| <= ceil(3 sqrt(n))` and
/// `|A' + B'| >= 2n - 1`. The first attempt starts from the extreme elements of
/// both sets, later ones from seeded random pairs.
fn find_baseline(p: u64, a: &[u64], b: &[u64], seed: u64) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = a.len();
    let target = 2 * n - 1;
    let cap = (ceil_scaled_sqrt(3, 1, n as u64) as usize).min(n);
    for attempt in 0..=BASELINE_RESTARTS {
        let mut pair = Pair::new(p, a, b);
        if attempt == 0 {
            pair.push_a(0);
            pair.push_b(0);
            if n > 1 {
                pair.push_a(n - 1);
                pair.push_b(n - 1);
            }
        } else {
            let mut rng = instance_rng(seed, attempt);
            pair.push_a(rng.gen_range(0..n));
            pair.push_b(rng.gen_range(0..n));
        }
        if pair.grow(target, cap) {
            return Some((pair.a_sel, pair.b_sel));
        }
    }
    None
}

fn prime_modulus(ctx: &GroupCtx) -> Result<u64> {
    match ctx {
        GroupCtx::Cyclic { n } if is_prime(*n) => Ok(*n),
        _ => Err(SumsetError::Unsupported("medium saturation needs Z_p with p prime".into())),
    }
}

/// Medium-sized saturation in `Z_p`: a baseline pair reaching `2n - 1`, then
/// translates `a + B`, `b + A` that each add at least `c2 n` new sums (at most
/// `sqrt(n)` rounds), then the best of `trials` random augmentations of size
/// `ceil(c sqrt(n))` on each side.
pub fn medium_saturate(a: &GSet, b: &GSet, params: &MediumParams) -> Result<SaturationOutcome> {
    if a.ctx() != b.ctx() {
        return Err(SumsetError::ContextMismatch("saturation inputs live in different groups".into()));
    }
    let p = prime_modulus(a.ctx())?;
    if a.is_empty() || b.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let n = a.len();
    if b.len() != n {
        return Err(SumsetError::SizeMismatch { a: n, b: b.len() });
    }
    if 2 * n as u64 > p {
        return Err(SumsetError::BadParams(format!("need 2n <= p, got n = {n}, p = {p}")));
    }
    let (ai, bi) = (a.indices().expect("finite"), b.indices().expect("finite"));
    let (a_base, b_base) = find_baseline(p, ai, bi, params.seed).ok_or(SumsetError::NoBaseline)?;
    let base_a = a.select(a_base.iter().copied());
    let base_b = b.select(b_base.iter().copied());
    let s0 = sumset(&base_a, &base_b)?;
    let baseline = s0.len();

    let ps = p as usize;
    let mut cover = s0.mask().expect("dense").clone();
    let a_mask = a.mask().expect("dense");
    let b_mask = b.mask().expect("dense");
    let (c2n, c2d) = (*params.c2.numer() as u128, *params.c2.denom() as u128);
    let mut a_star = Vec::new();
    let mut b_star = Vec::new();
    let mut trace = Vec::new();
    let mut translate = BitMask::new(ps);
    let mut rounds = 0usize;
    while rounds * rounds < n {
        // best translate a + B or b + A by fresh coverage; B-side first on ties
        let mut best: Option<(Side, usize, usize)> = None;
        for (side, base, shifts) in [(Side::B, a_mask, bi), (Side::A, b_mask, ai)] {
            for (k, &x) in shifts.iter().enumerate() {
                translate.clear();
                translate.or_rotated(base, x as usize);
                let gain = translate.count_minus(&cover);
                if best.is_none_or(|(_, _, g)| gain > g) {
                    best = Some((side, k, gain));
                }
            }
        }
        let Some((side, k, gain)) = best else { break };
        if (gain as u128) * c2d < c2n * n as u128 {
            break;
        }
        let (base, x) = match side {
            Side::B => (a_mask, bi[k]),
            Side::A => (b_mask, ai[k]),
        };
        cover.or_rotated(base, x as usize);
        let elem = match side {
            Side::B => {
                b_star.push(k);
                b.get(k)
            }
            Side::A => {
                a_star.push(k);
                a.get(k)
            }
        };
        trace.push(TraceStep { element: elem, side, gain });
        rounds += 1;
    }

    let core_a = base_a.union(&a.select(a_star.iter().copied()))?;
    let core_b = base_b.union(&b.select(b_star.iter().copied()))?;
    let extra = (ceil_scaled_sqrt(*params.c.numer(), *params.c.denom(), n as u64) as usize).min(n);
    let mut best: Option<(GSet, GSet, usize)> = None;
    for trial in 0..params.trials.max(1) {
        let (sa, sb) = if params.trials == 0 {
            (core_a.clone(), core_b.clone())
        } else {
            let mut rng = instance_rng(params.seed, (1 << 32) + trial);
            let ta = random_subset(&mut rng, a, extra);
            let tb = random_subset(&mut rng, b, extra);
            (core_a.union(&ta)?, core_b.union(&tb)?)
        };
        let size = sumset(&sa, &sb)?.len();
        if best.as_ref().is_none_or(|(_, _, s)| size > *s) {
            best = Some((sa, sb, size));
        }
    }
    let (a_sub, b_sub, joint) = best.expect("at least one trial");
    let ab = sumset(a, b)?.len();
    Ok(SaturationOutcome {
        algorithm: "medium".into(),
        n,
        achieved_a: sumset(a, &b_sub)?.len(),
        achieved_b: sumset(b, &a_sub)?.len(),
        a_sub,
        b_sub,
        achieved_joint: Some(joint),
        baseline: Some(baseline),
        trace,
        kappa: Rational::new(ab as u64, n as u64),
        s_budget: a_base.len().max(b_base.len()) + rounds + if params.trials == 0 { 0 } else { extra },
    })
}
