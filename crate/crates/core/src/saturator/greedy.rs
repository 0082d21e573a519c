use crate::bitmask::BitMask;
use crate::error::{Result, SumsetError};
use crate::set::{difference_set, Rational};
use crate::table::SumTable;
use crate::GSet;

use super::{SaturationOutcome, Side, TraceStep};

/// Largest admissible greedy constant.
pub const MAX_C: Rational = Rational::new_raw(1, 14);

fn check_c(c: Rational) -> Result<()> {
    if c > MAX_C || *c.numer() == 0 {
        return Err(SumsetError::BadConstant(c.to_string()));
    }
    Ok(())
}

/// One side of a greedy run: grows `X + Y_(i)` by picking elements of `Y`.
/// `pick(j)` lists the sum ids of the translate contributed by candidate `j`.
struct GreedySide {
    cover: BitMask,
    chosen: Vec<usize>,
    taken: Vec<bool>,
}

impl GreedySide {
    fn new(sums: usize, candidates: usize) -> Self {
        GreedySide { cover: BitMask::new(sums), chosen: Vec::new(), taken: vec![false; candidates] }
    }

    /// Best candidate by gain, smallest position on ties; `None` if nothing grows the cover.
    fn best(&self, candidates: usize, ids: impl Fn(usize, &mut dyn FnMut(usize))) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for j in (0..candidates).filter(|&j| !self.taken[j]) {
            let mut gain = 0;
            ids(j, &mut |id| {
                if !self.cover.get(id) {
                    gain += 1;
                }
            });
            if gain > 0 && best.is_none_or(|(_, g)| gain > g) {
                best = Some((j, gain));
            }
        }
        best
    }

    fn take(&mut self, j: usize, ids: impl Fn(usize, &mut dyn FnMut(usize))) {
        self.taken[j] = true;
        self.chosen.push(j);
        let cover = &mut self.cover;
        ids(j, &mut |id| cover.set(id));
    }
}

fn validate(a: &GSet, b: &GSet, s: usize, c: Rational) -> Result<()> {
    check_c(c)?;
    if a.ctx() != b.ctx() {
        return Err(SumsetError::ContextMismatch("saturation inputs live in different groups".into()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    if s == 0 {
        return Err(SumsetError::BadParams("s must be at least 1".into()));
    }
    Ok(())
}

/// Greedy selection of `A_(s) ⊆ A` and `B_(s) ⊆ B`. Each step adds to `B_(s)`
/// the element of largest marginal gain for `A + B_(s)`, then does the same for
/// `A_(s)` against `B + A_(s)`.
pub fn greedy_pair_saturate(a: &GSet, b: &GSet, s: usize, c: Rational) -> Result<SaturationOutcome> {
    validate(a, b, s, c)?;
    if a.len() != b.len() {
        return Err(SumsetError::SizeMismatch { a: a.len(), b: b.len() });
    }
    let t = SumTable::new(a, b)?;
    let (na, nb, ns) = (t.size_a(), t.size_b(), t.sums().len());
    let col = |j: usize, f: &mut dyn FnMut(usize)| (0..na).for_each(|i| f(t.id(i, j)));
    let row = |i: usize, f: &mut dyn FnMut(usize)| (0..nb).for_each(|j| f(t.id(i, j)));
    let mut side_b = GreedySide::new(ns, nb);
    let mut side_a = GreedySide::new(ns, na);
    let mut trace = Vec::new();
    for _ in 0..s {
        let pick_b = side_b.best(nb, col);
        if let Some((j, gain)) = pick_b {
            side_b.take(j, col);
            trace.push(TraceStep { element: b.get(j), side: Side::B, gain });
        }
        let pick_a = side_a.best(na, row);
        if let Some((i, gain)) = pick_a {
            side_a.take(i, row);
            trace.push(TraceStep { element: a.get(i), side: Side::A, gain });
        }
        if pick_a.is_none() && pick_b.is_none() {
            break;
        }
    }
    Ok(SaturationOutcome {
        algorithm: "greedy-pair".into(),
        n: na,
        a_sub: a.select(side_a.chosen.iter().copied()),
        b_sub: b.select(side_b.chosen.iter().copied()),
        achieved_a: side_b.cover.count(),
        achieved_b: side_a.cover.count(),
        achieved_joint: None,
        baseline: None,
        trace,
        kappa: Rational::new(ns as u64, na as u64),
        s_budget: s,
    })
}

/// Greedy `A_(s)` for `|A + A_(s)|`.
pub fn greedy_self_saturate(a: &GSet, s: usize, c: Rational) -> Result<SaturationOutcome> {
    validate(a, a, s, c)?;
    let t = SumTable::new(a, a)?;
    let (n, ns) = (a.len(), t.sums().len());
    let col = |j: usize, f: &mut dyn FnMut(usize)| (0..n).for_each(|i| f(t.id(i, j)));
    let mut side = GreedySide::new(ns, n);
    let mut trace = Vec::new();
    for _ in 0..s {
        let Some((j, gain)) = side.best(n, col) else { break };
        side.take(j, col);
        trace.push(TraceStep { element: a.get(j), side: Side::A, gain });
    }
    let sub = a.select(side.chosen.iter().copied());
    let achieved = side.cover.count();
    Ok(SaturationOutcome {
        algorithm: "greedy-self".into(),
        n,
        a_sub: sub.clone(),
        b_sub: sub,
        achieved_a: achieved,
        achieved_b: achieved,
        achieved_joint: None,
        baseline: None,
        trace,
        kappa: Rational::new(ns as u64, n as u64),
        s_budget: s,
    })
}

/// Greedy `A_(s)` for `|A - A_(s)|`; `kappa` is `|A - A| / |A|`.
pub fn greedy_diff_saturate(a: &GSet, s: usize, c: Rational) -> Result<SaturationOutcome> {
    validate(a, a, s, c)?;
    let neg = a.negate()?;
    let t = SumTable::new(a, &neg)?;
    let n = a.len();
    // candidate j (canonical order in A) contributes A - a_j, column pos[j] of the table
    let pos: Vec<usize> = a
        .iter()
        .map(|x| neg.position(&a.ctx().neg(&x).expect("negation of a valid element")).expect("present"))
        .collect();
    let col = |j: usize, f: &mut dyn FnMut(usize)| (0..n).for_each(|i| f(t.id(i, pos[j])));
    let mut side = GreedySide::new(t.sums().len(), n);
    let mut trace = Vec::new();
    for _ in 0..s {
        let Some((j, gain)) = side.best(n, col) else { break };
        side.take(j, col);
        trace.push(TraceStep { element: a.get(j), side: Side::A, gain });
    }
    let sub = a.select(side.chosen.iter().copied());
    let achieved = side.cover.count();
    debug_assert_eq!(achieved, difference_set(a, &sub).map(|d| d.len()).unwrap_or(0));
    Ok(SaturationOutcome {
        algorithm: "greedy-diff".into(),
        n,
        a_sub: sub.clone(),
        b_sub: sub,
        achieved_a: achieved,
        achieved_b: achieved,
        achieved_joint: None,
        baseline: None,
        trace,
        kappa: Rational::new(t.sums().len() as u64, n as u64),
        s_budget: s,
    })
}
