use crate::bitmask::BitMask;
use crate::error::{Result, SumsetError};
use crate::table::SumTable;
use crate::GSet;

struct Search<'a> {
    rows: &'a [BitMask],
    per_row: usize,
    target: usize,
    picked: Vec<usize>,
}

impl Search<'_> {
    /// Depth-first over increasing positions; prunes when even disjoint rows could not reach the target.
    fn run(&mut self, start: usize, left: usize, cover: &BitMask) -> bool {
        let have = cover.count();
        if left == 0 {
            return have >= self.target;
        }
        if have + left * self.per_row < self.target {
            return false;
        }
        for j in start..self.rows.len() {
            if left == 1 {
                if cover.count_or(&self.rows[j]) >= self.target {
                    self.picked.push(j);
                    return true;
                }
                continue;
            }
            let mut next = cover.clone();
            next.or_assign(&self.rows[j]);
            self.picked.push(j);
            if self.run(j + 1, left - 1, &next) {
                return true;
            }
            self.picked.pop();
        }
        false
    }
}

/// Smallest `s <= cap` for which some `B_(s) ⊆ B` has `|A + B_(s)| >= target`,
/// with the first such subset in lexicographic order of canonical positions.
pub fn brute_min_subset(a: &GSet, b: &GSet, target: usize, cap: usize) -> Result<(usize, GSet)> {
    if a.is_empty() || b.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let t = SumTable::new(a, b)?;
    if target > t.sums().len() {
        return Err(SumsetError::BadParams(format!("target {target} exceeds |A+B| = {}", t.sums().len())));
    }
    if target == 0 {
        return Ok((0, GSet::empty(b.ctx())));
    }
    let rows: Vec<BitMask> = (0..b.len()).map(|j| t.row_b(j)).collect();
    let mut search = Search { rows: &rows, per_row: a.len(), target, picked: Vec::new() };
    for s in 1..=cap.min(b.len()) {
        if s * a.len() < target {
            continue;
        }
        if search.run(0, s, &t.empty_mask()) {
            return Ok((s, b.select(search.picked.iter().copied())));
        }
        search.picked.clear();
    }
    Err(SumsetError::NotFound)
}

/// First `B_(3) ⊆ B` of size at most three (by size, then lexicographically)
/// with `|A + B_(3)| >= 2n - 1`.
pub fn find_triple(a: &GSet, b: &GSet) -> Result<GSet> {
    if a.len() != b.len() {
        return Err(SumsetError::SizeMismatch { a: a.len(), b: b.len() });
    }
    if a.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let target = 2 * a.len() - 1;
    let t = SumTable::new(a, b)?;
    if target > t.sums().len() {
        return Err(SumsetError::NotFound);
    }
    brute_min_subset(a, b, target, 3).map(|(_, w)| w)
}
