use serde::Serialize;

use crate::bitmask::BitMask;
use crate::error::{Result, SumsetError};
use crate::set::{serialize_rational, Rational};
use crate::table::SumTable;
use crate::GSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverOutcome {
    pub s_star: GSet,
    pub s_prime: GSet,
    pub t_prime: GSet,
    #[serde(serialize_with = "serialize_rational")]
    pub tau: Rational,
    /// `|S + T|`.
    pub sums: usize,
    pub covered: bool,
}

/// Default threshold `ceil(sqrt(|S + T|))`.
pub fn default_tau(sums: usize) -> Rational {
    Rational::from_integer(crate::arith::ceil_scaled_sqrt(1, 1, sums as u64))
}

/// `S' ⊆ S`, `T' ⊆ T` with `(S' + T) ∪ (S + T') = S + T`.
///
/// Phase one collects `S*` greedily: while some `s` adds more than `tau` new
/// elements of `s + T`, the best such `s` joins. Phase two covers what is left
/// of `S + T` by greedy set cover over the translates `s + T` and `S + t`,
/// preferring `T` and then the smallest element on equal coverage.
pub fn saturating_cover(s: &GSet, t: &GSet, tau: Option<Rational>) -> Result<CoverOutcome> {
    if s.ctx() != t.ctx() {
        return Err(SumsetError::ContextMismatch("cover inputs live in different groups".into()));
    }
    if s.is_empty() || t.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let table = SumTable::new(s, t)?;
    let total = table.sums().len();
    let tau = tau.unwrap_or_else(|| default_tau(total));
    let s_rows: Vec<BitMask> = (0..s.len()).map(|i| table.row_a(i)).collect();
    let t_rows: Vec<BitMask> = (0..t.len()).map(|j| table.row_b(j)).collect();

    let mut cover = table.empty_mask();
    let mut star = Vec::new();
    let mut in_star = vec![false; s.len()];
    loop {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in s_rows.iter().enumerate().filter(|(i, _)| !in_star[*i]) {
            let gain = row.count_minus(&cover);
            if Rational::from_integer(gain as u64) > tau && best.is_none_or(|(_, g)| gain > g) {
                best = Some((i, gain));
            }
        }
        let Some((i, _)) = best else { break };
        in_star[i] = true;
        star.push(i);
        cover.or_assign(&s_rows[i]);
    }

    let mut s_extra = Vec::new();
    let mut t_pick = Vec::new();
    while cover.count() < total {
        let mut best: Option<(bool, usize, usize)> = None;
        let candidates = t_rows
            .iter()
            .enumerate()
            .map(|(j, r)| (true, j, r))
            .chain(s_rows.iter().enumerate().filter(|(i, _)| !in_star[*i]).map(|(i, r)| (false, i, r)));
        for (is_t, k, row) in candidates {
            let gain = row.count_minus(&cover);
            if gain > 0 && best.is_none_or(|(_, _, g)| gain > g) {
                best = Some((is_t, k, gain));
            }
        }
        let (is_t, k, _) = best.expect("every sum lies in some translate");
        if is_t {
            t_pick.push(k);
            cover.or_assign(&t_rows[k]);
        } else {
            in_star[k] = true;
            s_extra.push(k);
            cover.or_assign(&s_rows[k]);
        }
    }

    let s_star = s.select(star.iter().copied());
    let s_prime = s.select(star.iter().chain(&s_extra).copied());
    let t_prime = t.select(t_pick.iter().copied());
    let mut check = table.empty_mask();
    for &i in star.iter().chain(&s_extra) {
        check.or_assign(&s_rows[i]);
    }
    for &j in &t_pick {
        check.or_assign(&t_rows[j]);
    }
    Ok(CoverOutcome { s_star, s_prime, t_prime, tau, sums: total, covered: check.count() == total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::sumset;

    #[test]
    fn traced_example() {
        let s = GSet::ints(&[0, 1, 2]);
        let o = saturating_cover(&s, &s, Some(Rational::from_integer(2))).unwrap();
        assert_eq!(o.s_star, GSet::ints(&[0]));
        assert_eq!(o.s_prime, GSet::ints(&[0]));
        assert_eq!(o.t_prime, GSet::ints(&[2]));
        assert!(o.covered);
    }

    #[test]
    fn subgroup_needs_one_element() {
        let h = GSet::residues(12, &[0, 3, 6, 9]).unwrap();
        let o = saturating_cover(&h, &h, None).unwrap();
        assert_eq!(o.s_prime.len() + o.t_prime.len(), 1);
        assert!(o.covered);
    }

    #[test]
    fn cover_is_exact() {
        let s = GSet::residues(97, &[1, 5, 9, 20, 33, 34, 35, 60, 71]).unwrap();
        let t = GSet::residues(97, &[0, 2, 4, 8, 16, 32, 64]).unwrap();
        let o = saturating_cover(&s, &t, None).unwrap();
        let got = sumset(&o.s_prime, &t).unwrap().union(&sumset(&s, &o.t_prime).unwrap()).unwrap();
        assert_eq!(got, sumset(&s, &t).unwrap());
        assert!(o.covered);
    }
}
