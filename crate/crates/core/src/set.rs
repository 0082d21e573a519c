//! Finite subsets of a group context and the sumset kernel.
//!
//! Canonical order: lexicographic on coordinates in the lattice, by canonical
//! index in finite contexts. Finite sets are stored as sorted index lists; a
//! dense bitmask is built lazily when `|G| <= DENSE_LIMIT`.

use std::collections::HashSet;
use std::sync::OnceLock;

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::bitmask::BitMask;
use crate::error::{Result, SumsetError};
use crate::group::{Element, GroupCtx, IndexAdder, LATTICE_BOUND};

pub type Rational = Ratio<u64>;

/// Largest group order for which the dense bitmask representation is used.
pub const DENSE_LIMIT: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Data {
    Indexed(Vec<u64>),
    Points(Vec<Element>),
}

#[derive(Clone, Debug)]
pub struct GSet {
    ctx: GroupCtx,
    data: Data,
    mask: OnceLock<BitMask>,
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.data == other.data
    }
}

impl Eq for GSet {}

impl std::hash::Hash for GSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.hash(state);
        self.data.hash(state);
    }
}

impl Serialize for GSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GSet", 2)?;
        st.serialize_field("ctx", &self.ctx)?;
        st.serialize_field("elements", &self.to_vec())?;
        st.end()
    }
}

/// Serializes a rational as `"p/q"` (or `"p"` when integral).
pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"0.05"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || SumsetError::BadParams(format!("cannot parse {text:?} as a nonnegative rational"));
    let t = text.trim();
    if let Some((n, d)) = t.split_once('/') {
        let (n, d): (u64, u64) = (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?);
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let w: u64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
        let den = 10u64.pow(frac.len() as u32);
        let f: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        let num = w.checked_mul(den).and_then(|v| v.checked_add(f)).ok_or_else(bad)?;
        return Ok(Rational::new(num, den));
    }
    t.parse().map(Rational::from_integer).map_err(|_| bad())
}

/// Accepts a rational written as a string (see [`parse_rational`]) or a nonnegative integer.
pub fn deserialize_rational<'de, D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Rational, D::Error> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(u64),
        Text(String),
    }
    match Raw::deserialize(de)? {
        Raw::Int(v) => Ok(Rational::from_integer(v)),
        Raw::Text(t) => parse_rational(&t).map_err(serde::de::Error::custom),
    }
}

fn sorted_dedup<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort_unstable();
    v.dedup();
    v
}

fn same_ctx(a: &GSet, b: &GSet) -> Result<()> {
    if a.ctx != b.ctx {
        return Err(SumsetError::ContextMismatch(format!("{:?} vs {:?}", a.ctx, b.ctx)));
    }
    Ok(())
}

impl GSet {
    pub fn empty(ctx: &GroupCtx) -> Self {
        let data = if ctx.is_finite() { Data::Indexed(Vec::new()) } else { Data::Points(Vec::new()) };
        GSet { ctx: ctx.clone(), data, mask: OnceLock::new() }
    }

    /// Builds a set from elements; every element must be valid (reduced) in `ctx`.
    pub fn new(ctx: &GroupCtx, elems: impl IntoIterator<Item = Element>) -> Result<Self> {
        let data = if ctx.is_finite() {
            let idx = elems
                .into_iter()
                .map(|x| ctx.canonical_index(&x))
                .collect::<Result<Vec<_>>>()?;
            Data::Indexed(sorted_dedup(idx))
        } else {
            let pts = elems
                .into_iter()
                .map(|x| ctx.validate(&x).map(|_| x))
                .collect::<Result<Vec<_>>>()?;
            Data::Points(sorted_dedup(pts))
        };
        Ok(GSet { ctx: ctx.clone(), data, mask: OnceLock::new() })
    }

    /// Builds a set from coordinate tuples, reducing them in finite contexts.
    pub fn from_coords<'a>(ctx: &GroupCtx, coords: impl IntoIterator<Item = &'a [i64]>) -> Result<Self> {
        let elems = coords
            .into_iter()
            .map(|c| ctx.element(c))
            .collect::<Result<Vec<_>>>()?;
        GSet::new(ctx, elems)
    }

    /// A set of integers in `Z`.
    pub fn ints(values: &[i64]) -> Self {
        GSet::new(&GroupCtx::integers(), values.iter().map(|&v| Element::scalar(v)))
            .expect("integer literal out of lattice range")
    }

    /// Residues in `Z_n` (values are reduced).
    pub fn residues(n: u64, values: &[i64]) -> Result<Self> {
        let ctx = GroupCtx::cyclic(n)?;
        let idx = values.iter().map(|&v| v.rem_euclid(n as i64) as u64);
        GSet::from_indices(&ctx, idx)
    }

    /// `{lo, lo+1, ..., hi-1}` in `Z`.
    pub fn interval(lo: i64, hi: i64) -> Self {
        let v: Vec<i64> = (lo..hi).collect();
        GSet::ints(&v)
    }

    pub fn from_indices(ctx: &GroupCtx, idx: impl IntoIterator<Item = u64>) -> Result<Self> {
        let order = ctx
            .order()
            .ok_or_else(|| SumsetError::Unsupported("index set in a lattice".into()))?;
        let idx: Vec<u64> = idx.into_iter().collect();
        if let Some(&bad) = idx.iter().find(|&&i| i >= order) {
            return Err(SumsetError::BadParams(format!("index {bad} >= |G| = {order}")));
        }
        Ok(GSet { ctx: ctx.clone(), data: Data::Indexed(sorted_dedup(idx)), mask: OnceLock::new() })
    }

    pub fn from_mask(ctx: &GroupCtx, mask: BitMask) -> Result<Self> {
        let order = ctx
            .order()
            .ok_or_else(|| SumsetError::Unsupported("bitmask set in a lattice".into()))?;
        if mask.len() as u64 != order {
            return Err(SumsetError::ContextMismatch("mask length differs from |G|".into()));
        }
        let idx: Vec<u64> = mask.iter_ones().map(|i| i as u64).collect();
        let cell = OnceLock::new();
        let _ = cell.set(mask);
        Ok(GSet { ctx: ctx.clone(), data: Data::Indexed(idx), mask: cell })
    }

    pub fn ctx(&self) -> &GroupCtx {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        match &self.data {
            Data::Indexed(v) => v.len(),
            Data::Points(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorted canonical indices (finite contexts only).
    pub fn indices(&self) -> Option<&[u64]> {
        match &self.data {
            Data::Indexed(v) => Some(v),
            Data::Points(_) => None,
        }
    }

    /// Sorted points (lattice only).
    pub fn points(&self) -> Option<&[Element]> {
        match &self.data {
            Data::Points(v) => Some(v),
            Data::Indexed(_) => None,
        }
    }

    /// Dense bitmask over `G`, built on first use; `None` in the lattice or when `|G|` is too large.
    pub fn mask(&self) -> Option<&BitMask> {
        let order = self.ctx.order()?;
        if order > DENSE_LIMIT {
            return None;
        }
        let idx = self.indices()?;
        Some(self.mask.get_or_init(|| BitMask::from_indices(order as usize, idx.iter().map(|&i| i as usize))))
    }

    pub fn get(&self, i: usize) -> Element {
        match &self.data {
            Data::Points(v) => v[i].clone(),
            Data::Indexed(v) => self.ctx.from_index(v[i]).expect("stored index is valid"),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }

    /// Integer values of a one-dimensional set (`Z` or `Z_N`).
    pub fn values(&self) -> Vec<i64> {
        self.iter().map(|x| x.coords()[0]).collect()
    }

    pub fn contains(&self, x: &Element) -> bool {
        match &self.data {
            Data::Points(v) => v.binary_search(x).is_ok(),
            Data::Indexed(v) => match self.ctx.canonical_index(x) {
                Ok(i) => v.binary_search(&i).is_ok(),
                Err(_) => false,
            },
        }
    }

    pub fn position(&self, x: &Element) -> Option<usize> {
        match &self.data {
            Data::Points(v) => v.binary_search(x).ok(),
            Data::Indexed(v) => v.binary_search(&self.ctx.canonical_index(x).ok()?).ok(),
        }
    }

    /// Subset given by positions into this set's canonical order.
    pub fn select(&self, positions: impl IntoIterator<Item = usize>) -> GSet {
        let data = match &self.data {
            Data::Points(v) => Data::Points(sorted_dedup(positions.into_iter().map(|p| v[p].clone()).collect())),
            Data::Indexed(v) => Data::Indexed(sorted_dedup(positions.into_iter().map(|p| v[p]).collect())),
        };
        GSet { ctx: self.ctx.clone(), data, mask: OnceLock::new() }
    }

    fn combine(&self, other: &GSet, keep: impl Fn(bool, bool) -> bool) -> Result<GSet> {
        same_ctx(self, other)?;
        let data = match (&self.data, &other.data) {
            (Data::Indexed(a), Data::Indexed(b)) => Data::Indexed(merge(a, b, keep)),
            (Data::Points(a), Data::Points(b)) => Data::Points(merge(a, b, keep)),
            _ => unreachable!("same context implies same storage"),
        };
        Ok(GSet { ctx: self.ctx.clone(), data, mask: OnceLock::new() })
    }

    pub fn union(&self, other: &GSet) -> Result<GSet> {
        self.combine(other, |x, y| x || y)
    }

    pub fn intersection(&self, other: &GSet) -> Result<GSet> {
        self.combine(other, |x, y| x && y)
    }

    pub fn minus(&self, other: &GSet) -> Result<GSet> {
        self.combine(other, |x, y| x && !y)
    }

    pub fn is_subset(&self, other: &GSet) -> bool {
        self.ctx == other.ctx && self.minus(other).map(|d| d.is_empty()).unwrap_or(false)
    }

    pub fn negate(&self) -> Result<GSet> {
        match &self.data {
            Data::Indexed(v) => {
                let adder = self.ctx.index_adder().expect("finite");
                GSet::from_indices(&self.ctx, v.iter().map(|&i| adder.neg(i)))
            }
            Data::Points(v) => {
                let pts = v.iter().map(|x| self.ctx.neg(x)).collect::<Result<Vec<_>>>()?;
                GSet::new(&self.ctx, pts)
            }
        }
    }
}

fn merge<T: Ord + Clone>(a: &[T], b: &[T], keep: impl Fn(bool, bool) -> bool) -> Vec<T> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.cmp(y),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, _) => std::cmp::Ordering::Greater,
        };
        match ord {
            std::cmp::Ordering::Less => {
                if keep(true, false) {
                    out.push(a[i].clone());
                }
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                if keep(false, true) {
                    out.push(b[j].clone());
                }
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                if keep(true, true) {
                    out.push(a[i].clone());
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// `A + B`. Dense bitmask kernel for finite contexts up to `DENSE_LIMIT`; in
/// the lattice, a bitmap over the bounding box of the sums when that box is
/// small, hash accumulation otherwise.
pub fn sumset(a: &GSet, b: &GSet) -> Result<GSet> {
    same_ctx(a, b)?;
    match a.ctx.order() {
        Some(order) if order <= DENSE_LIMIT => sumset_dense(a, b),
        Some(_) => sumset_sparse(a, b),
        None => match sumset_box(a, b) {
            Some(s) => Ok(s),
            None => sumset_sparse(a, b),
        },
    }
}

/// Largest bounding box scanned by the lattice bitmap path.
const BOX_LIMIT: u128 = 1 << 22;

fn sumset_box(a: &GSet, b: &GSet) -> Option<GSet> {
    let (Data::Points(x), Data::Points(y)) = (&a.data, &b.data) else { return None };
    if x.is_empty() || y.is_empty() {
        return None;
    }
    let d = a.ctx.arity();
    let bounds = |v: &[Element], k: usize| {
        let it = v.iter().map(|p| p.coords()[k]);
        (it.clone().min().unwrap(), it.max().unwrap())
    };
    let mut lo = Vec::with_capacity(d);
    let mut side = Vec::with_capacity(d);
    let mut volume: u128 = 1;
    for k in 0..d {
        let ((xl, xh), (yl, yh)) = (bounds(x, k), bounds(y, k));
        let (l, h) = (xl as i128 + yl as i128, xh as i128 + yh as i128);
        if l.abs() >= LATTICE_BOUND as i128 || h.abs() >= LATTICE_BOUND as i128 {
            return None;
        }
        lo.push((xl, yl));
        side.push((h - l + 1) as u128);
        volume = volume.saturating_mul((h - l + 1) as u128);
    }
    let pairs = (x.len() as u128) * (y.len() as u128);
    if volume > BOX_LIMIT || volume > 16 * pairs + 1024 {
        return None;
    }
    let mut stride = vec![1u128; d];
    for k in (0..d.saturating_sub(1)).rev() {
        stride[k] = stride[k + 1] * side[k + 1];
    }
    let offsets = |v: &[Element], pick: fn(&(i64, i64)) -> i64| -> Vec<usize> {
        v.iter()
            .map(|p| (0..d).map(|k| (p.coords()[k] - pick(&lo[k])) as u128 * stride[k]).sum::<u128>() as usize)
            .collect()
    };
    let (ox, oy) = (offsets(x, |l| l.0), offsets(y, |l| l.1));
    let mut mask = BitMask::new(volume as usize);
    for &i in &ox {
        for &j in &oy {
            mask.set(i + j);
        }
    }
    let pts = mask
        .iter_ones()
        .map(|mut idx| {
            let mut c = vec![0i64; d];
            for k in 0..d {
                let q = idx as u128 / stride[k];
                idx -= (q * stride[k]) as usize;
                c[k] = lo[k].0 + lo[k].1 + q as i64;
            }
            Element::new(&c)
        })
        .collect();
    Some(GSet { ctx: a.ctx.clone(), data: Data::Points(pts), mask: OnceLock::new() })
}

/// Bitmask path. Cyclic contexts OR rotated masks, `F_2^n` ORs XOR-permuted
/// masks; other finite contexts accumulate pairwise sums into a mask.
pub fn sumset_dense(a: &GSet, b: &GSet) -> Result<GSet> {
    same_ctx(a, b)?;
    let order = match a.ctx.order() {
        Some(o) if o <= DENSE_LIMIT => o as usize,
        _ => return Err(SumsetError::Unsupported("dense sumset needs a finite context with |G| <= 2^24".into())),
    };
    let mut out = BitMask::new(order);
    if a.is_empty() || b.is_empty() {
        return GSet::from_mask(&a.ctx, out);
    }
    // iterate over the smaller side, translate the larger one's mask
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let words = order.div_ceil(64);
    let pairwise_cost = a.len() * b.len();
    let adder = a.ctx.index_adder().expect("finite");
    let shifts = small.indices().expect("finite");
    match adder {
        IndexAdder::Cyclic(_) if small.len() * words < pairwise_cost => {
            let m = large.mask().expect("dense");
            for &s in shifts {
                out.or_rotated(m, s as usize);
            }
        }
        IndexAdder::Xor if small.len() * words < pairwise_cost => {
            out.or_xor_translates(large.mask().expect("dense"), shifts);
        }
        _ => {
            let other = large.indices().expect("finite");
            for &s in shifts {
                for &t in other {
                    out.set(adder.add(s, t) as usize);
                }
            }
        }
    }
    GSet::from_mask(&a.ctx, out)
}

/// Hash-accumulation path; valid in every context.
pub fn sumset_sparse(a: &GSet, b: &GSet) -> Result<GSet> {
    same_ctx(a, b)?;
    match (&a.data, &b.data) {
        (Data::Indexed(x), Data::Indexed(y)) => {
            let adder = a.ctx.index_adder().expect("finite");
            let mut acc = HashSet::with_capacity(x.len() * y.len() / 2 + 1);
            for &i in x {
                for &j in y {
                    acc.insert(adder.add(i, j));
                }
            }
            GSet::from_indices(&a.ctx, acc)
        }
        (Data::Points(x), Data::Points(y)) => {
            let mut acc = HashSet::with_capacity(x.len() * y.len() / 2 + 1);
            for p in x {
                for q in y {
                    acc.insert(a.ctx.add(p, q)?);
                }
            }
            Ok(GSet { ctx: a.ctx.clone(), data: Data::Points(sorted_dedup(acc.into_iter().collect())), mask: OnceLock::new() })
        }
        _ => unreachable!("same context implies same storage"),
    }
}

/// `A - B`.
pub fn difference_set(a: &GSet, b: &GSet) -> Result<GSet> {
    same_ctx(a, b)?;
    sumset(a, &b.negate()?)
}

/// `x + A`.
pub fn translate(a: &GSet, x: &Element) -> Result<GSet> {
    a.ctx.validate(x)?;
    let single = GSet::new(&a.ctx, [x.clone()])?;
    sumset(a, &single)
}

/// `kA = A + ... + A` (`k` summands).
pub fn iterated_sumset(a: &GSet, k: usize) -> Result<GSet> {
    if k == 0 {
        return Err(SumsetError::BadParams("iterated sumset needs k >= 1".into()));
    }
    let mut acc = a.clone();
    for _ in 1..k {
        acc = sumset(&acc, a)?;
    }
    Ok(acc)
}

/// `|A+A| / |A|`.
pub fn doubling_kappa(a: &GSet) -> Result<Rational> {
    kappa_ab(a, a)
}

/// `|A+B| / |A|`.
pub fn kappa_ab(a: &GSet, b: &GSet) -> Result<Rational> {
    if a.is_empty() || b.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let s = sumset(a, b)?;
    Ok(Rational::new(s.len() as u64, a.len() as u64))
}

/// `|A - A| / |A|`.
pub fn difference_kappa(a: &GSet) -> Result<Rational> {
    if a.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let s = difference_set(a, a)?;
    Ok(Rational::new(s.len() as u64, a.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sumset_examples() {
        let s = GSet::ints(&[0, 1]);
        assert_eq!(sumset(&s, &s).unwrap(), GSet::ints(&[0, 1, 2]));
        let a = GSet::ints(&[3, -7, 12]);
        assert_eq!(sumset(&a, &GSet::ints(&[0])).unwrap(), a);
        let z7 = GSet::residues(7, &[0, 1, 3]).unwrap();
        let s = sumset(&z7, &z7).unwrap();
        assert_eq!(s, GSet::residues(7, &[0, 1, 2, 3, 4, 6]).unwrap());
        assert_eq!(s.len(), 6);
    }

    #[test]
    fn lattice_box_path_matches_hashing() {
        let ctx = GroupCtx::lattice(3).unwrap();
        let pts = |seed: i64| -> Vec<Element> {
            (0..30).map(|i| Element::new(&[(i * seed) % 7 - 3, (i * i + seed) % 5, -(i % 4) * seed])).collect()
        };
        for seed in 1..6 {
            let a = GSet::new(&ctx, pts(seed)).unwrap();
            let b = GSet::new(&ctx, pts(seed + 3)).unwrap();
            assert_eq!(sumset(&a, &b).unwrap(), sumset_sparse(&a, &b).unwrap());
        }
        let wide = GSet::ints(&[-(1 << 40), 0, 1 << 40]);
        assert_eq!(sumset(&wide, &wide).unwrap().len(), 5);
    }

    #[test]
    fn empty_and_mismatch() {
        let e = GSet::empty(&GroupCtx::integers());
        assert!(sumset(&e, &GSet::ints(&[1])).unwrap().is_empty());
        let z5 = GSet::residues(5, &[1]).unwrap();
        assert!(matches!(sumset(&z5, &GSet::ints(&[1])), Err(SumsetError::ContextMismatch(_))));
        assert_eq!(doubling_kappa(&e), Err(SumsetError::EmptySet));
    }

    #[test]
    fn difference_examples() {
        let a = GSet::ints(&[0, 1, 3]);
        let d = difference_set(&a, &a).unwrap();
        assert_eq!(d, GSet::interval(-3, 4));
        assert!(d.contains(&Element::scalar(0)));
        let ctx = GroupCtx::vector(2, 4).unwrap();
        let x = GSet::from_indices(&ctx, [1, 6, 9]).unwrap();
        let y = GSet::from_indices(&ctx, [0, 3, 12, 15]).unwrap();
        assert_eq!(difference_set(&x, &y).unwrap(), sumset(&x, &y).unwrap());
    }

    #[test]
    fn translate_and_iterate() {
        assert_eq!(translate(&GSet::ints(&[1, 2]), &Element::scalar(10)).unwrap(), GSet::ints(&[11, 12]));
        assert_eq!(iterated_sumset(&GSet::ints(&[0, 1]), 3).unwrap(), GSet::ints(&[0, 1, 2, 3]));
        let z5 = GSet::residues(5, &[0, 2]).unwrap();
        assert_eq!(iterated_sumset(&z5, 2).unwrap(), GSet::residues(5, &[0, 2, 4]).unwrap());
        assert_eq!(iterated_sumset(&z5, 1).unwrap(), z5);
        assert!(iterated_sumset(&z5, 0).is_err());
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(doubling_kappa(&GSet::ints(&[0])).unwrap(), Rational::from_integer(1));
        assert_eq!(doubling_kappa(&GSet::ints(&[0, 1, 2])).unwrap(), Rational::new(5, 3));
        for n in 1..20 {
            let a = GSet::interval(0, n);
            assert_eq!(doubling_kappa(&a).unwrap(), Rational::new(2 * n as u64 - 1, n as u64));
        }
        let b = GSet::ints(&[0, 10]);
        assert_eq!(kappa_ab(&GSet::ints(&[0, 1, 2]), &b).unwrap(), Rational::new(6, 3));
    }

    #[test]
    fn lattice_overflow_is_reported() {
        let big = crate::group::LATTICE_BOUND - 1;
        let a = GSet::ints(&[big]);
        assert_eq!(sumset(&a, &a), Err(SumsetError::Overflow));
    }

    #[test]
    fn set_algebra() {
        let a = GSet::ints(&[1, 2, 3, 5]);
        let b = GSet::ints(&[2, 5, 8]);
        assert_eq!(a.union(&b).unwrap(), GSet::ints(&[1, 2, 3, 5, 8]));
        assert_eq!(a.intersection(&b).unwrap(), GSet::ints(&[2, 5]));
        assert_eq!(a.minus(&b).unwrap(), GSet::ints(&[1, 3]));
        assert!(GSet::ints(&[2, 5]).is_subset(&a));
        assert_eq!(a.select([0, 3]), GSet::ints(&[1, 5]));
    }

    #[test]
    fn mask_consistent_with_elements() {
        let s = GSet::residues(101, &[0, 5, 77, 100, 5]).unwrap();
        let m = s.mask().unwrap();
        assert_eq!(m.count(), s.len());
        assert!(s.indices().unwrap().iter().all(|&i| m.get(i as usize)));
        assert!(GSet::ints(&[1]).mask().is_none());
    }
}
