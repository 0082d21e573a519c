//! Walk-count certificates in the bipartite sum graph `Γ_C`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Result, SumsetError};
use crate::set::{difference_set, sumset};
use crate::table::SumTable;
use crate::GSet;

/// Largest `|A| * |B|` accepted by the walk counter.
pub const MAX_PAIRS: usize = 1_000_000;

fn big_str<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkCertificate {
    pub c: GSet,
    pub k: usize,
    #[serde(serialize_with = "big_str")]
    pub w: BigUint,
    /// `|C|^k`; the bound is `bound_numer / w`.
    #[serde(serialize_with = "big_str")]
    pub bound_numer: BigUint,
    /// `|A + B|` for odd `k`, `|B - B|` for even `k`.
    pub target: usize,
    pub valid: bool,
}

impl WalkCertificate {
    pub fn bound_f64(&self) -> f64 {
        self.bound_numer.to_f64().unwrap_or(f64::INFINITY) / self.w.to_f64().unwrap_or(f64::INFINITY)
    }
}

/// Biadjacency of `Γ_C`: `adj[i][j]` iff `a_i + b_j ∈ C`.
fn adjacency(a: &GSet, b: &GSet, c: &GSet) -> Result<Vec<Vec<bool>>> {
    if a.len().saturating_mul(b.len()) > MAX_PAIRS {
        return Err(SumsetError::BadParams(format!("|A||B| exceeds {MAX_PAIRS}")));
    }
    let t = SumTable::new(a, b)?;
    let cm = t.mask_of(c).ok_or(SumsetError::NotSubset)?;
    Ok((0..a.len()).map(|i| (0..b.len()).map(|j| cm.get(t.id(i, j))).collect()).collect())
}

/// `out[x][y] = Σ_z m[x][z] adj(z, y)` where `adj` is indexed as given.
fn step<T>(m: &[Vec<T>], adj: &[Vec<bool>], transpose: bool) -> Vec<Vec<T>>
where
    T: Clone + Zero + for<'x> std::ops::AddAssign<&'x T>,
{
    let cols = if transpose { adj.len() } else { adj.first().map_or(0, |r| r.len()) };
    m.iter()
        .map(|row| {
            let mut out = vec![T::zero(); cols];
            for (z, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                for (y, o) in out.iter_mut().enumerate() {
                    let e = if transpose { adj[y][z] } else { adj[z][y] };
                    if e {
                        *o += v;
                    }
                }
            }
            out
        })
        .collect()
}

/// Walk-count matrix after `k` edges: starting in `A` for odd `k`, in `B` for even `k`.
fn walk_matrix<T>(adj: &[Vec<bool>], nb: usize, k: usize) -> Vec<Vec<T>>
where
    T: Clone + Zero + One + for<'x> std::ops::AddAssign<&'x T>,
{
    let (mut m, mut at_b) = if k % 2 == 1 {
        (adj.iter().map(|r| r.iter().map(|&e| if e { T::one() } else { T::zero() }).collect()).collect(), true)
    } else {
        let id: Vec<Vec<T>> = (0..nb).map(|i| (0..nb).map(|j| if i == j { T::one() } else { T::zero() }).collect()).collect();
        (id, true)
    };
    let mut done = if k % 2 == 1 { 1 } else { 0 };
    while done < k {
        // from B step to A (transpose of adj), then back to B
        m = step(&m, adj, at_b);
        at_b = !at_b;
        done += 1;
    }
    m
}

fn minimum<T: Clone + Ord>(m: &[Vec<T>]) -> Option<T> {
    m.iter().flat_map(|r| r.iter()).min().cloned()
}

/// Minimum number of length-`k` walks in `Γ_C` over all `(a, b) ∈ A × B` for odd
/// `k`, or over all `(b, b') ∈ B × B` for even `k`.
pub fn min_walks(a: &GSet, b: &GSet, c: &GSet, k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(SumsetError::BadParams("walk length must be at least 1".into()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    let adj = adjacency(a, b, c)?;
    let nb = b.len();
    if k <= 4 {
        let m: Vec<Vec<u128>> = walk_matrix(&adj, nb, k);
        Ok(BigUint::from(minimum(&m).expect("nonempty")))
    } else {
        let m: Vec<Vec<BigUint>> = walk_matrix(&adj, nb, k);
        Ok(minimum(&m).expect("nonempty"))
    }
}

/// `|A + B| <= |C|^k / w` (odd `k`) or `|B - B| <= |C|^k / w` (even `k`).
pub fn walk_bound_certificate(a: &GSet, b: &GSet, c: &GSet, k: usize) -> Result<WalkCertificate> {
    let w = min_walks(a, b, c, k)?;
    if w.is_zero() {
        return Err(SumsetError::ZeroWalks);
    }
    let target = if k % 2 == 1 { sumset(a, b)?.len() } else { difference_set(b, b)?.len() };
    let bound_numer = BigUint::from(c.len()).pow(k as u32);
    let valid = BigUint::from(target) * &w <= bound_numer;
    Ok(WalkCertificate { c: c.clone(), k, w, bound_numer, target, valid })
}
