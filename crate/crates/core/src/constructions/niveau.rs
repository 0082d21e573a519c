//! Niveau sets: a low-weight layer over the zero head, a thinner layer elsewhere.

use serde::Serialize;

use crate::arith::floor_scaled_sqrt;
use crate::error::{Result, SumsetError};
use crate::group::{Element, GroupCtx};
use crate::set::{serialize_rational, Rational};
use crate::GSet;

/// Largest group order the niveau generators enumerate.
pub const MAX_ORDER: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    F2,
    Zn,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Thresholds {
    /// `m/2 - θ√m`, the weight cap of `A_0`.
    pub a0: f64,
    /// `θ√m`, the weight cap of `B_0`.
    pub b0: f64,
    /// `m/2 - δ√m`.
    pub delta_layer: f64,
    pub half: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NiveauMeta {
    pub variant: Variant,
    /// Number of head coordinates.
    pub head: usize,
    /// Number of tail coordinates.
    pub m: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub theta: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub delta: Rational,
    pub thresholds: Thresholds,
    /// Largest tail weight in `A_0`.
    pub a0_weight: usize,
    /// Largest tail weight in `B_0`.
    pub b0_weight: usize,
    pub a0_size: usize,
    pub b0_size: usize,
}

impl NiveauMeta {
    /// Number of tail coordinates lying in the odd pattern `A_i`; for `F_2`
    /// this is the Hamming weight of the tail.
    pub fn tail_weight(&self, x: &Element) -> usize {
        x.coords()[self.head..].iter().filter(|&&c| c % 2 != 0).count()
    }
}

fn sqrt_f64(r: Rational, m: usize) -> f64 {
    *r.numer() as f64 / *r.denom() as f64 * (m as f64).sqrt()
}

/// Weight caps `(⌊m/2 - θ√m⌋, ⌊θ√m⌋)` after checking `θ√m <= m/4`.
fn weight_caps(m: usize, theta: Rational, delta: Rational) -> Result<(usize, usize, Thresholds)> {
    if m == 0 {
        return Err(SumsetError::BadParams("m must be positive".into()));
    }
    let (tn, td) = (*theta.numer() as u128, *theta.denom() as u128);
    let m128 = m as u128;
    // θ√m <= m/4  ⟺  16 θ² m <= m²
    if 16 * tn * tn * m128 > m128 * m128 * td * td {
        return Err(SumsetError::BadParams(format!("θ = {theta} violates θ√m <= m/4 at m = {m}")));
    }
    let b0 = floor_scaled_sqrt(tn as u64, td as u64, m as u64) as usize;
    // largest w with m - 2w >= 2θ√m
    let a0 = (0..=m / 2)
        .rev()
        .find(|&w| {
            let gap = (m - 2 * w) as u128;
            gap * gap * td * td >= 4 * tn * tn * m128
        })
        .ok_or_else(|| SumsetError::BadParams("m/2 - θ√m < 0 leaves A_0 empty".into()))?;
    let half = m as f64 / 2.0;
    let t = Thresholds {
        a0: half - sqrt_f64(theta, m),
        b0: sqrt_f64(theta, m),
        delta_layer: half - sqrt_f64(delta, m),
        half,
    };
    Ok((a0, b0, t))
}

/// Niveau set in `F_2^{p+m}`: `(0, x)` with `|x|₁ <= m/2 - θ√m` and `(h, x)`,
/// `h ≠ 0`, with `|x|₁ <= θ√m`.
pub fn niveau_f2(p: usize, m: usize, theta: Rational, delta: Rational) -> Result<(GSet, NiveauMeta)> {
    if p == 0 || p + m > 22 {
        return Err(SumsetError::BadParams(format!("need 1 <= p and p + m <= 22, got p = {p}, m = {m}")));
    }
    let (wa, wb, thresholds) = weight_caps(m, theta, delta)?;
    let ctx = GroupCtx::vector(2, p + m)?;
    let tail = 1u64 << m;
    let mut idx = Vec::new();
    for h in 0..1u64 << p {
        let cap = if h == 0 { wa } else { wb };
        idx.extend((0..tail).filter(|x| x.count_ones() as usize <= cap).map(|x| h << m | x));
    }
    let a0_size = (0..tail).filter(|x| x.count_ones() as usize <= wa).count();
    let b0_size = (0..tail).filter(|x| x.count_ones() as usize <= wb).count();
    let meta = NiveauMeta {
        variant: Variant::F2,
        head: p,
        m,
        theta,
        delta,
        thresholds,
        a0_weight: wa,
        b0_weight: wb,
        a0_size,
        b0_size,
    };
    Ok((GSet::from_indices(&ctx, idx)?, meta))
}

/// Niveau set in `Z_q × ∏ Z_{p_i}`: over head `0`, tails with at most
/// `m/2 - θ√m` odd coordinates; over nonzero heads, tails in `{0,1}^m` with at
/// most `θ√m` ones.
pub fn niveau_zn(q: u64, primes: &[u64], theta: Rational, delta: Rational) -> Result<(GSet, NiveauMeta)> {
    let ctx = GroupCtx::prime_product(q, primes.to_vec())?;
    let order = ctx.order().expect("finite");
    if order > MAX_ORDER {
        return Err(SumsetError::BadParams(format!("q·∏p_i = {order} exceeds 2^22")));
    }
    if let Some(p) = primes.iter().find(|&&p| p <= q) {
        return Err(SumsetError::BadParams(format!("prime {p} must exceed q = {q}")));
    }
    let m = primes.len();
    let (wa, wb, thresholds) = weight_caps(m, theta, delta)?;
    let tail = order / q;
    let mut a0 = Vec::new();
    let mut digits = vec![0i64; m];
    for _ in 0..tail {
        if digits.iter().filter(|&&d| d % 2 != 0).count() <= wa {
            a0.push(digits.clone());
        }
        for k in (0..m).rev() {
            digits[k] += 1;
            if (digits[k] as u64) < primes[k] {
                break;
            }
            digits[k] = 0;
        }
    }
    let b0: Vec<Vec<i64>> = (0..1u64 << m)
        .filter(|x| x.count_ones() as usize <= wb)
        .map(|x| (0..m).map(|k| (x >> (m - 1 - k) & 1) as i64).collect())
        .collect();
    let mut pts = Vec::with_capacity(a0.len() + (q as usize - 1) * b0.len());
    for h in 0..q as i64 {
        for x in if h == 0 { &a0 } else { &b0 } {
            let mut c = vec![h];
            c.extend_from_slice(x);
            pts.push(ctx.element(&c)?);
        }
    }
    let meta = NiveauMeta {
        variant: Variant::Zn,
        head: 1,
        m,
        theta,
        delta,
        thresholds,
        a0_weight: wa,
        b0_weight: wb,
        a0_size: a0.len(),
        b0_size: b0.len(),
    };
    Ok((GSet::new(&ctx, pts)?, meta))
}
