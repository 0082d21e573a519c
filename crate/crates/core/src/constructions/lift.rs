//! Lifting a set in a cyclic group to integer representatives and to `Z_p`, `p > 2N`.

use serde::Serialize;

use crate::arith::{is_prime, next_prime_above};
use crate::error::{Result, SumsetError};
use crate::group::{Element, GroupCtx};
use crate::GSet;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lift {
    /// Representatives in `[0, N-1] ⊂ Z`.
    pub hat: GSet,
    /// The same representatives in `Z_p`.
    pub hat_p: GSet,
    pub p: u64,
    pub modulus: u64,
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(m as i128) as u64
}

/// Chinese-remainder representative in `[0, ∏ m_i)` of residues `x_i mod m_i`.
pub fn crt(residues: &[i64], moduli: &[u64]) -> u64 {
    let n: u128 = moduli.iter().map(|&m| m as u128).product();
    let mut acc = 0u128;
    for (&x, &m) in residues.iter().zip(moduli) {
        let big = n / m as u128;
        let inv = mod_inverse((big % m as u128) as u64, m) as u128;
        acc = (acc + x as u128 * big % n * inv) % n;
    }
    acc as u64
}

fn representatives(a: &GSet) -> Result<(u64, Vec<u64>)> {
    match a.ctx() {
        GroupCtx::Cyclic { n } => Ok((*n, a.iter().map(|x| x.coords()[0] as u64).collect())),
        GroupCtx::PrimeProduct { .. } => {
            let moduli = a.ctx().radices().expect("finite");
            let n = a.ctx().order().expect("finite");
            Ok((n, a.iter().map(|x| crt(x.coords(), &moduli)).collect()))
        }
        other => Err(SumsetError::Unsupported(format!("cannot lift from {other:?}"))),
    }
}

/// `Â ⊂ [0, N-1]` in bijection with `A`, and its image in `Z_p` for a prime
/// `p > 2N` (the least such prime when `p` is not given).
pub fn lift_construction(a: &GSet, p: Option<u64>) -> Result<Lift> {
    let (n, reps) = representatives(a)?;
    let p = match p {
        Some(p) if p > 2 * n && is_prime(p) => p,
        Some(p) => return Err(SumsetError::BadParams(format!("{p} is not a prime above 2N = {}", 2 * n))),
        None => next_prime_above(2 * n, 4 * n).ok_or(SumsetError::NoPrimeFound { lo: 2 * n, hi: 4 * n })?,
    };
    let hat = GSet::ints(&reps.iter().map(|&r| r as i64).collect::<Vec<_>>());
    let zp = GroupCtx::cyclic(p)?;
    let hat_p = GSet::new(&zp, reps.iter().map(|&r| Element::scalar(r as i64)))?;
    Ok(Lift { hat, hat_p, p, modulus: n })
}
