//! Abelian group contexts and element arithmetic.
//!
//! Every finite context is a product of cyclic factors, and elements carry one
//! reduced coordinate per factor. Finite contexts additionally expose a
//! mixed-radix canonical index (first coordinate most significant) so sets can
//! be stored as sorted index lists or dense bitmasks.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::arith::is_prime;
use crate::error::{Result, SumsetError};

/// Lattice coordinates must stay strictly below this in absolute value, so the
/// sum of two valid elements always fits in an `i64`.
pub const LATTICE_BOUND: i64 = 1 << 61;

/// Largest finite group order accepted by a context.
pub const MAX_ORDER: u64 = 1 << 62;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupCtx {
    /// `Z^d`.
    Lattice { d: usize },
    /// `Z_N`.
    Cyclic {
        #[serde(rename = "N")]
        n: u64,
    },
    /// `F_p^n`.
    Vector { p: u64, n: usize },
    /// `Z_q x Z_{p_1} x ... x Z_{p_m}`.
    PrimeProduct { q: u64, primes: Vec<u64> },
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawCtx {
    Lattice {
        d: usize,
    },
    Cyclic {
        #[serde(rename = "N")]
        n: u64,
    },
    Vector {
        p: u64,
        n: usize,
    },
    PrimeProduct {
        q: u64,
        primes: Vec<u64>,
    },
}

impl<'de> Deserialize<'de> for GroupCtx {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCtx::deserialize(de)?;
        let ctx = match raw {
            RawCtx::Lattice { d } => GroupCtx::lattice(d),
            RawCtx::Cyclic { n } => GroupCtx::cyclic(n),
            RawCtx::Vector { p, n } => GroupCtx::vector(p, n),
            RawCtx::PrimeProduct { q, primes } => GroupCtx::prime_product(q, primes),
        };
        ctx.map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(SmallVec<[i64; 4]>);

impl Element {
    /// Raw constructor; no reduction or validation against a context.
    pub fn new(coords: &[i64]) -> Self {
        Element(SmallVec::from_slice(coords))
    }

    pub fn scalar(x: i64) -> Self {
        Element(smallvec::smallvec![x])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Display for GroupCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupCtx::Lattice { d: 1 } => f.write_str("Z"),
            GroupCtx::Lattice { d } => write!(f, "Z^{d}"),
            GroupCtx::Cyclic { n } => write!(f, "Z_{n}"),
            GroupCtx::Vector { p, n } => write!(f, "F_{p}^{n}"),
            GroupCtx::PrimeProduct { q, primes } => {
                write!(f, "Z_{q}")?;
                primes.iter().try_for_each(|p| write!(f, "xZ_{p}"))
            }
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(de)?;
        Ok(Element::new(&v))
    }
}

impl GroupCtx {
    pub fn lattice(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(SumsetError::BadParams("lattice dimension must be >= 1".into()));
        }
        Ok(GroupCtx::Lattice { d })
    }

    /// The integers, `Z^1`.
    pub fn integers() -> Self {
        GroupCtx::Lattice { d: 1 }
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        if !(2..=MAX_ORDER).contains(&n) {
            return Err(SumsetError::BadParams(format!("cyclic modulus {n} out of range")));
        }
        Ok(GroupCtx::Cyclic { n })
    }

    pub fn vector(p: u64, n: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(SumsetError::BadParams(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(SumsetError::BadParams("vector space dimension must be >= 1".into()));
        }
        let ctx = GroupCtx::Vector { p, n };
        ctx.checked_order()?;
        Ok(ctx)
    }

    pub fn prime_product(q: u64, primes: Vec<u64>) -> Result<Self> {
        if !is_prime(q) {
            return Err(SumsetError::BadParams(format!("{q} is not prime")));
        }
        for (i, &p) in primes.iter().enumerate() {
            if !is_prime(p) {
                return Err(SumsetError::BadParams(format!("{p} is not prime")));
            }
            if p == q || primes[..i].contains(&p) {
                return Err(SumsetError::BadParams("primes must be pairwise distinct".into()));
            }
        }
        let ctx = GroupCtx::PrimeProduct { q, primes };
        ctx.checked_order()?;
        Ok(ctx)
    }

    fn checked_order(&self) -> Result<u64> {
        let mut acc: u64 = 1;
        for r in self.radices().unwrap_or_default() {
            acc = acc
                .checked_mul(r)
                .filter(|&v| v <= MAX_ORDER)
                .ok_or_else(|| SumsetError::BadParams("group order exceeds 2^62".into()))?;
        }
        Ok(acc)
    }

    pub fn arity(&self) -> usize {
        match self {
            GroupCtx::Lattice { d } => *d,
            GroupCtx::Cyclic { .. } => 1,
            GroupCtx::Vector { n, .. } => *n,
            GroupCtx::PrimeProduct { primes, .. } => primes.len() + 1,
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, GroupCtx::Lattice { .. })
    }

    /// Per-coordinate moduli, or `None` for the lattice.
    pub fn radices(&self) -> Option<Vec<u64>> {
        match self {
            GroupCtx::Lattice { .. } => None,
            GroupCtx::Cyclic { n } => Some(vec![*n]),
            GroupCtx::Vector { p, n } => Some(vec![*p; *n]),
            GroupCtx::PrimeProduct { q, primes } => {
                let mut r = Vec::with_capacity(primes.len() + 1);
                r.push(*q);
                r.extend_from_slice(primes);
                Some(r)
            }
        }
    }

    /// `|G|` for finite contexts.
    pub fn order(&self) -> Option<u64> {
        self.radices().map(|r| r.iter().product())
    }

    pub fn zero(&self) -> Element {
        Element(SmallVec::from_elem(0, self.arity()))
    }

    fn check_arity(&self, x: &Element) -> Result<()> {
        if x.arity() != self.arity() {
            return Err(SumsetError::ContextMismatch(format!(
                "element has {} coordinates, context expects {}",
                x.arity(),
                self.arity()
            )));
        }
        Ok(())
    }

    /// Builds an element, reducing coordinates modulo the context's radices.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        let x = Element::new(coords);
        self.check_arity(&x)?;
        match self.radices() {
            Some(radices) => Ok(Element(
                coords
                    .iter()
                    .zip(&radices)
                    .map(|(&c, &r)| c.rem_euclid(r as i64))
                    .collect(),
            )),
            None => {
                if coords.iter().any(|c| c.abs() >= LATTICE_BOUND) {
                    return Err(SumsetError::Overflow);
                }
                Ok(x)
            }
        }
    }

    /// Checks that `x` is a valid, already-reduced element.
    pub fn validate(&self, x: &Element) -> Result<()> {
        self.check_arity(x)?;
        match self.radices() {
            Some(radices) => {
                for (&c, &r) in x.coords().iter().zip(&radices) {
                    if c < 0 || c as u64 >= r {
                        return Err(SumsetError::ContextMismatch(format!(
                            "coordinate {c} not reduced modulo {r}"
                        )));
                    }
                }
                Ok(())
            }
            None => {
                if x.coords().iter().any(|c| c.abs() >= LATTICE_BOUND) {
                    return Err(SumsetError::Overflow);
                }
                Ok(())
            }
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_arity(x)?;
        self.check_arity(y)?;
        match self.radices() {
            Some(radices) => Ok(Element(
                x.coords()
                    .iter()
                    .zip(y.coords())
                    .zip(&radices)
                    .map(|((&a, &b), &r)| ((a as i128 + b as i128).rem_euclid(r as i128)) as i64)
                    .collect(),
            )),
            None => {
                let mut out = SmallVec::with_capacity(x.arity());
                for (&a, &b) in x.coords().iter().zip(y.coords()) {
                    let s = a.checked_add(b).ok_or(SumsetError::Overflow)?;
                    if s.abs() >= LATTICE_BOUND {
                        return Err(SumsetError::Overflow);
                    }
                    out.push(s);
                }
                Ok(Element(out))
            }
        }
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.check_arity(x)?;
        match self.radices() {
            Some(radices) => Ok(Element(
                x.coords()
                    .iter()
                    .zip(&radices)
                    .map(|(&a, &r)| (-(a as i128)).rem_euclid(r as i128) as i64)
                    .collect(),
            )),
            None => {
                if x.coords().iter().any(|c| c.abs() >= LATTICE_BOUND) {
                    return Err(SumsetError::Overflow);
                }
                Ok(Element(x.coords().iter().map(|&a| -a).collect()))
            }
        }
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Result<Element> {
        self.add(x, &self.neg(y)?)
    }

    /// `t`-fold sum of `x` (negated when `t < 0`).
    pub fn scalar_mul(&self, t: i64, x: &Element) -> Result<Element> {
        self.check_arity(x)?;
        match self.radices() {
            Some(radices) => Ok(Element(
                x.coords()
                    .iter()
                    .zip(&radices)
                    .map(|(&a, &r)| ((t as i128 * a as i128).rem_euclid(r as i128)) as i64)
                    .collect(),
            )),
            None => {
                let mut out = SmallVec::with_capacity(x.arity());
                for &a in x.coords() {
                    let v = a.checked_mul(t).ok_or(SumsetError::Overflow)?;
                    if v.abs() >= LATTICE_BOUND {
                        return Err(SumsetError::Overflow);
                    }
                    out.push(v);
                }
                Ok(Element(out))
            }
        }
    }

    /// Mixed-radix index of `x`, first coordinate most significant.
    pub fn canonical_index(&self, x: &Element) -> Result<u64> {
        let radices = self
            .radices()
            .ok_or_else(|| SumsetError::Unsupported("canonical index on a lattice".into()))?;
        self.validate(x)?;
        Ok(x.coords()
            .iter()
            .zip(&radices)
            .fold(0u64, |acc, (&c, &r)| acc * r + c as u64))
    }

    pub fn from_index(&self, idx: u64) -> Result<Element> {
        let radices = self
            .radices()
            .ok_or_else(|| SumsetError::Unsupported("canonical index on a lattice".into()))?;
        let order: u64 = radices.iter().product();
        if idx >= order {
            return Err(SumsetError::BadParams(format!("index {idx} >= |G| = {order}")));
        }
        Ok(self.decode(idx, &radices))
    }

    fn decode(&self, mut idx: u64, radices: &[u64]) -> Element {
        let mut coords: SmallVec<[i64; 4]> = SmallVec::from_elem(0, radices.len());
        for (slot, &r) in coords.iter_mut().zip(radices).rev() {
            *slot = (idx % r) as i64;
            idx /= r;
        }
        Element(coords)
    }

    /// An index-level adder for a finite context.
    pub fn index_adder(&self) -> Option<IndexAdder> {
        let radices = self.radices()?;
        Some(match self {
            GroupCtx::Cyclic { n } => IndexAdder::Cyclic(*n),
            GroupCtx::Vector { p: 2, .. } => IndexAdder::Xor,
            _ => IndexAdder::Mixed(radices),
        })
    }
}

/// Group law on canonical indices. Inputs must be valid indices.
#[derive(Clone, Debug)]
pub enum IndexAdder {
    Cyclic(u64),
    Xor,
    Mixed(Vec<u64>),
}

impl IndexAdder {
    #[inline]
    pub fn add(&self, i: u64, j: u64) -> u64 {
        match self {
            IndexAdder::Cyclic(n) => {
                let s = i + j;
                if s >= *n {
                    s - n
                } else {
                    s
                }
            }
            IndexAdder::Xor => i ^ j,
            IndexAdder::Mixed(radices) => {
                let (mut i, mut j) = (i, j);
                let mut out = 0u64;
                let mut place = 1u64;
                for &r in radices.iter().rev() {
                    let mut d = i % r + j % r;
                    if d >= r {
                        d -= r;
                    }
                    out += d * place;
                    place *= r;
                    i /= r;
                    j /= r;
                }
                out
            }
        }
    }

    #[inline]
    pub fn neg(&self, i: u64) -> u64 {
        match self {
            IndexAdder::Cyclic(n) => {
                if i == 0 {
                    0
                } else {
                    n - i
                }
            }
            IndexAdder::Xor => i,
            IndexAdder::Mixed(radices) => {
                let mut i = i;
                let mut out = 0u64;
                let mut place = 1u64;
                for &r in radices.iter().rev() {
                    let d = i % r;
                    out += ((r - d) % r) * place;
                    place *= r;
                    i /= r;
                }
                out
            }
        }
    }
}
