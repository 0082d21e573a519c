#![allow(dead_code)]

use std::collections::BTreeSet;

use sumsetlab::GSet;

/// `A + B` by adding every pair of coordinate vectors, reducing by the radices.
pub fn naive_sumset(a: &GSet, b: &GSet) -> BTreeSet<Vec<i64>> {
    let radices = a.ctx().radices();
    let mut out = BTreeSet::new();
    for x in a.iter() {
        for y in b.iter() {
            let s: Vec<i64> = match &radices {
                Some(r) => x
                    .coords()
                    .iter()
                    .zip(y.coords())
                    .zip(r)
                    .map(|((u, v), m)| (u + v).rem_euclid(*m as i64))
                    .collect(),
                None => x.coords().iter().zip(y.coords()).map(|(u, v)| u + v).collect(),
            };
            out.insert(s);
        }
    }
    out
}

pub fn coord_set(a: &GSet) -> BTreeSet<Vec<i64>> {
    a.iter().map(|x| x.coords().to_vec()).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Fewest parallel lines covering a planar set, trying every primitive
/// direction with coordinates in `[-R, R]`, `R` the coordinate spread.
pub fn naive_min_lines(pts: &[(i64, i64)]) -> usize {
    if pts.len() <= 1 {
        return pts.len();
    }
    let lo = pts.iter().map(|p| p.0.min(p.1)).min().unwrap();
    let hi = pts.iter().map(|p| p.0.max(p.1)).max().unwrap();
    let r = hi - lo;
    let mut best = pts.len();
    for u in -r..=r {
        for v in -r..=r {
            if (u, v) == (0, 0) || gcd(u, v) != 1 {
                continue;
            }
            let lines: BTreeSet<i64> = pts.iter().map(|&(x, y)| v * x - u * y).collect();
            best = best.min(lines.len());
        }
    }
    best
}

/// Whether `x` contains a nontrivial three-term progression `a + c = 2b` in
/// `Z_m^n` (coordinates reduced modulo `m`).
pub fn has_three_ap(points: &[Vec<i64>], m: i64) -> bool {
    for a in points {
        for c in points {
            if a == c {
                continue;
            }
            for b in points {
                if b.iter().zip(a.iter().zip(c)).all(|(bi, (ai, ci))| (2 * bi - ai - ci).rem_euclid(m) == 0) {
                    return true;
                }
            }
        }
    }
    false
}
