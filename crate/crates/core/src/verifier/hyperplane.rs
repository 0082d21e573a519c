//! Covering lattice point sets by parallel translates of a subspace.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Result, SumsetError};
use crate::group::{Element, GroupCtx};
use crate::GSet;

/// Coordinates beyond this make the class keys risk overflow.
pub const COORD_LIMIT: i64 = 1 << 28;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverWitness {
    /// Spanning vectors of the subspace.
    pub basis: Vec<Vec<i64>>,
    /// One point of `A` in each translate.
    pub offsets: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneVerdict {
    pub covered: bool,
    pub witness: Option<CoverWitness>,
}

fn dim_of(a: &GSet) -> Result<usize> {
    match a.ctx() {
        GroupCtx::Lattice { d } if *d <= 3 => Ok(*d),
        GroupCtx::Lattice { d } => Err(SumsetError::DimensionTooLarge(*d)),
        _ => Err(SumsetError::Unsupported("hyperplane covers live in Z^d".into())),
    }
}

fn check_coords(a: &GSet) -> Result<()> {
    if a.iter().any(|x| x.coords().iter().any(|c| c.abs() > COORD_LIMIT)) {
        return Err(SumsetError::Overflow);
    }
    Ok(())
}

fn cross(u: &[i128], v: &[i128]) -> [i128; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

fn wide(x: &[i64]) -> Vec<i128> {
    x.iter().map(|&c| c as i128).collect()
}

/// Key identifying the translate of `span(basis)` through `x`, for `d <= 3`.
pub(crate) fn class_key(x: &[i64], basis: &[Vec<i64>]) -> Vec<i128> {
    let x = wide(x);
    match (x.len(), basis.len()) {
        (_, 0) => x,
        (2, 1) => {
            let v = wide(&basis[0]);
            vec![x[0] * v[1] - x[1] * v[0]]
        }
        (3, 1) => cross(&x, &wide(&basis[0])).to_vec(),
        (3, 2) => {
            let n = cross(&wide(&basis[0]), &wide(&basis[1]));
            vec![n[0] * x[0] + n[1] * x[1] + n[2] * x[2]]
        }
        (d, k) => panic!("subspace of dimension {k} in Z^{d} is not a proper covering family"),
    }
}

/// Positions of `A` grouped by translate of `span(basis)`, groups ordered by first member.
pub fn translate_classes(a: &GSet, basis: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let mut index: HashMap<Vec<i128>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, x) in a.iter().enumerate() {
        let key = class_key(x.coords(), basis);
        let c = *index.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(i);
    }
    classes
}

/// Primitive representative of a direction: coordinates divided by their gcd, first nonzero positive.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0, |g, &c| gcd(g, c));
    if g == 0 {
        return v.to_vec();
    }
    let mut out: Vec<i64> = v.iter().map(|c| c / g).collect();
    if out.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
        out.iter_mut().for_each(|c| *c = -*c);
    }
    out
}

fn diff(x: &Element, y: &Element) -> Vec<i64> {
    x.coords().iter().zip(y.coords()).map(|(a, b)| b - a).collect()
}

fn unit(d: usize, i: usize) -> Vec<i64> {
    (0..d).map(|j| (i == j) as i64).collect()
}

fn witness(a: &GSet, basis: Vec<Vec<i64>>, classes: &[Vec<usize>]) -> CoverWitness {
    CoverWitness { basis, offsets: classes.iter().map(|c| a.get(c[0])).collect() }
}

/// Differences between the first `m` entries of `pts`, as primitive directions without repeats.
fn directions(pts: &[Element], m: usize) -> Vec<Vec<i64>> {
    let m = m.min(pts.len());
    let mut seen = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let v = primitive(&diff(&pts[i], &pts[j]));
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
    }
    seen
}

/// Decides whether `A ⊆ Z^d` (`d <= 3`) lies in at most `t` parallel translates
/// of some `k`-dimensional subspace, returning a covering witness if so.
pub fn hyperplane_cover_check(a: &GSet, t: usize, k: usize) -> Result<HyperplaneVerdict> {
    let d = dim_of(a)?;
    if k >= d {
        return Err(SumsetError::BadParams(format!("subspace dimension {k} must be below d = {d}")));
    }
    check_coords(a)?;
    let covered = |basis: Vec<Vec<i64>>| -> Option<CoverWitness> {
        let classes = translate_classes(a, &basis);
        (classes.len() <= t).then(|| witness(a, basis, &classes))
    };
    if a.len() <= t {
        let basis: Vec<Vec<i64>> = (0..k).map(|i| unit(d, i)).collect();
        let classes = translate_classes(a, &basis);
        return Ok(HyperplaneVerdict { covered: true, witness: Some(witness(a, basis, &classes)) });
    }
    if k == 0 {
        return Ok(HyperplaneVerdict { covered: false, witness: None });
    }
    // Two of the first t+1 points share a translate, so their difference lies in the subspace.
    let pts = a.to_vec();
    for v in directions(&pts, t + 1) {
        if k == 1 {
            if let Some(w) = covered(vec![v]) {
                return Ok(HyperplaneVerdict { covered: true, witness: Some(w) });
            }
            continue;
        }
        // k = 2, d = 3: work with the lines parallel to v.
        let lines = translate_classes(a, std::slice::from_ref(&v));
        if lines.len() <= t {
            let e = (0..3).map(|i| unit(3, i)).find(|e| cross(&wide(e), &wide(&v)) != [0, 0, 0]).expect("v is nonzero");
            let w = covered(vec![v.clone(), e]).expect("each line lies in one plane");
            return Ok(HyperplaneVerdict { covered: true, witness: Some(w) });
        }
        let reps: Vec<Element> = lines.iter().take(t + 1).map(|c| a.get(c[0])).collect();
        for u in directions(&reps, t + 1) {
            if let Some(w) = covered(vec![v.clone(), u]) {
                return Ok(HyperplaneVerdict { covered: true, witness: Some(w) });
            }
        }
    }
    Ok(HyperplaneVerdict { covered: false, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(ctx: &GroupCtx, v: &[&[i64]]) -> GSet {
        GSet::from_coords(ctx, v.iter().copied()).unwrap()
    }

    #[test]
    fn examples() {
        let z2 = GroupCtx::lattice(2).unwrap();
        let a = pts(&z2, &[&[0, 0], &[1, 0], &[0, 1], &[2, 3]]);
        assert!(!hyperplane_cover_check(&a, 2, 1).unwrap().covered);
        assert!(hyperplane_cover_check(&a, 3, 1).unwrap().covered);
        let line = pts(&z2, &[&[0, 0], &[2, 1], &[4, 2], &[-6, -3]]);
        let v = hyperplane_cover_check(&line, 1, 1).unwrap();
        assert!(v.covered);
        assert_eq!(v.witness.unwrap().basis, vec![vec![2, 1]]);
        let grid: Vec<Vec<i64>> = (0..3).flat_map(|x| (0..3).map(move |y| vec![x, y])).collect();
        let g = GSet::from_coords(&z2, grid.iter().map(|v| v.as_slice())).unwrap();
        let v = hyperplane_cover_check(&g, 3, 1).unwrap();
        assert!(v.covered);
        assert_eq!(v.witness.unwrap().offsets.len(), 3);
        assert!(!hyperplane_cover_check(&g, 2, 1).unwrap().covered);
    }

    #[test]
    fn planes_in_z3() {
        let z3 = GroupCtx::lattice(3).unwrap();
        let cube: Vec<Vec<i64>> = (0..3).flat_map(|x| (0..3).flat_map(move |y| (0..3).map(move |z| vec![x, y, z]))).collect();
        let c = GSet::from_coords(&z3, cube.iter().map(|v| v.as_slice())).unwrap();
        assert!(hyperplane_cover_check(&c, 3, 2).unwrap().covered);
        assert!(!hyperplane_cover_check(&c, 2, 2).unwrap().covered);
        assert!(!hyperplane_cover_check(&c, 8, 1).unwrap().covered);
        assert!(hyperplane_cover_check(&c, 9, 1).unwrap().covered);
        let tilted = pts(&z3, &[&[0, 0, 0], &[1, 1, 0], &[0, 0, 1], &[5, 5, 7], &[2, 2, 3]]);
        let v = hyperplane_cover_check(&tilted, 1, 2).unwrap();
        assert!(v.covered);
    }

    #[test]
    fn zero_dimensional_and_errors() {
        let z2 = GroupCtx::lattice(2).unwrap();
        let a = pts(&z2, &[&[0, 0], &[1, 0]]);
        assert!(hyperplane_cover_check(&a, 2, 0).unwrap().covered);
        assert!(!hyperplane_cover_check(&a, 1, 0).unwrap().covered);
        assert!(hyperplane_cover_check(&a, 1, 2).is_err());
        let z4 = GroupCtx::lattice(4).unwrap();
        assert_eq!(hyperplane_cover_check(&GSet::empty(&z4), 1, 1), Err(SumsetError::DimensionTooLarge(4)));
    }
}
