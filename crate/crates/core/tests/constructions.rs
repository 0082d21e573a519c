mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use sumsetlab::constructions::lower_exponent::{ap_plus_spikes_closed_form, ap_plus_spikes_doubling};
use sumsetlab::constructions::{
    ap_plus_spikes, behrend_sphere, behrend_z_set, construct, digit_map, lift_construction, niveau_f2, niveau_zn,
    spike_pair, ConstructionParams,
};
use sumsetlab::{sumset, GSet, GroupCtx, Rational};

use common::has_three_ap;

/// `|A + A|` for a set of integers, by brute force.
fn int_doubling(values: &[i64]) -> usize {
    let mut sums = HashSet::new();
    for x in values {
        for y in values {
            sums.insert(x + y);
        }
    }
    sums.len()
}

#[test]
fn ap_spikes_piecewise_count() {
    for n in 1u64..=400 {
        for k in (1..=n).take_while(|k| k * k <= n) {
            let a = ap_plus_spikes(n, k).unwrap();
            assert_eq!(a.len() as u64, n);
            let got = int_doubling(&a.values()) as u64;
            assert_eq!(got, ap_plus_spikes_doubling(n, k), "n = {n}, k = {k}");
            if k >= 3 {
                assert_eq!(got, ap_plus_spikes_closed_form(n, k), "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn spike_pair_shape() {
    let (a, b) = spike_pair(100, 5, Rational::new(1, 10)).unwrap();
    assert_eq!(b.values(), (1..=100).collect::<Vec<_>>());
    assert_eq!(a.len(), 105);
    assert!(a.values().iter().all(|&x| (1..=100).contains(&x) || x > 100));
}

#[test]
fn behrend_spheres_are_progression_free() {
    for r in 1..=3u64 {
        for n in 1..=3usize {
            let (t, x) = behrend_sphere(r, n).unwrap();
            let pts: Vec<Vec<i64>> = x.iter().map(|e| e.coords().to_vec()).collect();
            assert!(pts.iter().all(|p| p.iter().map(|c| c * c).sum::<i64>() as u64 == t));
            assert!(pts.iter().all(|p| p.iter().all(|&c| (1..=r as i64).contains(&c))));
            assert!(!has_three_ap(&pts, 2 * r as i64), "r = {r}, n = {n}");
            // smallest maximiser over all sphere sizes
            let mut counts = std::collections::BTreeMap::<i64, usize>::new();
            let total = (r as usize).pow(n as u32);
            for i in 0..total {
                let mut v = i;
                let mut s = 0i64;
                for _ in 0..n {
                    let c = (v % r as usize) as i64 + 1;
                    s += c * c;
                    v /= r as usize;
                }
                *counts.entry(s).or_default() += 1;
            }
            let best = counts.values().max().unwrap();
            let first = counts.iter().find(|(_, c)| *c == best).unwrap().0;
            assert_eq!((*first as u64, *best), (t, x.len()));
        }
    }
}

#[test]
fn digit_map_is_freiman_faithful() {
    for (r, n) in [(2u64, 2usize), (2, 3), (3, 2), (3, 3)] {
        let (_, x) = behrend_sphere(r, n).unwrap();
        let pts: Vec<Vec<i64>> = x.iter().map(|e| e.coords().to_vec()).collect();
        let img: Vec<i64> = pts.iter().map(|p| digit_map(p, r)).collect();
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                for k in 0..pts.len() {
                    for l in 0..pts.len() {
                        let lattice = pts[i].iter().zip(&pts[j]).zip(pts[k].iter().zip(&pts[l])).all(|((a, b), (c, d))| a + b == c + d);
                        assert_eq!(lattice, img[i] + img[j] == img[k] + img[l]);
                    }
                }
            }
        }
    }
}

#[test]
fn behrend_z_example() {
    let (a, a0) = behrend_z_set(2, 2).unwrap();
    assert_eq!(a0.values(), vec![6, 9]);
    assert_eq!(a.len(), 18);
    assert!(a0.is_subset(&a));
}

#[test]
fn niveau_f2_layers() {
    for m in [4usize, 9, 12, 16] {
        for (tn, td) in [(1u64, 4u64), (1, 2), (1, 1)] {
            let Ok((a, meta)) = niveau_f2(2, m, Rational::new(tn, td), Rational::new(1, 4)) else { continue };
            let mask = (1u64 << m) - 1;
            let idx: Vec<u64> = a.indices().unwrap().to_vec();
            let b0: Vec<u64> = idx.iter().filter(|&&x| x >> m == 1).map(|x| x & mask).collect();
            let a0: Vec<u64> = idx.iter().filter(|&&x| x >> m == 0).map(|x| x & mask).collect();
            assert_eq!((a0.len(), b0.len()), (meta.a0_size, meta.b0_size));
            let half = m as u32 / 2;
            for x in &b0 {
                for y in &b0 {
                    assert!((x ^ y).count_ones() <= half);
                }
                for y in &a0 {
                    assert!((x ^ y).count_ones() <= half);
                }
            }
        }
    }
}

#[test]
fn niveau_zn_shape() {
    let (a, meta) = niveau_zn(3, &[5, 7, 11, 13], Rational::new(1, 2), Rational::new(1, 4)).unwrap();
    assert_eq!(meta.head, 1);
    for x in a.iter() {
        let tail = &x.coords()[1..];
        if x.coords()[0] == 0 {
            assert!(meta.tail_weight(&x) <= meta.a0_weight);
        } else {
            assert!(tail.iter().all(|&c| c == 0 || c == 1));
            assert!(tail.iter().filter(|&&c| c == 1).count() <= meta.b0_weight);
        }
    }
}

#[test]
fn generators_are_deterministic() {
    let params = [
        r#"{"variant":"tricolored","p":3,"n":2,"budget":8,"seed":5}"#,
        r#"{"variant":"fpn","p":2,"n":5,"budget":8,"seed":1}"#,
        r#"{"variant":"neg-blt","d":2,"t":2,"n":40}"#,
        r#"{"variant":"niveau-zn","q":2,"primes":[3,5,7,11],"theta":"1/4","delta":"1/4"}"#,
        r#"{"variant":"lower-exponent","d":2,"m":16,"delta":"1/2"}"#,
    ];
    for p in params {
        let p: ConstructionParams = serde_json::from_str(p).unwrap();
        let x = construct(&p).unwrap();
        let y = construct(&p).unwrap();
        assert_eq!(serde_json::to_string(&x).unwrap(), serde_json::to_string(&y).unwrap());
    }
}

fn cyclic_set() -> impl Strategy<Value = GSet> {
    (2u64..500).prop_flat_map(|n| {
        prop::collection::vec(0..n, 1..30).prop_map(move |v| GSet::from_indices(&GroupCtx::cyclic(n).unwrap(), v).unwrap())
    })
}

proptest! {
    #[test]
    fn lift_preserves_additive_structure(a in cyclic_set()) {
        let l = lift_construction(&a, None).unwrap();
        prop_assert!(l.p > 2 * l.modulus);
        prop_assert_eq!(l.hat.len(), a.len());
        prop_assert_eq!(l.hat_p.len(), a.len());
        let reps = l.hat.values();
        prop_assert!(reps.iter().all(|&r| (0..l.modulus as i64).contains(&r)));
        let zp: Vec<i64> = l.hat_p.values();
        prop_assert_eq!(&reps, &zp);
        prop_assert_eq!(sumset(&l.hat, &l.hat).unwrap().len(), sumset(&l.hat_p, &l.hat_p).unwrap().len());
        for &x in &reps {
            for &y in &reps {
                for &z in &reps {
                    for &w in &reps {
                        prop_assert_eq!(x + y == z + w, (x + y - z - w).rem_euclid(l.p as i64) == 0);
                    }
                }
            }
        }
    }
}
