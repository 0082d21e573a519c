//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are statements that cannot hold as written;
//! they are still run in full and reported as FAIL, and the process only
//! fails if one of them unexpectedly passes or any other criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;
use sumsetlab::constructions::lower_exponent::ap_plus_spikes_doubling;
use sumsetlab::constructions::neg_blt::neg_blt_bound;
use sumsetlab::constructions::{
    ap_plus_spikes, behrend_z_set, brute_tricolored, fpn_nonsaturating, fpn_targets, lift_construction, neg_blt_set,
    niveau_f2, niveau_zn, spike_pair,
};
use sumsetlab::rng::{instance_rng, random_finite, random_ints, random_subset};
use sumsetlab::saturator::{
    brute_min_subset, find_triple, greedy_diff_saturate, greedy_pair_saturate, greedy_self_saturate, saturating_cover,
    select_full_dim_subset,
};
use sumsetlab::set::{sumset_dense, sumset_sparse};
use sumsetlab::verifier::{
    harper_check, hyperplane_cover_check, niveau_containment_check, nonsaturation_ratio, theorem_bound_check,
    unique_doubling_check, unique_representations, walk_bound_certificate, Theorem,
};
use sumsetlab::{difference_set, sumset, GSet, GroupCtx, Rational, SumsetError};

use common::{coord_set, naive_min_lines, naive_sumset};

const SEED: u64 = 20240611;
const KNOWN_RED: &[usize] = &[4];

struct Report {
    pass: bool,
    detail: String,
}

fn report(pass: bool, detail: impl Into<String>) -> Report {
    Report { pass, detail: detail.into() }
}

fn c() -> Rational {
    Rational::new(1, 14)
}

/// The three random-pair families: `Z` with values in `[0, 200]`, `Z_31`, `Z_101`.
fn family_set<R: Rng>(rng: &mut R, family: usize, n: usize) -> GSet {
    match family {
        0 => random_ints(rng, 0, 200, n),
        1 => random_finite(rng, &GroupCtx::cyclic(31).unwrap(), n).unwrap(),
        _ => random_finite(rng, &GroupCtx::cyclic(101).unwrap(), n).unwrap(),
    }
}

const FAMILIES: [&str; 3] = ["Z[0,200]", "Z_31", "Z_101"];

fn criterion_1() -> Report {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for (f, name) in FAMILIES.iter().enumerate() {
        for i in 0..500u64 {
            let mut rng = instance_rng(SEED + 1, (f as u64) << 32 | i);
            let n = rng.gen_range(4..=30);
            let s = rng.gen_range(1..=6);
            let a = family_set(&mut rng, f, n);
            let b = family_set(&mut rng, f, n);
            let o = greedy_pair_saturate(&a, &b, s, c()).unwrap();
            let lhs_a = naive_sumset(&a, &o.b_sub).len();
            let lhs_b = naive_sumset(&b, &o.a_sub).len();
            let v = theorem_bound_check(&o, Theorem::Asym, c());
            count += 1;
            if !v.passed() || lhs_a != o.achieved_a || lhs_b != o.achieved_b || o.a_sub.len() > s || o.b_sub.len() > s {
                failures.push(format!("{name}#{i}"));
            }
        }
    }
    let elapsed = start.elapsed();
    report(
        failures.is_empty() && elapsed < Duration::from_secs(60),
        format!("{count} pairs, {} failures {:?}, {:.1}s (limit 60s)", failures.len(), failures, elapsed.as_secs_f64()),
    )
}

fn criterion_2() -> Report {
    let mut failures = Vec::new();
    let mut count = 0;
    for (f, name) in FAMILIES.iter().enumerate() {
        for i in 0..500u64 {
            let mut rng = instance_rng(SEED + 2, (f as u64) << 32 | i);
            let n = rng.gen_range(4..=30);
            let s = rng.gen_range(1..=6);
            let a = family_set(&mut rng, f, n);
            let o = greedy_self_saturate(&a, s, c()).unwrap();
            let sym_ok = theorem_bound_check(&o, Theorem::Sym, c()).passed()
                && naive_sumset(&a, &o.a_sub).len() == o.achieved_a
                && o.a_sub.len() <= s;
            let d = greedy_diff_saturate(&a, s, c()).unwrap();
            let diff_ok = theorem_bound_check(&d, Theorem::Diff, c()).passed()
                && difference_set(&a, &d.a_sub).unwrap().len() == d.achieved_a
                && naive_sumset(&a, &d.a_sub.negate().unwrap()).len() == d.achieved_a
                && d.a_sub.len() <= s;
            count += 1;
            if !sym_ok {
                failures.push(format!("sym {name}#{i}"));
            }
            if !diff_ok {
                failures.push(format!("diff {name}#{i}"));
            }
        }
    }
    report(failures.is_empty(), format!("{count} sets x 2 variants, {} failures {:?}", failures.len(), failures))
}

fn subsets_of_interval(hi: i64, max_size: usize) -> Vec<GSet> {
    (1u32..1 << (hi + 1))
        .filter(|m| m.count_ones() as usize <= max_size)
        .map(|m| GSet::ints(&(0..=hi).filter(|&x| m >> x & 1 == 1).collect::<Vec<_>>()))
        .collect()
}

fn criterion_3() -> Report {
    let start = Instant::now();
    let sets = subsets_of_interval(8, 5);
    let chunks: Vec<&[GSet]> = sets.chunks(sets.len().div_ceil(8)).collect();
    let results: Vec<(usize, usize, Vec<String>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let sets = &sets;
                scope.spawn(move || {
                    let (mut checked, mut zero) = (0, 0);
                    let mut bad = Vec::new();
                    for a in chunk.iter() {
                        for b in sets {
                            let cset = sumset(a, b).unwrap();
                            for k in 1..=3 {
                                match walk_bound_certificate(a, b, &cset, k) {
                                    Ok(cert) => {
                                        checked += 1;
                                        if !cert.valid {
                                            bad.push(format!("A={:?} B={:?} k={k}", a.values(), b.values()));
                                        }
                                    }
                                    Err(SumsetError::ZeroWalks) => zero += 1,
                                    Err(e) => bad.push(format!("error {e}")),
                                }
                            }
                        }
                    }
                    (checked, zero, bad)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let checked: usize = results.iter().map(|r| r.0).sum();
    let zero: usize = results.iter().map(|r| r.1).sum();
    let bad: Vec<&String> = results.iter().flat_map(|r| &r.2).collect();
    let elapsed = start.elapsed();
    report(
        bad.is_empty() && elapsed < Duration::from_secs(120),
        format!(
            "{checked} certificates over {} sets, {zero} with w = 0, {} invalid {:?}, {:.1}s (limit 120s)",
            sets.len(),
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_4() -> Report {
    let mut literal_misses = Vec::new();
    let mut piecewise_misses = 0;
    let mut bound_failures = 0;
    let (mut instances, mut draws) = (0, 0);
    for n in 1u64..=144 {
        for k in (1u64..).take_while(|k| k * k <= n) {
            instances += 1;
            let a = ap_plus_spikes(n, k).unwrap();
            let doubled = naive_sumset(&a, &a).len() as u64;
            if doubled != (k + 1) * (n - k + 1) + k - 1 {
                literal_misses.push((n, k));
            }
            if doubled != ap_plus_spikes_doubling(n, k) {
                piecewise_misses += 1;
            }
            for d in 0..200u64 {
                let mut rng = instance_rng(SEED + 4, n << 40 | k << 20 | d);
                let s = rng.gen_range(1..=n as usize);
                let a_s = random_subset(&mut rng, &a, s);
                let b_s = random_subset(&mut rng, &a, s);
                let lhs = sumset(&a_s, &b_s).unwrap().len() as u64;
                draws += 1;
                // |A_s + B_s| <= 2n + 2κs with κ = |A+A| / n
                if lhs * n > 2 * n * n + 2 * doubled * s as u64 {
                    bound_failures += 1;
                }
            }
        }
    }
    let ks: BTreeSet<u64> = literal_misses.iter().map(|m| m.1).collect();
    report(
        literal_misses.is_empty() && bound_failures == 0,
        format!(
            "{instances} instances: closed form missed on {} (k in {ks:?}; exact count is 2n-1 for k=1 and 3(n-1) for k=2, \
             {piecewise_misses} misses against that); {draws} random pairs, {bound_failures} bound failures",
            literal_misses.len()
        ),
    )
}

fn criterion_5() -> Report {
    let (n, k) = (20u64, 3u64);
    let (a, b) = spike_pair(n, k, Rational::new(1, 4)).unwrap();
    let total = naive_sumset(&a, &b).len() as u64;
    let search = brute_min_subset(&a, &b, (3 * n) as usize, 3);
    let none = matches!(search, Err(SumsetError::NotFound));
    report(
        total > k * n && none,
        format!("|A+B| = {total} > kn = {}; subsets of size <= 3 reaching 3n: {}", k * n, if none { "none" } else { "found" }),
    )
}

fn triple_ok(a: &GSet, b: &GSet) -> bool {
    match find_triple(a, b) {
        Ok(w) => w.len() <= 3 && w.is_subset(b) && naive_sumset(a, &w).len() >= 2 * a.len() - 1,
        Err(_) => false,
    }
}

fn criterion_6() -> Report {
    let mut failures = Vec::new();
    for i in 0..300u64 {
        let mut rng = instance_rng(SEED + 6, i);
        let n = rng.gen_range(1..=12);
        let a = random_ints(&mut rng, -50, 50, n);
        let b = random_ints(&mut rng, -50, 50, n);
        if !triple_ok(&a, &b) {
            failures.push(format!("Z#{i}"));
        }
    }
    for p in [31u64, 101] {
        let ctx = GroupCtx::cyclic(p).unwrap();
        for i in 0..300u64 {
            let mut rng = instance_rng(SEED + 6, p << 32 | i);
            let n = rng.gen_range(1..=(p / 4) as usize);
            let a = random_finite(&mut rng, &ctx, n).unwrap();
            let b = random_finite(&mut rng, &ctx, n).unwrap();
            if !triple_ok(&a, &b) {
                failures.push(format!("Z_{p}#{i}"));
            }
        }
    }
    report(failures.is_empty(), format!("900 pairs (Z, Z_31, Z_101), {} NotFound {:?}", failures.len(), failures))
}

/// Runs the cover and checks `(S' + T) ∪ (S + T') = S + T` independently.
fn cover_ok(s: &GSet, t: &GSet) -> (bool, GSet, GSet) {
    let o = saturating_cover(s, t, None).unwrap();
    let mut union = naive_sumset(&o.s_prime, t);
    union.extend(naive_sumset(s, &o.t_prime));
    let ok = o.covered && union == naive_sumset(s, t) && o.s_prime.is_subset(s) && o.t_prime.is_subset(t);
    (ok, o.s_prime, o.t_prime)
}

fn criterion_7() -> Report {
    let mut failures = Vec::new();
    let mut count = 0;
    for i in 0..40u64 {
        let mut rng = instance_rng(SEED + 7, i);
        let (x, y) = (rng.gen_range(2..=25), rng.gen_range(2..=25));
        let (s, t) = if i % 2 == 0 {
            let ctx = GroupCtx::cyclic(101).unwrap();
            (random_finite(&mut rng, &ctx, x).unwrap(), random_finite(&mut rng, &ctx, y).unwrap())
        } else {
            (random_ints(&mut rng, 0, 100, x), random_ints(&mut rng, 0, 100, y))
        };
        count += 1;
        if !cover_ok(&s, &t).0 {
            failures.push(format!("random#{i}"));
        }
    }
    let cube = GroupCtx::vector(2, 10).unwrap();
    for i in 0..20u64 {
        let mut rng = instance_rng(SEED + 7, 1000 + i);
        let gens: Vec<u64> = (0..rng.gen_range(2..=6)).map(|_| rng.gen_range(1..1024)).collect();
        let mut span: BTreeSet<u64> = BTreeSet::from([0]);
        for g in gens {
            let next: Vec<u64> = span.iter().map(|x| x ^ g).collect();
            span.extend(next);
        }
        let (u, v) = (rng.gen_range(0..1024u64), rng.gen_range(0..1024u64));
        let s = GSet::from_indices(&cube, span.iter().map(|x| x ^ u)).unwrap();
        let t = GSet::from_indices(&cube, span.iter().map(|x| x ^ v)).unwrap();
        count += 1;
        if !cover_ok(&s, &t).0 {
            failures.push(format!("coset#{i}"));
        }
    }
    let mut forced_total = 0;
    for (r, n) in [(2u64, 1usize), (2, 2), (3, 1), (3, 2)] {
        let (a, a0) = behrend_z_set(r, n).unwrap();
        let (ok, sp, tp) = cover_ok(&a, &a);
        let (forced, _) = unique_doubling_check(&a, &a0).unwrap();
        forced_total += forced.len();
        let chosen = sp.union(&tp).unwrap();
        count += 1;
        if !ok || forced != a0 || !forced.is_subset(&chosen) {
            failures.push(format!("behrend r={r} n={n}"));
        }
    }
    for (p, n) in [(2u64, 4usize), (2, 5), (3, 3), (3, 4)] {
        let triples = brute_tricolored(p, n - 2, 16, SEED).unwrap();
        let a = fpn_nonsaturating(p, n, &triples).unwrap();
        let unique: BTreeSet<(usize, usize)> = unique_representations(&a).unwrap().into_iter().collect();
        let targets_unique = fpn_targets(p, n, &triples).unwrap().iter().all(|(_, x, y)| {
            let (i, j) = (a.position(x).unwrap(), a.position(y).unwrap());
            unique.contains(&(i.min(j), i.max(j)))
        });
        count += 1;
        if !cover_ok(&a, &a).0 || !targets_unique {
            failures.push(format!("fpn p={p} n={n}"));
        }
    }
    report(
        failures.is_empty(),
        format!("{count} covers, {} failures {:?}; Behrend forced elements all chosen ({forced_total})", failures.len(), failures),
    )
}

fn planar(points: &[(i64, i64)]) -> GSet {
    let ctx = GroupCtx::lattice(2).unwrap();
    GSet::from_coords(&ctx, points.iter().map(|p| [p.0, p.1]).collect::<Vec<_>>().iter().map(|p| p.as_slice())).unwrap()
}

fn lattice_cube(d: usize, side: i64) -> GSet {
    let ctx = GroupCtx::lattice(d).unwrap();
    let total = side.pow(d as u32);
    let pts: Vec<Vec<i64>> =
        (0..total).map(|mut i| (0..d).map(|_| { let c = i % side; i /= side; c }).collect()).collect();
    GSet::from_coords(&ctx, pts.iter().map(|p| p.as_slice())).unwrap()
}

fn criterion_8() -> Report {
    let mut disagreements = Vec::new();
    for i in 0..200u64 {
        let mut rng = instance_rng(SEED + 8, i);
        let side = rng.gen_range(2..=8);
        let size = rng.gen_range(1..=20usize);
        let pts: BTreeSet<(i64, i64)> = (0..size).map(|_| (rng.gen_range(0..side), rng.gen_range(0..side))).collect();
        let pts: Vec<(i64, i64)> = pts.into_iter().collect();
        let t = rng.gen_range(1..=3);
        let v = hyperplane_cover_check(&planar(&pts), t, 1).unwrap();
        let oracle = naive_min_lines(&pts) <= t;
        let witness_ok = v.witness.as_ref().is_none_or(|w| w.offsets.len() <= t);
        if v.covered != oracle || !witness_ok {
            disagreements.push(i);
        }
    }
    let mut selections = 0;
    let mut selection_failures = Vec::new();
    let mut pools: Vec<(String, GSet, usize)> = vec![
        ("cube 2x4".into(), lattice_cube(2, 4), 2),
        ("cube 2x6".into(), lattice_cube(2, 6), 2),
        ("cube 3x3".into(), lattice_cube(3, 3), 3),
        ("cube 3x5".into(), lattice_cube(3, 5), 3),
    ];
    for i in 0..10u64 {
        let mut rng = instance_rng(SEED + 8, 1000 + i);
        let pts: BTreeSet<(i64, i64)> = (0..40).map(|_| (rng.gen_range(0..12), rng.gen_range(0..12))).collect();
        pools.push((format!("random#{i}"), planar(&pts.into_iter().collect::<Vec<_>>()), 2));
    }
    for (name, pool, d) in &pools {
        for t in 1..=2 {
            for k in 0..*d {
                match select_full_dim_subset(pool, t, k, *d) {
                    Ok(x) => {
                        selections += 1;
                        if !x.is_subset(pool) || hyperplane_cover_check(&x, t, k).unwrap().covered {
                            selection_failures.push(format!("{name} t={t} k={k}"));
                        }
                    }
                    Err(SumsetError::Infeasible(_)) => {}
                    Err(e) => selection_failures.push(format!("{name}: {e}")),
                }
            }
        }
    }
    let mut blt_failures = 0;
    let mut draws = 0;
    for (d, t, n) in [(2usize, 2usize, 50usize), (3, 2, 60)] {
        let c = neg_blt_set(d, t, n).unwrap();
        for i in 0..100u64 {
            let mut rng = instance_rng(SEED + 8, (2000 + d as u64) << 16 | i);
            let s = rng.gen_range(1..=10);
            let sub = random_subset(&mut rng, &c.set, s);
            draws += 1;
            if naive_sumset(&sub, &sub).len() > neg_blt_bound(&c, s) {
                blt_failures += 1;
            }
        }
    }
    report(
        disagreements.is_empty() && selection_failures.is_empty() && selections > 0 && blt_failures == 0,
        format!(
            "oracle disagreements {}/200 {:?}; {selections} selections, {} covered {:?}; neg-blt {blt_failures}/{draws} bound failures",
            disagreements.len(),
            disagreements,
            selection_failures.len(),
            selection_failures
        ),
    )
}

fn harper_cases() -> (usize, Vec<String>) {
    let cube = GroupCtx::vector(2, 10).unwrap();
    let mut sets: Vec<(String, Vec<u64>)> = Vec::new();
    for center in 0..1024u64 {
        for q in 0..=10u32 {
            sets.push((format!("ball({center},{q})"), (0..1024).filter(|x: &u64| (x ^ center).count_ones() <= q).collect()));
        }
    }
    for dim in 0..=10u32 {
        for free in [0u64, 0b1010101010, 0b1111100000, 0b0000011111] {
            let mask = free & ((1 << dim) - 1) | ((1u64 << dim) - 1) & !free;
            sets.push((format!("subcube({mask:b})"), (0..1024).filter(|x| x & !mask == 0).collect()));
        }
    }
    for i in 0..2000u64 {
        let mut rng = instance_rng(SEED + 9, i);
        let size = rng.gen_range(1..=1024usize);
        let a = random_finite(&mut rng, &cube, size).unwrap();
        sets.push((format!("random#{i}"), a.indices().unwrap().to_vec()));
    }
    let mut failures = Vec::new();
    for (name, idx) in &sets {
        let a = GSet::from_indices(&cube, idx.iter().copied()).unwrap();
        let v = harper_check(&a).unwrap();
        let mut nb = [false; 1024];
        for &x in idx {
            nb[x as usize] = true;
            (0..10).for_each(|i| nb[(x ^ 1 << i) as usize] = true);
        }
        let grown = nb.iter().filter(|&&b| b).count() as u64;
        let q = (0..=10i64).take_while(|&q| sumsetlab::arith::ball_size(10, q) <= idx.len() as u64).last().unwrap();
        let oracle = grown >= sumsetlab::arith::ball_size(10, q + 1);
        if !v.passed() || !oracle {
            failures.push(name.clone());
        }
    }
    (sets.len(), failures)
}

fn lift_cases() -> (usize, Vec<String>) {
    let mut instances: Vec<(String, GSet)> = Vec::new();
    for (q, primes) in [(3u64, vec![5u64, 7, 11, 13]), (2, vec![3, 5, 7, 11]), (5, vec![7, 11, 13, 17])] {
        let (a, _) = niveau_zn(q, &primes, Rational::new(1, 2), Rational::new(1, 4)).unwrap();
        instances.push((format!("niveau-zn {q} {primes:?}"), a));
    }
    for i in 0..20u64 {
        let mut rng = instance_rng(SEED + 9, 5000 + i);
        let n = rng.gen_range(10..400u64);
        let ctx = GroupCtx::cyclic(n).unwrap();
        let size = rng.gen_range(1..=n as usize / 2);
        instances.push((format!("cyclic#{i}"), random_finite(&mut rng, &ctx, size).unwrap()));
    }
    let mut failures = Vec::new();
    for (name, a) in &instances {
        let l = lift_construction(a, None).unwrap();
        let moduli = a.ctx().radices().unwrap();
        let back: BTreeSet<Vec<i64>> =
            l.hat.values().iter().map(|&r| moduli.iter().map(|&m| r.rem_euclid(m as i64)).collect()).collect();
        let in_range = l.hat.values().iter().all(|&r| r >= 0 && (r as u64) < l.modulus);
        let doubled = sumset(a, a).unwrap().len();
        let hat2 = sumset(&l.hat, &l.hat).unwrap().len();
        let hat_p2 = sumset(&l.hat_p, &l.hat_p).unwrap().len();
        let ok = l.hat.len() == a.len()
            && l.hat_p.len() == a.len()
            && in_range
            && back == coord_set(a)
            && hat2 <= 2 * doubled
            && hat_p2 == hat2
            && l.p > 2 * l.modulus;
        if !ok {
            failures.push(name.clone());
        }
    }
    (instances.len(), failures)
}

fn criterion_9() -> Report {
    let (a, meta) = niveau_f2(2, 16, Rational::from_integer(1), Rational::new(1, 4)).unwrap();
    let contain = niveau_containment_check(&a, &meta).unwrap();
    let sums = sumset(&a, &a).unwrap();
    let oracle_ok = sums.indices().unwrap().iter().all(|&x| x >> 16 == 0 || (x & 0xffff).count_ones() <= 8);
    let (harper_n, harper_fail) = harper_cases();
    let (lift_n, lift_fail) = lift_cases();
    let eps = Rational::new(1, 20);
    let first = serde_json::to_string(&nonsaturation_ratio(&a, eps, 3, 100, SEED).unwrap()).unwrap();
    let second = serde_json::to_string(&nonsaturation_ratio(&a, eps, 3, 100, SEED).unwrap()).unwrap();
    println!("    nonsaturation table: {first}");
    report(
        contain.passed() && oracle_ok && harper_fail.is_empty() && lift_fail.is_empty() && first == second,
        format!(
            "containment {} (|A| = {}, |A+A| = {}); Harper {}/{harper_n} failures {:?}; lift {}/{lift_n} failures {:?}; ratio table stable: {}",
            if contain.passed() && oracle_ok { "holds" } else { "violated" },
            a.len(),
            sums.len(),
            harper_fail.len(),
            harper_fail.iter().take(3).collect::<Vec<_>>(),
            lift_fail.len(),
            lift_fail,
            first == second
        ),
    )
}

fn random_ctx<R: Rng>(rng: &mut R) -> GroupCtx {
    match rng.gen_range(0..3) {
        0 => GroupCtx::cyclic(rng.gen_range(2..=300)).unwrap(),
        1 => {
            let (p, n) = [(2u64, 1usize), (2, 6), (2, 9), (3, 4), (5, 3), (7, 2)][rng.gen_range(0..6)];
            GroupCtx::vector(p, n).unwrap()
        }
        _ => {
            let (q, primes) = [(2u64, vec![3u64, 5]), (3, vec![5, 7]), (2, vec![3, 5, 7]), (5, vec![7])][rng.gen_range(0..4)].clone();
            GroupCtx::prime_product(q, primes).unwrap()
        }
    }
}

fn cauchy_davenport(p: u64) -> (usize, usize) {
    let ctx = GroupCtx::cyclic(p).unwrap();
    let sets: Vec<GSet> =
        (1u64..1 << p).map(|m| GSet::from_indices(&ctx, (0..p).filter(|x| m >> x & 1 == 1)).unwrap()).collect();
    let chunks: Vec<&[GSet]> = sets.chunks(sets.len().div_ceil(8)).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|chunk| {
                let sets = &sets;
                scope.spawn(move || {
                    let mut bad = 0;
                    for a in chunk.iter() {
                        for b in sets {
                            if sumset(a, b).unwrap().len() < (a.len() + b.len() - 1).min(p as usize) {
                                bad += 1;
                            }
                        }
                    }
                    bad
                })
            })
            .collect();
        (sets.len() * sets.len(), handles.into_iter().map(|h| h.join().unwrap()).sum())
    })
}

fn criterion_10() -> Report {
    let mut mismatches = 0;
    for i in 0..10_000u64 {
        let mut rng = instance_rng(SEED + 10, i);
        let ctx = random_ctx(&mut rng);
        let order = ctx.order().unwrap() as usize;
        let (x, y) = (rng.gen_range(0..=order.min(40)), rng.gen_range(0..=order));
        let a = random_finite(&mut rng, &ctx, x).unwrap();
        let b = random_finite(&mut rng, &ctx, y).unwrap();
        let dense = sumset_dense(&a, &b).unwrap();
        let sparse = sumset_sparse(&a, &b).unwrap();
        if dense != sparse || coord_set(&dense) != naive_sumset(&a, &b) {
            mismatches += 1;
        }
    }
    let (n7, bad7) = cauchy_davenport(7);
    let (n11, bad11) = cauchy_davenport(11);
    report(
        mismatches == 0 && bad7 == 0 && bad11 == 0,
        format!("10000 instances, {mismatches} mismatches; Cauchy-Davenport Z_7 {bad7}/{n7}, Z_11 {bad11}/{n11} violations"),
    )
}

fn main() {
    let criteria: [fn() -> Report; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    // optional positional arguments select criteria by number; flags from the test runner are ignored
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let selected: Vec<usize> = (1..=criteria.len()).filter(|id| wanted.is_empty() || wanted.contains(id)).collect();
    let results: Vec<(usize, Report, Duration)> = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&id| {
                let f = criteria[id - 1];
                scope.spawn(move || {
                    let start = Instant::now();
                    let r = f();
                    (id, r, start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut ok = true;
    for (id, r, elapsed) in &results {
        let id = *id;
        let red = KNOWN_RED.contains(&id);
        let tag = match (r.pass, red) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (known: not attainable as stated)",
            (true, true) => "PASS (unexpected for a known-red criterion)",
        };
        println!("criterion {id:>2}: {tag} [{:.1}s] {}", elapsed.as_secs_f64(), r.detail);
        if r.pass == red {
            ok = false;
        }
    }
    if !ok {
        std::process::exit(1);
    }
}
