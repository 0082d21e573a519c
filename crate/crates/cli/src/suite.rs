use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sumsetlab::constructions::lower_exponent::{ap_plus_spikes_closed_form, ap_plus_spikes_doubling};
use sumsetlab::constructions::neg_blt::neg_blt_bound;
use sumsetlab::constructions::{
    ap_plus_spikes, behrend_z_set, brute_tricolored, fpn_nonsaturating, lift_construction, neg_blt_set, niveau_f2,
    niveau_zn, spike_pair,
};
use sumsetlab::rng::{instance_seed, random_finite, random_ints, random_subset};
use sumsetlab::saturator::{
    brute_min_subset, find_triple, greedy_diff_saturate, greedy_pair_saturate, greedy_self_saturate,
    saturating_cover, select_full_dim_subset, SaturationOutcome, MAX_C,
};
use sumsetlab::verifier::{
    harper_check, hyperplane_cover_check, niveau_containment_check, nonsaturation_ratio, theorem_bound_check,
    unique_doubling_check, walk_bound_certificate, Theorem, Verdict,
};
use sumsetlab::{doubling_kappa, kappa_ab, sumset, GSet, GroupCtx, Rational, SumsetError};

use crate::error::{CliError, CliResult};
use crate::io::{read_json_config, write_json, VERSION};
use crate::report::{ExperimentReport, Record};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Theorems,
    Constructions,
    Covers,
    Niveau,
    All,
}

impl SuiteName {
    fn label(self) -> &'static str {
        match self {
            SuiteName::Theorems => "theorems",
            SuiteName::Constructions => "constructions",
            SuiteName::Covers => "covers",
            SuiteName::Niveau => "niveau",
            SuiteName::All => "all",
        }
    }
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    pub suite: SuiteName,
    /// JSON file with any of: seed, max_n, instances, jobs, out_dir. Flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Defaults to SUMSETLAB_SEED, then 0.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Largest random set size in the theorem battery (at least 4).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Random instances per family.
    #[arg(long)]
    pub instances: Option<usize>,
    /// Worker threads; 0 uses every core.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: Option<u64>,
    #[serde(alias = "max-n")]
    pub max_n: Option<usize>,
    pub instances: Option<usize>,
    pub jobs: Option<usize>,
    #[serde(alias = "out-dir")]
    pub out_dir: Option<PathBuf>,
}

/// The settings that determine a suite's output; thread count and output
/// location do not.
#[derive(Clone, Debug, Serialize)]
pub struct Settings {
    pub suite: SuiteName,
    pub seed: u64,
    pub max_n: usize,
    pub instances: usize,
}

pub const DEFAULT_MAX_N: usize = 30;
pub const DEFAULT_INSTANCES: usize = 50;

fn env_seed() -> CliResult<Option<u64>> {
    match std::env::var("SUMSETLAB_SEED") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| CliError::Params(format!("SUMSETLAB_SEED = {v:?} is not a u64"))),
        Err(_) => Ok(None),
    }
}

fn resolve(args: &SuiteArgs) -> CliResult<(Settings, usize, PathBuf)> {
    let cfg: SuiteConfig = match &args.config {
        Some(p) => read_json_config(p)?,
        None => SuiteConfig::default(),
    };
    let seed = match args.seed.or(cfg.seed) {
        Some(s) => s,
        None => env_seed()?.unwrap_or(0),
    };
    let settings = Settings {
        suite: args.suite,
        seed,
        max_n: args.max_n.or(cfg.max_n).unwrap_or(DEFAULT_MAX_N),
        instances: args.instances.or(cfg.instances).unwrap_or(DEFAULT_INSTANCES),
    };
    if settings.max_n < 4 {
        return Err(CliError::Params(format!("max-n must be at least 4, got {}", settings.max_n)));
    }
    if settings.instances == 0 {
        return Err(CliError::Params("instances must be positive".into()));
    }
    let jobs = args.jobs.or(cfg.jobs).unwrap_or(0);
    let out_dir = args.out_dir.clone().or(cfg.out_dir).unwrap_or_else(|| PathBuf::from("sumsetlab-out"));
    Ok((settings, jobs, out_dir))
}

struct Measure {
    check: String,
    ctx: String,
    n: usize,
    s: Option<usize>,
    kappa: Option<String>,
    achieved: String,
    bound: Option<String>,
    pass: Option<bool>,
    witness: Value,
}

impl Measure {
    fn new(check: &str, ctx: &GroupCtx, n: usize) -> Self {
        Measure {
            check: check.into(),
            ctx: ctx.to_string(),
            n,
            s: None,
            kappa: None,
            achieved: String::new(),
            bound: None,
            pass: None,
            witness: Value::Null,
        }
    }

    fn theorem(check: &str, ctx: &GroupCtx, o: &SaturationOutcome, v: Verdict) -> Self {
        Measure {
            s: Some(o.s_budget),
            kappa: Some(o.kappa.to_string()),
            achieved: v.witness["lhs"].to_string(),
            bound: v.witness["bound"].as_f64().map(fmt_f64),
            pass: v.pass,
            witness: v.witness,
            ..Measure::new(check, ctx, o.n)
        }
    }
}

fn fmt_f64(x: f64) -> String {
    format!("{x:.4}")
}

type Job = Box<dyn Fn(&mut ChaCha8Rng) -> sumsetlab::Result<Vec<Measure>> + Send + Sync>;

struct Task {
    suite: &'static str,
    label: String,
    stream: u64,
    job: Job,
}

/// Stream ids keep instance `i` of a given check fixed as other checks or
/// instance counts change.
fn stream(suite: u64, check: u64, i: u64) -> u64 {
    suite << 48 | check << 32 | i
}

fn task(suite: &'static str, label: impl Into<String>, stream: u64, job: Job) -> Task {
    Task { suite, label: label.into(), stream, job }
}

const FAMILIES: [(&str, u64); 3] = [("Z[0,200]", 0), ("Z_31", 31), ("Z_101", 101)];

fn family_ctx(modulus: u64) -> GroupCtx {
    if modulus == 0 {
        GroupCtx::lattice(1).expect("Z")
    } else {
        GroupCtx::cyclic(modulus).expect("valid modulus")
    }
}

fn family_set(rng: &mut ChaCha8Rng, modulus: u64, n: usize) -> sumsetlab::Result<GSet> {
    if modulus == 0 {
        Ok(random_ints(rng, 0, 200, n))
    } else {
        random_finite(rng, &family_ctx(modulus), n)
    }
}

fn theorem_tasks(st: &Settings) -> Vec<Task> {
    const S: &str = "theorems";
    let c = MAX_C;
    let mut tasks = Vec::new();
    let checks = [("greedy-pair", Theorem::Asym), ("greedy-self", Theorem::Sym), ("greedy-diff", Theorem::Diff)];
    for (ci, (check, theorem)) in checks.into_iter().enumerate() {
        for (fi, (fam, modulus)) in FAMILIES.into_iter().enumerate() {
            let hi = if modulus == 0 { st.max_n } else { st.max_n.min(modulus as usize) };
            for i in 0..st.instances {
                let job: Job = Box::new(move |rng| {
                    let n = rng.gen_range(4..=hi);
                    let s = rng.gen_range(1..=6);
                    let a = family_set(rng, modulus, n)?;
                    let o = match theorem {
                        Theorem::Asym => {
                            let b = family_set(rng, modulus, n)?;
                            greedy_pair_saturate(&a, &b, s, c)?
                        }
                        Theorem::Sym => greedy_self_saturate(&a, s, c)?,
                        _ => greedy_diff_saturate(&a, s, c)?,
                    };
                    let v = theorem_bound_check(&o, theorem, c);
                    Ok(vec![Measure::theorem(check, a.ctx(), &o, v)])
                });
                tasks.push(task(S, format!("{check} {fam} #{i}"), stream(0, (ci * 3 + fi) as u64, i as u64), job));
            }
        }
    }
    for (fi, (fam, modulus)) in FAMILIES.into_iter().enumerate() {
        let hi = if modulus == 0 { st.max_n.min(12) } else { st.max_n.min(modulus as usize / 4) };
        for i in 0..st.instances {
            let job: Job = Box::new(move |rng| {
                let n = rng.gen_range(1..=hi);
                let a = family_set(rng, modulus, n)?;
                let b = family_set(rng, modulus, n)?;
                let need = 2 * n - 1;
                let mut m = Measure { bound: Some(need.to_string()), ..Measure::new("triple", a.ctx(), n) };
                match find_triple(&a, &b) {
                    Ok(w) => {
                        let reached = sumset(&a, &w)?.len();
                        m.s = Some(w.len());
                        m.achieved = reached.to_string();
                        m.pass = Some(w.len() <= 3 && reached >= need);
                        m.witness = json!({ "a": a, "b": b, "witness": w });
                    }
                    Err(SumsetError::NotFound) => {
                        m.achieved = "none".into();
                        m.pass = Some(false);
                        m.witness = json!({ "a": a, "b": b });
                    }
                    Err(e) => return Err(e),
                }
                Ok(vec![m])
            });
            tasks.push(task(S, format!("triple {fam} #{i}"), stream(0, 10 + fi as u64, i as u64), job));
        }
    }
    for i in 0..st.instances {
        let job: Job = Box::new(move |rng| {
            let (x, y) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
            let a = random_ints(rng, 0, 8, x);
            let b = random_ints(rng, 0, 8, y);
            let k = rng.gen_range(1..=3);
            let c = sumset(&a, &b)?;
            let cert = walk_bound_certificate(&a, &b, &c, k)?;
            Ok(vec![Measure {
                s: Some(k),
                achieved: cert.target.to_string(),
                bound: Some(fmt_f64(cert.bound_f64())),
                pass: Some(cert.valid),
                witness: json!({ "a": a, "b": b, "k": k, "w": cert.w.to_string(), "numerator": cert.bound_numer.to_string() }),
                ..Measure::new("walks", a.ctx(), a.len())
            }])
        });
        tasks.push(task(S, format!("walks #{i}"), stream(0, 20, i as u64), job));
    }
    tasks
}

fn lattice_cube(d: usize, side: i64) -> GSet {
    let ctx = GroupCtx::lattice(d).expect("lattice");
    let total = side.pow(d as u32);
    let pts: Vec<Vec<i64>> = (0..total)
        .map(|mut i| {
            (0..d)
                .map(|_| {
                    let c = i % side;
                    i /= side;
                    c
                })
                .collect()
        })
        .collect();
    GSet::from_coords(&ctx, pts.iter().map(|p| p.as_slice())).expect("cube")
}

fn construction_tasks(st: &Settings) -> Vec<Task> {
    const S: &str = "constructions";
    let mut tasks = Vec::new();
    let top = (st.max_n * st.max_n).min(144) as u64;
    let pairs: Vec<(u64, u64)> =
        (1..=top).flat_map(|n| (1u64..).take_while(move |k| k * k <= n).map(move |k| (n, k))).collect();
    for (i, &(n, k)) in pairs.iter().enumerate() {
        let job: Job = Box::new(move |_| {
            let a = ap_plus_spikes(n, k)?;
            let doubled = sumset(&a, &a)?.len() as u64;
            let expected = ap_plus_spikes_doubling(n, k);
            Ok(vec![Measure {
                s: Some(k as usize),
                kappa: Some(Rational::new(doubled, n).to_string()),
                achieved: doubled.to_string(),
                bound: Some(expected.to_string()),
                pass: Some(doubled == expected),
                witness: json!({ "k": k, "closed_form": ap_plus_spikes_closed_form(n, k) }),
                ..Measure::new("ap-spikes-doubling", a.ctx(), n as usize)
            }])
        });
        tasks.push(task(S, format!("ap-spikes n={n} k={k}"), stream(1, 0, i as u64), job));
    }
    for (i, &(n, k)) in pairs.iter().enumerate() {
        let job: Job = Box::new(move |rng| {
            let a = ap_plus_spikes(n, k)?;
            let doubled = sumset(&a, &a)?.len() as u64;
            // tightest of 20 draws against |A_s + B_s| <= 2n + 2κs
            let mut worst: Option<(i128, usize, u64)> = None;
            for _ in 0..20 {
                let s = rng.gen_range(1..=n as usize);
                let lhs = sumset(&random_subset(rng, &a, s), &random_subset(rng, &a, s))?.len() as u64;
                let slack = (2 * n * n + 2 * doubled * s as u64) as i128 - (lhs * n) as i128;
                if worst.is_none_or(|w| slack < w.0) {
                    worst = Some((slack, s, lhs));
                }
            }
            let (slack, s, lhs) = worst.expect("draws");
            let kappa = Rational::new(doubled, n);
            let bound = Rational::from_integer(2 * n) + kappa * Rational::from_integer(2 * s as u64);
            Ok(vec![Measure {
                s: Some(s),
                kappa: Some(kappa.to_string()),
                achieved: lhs.to_string(),
                bound: Some(bound.to_string()),
                pass: Some(slack >= 0),
                witness: json!({ "k": k, "draws": 20 }),
                ..Measure::new("ap-spikes-subsets", a.ctx(), n as usize)
            }])
        });
        tasks.push(task(S, format!("ap-spikes subsets n={n} k={k}"), stream(1, 1, i as u64), job));
    }
    tasks.push(task(
        S,
        "spike-pair",
        stream(1, 2, 0),
        Box::new(|_| {
            let (n, k) = (20u64, 3u64);
            let (a, b) = spike_pair(n, k, Rational::new(1, 4))?;
            let total = sumset(&a, &b)?.len();
            let found = match brute_min_subset(&a, &b, (3 * n) as usize, 3) {
                Ok((s, _)) => Some(s),
                Err(SumsetError::NotFound) => None,
                Err(e) => return Err(e),
            };
            Ok(vec![Measure {
                s: Some(3),
                kappa: Some(kappa_ab(&a, &b)?.to_string()),
                achieved: total.to_string(),
                bound: Some((k * n).to_string()),
                pass: Some(total as u64 > k * n && found.is_none()),
                witness: json!({ "subset_reaching_3n": found }),
                ..Measure::new("spike-pair", a.ctx(), a.len())
            }])
        }),
    ));
    for (i, (r, n)) in [(2u64, 1usize), (2, 2), (3, 1), (3, 2)].into_iter().enumerate() {
        let job: Job = Box::new(move |_| {
            let (a, a0) = behrend_z_set(r, n)?;
            let (forced, v) = unique_doubling_check(&a, &a0)?;
            Ok(vec![Measure {
                kappa: Some(doubling_kappa(&a)?.to_string()),
                achieved: forced.len().to_string(),
                bound: Some(a0.len().to_string()),
                pass: Some(v.passed() && forced == a0),
                witness: json!({ "r": r, "n": n, "forced": forced }),
                ..Measure::new("behrend-forced", a.ctx(), a.len())
            }])
        });
        tasks.push(task(S, format!("behrend r={r} n={n}"), stream(1, 3, i as u64), job));
    }
    for (di, (d, t, n)) in [(2usize, 2usize, 50usize), (3, 2, 60)].into_iter().enumerate() {
        for i in 0..st.instances {
            let job: Job = Box::new(move |rng| {
                let c = neg_blt_set(d, t, n)?;
                let s = rng.gen_range(1..=10);
                let sub = random_subset(rng, &c.set, s);
                let lhs = sumset(&sub, &sub)?.len();
                let bound = neg_blt_bound(&c, s);
                Ok(vec![Measure {
                    s: Some(s),
                    achieved: lhs.to_string(),
                    bound: Some(bound.to_string()),
                    pass: Some(lhs <= bound),
                    witness: json!({ "t": t, "subset": sub }),
                    ..Measure::new("neg-blt", c.set.ctx(), n)
                }])
            });
            tasks.push(task(S, format!("neg-blt d={d} #{i}"), stream(1, 4 + di as u64, i as u64), job));
        }
    }
    let pools = [(2usize, 4i64), (2, 6), (3, 3), (3, 5)];
    let mut j = 0u64;
    for (d, side) in pools {
        for t in 1..=2usize {
            for k in 0..d {
                let job: Job = Box::new(move |_| {
                    let pool = lattice_cube(d, side);
                    let mut m = Measure { s: Some(t), ..Measure::new("fulldim", pool.ctx(), pool.len()) };
                    match select_full_dim_subset(&pool, t, k, d) {
                        Ok(x) => {
                            let covered = hyperplane_cover_check(&x, t, k)?.covered;
                            m.achieved = x.len().to_string();
                            m.pass = Some(x.is_subset(&pool) && !covered);
                            m.witness = json!({ "side": side, "k": k, "subset": x });
                        }
                        Err(SumsetError::Infeasible(msg)) => {
                            m.achieved = "infeasible".into();
                            m.witness = json!({ "side": side, "k": k, "reason": msg });
                        }
                        Err(e) => return Err(e),
                    }
                    Ok(vec![m])
                });
                tasks.push(task(S, format!("fulldim d={d} side={side} t={t} k={k}"), stream(1, 6, j), job));
                j += 1;
            }
        }
    }
    let zn = [(3u64, vec![5u64, 7, 11, 13]), (2, vec![3, 5, 7, 11]), (5, vec![7, 11, 13, 17])];
    for (i, (q, primes)) in zn.into_iter().enumerate() {
        let job: Job = Box::new(move |_| {
            let (a, _) = niveau_zn(q, &primes, Rational::new(1, 2), Rational::new(1, 4))?;
            lift_measure(&a)
        });
        tasks.push(task(S, format!("lift niveau-zn #{i}"), stream(1, 7, i as u64), job));
    }
    for i in 0..st.instances {
        let job: Job = Box::new(move |rng| {
            let n = rng.gen_range(10..400u64);
            let ctx = GroupCtx::cyclic(n)?;
            let size = rng.gen_range(1..=n as usize / 2);
            lift_measure(&random_finite(rng, &ctx, size)?)
        });
        tasks.push(task(S, format!("lift cyclic #{i}"), stream(1, 8, i as u64), job));
    }
    tasks
}

/// Round trip, range and Freiman checks for one lift.
fn lift_measure(a: &GSet) -> sumsetlab::Result<Vec<Measure>> {
    let l = lift_construction(a, None)?;
    let moduli = a.ctx().radices().expect("finite");
    let back: BTreeSet<Vec<i64>> =
        l.hat.values().iter().map(|&r| moduli.iter().map(|&m| r.rem_euclid(m as i64)).collect()).collect();
    let original: BTreeSet<Vec<i64>> = a.iter().map(|x| x.coords().to_vec()).collect();
    let doubled = sumset(a, a)?.len();
    let hat2 = sumset(&l.hat, &l.hat)?.len();
    let hat_p2 = sumset(&l.hat_p, &l.hat_p)?.len();
    let pass = back == original
        && l.hat.len() == a.len()
        && l.hat_p.len() == a.len()
        && l.hat.values().iter().all(|&r| r >= 0 && (r as u64) < l.modulus)
        && hat2 <= 2 * doubled
        && hat_p2 == hat2
        && l.p > 2 * l.modulus;
    Ok(vec![Measure {
        kappa: Some(Rational::new(doubled as u64, a.len() as u64).to_string()),
        achieved: hat2.to_string(),
        bound: Some((2 * doubled).to_string()),
        pass: Some(pass),
        witness: json!({ "p": l.p, "modulus": l.modulus, "hat_p_doubling": hat_p2 }),
        ..Measure::new("lift", a.ctx(), a.len())
    }])
}

fn cover_measure(check: &str, s: &GSet, t: &GSet, extra: impl Fn(&GSet, &GSet) -> sumsetlab::Result<(bool, Value)>) -> sumsetlab::Result<Vec<Measure>> {
    let o = saturating_cover(s, t, None)?;
    let sums = sumset(s, t)?;
    let union = sumset(&o.s_prime, t)?.union(&sumset(s, &o.t_prime)?)?;
    let cap = (Rational::from_integer(o.sums as u64) / o.tau).ceil().to_integer() as usize;
    let (extra_ok, extra_witness) = extra(&o.s_prime, &o.t_prime)?;
    let pass = o.covered
        && union == sums
        && o.s_prime.is_subset(s)
        && o.t_prime.is_subset(t)
        && o.s_star.len() <= cap
        && extra_ok;
    Ok(vec![Measure {
        s: Some(o.s_star.len()),
        kappa: Some(kappa_ab(s, t)?.to_string()),
        achieved: (o.s_prime.len() + o.t_prime.len()).to_string(),
        bound: Some(cap.to_string()),
        pass: Some(pass),
        witness: json!({ "tau": o.tau.to_string(), "s_prime": o.s_prime, "t_prime": o.t_prime, "extra": extra_witness }),
        ..Measure::new(check, s.ctx(), s.len())
    }])
}

fn no_extra(_: &GSet, _: &GSet) -> sumsetlab::Result<(bool, Value)> {
    Ok((true, Value::Null))
}

fn cover_tasks(st: &Settings) -> Vec<Task> {
    const S: &str = "covers";
    let mut tasks = Vec::new();
    for i in 0..st.instances {
        let job: Job = Box::new(move |rng| {
            let (x, y) = (rng.gen_range(2..=25), rng.gen_range(2..=25));
            let (s, t) = if i % 2 == 0 {
                let ctx = GroupCtx::cyclic(101)?;
                (random_finite(rng, &ctx, x)?, random_finite(rng, &ctx, y)?)
            } else {
                (random_ints(rng, 0, 100, x), random_ints(rng, 0, 100, y))
            };
            cover_measure("cover-random", &s, &t, no_extra)
        });
        tasks.push(task(S, format!("random #{i}"), stream(2, 0, i as u64), job));
    }
    for i in 0..st.instances {
        let job: Job = Box::new(move |rng| {
            let cube = GroupCtx::vector(2, 10)?;
            let gens: Vec<u64> = (0..rng.gen_range(2..=6)).map(|_| rng.gen_range(1..1024)).collect();
            let mut span: BTreeSet<u64> = BTreeSet::from([0]);
            for g in gens {
                let next: Vec<u64> = span.iter().map(|x| x ^ g).collect();
                span.extend(next);
            }
            let (u, v) = (rng.gen_range(0..1024u64), rng.gen_range(0..1024u64));
            let s = GSet::from_indices(&cube, span.iter().map(|x| x ^ u))?;
            let t = GSet::from_indices(&cube, span.iter().map(|x| x ^ v))?;
            cover_measure("cover-coset", &s, &t, no_extra)
        });
        tasks.push(task(S, format!("coset #{i}"), stream(2, 1, i as u64), job));
    }
    for (i, (r, n)) in [(2u64, 1usize), (2, 2), (3, 1), (3, 2)].into_iter().enumerate() {
        let job: Job = Box::new(move |_| {
            let (a, a0) = behrend_z_set(r, n)?;
            let (forced, _) = unique_doubling_check(&a, &a0)?;
            cover_measure("cover-behrend", &a, &a, |sp, tp| {
                let chosen = sp.union(tp)?;
                Ok((forced == a0 && forced.is_subset(&chosen), json!({ "forced": forced })))
            })
        });
        tasks.push(task(S, format!("behrend r={r} n={n}"), stream(2, 2, i as u64), job));
    }
    for (i, (p, n)) in [(2u64, 4usize), (2, 5), (3, 3), (3, 4)].into_iter().enumerate() {
        let job: Job = Box::new(move |rng| {
            let triples = brute_tricolored(p, n - 2, 16, rng.gen())?;
            let a = fpn_nonsaturating(p, n, &triples)?;
            cover_measure("cover-fpn", &a, &a, no_extra)
        });
        tasks.push(task(S, format!("fpn p={p} n={n}"), stream(2, 3, i as u64), job));
    }
    tasks
}

fn niveau_tasks(st: &Settings) -> Vec<Task> {
    const S: &str = "niveau";
    let theta = Rational::from_integer(1);
    let delta = Rational::new(7, 24);
    let mut tasks = vec![task(
        S,
        "containment",
        stream(3, 0, 0),
        Box::new(move |_| {
            let (a, meta) = niveau_f2(2, 16, theta, delta)?;
            let v = niveau_containment_check(&a, &meta)?;
            Ok(vec![Measure {
                kappa: Some(doubling_kappa(&a)?.to_string()),
                achieved: v.witness["max_off_head_weight"].to_string(),
                bound: Some(meta.thresholds.half.to_string()),
                pass: v.pass,
                witness: v.witness,
                ..Measure::new("containment", a.ctx(), a.len())
            }])
        }),
    )];
    for i in 0..st.instances {
        let job: Job = Box::new(move |rng| {
            let cube = GroupCtx::vector(2, 10)?;
            let size = rng.gen_range(1..=1024);
            let a = random_finite(rng, &cube, size)?;
            let v = harper_check(&a)?;
            Ok(vec![Measure {
                achieved: v.witness["neighbourhood"].to_string(),
                bound: Some(v.witness["ball"].to_string()),
                pass: v.pass,
                witness: v.params,
                ..Measure::new("harper", a.ctx(), a.len())
            }])
        });
        tasks.push(task(S, format!("harper #{i}"), stream(3, 1, i as u64), job));
    }
    let trials = st.instances as u64;
    tasks.push(task(
        S,
        "ratio",
        stream(3, 2, 0),
        Box::new(move |rng| {
            let (a, _) = niveau_f2(2, 16, theta, delta)?;
            let kappa = doubling_kappa(&a)?.to_string();
            let report = nonsaturation_ratio(&a, Rational::new(1, 20), 3, trials, rng.gen())?;
            Ok(report
                .rows
                .iter()
                .map(|row| Measure {
                    s: Some(report.s),
                    kappa: Some(kappa.clone()),
                    achieved: row.max_ratio.to_string(),
                    witness: json!({
                        "sampler": row.sampler,
                        "trials": row.trials,
                        "a_prime": report.a_prime_size,
                        "max_ratio": row.max_ratio_f64,
                        "mean_ratio": row.mean_ratio_f64,
                    }),
                    ..Measure::new(&format!("ratio-{}", row.sampler), a.ctx(), a.len())
                })
                .collect())
        }),
    ));
    tasks
}

fn tasks_for(st: &Settings) -> Vec<Task> {
    match st.suite {
        SuiteName::Theorems => theorem_tasks(st),
        SuiteName::Constructions => construction_tasks(st),
        SuiteName::Covers => cover_tasks(st),
        SuiteName::Niveau => niveau_tasks(st),
        SuiteName::All => {
            let mut all = theorem_tasks(st);
            all.extend(construction_tasks(st));
            all.extend(cover_tasks(st));
            all.extend(niveau_tasks(st));
            all
        }
    }
}

/// Runs every instance of the suite and returns the records in instance order.
pub fn execute(st: &Settings, jobs: usize) -> CliResult<Vec<Record>> {
    let tasks = tasks_for(st);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Params(format!("thread pool: {e}")))?;
    let seed = st.seed;
    let groups: Vec<Vec<Record>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| {
                let instance = instance_seed(seed, t.stream);
                let mut rng = ChaCha8Rng::seed_from_u64(instance);
                let start = Instant::now();
                let measures = (t.job)(&mut rng);
                let ms = start.elapsed().as_millis() as u64;
                let measures = measures.unwrap_or_else(|e| {
                    vec![Measure {
                        check: t.label.clone(),
                        ctx: String::new(),
                        n: 0,
                        s: None,
                        kappa: None,
                        achieved: "error".into(),
                        bound: None,
                        pass: Some(false),
                        witness: json!({ "error": e.to_string() }),
                    }]
                });
                measures
                    .into_iter()
                    .map(|m| Record {
                        id: 0,
                        suite: t.suite,
                        check: m.check,
                        ctx: m.ctx,
                        n: m.n,
                        s: m.s,
                        kappa: m.kappa,
                        achieved: m.achieved,
                        bound: m.bound,
                        pass: m.pass,
                        seed: instance,
                        ms,
                        version: VERSION,
                        witness: m.witness,
                    })
                    .collect()
            })
            .collect()
    });
    let mut records: Vec<Record> = groups.into_iter().flatten().collect();
    for (i, r) in records.iter_mut().enumerate() {
        r.id = i;
    }
    Ok(records)
}

pub fn run(args: &SuiteArgs) -> CliResult<bool> {
    let (settings, jobs, out_dir) = resolve(args)?;
    let records = execute(&settings, jobs)?;
    let name = settings.suite.label();
    let report = ExperimentReport::new(
        format!("suite-{name}"),
        serde_json::to_value(&settings)?,
        settings.seed,
        records,
    );
    std::fs::create_dir_all(&out_dir).map_err(|e| CliError::io(&out_dir, e))?;
    let csv_path = out_dir.join(format!("{name}.csv"));
    let json_path = out_dir.join(format!("{name}.json"));
    report.write_csv(&csv_path)?;
    write_json(&json_path, &report)?;
    let s = &report.summary;
    println!(
        "suite {name}: {} rows, {} passed, {} failed, {} reported -> {}",
        s.rows,
        s.passed,
        s.failed,
        s.reported,
        csv_path.display()
    );
    for r in report.records.iter().filter(|r| r.pass == Some(false)) {
        eprintln!("FAIL {} {} [{}] n={} achieved={} bound={}", r.suite, r.check, r.ctx, r.n, r.achieved, r.bound.as_deref().unwrap_or(""));
    }
    Ok(s.failed == 0)
}
