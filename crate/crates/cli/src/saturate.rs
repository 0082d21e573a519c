use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use sumsetlab::saturator::{
    brute_min_subset, find_triple, greedy_diff_saturate, greedy_pair_saturate, greedy_self_saturate,
    medium_saturate, saturating_cover, select_full_dim_subset, MediumParams,
};
use sumsetlab::set::parse_rational;
use sumsetlab::verifier::{hyperplane_cover_check, theorem_bound_check, Theorem, Verdict};
use sumsetlab::{sumset, GSet, GroupCtx, Rational, SumsetError};

use crate::error::{CliError, CliResult};
use crate::io::{read_set, write_json, VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    GreedySelf,
    GreedyPair,
    GreedyDiff,
    Medium,
    BruteMin,
    Triple,
    Cover,
    Fulldim,
}

impl Algorithm {
    fn name(self) -> String {
        self.to_possible_value().expect("named").get_name().to_string()
    }

    fn takes_pair(self) -> bool {
        matches!(self, Algorithm::GreedyPair | Algorithm::Medium | Algorithm::BruteMin | Algorithm::Triple | Algorithm::Cover)
    }
}

#[derive(Args, Debug)]
pub struct SaturateArgs {
    pub algorithm: Algorithm,
    /// Set files: one for single-set algorithms, two (A then B, or S then T) for pairs.
    #[arg(long = "set", required = true, num_args = 1..=2)]
    pub sets: Vec<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub s: usize,
    /// Theorem constant, at most 1/14.
    #[arg(long, default_value = "1/14")]
    pub c: String,
    #[arg(long, env = "SUMSETLAB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Cover threshold; defaults to ceil(sqrt(|S+T|)).
    #[arg(long)]
    pub tau: Option<String>,
    /// Number of parallel translates for `fulldim`.
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Subspace dimension for `fulldim`.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Target for `brute-min`; defaults to |A+B|.
    #[arg(long)]
    pub target: Option<usize>,
    /// Largest subset `brute-min` may try; defaults to `s`.
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long, default_value_t = 64)]
    pub trials: u64,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

fn verdict(check: &str, params: Value, pass: bool, witness: Value) -> Verdict {
    Verdict { check: check.into(), params, seed: None, pass: Some(pass), slack: None, witness }
}

fn lattice_dim(a: &GSet) -> CliResult<usize> {
    match a.ctx() {
        GroupCtx::Lattice { d } => Ok(*d),
        other => Err(CliError::Params(format!("fulldim needs a set in Z^d, got {other}"))),
    }
}

/// Runs one algorithm, returning its raw result and the verdict attached to it.
pub fn execute(args: &SaturateArgs, sets: &[GSet]) -> CliResult<(Value, Verdict)> {
    let alg = args.algorithm;
    let want = if alg.takes_pair() { 2 } else { 1 };
    if sets.len() != want {
        return Err(CliError::Params(format!("{} needs {want} set file(s), got {}", alg.name(), sets.len())));
    }
    let c = parse_rational(&args.c)?;
    let a = &sets[0];
    let b = sets.get(1).unwrap_or(a);
    let run = |o: sumsetlab::saturator::SaturationOutcome, th: Theorem| -> CliResult<(Value, Verdict)> {
        let v = theorem_bound_check(&o, th, c);
        Ok((serde_json::to_value(&o)?, v))
    };
    match alg {
        Algorithm::GreedySelf => run(greedy_self_saturate(a, args.s, c)?, Theorem::Sym),
        Algorithm::GreedyPair => run(greedy_pair_saturate(a, b, args.s, c)?, Theorem::Asym),
        Algorithm::GreedyDiff => run(greedy_diff_saturate(a, args.s, c)?, Theorem::Diff),
        Algorithm::Medium => {
            let params = MediumParams { trials: args.trials, seed: args.seed, ..MediumParams::default() };
            run(medium_saturate(a, b, &params)?, Theorem::Mid)
        }
        Algorithm::BruteMin => {
            let target = match args.target {
                Some(t) => t,
                None => sumset(a, b)?.len(),
            };
            let cap = args.cap.unwrap_or(args.s);
            let params = json!({ "target": target, "cap": cap });
            match brute_min_subset(a, b, target, cap) {
                Ok((k, w)) => {
                    let reached = sumset(a, &w)?.len();
                    let result = json!({ "size": k, "witness": w, "reached": reached });
                    Ok((result.clone(), verdict("brute-min", params, reached >= target, result)))
                }
                Err(SumsetError::NotFound) => Ok((Value::Null, verdict("brute-min", params, false, Value::Null))),
                Err(e) => Err(e.into()),
            }
        }
        Algorithm::Triple => {
            let need = 2 * a.len().max(1) - 1;
            let params = json!({ "n": a.len(), "target": need });
            match find_triple(a, b) {
                Ok(w) => {
                    let reached = sumset(a, &w)?.len();
                    let result = json!({ "witness": w, "reached": reached });
                    let pass = w.len() <= 3 && reached >= need;
                    Ok((result.clone(), verdict("triple", params, pass, result)))
                }
                Err(SumsetError::NotFound) => Ok((Value::Null, verdict("triple", params, false, Value::Null))),
                Err(e) => Err(e.into()),
            }
        }
        Algorithm::Cover => {
            let tau = args.tau.as_deref().map(parse_rational).transpose()?;
            let o = saturating_cover(a, b, tau)?;
            let star_cap = (Rational::from_integer(o.sums as u64) / o.tau).ceil().to_integer() as usize;
            let pass = o.covered && o.s_star.len() <= star_cap;
            let params = json!({ "tau": o.tau.to_string(), "sums": o.sums });
            let witness = json!({ "s_star": o.s_star.len(), "s_star_cap": star_cap, "s_prime": o.s_prime.len(), "t_prime": o.t_prime.len() });
            let result = json!({
                "s_star": o.s_star,
                "s_prime": o.s_prime,
                "t_prime": o.t_prime,
                "tau": o.tau.to_string(),
                "sums": o.sums,
                "covered": o.covered,
            });
            Ok((result, verdict("cover", params, pass, witness)))
        }
        Algorithm::Fulldim => {
            let d = lattice_dim(a)?;
            let x = select_full_dim_subset(a, args.t, args.k, d)?;
            let check = hyperplane_cover_check(&x, args.t, args.k)?;
            let params = json!({ "t": args.t, "k": args.k, "d": d });
            let result = json!({ "subset": x, "size": x.len() });
            Ok((result, verdict("fulldim", params, !check.covered, json!({ "covered": check.covered }))))
        }
    }
}

pub fn run(args: &SaturateArgs) -> CliResult<bool> {
    let sets = args.sets.iter().map(|p| read_set(p)).collect::<CliResult<Vec<_>>>()?;
    let (result, v) = execute(args, &sets)?;
    let inputs: Vec<Value> = args
        .sets
        .iter()
        .zip(&sets)
        .map(|(p, s)| json!({ "path": p, "ctx": s.ctx(), "size": s.len() }))
        .collect();
    let report = json!({
        "version": VERSION,
        "algorithm": args.algorithm.name(),
        "inputs": inputs,
        "s": args.s,
        "c": args.c,
        "seed": args.seed,
        "result": result,
        "verdict": v,
    });
    match &args.out {
        Some(path) => write_json(path, &report)?,
        None => println!("{}", serde_json::to_string_pretty(&report)?),
    }
    let status = if v.passed() { "pass" } else { "FAIL" };
    eprintln!("{} {}: {status}", args.algorithm.name(), v.check);
    Ok(v.passed())
}
