use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Map, Value};
use sumsetlab::constructions::{construct, ConstructionParams};
use sumsetlab::set::parse_rational;
use sumsetlab::Rational;

use crate::error::{CliError, CliResult};
use crate::io::{sibling, write_json, write_set, VERSION};

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// lower-exponent, spike-pair, ap-spikes, behrend, behrend-z, tricolored,
    /// fpn, niveau-f2, niveau-zn or neg-blt
    pub variant: String,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    #[arg(long)]
    pub t: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    #[arg(long)]
    pub theta: Option<String>,
    /// Defaults to 7θ/24 for the niveau variants.
    #[arg(long)]
    pub delta: Option<String>,
    #[arg(long)]
    pub eps: Option<String>,
    #[arg(long)]
    pub budget: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Set file to write; metadata goes to `<out>.meta.json`.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

fn ratio_text(text: &str) -> CliResult<String> {
    Ok(parse_rational(text)?.to_string())
}

fn params_json(args: &ConstructArgs) -> CliResult<Value> {
    let mut map = Map::new();
    map.insert("variant".into(), json!(args.variant));
    let ints = [
        ("n", args.n),
        ("k", args.k),
        ("r", args.r),
        ("m", args.m),
        ("p", args.p),
        ("q", args.q),
        ("d", args.d),
        ("t", args.t),
        ("budget", args.budget),
        ("seed", args.seed),
    ];
    for (key, v) in ints {
        if let Some(v) = v {
            map.insert(key.into(), json!(v));
        }
    }
    if let Some(p) = &args.primes {
        map.insert("primes".into(), json!(p));
    }
    for (key, v) in [("theta", &args.theta), ("delta", &args.delta), ("eps", &args.eps)] {
        if let Some(v) = v {
            map.insert(key.into(), json!(ratio_text(v)?));
        }
    }
    let niveau = args.variant.starts_with("niveau");
    if niveau && args.delta.is_none() {
        if let Some(theta) = &args.theta {
            let delta = parse_rational(theta)? * Rational::new(7, 24);
            map.insert("delta".into(), json!(delta.to_string()));
        }
    }
    Ok(Value::Object(map))
}

pub fn parse_params(args: &ConstructArgs) -> CliResult<ConstructionParams> {
    let value = params_json(args)?;
    serde_json::from_value(value).map_err(|e| CliError::Params(format!("{}: {e}", args.variant)))
}

pub fn run(args: &ConstructArgs) -> CliResult<()> {
    let params = parse_params(args)?;
    let c = construct(&params)?;
    let out = args.out.clone().unwrap_or_else(|| PathBuf::from(format!("{}.set", params.name())));
    write_set(&out, &c.primary)?;
    let mut companions = Vec::new();
    for (name, set) in &c.companions {
        let path = sibling(&out, &format!(".{name}"));
        write_set(&path, set)?;
        companions.push(json!({ "name": name, "path": path, "size": set.len() }));
    }
    let meta_path = sibling(&out, ".meta.json");
    write_json(
        &meta_path,
        &json!({
            "version": VERSION,
            "variant": params.name(),
            "params": params,
            "ctx": c.primary.ctx(),
            "size": c.primary.len(),
            "meta": c.meta,
            "companions": companions,
        }),
    )?;
    println!("{}: {} elements in {} -> {}", params.name(), c.primary.len(), c.primary.ctx(), out.display());
    Ok(())
}
