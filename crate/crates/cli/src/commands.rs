use std::fmt::Write as _;

use kummer::arith::exact_lth_root;
use kummer::cyclotomic::{primes_above_seeded, residue_symbol_of_integer};
use kummer::density::{
    character_sum_with, density_experiment_with, DensityOptions, ScanOptions, TargetAssignment,
};
use kummer::radical::{
    brute_force_kernel, consistency_check, degree, exponent_matrix, rank_and_kernel,
    reduce_basis, DegreeMethod, InputSet, SCALE_GUARD,
};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::config::{Command, RunConfig};

/// Tuple count below which `degree` cross-checks against brute force even
/// without `--oracle`.
const DEFAULT_ORACLE_LIMIT: u64 = 10_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    User(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::User(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<kummer::Error> for CliError {
    fn from(e: kummer::Error) -> Self {
        match e {
            kummer::Error::InternalDisagreement(msg) => CliError::Internal(msg),
            other => CliError::User(other.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub config: Value,
    pub result: Value,
    pub checkpoints: Vec<Value>,
    pub warnings: Vec<String>,
}

pub struct Output {
    pub report: Report,
    pub text: String,
}

pub fn run(cfg: &RunConfig) -> Result<Output, CliError> {
    kummer::arith::check_odd_prime(cfg.l)?;
    match cfg.command {
        Command::Degree => cmd_degree(cfg),
        Command::Reduce => cmd_reduce(cfg),
        Command::Symbol => cmd_symbol(cfg),
        Command::Density => cmd_density(cfg),
        Command::Charsum => cmd_charsum(cfg),
        Command::Check => cmd_check(cfg),
    }
}

fn strs<T: ToString>(v: impl IntoIterator<Item = T>) -> Vec<String> {
    v.into_iter().map(|x| x.to_string()).collect()
}

fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    format!("({})", strs(v).join(","))
}

fn input_set(cfg: &RunConfig) -> Result<InputSet, CliError> {
    if cfg.radicands.contains(&0) {
        return Err(CliError::User("radicands must be nonzero".into()));
    }
    Ok(InputSet::new(cfg.l, cfg.radicands.clone())?)
}

fn targets(cfg: &RunConfig) -> Result<TargetAssignment, CliError> {
    let r = cfg
        .targets
        .as_ref()
        .ok_or_else(|| CliError::User("--targets is required".into()))?;
    if r.len() != cfg.radicands.len() {
        return Err(CliError::User(format!(
            "{} targets given for {} radicands",
            r.len(),
            cfg.radicands.len()
        )));
    }
    let l = cfg.l as i128;
    Ok(TargetAssignment::new(
        cfg.l,
        r.iter().map(|&x| x.rem_euclid(l) as i64),
    ))
}

fn norm_bound(cfg: &RunConfig, default: Option<u64>) -> Result<u64, CliError> {
    match cfg.norm_bound {
        Some(x) => u64::try_from(x)
            .ok()
            .filter(|&x| x >= 2)
            .ok_or_else(|| CliError::User(format!("norm bound {x} must be an integer >= 2"))),
        None => default.ok_or_else(|| CliError::User("--norm-bound is required".into())),
    }
}

fn cmd_degree(cfg: &RunConfig) -> Result<Output, CliError> {
    let set = input_set(cfg)?;
    let l = cfg.l;
    let red = reduce_basis(&set);
    let kernel = rank_and_kernel(&exponent_matrix(&set));
    let deg = degree(&set, DegreeMethod::Rank)?;
    let mut warnings = Vec::new();

    let tuples = l.checked_pow(set.m() as u32);
    let limit = if cfg.oracle { SCALE_GUARD } else { DEFAULT_ORACLE_LIMIT };
    let oracle = match tuples {
        Some(n) if n <= limit => {
            let size = brute_force_kernel(&set)?;
            let oracle_degree = BigInt::from(l).pow(set.m() as u32) / BigInt::from(size);
            if oracle_degree != BigInt::from(deg.clone()) {
                return Err(CliError::Internal(format!(
                    "brute force gives degree {oracle_degree}, rank method gives {deg}"
                )));
            }
            Some((size, oracle_degree))
        }
        _ => {
            if cfg.oracle {
                warnings.push(format!(
                    "brute-force cross-check skipped: {l}^{} tuples exceed the scale guard",
                    set.m()
                ));
            }
            None
        }
    };

    let result = json!({
        "degree": deg.to_string(),
        "rank": kernel.rank.to_string(),
        "t": red.t.to_string(),
        "normalized": strs(set.normalized_cores()),
        "dropped": strs(set.dropped()),
        "b": strs(&red.b),
        "exclusive_primes": strs(&red.exclusive_primes),
        "kernel_basis": kernel.basis.iter().map(strs).collect::<Vec<_>>(),
        "brute_force": oracle.as_ref().map(|(size, d)| json!({
            "kernel_size": size.to_string(),
            "degree": d.to_string(),
        })),
    });

    let mut text = String::new();
    writeln!(text, "degree: {deg}").unwrap();
    writeln!(text, "rank: {}  t: {}", kernel.rank, red.t).unwrap();
    writeln!(text, "normalized radicands: {}", fmt_vec(&set.normalized_cores().collect::<Vec<_>>())).unwrap();
    for (b, q) in red.b.iter().zip(&red.exclusive_primes) {
        writeln!(text, "  b = {b}  (exclusive prime {q})").unwrap();
    }
    let basis: Vec<String> = kernel.basis.iter().map(|v| fmt_vec(v)).collect();
    writeln!(text, "kernel basis: {}", if basis.is_empty() { "(none)".into() } else { basis.join(" ") }).unwrap();
    match &oracle {
        Some((size, d)) => writeln!(text, "brute force: |A| = {size}, degree {d} (agrees)").unwrap(),
        None => writeln!(text, "brute force: skipped").unwrap(),
    }
    Ok(finish(cfg, result, Vec::new(), warnings, text))
}

fn cmd_reduce(cfg: &RunConfig) -> Result<Output, CliError> {
    let set = input_set(cfg)?;
    let red = reduce_basis(&set);
    let result = json!({
        "t": red.t.to_string(),
        "degree": red.degree().to_string(),
        "b": strs(&red.b),
        "exclusive_primes": strs(&red.exclusive_primes),
        "transform": red.transform.iter().map(strs).collect::<Vec<_>>(),
        "relations": red.relations.iter().map(strs).collect::<Vec<_>>(),
    });
    let mut text = format!("t: {}  degree: {}\n", red.t, red.degree());
    for ((b, q), row) in red.b.iter().zip(&red.exclusive_primes).zip(&red.transform) {
        writeln!(text, "  b = {b}  q = {q}  exponents {}", fmt_vec(row)).unwrap();
    }
    for rel in &red.relations {
        writeln!(text, "  relation {}", fmt_vec(rel)).unwrap();
    }
    Ok(finish(cfg, result, Vec::new(), Vec::new(), text))
}

fn cmd_symbol(cfg: &RunConfig) -> Result<Output, CliError> {
    let p = cfg
        .p
        .ok_or_else(|| CliError::User("-p is required".into()))?;
    let p = u64::try_from(p).map_err(|_| CliError::User(format!("p = {p} is out of range")))?;
    let ideals = primes_above_seeded(p, cfg.l, cfg.seed)?;
    let selected: Vec<(usize, _)> = match cfg.ideal {
        None => ideals.iter().enumerate().collect(),
        Some(i) if i < ideals.len() => vec![(i, &ideals[i])],
        Some(i) => {
            return Err(CliError::User(format!(
                "ideal index {i} out of range ({} ideals above {p})",
                ideals.len()
            )))
        }
    };
    let mut warnings = Vec::new();
    let mut text = format!(
        "{} prime ideal(s) above {p}, inertia degree {}, norm {}\n",
        ideals.len(),
        ideals[0].inertia_degree(),
        ideals[0].norm()
    );
    let mut rows = Vec::new();
    for (idx, ideal) in selected {
        let mut exps = Vec::new();
        writeln!(text, "[{idx}] g = {}", ideal.g_string()).unwrap();
        for &a in &cfg.radicands {
            let e = match residue_symbol_of_integer(&BigInt::from(a), ideal) {
                Ok(e) => Some(e.value()),
                Err(kummer::Error::SymbolUndefined { .. }) => {
                    warnings.push(format!("{a} lies in ideal {idx}; symbol undefined"));
                    None
                }
                Err(e) => return Err(e.into()),
            };
            match e {
                Some(e) => writeln!(text, "    ({a} / P)_{} = z^{e}", cfg.l).unwrap(),
                None => writeln!(text, "    ({a} / P)_{} undefined", cfg.l).unwrap(),
            }
            exps.push(json!({
                "radicand": a.to_string(),
                "exponent": e.map(|e| e.to_string()),
            }));
        }
        rows.push(json!({
            "index": idx.to_string(),
            "g": strs(ideal.g()),
            "g_text": ideal.g_string(),
            "symbols": exps,
        }));
    }
    let result = json!({
        "p": p.to_string(),
        "inertia_degree": ideals[0].inertia_degree().to_string(),
        "norm": ideals[0].norm().to_string(),
        "ideal_count": ideals.len().to_string(),
        "ideals": rows,
    });
    Ok(finish(cfg, result, Vec::new(), warnings, text))
}

fn cmd_density(cfg: &RunConfig) -> Result<Output, CliError> {
    let set = input_set(cfg)?;
    let targets = targets(cfg)?;
    let x = norm_bound(cfg, None)?;
    let mut opts = DensityOptions::new(x);
    opts.threads = cfg.threads;
    opts.seed = cfg.seed;
    opts.char_sums = true;
    let report = density_experiment_with(&set, &targets, &opts)?;
    let mut warnings = Vec::new();
    if !report.consistent {
        warnings.push("target assignment violates a multiplicative relation; no prime can match".into());
    }
    let result = json!({
        "consistent": report.consistent,
        "t": report.t.to_string(),
        "b": strs(&report.b),
        "s": strs(&report.s),
        "ideals_scanned": report.ideals_scanned.to_string(),
        "matches": report.matches.to_string(),
        "empirical": report.empirical,
        "predicted": report.predicted,
        "char_sums": report.char_sums.as_ref().map(|sums| sums.iter().map(|s| json!({
            "n": s.n.to_string(),
            "tallies": strs(&s.tallies),
            "magnitude": s.magnitude,
            "normalized": s.normalized,
        })).collect::<Vec<_>>()),
    });
    let checkpoints = report
        .checkpoints
        .iter()
        .map(|c| {
            json!({
                "x": c.x.to_string(),
                "ideals": c.ideals.to_string(),
                "matches": c.matches.to_string(),
                "empirical": c.empirical,
                "predicted": report.predicted,
            })
        })
        .collect();
    let mut text = format!(
        "consistent: {}\nt: {}  predicted density: {:.6}\n",
        report.consistent, report.t, report.predicted
    );
    writeln!(text, "{:>12} {:>10} {:>10} {:>10}", "x", "ideals", "matches", "empirical").unwrap();
    for c in &report.checkpoints {
        writeln!(text, "{:>12} {:>10} {:>10} {:>10.6}", c.x, c.ideals, c.matches, c.empirical).unwrap();
    }
    Ok(finish(cfg, result, checkpoints, warnings, text))
}

fn cmd_charsum(cfg: &RunConfig) -> Result<Output, CliError> {
    let n = match (cfg.n, cfg.radicands.as_slice()) {
        (Some(n), _) => n,
        (None, [n]) => *n,
        _ => return Err(CliError::User("charsum takes exactly one integer".into())),
    };
    if exact_lth_root(n, cfg.l as u32).is_some() {
        return Err(CliError::User(format!("{n} is an exact {}-th power", cfg.l)));
    }
    let x = norm_bound(cfg, Some(1_000_000))?;
    let mut opts = ScanOptions::new(x);
    opts.threads = cfg.threads;
    opts.seed = cfg.seed;
    let sum = character_sum_with(n, cfg.l, &opts)?;
    let total = sum.total();
    let result = json!({
        "n": n.to_string(),
        "ideals": total.ideals.to_string(),
        "tallies": strs(&total.tallies),
        "re": total.re,
        "im": total.im,
        "magnitude": total.magnitude,
        "normalized": total.normalized,
    });
    let checkpoints = sum
        .checkpoints
        .iter()
        .map(|c| {
            json!({
                "x": c.x.to_string(),
                "ideals": c.ideals.to_string(),
                "tallies": strs(&c.tallies),
                "magnitude": c.magnitude,
                "normalized": c.normalized,
            })
        })
        .collect();
    let mut text = format!("sum of ({n} / P)_{} over N(P) <= {x}\n", cfg.l);
    writeln!(text, "{:>12} {:>10} {:>12} {:>10}  tallies", "x", "ideals", "|sum|", "|sum|/N").unwrap();
    for c in &sum.checkpoints {
        writeln!(
            text,
            "{:>12} {:>10} {:>12.3} {:>10.6}  {}",
            c.x,
            c.ideals,
            c.magnitude,
            c.normalized,
            fmt_vec(&c.tallies)
        )
        .unwrap();
    }
    Ok(finish(cfg, result, checkpoints, Vec::new(), text))
}

fn cmd_check(cfg: &RunConfig) -> Result<Output, CliError> {
    let set = input_set(cfg)?;
    let targets = targets(cfg)?;
    let consistent = consistency_check(&set, &targets)?;
    let kernel = rank_and_kernel(&exponent_matrix(&set));
    let r = targets.exponents();
    let l = cfg.l;
    let violated: Vec<usize> = kernel
        .basis
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            c.iter()
                .zip(set.normalized_indices())
                .map(|(&ci, &i)| ci * r[i])
                .sum::<u64>()
                % l
                != 0
        })
        .map(|(k, _)| k)
        .collect();
    let dropped_nontrivial: Vec<usize> = set.dropped().into_iter().filter(|&i| r[i] != 0).collect();
    let result = json!({
        "consistent": consistent,
        "kernel_basis": kernel.basis.iter().map(strs).collect::<Vec<_>>(),
        "violated_relations": strs(&violated),
        "nontrivial_lth_powers": strs(&dropped_nontrivial),
    });
    let mut text = format!("consistent: {consistent}\n");
    for k in &violated {
        writeln!(text, "  violates relation {}", fmt_vec(&kernel.basis[*k])).unwrap();
    }
    for i in &dropped_nontrivial {
        writeln!(text, "  radicand {} is an l-th power but has target {}", cfg.radicands[*i], r[*i]).unwrap();
    }
    Ok(finish(cfg, result, Vec::new(), Vec::new(), text))
}

fn finish(cfg: &RunConfig, result: Value, checkpoints: Vec<Value>, warnings: Vec<String>, mut text: String) -> Output {
    for w in &warnings {
        writeln!(text, "warning: {w}").unwrap();
    }
    Output {
        report: Report {
            config: cfg.echo(),
            result,
            checkpoints,
            warnings,
        },
        text,
    }
}
