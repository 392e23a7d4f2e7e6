//! One function per verb, each a short composition of library calls.

use std::fmt;

use galilei_core::fock::{
    analyze_d_module, check_d_module, check_highest_n, check_laurent_witnesses, check_realization,
    example1, laurent, random_mu, seeded, whittaker,
};
use galilei_core::oracle::{simple_character_oracle, verma_character_oracle};
use galilei_core::rational::{as_nonneg_int, fmt_q};
use galilei_core::repr::{
    check_theorem2, check_theorem3, radical_dims, sl2_shift, simple_quotient, verma, HighestWeight,
};
use galilei_core::uea::{check_engine, check_phi, check_theta, default_theta_samples};
use galilei_core::{Family, HalfInteger, LieAlgebra, Report, Q};

use crate::{Flags, Verb};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(galilei_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<galilei_core::Error> for CliError {
    fn from(e: galilei_core::Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Rows emitted by `--format csv|table` instead of the check list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct Output {
    pub report: Report,
    pub table: Option<Table>,
}

fn need<T: Clone>(value: &Option<T>, flag: &str) -> Result<T> {
    value
        .clone()
        .ok_or_else(|| CliError::Usage(format!("missing required flag --{flag}")))
}

fn plain(report: Report) -> Output {
    Output { report, table: None }
}

pub fn run(verb: Verb, flags: &Flags) -> Result<Output> {
    let out = match verb {
        Verb::VerifyAlgebra => verify_algebra(flags)?,
        Verb::VerifyPhi => plain(check_phi(need(&flags.l, "l")?)?),
        Verb::VerifyTheta => {
            let l = need(&flags.l, "l")?;
            let mut rep = check_theta(l, &default_theta_samples(l), flags.seed)?;
            rep.set_param("seed", flags.seed);
            plain(rep)
        }
        Verb::Character => character(flags)?,
        Verb::Radical => radical(flags)?,
        Verb::CheckTheorem2 => plain(check_theorem2(
            need(&flags.l, "l")?,
            &need(&flags.z, "z")?,
            &need(&flags.hw, "hw")?,
            need(&flags.depth, "depth")?,
        )?),
        Verb::CheckTheorem3 => plain(check_theorem3(
            need(&flags.l, "l")?,
            &need(&flags.z, "z")?,
            need(&flags.m, "m")?,
            need(&flags.depth, "depth")?,
        )?),
        Verb::CheckHighestN => plain(check_highest_n(
            need(&flags.l, "l")?,
            &need(&flags.pl, "pl")?,
            &need(&flags.hw, "hw")?,
            need(&flags.depth, "depth")?,
        )?),
        Verb::FockRelations => fock_relations(flags)?,
        Verb::DModule => d_module(flags)?,
    };
    let mut report = out.report.sorted();
    report.command = verb_name(verb).into();
    Ok(Output { report, ..out })
}

fn verb_name(verb: Verb) -> &'static str {
    match verb {
        Verb::VerifyAlgebra => "verify-algebra",
        Verb::VerifyPhi => "verify-phi",
        Verb::VerifyTheta => "verify-theta",
        Verb::Character => "character",
        Verb::Radical => "radical",
        Verb::CheckTheorem2 => "check-theorem2",
        Verb::CheckTheorem3 => "check-theorem3",
        Verb::CheckHighestN => "check-highestN",
        Verb::FockRelations => "fock-relations",
        Verb::DModule => "d-module",
    }
}

fn default_family(l: HalfInteger) -> Family {
    if l.is_integer() {
        Family::Centerless
    } else {
        Family::Extended
    }
}

fn verify_algebra(flags: &Flags) -> Result<Output> {
    let l = need(&flags.l, "l")?;
    let family = flags.family.unwrap_or_else(|| default_family(l));
    let alg = LieAlgebra::new(l, family)?;
    let mut report = Report::new("verify-algebra")
        .param("l", l.to_string())
        .param("family", family.to_string())
        .param("seed", flags.seed);
    report.absorb("structure", alg.check_jacobi());
    report.absorb("engine", check_engine(l, family, flags.seed, 100)?);
    Ok(plain(report))
}

fn highest_weight(flags: &Flags, l: HalfInteger, family: Family) -> Result<HighestWeight> {
    let h = need(&flags.hw, "hw")?;
    Ok(match family {
        Family::Extended => HighestWeight::Extended { z: need(&flags.z, "z")?, h },
        Family::Centerless if l.is_integer() => HighestWeight::Centerless { pl: Some(need(&flags.pl, "pl")?), h },
        Family::Centerless => HighestWeight::Centerless { pl: None, h },
    })
}

fn verma_setup(flags: &Flags) -> Result<(HalfInteger, Family, usize, galilei_core::repr::WeightModule)> {
    let l = need(&flags.l, "l")?;
    let family = flags.family.unwrap_or_else(|| default_family(l));
    let depth = need(&flags.depth, "depth")?;
    let alg = LieAlgebra::new(l, family)?;
    let m = verma(&alg, &highest_weight(flags, l, family)?, depth)?;
    Ok((l, family, depth, m))
}

fn base_report(verb: &str, flags: &Flags, l: HalfInteger, family: Family, depth: usize) -> Report {
    let mut r = Report::new(verb)
        .param("l", l.to_string())
        .param("family", family.to_string())
        .param("depth", depth as u64);
    for (key, value) in [("hw", &flags.hw), ("z", &flags.z), ("pl", &flags.pl)] {
        if let Some(v) = value {
            r.set_param(key, fmt_q(v));
        }
    }
    r
}

fn dims_witness(got: &[u64], want: &[u64]) -> Option<String> {
    (got != want).then(|| format!("{got:?} vs {want:?}"))
}

fn character(flags: &Flags) -> Result<Output> {
    let (l, family, depth, m) = verma_setup(flags)?;
    let mut report = base_report("character", flags, l, family, depth);
    let ch = m.character();
    let oracle = verma_character_oracle(family, l, depth);
    report.check("verma character = oracle", ch.dims == oracle.dims, dims_witness(&ch.dims, &oracle.dims));
    report.set_param("step", ch.step as u64);
    report.set_param("top_weight", fmt_q(&ch.top_weight));
    report.data = Some(ch.to_json_value());
    let table = Table {
        headers: vec!["n".into(), "dim".into()],
        rows: ch.dims.iter().enumerate().map(|(n, d)| vec![n.to_string(), d.to_string()]).collect(),
    };
    Ok(Output { report, table: Some(table) })
}

fn radical(flags: &Flags) -> Result<Output> {
    let (l, family, depth, m) = verma_setup(flags)?;
    let mut report = base_report("radical", flags, l, family, depth);
    let rad = radical_dims(&m)?;
    let quotient = simple_quotient(&m)?;
    report.absorb("simple quotient", quotient.check_consistency());
    let simple: Vec<u64> = quotient.dims().iter().map(|&d| d as u64).collect();
    if family == Family::Extended {
        let lambda = m.top_weight() + sl2_shift(l);
        let oracle = match as_nonneg_int(&lambda) {
            Some(k) => simple_character_oracle(l, k as i64, depth)?,
            None => verma_character_oracle(family, l, depth),
        };
        report.check(
            "simple quotient character = oracle",
            simple == oracle.dims,
            dims_witness(&simple, &oracle.dims),
        );
    }
    let first = rad.iter().position(|&d| d > 0);
    report.set_param("first_radical_depth", first.map_or(serde_json::Value::Null, |n| (n as u64).into()));
    report.data = Some(serde_json::json!({
        "top_weight": fmt_q(m.top_weight()),
        "step": m.step(),
        "verma": m.dims(),
        "radical": rad,
        "simple": simple,
    }));
    let table = Table {
        headers: ["n", "verma", "radical", "simple"].map(String::from).to_vec(),
        rows: (0..=depth)
            .map(|n| vec![n.to_string(), m.dim(n).to_string(), rad[n].to_string(), simple[n].to_string()])
            .collect(),
    };
    Ok(Output { report, table: Some(table) })
}

fn mu_or_random(flags: &Flags, n: usize) -> Result<Vec<Q>> {
    match &flags.mu {
        Some(mu) if mu.len() == n => Ok(mu.clone()),
        Some(mu) => Err(CliError::Usage(format!("--mu needs {n} entries for this l, got {}", mu.len()))),
        None => Ok(random_mu(&mut seeded(flags.seed), n)),
    }
}

fn fock_relations(flags: &Flags) -> Result<Output> {
    let l = need(&flags.l, "l")?;
    let z = need(&flags.z, "z")?;
    let example = need(&flags.example, "example")?;
    let bound = flags.window.unwrap_or(8);
    if l.is_integer() {
        return Err(galilei_core::Error::ExtendedIntegerL(l.to_string()).into());
    }
    let nv = l.twice().div_ceil(2) as usize;
    let mut report = match example {
        1 => check_realization(&example1(l, &z)?, bound),
        2 => check_realization(&whittaker(l, &z, &mu_or_random(flags, nv)?)?, bound),
        _ => {
            let mu = mu_or_random(flags, nv)?;
            let mut rep = check_realization(&laurent(l, &z, &mu)?, bound);
            let witnesses = check_laurent_witnesses(l, &z, &mu, bound as i32)?;
            let count = witnesses.params.get("witnesses").cloned();
            rep.absorb("invariant subspaces", witnesses);
            if flags.expect_simple {
                let found = count.and_then(|v| v.as_u64()).unwrap_or(0);
                rep.check(
                    "no invariant subspace",
                    found == 0,
                    (found > 0).then(|| format!("{found} witnesses in the window")),
                );
            }
            rep
        }
    };
    report.set_param("example", example as u64);
    report.set_param("seed", flags.seed);
    Ok(plain(report))
}

fn d_module(flags: &Flags) -> Result<Output> {
    let a = need(&flags.a, "a")?;
    let z = need(&flags.z, "z")?;
    let window = flags.window.unwrap_or(10);
    let report = check_d_module(&a, &z, window, flags.expect_simple)?;
    let analysis = analyze_d_module(&a, &z, window)?;
    let table = Table {
        headers: vec!["kernel_exponent".into()],
        rows: analysis.kernel_witnesses.iter().map(|i| vec![i.to_string()]).collect(),
    };
    Ok(Output { report, table: Some(table) })
}
