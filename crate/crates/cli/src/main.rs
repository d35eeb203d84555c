//! `akblocks`: weights, blocks and weight-one block verification for
//! Ariki-Koike algebras.
//!
//! Exit codes: 0 success, 2 bad input, 3 unmet precondition, 4 resource cap,
//! 5 failed statement, 1 internal error.

mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use akblocks_core::akalgebra::{assess_weight_one_block, AKParams, Fault, VerifyOptions, DEFAULT_DIMENSION_CAP};
use akblocks_core::blocks::{classify_weight_one, conjugate_params, partition_into_blocks, weight, ResidueContent, ResidueParams};
use akblocks_core::ffield::{is_prime, FieldContext};
use akblocks_core::partitions::MultiPartition;
use akblocks_core::selftest::{run_selftest, SelftestOptions, DEFAULT_SEED};
use akblocks_core::Error;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use config::ConfigFile;

#[derive(Parser, Debug)]
#[command(name = "akblocks", version, about = "Weights, blocks and weight-one block verification for Ariki-Koike algebras")]
struct Cli {
    /// Plain-text key=value file with defaults for the parameter flags
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the weight of an r-partition
    Weight {
        #[command(flatten)]
        params: ParamArgs,
        /// Use the conjugate r-partition (same parameters)
        #[arg(long)]
        conjugate: bool,
        /// Components joined by `|`, parts by `,`, empty component `-`
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// List the blocks of r-partitions of n as JSON
    Blocks {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the algebra over F_p and verify one weight-one block
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Residue content of the block, one count per residue 0..e
        #[arg(long, value_parser = parse_int_list)]
        content: Option<IntList>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest algebra dimension r^n n! to build
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Enumerate weight-one blocks over parameter ranges
    Search {
        /// Largest n
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Values of e: a list `2,3` or a range `2-4`
        #[arg(long, default_value = "2-4")]
        e: String,
        /// Values of r: a list or a range
        #[arg(long, default_value = "2")]
        r: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance suite and print one line per criterion
    Selftest {
        /// Combinatorial criteria only
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Args, Debug, Clone, Default)]
struct ParamArgs {
    /// Prime modulus of the coefficient field
    #[arg(long)]
    p: Option<u32>,
    /// Quantum parameter; chosen as the smallest element of order e when absent
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
    /// Quantum characteristic
    #[arg(long)]
    e: Option<u32>,
    /// Number of cyclotomic parameters; must equal the length of --a
    #[arg(long)]
    r: Option<usize>,
    /// Exponents a_1,...,a_r with Q_k = q^{a_k}
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    a: Option<IntList>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct IntList(Vec<i64>);

fn parse_int_list(s: &str) -> Result<IntList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(IntList)
}

/// `2,3,5` or `2-4`; a range with `lo > hi` is empty.
fn parse_range(s: &str) -> Result<Vec<u32>, String> {
    let s = s.trim();
    if let Some((lo, hi)) = s.split_once('-') {
        let lo: u32 = lo.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
        let hi: u32 = hi.trim().parse().map_err(|e| format!("{s:?}: {e}"))?;
        return Ok((lo..=hi).collect());
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"))).collect()
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidParameter(_)
            | Error::DimensionMismatch(_)
            | Error::ContextMismatch(..)
            | Error::DivisionByZero => 2,
            Error::Precondition(_) => 3,
            Error::ResourceCap(_) => 4,
            Error::TheoremViolation { .. } => 5,
            _ => 1,
        };
        Self { code, message: e.to_string() }
    }
}

type CmdResult = Result<(), Failure>;

/// Flags merged with the config file.
#[derive(Debug, Default)]
struct Resolved {
    p: Option<u32>,
    q: Option<i64>,
    e: Option<u32>,
    r: Option<usize>,
    a: Option<Vec<i64>>,
    n: Option<usize>,
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.trim().parse::<T>().map_err(|e| format!("{s:?}: {e}"))
}

fn resolve(args: &ParamArgs, cfg: &ConfigFile) -> Result<Resolved, Failure> {
    let list = |s: &str| parse_int_list(s).map(|l| l.0);
    Ok(Resolved {
        p: cfg.merge(args.p, "p", parse_num).map_err(Failure::input)?,
        q: cfg.merge(args.q, "q", parse_num).map_err(Failure::input)?,
        e: cfg.merge(args.e, "e", parse_num).map_err(Failure::input)?,
        r: cfg.merge(args.r, "r", parse_num).map_err(Failure::input)?,
        a: cfg.merge(args.a.clone().map(|l| l.0), "a", list).map_err(Failure::input)?,
        n: cfg.merge(args.n, "n", parse_num).map_err(Failure::input)?,
    })
}

impl Resolved {
    fn a(&self) -> Result<&[i64], Failure> {
        let a = self.a.as_deref().ok_or_else(|| Failure::input("--a is required"))?;
        if let Some(r) = self.r {
            if r != a.len() {
                return Err(Failure::input(format!("--r {r} but --a has {} entries", a.len())));
            }
        }
        Ok(a)
    }

    fn n(&self) -> Result<usize, Failure> {
        self.n.ok_or_else(|| Failure::input("--n is required"))
    }

    /// The field context from `p` and `q`, or from `p` and `e` when `q` is absent.
    fn field(&self) -> Result<FieldContext, Failure> {
        let p = self.p.ok_or_else(|| Failure::input("--p is required"))?;
        let ctx = match (self.q, self.e) {
            (Some(q), _) => FieldContext::new(p, q)?,
            (None, Some(e)) => FieldContext::with_characteristic(p, e)?,
            (None, None) => return Err(Failure::input("give --q, or --e to pick q automatically")),
        };
        if let Some(e) = self.e {
            if ctx.e() != e {
                return Err(Failure::input(format!("q = {} has quantum characteristic {} in F_{p}, not {e}", ctx.q(), ctx.e())));
            }
        }
        Ok(ctx)
    }

    /// `e` given directly or derived from `p` and `q`.
    fn e(&self) -> Result<u32, Failure> {
        match (self.e, self.p) {
            (Some(e), None) => Ok(e),
            (_, Some(_)) => Ok(self.field()?.e()),
            (None, None) => Err(Failure::input("--e is required (or --p and --q)")),
        }
    }

    fn residue_params(&self) -> Result<ResidueParams, Failure> {
        Ok(ResidueParams::new(self.e()?, self.a()?)?)
    }
}

fn write_output(out: Option<&PathBuf>, text: &str) -> CmdResult {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure { code: 1, message: format!("cannot write {}: {e}", path.display()) }),
        None => {
            use std::io::Write;
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(Failure { code: 1, message: format!("cannot write to stdout: {e}") })
                }
                _ => Ok(()),
            }
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(|e| Failure { code: 1, message: e.to_string() })
}

fn cmd_weight(params: &ParamArgs, conjugate: bool, lambda: &str, cfg: &ConfigFile) -> CmdResult {
    let res = resolve(params, cfg)?;
    let rp = res.residue_params()?;
    let mut lam: MultiPartition = lambda.parse()?;
    if conjugate {
        lam = lam.conjugate();
    }
    write_output(None, &weight(&lam, &rp)?.to_string())
}

#[derive(Serialize)]
struct ParamsJson<'a> {
    e: u32,
    r: usize,
    a: &'a [u32],
    n: usize,
}

#[derive(Serialize)]
struct BlockJson {
    content: Vec<u32>,
    weight: i64,
    members: Vec<String>,
    is_chain: bool,
}

#[derive(Serialize)]
struct BlocksJson<'a> {
    params: ParamsJson<'a>,
    blocks: Vec<BlockJson>,
}

fn cmd_blocks(params: &ParamArgs, out: Option<&PathBuf>, cfg: &ConfigFile) -> CmdResult {
    let res = resolve(params, cfg)?;
    let rp = res.residue_params()?;
    let n = res.n()?;
    let blocks = partition_into_blocks(n, &rp)?
        .into_iter()
        .map(|b| {
            let chain = b.dominance_chain();
            let is_chain = chain.is_some();
            let members = chain.unwrap_or_else(|| b.members.clone());
            BlockJson { content: b.content.0, weight: b.weight, members: members.iter().map(|m| m.to_string()).collect(), is_chain }
        })
        .collect();
    let doc = BlocksJson { params: ParamsJson { e: rp.e(), r: rp.r(), a: rp.a(), n }, blocks };
    write_output(out, &to_json(&doc)?)
}

fn cmd_verify(
    params: &ParamArgs,
    content: Option<&IntList>,
    out: Option<&PathBuf>,
    cap: Option<usize>,
    fault: bool,
    cfg: &ConfigFile,
) -> CmdResult {
    let res = resolve(params, cfg)?;
    let ctx = res.field()?;
    let ak = AKParams::new(ctx, res.a()?, res.n()?)?;
    let content = cfg
        .merge(content.map(|c| c.0.clone()), "content", |s| parse_int_list(s).map(|l| l.0))
        .map_err(Failure::input)?
        .ok_or_else(|| Failure::input("--content is required"))?;
    if content.len() != ctx.e() as usize {
        return Err(Failure::input(format!("--content has {} entries but e = {}", content.len(), ctx.e())));
    }
    let content = ResidueContent(
        content
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Failure::input(format!("negative content entry {x}"))))
            .collect::<Result<_, _>>()?,
    );
    let cap = cfg.merge(cap, "cap", parse_num).map_err(Failure::input)?.unwrap_or(DEFAULT_DIMENSION_CAP);
    let opts = VerifyOptions { cap, fault: fault.then_some(Fault::GramEntry) };
    let verdict = assess_weight_one_block(&ak, &content, &opts)?;
    let out = cfg.merge(out.cloned(), "out", |s| Ok(PathBuf::from(s))).map_err(Failure::input)?;
    write_output(out.as_ref(), &to_json(&verdict)?)?;
    if let Some(bad) = verdict.failures().next() {
        for f in verdict.failures() {
            eprintln!("FAIL [{}] {}", f.statement, f.detail);
        }
        return Err(Failure { code: 5, message: format!("theorem violation [{}]", bad.statement) });
    }
    Ok(())
}

#[derive(Serialize)]
struct SearchHit {
    e: u32,
    r: usize,
    a: Vec<u32>,
    n: usize,
    content: Vec<u32>,
    s: usize,
    /// Dominance-descending.
    members: Vec<String>,
    algebra_dimension: Option<u128>,
    /// Smallest prime `p ≡ 1 (mod e)` with `p > n`.
    suggested_p: u32,
    mirror_a: Vec<u32>,
}

fn all_exponents(e: u32, r: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out.into_iter().flat_map(|v| (0..e as i64).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out
}

fn suggested_prime(e: u32, n: usize) -> u32 {
    (1..).map(|k| k * e + 1).find(|&p| is_prime(p) && p as usize > n).expect("primes ≡ 1 mod e are unbounded")
}

fn algebra_dimension(r: usize, n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |d, k| d.checked_mul(r as u128)?.checked_mul(k))
}

fn cmd_search(n_max: usize, e_range: &str, r_range: &str, out: Option<&PathBuf>) -> CmdResult {
    let es = parse_range(e_range).map_err(Failure::input)?;
    let rs = parse_range(r_range).map_err(Failure::input)?;
    let mut hits = Vec::new();
    for &e in &es {
        if e < 2 {
            return Err(Failure::input(format!("e = {e} must be at least 2")));
        }
        for &r in &rs {
            if r < 1 {
                return Err(Failure::input("r must be at least 1"));
            }
            for a in all_exponents(e, r as usize) {
                let rp = ResidueParams::new(e, &a)?;
                for n in 1..=n_max {
                    for b in partition_into_blocks(n, &rp)? {
                        if b.weight != 1 {
                            continue;
                        }
                        let report = classify_weight_one(&b, &rp)?;
                        for m in &b.members {
                            if weight(m, &rp)? != 1 {
                                return Err(Error::violation("block weight invariance", format!("{m} in a weight-one block")).into());
                            }
                        }
                        hits.push(SearchHit {
                            e,
                            r: r as usize,
                            a: rp.a().to_vec(),
                            n,
                            content: b.content.0.clone(),
                            s: report.s,
                            members: report.chain.iter().rev().map(|m| m.to_string()).collect(),
                            algebra_dimension: algebra_dimension(r as usize, n),
                            suggested_p: suggested_prime(e, n),
                            mirror_a: conjugate_params(&rp).a().to_vec(),
                        });
                    }
                }
            }
        }
    }
    write_output(out, &to_json(&hits)?)
}

fn cmd_selftest(quick: bool, seed: Option<u64>, out: Option<&PathBuf>, fault: bool, cfg: &ConfigFile) -> CmdResult {
    let seed = cfg.merge(seed, "seed", parse_num).map_err(Failure::input)?.unwrap_or(DEFAULT_SEED);
    let opts = SelftestOptions { quick, fault: fault.then_some(Fault::GramEntry), seed };
    let results = run_selftest(&opts);
    let table: Vec<String> = results
        .iter()
        .map(|r| {
            format!(
                "{} {:>2}  {:<52} {:>7} ms  {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.number,
                r.statement,
                r.elapsed_ms,
                r.detail
            )
        })
        .collect();
    write_output(None, &table.join("\n"))?;
    if let Some(path) = out {
        std::fs::write(path, format!("{}\n", to_json(&results)?))
            .map_err(|e| Failure { code: 1, message: format!("cannot write {}: {e}", path.display()) })?;
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(Failure { code: 5, message: format!("{failed} of {} criteria failed", results.len()) });
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let cfg = match &cli.config {
        Some(path) => ConfigFile::load(path).map_err(Failure::input)?,
        None => ConfigFile::default(),
    };
    match &cli.command {
        Command::Weight { params, conjugate, lambda } => cmd_weight(params, *conjugate, lambda, &cfg),
        Command::Blocks { params, out } => cmd_blocks(params, out.as_ref(), &cfg),
        Command::Verify { params, content, out, cap, inject_fault } => {
            cmd_verify(params, content.as_ref(), out.as_ref(), *cap, *inject_fault, &cfg)
        }
        Command::Search { n, e, r, out } => cmd_search(*n, e, r, out.as_ref()),
        Command::Selftest { quick, seed, out, inject_fault } => cmd_selftest(*quick, *seed, out.as_ref(), *inject_fault, &cfg),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        // clap exits with 2 on usage errors and 0 for --help / --version
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            log::debug!("exit code {}", f.code);
            eprintln!("akblocks: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_and_range_parsing() {
        assert_eq!(parse_int_list("1, -2,3").unwrap(), IntList(vec![1, -2, 3]));
        assert!(parse_int_list("1,x").is_err());
        assert_eq!(parse_range("2-4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_range("3,5").unwrap(), vec![3, 5]);
        assert!(parse_range("4-2").unwrap().is_empty());
    }

    #[test]
    fn exponent_enumeration_and_primes() {
        assert_eq!(all_exponents(2, 2).len(), 4);
        assert_eq!(suggested_prime(3, 2), 7);
        assert_eq!(suggested_prime(2, 1), 3);
        assert_eq!(algebra_dimension(2, 2), Some(8));
    }
}
