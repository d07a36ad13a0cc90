//! `aiforge`: construct symmetric Boolean functions with provable algebraic
//! immunity and verify the claims, exactly or by rank certificate.
//!
//! Results go to stdout (text by default, one JSON record per line with
//! `--json`); diagnostics go to stderr with a nonzero exit code.

use std::io::{BufWriter, Write};
use std::process::ExitCode;

use aiforge::ai::{certify_ai_lower_bound, compute_ai_exact};
use aiforge::boolfun::{binomial, SanfVector, SymmetricFunction, MAX_TT_VARS};
use aiforge::construction::{
    construct_function, count_formula, enumerate_params, validate_pair, ConstructionParams,
};
use aiforge_cli::record::{CertifyRecord, FunctionRecord, ParamsRecord};
use aiforge_cli::tables;
use clap::{Args, Parser, Subcommand};

type CliError = Box<dyn std::error::Error>;

#[derive(Parser)]
#[command(
    name = "aiforge",
    version,
    about = "Construct and verify symmetric Boolean functions with provable algebraic immunity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one member of the (k, d) family from explicit parameters
    Construct(ConstructArgs),
    /// Convert between SVV and SANF vectors
    Transform(TransformArgs),
    /// Exact algebraic immunity by annihilator search (n <= 24)
    Ai(AiArgs),
    /// Prove AI >= d by a weight-restricted rank certificate
    Certify(CertifyArgs),
    /// Stream the whole (k, d) family in canonical order
    Enumerate(EnumerateArgs),
    /// Check an embedded golden table against the implementation
    VerifyTable(VerifyTableArgs),
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    /// Class values m_0..m_t as a bit string (default: all zeros)
    #[arg(long)]
    m: Option<String>,
    /// Values for the free weights d..=n-d as a bit string (default: all zeros)
    #[arg(long, conflicts_with = "free_index")]
    free: Option<String>,
    /// Free values as a big-endian counter over the free positions
    #[arg(long)]
    free_index: Option<u128>,
    /// Also print the SANF vector
    #[arg(long)]
    sanf: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["svv", "sanf"])))]
struct TransformArgs {
    /// Simplified value vector, index 0 leftmost
    #[arg(long)]
    svv: Option<String>,
    /// Simplified ANF vector, index 0 leftmost
    #[arg(long)]
    sanf: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AiArgs {
    #[arg(long)]
    svv: String,
    /// Also print the witness annihilator as a list of monomial masks
    #[arg(long)]
    witness: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long)]
    svv: String,
    /// Claimed lower bound, 1 <= d <= n/2
    #[arg(long)]
    d: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    /// Brute-force the exact immunity of every member (requires n <= 14)
    #[arg(long)]
    verify_ai: bool,
    /// Stop after this many functions
    #[arg(long)]
    limit: Option<u64>,
    /// Count the family lazily, check it against the closed formula, print it
    #[arg(long)]
    count_only: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyTableArgs {
    /// Which golden table to check
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    table: u8,
    /// Additionally run the slow 26-variable certificate (table 2 only)
    #[arg(long)]
    deep: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Construct(args) => cmd_construct(args),
        Command::Transform(args) => cmd_transform(args),
        Command::Ai(args) => cmd_ai(args),
        Command::Certify(args) => cmd_certify(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::VerifyTable(args) => cmd_verify_table(args),
    }
}

fn parse_bits(s: &str, what: &str) -> Result<Vec<bool>, CliError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => {
                Err(format!("invalid character {other:?} in {what}: expected '0' or '1'").into())
            }
        })
        .collect()
}

fn params_record(p: &ConstructionParams) -> ParamsRecord {
    ParamsRecord {
        k: p.k(),
        d: p.d(),
        m: p.m_string(),
        free: p.free_string(),
    }
}

fn cmd_construct(args: ConstructArgs) -> Result<ExitCode, CliError> {
    validate_pair(args.k, args.d)?;
    let m_len = args.d.ilog2() as usize + 1;
    let free_len = 2 * args.k - 2 * args.d + 1;

    let m_bits = match &args.m {
        Some(s) => parse_bits(s, "--m")?,
        None => vec![false; m_len],
    };
    let free_bits = match (&args.free, args.free_index) {
        (Some(s), _) => parse_bits(s, "--free")?,
        (None, Some(idx)) => {
            if free_len < 128 && idx >> free_len != 0 {
                return Err(format!(
                    "--free-index {idx} out of range: the family has 2^{free_len} free choices"
                )
                .into());
            }
            (0..free_len)
                .map(|j| idx >> (free_len - 1 - j) & 1 == 1)
                .collect()
        }
        (None, None) => vec![false; free_len],
    };

    let params = ConstructionParams::new(args.k, args.d, m_bits, free_bits)?;
    let f = construct_function(&params);

    let mut rec = FunctionRecord::new(f.n(), f.svv_string());
    rec.params = Some(params_record(&params));
    if args.sanf {
        rec.sanf = Some(f.to_sanf().lambda_string());
    }
    if args.json {
        println!("{}", rec.to_json());
    } else {
        match &rec.sanf {
            Some(sanf) => println!("{} {} {}", params.m_string(), rec.svv, sanf),
            None => println!("{} {}", params.m_string(), rec.svv),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_transform(args: TransformArgs) -> Result<ExitCode, CliError> {
    let f = match (&args.svv, &args.sanf) {
        (Some(s), None) => SymmetricFunction::from_svv_str(s)?,
        (None, Some(s)) => SanfVector::from_lambda_str(s)?.to_function(),
        _ => unreachable!("clap enforces exactly one input"),
    };
    let mut rec = FunctionRecord::new(f.n(), f.svv_string());
    rec.sanf = Some(f.to_sanf().lambda_string());
    if args.json {
        println!("{}", rec.to_json());
    } else {
        println!("svv {}", rec.svv);
        println!("sanf {}", rec.sanf.as_deref().unwrap());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ai(args: AiArgs) -> Result<ExitCode, CliError> {
    let f = SymmetricFunction::from_svv_str(&args.svv)?;
    if f.n() > MAX_TT_VARS {
        return Err(format!(
            "n = {} exceeds the exact-search bound of {MAX_TT_VARS} variables; \
             use `aiforge certify --svv ... --d D` for a scalable lower bound",
            f.n()
        )
        .into());
    }
    let report = compute_ai_exact(&f.truth_table()?);
    let mut rec = FunctionRecord::new(f.n(), f.svv_string());
    rec.ai = Some(report.ai);
    rec.ai_kind = Some("exact".into());
    let witness_masks: Option<Vec<u64>> = args
        .witness
        .then(|| report.witness.as_ref().map(|w| w.monomials().collect()))
        .flatten();
    rec.witness = witness_masks.clone();
    if args.json {
        println!("{}", rec.to_json());
    } else {
        println!("ai {}", report.ai);
        if let Some(masks) = witness_masks {
            let rendered: Vec<String> = masks.iter().map(|m| m.to_string()).collect();
            println!("witness {}", rendered.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(args: CertifyArgs) -> Result<ExitCode, CliError> {
    let f = SymmetricFunction::from_svv_str(&args.svv)?;
    let n = f.n();
    if args.d < 1 || 2 * args.d > n {
        return Err(format!(
            "d = {} out of range: the certificate needs 1 <= d <= n/2 = {}",
            args.d,
            n / 2
        )
        .into());
    }
    let report = certify_ai_lower_bound(&f, args.d);
    let rec = CertifyRecord {
        n,
        svv: f.svv_string(),
        d: report.d,
        certified: report.certified,
        rank_f: report.rank_f,
        rank_fc: report.rank_fc,
        rows_f: report.rows_f,
        rows_fc: report.rows_fc,
        ai: report.certified.then_some(report.d),
        ai_kind: report.certified.then(|| "lower_bound".into()),
    };
    if args.json {
        println!("{}", rec.to_json());
    } else {
        println!("certified {}", rec.certified);
        println!("rank_f {}", rec.rank_f);
        println!("rank_fc {}", rec.rank_fc);
        println!("rows_f {}", rec.rows_f);
        println!("rows_fc {}", rec.rows_fc);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, CliError> {
    validate_pair(args.k, args.d)?;
    let n = 2 * args.k;

    if args.count_only {
        let expected = count_formula(args.k, args.d)?;
        let counted = enumerate_params(args.k, args.d)?.count() as u128;
        if counted != expected {
            return Err(format!(
                "lazy enumeration produced {counted} functions, formula says {expected}"
            )
            .into());
        }
        println!("{counted}");
        return Ok(ExitCode::SUCCESS);
    }

    if args.verify_ai && n > 14 {
        return Err(format!(
            "--verify-ai brute-forces every member and is limited to n <= 14 (got n = {n})"
        )
        .into());
    }

    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let limit = args.limit.map(|l| l as usize).unwrap_or(usize::MAX);
    for params in enumerate_params(args.k, args.d)?.take(limit) {
        let f = construct_function(&params);
        let sanf = f.to_sanf().lambda_string();
        let ai = if args.verify_ai {
            Some(compute_ai_exact(&f.truth_table()?).ai)
        } else {
            None
        };
        if args.json {
            let mut rec = FunctionRecord::new(f.n(), f.svv_string());
            rec.sanf = Some(sanf);
            rec.ai = ai;
            rec.ai_kind = ai.map(|_| "exact".into());
            rec.params = Some(params_record(&params));
            writeln!(out, "{}", rec.to_json())?;
        } else {
            match ai {
                Some(ai) => writeln!(out, "{} {} {} {}", params.m_string(), f, sanf, ai)?,
                None => writeln!(out, "{} {} {}", params.m_string(), f, sanf)?,
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_table(args: VerifyTableArgs) -> Result<ExitCode, CliError> {
    let (outcome, unit) = match args.table {
        1 => (tables::verify_table1(), "rows"),
        2 => (tables::verify_table2(), "patterns"),
        _ => unreachable!("clap restricts --table to 1..=2"),
    };
    let mut failed = !outcome.passed();
    for failure in &outcome.failures {
        eprintln!("mismatch: {failure}");
    }

    if args.deep && args.table == 2 {
        let (f, report) = tables::deep_certificate();
        let expected: u128 = (0..tables::TABLE2_D)
            .map(|i| binomial(2 * tables::TABLE2_K, i))
            .sum();
        println!(
            "deep svv={} d={} certified={} rank_f={} rank_fc={} rows_f={} rows_fc={}",
            f,
            report.d,
            report.certified,
            report.rank_f,
            report.rank_fc,
            report.rows_f,
            report.rows_fc
        );
        if !report.certified
            || report.rank_f as u128 != expected
            || report.rank_fc as u128 != expected
        {
            eprintln!(
                "mismatch: deep certificate expected full column rank {expected} on both sides"
            );
            failed = true;
        }
    }

    let ok = outcome.checked - outcome.failures.len().min(outcome.checked);
    if failed {
        println!("FAIL {ok}/{} {unit}", outcome.checked);
        Ok(ExitCode::FAILURE)
    } else {
        println!("PASS {}/{} {unit}", outcome.checked, outcome.checked);
        Ok(ExitCode::SUCCESS)
    }
}
