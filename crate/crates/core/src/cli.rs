//! Command-line front end.
//!
//! Exit codes: 0 verified, 1 mathematical disagreement, 2 I/O failure or
//! invalid arguments, 3 refusal because a brute-force cap was exceeded.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::caps::Caps;
use crate::checks::{commuting_pairs_suite, wreath_conjugacy_suite};
use crate::error::Error;
use crate::numtheory::{bound_check, sigma};
use crate::output::{write_sequence, Method, OutputFormat};
use crate::pipeline::{
    coeffs_brute, coeffs_classes, coeffs_classes_product_form, coeffs_product, growth_report, verify_identity_with,
    verify_log,
};
use crate::wreath::{conjugacy_classes_brute, k_wreath};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sigma-triples",
    version,
    about = "Expand prod (1-u^j)^-sigma(j) and check it against commuting-triple counts in S_n"
)]
pub struct Cli {
    #[command(flatten)]
    caps: CapArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Largest n for the naive triple loop over S_n.
    #[arg(long, global = true, default_value_t = Caps::default().naive)]
    naive_cap: usize,
    /// Largest n for which S_n is tabulated.
    #[arg(long, global = true, default_value_t = Caps::default().centralizer)]
    cent_cap: usize,
    /// Largest wreath product order t^m * m! that may be tabulated.
    #[arg(long, global = true, default_value_t = Caps::default().wreath)]
    wreath_cap: u64,
}

impl From<&CapArgs> for Caps {
    fn from(a: &CapArgs) -> Self {
        Caps {
            naive: a.naive_cap,
            centralizer: a.cent_cap,
            wreath: a.wreath_cap,
        }
    }
}

#[derive(Debug, Args)]
struct SeqOut {
    #[arg(long, value_enum, default_value = "bfile")]
    format: OutputFormat,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Omit metadata (JSON emits a bare array).
    #[arg(long)]
    no_meta: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients of the sigma product.
    Expand {
        #[arg(short = 'N', long)]
        order: usize,
        #[command(flatten)]
        out: SeqOut,
    },
    /// Coefficients from wreath-product class counts.
    Classes {
        #[arg(short = 'N', long)]
        order: usize,
        /// Use the truncated product of P(u^t)^t instead of the cycle-type sum.
        #[arg(long)]
        product_form: bool,
        #[command(flatten)]
        out: SeqOut,
    },
    /// T(n)/n! from explicit symmetric group tables.
    Brute {
        #[arg(short = 'N', long)]
        order: usize,
        #[command(flatten)]
        out: SeqOut,
    },
    /// Number of conjugacy classes of Z_t wr S_m.
    Wreath {
        #[arg(short, long)]
        t: usize,
        #[arg(short, long)]
        m: usize,
        /// Also count classes by orbit enumeration.
        #[arg(long)]
        brute: bool,
    },
    /// Cross-check all pipelines, the log identity and the small-group suites.
    Verify {
        #[arg(short = 'N', long)]
        order: usize,
        #[arg(short = 'K', long, default_value_t = 6)]
        brute_max: usize,
        /// Replace sigma(j) by a value on the product side, e.g. 3=5 (negative control).
        #[arg(long, value_parser = parse_override)]
        sigma_override: Vec<(u64, u64)>,
    },
    /// Compare the formal log of the product with the divisor-sum formula.
    LogCheck {
        #[arg(short = 'N', long)]
        order: usize,
    },
    /// Check sum_{a|d} a sigma(a) < d^4.
    BoundCheck {
        #[arg(long, short = 'd')]
        d_max: u64,
    },
    /// n-th roots of the coefficients.
    Growth {
        #[arg(short = 'N', long)]
        order: usize,
    },
}

fn parse_override(s: &str) -> Result<(u64, u64), String> {
    let (j, v) = s.split_once('=').ok_or_else(|| format!("expected J=VALUE, got {s:?}"))?;
    let j: u64 = j.trim().parse().map_err(|e| format!("bad index {j:?}: {e}"))?;
    let v: u64 = v.trim().parse().map_err(|e| format!("bad value {v:?}: {e}"))?;
    if j == 0 {
        return Err("index must be at least 1".into());
    }
    Ok((j, v))
}

/// Parses `args` (including the program name) and runs the command,
/// printing reports to `stdout` and diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{rendered}");
            } else {
                let _ = write!(stderr, "{rendered}");
            }
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::ResourceCap { .. } => EXIT_CAP,
                Error::Domain(_) => EXIT_IO,
                Error::Internal(_) => EXIT_DISAGREE,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_IO
        }
    }
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(out: &SeqOut, method: Method, values: &[BigInt], stdout: &mut dyn Write) -> Result<(), Failure> {
    match &out.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| io::Error::new(e.kind(), format!("cannot write {}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_sequence(&mut w, out.format, method, values, !out.no_meta)?;
            w.flush()?;
        }
        None => write_sequence(stdout, out.format, method, values, !out.no_meta)?,
    }
    Ok(())
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let caps = Caps::from(&cli.caps);
    match &cli.command {
        Command::Expand { order, out } => {
            let s = coeffs_product(*order);
            emit(out, Method::Product, s.coeffs(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Classes {
            order,
            product_form,
            out,
        } => {
            let s = if *product_form {
                coeffs_classes_product_form(*order)
            } else {
                coeffs_classes(*order)
            };
            emit(out, Method::Classes, s.coeffs(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Brute { order, out } => {
            let values: Vec<BigInt> = coeffs_brute(*order, &caps)?.into_iter().map(BigInt::from).collect();
            emit(out, Method::Brute, &values, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Wreath { t, m, brute } => {
            let k = k_wreath(*t, *m)?;
            if *brute {
                let t32 = u32::try_from(*t).map_err(|_| Error::Domain(format!("t = {t} is too large")))?;
                let orbits = conjugacy_classes_brute(t32, *m, caps.wreath)?.count();
                let matched = k == orbits.into();
                writeln!(
                    stdout,
                    "k={k}, brute={orbits}, {}",
                    if matched { "match" } else { "MISMATCH" }
                )?;
                Ok(if matched { EXIT_OK } else { EXIT_DISAGREE })
            } else {
                writeln!(stdout, "k={k}")?;
                Ok(EXIT_OK)
            }
        }
        Command::Verify {
            order,
            brute_max,
            sigma_override,
        } => verify(*order, *brute_max, sigma_override, &caps, stdout),
        Command::LogCheck { order } => {
            let check = verify_log(*order)?;
            match check.first_mismatch {
                None => {
                    writeln!(stdout, "log coefficients agree for d = 1..={order}")?;
                    Ok(EXIT_OK)
                }
                Some(d) => {
                    writeln!(
                        stdout,
                        "log coefficient mismatch at d = {d}: series {} vs divisor sum {}",
                        check.computed.coeff(d),
                        check.expected[d]
                    )?;
                    Ok(EXIT_DISAGREE)
                }
            }
        }
        Command::BoundCheck { d_max } => {
            let report = bound_check(*d_max)?;
            if let Some(r) = report.unit_row() {
                writeln!(
                    stdout,
                    "note: d = 1 gives lhs = {} and rhs = {}; the strict bound is checked from d = 2",
                    r.lhs, r.rhs
                )?;
            }
            let failures = report.failures();
            if failures.is_empty() {
                writeln!(stdout, "strict bound holds for 2 <= d <= {d_max}")?;
                Ok(EXIT_OK)
            } else {
                writeln!(stdout, "strict bound FAILS at d = {:?}", failures)?;
                Ok(EXIT_DISAGREE)
            }
        }
        Command::Growth { order } => {
            writeln!(stdout, "n coefficient nth_root")?;
            for row in growth_report(*order)? {
                writeln!(stdout, "{} {} {:.6}", row.n, row.coeff, row.nth_root)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn verify(
    order: usize,
    brute_max: usize,
    overrides: &[(u64, u64)],
    caps: &Caps,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let exponent = |j: u64| {
        overrides
            .iter()
            .rev()
            .find(|(k, _)| *k == j)
            .map_or_else(|| sigma(j).expect("j >= 1"), |&(_, v)| v)
    };
    let report = verify_identity_with(order, Some(brute_max), caps, exponent)?;
    let mut ok = true;
    match report.first_disagreement() {
        None => writeln!(
            stdout,
            "identity: product = classes for n = 0..={order}, = brute for n = 0..={brute_max}: ok"
        )?,
        Some(n) => {
            ok = false;
            let brute = report
                .coeffs_brute
                .as_ref()
                .and_then(|b| b.get(n))
                .map_or("-".to_string(), ToString::to_string);
            writeln!(
                stdout,
                "identity: FAILED, first disagreement at coefficient n = {n} (product {}, classes {}, brute {brute})",
                report.coeffs_product[n], report.coeffs_classes[n]
            )?;
        }
    }
    if order >= 1 {
        let log = verify_log(order)?;
        match log.first_mismatch {
            None => writeln!(stdout, "log: formal log matches divisor sums for d = 1..={order}: ok")?,
            Some(d) => {
                ok = false;
                writeln!(stdout, "log: FAILED at d = {d}")?;
            }
        }
    }
    for suite in [commuting_pairs_suite(caps)?, wreath_conjugacy_suite(caps)?] {
        ok &= suite.ok();
        writeln!(stdout, "{suite}")?;
    }
    if !overrides.is_empty() && !report.overall {
        writeln!(stdout, "(sigma overrides in effect: {overrides:?})")?;
    }
    writeln!(stdout, "{}", if ok { "verified" } else { "NOT verified" })?;
    Ok(if ok { EXIT_OK } else { EXIT_DISAGREE })
}
