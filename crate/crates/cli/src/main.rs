//! trigbounds: coefficient queries, bound generation, certification runs,
//! remainder tables and the Bercu check.
//!
//! Exit codes: 0 success/Proved, 1 usage error, 2 Undecided,
//! 3 counterexample found.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use trigbounds_core::bernoulli::bernoulli;
use trigbounds_core::consts;
use trigbounds_core::rational::format_decimal;
use trigbounds_core::wd::WdTheorem;
use trigbounds_core::*;

use std::result::Result;

#[derive(Parser)]
#[command(name = "trigbounds", version, about = "Certified polynomial bounds for Wilker-Cusa-Huygens-type trigonometric expressions", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqArg {
    A,
    B,
    C,
    D,
    Wilker5,
    Huygens6,
}

impl SeqArg {
    fn id(self) -> SeriesId {
        match self {
            SeqArg::A => SeriesId::SeqA,
            SeqArg::B => SeriesId::SeqB,
            SeqArg::C => SeriesId::SeqC,
            SeqArg::D => SeriesId::SeqD,
            SeqArg::Wilker5 => SeriesId::Wilker5,
            SeqArg::Huygens6 => SeriesId::Huygens6,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact coefficient magnitudes of a catalogued sequence
    Coeffs {
        #[arg(long, value_enum, ignore_case = true)]
        seq: SeqArg,
        /// Single index to print
        #[arg(long, conflicts_with = "k_max")]
        k: Option<u32>,
        /// Print every index from the sequence start through this one
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Lower/upper bound polynomials for a theorem at a given order
    Bounds {
        /// Theorem number, 1-6
        #[arg(long)]
        theorem: u32,
        /// Sandwich order n (theorems 1-4) or series order m (5-6)
        #[arg(long)]
        order: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// With --format csv: sample count for an x,lower,f,upper table
        #[arg(long)]
        grid: Option<u32>,
        /// Working precision for the f column and endpoint corrections
        #[arg(long, env = "TRIGBOUNDS_PRECISION", default_value_t = 128)]
        precision_bits: u32,
    },
    /// Certify bounds on (0, pi/2); exit code reflects the verdict
    Verify {
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        theorem: Option<u32>,
        #[arg(long, conflicts_with = "all")]
        order: Option<u32>,
        /// Run every theorem at every admissible order up to --order-max
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 3, requires = "all")]
        order_max: u32,
        /// Near-zero cutoff as a rational, e.g. 1/1000; default is automatic
        #[arg(long)]
        epsilon: Option<String>,
        /// Base of the precision ladder (doubled twice on hard leaves)
        #[arg(long, env = "TRIGBOUNDS_PRECISION", default_value_t = 64)]
        precision_bits: u32,
        /// 0 = library default parallelism, 1 = serial, n = n threads
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Endpoint remainders R_n(pi/2) for theorem 5 or 6
    RemainderTable {
        #[arg(long)]
        theorem: u32,
        #[arg(long, default_value_t = 3)]
        from: u32,
        #[arg(long, default_value_t = 6)]
        to: u32,
        /// Certain significant figures per entry
        #[arg(long, default_value_t = 6)]
        digits: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the rational-bound refinement of order m on (0, pi/2)
    Bercu {
        #[arg(long, default_value_t = 7)]
        m: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact Bernoulli numbers B_n
    Bernoulli {
        #[arg(long, conflicts_with = "n_max")]
        n: Option<u32>,
        /// Print B_0 through B_{n-max}
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap renders help/version through the error path with exit 0
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Result<u8, UsageError> {
    match cmd {
        Cmd::Coeffs { seq, k, k_max, format } => coeffs(seq, k, k_max, format),
        Cmd::Bounds { theorem, order, format, grid, precision_bits } => {
            bounds(theorem, order, format, grid, precision_bits)
        }
        Cmd::Verify { theorem, order, all, order_max, epsilon, precision_bits, jobs, format } => {
            let opts = VerifyOptions {
                epsilon: match epsilon {
                    Some(s) => EpsilonPolicy::Fixed(s.parse()?),
                    None => EpsilonPolicy::Auto,
                },
                ladder: vec![precision_bits, precision_bits * 2, precision_bits * 4],
                jobs,
                ..VerifyOptions::default()
            };
            let runs: Vec<(u32, u32)> = if all {
                let mut v = Vec::new();
                for t in 1..=4 {
                    for n in 1..=order_max {
                        v.push((t, n));
                    }
                }
                for (t, floor) in [(5, 2), (6, 3)] {
                    for m in floor..=order_max.max(floor) {
                        v.push((t, m));
                    }
                }
                v
            } else {
                let t = theorem.unwrap();
                let ord = order.unwrap_or(match t {
                    5 => 2,
                    6 => 3,
                    _ => 1,
                });
                vec![(t, ord)]
            };
            verify(&runs, &opts, format)
        }
        Cmd::RemainderTable { theorem, from, to, digits, format } => {
            let rows = remainder_table(wd_theorem(theorem)?, from, to, digits)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
                Format::Csv => {
                    println!("n,r_max");
                    for r in &rows {
                        println!("{},{}", r.n, r.r_max);
                    }
                }
                Format::Text | Format::Latex => {
                    let w = rows.iter().map(|r| r.r_max.len()).max().unwrap_or(0);
                    println!("{:>3}  {:>w$}", "n", "R_n(pi/2)");
                    for r in &rows {
                        println!("{:>3}  {:>w$}", r.n, r.r_max);
                    }
                }
            }
            Ok(0)
        }
        Cmd::Bercu { m, format } => {
            let cert = bercu_check(m)?;
            emit_certs(std::slice::from_ref(&cert), format)?;
            Ok(status_code(&[cert]))
        }
        Cmd::Bernoulli { n, n_max, format } => {
            let range: Vec<u32> = match (n, n_max) {
                (Some(n), _) => vec![n],
                (None, Some(hi)) => (0..=hi).collect(),
                (None, None) => return Err("pass --n or --n-max".into()),
            };
            match format {
                Format::Json => {
                    let vals: Vec<(u32, Rational)> = range.iter().map(|&n| (n, bernoulli(n))).collect();
                    println!("{}", serde_json::to_string_pretty(&vals)?);
                }
                Format::Csv => {
                    println!("n,value");
                    for n in range {
                        println!("{n},{}", bernoulli(n));
                    }
                }
                Format::Latex => {
                    for n in range {
                        let b = bernoulli(n);
                        println!("B_{{{n}}} = \\frac{{{}}}{{{}}}", b.numer(), b.denom());
                    }
                }
                Format::Text => {
                    let single = range.len() == 1 && n.is_some();
                    for n in range {
                        if single {
                            println!("{}", bernoulli(n));
                        } else {
                            println!("B_{n} = {}", bernoulli(n));
                        }
                    }
                }
            }
            Ok(0)
        }
    }
}

fn coeffs(seq: SeqArg, k: Option<u32>, k_max: Option<u32>, format: Format) -> Result<u8, UsageError> {
    let s = CoeffSeq::new(seq.id())?;
    let ks: Vec<u32> = match (k, k_max) {
        (Some(k), _) => vec![k],
        (None, Some(hi)) => (s.start_k..=hi).collect(),
        (None, None) => return Err("pass --k or --k-max".into()),
    };
    let vals = ks
        .iter()
        .map(|&k| Ok((k, s.magnitude(k)?)))
        .collect::<trigbounds_core::Result<Vec<(u32, Rational)>>>()?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&vals)?),
        Format::Csv => {
            println!("k,magnitude");
            for (k, v) in vals {
                println!("{k},{v}");
            }
        }
        Format::Latex => {
            for (_, v) in vals {
                println!("\\frac{{{}}}{{{}}}", v.numer(), v.denom());
            }
        }
        Format::Text => {
            for (k, v) in &vals {
                if vals.len() == 1 {
                    println!("{v}");
                } else {
                    println!("k={k}: {v}");
                }
            }
        }
    }
    Ok(0)
}

fn wd_theorem(t: u32) -> Result<WdTheorem, UsageError> {
    match t {
        5 => Ok(WdTheorem::T5),
        6 => Ok(WdTheorem::T6),
        1..=4 => Err(format!("theorem {t} has no endpoint-corrected form; use 5 or 6").into()),
        _ => Err(format!("theorem must be 1-6, got {t}").into()),
    }
}

fn sandwich_seq(t: u32) -> Result<(SeriesId, FnId), UsageError> {
    Ok(match t {
        1 => (SeriesId::SeqA, FnId::TargetT1),
        2 => (SeriesId::SeqB, FnId::TargetT2),
        3 => (SeriesId::SeqC, FnId::TargetT3),
        4 => (SeriesId::SeqD, FnId::TargetT4),
        _ => return Err(format!("theorem must be 1-6, got {t}").into()),
    })
}

fn target_latex(t: u32) -> &'static str {
    match t {
        1 => "\\cos x - \\frac{\\sin^{3} x}{x^{3}}",
        2 => "\\frac{\\sin x}{x} - \\frac{2 + \\cos x}{3}",
        3 => "\\frac{2 \\sin x \\cos x}{x} + \\frac{\\sin x}{x} - 3\\cos x",
        4 => "\\frac{\\sin^{2} x \\cos x}{x^{2}} + \\frac{\\sin x}{x} - 2\\cos x",
        5 => "\\frac{x^{2}}{\\sin^{2} x} + \\frac{x \\cos x}{\\sin x}",
        _ => "\\frac{3x}{\\sin x} + \\cos x",
    }
}

fn target_text(t: u32) -> &'static str {
    match t {
        1 => "cos x - (sin x / x)^3",
        2 => "sin x / x - (2 + cos x)/3",
        3 => "2 (sin x / x) cos x + sin x / x - 3 cos x",
        4 => "(sin x / x)^2 cos x + sin x / x - 2 cos x",
        5 => "(x / sin x)^2 + x cos x / sin x",
        _ => "3 x / sin x + cos x",
    }
}

fn bounds(t: u32, order: u32, format: Format, grid: Option<u32>, prec: u32) -> Result<u8, UsageError> {
    // assemble the two polynomials; theorems 5-6 carry the correction term
    let (lower, upper, correction, fnid) = if t >= 5 {
        let b = wd_bounds(wd_theorem(t)?, order)?;
        let fnid = if t == 5 { FnId::TargetT5 } else { FnId::TargetT6 };
        let corr = (b.correction_exponent, b.correction_coefficient.clone());
        if format == Format::Json {
            // the correction coefficient is an enclosure; emit its endpoints
            let j = serde_json::json!({
                "theorem": t,
                "order": order,
                "lower": b.lower,
                "upper_poly_part": b.upper_poly_part,
                "correction_exponent": b.correction_exponent,
                "correction_lo": b.correction_coefficient.lo_rational(),
                "correction_hi": b.correction_coefficient.hi_rational(),
            });
            println!("{}", serde_json::to_string_pretty(&j)?);
            return Ok(0);
        }
        (b.lower, b.upper_poly_part, Some(corr), fnid)
    } else {
        let (id, fnid) = sandwich_seq(t)?;
        let pair = alternating_bounds(&CoeffSeq::new(id)?, order)?;
        if format == Format::Json {
            println!("{}", serde_json::to_string_pretty(&pair)?);
            return Ok(0);
        }
        (pair.lower, pair.upper, None, fnid)
    };
    match format {
        Format::Json => unreachable!(),
        Format::Latex => {
            let corr_latex = match &correction {
                Some((e, c)) => format!(
                    " + {}\\,x^{{{e}}}",
                    c.to_decimal(8).unwrap_or_else(|| format!("{:.8}", c.midpoint_f64()))
                ),
                None => String::new(),
            };
            println!("{} < {} < {}{}", lower.latex(), target_latex(t), upper.latex(), corr_latex);
        }
        Format::Csv => {
            let n = grid.unwrap_or(32);
            if n == 0 {
                return Err("--grid must be positive".into());
            }
            println!("x,lower,f,upper");
            let b = consts::half_pi_lo();
            for i in 1..=n {
                let x = &b * &Rational::new(i, n + 1);
                let f = enclose(fnid, &Enclosure::from_rational(&x, prec));
                let mut up = upper.eval(&x);
                if let Some((e, c)) = &correction {
                    up = up + c.hi_rational() * x.pow(*e as i32)?;
                }
                println!(
                    "{},{},{},{}",
                    format_decimal(&x, 12),
                    format_decimal(&lower.eval(&x), 12),
                    f.to_decimal(12).unwrap_or_else(|| format!("{:.12}", f.midpoint_f64())),
                    format_decimal(&up, 12),
                );
            }
        }
        Format::Text => {
            println!("target : {}", target_text(t));
            println!("lower  : {lower}");
            match &correction {
                Some((e, c)) => println!(
                    "upper  : {upper} + C*x^{e},  C in [{}, {}]",
                    format_decimal(&c.lo_rational(), 10),
                    format_decimal(&c.hi_rational(), 10)
                ),
                None => println!("upper  : {upper}"),
            }
            println!("valid  : 0 < x < pi/2");
        }
    }
    Ok(0)
}

fn verify(runs: &[(u32, u32)], opts: &VerifyOptions, format: Format) -> Result<u8, UsageError> {
    let mut certs = Vec::new();
    for &(t, ord) in runs {
        if t >= 5 {
            let b = wd_bounds(wd_theorem(t)?, ord)?;
            for side in [WdSide::Lower, WdSide::Upper] {
                certs.push(certify_wd_bound(&b, side, opts)?);
            }
        } else {
            let (id, fnid) = sandwich_seq(t)?;
            let pair = alternating_bounds(&CoeffSeq::new(id)?, ord)?;
            certs.push(certify_bound(&pair, fnid, opts)?);
        }
    }
    emit_certs(&certs, format)?;
    Ok(status_code(&certs))
}

fn emit_certs(certs: &[Certificate], format: Format) -> Result<(), UsageError> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(certs)?),
        Format::Csv => {
            println!("claim,status,subdivisions,min_gap");
            for c in certs {
                println!("{},{:?},{},{}", c.claim, c.status, c.subdivisions, c.min_gap);
            }
        }
        Format::Text | Format::Latex => {
            for c in certs {
                println!(
                    "{:<46} {:?}  leaves={}  min_gap={}",
                    c.claim, c.status, c.subdivisions, c.min_gap
                );
                if let Some(w) = &c.counterexample {
                    println!("  counterexample near x = {w}");
                }
            }
        }
    }
    Ok(())
}

fn status_code(certs: &[Certificate]) -> u8 {
    let mut code = 0u8;
    for c in certs {
        code = code.max(match c.status {
            CertStatus::Proved => 0,
            CertStatus::Undecided => 2,
            CertStatus::CounterexampleFound => 3,
        });
    }
    code
}
