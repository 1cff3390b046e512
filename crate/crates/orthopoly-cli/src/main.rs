//! Command-line driver for the exact orthogonal-polynomial toolkit.
//!
//! Three subcommands:
//! - `eval` prints one family member in the canonical polynomial text form
//! - `verify` sweeps one identity over a parameter grid and streams one
//!   JSON report line per parameter point
//! - `solve` builds a triangular system, solves it with two independent
//!   algorithms, cross-checks them, and prints the solution as JSON
//!
//! Exit codes: `0` — everything passed; `1` — a mathematical check failed;
//! `2` — invalid configuration (unknown identity ids, parameter-range
//! violations, singular or pole parameters pinned at top level).
//!
//! Every randomized sweep is fully determined by `--seed`: identical
//! command, seed, and parameters produce byte-identical output.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use orthopoly::error::Error;
use orthopoly::families::{
    charlier, check_derivative_shift, default_limit_tolerance, jacobi, laguerre,
    limit_check_jacobi_to_laguerre, ode_residual, CharlierParams, Family, JacobiParams,
    JacobiVariant, LaguerreParams,
};
use orthopoly::generalized::{
    gen_jacobi, sobolev_laguerre, sym_ultraspherical, GeneralizedJacobiParams,
    SobolevLaguerreParams, UltrasphericalVariant,
};
use orthopoly::identities::{
    gen_inv_laguerre, inv_charlier, inv_jacobi, inv_laguerre, laguerre_convolution, master_jacobi,
    master_jacobi_specializations, monomial_expansion, vandermonde, vanishing_sum,
    LaguerreInversion,
};
use orthopoly::poly::Poly;
use orthopoly::rational::{
    factorial, format_rational, parse_rational, pochhammer, rat, rat_int, Rational,
};
use orthopoly::report::{params_map, IdentityReport};
use orthopoly::sampling::{random_rational, rng_from_seed};
use orthopoly::solver::{
    build_t, build_u, solve_backsub, solve_closed_form, SolvedSystem, SystemFamily,
    TriangularSystem,
};

// === command-line grammar ==================================================

#[derive(Parser)]
#[command(
    name = "orthopoly",
    version,
    about = "Exact construction and verification of classical and generalized orthogonal polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one family member in the canonical polynomial text form
    Eval(EvalArgs),
    /// Sweep one identity over a parameter grid, streaming JSON reports
    Verify(VerifyArgs),
    /// Solve a triangular system two ways and print the solution as JSON
    Solve(SolveArgs),
}

fn rational_value(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalFamily {
    Jacobi,
    Laguerre,
    Charlier,
    GenJacobi,
    SobolevLaguerre,
    SymUltra,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    P,
    Q,
}

#[derive(Args)]
struct EvalArgs {
    /// Family to evaluate
    #[arg(long, value_enum)]
    family: EvalFamily,
    /// Degree of the member
    #[arg(long)]
    n: u32,
    /// Jacobi/Laguerre parameter α (default 0)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    /// Jacobi parameter β (default 0)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    beta: Option<Rational>,
    /// Charlier parameter a (default 1)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    a: Option<Rational>,
    /// First point mass: at x = −1 for gen-jacobi, on f(0)g(0) for
    /// sobolev-laguerre, the symmetric endpoint mass for sym-ultra
    /// (default 0)
    #[arg(long = "M", value_parser = rational_value, allow_hyphen_values = true)]
    mass_m: Option<Rational>,
    /// Second point mass: at x = +1 for gen-jacobi, on f'(0)g'(0) for
    /// sobolev-laguerre (default 0)
    #[arg(long = "N", value_parser = rational_value, allow_hyphen_values = true)]
    mass_n: Option<Rational>,
    /// Normalization variant for sym-ultra
    #[arg(long, value_enum, default_value = "p")]
    variant: VariantArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity id: inv-jacobi, inv-laguerre, inv-laguerre-star,
    /// inv-charlier, gen-inv-laguerre, master-jacobi,
    /// master-specializations, monomial-laguerre, monomial-jacobi, nulalg,
    /// vandermonde, convolution, tu-product, tri-def, ode, diff-shift,
    /// limit
    #[arg(long)]
    identity: String,
    /// Largest order/degree swept per parameter point
    #[arg(long, default_value_t = 8)]
    order_max: u32,
    /// Number of random parameter points (pinned parameters collapse the
    /// grid to a single point)
    #[arg(long, default_value_t = 5)]
    grid: u32,
    /// Seed determining the random parameter grid
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Pin parameter α
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    /// Pin parameter β
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    beta: Option<Rational>,
    /// Pin the Charlier parameter a
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    a: Option<Rational>,
    /// Pin the summand parameter b (nulalg, vandermonde)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    b: Option<Rational>,
    /// Pin the denominator parameter c (vandermonde)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    c: Option<Rational>,
    /// Pin the parameter shift p (gen-inv-laguerre)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    p: Option<Rational>,
    /// Pin the parameter shift q (gen-inv-laguerre)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    q: Option<Rational>,
    /// Sample point for the limit certificate (default: 1/2, 1 and 2)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    x: Option<Rational>,
    /// Allowance for the limit certificate (default 1/10000)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    tolerance: Option<Rational>,
    /// Write the JSON lines here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveFamily {
    Jacobi,
    Laguerre,
}

#[derive(Clone, Copy, ValueEnum)]
enum RhsSource {
    Random,
    File,
}

#[derive(Args)]
struct SolveArgs {
    /// System family
    #[arg(long, value_enum)]
    family: SolveFamily,
    /// Number of equations (at least 1)
    #[arg(long)]
    order: u32,
    /// Index shift of the Laguerre equations (laguerre only)
    #[arg(long, default_value_t = 0)]
    shift: u32,
    /// Family parameter α (default 0)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    /// Family parameter β (jacobi only; default 0)
    #[arg(long, value_parser = rational_value, allow_hyphen_values = true)]
    beta: Option<Rational>,
    /// Where the right-hand sides come from
    #[arg(long, value_enum, default_value = "random")]
    rhs: RhsSource,
    /// File with one polynomial per line (requires --rhs file)
    #[arg(long)]
    rhs_file: Option<PathBuf>,
    /// Seed for random right-hand sides
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON line here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

// === outcome plumbing ======================================================

/// A command that ran but must exit nonzero.
enum Failure {
    /// A mathematical check failed (exit 1).
    Math(String),
    /// The configuration was invalid (exit 2).
    Config(String),
}

type RunResult = Result<(), Failure>;

/// Library errors at the top level of a command: implementation-bug
/// signals are mathematical failures, everything else is bad
/// configuration.
fn classify(err: Error) -> Failure {
    match err {
        Error::NonConstant(_) | Error::Residual(_) => Failure::Math(err.to_string()),
        _ => Failure::Config(err.to_string()),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> RunResult {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Verify(args) => run_verify(args),
        Command::Solve(args) => run_solve(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("configuration error: {msg}");
            ExitCode::from(2)
        }
    }
}

// === eval ==================================================================

fn run_eval(args: EvalArgs) -> RunResult {
    let alpha = args.alpha.unwrap_or_else(|| rat_int(0));
    let beta = args.beta.unwrap_or_else(|| rat_int(0));
    let member = match args.family {
        EvalFamily::Jacobi => jacobi(
            args.n,
            &JacobiParams::new(alpha, beta),
            JacobiVariant::Def1,
        ),
        EvalFamily::Laguerre => laguerre(args.n, &LaguerreParams::new(alpha)),
        EvalFamily::Charlier => charlier(
            args.n,
            &CharlierParams::new(args.a.unwrap_or_else(|| rat_int(1))),
        ),
        EvalFamily::GenJacobi => {
            let params = GeneralizedJacobiParams::new(
                alpha,
                beta,
                args.mass_m.unwrap_or_else(|| rat_int(0)),
                args.mass_n.unwrap_or_else(|| rat_int(0)),
            )
            .map_err(classify)?;
            gen_jacobi(args.n, &params)
        }
        EvalFamily::SobolevLaguerre => {
            let params = SobolevLaguerreParams::new(
                alpha,
                args.mass_m.unwrap_or_else(|| rat_int(0)),
                args.mass_n.unwrap_or_else(|| rat_int(0)),
            )
            .map_err(classify)?;
            sobolev_laguerre(args.n, &params)
        }
        EvalFamily::SymUltra => {
            if args.mass_n.is_some() {
                return Err(Failure::Config(
                    "--N does not apply to sym-ultra (one symmetric mass, --M)".into(),
                ));
            }
            let variant = match args.variant {
                VariantArg::P => UltrasphericalVariant::P,
                VariantArg::Q => UltrasphericalVariant::Q,
            };
            let mass = args.mass_m.unwrap_or_else(|| rat_int(0));
            sym_ultraspherical(args.n, &alpha, &mass, variant).map_err(classify)?
        }
    };
    println!("{member}");
    Ok(())
}

// === verify ================================================================

fn run_verify(args: VerifyArgs) -> RunResult {
    let reports = dispatch_verify(&args)?;
    let mut text = String::new();
    for report in &reports {
        text.push_str(&report.to_json_line());
        text.push('\n');
    }
    emit(&text, &args.out)?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Math(format!(
            "{failed} of {} parameter points failed for {}",
            reports.len(),
            args.identity
        )))
    }
}

fn dispatch_verify(args: &VerifyArgs) -> Result<Vec<IdentityReport>, Failure> {
    match args.identity.as_str() {
        "inv-jacobi" => Ok(verify_inv_jacobi(args)),
        "inv-laguerre" => Ok(verify_inv_laguerre(args, LaguerreInversion::Main, "inv-laguerre")),
        "inv-laguerre-star" => Ok(verify_inv_laguerre(
            args,
            LaguerreInversion::Star,
            "inv-laguerre-star",
        )),
        "inv-charlier" => Ok(verify_inv_charlier(args)),
        "gen-inv-laguerre" => Ok(verify_gen_inv_laguerre(args)),
        "master-jacobi" => Ok(verify_master_jacobi(args)),
        "master-specializations" => Ok(verify_master_specializations(args)),
        "monomial-laguerre" => Ok(verify_monomial_laguerre(args)),
        "monomial-jacobi" => Ok(verify_monomial_jacobi(args)),
        "nulalg" => Ok(verify_nulalg(args)),
        "vandermonde" => Ok(verify_vandermonde(args)),
        "convolution" => Ok(verify_convolution(args)),
        "tu-product" => Ok(verify_tu_product(args)),
        "tri-def" => Ok(verify_tri_def(args)),
        "ode" => Ok(verify_ode(args)),
        "diff-shift" => Ok(verify_diff_shift(args)),
        "limit" => verify_limit(args),
        other => Err(Failure::Config(format!("unknown identity id: {other}"))),
    }
}

/// One random rational per grid slot unless the value is pinned.
fn single_grid(pinned: &Option<Rational>, grid: u32, seed: u64) -> Vec<Rational> {
    if let Some(v) = pinned {
        return vec![v.clone()];
    }
    let mut rng = rng_from_seed(seed);
    (0..grid.max(1)).map(|_| random_rational(&mut rng)).collect()
}

/// Random (α, β)-style pairs; pinning either component collapses the grid.
fn pair_grid(
    first: &Option<Rational>,
    second: &Option<Rational>,
    grid: u32,
    seed: u64,
) -> Vec<(Rational, Rational)> {
    if first.is_some() || second.is_some() {
        return vec![(
            first.clone().unwrap_or_else(|| rat_int(0)),
            second.clone().unwrap_or_else(|| rat_int(0)),
        )];
    }
    let mut rng = rng_from_seed(seed);
    (0..grid.max(1))
        .map(|_| (random_rational(&mut rng), random_rational(&mut rng)))
        .collect()
}

/// Checks one inversion-sum value against `δ_ij`, skipping pole points.
fn record_delta(report: &mut IdentityReport, outcome: Result<Rational, Error>, i: u32, j: u32) {
    let expected = if i == j { rat_int(1) } else { rat_int(0) };
    match outcome {
        Ok(v) if v == expected => {}
        Ok(v) => report.record_failure(
            vec![i as i64, j as i64],
            format_rational(&expected),
            format_rational(&v),
        ),
        Err(Error::Pole(what)) => report.record_skip(format!("i={i} j={j}: pole: {what}")),
        Err(e) => report.record_failure(
            vec![i as i64, j as i64],
            format_rational(&expected),
            e.to_string(),
        ),
    }
}

/// Folds a sub-report produced for one order into the parameter point's
/// aggregate report.
fn absorb(report: &mut IdentityReport, sub: IdentityReport) {
    for skip in sub.skipped {
        report.record_skip(skip);
    }
    if let Some(f) = sub.failure {
        report.record_failure(f.indices, f.expected, f.actual);
    }
}

fn verify_inv_jacobi(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .map(|(alpha, beta)| {
            let mut report = IdentityReport::new(
                "inv-jacobi",
                params_map(&[
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            for i in 0..=args.order_max {
                for j in 0..=i {
                    record_delta(&mut report, inv_jacobi(&alpha, &beta, i, j), i, j);
                }
            }
            report
        })
        .collect()
}

fn verify_inv_laguerre(
    args: &VerifyArgs,
    variant: LaguerreInversion,
    identity: &str,
) -> Vec<IdentityReport> {
    single_grid(&args.alpha, args.grid, args.seed)
        .into_iter()
        .map(|alpha| {
            let mut report = IdentityReport::new(
                identity,
                params_map(&[("alpha", format_rational(&alpha))]),
                (0, args.order_max),
            );
            for i in 0..=args.order_max {
                for j in 0..=i {
                    record_delta(&mut report, inv_laguerre(&alpha, i, j, variant), i, j);
                }
            }
            report
        })
        .collect()
}

fn verify_inv_charlier(args: &VerifyArgs) -> Vec<IdentityReport> {
    single_grid(&args.a, args.grid, args.seed)
        .into_iter()
        .map(|a| {
            let mut report = IdentityReport::new(
                "inv-charlier",
                params_map(&[("a", format_rational(&a))]),
                (0, args.order_max),
            );
            for i in 0..=args.order_max {
                for j in 0..=i {
                    record_delta(&mut report, inv_charlier(&a, i, j), i, j);
                }
            }
            report
        })
        .collect()
}

fn verify_gen_inv_laguerre(args: &VerifyArgs) -> Vec<IdentityReport> {
    let points: Vec<(Rational, Rational, Rational)> =
        if args.alpha.is_some() || args.p.is_some() || args.q.is_some() {
            vec![(
                args.alpha.clone().unwrap_or_else(|| rat_int(0)),
                args.p.clone().unwrap_or_else(|| rat_int(0)),
                args.q.clone().unwrap_or_else(|| rat_int(0)),
            )]
        } else {
            let mut rng = rng_from_seed(args.seed);
            (0..args.grid.max(1))
                .map(|_| {
                    (
                        random_rational(&mut rng),
                        random_rational(&mut rng),
                        random_rational(&mut rng),
                    )
                })
                .collect()
        };
    points
        .into_iter()
        .map(|(alpha, p, q)| {
            let mut report = IdentityReport::new(
                "gen-inv-laguerre",
                params_map(&[
                    ("alpha", format_rational(&alpha)),
                    ("p", format_rational(&p)),
                    ("q", format_rational(&q)),
                ]),
                (0, args.order_max),
            );
            for n in 0..=args.order_max {
                let expected = pochhammer(&(&p - &q + rat_int(2)), n) / factorial(n);
                match gen_inv_laguerre(&alpha, &p, &q, n) {
                    Ok(v) if v == expected => {}
                    Ok(v) => report.record_failure(
                        vec![n as i64],
                        format_rational(&expected),
                        format_rational(&v),
                    ),
                    Err(e) => report.record_failure(
                        vec![n as i64],
                        format_rational(&expected),
                        e.to_string(),
                    ),
                }
            }
            report
        })
        .collect()
}

fn verify_master_jacobi(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .map(|(alpha, beta)| {
            let mut report = IdentityReport::new(
                "master-jacobi",
                params_map(&[
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            for n in 0..=args.order_max {
                match master_jacobi(&alpha, &beta, n) {
                    Ok(sub) => absorb(&mut report, sub),
                    Err(Error::Pole(what)) => {
                        report.record_skip(format!("n={n}: pole: {what}"));
                    }
                    Err(e) => report.record_failure(
                        vec![n as i64],
                        "two-variable sum".into(),
                        e.to_string(),
                    ),
                }
            }
            report
        })
        .collect()
}

fn verify_master_specializations(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .map(|(alpha, beta)| {
            let mut report = IdentityReport::new(
                "master-specializations",
                params_map(&[
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            for i in 0..=args.order_max {
                for j in 0..=i {
                    match master_jacobi_specializations(&alpha, &beta, i, j) {
                        Ok(sub) => absorb(&mut report, sub),
                        Err(Error::Pole(what)) => {
                            report.record_skip(format!("i={i} j={j}: pole: {what}"));
                        }
                        Err(e) => report.record_failure(
                            vec![i as i64, j as i64],
                            "specialized sums".into(),
                            e.to_string(),
                        ),
                    }
                }
            }
            report
        })
        .collect()
}

fn verify_monomial_laguerre(args: &VerifyArgs) -> Vec<IdentityReport> {
    single_grid(&args.alpha, args.grid, args.seed)
        .into_iter()
        .map(|alpha| {
            let mut report = IdentityReport::new(
                "monomial-laguerre",
                params_map(&[("alpha", format_rational(&alpha))]),
                (0, args.order_max),
            );
            let family = Family::Laguerre(LaguerreParams::new(alpha));
            for n in 0..=args.order_max {
                match monomial_expansion(&family, n) {
                    Ok(sub) => absorb(&mut report, sub),
                    Err(Error::Pole(what)) => report.record_skip(format!("n={n}: pole: {what}")),
                    Err(e) => report.record_failure(
                        vec![n as i64],
                        "monomial".into(),
                        e.to_string(),
                    ),
                }
            }
            report
        })
        .collect()
}

fn verify_monomial_jacobi(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .map(|(alpha, beta)| {
            let mut report = IdentityReport::new(
                "monomial-jacobi",
                params_map(&[
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            let family = Family::Jacobi(JacobiParams::new(alpha, beta));
            for n in 0..=args.order_max {
                match monomial_expansion(&family, n) {
                    Ok(sub) => absorb(&mut report, sub),
                    Err(Error::Pole(what)) => report.record_skip(format!("n={n}: pole: {what}")),
                    Err(e) => report.record_failure(
                        vec![n as i64],
                        "shifted monomial".into(),
                        e.to_string(),
                    ),
                }
            }
            report
        })
        .collect()
}

fn verify_nulalg(args: &VerifyArgs) -> Vec<IdentityReport> {
    single_grid(&args.b, args.grid, args.seed)
        .into_iter()
        .map(|b| {
            let mut report = IdentityReport::new(
                "nulalg",
                params_map(&[("b", format_rational(&b))]),
                (1, args.order_max.max(1)),
            );
            for n in 1..=args.order_max.max(1) {
                match vanishing_sum(&b, n) {
                    Ok(v) if v == rat_int(0) => {}
                    Ok(v) => report.record_failure(vec![n as i64], "0".into(), format_rational(&v)),
                    Err(Error::Pole(what)) => report.record_skip(format!("n={n}: pole: {what}")),
                    Err(e) => {
                        report.record_failure(vec![n as i64], "0".into(), e.to_string());
                    }
                }
            }
            report
        })
        .collect()
}

fn verify_vandermonde(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.b, &args.c, args.grid, args.seed)
        .into_iter()
        .map(|(b, c)| {
            let mut report = IdentityReport::new(
                "vandermonde",
                params_map(&[("b", format_rational(&b)), ("c", format_rational(&c))]),
                (0, args.order_max),
            );
            for n in 0..=args.order_max {
                match vandermonde(&b, &c, n) {
                    Err(Error::Pole(what)) => report.record_skip(format!("n={n}: pole: {what}")),
                    Err(e) => {
                        report.record_failure(vec![n as i64], "summed value".into(), e.to_string());
                    }
                    Ok(v) => {
                        let expected = pochhammer(&(&c - &b), n) / pochhammer(&c, n);
                        if v != expected {
                            report.record_failure(
                                vec![n as i64],
                                format_rational(&expected),
                                format_rational(&v),
                            );
                        }
                    }
                }
            }
            report
        })
        .collect()
}

fn verify_convolution(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .map(|(alpha, beta)| {
            let mut report = IdentityReport::new(
                "convolution",
                params_map(&[
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            for n in 0..=args.order_max {
                absorb(&mut report, laguerre_convolution(&alpha, &beta, n));
            }
            report
        })
        .collect()
}

fn verify_tu_product(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .map(|(alpha, beta)| {
            let mut report = IdentityReport::new(
                "tu-product",
                params_map(&[
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            let params = JacobiParams::new(alpha, beta);
            match build_u(args.order_max, &params) {
                Err(Error::Singular(what)) => report.record_skip(format!("singular: {what}")),
                Err(Error::Pole(what)) => report.record_skip(format!("pole: {what}")),
                Err(e) => report.record_failure(
                    vec![args.order_max as i64],
                    "inverse matrix".into(),
                    e.to_string(),
                ),
                Ok(u) => {
                    let t = build_t(args.order_max, &params);
                    if !t.mul(&u).is_identity() {
                        report.record_failure(
                            vec![args.order_max as i64, 0],
                            "identity matrix".into(),
                            "T*U differs".into(),
                        );
                    } else if !u.mul(&t).is_identity() {
                        report.record_failure(
                            vec![args.order_max as i64, 1],
                            "identity matrix".into(),
                            "U*T differs".into(),
                        );
                    }
                }
            }
            report
        })
        .collect()
}

fn verify_tri_def(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .map(|(alpha, beta)| {
            let mut report = IdentityReport::new(
                "tri-def",
                params_map(&[
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            let params = JacobiParams::new(alpha, beta);
            for n in 0..=args.order_max {
                let reference = jacobi(n, &params, JacobiVariant::Def1);
                for (idx, variant) in [JacobiVariant::Def2, JacobiVariant::Def3]
                    .into_iter()
                    .enumerate()
                {
                    let other = jacobi(n, &params, variant);
                    if other != reference {
                        report.record_failure(
                            vec![n as i64, idx as i64 + 2],
                            reference.to_string(),
                            other.to_string(),
                        );
                    }
                }
            }
            report
        })
        .collect()
}

fn verify_ode(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .flat_map(|(alpha, beta)| {
            let jacobi_family = Family::Jacobi(JacobiParams::new(alpha.clone(), beta.clone()));
            let laguerre_family = Family::Laguerre(LaguerreParams::new(alpha.clone()));
            let mut jacobi_report = IdentityReport::new(
                "ode",
                params_map(&[
                    ("family", "jacobi".into()),
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            let mut laguerre_report = IdentityReport::new(
                "ode",
                params_map(&[
                    ("family", "laguerre".into()),
                    ("alpha", format_rational(&alpha)),
                ]),
                (0, args.order_max),
            );
            for n in 0..=args.order_max {
                let jacobi_params = JacobiParams::new(alpha.clone(), beta.clone());
                let member = jacobi(n, &jacobi_params, JacobiVariant::Def1);
                let residual = ode_residual(&jacobi_family, &member, n);
                if !residual.is_zero() {
                    jacobi_report.record_failure(
                        vec![n as i64],
                        "0".into(),
                        residual.to_string(),
                    );
                }
                let member = laguerre(n, &LaguerreParams::new(alpha.clone()));
                let residual = ode_residual(&laguerre_family, &member, n);
                if !residual.is_zero() {
                    laguerre_report.record_failure(
                        vec![n as i64],
                        "0".into(),
                        residual.to_string(),
                    );
                }
            }
            [jacobi_report, laguerre_report]
        })
        .collect()
}

fn verify_diff_shift(args: &VerifyArgs) -> Vec<IdentityReport> {
    pair_grid(&args.alpha, &args.beta, args.grid, args.seed)
        .into_iter()
        .flat_map(|(alpha, beta)| {
            let jacobi_family = Family::Jacobi(JacobiParams::new(alpha.clone(), beta.clone()));
            let laguerre_family = Family::Laguerre(LaguerreParams::new(alpha.clone()));
            let mut jacobi_report = IdentityReport::new(
                "diff-shift",
                params_map(&[
                    ("family", "jacobi".into()),
                    ("alpha", format_rational(&alpha)),
                    ("beta", format_rational(&beta)),
                ]),
                (0, args.order_max),
            );
            let mut laguerre_report = IdentityReport::new(
                "diff-shift",
                params_map(&[
                    ("family", "laguerre".into()),
                    ("alpha", format_rational(&alpha)),
                ]),
                (0, args.order_max),
            );
            for n in 0..=args.order_max {
                for i in 0..=n {
                    absorb(&mut jacobi_report, check_derivative_shift(&jacobi_family, n, i));
                    absorb(
                        &mut laguerre_report,
                        check_derivative_shift(&laguerre_family, n, i),
                    );
                }
            }
            [jacobi_report, laguerre_report]
        })
        .collect()
}

fn verify_limit(args: &VerifyArgs) -> Result<Vec<IdentityReport>, Failure> {
    let samples = match &args.x {
        Some(x) => vec![x.clone()],
        None => vec![rat(1, 2), rat_int(1), rat_int(2)],
    };
    let schedule = vec![rat_int(16), rat_int(256), rat_int(4096), rat_int(65536)];
    let tolerance = args
        .tolerance
        .clone()
        .unwrap_or_else(default_limit_tolerance);
    let mut reports = Vec::new();
    for alpha in single_grid(&args.alpha, args.grid, args.seed) {
        for n in 0..=args.order_max {
            let report =
                limit_check_jacobi_to_laguerre(n, &alpha, &samples, &schedule, &tolerance)
                    .map_err(classify)?;
            reports.push(report);
        }
    }
    Ok(reports)
}

// === solve =================================================================

fn run_solve(args: SolveArgs) -> RunResult {
    if args.order == 0 {
        return Err(Failure::Config("order must be at least 1".into()));
    }
    let alpha = args.alpha.clone().unwrap_or_else(|| rat_int(0));
    let beta = args.beta.clone().unwrap_or_else(|| rat_int(0));
    let family = match args.family {
        SolveFamily::Jacobi => {
            if args.shift != 0 {
                return Err(Failure::Config(
                    "--shift applies only to the laguerre family".into(),
                ));
            }
            SystemFamily::Jacobi(JacobiParams::new(alpha, beta))
        }
        SolveFamily::Laguerre => {
            if args.beta.is_some() {
                return Err(Failure::Config(
                    "--beta applies only to the jacobi family".into(),
                ));
            }
            SystemFamily::Laguerre {
                params: LaguerreParams::new(alpha),
                shift: args.shift,
            }
        }
    };
    let system = match args.rhs {
        RhsSource::Random => TriangularSystem::random(family, args.order, args.seed),
        RhsSource::File => {
            let path = args.rhs_file.as_ref().ok_or_else(|| {
                Failure::Config("--rhs file requires --rhs-file <path>".into())
            })?;
            let text = fs::read_to_string(path).map_err(|e| {
                Failure::Config(format!("cannot read {}: {e}", path.display()))
            })?;
            let rhs: Vec<Poly> = text
                .lines()
                .map(str::trim)
                .filter(|line| !line.is_empty())
                .map(|line| line.parse::<Poly>())
                .collect::<Result<_, _>>()
                .map_err(|e| Failure::Config(e.to_string()))?;
            if rhs.len() != args.order as usize {
                return Err(Failure::Config(format!(
                    "rhs file holds {} polynomials, order needs {}",
                    rhs.len(),
                    args.order
                )));
            }
            TriangularSystem::new(family, rhs)
        }
    };
    let closed = solve_closed_form(&system).map_err(classify)?;
    let back = solve_backsub(&system).map_err(classify)?;
    let record = SolvedSystem::new(&system, &closed, args.seed);
    let mut line = record.to_json_line();
    line.push('\n');
    emit(&line, &args.out)?;
    if closed != back {
        return Err(Failure::Math(
            "closed-form and back-substitution solutions disagree".into(),
        ));
    }
    if !record.residuals_zero {
        return Err(Failure::Math("solution leaves a nonzero residual".into()));
    }
    Ok(())
}
