//! Command-line front end for the cubecurve library: single-curve count
//! reports, point listings, identity-verification sweeps, family sweeps,
//! zeta lifting and prime generation, emitted as text, JSON or CSV.
//!
//! Exit codes: 0 on success, 1 on a mathematical verification failure,
//! 2 on usage, validation or capacity errors.

mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cubecurve::curve::primes_one_mod_six;
use cubecurve::modmath::MAX_MODULUS;
use cubecurve::{
    count_quadratic_sum, enumerate_points, family_sweep, CountReport, CurveParams, Point, ZetaData,
    ZetaError, DEFAULT_ENUMERATION_CAP,
};

use verify::{run_verify, CheckFailure, VerifyOutcome};

/// Environment override for the enumeration cap; the flag wins over it.
const CAP_ENV_VAR: &str = "CUBECURVE_CAP";

#[derive(Parser)]
#[command(
    name = "cubecurve",
    version,
    about = "Exact point counts, identity checks and zeta lifts for y^2 = x^3 + a^3 over F_p, p = 1 (mod 6)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Check primes concurrently in `verify` (output is unchanged).
    #[arg(long, global = true)]
    parallel: bool,

    /// Worker threads for --parallel; defaults to the core count.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Cap on p for enumeration-backed work. Overrides CUBECURVE_CAP;
    /// default 16777216.
    #[arg(long = "enumeration-cap", global = true)]
    enumeration_cap: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Count the curve's points with all four methods and report the trace.
    Count {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u64,
    },
    /// List every rational point in canonical order (Infinity first).
    Points {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u64,
    },
    /// Run the identity suites over every prime p = 1 (mod 6) in a range.
    Verify {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        range: Vec<u64>,
    },
    /// Count the whole family a = 1..p-1 and check the p^2 - 1 total.
    Sweep {
        #[arg(long)]
        p: u64,
    },
    /// Print the zeta rational form and the lifted counts N_1..N_rmax.
    Zeta {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        rmax: u32,
    },
    /// List primes p = 1 (mod 6) in a range.
    Primes {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        range: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

enum Failure {
    /// Bad arguments, failed validation, or exceeded capacity: exit 2.
    Usage(String),
    /// A mathematical identity did not hold: exit 1.
    Verification(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let cap = resolve_cap(cli)?;
    match &cli.command {
        Command::Count { p, a } => cmd_count(*p, *a, cap, cli.format),
        Command::Points { p, a } => cmd_points(*p, *a, cap, cli.format),
        Command::Verify { range } => {
            let (lo, hi) = parse_range(range)?;
            cmd_verify(lo, hi, cap, cli.parallel, cli.workers, cli.format)
        }
        Command::Sweep { p } => cmd_sweep(*p, cap, cli.format),
        Command::Zeta { p, a, rmax } => cmd_zeta(*p, *a, *rmax, cli.format),
        Command::Primes { range } => {
            let (lo, hi) = parse_range(range)?;
            cmd_primes(lo, hi, cli.format)
        }
    }
}

fn resolve_cap(cli: &Cli) -> Result<u64, Failure> {
    if let Some(cap) = cli.enumeration_cap {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("invalid {CAP_ENV_VAR} value: {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_CAP),
        Err(e) => Err(Failure::Usage(format!("unreadable {CAP_ENV_VAR}: {e}"))),
    }
}

fn parse_range(range: &[u64]) -> Result<(u64, u64), Failure> {
    // clap enforces exactly two values.
    let (lo, hi) = (range[0], range[1]);
    if lo > hi {
        return Err(Failure::Usage(format!(
            "range lower bound {lo} exceeds upper bound {hi}"
        )));
    }
    Ok((lo, hi))
}

fn exit_code(failures: &[CheckFailure]) -> u8 {
    if failures.is_empty() {
        0
    } else {
        1
    }
}

fn json_envelope(command: &str, params: Value, result: Value, failures: &[CheckFailure]) -> String {
    let failures: Vec<Value> = failures.iter().map(failure_json).collect();
    let doc = json!({
        "command": command,
        "params": params,
        "result": result,
        "failures": failures,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("report is serializable");
    s.push('\n');
    s
}

fn failure_json(f: &CheckFailure) -> Value {
    json!({"check": f.check, "p": f.p, "a": f.a, "detail": f.detail})
}

fn csv_failure_rows(out: &mut String, failures: &[CheckFailure]) {
    for f in failures {
        out.push_str(&format!("#fail,{},{},{},{}\n", f.check, f.p, f.a, f.detail));
    }
}

fn text_failure_lines(out: &mut String, failures: &[CheckFailure]) {
    for f in failures {
        out.push_str(&format!(
            "FAIL {} p={} a={}: {}\n",
            f.check, f.p, f.a, f.detail
        ));
    }
}

fn cmd_count(p: u64, a: u64, cap: u64, format: Format) -> Result<(String, u8), Failure> {
    let curve = CurveParams::new(p, a).map_err(usage)?;
    let report = CountReport::compute(&curve, cap);
    let mut failures = Vec::new();
    if !report.methods_agree() {
        failures.push(CheckFailure {
            check: "method_agreement",
            p,
            a: report.a,
            detail: format!(
                "enum={:?} quad={} rho={} cubic={}",
                report.n_enum, report.n_quad, report.n_rho, report.n_cubic
            ),
        });
    }
    let out = match format {
        Format::Json => json_envelope(
            "count",
            json!({"p": p, "a": a, "enumeration_cap": cap}),
            json!({
                "p": report.p,
                "a": report.a,
                "n": report.n(),
                "n_enum": report.n_enum,
                "n_quad": report.n_quad,
                "n_rho": report.n_rho,
                "n_cubic": report.n_cubic,
                "delta": report.delta,
                "hasse_ok": report.hasse_ok,
            }),
            &failures,
        ),
        Format::Csv => {
            let mut out = String::from("p,a,n_enum,n_quad,n_rho,n_cubic,n,delta,hasse_ok\n");
            let n_enum = report.n_enum.map_or(String::new(), |n| n.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                report.p,
                report.a,
                n_enum,
                report.n_quad,
                report.n_rho,
                report.n_cubic,
                report.n(),
                report.delta,
                report.hasse_ok
            ));
            csv_failure_rows(&mut out, &failures);
            out
        }
        Format::Text => {
            let mut out = format!("curve: {curve}\n");
            match report.n_enum {
                Some(n) => out.push_str(&format!("n_enum = {n}\n")),
                None => out.push_str(&format!("n_enum = skipped (p > cap {cap})\n")),
            }
            out.push_str(&format!("n_quad = {}\n", report.n_quad));
            out.push_str(&format!("n_rho = {}\n", report.n_rho));
            out.push_str(&format!("n_cubic = {}\n", report.n_cubic));
            out.push_str(&format!("n = {}\n", report.n()));
            out.push_str(&format!("delta = {}\n", report.delta));
            out.push_str(&format!("hasse_ok = {}\n", report.hasse_ok));
            text_failure_lines(&mut out, &failures);
            out
        }
    };
    Ok((out, exit_code(&failures)))
}

fn cmd_points(p: u64, a: u64, cap: u64, format: Format) -> Result<(String, u8), Failure> {
    let curve = CurveParams::new(p, a).map_err(usage)?;
    let set = enumerate_points(&curve, cap).map_err(usage)?;
    let out = match format {
        Format::Json => {
            let points: Vec<Value> = set
                .iter()
                .map(|pt| match pt {
                    Point::Infinity => json!("O"),
                    Point::Affine { x, y } => json!([x.value(), y.value()]),
                })
                .collect();
            json_envelope(
                "points",
                json!({"p": p, "a": a, "enumeration_cap": cap}),
                json!({"n": set.len(), "points": points}),
                &[],
            )
        }
        Format::Csv => {
            let mut out = String::from("x,y\n");
            for pt in set.iter() {
                match pt {
                    Point::Infinity => out.push_str("O,\n"),
                    Point::Affine { x, y } => out.push_str(&format!("{x},{y}\n")),
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for pt in set.iter() {
                out.push_str(&format!("{pt}\n"));
            }
            out
        }
    };
    Ok((out, 0))
}

fn cmd_verify(
    lo: u64,
    hi: u64,
    cap: u64,
    parallel: bool,
    workers: Option<usize>,
    format: Format,
) -> Result<(String, u8), Failure> {
    let outcome = run_verify(lo, hi, cap, parallel, workers).map_err(Failure::Usage)?;
    let out = match format {
        Format::Json => render_verify_json(&outcome, cap),
        Format::Csv => render_verify_csv(&outcome),
        Format::Text => render_verify_text(&outcome),
    };
    Ok((out, exit_code(&outcome.failures)))
}

fn render_verify_json(outcome: &VerifyOutcome, cap: u64) -> String {
    let primes: Vec<Value> = outcome
        .primes
        .iter()
        .map(|s| json!({"p": s.p, "checks": s.checks}))
        .collect();
    let counterexample = outcome.counterexample.as_ref().map(|ce| {
        json!({
            "p": ce.p,
            "a": ce.a,
            "j": ce.j as i64,
            "s": ce.s as i64,
            "j_div_p": ce.j_div_p,
            "s_div_p": ce.s_div_p,
        })
    });
    json_envelope(
        "verify",
        json!({"lo": outcome.lo, "hi": outcome.hi, "enumeration_cap": cap}),
        json!({
            "checks_run": outcome.checks_run,
            "primes": primes,
            "counterexample": counterexample,
        }),
        &outcome.failures,
    )
}

fn render_verify_csv(outcome: &VerifyOutcome) -> String {
    let mut out = String::from("check,p,a,detail\n");
    for f in &outcome.failures {
        out.push_str(&format!("{},{},{},{}\n", f.check, f.p, f.a, f.detail));
    }
    out.push_str(&format!("#checks_run,{}\n", outcome.checks_run));
    out.push_str(&format!("#failures,{}\n", outcome.failures.len()));
    out
}

fn render_verify_text(outcome: &VerifyOutcome) -> String {
    let mut out = format!(
        "verify primes p = 1 (mod 6) in [{}, {}]\n",
        outcome.lo, outcome.hi
    );
    for s in &outcome.primes {
        let failed = outcome.failures.iter().filter(|f| f.p == s.p).count();
        if failed == 0 {
            out.push_str(&format!("p={} ok ({} checks)\n", s.p, s.checks));
        } else {
            out.push_str(&format!(
                "p={} FAILED {failed} of {} checks\n",
                s.p, s.checks
            ));
        }
    }
    if let Some(ce) = &outcome.counterexample {
        out.push_str(&format!(
            "counterexample p=11 a=1: j={} s={} (divisible by 11: {}, {})\n",
            ce.j, ce.s, ce.j_div_p, ce.s_div_p
        ));
    }
    text_failure_lines(&mut out, &outcome.failures);
    out.push_str(&format!("checks_run = {}\n", outcome.checks_run));
    out.push_str(&format!("failures = {}\n", outcome.failures.len()));
    out
}

fn cmd_sweep(p: u64, cap: u64, format: Format) -> Result<(String, u8), Failure> {
    let sweep = family_sweep(p, cap).map_err(usage)?;
    let mut failures = Vec::new();
    if !sweep.total_matches() {
        failures.push(CheckFailure {
            check: "family_total",
            p,
            a: 0,
            detail: format!(
                "total {} != p^2 - 1 = {}",
                sweep.total,
                sweep.expected_total()
            ),
        });
    }
    let total = u64::try_from(sweep.total).expect("family total exceeds u64");
    let expected = u64::try_from(sweep.expected_total()).expect("p^2 - 1 exceeds u64");
    let out = match format {
        Format::Json => json_envelope(
            "sweep",
            json!({"p": p, "enumeration_cap": cap}),
            json!({"p": p, "counts": sweep.counts, "total": total, "expected_total": expected}),
            &failures,
        ),
        Format::Csv => {
            let mut out = String::from("a,n\n");
            for (i, n) in sweep.counts.iter().enumerate() {
                out.push_str(&format!("{},{}\n", i + 1, n));
            }
            out.push_str(&format!("#total,{total}\n"));
            csv_failure_rows(&mut out, &failures);
            out
        }
        Format::Text => {
            let mut out = format!("family sweep p = {p}\n");
            for (i, n) in sweep.counts.iter().enumerate() {
                out.push_str(&format!("a={} N={}\n", i + 1, n));
            }
            out.push_str(&format!("total = {total} (expected {expected})\n"));
            text_failure_lines(&mut out, &failures);
            out
        }
    };
    Ok((out, exit_code(&failures)))
}

fn cmd_zeta(p: u64, a: u64, rmax: u32, format: Format) -> Result<(String, u8), Failure> {
    if rmax < 1 {
        return Err(Failure::Usage("--rmax must be at least 1".to_string()));
    }
    let curve = CurveParams::new(p, a).map_err(usage)?;
    let n1 = count_quadratic_sum(&curve);
    let zeta = ZetaData::from_count(p, n1).map_err(|e| match e {
        // A count we produced ourselves violating Hasse is a broken
        // identity, not a usage problem.
        ZetaError::HasseViolation { .. } => Failure::Verification(e.to_string()),
        ZetaError::Overflow { .. } => usage(e),
    })?;
    let counts = zeta.lift_counts(rmax).map_err(usage)?;
    let rendered = zeta.rational_render();
    let (c0, c1, c2) = zeta.numerator();
    let out = match format {
        Format::Json => json_envelope(
            "zeta",
            json!({"p": p, "a": a, "r_max": rmax}),
            json!({
                "q": zeta.q(),
                "trace": zeta.trace(),
                "numerator": [c0, c1, c2],
                "zeta": rendered,
                "counts": counts,
            }),
            &[],
        ),
        Format::Csv => {
            let mut out = String::from("r,n\n");
            for (i, n) in counts.iter().enumerate() {
                out.push_str(&format!("{},{}\n", i + 1, n));
            }
            out.push_str(&format!("#trace,{}\n", zeta.trace()));
            out.push_str(&format!("#zeta,{rendered}\n"));
            out
        }
        Format::Text => {
            let mut out = format!("Z(T) = {rendered}\n");
            out.push_str(&format!("trace = {}\n", zeta.trace()));
            for (i, n) in counts.iter().enumerate() {
                out.push_str(&format!("N_{} = {}\n", i + 1, n));
            }
            out
        }
    };
    Ok((out, 0))
}

fn cmd_primes(lo: u64, hi: u64, format: Format) -> Result<(String, u8), Failure> {
    if hi > MAX_MODULUS {
        return Err(Failure::Usage(format!(
            "range upper bound {hi} exceeds 2^63 - 1"
        )));
    }
    let primes = primes_one_mod_six(lo, hi);
    let out = match format {
        Format::Json => json_envelope(
            "primes",
            json!({"lo": lo, "hi": hi}),
            json!({"primes": primes, "count": primes.len()}),
            &[],
        ),
        Format::Csv => {
            let mut out = String::from("p\n");
            for p in &primes {
                out.push_str(&format!("{p}\n"));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for p in &primes {
                out.push_str(&format!("{p}\n"));
            }
            out
        }
    };
    Ok((out, 0))
}
