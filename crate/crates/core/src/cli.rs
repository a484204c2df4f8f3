//! Command-line front end.
//!
//! Exit codes: 0 when everything requested was computed or verified, 1 when
//! a check found a counterexample (the witness is printed as JSON on
//! stdout), 2 on malformed input or an unmet precondition.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::action::{PermutationWord, SubstitutionMap, DEFAULT_SEED};
use crate::alternants::{shift_by_staircase, verify_mn, Alternants};
use crate::arith::{Ambient, Poly, RatFn};
use crate::error::{Error, Result};
use crate::generators::{kappa, loop_e, loop_h, power_sum, FlowSet};
use crate::sweep::{
    braid_checks, full_sweep, invariance_checks, jacobi_trudi_checks, strip_duality_checks, summarize, BraidMode,
    CheckOutcome, Family, SummaryRow,
};
use crate::tableaux::{jacobi_trudi, loop_schur, Partition};
use crate::verify::Verdict;

/// Environment variable holding the worker count for `sweep`.
pub const THREADS_ENV: &str = "LOOPSYM_THREADS";

#[derive(Parser, Debug)]
#[command(name = "loopsym", version, about = "Exact loop symmetric functions and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a generator, Schur function or alternant.
    Expand {
        #[command(subcommand)]
        target: ExpandTarget,
    },
    /// Apply a permutation word to a polynomial or rational function.
    Apply(ApplyArgs),
    /// Check one identity.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Run every identity check over a parameter box and print a summary.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Via {
    #[default]
    Tableaux,
    Jt,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct AmbientArgs {
    /// Number of flows.
    #[arg(long)]
    pub m: usize,
    /// Number of colors.
    #[arg(long)]
    pub n: usize,
}

impl AmbientArgs {
    fn ambient(&self) -> Result<Ambient> {
        Ambient::new(self.m, self.n)
    }
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub amb: AmbientArgs,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub r: i64,
    /// Comma-separated flows; all flows when omitted.
    #[arg(long)]
    pub flows: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum ExpandTarget {
    /// Loop elementary symmetric function `e_k^(r)`.
    E(GenArgs),
    /// Loop complete homogeneous symmetric function `h_k^(r)`.
    H(GenArgs),
    /// Loop power sum `p_k`.
    P {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// `kappa^(r)` for a pair of flows.
    Kappa {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
        /// Two flows, e.g. `1,2`.
        #[arg(long)]
        flows: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Loop Schur function `s_lambda^(r)`.
    Schur {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, value_enum, default_value_t)]
        via: Via,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Alternant matrix and determinant `a_alpha^(r)`.
    Alternant {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct ApplyArgs {
    /// Letters `w_1,...,w_k` of `s_{w_1} ... s_{w_k}`.
    #[arg(long)]
    pub word: String,
    /// A polynomial or rational function in the JSON wire format.
    #[arg(long)]
    pub expr: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ShapeCheckArgs {
    #[command(flatten)]
    pub amb: AmbientArgs,
    #[arg(long)]
    pub shape: String,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub r: i64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum VerifyTarget {
    /// `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}` for every `i`.
    Braid {
        #[command(flatten)]
        amb: AmbientArgs,
        /// Compare flattened maps exactly (the default).
        #[arg(long, conflicts_with = "random")]
        symbolic: bool,
        /// Compare at this many random rational points instead.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Invariance of a generator family under every `s_i`.
    Invariance {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Jacobi-Trudi against the tableau sum for every small shape.
    JacobiTrudi {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        max_size: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Ratio of alternants for one shape.
    Roa(ShapeCheckArgs),
    /// The matrix factorization `H M = A` for one shape.
    Hma(ShapeCheckArgs),
    /// Loop Murnaghan-Nakayama for one shape.
    Mn {
        #[command(flatten)]
        amb: AmbientArgs,
        #[arg(long)]
        shape: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
        /// Run even when `m < l(lambda) + k n`.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub max_weight: usize,
    #[arg(long)]
    pub max_m: usize,
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// Parse a comma-separated list of nonnegative integers.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected comma-separated integers, got {s:?}")))
        })
        .collect()
}

fn parse_shape(s: &str) -> Result<Partition> {
    s.parse()
}

/// Parse a polynomial or rational function in the wire format.
pub fn parse_expr(s: &str) -> Result<RatFn> {
    let value: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("num").is_some() {
        serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))
    } else {
        let p: Poly = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(RatFn::from_poly(&p))
    }
}

/// What a command produced.
enum Outcome {
    /// Text and JSON renderings of a computed value.
    Value { text: String, json: serde_json::Value },
    /// A batch of checks.
    Checks(Vec<CheckOutcome>),
    /// A sweep summary.
    Summary { rows: Vec<SummaryRow>, outcomes: Vec<CheckOutcome> },
}

fn value_of_poly(p: &Poly) -> Outcome {
    Outcome::Value {
        text: p.to_string(),
        json: serde_json::to_value(p).expect("poly serializes"),
    }
}

fn value_of_ratfn(f: &RatFn) -> Outcome {
    let text = match f.to_poly() {
        Some(p) => p.to_string(),
        None => f.to_string(),
    };
    Outcome::Value {
        text,
        json: serde_json::to_value(f).expect("ratfn serializes"),
    }
}

fn single(check: &str, params: String, v: Verdict) -> Outcome {
    Outcome::Checks(vec![CheckOutcome {
        check: check.into(),
        params,
        holds: v.holds,
        witness: v.witness,
    }])
}

fn flows_arg(amb: Ambient, flows: &Option<String>) -> Result<FlowSet> {
    match flows {
        None => Ok(FlowSet::all(amb)),
        Some(s) if s.trim() == "0" || s.trim().is_empty() => Ok(FlowSet::empty()),
        Some(s) => FlowSet::new(amb, parse_list(s)?),
    }
}

fn expand(target: &ExpandTarget) -> Result<(Outcome, Format)> {
    Ok(match target {
        ExpandTarget::E(g) | ExpandTarget::H(g) => {
            let amb = g.amb.ambient()?;
            let flows = flows_arg(amb, &g.flows)?;
            let p = if matches!(target, ExpandTarget::E(_)) {
                loop_e(amb, g.k, g.r, &flows)
            } else {
                loop_h(amb, g.k, g.r, &flows)
            };
            (value_of_poly(&p), g.format)
        }
        ExpandTarget::P { amb, k, format } => (value_of_poly(&power_sum(amb.ambient()?, *k)?), *format),
        ExpandTarget::Kappa { amb, r, flows, format } => {
            let a = amb.ambient()?;
            let f = parse_list(flows)?;
            if f.len() != 2 {
                return Err(Error::InvalidArgument("kappa needs exactly two flows".into()));
            }
            (value_of_poly(&kappa(a, *r, f[0], f[1])?), *format)
        }
        ExpandTarget::Schur {
            amb,
            shape,
            r,
            via,
            format,
        } => {
            let a = amb.ambient()?;
            let shape = parse_shape(shape)?;
            let p = match via {
                Via::Tableaux => loop_schur(a, &shape, *r),
                Via::Jt => jacobi_trudi(a, &shape, *r)?,
            };
            (value_of_poly(&p), *format)
        }
        ExpandTarget::Alternant { amb, alpha, r, format } => {
            let a = amb.ambient()?;
            let alpha = parse_list(alpha)?;
            let alt = Alternants::new(a)?;
            let spec = alt.alternant_matrix(&alpha, *r)?;
            let det = alt.alternant_det(&spec)?;
            let mut text = String::new();
            for (i, row) in spec.matrix.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    text.push_str(&format!("A[{},{}] = {e}\n", i + 1, j + 1));
                }
            }
            text.push_str(&format!("det = {det}"));
            let json = json!({ "alpha": spec.alpha, "r": spec.r, "matrix": spec.matrix, "det": det });
            (Outcome::Value { text, json }, *format)
        }
    })
}

fn apply(args: &ApplyArgs) -> Result<(Outcome, Format)> {
    let f = parse_expr(&args.expr)?;
    let amb = f.ambient();
    let word = PermutationWord::new(amb, parse_list(&args.word)?)?;
    let map = SubstitutionMap::compose(amb, &word)?;
    Ok((value_of_ratfn(&map.apply(&f)?), args.format))
}

fn verify(target: &VerifyTarget) -> Result<(Outcome, Format)> {
    Ok(match target {
        VerifyTarget::Braid {
            amb,
            symbolic: _,
            random,
            seed,
            format,
        } => {
            let mode = match random {
                Some(points) => BraidMode::Random {
                    points: *points,
                    seed: *seed,
                },
                None => BraidMode::Symbolic,
            };
            (Outcome::Checks(braid_checks(amb.ambient()?, mode)?), *format)
        }
        VerifyTarget::Invariance {
            amb,
            family,
            max_degree,
            format,
        } => {
            let family: Family = family.parse()?;
            (Outcome::Checks(invariance_checks(amb.ambient()?, family, *max_degree)?), *format)
        }
        VerifyTarget::JacobiTrudi { amb, max_size, format } => {
            (Outcome::Checks(jacobi_trudi_checks(amb.ambient()?, *max_size)?), *format)
        }
        VerifyTarget::Roa(s) | VerifyTarget::Hma(s) => {
            let a = s.amb.ambient()?;
            let shape = parse_shape(&s.shape)?;
            let alt = Alternants::new(a)?;
            let params = format!("m={} n={} shape={shape} r={}", a.m, a.n, s.r);
            let outcome = if matches!(target, VerifyTarget::Roa(_)) {
                single("roa", params, alt.verify_roa(&shape, s.r)?)
            } else {
                let alpha = shift_by_staircase(&shape, a.m)?;
                single("hma", params, alt.verify_hma(&alpha, s.r)?)
            };
            (outcome, s.format)
        }
        VerifyTarget::Mn {
            amb,
            shape,
            k,
            r,
            force,
            format,
        } => {
            let a = amb.ambient()?;
            let shape = parse_shape(shape)?;
            let params = format!("m={} n={} shape={shape} k={k} r={r}", a.m, a.n);
            (single("mn", params, verify_mn(a, &shape, *k, *r, *force)?), *format)
        }
    })
}

fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Run `job` over `items` on up to `threads` workers; results keep input order.
fn parallel_map<T: Sync, R: Send>(items: &[T], threads: usize, job: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    let done = std::sync::Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..threads.clamp(1, items.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = job(&items[i]);
                done.lock().expect("worker panicked").push((i, r));
            });
        }
    });
    for (i, r) in done.into_inner().expect("worker panicked") {
        slots[i] = Some(r);
    }
    slots.into_iter().map(|r| r.expect("every job ran")).collect()
}

fn sweep(args: &SweepArgs) -> Result<(Outcome, Format)> {
    let mut ambients = Vec::new();
    for m in 1..=args.max_m {
        for n in 1..=args.max_n {
            ambients.push(Ambient::new(m, n)?);
        }
    }
    let results = parallel_map(&ambients, thread_count(), |&a| full_sweep(a, args.max_weight, args.seed));
    let mut rows = Vec::new();
    let mut outcomes = Vec::new();
    for (a, res) in ambients.iter().zip(results) {
        let out = res?;
        rows.extend(summarize(Some(*a), &out));
        outcomes.extend(out);
    }
    let strips = strip_duality_checks(args.max_weight, args.max_weight);
    rows.extend(summarize(None, &strips));
    outcomes.extend(strips);
    Ok((Outcome::Summary { rows, outcomes }, args.format))
}

fn dispatch(cmd: &Command) -> Result<(Outcome, Format)> {
    match cmd {
        Command::Expand { target } => expand(target),
        Command::Apply(a) => apply(a),
        Command::Verify { target } => verify(target),
        Command::Sweep(s) => sweep(s),
    }
}

#[derive(Serialize)]
struct ChecksReport<'a> {
    holds: bool,
    checks: &'a [CheckOutcome],
}

fn render(outcome: &Outcome, format: Format, out: &mut dyn Write) -> std::io::Result<i32> {
    match outcome {
        Outcome::Value { text, json } => {
            match format {
                Format::Text => writeln!(out, "{text}")?,
                Format::Json => writeln!(out, "{json}")?,
            }
            Ok(0)
        }
        Outcome::Checks(checks) => {
            let holds = checks.iter().all(|c| c.holds);
            if format == Format::Json || !holds {
                let report = ChecksReport { holds, checks };
                writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
            } else {
                for c in checks {
                    writeln!(out, "verified {} {}", c.check, c.params)?;
                }
                writeln!(out, "{} checks passed", checks.len())?;
            }
            Ok(if holds { 0 } else { 1 })
        }
        Outcome::Summary { rows, outcomes } => {
            let failures: Vec<&CheckOutcome> = outcomes.iter().filter(|o| !o.holds).collect();
            match format {
                Format::Json => {
                    let report = json!({ "holds": failures.is_empty(), "summary": rows, "failures": failures });
                    writeln!(out, "{report}")?;
                }
                Format::Text => {
                    writeln!(out, "{:<16} {:>3} {:>3} {:>7} {:>8}", "check", "m", "n", "cases", "failures")?;
                    let dash = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
                    for r in rows {
                        writeln!(
                            out,
                            "{:<16} {:>3} {:>3} {:>7} {:>8}",
                            r.check,
                            dash(r.m),
                            dash(r.n),
                            r.cases,
                            r.failures
                        )?;
                    }
                    if failures.is_empty() {
                        writeln!(out, "all {} checks passed", outcomes.len())?;
                    } else {
                        writeln!(out, "{} of {} checks failed", failures.len(), outcomes.len())?;
                        for f in failures.iter() {
                            writeln!(out, "{}", serde_json::to_string(f).expect("outcome serializes"))?;
                        }
                    }
                }
            }
            Ok(if failures.is_empty() { 0 } else { 1 })
        }
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(&cli.command) {
        Ok((outcome, format)) => match render(&outcome, format, out) {
            Ok(code) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["loopsym"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("4,2").unwrap(), vec![4, 2]);
        assert!(parse_list("4,x").is_err());
        assert!(parse_list("").is_err());
    }

    #[test]
    fn bad_arguments_exit_2() {
        assert_eq!(run_str(&["expand", "schur", "--shape", "2,3", "--m", "2", "--n", "2"]).0, 2);
        assert_eq!(run_str(&["expand", "e", "--k", "1", "--m", "0", "--n", "2"]).0, 2);
        assert_eq!(run_str(&["nonsense"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}
