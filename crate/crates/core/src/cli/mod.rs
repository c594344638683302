//! The `semisum` command line.
//!
//! Exit codes: 0 success (bound satisfied or not applicable), 1 usage or parse
//! error, 2 failed precondition or invalid input, 3 a bound violation.

mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{ElementSet, FiniteSemigroup, SemigroupSpec};
use crate::cd_constants::omega;
use crate::davenport::{apply_transform, audit_transform, transform_candidates, TransformError};
use crate::localization::{localize, LocalizeError};
use crate::theorem_suite::{sweep, verify, BoundReport, Statement, SweepError, SweepOptions, SweepSummary};

pub use report::{ErrorReport, Payload, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "semisum", version, about = "Sumsets and their lower bounds in finite semigroups")]
struct Cli {
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time in the output.
    #[arg(long, global = true)]
    timing: bool,
    /// File with one display name per element, in index order.
    #[arg(long, global = true, value_name = "PATH")]
    labels: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Ambient {
    /// cyclic:m | dihedral:k | quaternion8 | product:(spec,spec) | leftzero:n | maxchain:n | cayley:path
    #[arg(long, value_name = "SPEC")]
    semigroup: SemigroupSpec,
}

#[derive(Debug, Args)]
struct Pair {
    #[arg(long, value_name = "SET")]
    x: ElementSet,
    #[arg(long, value_name = "SET")]
    y: ElementSet,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print X + Y.
    Sumset {
        #[command(flatten)]
        ambient: Ambient,
        #[command(flatten)]
        pair: Pair,
    },
    /// Print ω of a set, one row per unit.
    Omega {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long, value_name = "SET")]
        set: ElementSet,
    },
    /// Check one bound on one pair.
    Verify {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long, value_name = "ID")]
        statement: Statement,
        #[command(flatten)]
        pair: Pair,
    },
    /// Check one bound on every pair of non-empty subsets.
    Sweep {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(long, value_name = "ID")]
        statement: Statement,
        /// Only subsets with at most this many elements.
        #[arg(long, value_name = "K")]
        max_size: Option<usize>,
        /// Worker threads; 0 uses every core.
        #[arg(long, value_name = "J", default_value_t = 0)]
        jobs: usize,
    },
    /// Apply and audit a Davenport transform.
    Transform {
        #[command(flatten)]
        ambient: Ambient,
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Element of (mX + 2Y) \ (X + Y); defaults to the smallest.
        #[arg(long)]
        z: Option<usize>,
    },
    /// Pick |X|+|Y|-1 distinct elements of X + Y from the sum matrix.
    Localize {
        #[command(flatten)]
        ambient: Ambient,
        #[command(flatten)]
        pair: Pair,
        /// Subset of X + Y with |Y| - 1 elements.
        #[arg(long, value_name = "SET")]
        z: Option<ElementSet>,
    },
}

impl Command {
    fn spec(&self) -> &SemigroupSpec {
        match self {
            Command::Sumset { ambient, .. }
            | Command::Omega { ambient, .. }
            | Command::Verify { ambient, .. }
            | Command::Sweep { ambient, .. }
            | Command::Transform { ambient, .. }
            | Command::Localize { ambient, .. } => &ambient.semigroup,
        }
    }

    /// The command with every result-affecting argument and nothing else.
    fn canonical(&self) -> String {
        let spec = self.spec();
        match self {
            Command::Sumset { pair, .. } => format!("sumset --semigroup {spec} --x {} --y {}", pair.x, pair.y),
            Command::Omega { set, .. } => format!("omega --semigroup {spec} --set {set}"),
            Command::Verify { statement, pair, .. } => {
                format!("verify --semigroup {spec} --statement {statement} --x {} --y {}", pair.x, pair.y)
            }
            Command::Sweep { statement, max_size, .. } => {
                let mut s = format!("sweep --semigroup {spec} --statement {statement}");
                if let Some(k) = max_size {
                    let _ = write!(s, " --max-size {k}");
                }
                s
            }
            Command::Transform { pair, m, z, .. } => {
                let mut s = format!("transform --semigroup {spec} --x {} --y {} --m {m}", pair.x, pair.y);
                if let Some(z) = z {
                    let _ = write!(s, " --z {z}");
                }
                s
            }
            Command::Localize { pair, z, .. } => {
                let mut s = format!("localize --semigroup {spec} --x {} --y {}", pair.x, pair.y);
                if let Some(z) = z {
                    let _ = write!(s, " --z {z}");
                }
                s
            }
        }
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn precondition(message: impl ToString) -> Self {
        Failure { code: EXIT_PRECONDITION, message: message.to_string() }
    }
}

/// Display names for elements; indices when no labels are loaded.
struct Labels(Option<Vec<String>>);

impl Labels {
    fn load(path: Option<&Path>, order: usize) -> Result<Self, Failure> {
        let Some(path) = path else {
            return Ok(Labels(None));
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::precondition(format!("cannot read {}: {e}", path.display())))?;
        let names: Vec<String> = text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect();
        if names.len() != order {
            return Err(Failure::precondition(format!(
                "{}: {} labels for a semigroup of order {order}",
                path.display(),
                names.len()
            )));
        }
        Ok(Labels(Some(names)))
    }

    fn elem(&self, i: usize) -> String {
        match &self.0 {
            Some(names) => names[i].clone(),
            None => i.to_string(),
        }
    }

    fn set(&self, s: ElementSet) -> String {
        if self.0.is_none() {
            return s.to_string();
        }
        let parts: Vec<String> = s.iter().map(|i| self.elem(i)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn check_fits(a: &FiniteSemigroup, sets: &[ElementSet]) -> Result<(), Failure> {
    match sets.iter().find(|s| !s.fits(a.order())) {
        Some(s) => Err(Failure::precondition(format!(
            "set {s} has elements outside a carrier of size {}",
            a.order()
        ))),
        None => Ok(()),
    }
}

/// Parses `argv` (program name first), runs the command and renders its output.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: rendered, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    let command = cli.command.canonical();
    match execute(&cli) {
        Ok((report, text)) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                s.push('\n');
                s
            } else {
                text
            };
            Outcome { stdout, stderr: String::new(), code: report.exit_code }
        }
        Err(Failure { code, message }) => {
            let stdout = if cli.json {
                let report = ErrorReport { command, exit_code: code, error: message.clone() };
                let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                s.push('\n');
                s
            } else {
                String::new()
            };
            Outcome { stdout, stderr: format!("error: {message}\n"), code }
        }
    }
}

fn execute(cli: &Cli) -> Result<(RunReport, String), Failure> {
    let started = Instant::now();
    let spec = cli.command.spec().clone();
    let a = spec.build().map_err(Failure::precondition)?;
    let labels = Labels::load(cli.labels.as_deref(), a.order())?;

    let mut text = String::new();
    let (payload, code) = match &cli.command {
        Command::Sumset { pair, .. } => run_sumset(&a, pair, &labels, &mut text)?,
        Command::Omega { set, .. } => run_omega(&a, *set, &labels, &mut text)?,
        Command::Verify { statement, pair, .. } => run_verify(&a, *statement, pair, &labels, &mut text)?,
        Command::Sweep { statement, max_size, jobs, .. } => {
            let options = SweepOptions { max_size: *max_size, jobs: *jobs };
            run_sweep(&a, *statement, options, &labels, &mut text)?
        }
        Command::Transform { pair, m, z, .. } => run_transform(&a, pair, *m, *z, &labels, &mut text)?,
        Command::Localize { pair, z, .. } => run_localize(&a, pair, *z, &labels, &mut text)?,
    };

    let timing_ms = cli.timing.then(|| started.elapsed().as_secs_f64() * 1e3);
    if let Some(ms) = timing_ms {
        let _ = writeln!(text, "elapsed: {ms:.1} ms");
    }
    let report = RunReport {
        command: cli.command.canonical(),
        semigroup: spec,
        order: a.order(),
        exit_code: code,
        timing_ms,
        result: payload,
    };
    Ok((report, text))
}

type Step = Result<(Payload, i32), Failure>;

fn run_sumset(a: &FiniteSemigroup, pair: &Pair, labels: &Labels, out: &mut String) -> Step {
    check_fits(a, &[pair.x, pair.y])?;
    let sum = a.sum(pair.x, pair.y);
    let _ = writeln!(out, "{}", labels.set(sum));
    Ok((Payload::Sumset { x: pair.x, y: pair.y, sumset: sum, size: sum.len() }, EXIT_OK))
}

fn run_omega(a: &FiniteSemigroup, set: ElementSet, labels: &Labels, out: &mut String) -> Step {
    check_fits(a, &[set])?;
    let b = omega(a, set);
    let _ = writeln!(out, "omega of {}", labels.set(set));
    if b.rows.is_empty() {
        let _ = writeln!(out, "  no unit in the set");
    } else {
        let _ = writeln!(out, "  {:>8}  min ord(z - z0)", "z0");
        for row in &b.rows {
            let _ = writeln!(out, "  {:>8}  {}", labels.elem(row.unit), row.inner_inf);
        }
    }
    let _ = writeln!(out, "overall: {}", b.overall);
    Ok((Payload::Omega(b), EXIT_OK))
}

fn bound_text(r: &BoundReport, labels: &Labels, out: &mut String) {
    let _ = writeln!(out, "{}: X = {}, Y = {}", r.statement, labels.set(r.x), labels.set(r.y));
    for h in &r.hypotheses {
        let _ = writeln!(out, "  {}: {}", h.name, if h.holds { "yes" } else { "no" });
    }
    let _ = writeln!(out, "  |X+Y| = {}, bound = {}", r.lhs, r.rhs);
    if let Some(c) = &r.comparison {
        let _ = writeln!(
            out,
            "  {} bound {} vs {} bound {}: {}",
            c.sharper,
            c.sharper_rhs,
            c.weaker,
            c.weaker_rhs,
            if !c.holds() { "ORDER VIOLATED" } else if c.strict() { "strictly sharper" } else { "equal" }
        );
    }
    let verdict = if !r.applicable {
        let failed: Vec<String> =
            r.hypotheses.iter().filter(|h| !h.holds).map(|h| format!("not {}", h.name)).collect();
        format!("not applicable ({})", failed.join(", "))
    } else if r.satisfied {
        if r.is_tight() { "satisfied (tight)".to_string() } else { "satisfied".to_string() }
    } else {
        "VIOLATED".to_string()
    };
    let _ = writeln!(out, "{verdict}");
}

fn run_verify(a: &FiniteSemigroup, statement: Statement, pair: &Pair, labels: &Labels, out: &mut String) -> Step {
    let r = verify(a, statement, pair.x, pair.y).map_err(Failure::precondition)?;
    bound_text(&r, labels, out);
    let code = if r.is_violation() { EXIT_VIOLATION } else { EXIT_OK };
    Ok((Payload::Bound(r), code))
}

fn witness_text(w: &Option<crate::theorem_suite::PairWitness>, labels: &Labels) -> String {
    match w {
        Some(w) => format!("X = {}, Y = {}, |X+Y| = {}, bound = {}", labels.set(w.x), labels.set(w.y), w.lhs, w.rhs),
        None => "none".to_string(),
    }
}

fn sweep_text(s: &SweepSummary, labels: &Labels, out: &mut String) {
    let _ = writeln!(out, "sweep {} over a semigroup of order {}", s.statement, s.order);
    if let Some(k) = s.max_size {
        let _ = writeln!(out, "  subsets of size at most {k}");
    }
    let _ = writeln!(out, "  sets: {}, pairs: {}", s.sets, s.pairs);
    let _ = writeln!(out, "  applicable: {}", s.applicable);
    let _ = writeln!(out, "  tight: {} (first: {})", s.tight, witness_text(&s.first_tight, labels));
    let _ = writeln!(out, "  violations: {}", s.violation_count);
    for w in &s.violations {
        let _ = writeln!(out, "    {}", witness_text(&Some(*w), labels));
    }
    if s.comparisons > 0 {
        let _ = writeln!(
            out,
            "  comparisons: {}, strict: {} (first: {}), out of order: {}",
            s.comparisons,
            s.strict_comparisons,
            witness_text(&s.first_strict, labels),
            s.comparison_failure_count
        );
    }
}

fn run_sweep(
    a: &FiniteSemigroup,
    statement: Statement,
    options: SweepOptions,
    labels: &Labels,
    out: &mut String,
) -> Step {
    let s = sweep(a, statement, options).map_err(|e| match e {
        SweepError::CarrierTooLarge { .. } => Failure::precondition(format!("{e}; use --max-size")),
        other => Failure::precondition(other),
    })?;
    sweep_text(&s, labels, out);
    let code = if s.is_clean() { EXIT_OK } else { EXIT_VIOLATION };
    Ok((Payload::Sweep(s), code))
}

fn run_transform(
    a: &FiniteSemigroup,
    pair: &Pair,
    m: usize,
    z: Option<usize>,
    labels: &Labels,
    out: &mut String,
) -> Step {
    check_fits(a, &[pair.x, pair.y])?;
    let unital = a.unitization().map_err(Failure::precondition)?;
    let unitized = !a.is_monoid();
    let b: &FiniteSemigroup = &unital;
    if unitized {
        let _ = writeln!(out, "no identity; working in the unitization with identity {}", b.order() - 1);
    }
    let candidates = transform_candidates(b, pair.x, pair.y, m).map_err(Failure::precondition)?;
    let z = match z.or_else(|| candidates.first()) {
        Some(z) => z,
        None => return Err(Failure::precondition("(mX + 2Y) \\ (X + Y) is empty; no transform exists")),
    };
    let result = apply_transform(b, pair.x, pair.y, m, z).map_err(Failure::precondition)?;
    let name = |i: usize| if i < a.order() { labels.elem(i) } else { "1".to_string() };
    let _ = writeln!(out, "candidates: {}", labels.set(candidates.intersection(a.carrier())));
    let _ = writeln!(out, "z = {}, x_z = {}, y_z = {}", name(result.z), name(result.x_z), name(result.y_z));
    let _ = writeln!(out, "Ỹ_z = {}", labels.set(result.y_tilde));
    let _ = writeln!(out, "Y_z = {}", labels.set(result.y_prime));

    let (audit, code) = match audit_transform(b, pair.x, pair.y, &result) {
        Ok(audit) => {
            for (label, item) in audit.items() {
                let _ = writeln!(out, "  {label:<36} {}", serde_json::to_value(item).expect("plain enum"));
            }
            let _ = writeln!(out, "  (v) {} >= {}", audit.inequality_lhs, audit.inequality_rhs);
            let code = if audit.all_applicable_hold() { EXIT_OK } else { EXIT_VIOLATION };
            (Some(audit), code)
        }
        Err(TransformError::EmptyTransform) => {
            let _ = writeln!(out, "Y_z is empty; nothing to audit");
            (None, EXIT_OK)
        }
        Err(e) => return Err(Failure::precondition(e)),
    };
    Ok((Payload::Transform { x: pair.x, y: pair.y, unitized, result, audit }, code))
}

fn run_localize(a: &FiniteSemigroup, pair: &Pair, z: Option<ElementSet>, labels: &Labels, out: &mut String) -> Step {
    let r = match localize(a, pair.x, pair.y, z) {
        Ok(r) => r,
        Err(e @ LocalizeError::NoSystemOfRepresentatives { .. }) => {
            return Err(Failure { code: EXIT_VIOLATION, message: e.to_string() })
        }
        Err(e) => return Err(Failure::precondition(e)),
    };
    let width = (0..a.order()).map(|i| labels.elem(i).chars().count()).max().unwrap_or(1) + 2;
    let header: String = r.matrix.ys.iter().map(|&y| format!("{:>width$}", labels.elem(y))).collect();
    let _ = writeln!(out, "{:>width$} |{header}", "+");
    for (i, row) in r.matrix.entries.iter().enumerate() {
        let chosen = row.iter().position(|&e| e == r.representatives[i]);
        let cells: String = row
            .iter()
            .enumerate()
            .map(|(j, &e)| {
                let cell = if Some(j) == chosen { format!("[{}]", labels.elem(e)) } else { labels.elem(e) };
                format!("{cell:>width$}")
            })
            .collect();
        let _ = writeln!(out, "{:>width$} |{cells}", labels.elem(r.matrix.xs[i]));
    }
    let _ = writeln!(out, "Z = {}", labels.set(r.z));
    let reps: Vec<String> = r.representatives.iter().map(|&e| labels.elem(e)).collect();
    let _ = writeln!(out, "representatives: ({})", reps.join(","));
    let _ = writeln!(out, "{} distinct elements: {}", r.witnessed.len(), labels.set(r.witnessed));
    Ok((Payload::Localization(r), EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("semisum").chain(args.iter().copied()))
    }

    #[test]
    fn sumset_prints_the_set() {
        let out = run_args(&["sumset", "--semigroup", "cyclic:5", "--x", "{0,1}", "--y", "{0,1}"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.trim(), "{0,1,2}");
    }

    #[test]
    fn verify_gated_statement() {
        let out = run_args(&["verify", "--semigroup", "maxchain:3", "--statement", "thm2.2", "--x", "{1}", "--y", "{1,2}"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("not applicable (not cancellative)"), "{}", out.stdout);
    }

    #[test]
    fn usage_errors_exit_one() {
        let out = run_args(&["sumset", "--semigroup", "cyclic:5", "--x", "{0,1}"]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("--y"));
        let out = run_args(&["frobnicate"]);
        assert_eq!(out.code, 1);
        assert_eq!(run_args(&["sumset", "--semigroup", "cyclic:5", "--x", "0,1", "--y", "{0}"]).code, 1);
        assert_eq!(run_args(&["--help"]).code, 0);
    }

    #[test]
    fn precondition_failures_exit_two() {
        let out = run_args(&["verify", "--semigroup", "maxchain:2", "--statement", "hk", "--x", "{0}", "--y", "{1}"]);
        assert_eq!(out.code, 2);
        let out = run_args(&["sumset", "--semigroup", "cyclic:3", "--x", "{5}", "--y", "{1}"]);
        assert_eq!(out.code, 2);
        let out = run_args(&["sweep", "--semigroup", "cyclic:20", "--statement", "thm2.2"]);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("--max-size"));
    }

    #[test]
    fn canonical_echo_drops_output_flags() {
        let out = run_args(&["sweep", "--semigroup", "cyclic:5", "--statement", "thm2.2", "--jobs", "3", "--json"]);
        let report: RunReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(report.command, "sweep --semigroup cyclic:5 --statement thm2.2");
        assert!(report.timing_ms.is_none());
    }

    #[test]
    fn localize_marks_chosen_entries() {
        let out = run_args(&["localize", "--semigroup", "cyclic:5", "--x", "{0,1}", "--y", "{0,1,2}"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("[2]") && out.stdout.contains("[3]"), "{}", out.stdout);
        assert!(out.stdout.contains("4 distinct elements: {0,1,2,3}"));
    }

    #[test]
    fn transform_unitizes_when_needed() {
        let out = run_args(&["transform", "--semigroup", "leftzero:2", "--x", "{0}", "--y", "{1}", "--json"]);
        // 0 + Y = {0} and X + 2Y = {0}, so there is no candidate.
        assert_eq!(out.code, 2);
        let err: ErrorReport = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(err.exit_code, 2);
    }
}
