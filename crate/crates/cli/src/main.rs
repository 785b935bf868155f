//! `incidence` — exact Möbius machinery on locally finite posets.
//!
//! Exit codes: 0 on success (and passing certifications), 1 when a
//! certification or verification finds the predicted signal absent, 2 on
//! usage or input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use incidence_core::checkers::{
    certify_theorem4, certify_theorem5, check_g_ladder, hk_witness_ladder,
    uncertainty_experiment, ExperimentResult,
};
use incidence_core::reduced::{
    prop7_check, prop8_check, reduced_convolve, reduced_mobius, verify_structure_coefficients,
    CoefficientFamily, ReducedSequence, SequenceEntry,
};
use incidence_core::report::{CertificationReport, LadderReport};
use incidence_core::zoo::{list_families, FamilySpec};
use incidence_core::{
    format_rational, parse_rational, ElementKey, PosetView, SupportedFunction,
};

const DEFAULT_SEED: u64 = 42;
const CACHE_ENV: &str = "MOBIUS_POSETS_CACHE";

#[derive(Parser)]
#[command(
    name = "incidence",
    version,
    about = "Exact-arithmetic Möbius inversion, uncertainty experiments and reduced algebras on locally finite posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct PosetArgs {
    /// Poset family name (see `incidence zoo list`) or file:<path>
    #[arg(long)]
    poset: String,

    /// Field size for subspace posets
    #[arg(long)]
    q: Option<u64>,
}

impl PosetArgs {
    fn spec(&self) -> Result<FamilySpec, AppError> {
        Ok(FamilySpec::parse(&self.poset, self.q)?)
    }

    fn build(&self) -> Result<(FamilySpec, PosetView), AppError> {
        let spec = self.spec()?;
        let view = incidence_core::zoo::build(&spec)?;
        if let Some(limit) = cache_limit_from_env()? {
            view.set_cache_limit(Some(limit));
        }
        Ok((spec, view))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the Möbius value μ(x, y)
    Mobius {
        #[command(flatten)]
        poset: PosetArgs,
        x: String,
        y: String,
    },
    /// Zeta-transform the function in --f-file at the element x
    Transform {
        #[command(flatten)]
        poset: PosetArgs,
        /// File of `element value` lines
        #[arg(long = "f-file")]
        f_file: PathBuf,
        x: String,
    },
    /// Möbius-invert the function in --g-file at the element x
    Invert {
        #[command(flatten)]
        poset: PosetArgs,
        /// File of `element value` lines
        #[arg(long = "g-file")]
        g_file: PathBuf,
        x: String,
    },
    /// Count frontier elements dominating exactly one candidate, per rung
    Witnesses {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long, value_delimiter = ',', default_values_t = [25u32, 50, 100])]
        ladder: Vec<u32>,
        /// Candidate elements
        #[arg(required = true)]
        s: Vec<String>,
    },
    /// Count frontier elements y with μ(x, y) ≠ 0, per rung
    CheckG {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long, value_delimiter = ',', default_values_t = [25u32, 50, 100])]
        ladder: Vec<u32>,
        x: String,
    },
    /// Track the support of the zeta transform of --f-file along the ladder
    Experiment {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long = "f-file")]
        f_file: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [25u32, 50, 100])]
        ladder: Vec<u32>,
    },
    /// Run a certification suite; exits 1 when a predicted signal is absent
    Certify {
        #[command(subcommand)]
        target: CertifyTarget,
    },
    /// Reduced sequence-algebra commands
    Reduced {
        #[command(subcommand)]
        command: ReducedCommand,
    },
    /// Inspect the built-in poset families
    Zoo {
        #[command(subcommand)]
        command: ZooCommand,
    },
}

#[derive(Subcommand)]
enum CertifyTarget {
    /// Signals of the two-level counterexample: Möbius counts grow, the
    /// two-element witness scan is pinned at one
    Theorem4 {
        #[arg(long, default_value_t = 25)]
        n: u32,
    },
    /// Signals of the three-copy counterexample: the three-element witness
    /// scan is pinned at one while a seeded transform battery grows
    Theorem5 {
        #[arg(long, default_value_t = 25)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ReducedCommand {
    /// Convolve the sequences in --f-file and --g-file; prints values 1..=n
    Conv {
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long = "f-file")]
        f_file: PathBuf,
        #[arg(long = "g-file")]
        g_file: PathBuf,
        #[arg(long)]
        n: u64,
    },
    /// Triangular Möbius solve on 1..=n
    Mobius {
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        n: u64,
    },
    /// Compare closed-form structure coefficients with brute-force interval
    /// counts in the matching poset; exits 1 on any mismatch
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        nmax: u64,
    },
    /// Dominance report for the binomial transform of --f-file
    Prop7 {
        #[arg(long = "f-file")]
        f_file: PathBuf,
        #[arg(long, default_value_t = 500)]
        n: u64,
    },
    /// Two-route agreement report for the q-binomial transform of --f-file
    Prop8 {
        #[arg(long = "f-file")]
        f_file: PathBuf,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 40)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum ZooCommand {
    /// List the available poset families
    List,
}

struct AppError(String);

impl<E: std::error::Error> From<E> for AppError {
    fn from(e: E) -> Self {
        AppError(e.to_string())
    }
}

fn cache_limit_from_env() -> Result<Option<usize>, AppError> {
    match std::env::var(CACHE_ENV) {
        Ok(raw) => {
            let limit: usize = raw
                .trim()
                .parse()
                .map_err(|_| AppError(format!("{CACHE_ENV} must be an integer, got `{raw}`")))?;
            Ok(Some(limit))
        }
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out = cli.out.clone();
    match run(cli) {
        Ok(outcome) => {
            let code = outcome.exit_code;
            if let Err(e) = emit(&outcome, format, out.as_deref()) {
                eprintln!("error: {}", e.0);
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(2)
        }
    }
}

/// A rendered result: every command produces all three formats up front so
/// emission is a plain dispatch.
struct Outcome {
    text: String,
    json: String,
    csv: String,
    exit_code: u8,
}

impl Outcome {
    fn scalar(value: String) -> Outcome {
        let json = serde_json::json!({ "value": value }).to_string();
        Outcome {
            text: value.clone(),
            json,
            csv: format!("value\n{value}"),
            exit_code: 0,
        }
    }

    fn from_serialize<T: Serialize>(value: &T, text: String, csv: String, exit_code: u8) -> Outcome {
        Outcome {
            text,
            json: serde_json::to_string_pretty(value).expect("report serialization"),
            csv,
            exit_code,
        }
    }
}

fn emit(outcome: &Outcome, format: Format, out: Option<&Path>) -> Result<(), AppError> {
    use std::io::Write;
    let body = match format {
        Format::Text => &outcome.text,
        Format::Json => &outcome.json,
        Format::Csv => &outcome.csv,
    };
    match out {
        Some(path) => std::fs::write(path, format!("{body}\n"))
            .map_err(|e| AppError(format!("cannot write {}: {e}", path.display())))?,
        None => {
            // tolerate a closed pipe (e.g. `incidence zoo list | head`)
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{body}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(AppError(e.to_string()));
                }
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome, AppError> {
    match cli.command {
        Command::Mobius { poset, x, y } => {
            let (spec, p) = poset.build()?;
            let xk = spec.parse_element(&x)?;
            let yk = spec.parse_element(&y)?;
            let mu = p.mobius(&xk, &yk)?;
            Ok(Outcome::scalar(mu.to_string()))
        }
        Command::Transform { poset, f_file, x } => {
            let (spec, p) = poset.build()?;
            let f = read_function_file(&f_file, &spec)?;
            let xk = spec.parse_element(&x)?;
            let value = p.zeta_transform(&f, &xk)?;
            Ok(Outcome::scalar(format_rational(&value)))
        }
        Command::Invert { poset, g_file, x } => {
            let (spec, p) = poset.build()?;
            let g = read_function_file(&g_file, &spec)?;
            let xk = spec.parse_element(&x)?;
            let value = p.mobius_invert(&g, &xk)?;
            Ok(Outcome::scalar(format_rational(&value)))
        }
        Command::Witnesses { poset, ladder, s } => {
            let (spec, p) = poset.build()?;
            let keys = s
                .iter()
                .map(|raw| spec.parse_element(raw))
                .collect::<Result<Vec<_>, _>>()?;
            let report = hk_witness_ladder(&p, &keys, &ladder)?;
            Ok(render_ladder_report(&report))
        }
        Command::CheckG { poset, ladder, x } => {
            let (spec, p) = poset.build()?;
            let xk = spec.parse_element(&x)?;
            let report = check_g_ladder(&p, &xk, &ladder)?;
            Ok(render_ladder_report(&report))
        }
        Command::Experiment {
            poset,
            f_file,
            ladder,
        } => {
            let (spec, p) = poset.build()?;
            let f = read_function_file(&f_file, &spec)?;
            let result = uncertainty_experiment(&p, &f, &ladder)?;
            Ok(render_experiment(&result))
        }
        Command::Certify { target } => {
            let report = match target {
                CertifyTarget::Theorem4 { n } => certify_theorem4(n)?,
                CertifyTarget::Theorem5 { n, seed } => certify_theorem5(n, seed)?,
            };
            Ok(render_certification(&report))
        }
        Command::Reduced { command } => run_reduced(command),
        Command::Zoo { command } => match command {
            ZooCommand::List => Ok(render_zoo_list()),
        },
    }
}

fn run_reduced(command: ReducedCommand) -> Result<Outcome, AppError> {
    match command {
        ReducedCommand::Conv {
            family,
            q,
            f_file,
            g_file,
            n,
        } => {
            let fam = CoefficientFamily::parse(&family, q)?;
            let f = read_sequence_file(&f_file)?;
            let g = read_sequence_file(&g_file)?;
            let values: Vec<_> = (1..=n).map(|m| reduced_convolve(&fam, &f, &g, m)).collect();
            let seq = ReducedSequence::from_pairs((1..=n).zip(values.iter().cloned()));
            Ok(render_sequence(&seq, n))
        }
        ReducedCommand::Mobius { family, q, n } => {
            let fam = CoefficientFamily::parse(&family, q)?;
            let mu = reduced_mobius(&fam, n);
            Ok(render_sequence(&mu, n))
        }
        ReducedCommand::Verify { family, q, nmax } => {
            let fam = CoefficientFamily::parse(&family, q)?;
            if nmax < 1 {
                return Err(AppError("--nmax must be at least 1".to_string()));
            }
            // frontier bound: types reach nmax once the frontier holds a
            // chain of that type; rank-graded families need one rank less
            let frontier = match fam {
                CoefficientFamily::Dirichlet | CoefficientFamily::LinearOrder => nmax as u32,
                _ => (nmax - 1) as u32,
            };
            let p = incidence_core::zoo::build(&fam.matching_poset())?;
            let report = verify_structure_coefficients(&fam, &p, frontier, nmax)?;
            let text = if report.all_match {
                "all-match".to_string()
            } else {
                let mut t = format!("{} mismatches\n", report.mismatches.len());
                for m in report.mismatches.iter().take(10) {
                    let _ = writeln!(
                        t,
                        "[{} , {}] type {} at (d={}, k={}): closed form {}, counted {}",
                        m.x, m.y, m.n, m.d, m.k, m.closed_form, m.brute_count
                    );
                }
                t.trim_end().to_string()
            };
            let csv = format!(
                "family,intervals_checked,mismatches,all_match\n{},{},{},{}",
                report.family,
                report.intervals_checked,
                report.mismatches.len(),
                report.all_match
            );
            let code = u8::from(!report.all_match);
            Ok(Outcome::from_serialize(&report, text, csv, code))
        }
        ReducedCommand::Prop7 { f_file, n } => {
            let f = read_sequence_file(&f_file)?;
            let report = prop7_check(&f, n)?;
            let text = format!(
                "nonzero from {}; ratio at {} = {} (target {}, tolerance {}); {}",
                report.nonzero_from,
                report.bound,
                report.ratio_at_bound,
                report.target,
                report.tolerance,
                if report.pass { "pass" } else { "fail" }
            );
            let csv = format!(
                "nonzero_from,ratio,target,pass\n{},{},{},{}",
                report.nonzero_from, report.ratio_at_bound, report.target, report.pass
            );
            let code = u8::from(!report.pass);
            Ok(Outcome::from_serialize(&report, text, csv, code))
        }
        ReducedCommand::Prop8 { f_file, q, n } => {
            let f = read_sequence_file(&f_file)?;
            let report = prop8_check(&f, q, n)?;
            let text = format!(
                "routes {} on ({}, {}]; {} zeros against degree {}; {}",
                if report.routes_match { "agree" } else { "disagree" },
                report.max_support,
                report.bound,
                report.zeros.len(),
                report.polynomial_degree,
                if report.pass { "pass" } else { "fail" }
            );
            let csv = format!(
                "q,routes_match,zeros,degree,pass\n{},{},{},{},{}",
                report.q,
                report.routes_match,
                report.zeros.len(),
                report.polynomial_degree,
                report.pass
            );
            let code = u8::from(!report.pass);
            Ok(Outcome::from_serialize(&report, text, csv, code))
        }
    }
}

fn render_sequence(seq: &ReducedSequence, bound: u64) -> Outcome {
    let dense: Vec<String> = seq.dense(bound).iter().map(format_rational).collect();
    let text = format!("[{}]", dense.join(","));
    let entries: Vec<SequenceEntry> = seq.entries();
    let mut csv = String::from("n,value");
    for (i, v) in dense.iter().enumerate() {
        let _ = write!(csv, "\n{},{}", i + 1, v);
    }
    Outcome::from_serialize(&entries, text, csv, 0)
}

fn render_ladder_report(report: &LadderReport) -> Outcome {
    let mut text = format!(
        "property {} on {} at ladder {:?}\n",
        report.property, report.poset, report.frontier_ladder
    );
    for cand in &report.per_candidate {
        let _ = writeln!(
            text,
            "  {} counts {:?} stabilized={}",
            cand.z, cand.counts, cand.stabilized
        );
    }
    let _ = write!(text, "verdict: {}", verdict_str(report.verdict));
    let mut csv = String::from("z");
    for rung in &report.frontier_ladder {
        let _ = write!(csv, ",{rung}");
    }
    csv.push_str(",stabilized");
    for cand in &report.per_candidate {
        let _ = write!(csv, "\n{}", cand.z);
        for c in &cand.counts {
            let _ = write!(csv, ",{c}");
        }
        let _ = write!(csv, ",{}", cand.stabilized);
    }
    Outcome::from_serialize(report, text, csv, 0)
}

fn render_experiment(result: &ExperimentResult) -> Outcome {
    let mut text = format!(
        "experiment on {} at ladder {:?}\n",
        result.poset, result.frontier_ladder
    );
    let f_desc: Vec<String> = result
        .f
        .iter()
        .map(|kv| format!("{}:{}", kv.element, kv.value))
        .collect();
    let _ = writeln!(text, "  f = {{{}}}", f_desc.join(", "));
    let _ = writeln!(text, "  g-support counts {:?}", result.g_support_counts);
    let _ = write!(text, "verdict: {}", verdict_str(result.verdict));
    let mut csv = String::from("rung,g_support\n");
    for (rung, count) in result
        .frontier_ladder
        .iter()
        .zip(&result.g_support_counts)
    {
        let _ = writeln!(csv, "{rung},{count}");
    }
    let csv = csv.trim_end().to_string();
    Outcome::from_serialize(result, text, csv, 0)
}

fn render_certification(report: &CertificationReport) -> Outcome {
    let mut text = format!(
        "{} on {} at ladder {:?} (seed {})\n",
        report.theorem, report.poset, report.frontier_ladder, report.seed
    );
    for check in &report.checks {
        let _ = writeln!(
            text,
            "  [{}] {} counts={:?}",
            if check.pass { "PASS" } else { "FAIL" },
            check.name,
            check.counts
        );
    }
    let _ = write!(text, "verdict: {}", if report.pass { "pass" } else { "fail" });
    let mut csv = String::from("check,pass");
    for check in &report.checks {
        let _ = write!(csv, "\n\"{}\",{}", check.name.replace('"', "'"), check.pass);
    }
    let code = u8::from(!report.pass);
    Outcome::from_serialize(report, text, csv, code)
}

fn render_zoo_list() -> Outcome {
    #[derive(Serialize)]
    struct Family {
        name: &'static str,
        description: &'static str,
    }
    let families: Vec<Family> = list_families()
        .into_iter()
        .map(|(name, description)| Family { name, description })
        .collect();
    let text = families
        .iter()
        .map(|f| format!("{:18} {}", f.name, f.description))
        .collect::<Vec<_>>()
        .join("\n");
    let csv = {
        let mut c = String::from("name,description");
        for f in &families {
            let _ = write!(c, "\n{},\"{}\"", f.name, f.description);
        }
        c
    };
    Outcome::from_serialize(&families, text, csv, 0)
}

fn verdict_str(v: incidence_core::Verdict) -> &'static str {
    match v {
        incidence_core::Verdict::GrowthObserved => "growth-observed",
        incidence_core::Verdict::Stabilized => "stabilized",
        incidence_core::Verdict::Inconclusive => "inconclusive",
    }
}

/// Reads `element value` lines into a finitely supported function; `#`
/// starts a comment.
fn read_function_file(path: &Path, spec: &FamilySpec) -> Result<SupportedFunction, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError(format!("cannot read {}: {e}", path.display())))?;
    let mut f = SupportedFunction::new();
    let mut seen: Vec<ElementKey> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: String| AppError(format!("{} line {}: {msg}", path.display(), lineno + 1));
        let (elem_str, value_str) = line
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| at("expected `<element> <value>`".to_string()))?;
        let key = spec
            .parse_element(elem_str.trim())
            .map_err(|e| at(e.to_string()))?;
        let value = parse_rational(value_str).map_err(|e| at(e.to_string()))?;
        if seen.contains(&key) {
            return Err(at(format!("duplicate element `{}`", key)));
        }
        seen.push(key.clone());
        f.set(key, value);
    }
    Ok(f)
}

/// Reads `index value` lines into a reduced sequence.
fn read_sequence_file(path: &Path) -> Result<ReducedSequence, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError(format!("cannot read {}: {e}", path.display())))?;
    let mut f = ReducedSequence::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let at = |msg: String| AppError(format!("{} line {}: {msg}", path.display(), lineno + 1));
        let (n_str, value_str) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| at("expected `<index> <value>`".to_string()))?;
        let n: u64 = n_str
            .trim()
            .parse()
            .map_err(|_| at(format!("`{n_str}` is not a positive integer")))?;
        if n == 0 {
            return Err(at("indices start at 1".to_string()));
        }
        if !f.get(n).eq(&incidence_core::rat(0)) {
            return Err(at(format!("duplicate index {n}")));
        }
        let value = parse_rational(value_str).map_err(|e| at(e.to_string()))?;
        f.set(n, value);
    }
    Ok(f)
}
