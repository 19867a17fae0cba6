//! Batch front end: `roots`, `weyl`, `constants`, `certify`, `classify`.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 no compact inner form
//! predicted (`certify` on an exception type), 4 internal invariant
//! violation (including a failed certificate or `--check-paper` mismatch).

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chevalley::{build_constants, condition_v_holds, weyl_involution};
use crate::classifier::{classify, exception_mismatches, full_table, ClassificationRecord};
use crate::compact_form::certify_compact;
use crate::error::Error;
use crate::root_system::{parse_type, DynkinType, RootSystem};
use crate::weyl::{longest_element, minus_w0, DiagramAutomorphism};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PREDICTED_ABSENT: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "lieform", version, about = "Root systems, Chevalley bases and compact real forms, exactly")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Largest rank swept by `classify --all`.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_rank: usize,

    /// With `classify`: verify the computed table against the exception list.
    #[arg(long, global = true)]
    pub check_paper: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots in generation order with heights.
    Roots {
        /// Type such as A2, D4^3, E8.
        r#type: String,
        /// Print only the number of positive roots.
        #[arg(long)]
        count_only: bool,
    },
    /// Reduced word of the longest element and the -w0 permutation.
    Weyl { r#type: String },
    /// Signed structure constants N(alpha, beta).
    Constants { r#type: String },
    /// Compact-form certificate (closure, Killing definiteness, fixed points).
    Certify { r#type: String },
    /// Classification record(s).
    Classify {
        r#type: Option<String>,
        /// Every type of rank up to --max-rank.
        #[arg(long)]
        all: bool,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self { code, stdout: String::new(), stderr }
    }

    fn from_error(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        };
        Self::fail(code, format!("error: {e}"))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Roots { r#type, count_only } => parse_type(r#type).map(|t| cmd_roots(&t, cli.format, *count_only)),
        Command::Weyl { r#type } => parse_type(r#type).and_then(|t| cmd_weyl(&t, cli.format)),
        Command::Constants { r#type } => parse_type(r#type).and_then(|t| cmd_constants(&t, cli.format)),
        Command::Certify { r#type } => parse_type(r#type).and_then(|t| cmd_certify(&t, cli.format)),
        Command::Classify { r#type, all } => {
            if *all == r#type.is_some() {
                return Outcome::fail(EXIT_USAGE, "error: classify takes either a TYPE or --all");
            }
            if *all && cli.max_rank == 0 {
                return Outcome::fail(EXIT_USAGE, "error: --max-rank must be at least 1");
            }
            let selection = match r#type {
                Some(s) => parse_type(s).map(Some),
                None => Ok(None),
            };
            selection.and_then(|t| cmd_classify(t, cli.max_rank, cli.check_paper, cli.format))
        }
    };
    result.unwrap_or_else(Outcome::from_error)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn cmd_roots(t: &DynkinType, format: OutputFormat, count_only: bool) -> Outcome {
    let rs = RootSystem::of_type(t);
    if count_only {
        return Outcome::ok(format!("{}\n", rs.num_positive()));
    }
    let out = match format {
        OutputFormat::Json => to_json(&rs.summary()),
        OutputFormat::Csv => {
            let mut s = String::from("index,height,coords\n");
            for (i, r) in rs.positive_roots().iter().enumerate() {
                let _ = writeln!(s, "{},{},{}", i + 1, r.height(), join(r.coords()));
            }
            s
        }
        OutputFormat::Table => {
            let mut s = format!("{}: {} positive roots ({} total)\n", rs.name(), rs.num_positive(), rs.len());
            let _ = writeln!(s, "{:>5}  {:>6}  root", "index", "height");
            for (i, r) in rs.positive_roots().iter().enumerate() {
                let _ = writeln!(s, "{:>5}  {:>6}  {}", i + 1, r.height(), join(r.coords()));
            }
            s
        }
    };
    Outcome::ok(out)
}

#[derive(Serialize)]
struct WeylReport {
    #[serde(rename = "type")]
    r#type: String,
    length: usize,
    reduced_word: Vec<usize>,
    minus_w0: Vec<usize>,
    minus_w0_order: usize,
}

pub fn cmd_weyl(t: &DynkinType, format: OutputFormat) -> crate::Result<Outcome> {
    let rs = RootSystem::of_type(t);
    let w = longest_element(&rs);
    let mw = minus_w0(&rs)?;
    let report = WeylReport {
        r#type: rs.name(),
        length: w.length(),
        reduced_word: w.word_one_based(),
        minus_w0: mw.perm_one_based(),
        minus_w0_order: mw.order(),
    };
    let out = match format {
        OutputFormat::Json => to_json(&report),
        OutputFormat::Csv => format!(
            "type,length,reduced_word,minus_w0\n{},{},{},{}\n",
            report.r#type,
            report.length,
            join(&report.reduced_word),
            join(&report.minus_w0)
        ),
        OutputFormat::Table => format!(
            "{}: longest element of length {}\nreduced word: {}\n-w0 on nodes: {} (order {})\n",
            report.r#type,
            report.length,
            join(&report.reduced_word),
            join(&report.minus_w0),
            report.minus_w0_order
        ),
    };
    Ok(Outcome::ok(out))
}

#[derive(Serialize)]
struct ConstantsReport<'a> {
    #[serde(rename = "type")]
    r#type: String,
    constants: &'a [crate::chevalley::ConstantRow],
}

pub fn cmd_constants(t: &DynkinType, format: OutputFormat) -> crate::Result<Outcome> {
    let rs = RootSystem::of_type(t);
    let sc = build_constants(&rs)?;
    let rows = sc.rows();
    let out = match format {
        OutputFormat::Json => to_json(&ConstantsReport { r#type: rs.name(), constants: &rows }),
        OutputFormat::Csv => {
            let mut s = String::from("alpha_coords,beta_coords,N\n");
            for r in &rows {
                let _ = writeln!(s, "{},{},{}", join(&r.alpha), join(&r.beta), r.n);
            }
            s
        }
        OutputFormat::Table => {
            let w = 3 * rs.rank();
            let mut s = format!("{}: {} structure constants\n", rs.name(), rows.len());
            let _ = writeln!(s, "{:<w$}  {:<w$}  {:>3}", "alpha", "beta", "N");
            for r in &rows {
                let _ = writeln!(s, "{:<w$}  {:<w$}  {:>3}", join(&r.alpha), join(&r.beta), r.n);
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn cmd_certify(t: &DynkinType, format: OutputFormat) -> crate::Result<Outcome> {
    let rs = RootSystem::of_type(t);
    let psi = DiagramAutomorphism::for_twist(t)?;
    if !condition_v_holds(&rs, &psi) {
        return Ok(Outcome::fail(
            EXIT_PREDICTED_ABSENT,
            format!("{t}: no compact inner form predicted (w composed with psi is not -1 on the roots)"),
        ));
    }
    let sc = build_constants(&rs)?;
    let mut cert = certify_compact(&sc)?;
    cert.r#type = t.to_string();
    weyl_involution(&sc, &psi)?;
    let out = match format {
        OutputFormat::Json => to_json(&cert),
        OutputFormat::Csv => format!(
            "type,closure,negative_definite,antilinear_fixed\n{},{},{},{}\n",
            cert.r#type, cert.closure, cert.negative_definite, cert.antilinear_fixed
        ),
        OutputFormat::Table => format!(
            "{}: compact form of dimension {}\nclosure            {}\nnegative definite  {}\nantilinear fixed   {}\nKilling diagonal   {} ...\n",
            cert.r#type,
            cert.dimension,
            pass(cert.closure),
            pass(cert.negative_definite),
            pass(cert.antilinear_fixed),
            cert.gram_diagonal_sample.join(" ")
        ),
    };
    Ok(if cert.passed() {
        Outcome::ok(out)
    } else {
        Outcome { code: EXIT_INVARIANT, stdout: out, stderr: format!("{t}: certificate failed\n") }
    })
}

fn classify_table(records: &[ClassificationRecord]) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut s = format!(
        "{:<6} {:>5}  {:<5} {:<11} {:<13} {:<14} {:<15} {:<7} {}\n",
        "type", "twist", "(v)", "cartan-type", "compact-inner", "compact-cartan", "discrete-series", "witness", "note"
    );
    for r in records {
        let witness = match &r.witness {
            Some(w) => pass(w.passed()),
            None => "-",
        };
        let line = format!(
            "{:<6} {:>5}  {:<5} {:<11} {:<13} {:<14} {:<15} {:<7} {}",
            r.dynkin.base_name(),
            r.twist,
            yn(r.condition_v),
            yn(r.is_cartan_type),
            yn(r.has_compact_inner_form),
            yn(r.has_compact_cartan),
            yn(r.has_discrete_series),
            witness,
            r.note.unwrap_or("")
        );
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}

fn classify_csv(records: &[ClassificationRecord]) -> String {
    let mut s = String::from(
        "type,twist,condition_v,cartan_type,compact_inner_form,compact_cartan,discrete_series,witness,note\n",
    );
    for r in records {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{},{}",
            r.dynkin.base_name(),
            r.twist,
            r.condition_v,
            r.is_cartan_type,
            r.has_compact_inner_form,
            r.has_compact_cartan,
            r.has_discrete_series,
            r.witness.as_ref().map_or("none", |w| pass(w.passed())),
            r.note.unwrap_or("")
        );
    }
    s
}

pub fn cmd_classify(
    t: Option<DynkinType>,
    max_rank: usize,
    check_paper: bool,
    format: OutputFormat,
) -> crate::Result<Outcome> {
    let records = match t {
        Some(t) => vec![classify(&t)?],
        None => full_table(max_rank)?,
    };
    let out = match (format, t) {
        (OutputFormat::Json, Some(_)) => to_json(&records[0]),
        (OutputFormat::Json, None) => to_json(&records),
        (OutputFormat::Csv, _) => classify_csv(&records),
        (OutputFormat::Table, _) => classify_table(&records),
    };
    let mut outcome = Outcome::ok(out);
    if check_paper {
        let bad = exception_mismatches(&records);
        if bad.is_empty() {
            outcome.stderr = format!("check-paper: {} records agree with the exception list\n", records.len());
        } else {
            outcome.code = EXIT_INVARIANT;
            outcome.stderr = format!("check-paper: mismatch for {}\n", join(&bad));
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &str) -> Outcome {
        run(std::iter::once("lieform").chain(args.split_whitespace()))
    }

    #[test]
    fn roots_examples() {
        let o = run_args("roots A2 --format json");
        assert_eq!(o.code, 0);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["positive_roots"].as_array().unwrap().len(), 3);
        assert_eq!(v["type"], "A2");
        let o = run_args("roots Z9");
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("malformed"));
        assert_eq!(run_args("roots E8 --count-only").stdout, "120\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args("").code, 2);
        assert_eq!(run_args("frobnicate A2").code, 2);
        assert_eq!(run_args("roots A2 --format xml").code, 2);
        assert_eq!(run_args("classify").code, 2);
        assert_eq!(run_args("classify A2 --all").code, 2);
        assert_eq!(run_args("classify A1^2").code, 2);
        assert_eq!(run_args("classify --all --max-rank 0").code, 2);
        assert_eq!(run_args("--help").code, 0);
    }

    #[test]
    fn certify_exit_codes() {
        let o = run_args("certify G2");
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout.matches("pass").count(), 3);
        let o = run_args("certify A2");
        assert_eq!(o.code, 3);
        assert!(o.stdout.is_empty());
        let o = run_args("certify A1 --format json");
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["closure"], true);
        assert_eq!(v["negative_definite"], true);
        assert_eq!(v["antilinear_fixed"], true);
    }

    #[test]
    fn constants_examples() {
        let o = run_args("constants A1 --format csv");
        assert_eq!(o.stdout, "alpha_coords,beta_coords,N\n");
        let o = run_args("constants A2 --format csv");
        assert_eq!(o.stdout.lines().count(), 1 + 6);
        let o = run_args("constants G2 --format json");
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert!(v["constants"].as_array().unwrap().iter().any(|r| r["N"].as_i64().unwrap().abs() == 3));
    }

    #[test]
    fn classify_examples() {
        let o = run_args("classify E6 --format json");
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["condition_v"], false);
        let o = run_args("classify A3^2 --format json");
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["condition_v"], true);
        assert_eq!(v["witness"]["negative_definite"], true);
    }

    #[test]
    fn weyl_output() {
        let o = run_args("weyl A2");
        assert_eq!(o.stdout, "A2: longest element of length 3\nreduced word: 1 2 1\n-w0 on nodes: 2 1 (order 2)\n");
    }
}
