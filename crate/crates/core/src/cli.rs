//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 resource cap reached,
//! 4 refuted hypothesis, 5 unmet theorem hypothesis.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::binoid::{Binoid, Limits};
use crate::error::{Error, Result};
use crate::hk::{
    frobenius_sum, hkf_table, maximal_ideal, verify_counting_identity, HKSample, IdealSpec,
    NSetSpec,
};
use crate::presentation::{free_binoid, parse_presentation, Presentation, Word};
use crate::rewrite::Element;
use crate::spectrum::{is_integral_quotient, is_reduced, prime_names, spectrum, unit_group_order};
use crate::structure::{ehk, ehk_estimate, EhkOptions, EhkResult, EhkValue, DEFAULT_SCHEDULE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_REFUTED: i32 = 4;
pub const EXIT_HYPOTHESIS: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "binoid-hk", version, about = "Hilbert-Kunz functions and multiplicities of binoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spectrum, dimension and structural predicates.
    Info(Common),
    /// Normal form of a word.
    Nf {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Membership of a word in the ideal generated by `--ideal` words.
    Member {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Hilbert-Kunz function values.
    Hkf {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_q_list, default_value = "1..5")]
        q: QList,
    },
    /// Hilbert-Kunz multiplicity.
    Ehk {
        #[command(flatten)]
        common: Common,
        /// Estimate numerically instead of reducing to toric volumes.
        #[arg(long)]
        estimate: bool,
        /// Sample schedule for estimates.
        #[arg(long, value_parser = parse_q_list)]
        q: Option<QList>,
        #[arg(long)]
        assert_cancellative: bool,
        #[arg(long)]
        assert_semipositive: bool,
    },
    /// Checks the counting identity and smash multiplicativity.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Words generating the ideal I of the counting identity.
        #[arg(long = "with", value_delimiter = ';')]
        with: Vec<String>,
        #[arg(long, value_parser = parse_q_list, default_value = "1..4")]
        q: QList,
    },
    /// Binomial and monomial ideal of the binoid algebra.
    ExportRing(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Presentation file.
    #[arg(short, long, conflicts_with_all = ["spec", "free"])]
    pub input: Option<PathBuf>,
    /// Inline presentation.
    #[arg(long, conflicts_with = "free")]
    pub spec: Option<String>,
    /// The free binoid on this many generators.
    #[arg(long)]
    pub free: Option<usize>,
    /// Ideal generators, separated by `;` (default: the maximal ideal).
    #[arg(long, value_delimiter = ';')]
    pub ideal: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, value_parser = positive_usize)]
    pub enumeration_cap: Option<usize>,
    #[arg(long, value_parser = positive_usize)]
    pub completion_budget: Option<usize>,
    #[arg(long, value_parser = positive_usize)]
    pub subset_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QList(pub Vec<u64>);

/// Parses `3`, `1..5`, `2,4,8` or mixtures such as `1..3,8`.
pub fn parse_q_list(s: &str) -> std::result::Result<QList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| format!("invalid q range `{part}`"))?;
            let b: u64 = b.trim().parse().map_err(|_| format!("invalid q range `{part}`"))?;
            if a > b {
                return Err(format!("empty q range `{part}`"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| format!("invalid q value `{part}`"))?);
        }
    }
    if out.is_empty() {
        return Err("no q values given".into());
    }
    if out.contains(&0) {
        return Err("q must be at least 1".into());
    }
    Ok(QList(out))
}

fn positive_usize(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive integer, got `{s}`")),
        Ok(n) => Ok(n),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Syntax { .. }
        | Error::UndeclaredGenerator(_)
        | Error::DuplicateGenerator(_)
        | Error::NegativeExponent { .. }
        | Error::WordLength { .. }
        | Error::GroupOrder(_)
        | Error::InvalidComplex(_)
        | Error::InvalidArgument(_) => EXIT_USAGE,
        Error::CompletionBudget { .. }
        | Error::EnumerationCap(_)
        | Error::SubsetCap { .. }
        | Error::ExactDimension { .. } => EXIT_CAP,
        Error::NotPrimary(_) | Error::NotPointed => EXIT_REFUTED,
        Error::UnknownUnitGroup | Error::UnmetHypothesis(_) | Error::ModeMismatch => EXIT_HYPOTHESIS,
    }
}

/// Output of one invocation: what goes to stdout and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line given by `args` (including the program name).
pub fn run_with<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(Rendered { stdout, code }) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point of the binary.
pub fn run() -> i32 {
    if let Some(n) = std::env::var("BINOID_HK_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // an already initialized pool keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let out = run_with(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

struct Rendered {
    stdout: String,
    code: i32,
}

impl Rendered {
    fn ok(stdout: String) -> Self {
        Rendered { stdout, code: EXIT_OK }
    }
}

struct Loaded {
    source: String,
    binoid: Binoid,
}

impl Common {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            completion_budget: self.completion_budget.unwrap_or(d.completion_budget),
            enumeration_cap: self.enumeration_cap.unwrap_or(d.enumeration_cap),
            subset_cap: self.subset_cap.unwrap_or(d.subset_cap),
            reduced_cap: d.reduced_cap,
        }
    }

    fn presentation(&self) -> Result<(String, Presentation)> {
        let text = match (&self.input, &self.spec, self.free) {
            (_, _, Some(n)) => return Ok((format!("free {n}"), free_binoid(n))),
            (_, Some(s), _) => s.clone(),
            (Some(path), _, _) => std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?,
            (None, None, None) => {
                return Err(Error::InvalidArgument(
                    "no input: give a file, --spec or --free".into(),
                ))
            }
        };
        let p = parse_presentation(&text)?;
        Ok((text.trim().to_string(), p))
    }

    fn load(&self) -> Result<Loaded> {
        let (source, p) = self.presentation()?;
        Ok(Loaded {
            source,
            binoid: Binoid::with_limits(p, self.limits())?,
        })
    }

    fn ideal(&self, b: &Binoid) -> Result<IdealSpec> {
        if self.ideal.is_empty() {
            return maximal_ideal(b);
        }
        words(b, &self.ideal).map(IdealSpec::from_words)
    }
}

fn words(b: &Binoid, texts: &[String]) -> Result<Vec<Word>> {
    texts
        .iter()
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| b.presentation().parse_word(t))
        .collect()
}

fn element_text(b: &Binoid, e: &Element) -> String {
    match e {
        Element::Finite(w) => w.display(b.generator_names()).to_string(),
        Element::Infinity => "inf".into(),
    }
}

fn base_report(l: &Loaded) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("input".into(), json!(l.source));
    m.insert("generators".into(), json!(l.binoid.generator_names()));
    m
}

fn emit_json(m: serde_json::Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
    s.push('\n');
    s
}

fn emit_pairs(format: Format, pairs: &[(&str, String)]) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("field,value\n");
            for (k, v) in pairs {
                let _ = writeln!(out, "{k},{}", csv_field(v));
            }
        }
        _ => {
            for (k, v) in pairs {
                let _ = writeln!(out, "{k}: {v}");
            }
        }
    }
    out
}

fn csv_field(v: &str) -> String {
    if v.contains([',', '"', '\n']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

fn dispatch(cmd: &Command) -> Result<Rendered> {
    match cmd {
        Command::Info(c) => cmd_info(c),
        Command::Nf { common, word } => cmd_nf(common, word),
        Command::Member { common, word } => cmd_member(common, word),
        Command::Hkf { common, q } => cmd_hkf(common, &q.0),
        Command::Ehk {
            common,
            estimate,
            q,
            assert_cancellative,
            assert_semipositive,
        } => {
            let opts = EhkOptions {
                assume_cancellative: *assert_cancellative,
                assume_semipositive: *assert_semipositive,
                schedule: q.as_ref().map(|q| q.0.clone()),
            };
            cmd_ehk(common, *estimate, &opts)
        }
        Command::Verify { common, with, q } => cmd_verify(common, with, &q.0),
        Command::ExportRing(c) => cmd_export_ring(c),
    }
}

fn cmd_info(c: &Common) -> Result<Rendered> {
    let l = c.load()?;
    let b = &l.binoid;
    let report = spectrum(b)?;
    let reduced = is_reduced(b, b.limits().reduced_cap)?;
    let integral = is_integral_quotient(b.system());
    let units = unit_group_order(b, b.limits().enumeration_cap)?;
    let names = |ps: &[crate::spectrum::PrimeIdeal]| -> Vec<Vec<String>> {
        ps.iter().map(|p| prime_names(b, p)).collect()
    };
    let primes = names(&report.primes);
    let minimal = names(&report.minimal_primes);
    let stdout = match c.format {
        Format::Json => {
            let mut m = base_report(&l);
            m.insert("presentation".into(), json!(b.presentation().to_string()));
            m.insert("dimension".into(), json!(report.dimension));
            m.insert("primes".into(), json!(primes));
            m.insert("minimal_primes".into(), json!(minimal));
            m.insert("reduced".into(), json!(reduced));
            m.insert("integral".into(), json!(integral));
            m.insert("unit_group_order".into(), json!(units));
            emit_json(m)
        }
        f => emit_pairs(
            f,
            &[
                ("presentation", b.presentation().to_string()),
                ("generators", b.generator_names().join(" ")),
                ("dimension", report.dimension.to_string()),
                ("primes", prime_list(&primes)),
                ("minimal_primes", prime_list(&minimal)),
                ("reduced", format!("{reduced:?}").to_lowercase()),
                ("integral", integral.to_string()),
                (
                    "unit_group_order",
                    units.map_or("unknown".into(), |u| u.to_string()),
                ),
            ],
        ),
    };
    Ok(Rendered::ok(stdout))
}

fn prime_list(ps: &[Vec<String>]) -> String {
    ps.iter()
        .map(|p| format!("{{{}}}", p.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_nf(c: &Common, word: &str) -> Result<Rendered> {
    let l = c.load()?;
    let b = &l.binoid;
    let w = b.presentation().parse_word(word)?;
    let nf = element_text(b, &b.normal_form(&w));
    let stdout = match c.format {
        Format::Json => {
            let mut m = base_report(&l);
            m.insert("word".into(), json!(word.trim()));
            m.insert("normal_form".into(), json!(nf));
            emit_json(m)
        }
        Format::Csv => emit_pairs(Format::Csv, &[("word", word.trim().into()), ("normal_form", nf)]),
        Format::Text => format!("{nf}\n"),
    };
    Ok(Rendered::ok(stdout))
}

fn cmd_member(c: &Common, word: &str) -> Result<Rendered> {
    let l = c.load()?;
    let b = &l.binoid;
    let w = b.presentation().parse_word(word)?;
    let ideal = c.ideal(b)?;
    let member = b
        .system()
        .ideal_membership(&ideal.generators, &Element::Finite(w))?;
    let stdout = match c.format {
        Format::Json => {
            let mut m = base_report(&l);
            m.insert("word".into(), json!(word.trim()));
            m.insert(
                "ideal".into(),
                json!(ideal.generators.iter().map(|g| element_text(b, g)).collect::<Vec<_>>()),
            );
            m.insert("member".into(), json!(member));
            emit_json(m)
        }
        Format::Csv => emit_pairs(Format::Csv, &[("word", word.trim().into()), ("member", member.to_string())]),
        Format::Text => format!("{member}\n"),
    };
    Ok(Rendered::ok(stdout))
}

fn cmd_hkf(c: &Common, qs: &[u64]) -> Result<Rendered> {
    let l = c.load()?;
    let b = &l.binoid;
    let ideal = c.ideal(b)?;
    let rows = hkf_table(b, &ideal, &NSetSpec::Whole, qs);
    let mut samples: Vec<HKSample> = Vec::new();
    let mut failure = None;
    for r in rows {
        match r {
            Ok(s) => samples.push(s),
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    if samples.is_empty() {
        if let Some(e) = failure {
            return Err(e);
        }
    }
    let stdout = match c.format {
        Format::Json => {
            let mut m = base_report(&l);
            m.insert(
                "hkf".into(),
                json!(samples.iter().map(|s| json!({"q": s.q, "count": s.count})).collect::<Vec<_>>()),
            );
            if let Some(e) = &failure {
                m.insert("error".into(), json!(e.to_string()));
            }
            emit_json(m)
        }
        Format::Csv => {
            let mut out = String::from("q,count\n");
            for s in &samples {
                let _ = writeln!(out, "{},{}", s.q, s.count);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for s in &samples {
                let _ = writeln!(out, "hkf({}) = {}", s.q, s.count);
            }
            out
        }
    };
    // rows computed before a failure are still printed
    let code = failure.as_ref().map_or(EXIT_OK, exit_code);
    if let Some(e) = failure {
        let mut stdout = stdout;
        if c.format == Format::Text {
            let _ = writeln!(stdout, "error: {e}");
        }
        return Ok(Rendered { stdout, code });
    }
    Ok(Rendered::ok(stdout))
}

fn ehk_json(r: &EhkResult) -> Value {
    match &r.value {
        EhkValue::Exact(v) => {
            let num = v.numer().to_i64().map_or_else(|| json!(v.numer().to_string()), |x| json!(x));
            let den = v.denom().to_i64().map_or_else(|| json!(v.denom().to_string()), |x| json!(x));
            json!({ "num": num, "den": den })
        }
        EhkValue::Estimate { value, error, partial } => {
            json!({ "estimate": value, "error": error, "partial": partial })
        }
    }
}

fn cmd_ehk(c: &Common, estimate: bool, opts: &EhkOptions) -> Result<Rendered> {
    let l = c.load()?;
    let b = &l.binoid;
    let ideal = c.ideal(b)?;
    let result = if estimate {
        let schedule = opts.schedule.clone().unwrap_or_else(|| DEFAULT_SCHEDULE.to_vec());
        ehk_estimate(b, &ideal, &schedule)?
    } else {
        ehk(b, &ideal, opts)?
    };
    let stdout = match c.format {
        Format::Json => {
            let mut m = base_report(&l);
            m.insert("dimension".into(), json!(result.dimension));
            m.insert("ehk".into(), ehk_json(&result));
            m.insert("trace".into(), serde_json::to_value(&result.trace).expect("serializable"));
            emit_json(m)
        }
        Format::Csv => emit_pairs(
            Format::Csv,
            &[("dimension", result.dimension.to_string()), ("ehk", result.value.to_string())],
        ),
        Format::Text => {
            let mut out = format!("{}\n", result.value);
            let _ = writeln!(out, "dimension: {}", result.dimension);
            for step in &result.trace {
                let _ = writeln!(out, "  {}", trace_line(step));
            }
            out
        }
    };
    Ok(Rendered::ok(stdout))
}

fn trace_line(step: &crate::structure::TraceStep) -> String {
    use crate::structure::TraceStep::*;
    let set = |v: &[String]| format!("{{{}}}", v.join(","));
    match step {
        SmashFactors { factors } => format!(
            "smash factors: {}",
            factors.iter().map(|f| set(f)).collect::<Vec<_>>().join(" ∧ ")
        ),
        UnitGroup { order } => format!("unit group order: {order}"),
        MinimalPrimes { dimension, primes } => format!(
            "minimal primes of dimension {dimension}: {}",
            primes.iter().map(|p| set(p)).collect::<Vec<_>>().join(" ")
        ),
        PrimeQuotient { prime, generators } => {
            format!("quotient by {}: generators {}", set(prime), generators.join(","))
        }
        CancellativityAssumed => "cancellativity assumed".into(),
        Torsion { order, invariants } => format!("torsion |T| = {order} (invariants {invariants:?})"),
        ToricVolume { dimension, value } => format!("toric volume in dimension {dimension}: {value}"),
        Contribution { prime, value } => format!("contribution of {}: {value}", set(prime)),
        Fallback { reason } => format!("falling back to an estimate: {reason}"),
        Regression { samples, dimension } => format!(
            "regression over q = {:?} in dimension {dimension}",
            samples.iter().map(|s| s.0).collect::<Vec<_>>()
        ),
        SmashProduct => "product over smash factors".into(),
    }
}

#[derive(Serialize)]
struct Check {
    check: &'static str,
    q: u64,
    lhs: String,
    rhs: String,
    holds: bool,
}

fn cmd_verify(c: &Common, with: &[String], qs: &[u64]) -> Result<Rendered> {
    let l = c.load()?;
    let b = &l.binoid;
    let ideal = c.ideal(b)?;
    let i = if with.is_empty() {
        ideal.clone()
    } else {
        IdealSpec::from_words(words(b, with)?)
    };
    let mut checks = Vec::new();
    for &q in qs {
        let j = frobenius_sum(&ideal, q)?;
        let id = verify_counting_identity(b, &i, &j)?;
        checks.push(Check {
            check: "counting_identity",
            q,
            lhs: format!("{} + {}", id.n_mod_j, id.intersection_mod_sum),
            rhs: format!("{} + {}", id.i_mod_sum, id.n_mod_union),
            holds: id.holds(),
        });
    }
    let components = b.presentation().components();
    if components.len() > 1 && c.ideal.is_empty() {
        let whole = hkf_table(b, &ideal, &NSetSpec::Whole, qs);
        let factors: Vec<Binoid> = components
            .iter()
            .map(|comp| Binoid::with_limits(b.presentation().restrict(comp), b.limits()))
            .collect::<Result<_>>()?;
        for (k, &q) in qs.iter().enumerate() {
            let total = whole[k].clone()?.count;
            let mut product = 1u128;
            for f in &factors {
                let m = maximal_ideal(f)?;
                product *= crate::hk::hkf(f, &m, &NSetSpec::Whole, q)?.count;
            }
            checks.push(Check {
                check: "smash_multiplicativity",
                q,
                lhs: total.to_string(),
                rhs: product.to_string(),
                holds: total == product,
            });
        }
    }
    let all = checks.iter().all(|c| c.holds);
    let stdout = match c.format {
        Format::Json => {
            let mut m = base_report(&l);
            m.insert("checks".into(), serde_json::to_value(&checks).expect("serializable"));
            m.insert("holds".into(), json!(all));
            emit_json(m)
        }
        Format::Csv => {
            let mut out = String::from("check,q,lhs,rhs,holds\n");
            for ch in &checks {
                let _ = writeln!(out, "{},{},{},{},{}", ch.check, ch.q, ch.lhs, ch.rhs, ch.holds);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for ch in &checks {
                let mark = if ch.holds { "ok" } else { "FAILED" };
                let _ = writeln!(out, "{mark} {} q={}: {} = {}", ch.check, ch.q, ch.lhs, ch.rhs);
            }
            out
        }
    };
    Ok(Rendered {
        stdout,
        code: if all { EXIT_OK } else { EXIT_REFUTED },
    })
}

/// The ideal of the binoid algebra: one binomial per congruence and one
/// monomial per `∞`-relation, in a neutral line format.
pub fn ring_export(p: &Presentation) -> String {
    let names = p.generators();
    let mono = |w: &Word| -> String {
        let parts: Vec<String> = w
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    };
    let mut out = format!("vars {}\n", names.join(","));
    for (l, r) in p.congruences() {
        let _ = writeln!(out, "binomial {} - {}", mono(l), mono(r));
    }
    for w in p.infinity_relations() {
        let _ = writeln!(out, "monomial {}", mono(w));
    }
    out
}

fn cmd_export_ring(c: &Common) -> Result<Rendered> {
    let (source, p) = c.presentation()?;
    let stdout = match c.format {
        Format::Json => {
            let mut m = serde_json::Map::new();
            m.insert("input".into(), json!(source));
            m.insert("generators".into(), json!(p.generators()));
            m.insert("ring".into(), json!(ring_export(&p)));
            emit_json(m)
        }
        _ => ring_export(&p),
    };
    Ok(Rendered::ok(stdout))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_with(std::iter::once("binoid-hk").chain(args.iter().copied()))
    }

    #[test]
    fn q_lists() {
        assert_eq!(parse_q_list("1..3,8").unwrap(), QList(vec![1, 2, 3, 8]));
        assert_eq!(parse_q_list("10").unwrap(), QList(vec![10]));
        assert!(parse_q_list("0").is_err());
        assert!(parse_q_list("3..1").is_err());
        assert!(parse_q_list("").is_err());
    }

    #[test]
    fn free_plane_csv() {
        let out = run(&["hkf", "--free", "2", "--q", "1..5", "--format", "csv"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "q,count\n1,1\n2,4\n3,9\n4,16\n5,25\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["hkf", "--free", "2", "--q", "0"]).code, EXIT_USAGE);
        assert_eq!(run(&["info", "--spec", ""]).code, EXIT_USAGE);
        assert_eq!(run(&["ehk", "--spec", "binoid x,y | 2y = inf"]).code, EXIT_HYPOTHESIS);
        assert_eq!(run(&["hkf", "--free", "2", "--ideal", "x"]).code, EXIT_REFUTED);
        assert_eq!(run(&["info", "--free", "5", "--subset-cap", "3"]).code, EXIT_CAP);
    }

    #[test]
    fn ring_lines() {
        let out = run(&["export-ring", "--spec", "binoid x,y | 3x = 3y"]);
        assert_eq!(out.stdout, "vars x,y\nbinomial x^3 - y^3\n");
        let out = run(&["export-ring", "--free", "2"]);
        assert_eq!(out.stdout, "vars x,y\n");
    }
}
