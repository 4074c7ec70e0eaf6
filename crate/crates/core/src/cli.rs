//! Command-line front end. [`run`] takes the argument vector and output
//! streams and returns the process exit code: 0 ran, 1 usage error,
//! 2 internal failure.

use std::fs::File;
use std::io::{self, Write};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::claims::{claim_ids, run_all_claims, run_claim, Budget, ClaimResult};
use crate::derived::{density_table, fib_word_ab, q_word, y_word};
use crate::error::Error;
use crate::golden::{beatty_phi2_u64, beatty_phi_u64};
use crate::mechanical::{density_report, mechanical_prefix};
use crate::morphism::Morphism;
use crate::words::Word;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WordKind {
    Morphic,
    Mechanical,
    Y,
    Q,
    Fibab,
}

#[derive(Debug, Parser)]
#[command(name = "fibword", version, about = "Fibonacci word generator and claims verifier")]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a word: morphic/mechanical prefix of length N, or y_N, q_N, F_N.
    Gen {
        #[arg(value_enum)]
        kind: WordKind,
        n: u64,
    },
    /// Symbol counts, densities and deviation for the length-N prefix.
    Density {
        n: u64,
        #[arg(long, default_value_t = 6)]
        places: u32,
    },
    /// Letter densities of q_m and y_m for m = 3..3+rows-1.
    Table {
        #[arg(long, default_value_t = 11)]
        rows: usize,
    },
    /// Rows n, floor(n phi), floor(n phi^2) for n = 1..N.
    Beatty { n: u64 },
    /// Evaluate registered claims.
    Claims(ClaimsArgs),
}

#[derive(Debug, Args)]
struct ClaimsArgs {
    /// Run every claim (default when no --id is given).
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// Run only these claim ids.
    #[arg(long)]
    id: Vec<String>,
    /// List known claim ids and exit.
    #[arg(long)]
    list: bool,
    /// Largest n (or prefix length) for the Beatty, density and factor sweeps [default: 100000]
    #[arg(long)]
    sweep: Option<u64>,
    /// Prefix length for the complexity and algebra identity checks [default: 10000]
    #[arg(long)]
    prefix: Option<usize>,
    /// Largest factor length for the complexity check [default: 60]
    #[arg(long)]
    complexity_max: Option<usize>,
    /// Largest m for the density table check [default: 13]
    #[arg(long)]
    table_m_max: Option<usize>,
    /// Largest word index for the length and letter count checks [default: 30]
    #[arg(long)]
    word_index_max: Option<usize>,
    /// Largest alpha for the algebra identity [default: 10]
    #[arg(long)]
    alpha_max: Option<u32>,
    /// Largest k for the Pow checks [default: 6]
    #[arg(long)]
    pow_k_max: Option<usize>,
    /// Largest k for the telescoping check [default: 6]
    #[arg(long)]
    series_k_max: Option<u32>,
    /// Largest n for the doubling identities [default: 50]
    #[arg(long)]
    doubling_n_max: Option<u64>,
    /// Largest n for the Binet check [default: 200]
    #[arg(long)]
    binet_n_max: Option<u32>,
    /// Number of generating function coefficients [default: 200]
    #[arg(long)]
    genfunc_n: Option<usize>,
    /// Largest integer for the Zeckendorf round trip [default: 100000]
    #[arg(long)]
    zeckendorf_max: Option<u64>,
}

impl ClaimsArgs {
    fn budget(&self) -> Budget {
        let d = Budget::default();
        Budget {
            sweep: self.sweep.unwrap_or(d.sweep),
            prefix: self.prefix.unwrap_or(d.prefix),
            complexity_max: self.complexity_max.unwrap_or(d.complexity_max),
            table_m_max: self.table_m_max.unwrap_or(d.table_m_max),
            word_index_max: self.word_index_max.unwrap_or(d.word_index_max),
            alpha_max: self.alpha_max.unwrap_or(d.alpha_max),
            pow_k_max: self.pow_k_max.unwrap_or(d.pow_k_max),
            series_k_max: self.series_k_max.unwrap_or(d.series_k_max),
            doubling_n_max: self.doubling_n_max.unwrap_or(d.doubling_n_max),
            binet_n_max: self.binet_n_max.unwrap_or(d.binet_n_max),
            genfunc_n: self.genfunc_n.unwrap_or(d.genfunc_n),
            zeckendorf_max: self.zeckendorf_max.unwrap_or(d.zeckendorf_max),
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = catch_unwind(AssertUnwindSafe(|| render(&cli)))
        .unwrap_or_else(|_| Err(Failure::Internal("internal panic".into())));
    let bytes = match result {
        Ok(bytes) => bytes,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 1;
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            return 2;
        }
    };
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&bytes)),
        None => stdout.write_all(&bytes).and_then(|_| stdout.flush()),
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "internal error: {e}");
            2
        }
    }
}

fn render(cli: &Cli) -> Outcome<Vec<u8>> {
    let f = cli.format;
    match &cli.command {
        Command::Gen { kind, n } => cmd_gen(*kind, *n, f),
        Command::Density { n, places } => cmd_density(*n, *places, f),
        Command::Table { rows } => cmd_table(*rows, f),
        Command::Beatty { n } => cmd_beatty(*n, f),
        Command::Claims(args) => cmd_claims(args, f),
    }
}

fn usage<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Usage(msg.into()))
}

fn to_usize(n: u64) -> Outcome<usize> {
    usize::try_from(n).or_else(|_| usage(format!("{n} is too large")))
}

fn json_doc(mut body: Value) -> Outcome<Vec<u8>> {
    let obj = body.as_object_mut().expect("object body");
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    let mut out = serde_json::to_vec_pretty(&body)?;
    out.push(b'\n');
    Ok(out)
}

fn csv_doc(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Outcome<Vec<u8>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    w.into_inner()
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn kind_name(kind: WordKind) -> &'static str {
    match kind {
        WordKind::Morphic => "morphic",
        WordKind::Mechanical => "mechanical",
        WordKind::Y => "y",
        WordKind::Q => "q",
        WordKind::Fibab => "fibab",
    }
}

fn generate(kind: WordKind, n: u64) -> Outcome<Word> {
    let i = to_usize(n)?;
    Ok(match kind {
        WordKind::Morphic => Morphism::fibonacci().fixed_point_prefix('0', i)?,
        WordKind::Mechanical => mechanical_prefix(i)?,
        WordKind::Y => y_word(i),
        WordKind::Q => q_word(i)?,
        WordKind::Fibab => fib_word_ab(i)?,
    })
}

fn cmd_gen(kind: WordKind, n: u64, f: OutputFormat) -> Outcome<Vec<u8>> {
    let too_large = match kind {
        WordKind::Morphic | WordKind::Mechanical => n > 100_000_000,
        WordKind::Y => n > 36,
        WordKind::Q | WordKind::Fibab => n > 37,
    };
    if too_large {
        return usage(format!("index {n} too large for {}", kind_name(kind)));
    }
    let w = generate(kind, n)?.to_string();
    match f {
        OutputFormat::Text => Ok(format!("{w}\n").into_bytes()),
        OutputFormat::Csv => csv_doc(
            &["kind", "n", "length", "word"],
            [vec![kind_name(kind).into(), n.to_string(), w.chars().count().to_string(), w]],
        ),
        OutputFormat::Json => json_doc(json!({
            "kind": kind_name(kind),
            "n": n,
            "length": w.chars().count(),
            "word": w,
        })),
    }
}

fn cmd_density(n: u64, places: u32, f: OutputFormat) -> Outcome<Vec<u8>> {
    if n == 0 {
        return usage("density needs n >= 1");
    }
    if places > 1000 {
        return usage("places must be <= 1000");
    }
    let r = density_report(n, places)?;
    let below_one = r.deviation1.abs() < crate::golden::Surd::one();
    let fields: Vec<(&str, String)> = vec![
        ("n", r.n.to_string()),
        ("count0", r.count0.to_string()),
        ("count1", r.count1.to_string()),
        ("density0", r.density0().to_string()),
        ("density1", r.density1().to_string()),
        ("density0_decimal", r.density0_decimal.clone()),
        ("density1_decimal", r.density1_decimal.clone()),
        ("deviation1", r.deviation1.to_string()),
        ("deviation1_decimal", r.deviation1_decimal.clone()),
        ("deviation_below_one", below_one.to_string()),
    ];
    match f {
        OutputFormat::Text => {
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            Ok(fields
                .iter()
                .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                .collect::<String>()
                .into_bytes())
        }
        OutputFormat::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            csv_doc(&header, [fields.iter().map(|(_, v)| v.clone()).collect()])
        }
        OutputFormat::Json => json_doc(json!({
            "n": r.n,
            "count0": r.count0,
            "count1": r.count1,
            "density0": r.density0().to_string(),
            "density1": r.density1().to_string(),
            "density0_decimal": r.density0_decimal,
            "density1_decimal": r.density1_decimal,
            "deviation1": r.deviation1.to_string(),
            "deviation1_decimal": r.deviation1_decimal,
            "deviation_below_one": below_one,
            "places": places,
        })),
    }
}

const TABLE_HEADER: [&str; 5] = ["m", "dens_a_q", "dens_b_q", "dens_a_y", "dens_b_y"];

fn cmd_table(rows: usize, f: OutputFormat) -> Outcome<Vec<u8>> {
    if rows == 0 || rows > 200 {
        return usage("rows must be in 1..=200");
    }
    let table = density_table(rows + 2)?;
    let cells = table.iter().map(|r| {
        let mut v = vec![r.m.to_string()];
        v.extend(r.cells().iter().map(|c| c.to_string()));
        v
    });
    match f {
        OutputFormat::Text => {
            let mut s = format!(
                "{:>3}  {:>8}  {:>8}  {:>8}  {:>8}\n",
                TABLE_HEADER[0], TABLE_HEADER[1], TABLE_HEADER[2], TABLE_HEADER[3], TABLE_HEADER[4]
            );
            for c in cells {
                s.push_str(&format!(
                    "{:>3}  {:>8}  {:>8}  {:>8}  {:>8}\n",
                    c[0], c[1], c[2], c[3], c[4]
                ));
            }
            Ok(s.into_bytes())
        }
        OutputFormat::Csv => csv_doc(&TABLE_HEADER, cells),
        OutputFormat::Json => json_doc(json!({ "rows": table })),
    }
}

fn cmd_beatty(n: u64, f: OutputFormat) -> Outcome<Vec<u8>> {
    if n == 0 || n > 10_000_000 {
        return usage("beatty needs 1 <= n <= 10000000");
    }
    let rows = (1..=n)
        .map(|i| Ok((i, beatty_phi_u64(i)?, beatty_phi2_u64(i)?)))
        .collect::<Outcome<Vec<_>>>()?;
    match f {
        OutputFormat::Text => {
            let mut s = String::from("n f1 f2\n");
            for (i, a, b) in rows {
                s.push_str(&format!("{i} {a} {b}\n"));
            }
            Ok(s.into_bytes())
        }
        OutputFormat::Csv => csv_doc(
            &["n", "f1", "f2"],
            rows.into_iter()
                .map(|(i, a, b)| vec![i.to_string(), a.to_string(), b.to_string()]),
        ),
        OutputFormat::Json => json_doc(json!({
            "rows": rows
                .into_iter()
                .map(|(i, a, b)| json!({ "n": i, "f1": a, "f2": b }))
                .collect::<Vec<_>>(),
        })),
    }
}

fn cmd_claims(args: &ClaimsArgs, f: OutputFormat) -> Outcome<Vec<u8>> {
    let known = claim_ids();
    if args.list {
        let mut s = String::new();
        for id in &known {
            s.push_str(id);
            s.push('\n');
        }
        return Ok(s.into_bytes());
    }
    if let Some(bad) = args.id.iter().find(|id| !known.contains(&id.as_str())) {
        return usage(format!("unknown claim id {bad:?}; known ids: {}", known.join(", ")));
    }
    let budget = args.budget();
    budget.validate()?;
    let results: Vec<ClaimResult> = if args.id.is_empty() {
        run_all_claims(&budget).map_err(|e| Failure::Internal(e.to_string()))?
    } else {
        args.id
            .iter()
            .map(|id| run_claim(id, &budget).map_err(|e| Failure::Internal(e.to_string())))
            .collect::<Outcome<_>>()?
    };
    match f {
        OutputFormat::Text => {
            let mut s = String::new();
            for r in &results {
                s.push_str(&format!("{:<8}  {}\n", r.status.as_str(), r.id));
                s.push_str(&format!("          {}\n", r.location));
                s.push_str(&format!("          {}\n", r.witness));
            }
            let refuted = results.iter().filter(|r| !r.is_verified()).count();
            s.push_str(&format!(
                "{} claims: {} verified, {refuted} refuted\n",
                results.len(),
                results.len() - refuted
            ));
            Ok(s.into_bytes())
        }
        OutputFormat::Csv => csv_doc(
            &["id", "location", "status", "witness", "payload"],
            results.iter().map(|r| {
                vec![
                    r.id.clone(),
                    r.location.clone(),
                    r.status.as_str().to_string(),
                    r.witness.clone(),
                    r.payload.to_string(),
                ]
            }),
        ),
        OutputFormat::Json => json_doc(json!({ "claims": results })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fibword").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_examples() {
        assert_eq!(run_str(&["gen", "mechanical", "13"]).1, "0100101001001\n");
        assert_eq!(run_str(&["gen", "morphic", "13"]).1, "0100101001001\n");
        assert_eq!(run_str(&["gen", "q", "1"]).1, "aabb\n");
        assert_eq!(run_str(&["gen", "fibab", "5"]).1, "abaababa\n");
        assert_eq!(run_str(&["gen", "y", "0"]).1, "a\n");
        assert_eq!(run_str(&["gen", "mechanical", "0"]).0, 1);
        assert_eq!(run_str(&["gen", "q", "0"]).0, 1);
        assert_eq!(run_str(&["gen", "y", "1000"]).0, 1);
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_str(&[]).0, 1);
        assert_eq!(run_str(&["gen", "nope", "3"]).0, 1);
        assert_eq!(run_str(&["density", "-3"]).0, 1);
        assert_eq!(run_str(&["density", "0"]).0, 1);
        assert_eq!(run_str(&["table", "--rows", "0"]).0, 1);
        assert_eq!(run_str(&["beatty", "0"]).0, 1);
        assert_eq!(run_str(&["--format", "xml", "beatty", "3"]).0, 1);
        assert_eq!(run_str(&["claims", "--id", "nope"]).0, 1);
        assert_eq!(run_str(&["claims", "--sweep", "0"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn density_text() {
        let (code, out, _) = run_str(&["density", "13"]);
        assert_eq!(code, 0);
        let fields: Vec<Vec<&str>> = out.lines().map(|l| l.split_whitespace().collect()).collect();
        assert!(fields.contains(&vec!["count1", "5"]), "{out}");
        assert!(fields.contains(&vec!["density1_decimal", "0.384615"]));
        assert!(fields.contains(&vec!["deviation_below_one", "true"]));
    }

    #[test]
    fn beatty_csv() {
        let (code, out, _) = run_str(&["--format", "csv", "beatty", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,f1,f2\n1,1,2\n2,3,5\n3,4,7\n4,6,10\n");
    }

    #[test]
    fn table_first_row() {
        let (_, out, _) = run_str(&["table", "--rows", "1", "--format", "csv"]);
        assert_eq!(out, "m,dens_a_q,dens_b_q,dens_a_y,dens_b_y\n3,0.571429,0.428571,0.600000,0.400000\n");
        let (_, out, _) = run_str(&["table", "--rows", "1", "--format", "json"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["rows"][0]["dens_a_q"], "0.571429");
        assert_eq!(v["rows"][0]["m"], 3);
    }

    #[test]
    fn claims_single() {
        let (code, out, _) = run_str(&["--format", "json", "claims", "--id", "pow-invariance"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["claims"][0]["status"], "refuted");
        assert_eq!(v["claims"][0]["payload"]["k_left"], 2);
        assert_eq!(v["claims"][0]["payload"]["k_right"], 3);
    }
}
