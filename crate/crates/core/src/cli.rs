//! Command-line front end: check single codes, reproduce the built-in
//! examples and table, and sweep whole code families against the oracle.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CanonicalGenerators, CodeError, CyclicCode, GENERATOR_NAMES};
use crate::complement::{self, PairJson, RevCompReport};
use crate::corpus;
use crate::oracle::{self, BruteVerdicts, GenerationLimits, DEFAULT_CAP};
use crate::reversibility::{self, ReversibilityReport};
use crate::ring::{enumerate_complement_pairs, ComplementPair, RTheta, RingError, ThetaParam};

/// Random words tested when a code is too large to enumerate.
pub const FALLBACK_SAMPLES: usize = 4096;

/// Largest length swept exhaustively.
pub const MAX_EXHAUSTIVE_LENGTH: usize = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {reason}")]
    Read { path: String, reason: String },
    #[error("malformed code JSON: {0}")]
    MalformedJson(String),
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Write(String),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Write(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Write(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Write(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "revcode", version, about = "Reversible and reversible-complement cyclic codes over Z4+vZ4")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one code given as a JSON file ("-" reads stdin).
    Check(CheckArgs),
    /// Run the built-in examples and the classification table.
    Examples(ExamplesArgs),
    /// Check every code of one length, or a random sample, against the oracle.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A complement pair as given on the command line, validated later
/// against the ring of the code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairArg {
    pub u: RTheta,
    pub t: RTheta,
}

fn parse_pair(s: &str) -> Result<PairArg, String> {
    let (u, t) = s.split_once(',').ok_or_else(|| format!("expected \"u,t\", got {s:?}"))?;
    let u: RTheta = u.trim().parse().map_err(|e: RingError| e.to_string())?;
    let t: RTheta = t.trim().parse().map_err(|e: RingError| e.to_string())?;
    Ok(PairArg { u, t })
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Complement pair "u,t" such as "1,2+v"; may be repeated.
    #[arg(long = "pair", value_parser = parse_pair)]
    pub pairs: Vec<PairArg>,
    /// Check every valid complement pair of the ring.
    #[arg(long, conflicts_with = "pairs")]
    pub all_pairs: bool,
}

impl PairArgs {
    fn resolve(&self, theta: ThetaParam) -> Result<Vec<ComplementPair>, CliError> {
        if self.all_pairs {
            return Ok(enumerate_complement_pairs(theta));
        }
        Ok(self.pairs.iter().map(|p| ComplementPair::new(theta, p.u, p.t)).collect::<Result<_, _>>()?)
    }
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Largest number of words enumerated by the oracle; larger codes are
    /// sampled and reported as not proven.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Code description JSON: {"n": 4, "theta": [0, 2], "g": {"11": "z^3+z^2+z+1", ...}}.
    pub file: PathBuf,
    /// Reinterpret the generators over another ring.
    #[arg(long)]
    pub theta: Option<ThetaParam>,
    /// Reinterpret the generators at another length.
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub pairs: PairArgs,
    /// Cross-check the verdicts by enumerating the code.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(flatten)]
    pub oracle_args: OracleArgs,
}

#[derive(Debug, Args)]
pub struct ExamplesArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub oracle_args: OracleArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Code length.
    #[arg(long)]
    pub n: usize,
    /// Rings to sweep; all eight when omitted. May be repeated.
    #[arg(long)]
    pub theta: Vec<ThetaParam>,
    /// Check this many random codes per ring instead of all codes.
    #[arg(long)]
    pub sample: Option<usize>,
    /// Largest degree of the offsets g13, g14, g23, g24 in exhaustive mode.
    #[arg(long)]
    pub max_offset_degree: Option<usize>,
    #[command(flatten)]
    pub pairs: PairArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[command(flatten)]
    pub oracle_args: OracleArgs,
}

/// Oracle verdicts next to the checker's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub reversible: bool,
    pub rev_comp: Vec<bool>,
    /// `false` when the code was sampled, so a `true` is not proven.
    pub exhaustive: bool,
    pub agrees: bool,
}

impl OracleReport {
    fn new(v: BruteVerdicts, reversible: bool, rc: &[RevCompReport]) -> Self {
        let agrees = v.reversible == reversible && v.rev_comp.iter().zip(rc).all(|(&b, r)| b == r.verdict);
        OracleReport { reversible: v.reversible, rev_comp: v.rev_comp, exhaustive: v.exhaustive, agrees }
    }

    fn mode(&self) -> &'static str {
        if self.exhaustive {
            "exhaustive"
        } else {
            "sampled"
        }
    }
}

/// Output of `check`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOutput {
    pub code: CanonicalGenerators,
    pub report: ReversibilityReport,
    /// Exact reversibility, through the canonical presentation if needed.
    pub reversible: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rev_comp: Vec<RevCompReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

impl CheckOutput {
    pub fn verdict(&self) -> bool {
        self.reversible && self.rev_comp.iter().all(|r| r.verdict)
    }
}

/// One CSV line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRecord {
    pub example_id: String,
    pub theta: String,
    pub n: usize,
    pub reversible: bool,
    pub pair_u: Option<String>,
    pub pair_t: Option<String>,
    pub rev_comp: Option<bool>,
    pub oracle_agrees: Option<bool>,
    pub oracle_mode: Option<String>,
}

/// One line of the `examples` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleRecord {
    pub row: usize,
    pub example_id: String,
    pub theta: ThetaParam,
    pub n: usize,
    pub reversible: bool,
    pub expected_reversible: bool,
    pub pair: PairJson,
    pub rev_comp: bool,
    pub expected_rev_comp: bool,
    pub oracle_agrees: bool,
}

impl ExampleRecord {
    pub fn matches_table(&self) -> bool {
        self.reversible == self.expected_reversible && self.rev_comp == self.expected_rev_comp
    }
}

/// One code of a sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub id: String,
    pub code: CanonicalGenerators,
    pub reversible: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rev_comp: Vec<RevCompReport>,
    pub oracle: OracleReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub theta: ThetaParam,
    pub n: usize,
    pub codes: usize,
    pub reversible: usize,
    pub agreeing: usize,
    pub sampled: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub codes: Vec<SweepRecord>,
    pub summary: Vec<SweepSummary>,
}

/// Runs a parsed command, writing results to `out` and notes to `err`.
/// Returns the process exit code for a completed run.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Check(a) => cmd_check(&a, out),
        Command::Examples(a) => cmd_examples(&a, out, err),
        Command::Sweep(a) => cmd_sweep(&a, out, err),
    }
}

fn exit_code(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let read_err = |e: io::Error| CliError::Read { path: path.display().to_string(), reason: e.to_string() };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(read_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(read_err)
    }
}

/// Parses a code description, reporting malformed JSON and invalid codes
/// with different messages.
pub fn parse_code(text: &str) -> Result<CanonicalGenerators, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::MalformedJson(e.to_string()))?;
    serde_json::from_value(value).map_err(|e| CliError::InvalidCode(e.to_string()))
}

fn reinterpret(g: CanonicalGenerators, n: Option<usize>, theta: Option<ThetaParam>) -> Result<CanonicalGenerators, CliError> {
    if n.is_none() && theta.is_none() {
        return Ok(g);
    }
    let named = GENERATOR_NAMES.iter().map(|&k| (k, g.get(k).clone()));
    Ok(CanonicalGenerators::from_named(n.unwrap_or(g.n()), theta.unwrap_or(g.theta()), named)?)
}

fn pair_strings(r: &RevCompReport) -> (Option<String>, Option<String>) {
    (Some(r.pair.u.to_string()), Some(r.pair.t.to_string()))
}

/// `check`: decides one code.
pub fn check_code(gens: CanonicalGenerators, pairs: &PairArgs, oracle: Option<&OracleArgs>) -> Result<CheckOutput, CliError> {
    let pairs = pairs.resolve(gens.theta())?;
    let c = CyclicCode::build(gens.clone())?;
    let report = reversibility::check_reversibility(&c);
    let reversible = reversibility::is_reversible(&c);
    let rev_comp = complement::check_pairs(&c, &pairs);
    let oracle = oracle.map(|o| {
        let v = oracle::oracle_all(&c, &pairs, o.cap, FALLBACK_SAMPLES, o.seed);
        OracleReport::new(v, reversible, &rev_comp)
    });
    Ok(CheckOutput { code: gens, report, reversible, rev_comp, oracle })
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let gens = reinterpret(parse_code(&read_input(&a.file)?)?, a.n, a.theta)?;
    let result = check_code(gens, &a.pairs, a.oracle.then_some(&a.oracle_args))?;
    match a.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &result)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let id = a.file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "stdin".into());
            let base = CsvRecord {
                example_id: id,
                theta: result.code.theta().to_string(),
                n: result.code.n(),
                reversible: result.reversible,
                pair_u: None,
                pair_t: None,
                rev_comp: None,
                oracle_agrees: result.oracle.as_ref().map(|o| o.agrees),
                oracle_mode: result.oracle.as_ref().map(|o| o.mode().to_string()),
            };
            let records: Vec<CsvRecord> = if result.rev_comp.is_empty() {
                vec![base]
            } else {
                result
                    .rev_comp
                    .iter()
                    .map(|r| {
                        let (pair_u, pair_t) = pair_strings(r);
                        CsvRecord { pair_u, pair_t, rev_comp: Some(r.verdict), ..base.clone() }
                    })
                    .collect()
            };
            write_csv(out, &records)?;
        }
    }
    Ok(exit_code(result.verdict()))
}

fn write_csv<T: Serialize>(out: &mut dyn Write, records: &[T]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Every row of the built-in table, one record per complement pair.
pub fn example_records(o: &OracleArgs) -> Vec<ExampleRecord> {
    let examples = corpus::examples();
    let jobs: Vec<(corpus::TableRow, ComplementPair)> = corpus::table()
        .into_iter()
        .flat_map(|row| {
            let ex = examples.iter().find(|e| e.id == row.example).expect("table names a built-in example");
            let pairs = row.resolve(ex.gens.theta()).expect("table pairs are valid");
            pairs.into_iter().map(move |cp| (row, cp))
        })
        .collect();
    let codes: Vec<(&str, CyclicCode)> = examples
        .iter()
        .map(|e| (e.id, CyclicCode::build(e.gens.clone()).expect("built-in code")))
        .collect();
    jobs.par_iter()
        .map(|(row, cp)| {
            let c = &codes.iter().find(|(id, _)| *id == row.example).expect("built").1;
            let r = complement::check_rev_comp(c, cp);
            let v = oracle::oracle_all(c, std::slice::from_ref(cp), o.cap, FALLBACK_SAMPLES, o.seed);
            ExampleRecord {
                row: row.row,
                example_id: row.example.to_string(),
                theta: c.theta(),
                n: c.n(),
                reversible: r.reversible,
                expected_reversible: row.expected_reversible,
                pair: r.pair,
                rev_comp: r.verdict,
                expected_rev_comp: row.expected_rev_comp,
                oracle_agrees: v.reversible == r.reversible && v.rev_comp[0] == r.verdict,
            }
        })
        .collect()
}

fn cmd_examples(a: &ExamplesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let records = example_records(&a.oracle_args);
    match a.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &records)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let rows: Vec<CsvRecord> = records
                .iter()
                .map(|r| CsvRecord {
                    example_id: r.example_id.clone(),
                    theta: r.theta.to_string(),
                    n: r.n,
                    reversible: r.reversible,
                    pair_u: Some(r.pair.u.to_string()),
                    pair_t: Some(r.pair.t.to_string()),
                    rev_comp: Some(r.rev_comp),
                    oracle_agrees: Some(r.oracle_agrees),
                    oracle_mode: Some("exhaustive".into()),
                })
                .collect();
            write_csv(out, &rows)?;
        }
    }
    let rows = corpus::table().len();
    let matching = (1..=rows)
        .filter(|&i| records.iter().filter(|r| r.row == i).all(ExampleRecord::matches_table))
        .count();
    writeln!(err, "table rows matching the reference verdicts: {matching}/{rows}")?;
    Ok(exit_code(records.iter().all(|r| r.oracle_agrees)))
}

/// The codes and oracle comparisons of a sweep, in generation order.
pub fn sweep_records(a: &SweepArgs) -> Result<SweepOutput, CliError> {
    if a.n == 0 {
        return Err(CodeError::ZeroLength.into());
    }
    if a.sample.is_none() && a.n > MAX_EXHAUSTIVE_LENGTH {
        return Err(CliError::Usage(format!(
            "exhaustive sweeps need n <= {MAX_EXHAUSTIVE_LENGTH}; use --sample k for n = {}",
            a.n
        )));
    }
    let thetas = if a.theta.is_empty() { ThetaParam::all().collect() } else { a.theta.clone() };
    let mut codes = Vec::new();
    let mut summary = Vec::new();
    for theta in thetas {
        let pairs = a.pairs.resolve(theta)?;
        let gens = match a.sample {
            Some(k) => oracle::sample_codes(a.n, theta, k, a.oracle_args.seed, None),
            None => oracle::generate_all_codes(a.n, theta, GenerationLimits { max_offset_degree: a.max_offset_degree }),
        };
        let records: Vec<SweepRecord> = gens
            .into_par_iter()
            .enumerate()
            .map(|(i, g)| {
                let c = CyclicCode::build(g.clone()).expect("generated codes are valid");
                let reversible = reversibility::is_reversible(&c);
                let rev_comp = complement::check_pairs(&c, &pairs);
                let v = oracle::oracle_all(&c, &pairs, a.oracle_args.cap, FALLBACK_SAMPLES, a.oracle_args.seed);
                let oracle = OracleReport::new(v, reversible, &rev_comp);
                SweepRecord { id: format!("{theta}#{i}"), code: g, reversible, rev_comp, oracle }
            })
            .collect();
        summary.push(SweepSummary {
            theta,
            n: a.n,
            codes: records.len(),
            reversible: records.iter().filter(|r| r.reversible).count(),
            agreeing: records.iter().filter(|r| r.oracle.agrees).count(),
            sampled: records.iter().filter(|r| !r.oracle.exhaustive).count(),
        });
        codes.extend(records);
    }
    Ok(SweepOutput { codes, summary })
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let result = sweep_records(a)?;
    match a.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &result)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for r in &result.codes {
                let base = CsvRecord {
                    example_id: r.id.clone(),
                    theta: r.code.theta().to_string(),
                    n: r.code.n(),
                    reversible: r.reversible,
                    pair_u: None,
                    pair_t: None,
                    rev_comp: None,
                    oracle_agrees: Some(r.oracle.agrees),
                    oracle_mode: Some(r.oracle.mode().to_string()),
                };
                if r.rev_comp.is_empty() {
                    rows.push(base);
                } else {
                    rows.extend(r.rev_comp.iter().map(|rc| {
                        let (pair_u, pair_t) = pair_strings(rc);
                        CsvRecord { pair_u, pair_t, rev_comp: Some(rc.verdict), ..base.clone() }
                    }));
                }
            }
            write_csv(out, &rows)?;
        }
    }
    for s in &result.summary {
        writeln!(
            err,
            "theta = {}, n = {}: {} codes, {} reversible, {} agree with the oracle, {} sampled",
            s.theta, s.n, s.codes, s.reversible, s.agreeing, s.sampled
        )?;
    }
    Ok(exit_code(result.codes.iter().all(|r| r.oracle.agrees)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("revcode").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn pair_syntax() {
        assert_eq!(parse_pair("1, 2+v").unwrap(), PairArg { u: RTheta::ONE, t: RTheta::new(2, 1) });
        assert!(parse_pair("1").is_err());
        assert!(parse_pair("1,w").is_err());
    }

    #[test]
    fn flags_parse() {
        let cli = parse(&["sweep", "--n", "2", "--theta", "2*v", "--theta", "1", "--all-pairs", "--seed", "7"]);
        let Command::Sweep(a) = cli.command else { panic!("sweep expected") };
        assert_eq!(a.theta.len(), 2);
        assert!(a.pairs.all_pairs);
        assert_eq!(a.oracle_args.seed, 7);
        assert_eq!(a.oracle_args.cap, DEFAULT_CAP);
        assert!(Cli::try_parse_from(["revcode", "check", "x.json", "--pair", "1,0", "--all-pairs"]).is_err());
        assert!(Cli::try_parse_from(["revcode", "sweep", "--n", "2", "--theta", "2"]).is_err());
    }

    #[test]
    fn code_json_errors_are_distinct() {
        assert!(matches!(parse_code("{\"n\": 2,"), Err(CliError::MalformedJson(_))));
        let chain = parse_code(r#"{"n": 2, "theta": [2, 0], "g": {"11": "1"}}"#).unwrap_err();
        assert!(chain.to_string().contains("non-chain θ required"), "{chain}");
        let bad = parse_code(r#"{"n": 2, "theta": [0, 0], "g": {"11": "z+1", "22": "z"}}"#).unwrap_err();
        assert!(bad.to_string().contains("constraint violated"), "{bad}");
    }

    #[test]
    fn sweep_n2_agrees() {
        let cli = parse(&["sweep", "--n", "2", "--theta", "0", "--all-pairs"]);
        let Command::Sweep(a) = cli.command else { panic!("sweep expected") };
        let s = sweep_records(&a).unwrap();
        assert_eq!(s.summary[0].agreeing, s.summary[0].codes);
        assert!(s.codes.iter().all(|r| r.oracle.exhaustive));
    }

    #[test]
    fn long_exhaustive_sweep_is_refused() {
        let cli = parse(&["sweep", "--n", "5"]);
        let Command::Sweep(a) = cli.command else { panic!("sweep expected") };
        assert!(matches!(sweep_records(&a), Err(CliError::Usage(_))));
    }
}
