//! Command-line front end: prove single construction files and run the
//! benchmark corpus.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use geoprove_core::dsl::parse_construction;
use geoprove_core::geomodel::ProofMode;
use geoprove_core::prover::{prove, ProverConfig, ProverResult, Verdict};

#[derive(Parser)]
#[command(name = "geoprove", version, about = "Automated prover for plane geometry statements")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the statement in a single .geo file.
    Prove(ProveArgs),
    /// Run a corpus directory against its expected-verdict manifest.
    Bench(BenchArgs),
}

#[derive(clap::Args)]
struct BudgetArgs {
    /// Per-proof wall-clock budget in seconds.
    #[arg(long, default_value_t = 60)]
    timeout: u64,
    /// Cap on S-pair reductions per basis computation.
    #[arg(long)]
    max_pairs: Option<u64>,
    /// Also pin the second free point to the x-axis.
    #[arg(long)]
    fix_second_point: bool,
}

#[derive(clap::Args)]
struct ProveArgs {
    /// Path to the .geo construction file.
    path: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Print non-degeneracy conditions even for a plain Prove file.
    #[arg(long)]
    details: bool,
    /// Print the hypothesis/elimination log and timing.
    #[arg(long)]
    debug: bool,
}

#[derive(clap::Args)]
struct BenchArgs {
    /// Directory of .geo files plus a `manifest` of expected verdicts.
    corpus: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Machine table format.
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Machine table destination; defaults to bench.tsv / bench.json.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

fn budget_config(b: &BudgetArgs, mode: ProofMode) -> ProverConfig {
    let defaults = ProverConfig::default();
    ProverConfig {
        max_pair_reductions: b.max_pairs.unwrap_or(defaults.max_pair_reductions),
        timeout: Some(Duration::from_secs(b.timeout)),
        fix_second_point: b.fix_second_point,
        mode,
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Unknown => "undefined",
    }
}

fn render_details(r: &ProverResult) -> String {
    match r.verdict {
        Verdict::True if r.ndg.is_empty() => "{true}".into(),
        Verdict::True => {
            let conds: Vec<String> = r.ndg.iter().map(|n| format!("\"{n}\"")).collect();
            format!("{{true, {{{}}}}}", conds.join(", "))
        }
        Verdict::False => "{false}".into(),
        Verdict::Unknown => "undefined".into(),
    }
}

/// Full prove-one-file flow; returns the process exit status.
fn cmd_prove(args: &ProveArgs) -> Result<i32> {
    let src = std::fs::read_to_string(&args.path)
        .with_context(|| format!("reading {}", args.path.display()))?;
    let parsed = parse_construction(&src)
        .map_err(|e| anyhow!("{}: {e}", args.path.display()))?;
    let config = budget_config(&args.budget, parsed.mode);
    let result = prove(&parsed.construction, &parsed.statement, &config)?;
    if args.debug {
        for line in &result.log {
            eprintln!("{line}");
        }
        eprintln!("Benchmarking: {} ms", result.elapsed_ms);
    }
    let want_details = args.details || parsed.mode == ProofMode::ProveDetails;
    if result.verdict == Verdict::Unknown {
        println!("undefined");
        return Ok(2);
    }
    if want_details {
        println!("{}", render_details(&result));
    } else {
        println!("{}", verdict_word(result.verdict));
    }
    Ok(0)
}

#[derive(Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutcomeClass {
    Correct,
    Incorrect,
    Inconclusive,
    Timeout,
}

impl OutcomeClass {
    fn word(self) -> &'static str {
        match self {
            OutcomeClass::Correct => "correct",
            OutcomeClass::Incorrect => "incorrect",
            OutcomeClass::Inconclusive => "inconclusive",
            OutcomeClass::Timeout => "timeout",
        }
    }
}

#[derive(Clone, Serialize)]
pub struct BenchRecord {
    pub name: String,
    pub expected: String,
    pub obtained: String,
    pub class: OutcomeClass,
    pub ms: u128,
}

fn classify(expected: Verdict, obtained: Verdict, ms: u128, timeout_s: u64) -> OutcomeClass {
    match obtained {
        Verdict::Unknown => {
            if ms >= u128::from(timeout_s) * 1000 {
                OutcomeClass::Timeout
            } else {
                OutcomeClass::Inconclusive
            }
        }
        v if v == expected => OutcomeClass::Correct,
        _ => OutcomeClass::Incorrect,
    }
}

/// Expected verdicts, one `name t|f` line per test; `#` starts a comment.
fn read_manifest(path: &Path) -> Result<BTreeMap<String, Verdict>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let mut out = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(name), Some(flag), None) = (it.next(), it.next(), it.next()) else {
            bail!("{}:{}: expected `name t|f`", path.display(), no + 1);
        };
        let verdict = match flag {
            "t" => Verdict::True,
            "f" => Verdict::False,
            other => bail!("{}:{}: bad verdict `{other}`", path.display(), no + 1),
        };
        out.insert(name.to_string(), verdict);
    }
    Ok(out)
}

fn run_one(path: &Path, budget: &BudgetArgs, expected: Verdict) -> BenchRecord {
    let name = path.file_stem().unwrap().to_string_lossy().into_owned();
    let src = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("warning: {}: {e}", path.display());
            return BenchRecord {
                name,
                expected: verdict_word(expected).into(),
                obtained: "undefined".into(),
                class: OutcomeClass::Inconclusive,
                ms: 0,
            };
        }
    };
    let result = parse_construction(&src)
        .map_err(|e| e.to_string())
        .and_then(|parsed| {
            let config = budget_config(budget, parsed.mode);
            prove(&parsed.construction, &parsed.statement, &config).map_err(|e| e.to_string())
        });
    match result {
        Ok(r) => BenchRecord {
            name,
            expected: verdict_word(expected).into(),
            obtained: verdict_word(r.verdict).into(),
            class: classify(expected, r.verdict, r.elapsed_ms, budget.timeout),
            ms: r.elapsed_ms,
        },
        Err(e) => {
            eprintln!("warning: {}: {e}", path.display());
            BenchRecord {
                name,
                expected: verdict_word(expected).into(),
                obtained: "undefined".into(),
                class: OutcomeClass::Inconclusive,
                ms: 0,
            }
        }
    }
}

fn render_tsv(records: &[BenchRecord]) -> String {
    let mut out = String::from("name\texpected\tobtained\tclass\tms\n");
    for r in records {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.name,
            r.expected,
            r.obtained,
            r.class.word(),
            r.ms
        ));
    }
    out
}

fn render_human(records: &[BenchRecord]) -> String {
    let name_w = records
        .iter()
        .map(|r| r.name.len())
        .chain(["name".len()])
        .max()
        .unwrap();
    let mut out = format!(
        "{:name_w$}  {:>9}  {:>9}  {:>12}  {:>8}\n",
        "name", "expected", "obtained", "class", "ms"
    );
    for r in records {
        out.push_str(&format!(
            "{:name_w$}  {:>9}  {:>9}  {:>12}  {:>8}\n",
            r.name,
            r.expected,
            r.obtained,
            r.class.word(),
            r.ms
        ));
    }
    out
}

fn summarize(records: &[BenchRecord]) -> String {
    let count = |c: OutcomeClass| records.iter().filter(|r| r.class == c).count();
    let correct = count(OutcomeClass::Correct);
    format!(
        "correct={} incorrect={} inconclusive={} timeout={}  properly working in {}/{} cases",
        correct,
        count(OutcomeClass::Incorrect),
        count(OutcomeClass::Inconclusive),
        count(OutcomeClass::Timeout),
        correct,
        records.len()
    )
}

fn cmd_bench(args: &BenchArgs) -> Result<i32> {
    let manifest = read_manifest(&args.corpus.join("manifest"))?;
    let mut tests: Vec<(String, PathBuf, Verdict)> = Vec::new();
    for entry in std::fs::read_dir(&args.corpus)
        .with_context(|| format!("reading {}", args.corpus.display()))?
    {
        let path = entry?.path();
        if path.extension().is_none_or(|e| e != "geo") {
            continue;
        }
        let name = path.file_stem().unwrap().to_string_lossy().into_owned();
        match manifest.get(&name) {
            Some(&v) => tests.push((name, path, v)),
            None => eprintln!("warning: {name}: not in manifest, skipped"),
        }
    }
    tests.sort_by(|a, b| a.0.cmp(&b.0));
    if tests.is_empty() {
        bail!("no .geo files matched the manifest in {}", args.corpus.display());
    }

    let jobs = args
        .jobs
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        })
        .clamp(1, tests.len());
    let next = AtomicUsize::new(0);
    let records: Mutex<Vec<BenchRecord>> = Mutex::new(Vec::with_capacity(tests.len()));
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((_, path, expected)) = tests.get(i) else {
                    break;
                };
                let rec = run_one(path, &args.budget, *expected);
                records.lock().unwrap().push(rec);
            });
        }
    });
    let mut records = records.into_inner().unwrap();
    records.sort_by(|a, b| a.name.cmp(&b.name));

    let (table, default_name) = match args.format {
        Format::Tsv => (render_tsv(&records), "bench.tsv"),
        Format::Json => (serde_json::to_string_pretty(&records)? + "\n", "bench.json"),
    };
    let out_path = args
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(default_name));
    std::fs::write(&out_path, table)
        .with_context(|| format!("writing {}", out_path.display()))?;

    print!("{}", render_human(&records));
    println!("{}", summarize(&records));
    let incorrect = records
        .iter()
        .any(|r| r.class == OutcomeClass::Incorrect);
    Ok(if incorrect { 1 } else { 0 })
}

/// Parse argv and dispatch; the return value is the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Prove(a) => cmd_prove(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match outcome {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    }
}
