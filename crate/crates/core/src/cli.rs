//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch or I/O failure, 2 usage
//! error (bad arguments, length cap exceeded, malformed input file).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closed_forms;
use crate::error::Error;
use crate::factor_analysis::{
    lyndon_array_bruteforce, lyndon_census, lyndon_factor_census, palindrome_census, run_census, square_census,
};
use crate::lyndon_array::{algorithm_la_with, LaOptions};
use crate::report::{lyndon_array_text, CensusJson, LetterTable, LyndonArrayJson};
use crate::verify::{self, Formulas, Selector};
use crate::word::{parse_words, Word, WordRecord};
use crate::word_core::{fib, fibonacci_word, fibonacci_word_capped, zww, zww_capped, LengthCap};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Brute-force timings are only collected up to this word length.
pub const BENCH_BRUTE_MAX_LEN: u64 = 5000;

#[derive(Debug, Parser)]
#[command(
    name = "zww",
    version,
    about = "Finite ZWW words: generation, censuses, formula verification and Lyndon arrays"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest word length (in letters) that may be generated. Defaults to
    /// |W_40|.
    #[arg(long, global = true)]
    max_length: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write W_k (or F_k) in word text or JSON format.
    Generate {
        k: u32,
        /// Generate the binary Fibonacci word F_k instead.
        #[arg(long)]
        fibonacci: bool,
    },
    /// Run a census on W_k or on the words of a file.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Same as `analyze --what lyndon-array`.
    LyndonArray {
        #[command(flatten)]
        source: Source,
    },
    /// Check every closed form against its brute-force census.
    Verify {
        /// Replace the upper end of every default range.
        #[arg(long)]
        max_k: Option<u32>,
        #[arg(long, default_value = "all")]
        theorem: Selector,
    },
    /// Reproduce table 1 (words) or table 2 (square counts).
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        /// First n for table 2.
        #[arg(long, default_value_t = 3)]
        from: u32,
        /// Last n for table 2.
        #[arg(long, default_value_t = 12)]
        to: u32,
    },
    /// Time Algorithm LA (and optionally the brute-force array) per k.
    Bench {
        #[arg(long, default_value_t = 30)]
        max_k: u32,
        /// Defaults to min(2, max_k).
        #[arg(long)]
        min_k: Option<u32>,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
        /// Also time the brute-force Lyndon array for words up to 5000 letters.
        #[arg(long)]
        compare: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Analyze W_k.
    #[arg(short, long)]
    k: Option<u32>,
    /// Analyze each word (one per line) of a word text file.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Letters,
    Palindromes,
    Squares,
    Runs,
    Lyndon,
    LyndonArray,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &Formulas::default(), stdout, stderr)
}

/// As [`run`], with the closed forms that `verify` checks supplied by the
/// caller.
pub fn run_with<I, T>(args: I, formulas: &Formulas, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let cap = cli.max_length.map(LengthCap::new).unwrap_or_default();
    let result = match &cli.command {
        Command::Generate { k, fibonacci } => cmd_generate(*k, *fibonacci, cli.format, &cap),
        Command::Analyze { source, what } => cmd_analyze(source, *what, cli.format, &cap),
        Command::LyndonArray { source } => cmd_analyze(source, What::LyndonArray, cli.format, &cap),
        Command::Verify { max_k, theorem } => cmd_verify(formulas, *max_k, *theorem, cli.format, stderr),
        Command::Tables { which, from, to } => cmd_tables(*which, *from, *to, cli.format),
        Command::Bench { max_k, min_k, reps, compare } => cmd_bench(*max_k, *min_k, *reps, *compare, cli.format, &cap),
    };
    let (body, code) = match result {
        Ok(out) => (out.body, out.code),
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) | CliError::Failure(m) => m,
            };
            let _ = writeln!(stderr, "zww: {msg}");
            return e.code();
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, body.as_bytes()).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(body.as_bytes()).map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "zww: {msg}");
        return EXIT_FAILURE;
    }
    code
}

struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: EXIT_OK }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn unsupported(format: Format, cmd: &str) -> CliError {
    CliError::Usage(format!("--format {format:?} is not supported by {cmd}").to_lowercase())
}

fn cmd_generate(k: u32, fibonacci: bool, format: Format, cap: &LengthCap) -> Result<Output, CliError> {
    let word = if fibonacci { fibonacci_word_capped(k, cap)? } else { zww_capped(k, cap)? };
    match format {
        Format::Text => Ok(Output::ok(format!("{}\n", word.to_text()))),
        Format::Json => Ok(Output::ok(json(&WordRecord::new(Some(k), &word)))),
        Format::Csv => Err(unsupported(format, "generate")),
    }
}

fn load_source(source: &Source, cap: &LengthCap) -> Result<Vec<(Option<u32>, Word)>, CliError> {
    match (source.k, &source.input) {
        (Some(k), _) => Ok(vec![(Some(k), zww_capped(k, cap)?)]),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Failure(format!("cannot read {}: {e}", path.display())))?;
            let words = parse_words(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            Ok(words.into_iter().map(|w| (None, w)).collect())
        }
        (None, None) => Err(CliError::Usage("one of --k or --input is required".into())),
    }
}

fn cmd_analyze(source: &Source, what: What, format: Format, cap: &LengthCap) -> Result<Output, CliError> {
    if format == Format::Csv {
        return Err(unsupported(format, "analyze"));
    }
    let mut body = String::new();
    for (k, word) in load_source(source, cap)? {
        body.push_str(&analyze_one(k, &word, what, format, cap)?);
    }
    Ok(Output::ok(body))
}

fn analyze_one(k: Option<u32>, w: &Word, what: What, format: Format, cap: &LengthCap) -> Result<String, CliError> {
    let as_json = format == Format::Json;
    let census = |c: CensusJson| if as_json { json(&c) } else { c.to_text() };
    Ok(match what {
        What::Letters => {
            let t = LetterTable::of(w);
            if as_json {
                json(&t)
            } else {
                t.to_text()
            }
        }
        What::Palindromes => census(CensusJson::palindromes(&palindrome_census(w))),
        What::Squares => census(CensusJson::squares(&square_census(w))),
        What::Runs => {
            let runs = run_census(w);
            if as_json {
                json(&CensusJson::runs(w, &runs))
            } else {
                let c = CensusJson::runs(w, &runs);
                let mut s = format!("what runs\ndistinct {}\ntotal {}\nstart length period\n", c.distinct, c.total);
                for r in &runs {
                    s.push_str(&format!("{} {} {}\n", r.start, r.length, r.period));
                }
                s
            }
        }
        What::Lyndon => census(CensusJson::lyndon(&lyndon_census(w), &lyndon_factor_census(w))),
        What::LyndonArray => {
            if w.is_empty() {
                return Err(CliError::Usage("cannot compute the Lyndon array of an empty word".into()));
            }
            let array = match k {
                Some(k) => {
                    let opts = LaOptions { materialize_word: false, cap: *cap };
                    algorithm_la_with(k, &opts)?.array
                }
                None => lyndon_array_bruteforce(w)?,
            };
            if as_json {
                json(&LyndonArrayJson::new(k, w, &array))
            } else {
                let header = k.map(|k| format!("W_{k}"));
                lyndon_array_text(header.as_deref(), w, &array)
            }
        }
    })
}

fn cmd_verify(
    formulas: &Formulas,
    max_k: Option<u32>,
    selector: Selector,
    format: Format,
    stderr: &mut dyn Write,
) -> Result<Output, CliError> {
    if format == Format::Csv {
        return Err(unsupported(format, "verify"));
    }
    let outcomes = verify::run(formulas, selector, max_k);
    let body = if format == Format::Json { json(&outcomes) } else { verify::render_table(&outcomes) };
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).collect();
    for o in &failed {
        if let Some(ce) = &o.counterexample {
            let _ = writeln!(stderr, "zww: {} failed at {ce}", o.theorem);
        }
    }
    Ok(Output { body, code: if failed.is_empty() { EXIT_OK } else { EXIT_FAILURE } })
}

#[derive(Debug, Serialize)]
struct TableOneRow {
    i: u32,
    fibonacci: Vec<u32>,
    zww: Vec<u32>,
}

/// One row of the square-count comparison between `W_n` and `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableTwoRow {
    pub n: u32,
    pub w_distinct_formula: u64,
    pub w_distinct_census: u64,
    pub w_total_formula: u64,
    pub w_total_census: u64,
    pub f_distinct_formula: u64,
    pub f_distinct_census: u64,
    pub f_total_formula: u64,
    pub f_total_census: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn table_two_row(n: u32) -> crate::Result<TableTwoRow> {
    let w = zww(n)?;
    let f = fibonacci_word(n)?;
    let wc = square_census(&w);
    let fc = square_census(&f);
    let f_distinct_formula = closed_forms::fib_word_distinct_squares(n)?;
    let note = (n < closed_forms::FIB_WORD_DISTINCT_SQUARES_FROM && f_distinct_formula != fc.distinct).then(|| {
        format!(
            "F distinct: formula 2(f_n-1) = {f_distinct_formula} but F_{n} has {} distinct squares; formula holds from n = {}",
            fc.distinct,
            closed_forms::FIB_WORD_DISTINCT_SQUARES_FROM
        )
    });
    Ok(TableTwoRow {
        n,
        w_distinct_formula: closed_forms::distinct_square_count(n)?,
        w_distinct_census: wc.distinct,
        w_total_formula: closed_forms::total_squares(n)?,
        w_total_census: wc.total,
        f_distinct_formula,
        f_distinct_census: fc.distinct,
        f_total_formula: closed_forms::fib_word_total_squares(n)?,
        f_total_census: fc.total,
        note,
    })
}

fn cmd_tables(which: u8, from: u32, to: u32, format: Format) -> Result<Output, CliError> {
    if which == 1 {
        let rows: Vec<TableOneRow> = (0..=5)
            .map(|i| -> crate::Result<_> {
                Ok(TableOneRow { i, fibonacci: fibonacci_word(i)?.into_letters(), zww: zww(i)?.into_letters() })
            })
            .collect::<crate::Result<_>>()?;
        return match format {
            Format::Json => Ok(Output::ok(json(&rows))),
            Format::Text => Ok(Output::ok(
                rows.iter()
                    .map(|r| {
                        format!(
                            "F_{i}={} / W_{i}={}\n",
                            Word::new(r.fibonacci.clone()).to_compact(),
                            Word::new(r.zww.clone()).to_compact(),
                            i = r.i
                        )
                    })
                    .collect(),
            )),
            Format::Csv => Err(unsupported(format, "tables")),
        };
    }
    if from < 3 || from > to {
        return Err(CliError::Usage(format!("table 2 needs 3 <= --from <= --to, got {from}..={to}")));
    }
    let rows = (from..=to).map(table_two_row).collect::<crate::Result<Vec<_>>>()?;
    match format {
        Format::Json => Ok(Output::ok(json(&rows))),
        Format::Csv => Err(unsupported(format, "tables")),
        Format::Text => {
            let mut s = format!(
                "{:>3} | {:>9} {:>9} | {:>9} {:>9} | {:>9} {:>9} | {:>9} {:>9}\n",
                "n", "W dist f", "W dist c", "W tot f", "W tot c", "F dist f", "F dist c", "F tot f", "F tot c"
            );
            for r in &rows {
                s.push_str(&format!(
                    "{:>3} | {:>9} {:>9} | {:>9} {:>9} | {:>9} {:>9} | {:>9} {:>9}\n",
                    r.n,
                    r.w_distinct_formula,
                    r.w_distinct_census,
                    r.w_total_formula,
                    r.w_total_census,
                    r.f_distinct_formula,
                    r.f_distinct_census,
                    r.f_total_formula,
                    r.f_total_census
                ));
                if let Some(note) = &r.note {
                    s.push_str(&format!("    note: {note}\n"));
                }
            }
            s.push_str("(f = formula, c = census)\n");
            Ok(Output::ok(s))
        }
    }
}

/// Median-of-repetitions timings for one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub k: u32,
    pub length: u64,
    pub la_ns: u64,
    pub brute_ns: Option<u64>,
    pub reps: u32,
}

fn median(mut xs: Vec<u64>) -> u64 {
    xs.sort_unstable();
    xs[xs.len() / 2]
}

pub fn bench_record(k: u32, reps: u32, compare: bool, cap: &LengthCap) -> crate::Result<BenchRecord> {
    let length = cap.check(k)?;
    let opts = LaOptions { materialize_word: true, cap: *cap };
    let mut la = Vec::with_capacity(reps as usize);
    for _ in 0..reps {
        let t = Instant::now();
        let out = algorithm_la_with(k, &opts)?;
        la.push(t.elapsed().as_nanos() as u64);
        std::hint::black_box(out);
    }
    let brute_ns = if compare && length <= BENCH_BRUTE_MAX_LEN {
        let w = zww_capped(k, cap)?;
        let mut times = Vec::with_capacity(reps as usize);
        for _ in 0..reps {
            let t = Instant::now();
            let a = lyndon_array_bruteforce(&w)?;
            times.push(t.elapsed().as_nanos() as u64);
            std::hint::black_box(a);
        }
        Some(median(times))
    } else {
        None
    };
    debug_assert_eq!(length, fib(k + 2)?);
    Ok(BenchRecord { k, length, la_ns: median(la), brute_ns, reps })
}

fn cmd_bench(
    max_k: u32,
    min_k: Option<u32>,
    reps: u32,
    compare: bool,
    format: Format,
    cap: &LengthCap,
) -> Result<Output, CliError> {
    cap.check(max_k)?;
    let min_k = min_k.unwrap_or(max_k.min(2));
    if min_k > max_k {
        return Err(CliError::Usage(format!("--min-k {min_k} exceeds --max-k {max_k}")));
    }
    let records = (min_k..=max_k).map(|k| bench_record(k, reps, compare, cap)).collect::<crate::Result<Vec<_>>>()?;
    match format {
        Format::Json => Ok(Output::ok(json(&records))),
        Format::Text | Format::Csv => {
            let mut s = String::from("k,length,la_ns,brute_ns,reps\n");
            for r in &records {
                let brute = r.brute_ns.map(|b| b.to_string()).unwrap_or_default();
                s.push_str(&format!("{},{},{},{},{}\n", r.k, r.length, r.la_ns, brute, r.reps));
            }
            Ok(Output::ok(s))
        }
    }
}
