use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braidcong::braid::{parse_word_with_header, pure_generator, BraidWord};
use braidcong::group::{BfsOptions, FiniteMatrixGroup, DEFAULT_LIMIT};
use braidcong::parallel::Strategy;
use braidcong::rep::RepSpace;
use braidcong::report::SCHEMA_VERSION;
use braidcong::suites::{run_suite, SuiteConfig, DEFAULT_SEED, SUITES};
use braidcong::symplectic::{MatrixJson, ModularMatrix};
use braidcong::tc::{
    coset_enumerate, presentation_g, presentation_h, presentation_s, EnumerationStatus, Presentation,
    DEFAULT_MAX_COSETS,
};
use braidcong::Error;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(name = "braidcong", version, about = "Exact computations with braid groups and their symplectic images")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix of a braid word, over ℤ or mod m.
    Eval {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, visible_alias = "mod")]
        m: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide membership in B_n[m]. Exit 0 for members, 1 otherwise.
    Member {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, visible_alias = "mod")]
        m: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named verification suite. Exit 1 if any case fails.
    Verify(VerifyArgs),
    /// Enumerate a finite matrix group by breadth-first closure.
    Enum(EnumArgs),
    /// Todd–Coxeter coset enumeration of a presentation file or a built-in
    /// presentation such as `presentation_G(3,3)`.
    Cosets {
        presentation: String,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        limit: usize,
        #[arg(long)]
        allow_partial: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct WordArgs {
    /// Strand count; may instead come from an `n=<int>;` header.
    #[arg(long)]
    n: Option<usize>,
    /// Signed generator indices separated by spaces or commas.
    #[arg(long, conflicts_with = "word_file", allow_hyphen_values = true)]
    word: Option<String>,
    #[arg(long)]
    word_file: Option<PathBuf>,
}

impl WordArgs {
    fn load(&self) -> Result<BraidWord, Failure> {
        let text = match (&self.word, &self.word_file) {
            (Some(w), None) => w.clone(),
            (None, Some(path)) => read(path)?,
            _ => return Err(Failure::Usage("give exactly one of --word or --word-file".into())),
        };
        Ok(parse_word_with_header(&text, self.n)?)
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suite: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, visible_alias = "mod")]
    m: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Skip the largest coset enumerations.
    #[arg(long)]
    quick: bool,
    /// Disable data parallelism.
    #[arg(long)]
    serial: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumArgs {
    /// Images of σ_1, …, σ_{n-1}, given as `n=<int>`.
    #[arg(long, conflicts_with_all = ["pure", "generators"])]
    rep: Option<String>,
    /// Images of the pure generators a_ij, given as `n=<int>`.
    #[arg(long, conflicts_with = "generators")]
    pure: Option<String>,
    /// JSON array of matrices, each `{"dim", "mod", "rows"}`.
    #[arg(long)]
    generators: Option<PathBuf>,
    #[arg(long, visible_alias = "mod")]
    m: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_LIMIT)]
    limit: usize,
    #[arg(long)]
    allow_partial: bool,
    #[arg(long)]
    exponent: bool,
    #[arg(long)]
    serial: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, format!("{text}\n")).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn strategy(serial: bool) -> Strategy {
    if serial {
        Strategy::Serial
    } else {
        Strategy::Parallel
    }
}

fn parse_n(arg: &str) -> Result<usize, Failure> {
    arg.trim()
        .strip_prefix("n=")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Failure::Usage(format!("expected n=<int>, got {arg:?}")))
}

fn cmd_eval(word: &WordArgs, m: Option<u64>, out: Option<&Path>) -> Result<ExitCode, Failure> {
    let w = word.load()?;
    let space = RepSpace::new(w.strands())?;
    let matrix = match m {
        Some(m) => MatrixJson::from(&space.rho_mod(&w, m)?),
        None => MatrixJson::from(&space.rho(&w)?),
    };
    emit(&pretty(&matrix), out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_member(word: &WordArgs, m: u64, out: Option<&Path>) -> Result<ExitCode, Failure> {
    let w = word.load()?;
    let member = RepSpace::new(w.strands())?.in_congruence(&w, m)?;
    let body = json!({
        "schema": SCHEMA_VERSION,
        "n": w.strands(),
        "mod": m,
        "word": w.to_text(),
        "member": member,
    });
    emit(&pretty(&body), out)?;
    Ok(if member { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, Failure> {
    let config = SuiteConfig {
        n: args.n,
        p: args.p,
        m: args.m,
        samples: args.samples,
        limit: args.limit,
        seed: args.seed,
        strategy: strategy(args.serial),
        full: !args.quick,
    };
    let report = run_suite(&args.suite, &config)?;
    emit(&report.to_json(), args.out.as_deref())?;
    for case in report.failures() {
        eprintln!("FAIL {}: expected {}, got {}", case.name, case.expected, case.actual);
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn enum_generators(args: &EnumArgs) -> Result<Vec<ModularMatrix>, Failure> {
    let need_m = || args.m.ok_or_else(|| Failure::Usage("--m is required with --rep and --pure".into()));
    if let Some(arg) = &args.rep {
        return Ok(RepSpace::new(parse_n(arg)?)?.generator_images_mod(need_m()?)?);
    }
    if let Some(arg) = &args.pure {
        let n = parse_n(arg)?;
        let m = need_m()?;
        let space = RepSpace::new(n)?;
        let mut gens = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                gens.push(space.rho_mod(&pure_generator(i, j, n)?, m)?);
            }
        }
        return Ok(gens);
    }
    let path = args
        .generators
        .as_ref()
        .ok_or_else(|| Failure::Usage("give one of --rep, --pure or --generators".into()))?;
    let list: Vec<MatrixJson> =
        serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    list.iter()
        .map(|mj| {
            let a = match (mj.modulus, args.m) {
                (_, Some(m)) => ModularMatrix::from_integer(&mj.to_integer()?, m)?,
                (Some(_), None) => mj.to_modular()?,
                (None, None) => return Err(Failure::Usage("matrices carry no modulus; pass --m".into())),
            };
            Ok(a)
        })
        .collect()
}

fn cmd_enum(args: &EnumArgs) -> Result<ExitCode, Failure> {
    let gens = enum_generators(args)?;
    let opts = BfsOptions {
        strategy: strategy(args.serial),
        allow_partial: args.allow_partial,
        ..BfsOptions::with_limit(args.limit)
    };
    let group = FiniteMatrixGroup::generate(&gens, opts)?;
    emit(&pretty(&group.report(args.exponent)), args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn builtin_presentation(name: &str) -> Option<Result<Presentation, Failure>> {
    let (head, rest) = name.split_once('(')?;
    let inner = rest.strip_suffix(')')?;
    let nums: Vec<u64> = inner.split(',').map(|s| s.trim().parse().ok()).collect::<Option<_>>()?;
    let p = match (head, nums.as_slice()) {
        ("presentation_S", &[n]) => presentation_s(n as usize),
        ("presentation_G", &[n, p]) => presentation_g(n as usize, p),
        ("presentation_H", &[n, p]) => presentation_h(n as usize, p),
        _ => return None,
    };
    Some(p.map_err(Failure::from))
}

fn cmd_cosets(name: &str, limit: usize, allow_partial: bool, out: Option<&Path>) -> Result<ExitCode, Failure> {
    let presentation = match builtin_presentation(name) {
        Some(p) => p?,
        None => Presentation::parse(&read(Path::new(name))?)?,
    };
    let table = coset_enumerate(&presentation, limit)?;
    let complete = table.status == EnumerationStatus::Complete;
    let body = json!({
        "schema": SCHEMA_VERSION,
        "presentation": name,
        "generators": presentation.generators(),
        "relators": presentation.relators().len(),
        "complete": complete,
        "index": complete.then_some(table.index),
        "total_defined": table.total_defined,
        "limit": limit,
    });
    emit(&pretty(&body), out)?;
    Ok(if complete || allow_partial { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn run(cli: &Cli) -> Result<ExitCode, Failure> {
    match &cli.command {
        Command::Eval { word, m, out } => cmd_eval(word, *m, out.as_deref()),
        Command::Member { word, m, out } => cmd_member(word, *m, out.as_deref()),
        Command::Verify(args) => cmd_verify(args),
        Command::Enum(args) => cmd_enum(args),
        Command::Cosets { presentation, limit, allow_partial, out } => {
            cmd_cosets(presentation, *limit, *allow_partial, out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(Failure::Lib(Error::LimitExceeded(limit))) => {
            eprintln!("error: enumeration limit of {limit} exceeded (use --allow-partial or raise --limit)");
            ExitCode::FAILURE
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
