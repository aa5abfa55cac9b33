use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use krasner_core::deloop::{self, ExportFormat};
use krasner_core::plasma::{self, EnumOptions, Plasma, Strategy};
use krasner_core::verify::{self, Engine, VerificationReport};
use krasner_core::{descriptor, partitions};

#[derive(Parser)]
#[command(name = "krasner", version, about = "Count, verify and export Dynkin systems, plasmas and their deloopings")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Search-node cap for generic morphism enumeration.
    #[arg(long, global = true, default_value_t = plasma::DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for sampled checks at level 4.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// `json` or `text` for reports; `json`, `dot` or `tuples` for exports.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Allow the 2^32-candidate oracle scan at n = 5.
    #[arg(long, global = true)]
    slow: bool,
    /// Dynkin enumeration engine.
    #[arg(long, global = true, default_value = "backtrack")]
    engine: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count Dynkin systems, partitions, or plasma morphisms.
    Count {
        #[command(subcommand)]
        kind: CountKind,
    },
    /// Check a claim and emit a report.
    Verify(VerifyArgs),
    /// Write a computed artifact.
    Export {
        #[command(subcommand)]
        what: ExportKind,
    },
    /// Dynkin systems on <n>.
    Dynkin {
        #[command(subcommand)]
        action: DynkinAction,
    },
    /// Partitions of <n>.
    Partitions {
        #[command(subcommand)]
        action: PartitionsAction,
    },
    /// Truncated F1-module checks.
    Gammaset {
        #[command(subcommand)]
        action: GammasetAction,
    },
    /// Deloopings.
    Deloop {
        #[command(subcommand)]
        action: DeloopAction,
    },
    /// Discrete projective geometry.
    Geometry {
        #[command(subcommand)]
        action: GeometryAction,
    },
}

#[derive(Subcommand)]
enum CountKind {
    Dynkin {
        #[arg(long)]
        n: usize,
    },
    Partitions {
        #[arg(long)]
        n: usize,
    },
    Morphisms {
        /// Plasma descriptor or path to a JSON plasma.
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// axioms, bijections, naturality, square, projective, simplicial,
    /// associators, truncation, unit, functoriality, quotient
    claim: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    levels: Option<usize>,
    /// Window source: krasner, dynkin, partitions, wedge-K, hhat:<plasma>.
    #[arg(long)]
    source: Option<String>,
    /// Window for the unit check.
    #[arg(long)]
    module: Option<String>,
    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
}

#[derive(Subcommand)]
enum ExportKind {
    Deloop(DeloopArgs),
    /// Sorted Dynkin systems as hex bitvectors, one per line.
    Dynkin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DeloopArgs {
    #[arg(long, default_value = "krasner")]
    source: String,
    #[arg(long, default_value_t = 3)]
    levels: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DynkinAction {
    Count {
        #[arg(long)]
        n: usize,
    },
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PartitionsAction {
    Count {
        #[arg(long)]
        n: usize,
    },
    VerifySquare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum GammasetAction {
    Verify {
        /// functoriality, naturality, unit, projective
        #[arg(long)]
        which: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        source: Option<String>,
        #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum DeloopAction {
    Build(DeloopArgs),
}

#[derive(Subcommand)]
enum GeometryAction {
    Verify {
        #[arg(long)]
        n: usize,
    },
}

/// A usage or evaluation error; exit code 2.
struct UsageError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.into())
    }
}

type CliResult = Result<bool, UsageError>;

struct Ctx {
    opts: EnumOptions,
    seed: u64,
    format: Option<String>,
    slow: bool,
    engine: Engine,
}

impl Ctx {
    fn json(&self) -> anyhow::Result<bool> {
        match self.format.as_deref() {
            None | Some("json") => Ok(true),
            Some("text") => Ok(false),
            Some(other) => bail!("unsupported report format {other:?} (json or text)"),
        }
    }

    fn export_format(&self) -> anyhow::Result<ExportFormat> {
        Ok(self.format.as_deref().unwrap_or("json").parse()?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let threads = cli.threads.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global()?;
    let ctx = Ctx {
        opts: EnumOptions { budget: cli.budget, strategy: Strategy::Auto },
        seed: cli.seed,
        format: cli.format,
        slow: cli.slow,
        engine: cli.engine.parse()?,
    };
    match cli.command {
        Command::Count { kind } => count(&ctx, kind),
        Command::Verify(args) => verify_claim(&ctx, args),
        Command::Export { what } => match what {
            ExportKind::Deloop(args) => export_deloop(&ctx, &args),
            ExportKind::Dynkin { n, out } => export_dynkin(&ctx, n, out.as_deref()),
        },
        Command::Dynkin { action } => match action {
            DynkinAction::Count { n } => count(&ctx, CountKind::Dynkin { n }),
            DynkinAction::Enumerate { n, out } => export_dynkin(&ctx, n, out.as_deref()),
        },
        Command::Partitions { action } => match action {
            PartitionsAction::Count { n } => count(&ctx, CountKind::Partitions { n }),
            PartitionsAction::VerifySquare { n, m } => emit(&ctx, verify::verify_square(n, m)?),
        },
        Command::Gammaset { action: GammasetAction::Verify { which, n, k, source, samples } } => {
            let report = match which.as_str() {
                "functoriality" => verify::verify_functoriality(
                    source.as_deref().unwrap_or("dynkin"),
                    n.unwrap_or(4),
                    samples,
                    ctx.seed,
                    ctx.opts,
                )?,
                "naturality" => verify::verify_naturality(n.unwrap_or(4), samples, ctx.seed)?,
                "unit" => verify::verify_unit(source.as_deref().unwrap_or("dynkin"), n.unwrap_or(3), ctx.opts)?,
                "projective" => verify::check_theorem_projective(n.unwrap_or(3), k.unwrap_or(2))?,
                other => return Err(anyhow!("unknown gammaset check {other:?}").into()),
            };
            emit(&ctx, report)
        }
        Command::Deloop { action: DeloopAction::Build(args) } => export_deloop(&ctx, &args),
        Command::Geometry { action: GeometryAction::Verify { n } } => emit(&ctx, verify::verify_projective_geometry(n)?),
    }
}

fn load_plasma(arg: &str) -> anyhow::Result<Plasma> {
    let path = Path::new(arg);
    if !arg.starts_with('{') && path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        return Ok(descriptor::parse_plasma(&text)?);
    }
    Ok(descriptor::parse_plasma(arg)?)
}

fn count(ctx: &Ctx, kind: CountKind) -> CliResult {
    let (what, scope, value, engine) = match kind {
        CountKind::Dynkin { n } => {
            let c = verify::count_dynkin_with(ctx.engine, n, ctx.slow)?;
            ("dynkin", json!({ "n": n }), c, ctx.engine.name())
        }
        CountKind::Partitions { n } => {
            let c = partitions::enumerate_partitions(n)?.len() as u64;
            ("partitions", json!({ "n": n }), c, "rgs")
        }
        CountKind::Morphisms { src, dst } => {
            let (p, q) = (load_plasma(&src)?, load_plasma(&dst)?);
            let c = plasma::enumerate_morphisms(&p, &q, ctx.opts)?.len() as u64;
            let engine = if plasma::powerset_dimension(&p).is_some() && plasma::krasner_wedge_rank(&q).is_some() {
                "kz-search"
            } else {
                "backtrack"
            };
            ("morphisms", json!({ "src": src, "dst": dst }), c, engine)
        }
    };
    if ctx.json()? {
        let out = json!({ "schema": verify::SCHEMA, "count": what, "scope": scope, "value": value, "engine": engine });
        say(serde_json::to_string(&out)?)?;
    } else {
        say(value)?;
        eprintln!("engine: {engine}");
    }
    Ok(true)
}

fn emit(ctx: &Ctx, report: VerificationReport) -> CliResult {
    if ctx.json()? {
        say(serde_json::to_string_pretty(&report)?)?;
    } else {
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        say(format_args!("{verdict} {} {} ({} ms)", report.claim, report.scope, report.elapsed_ms))?;
        say(&report.details)?;
        if let Some(c) = &report.counterexample {
            say(format_args!("counterexample: {c}"))?;
        }
    }
    Ok(report.passed())
}

fn verify_claim(ctx: &Ctx, a: VerifyArgs) -> CliResult {
    let report = match a.claim.as_str() {
        "axioms" => verify::verify_axioms(a.n.unwrap_or(4), ctx.slow)?,
        "bijections" => verify::verify_bijections(a.n.unwrap_or(4))?,
        "naturality" => verify::verify_naturality(a.n.unwrap_or(4), a.samples, ctx.seed)?,
        "square" => {
            let n = a.n.unwrap_or(3);
            verify::verify_square(n, a.m.unwrap_or(n))?
        }
        "projective" => match a.k {
            Some(k) => verify::check_theorem_projective(a.levels.or(a.n).unwrap_or(3), k)?,
            None => verify::verify_projective_geometry(a.n.unwrap_or(6))?,
        },
        "simplicial" => verify::verify_simplicial(a.source.as_deref().unwrap_or("krasner"), a.levels.or(a.n).unwrap_or(4), ctx.opts)?,
        "associators" => verify::verify_associators()?,
        "truncation" => verify::verify_truncation()?,
        "unit" => verify::verify_unit(a.module.or(a.source).as_deref().unwrap_or("dynkin"), a.n.or(a.levels).unwrap_or(3), ctx.opts)?,
        "functoriality" => verify::verify_functoriality(
            a.source.as_deref().unwrap_or("dynkin"),
            a.levels.or(a.n).unwrap_or(4),
            a.samples,
            ctx.seed,
            ctx.opts,
        )?,
        "quotient" => {
            let primes = if a.primes.is_empty() { vec![2, 3, 5, 7] } else { a.primes };
            verify::verify_quotient(&primes)?
        }
        other => return Err(anyhow!("unknown claim {other:?}").into()),
    };
    emit(ctx, report)
}

/// Writes to stdout; a closed pipe on the reading side is not an error.
fn print_bytes(bytes: &[u8]) -> anyhow::Result<()> {
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(bytes).and_then(|()| stdout.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn say(line: impl std::fmt::Display) -> anyhow::Result<()> {
    print_bytes(format!("{line}\n").as_bytes())
}

fn write_out(out: Option<&Path>, bytes: &[u8]) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => print_bytes(bytes),
    }
}

fn export_deloop(ctx: &Ctx, args: &DeloopArgs) -> CliResult {
    let format = ctx.export_format()?;
    let window = verify::build_window(&args.source, args.levels, ctx.opts)?;
    let bytes = deloop::export(&deloop::deloop(&window)?, format)?;
    write_out(args.out.as_deref(), &bytes)?;
    Ok(true)
}

fn export_dynkin(ctx: &Ctx, n: usize, out: Option<&Path>) -> CliResult {
    let systems = verify::enumerate_dynkin_with(ctx.engine, n, ctx.slow)?;
    let bytes = match ctx.format.as_deref() {
        Some("json") => {
            let v: Vec<Value> = systems.iter().map(|y| json!(y.family())).collect();
            let mut b = serde_json::to_vec_pretty(&v)?;
            b.push(b'\n');
            b
        }
        None | Some("text") => systems.iter().map(|y| format!("{}\n", y.family().to_hex())).collect::<String>().into_bytes(),
        Some(other) => return Err(anyhow!("unsupported format {other:?} (text or json)").into()),
    };
    write_out(out, &bytes)?;
    Ok(true)
}
