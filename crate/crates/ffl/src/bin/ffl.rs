use clap::{Parser, Subcommand, ValueEnum};
use ffl::error::{Error, Result};
use ffl::{
    build_report, generate_instance, oracle_solve_with_limit, read_instance, render_svg,
    run_bench, serialize_instance, serialize_report, solve, write_file, Distribution,
    OracleConfig, SolveMode, ORACLE_POINT_LIMIT,
};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "ffl",
    version,
    about = "Place a facility and a highway to minimize weighted travel time"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    /// Let the speed threshold decide whether the vertex sweep runs.
    Auto,
    /// Only highway-through-a-point candidates.
    CaseA,
    /// Both candidate families, regardless of speed.
    Full,
}

impl From<ModeArg> for SolveMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Auto => SolveMode::Auto,
            ModeArg::CaseA => SolveMode::CaseAOnly,
            ModeArg::Full => SolveMode::Full,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DistArg {
    Uniform,
    Clustered,
}

fn parse_weight_range(s: &str) -> std::result::Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(',')
        .ok_or_else(|| format!("expected LO,HI (got {s:?})"))?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("weight-range lower bound {lo:?} is not a number"))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("weight-range upper bound {hi:?} is not a number"))?;
    Ok((lo, hi))
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file and emit a TOML report.
    Solve {
        /// Instance file to read.
        #[arg(long)]
        input: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also render the solution as SVG to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Candidate families to sweep.
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
    },
    /// Cross-check the solver against the brute-force oracle.
    Verify {
        /// Instance file to read.
        #[arg(long)]
        input: PathBuf,
        /// Write the verification summary here as well as to stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Accept instances beyond the oracle's size guard.
        #[arg(long)]
        force: bool,
        /// Override the oracle's orientation sample count.
        #[arg(long)]
        angle_samples: Option<usize>,
        /// Override the oracle's offset sample count.
        #[arg(long)]
        offset_samples: Option<usize>,
    },
    /// Generate a seeded random instance.
    Gen {
        /// Number of demand points.
        #[arg(long)]
        n: usize,
        /// Spatial layout of the points.
        #[arg(long, value_enum, default_value_t = DistArg::Uniform)]
        distribution: DistArg,
        /// Cluster count for the clustered layout.
        #[arg(long, default_value_t = 3)]
        clusters: usize,
        /// Weight range as LO,HI.
        #[arg(long, value_parser = parse_weight_range, default_value = "1,5")]
        weight_range: (f64, f64),
        /// Highway speed.
        #[arg(long, default_value_t = 2.0)]
        v: f64,
        /// RNG seed; identical arguments reproduce the file exactly.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the instance here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Measure solve time across instance sizes.
    Bench {
        /// Instance sizes to time.
        #[arg(long, value_delimiter = ',', default_values_t = vec![25usize, 50, 100, 200])]
        sizes: Vec<usize>,
        /// Instances per size; the median is reported.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Highway speed.
        #[arg(long, default_value_t = 2.0)]
        v: f64,
        /// RNG seed for the timed instances.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Apply the FFL_THREADS cap before any parallel work starts. Zero or an
/// unset variable means "use every core".
fn init_threads() -> Result<()> {
    let Ok(raw) = std::env::var("FFL_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("FFL_THREADS must be a non-negative integer (got {raw:?})")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::Parse(format!("FFL_THREADS: {e}")))?;
    }
    Ok(())
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            input,
            output,
            svg,
            mode,
        } => {
            let inst = read_instance(&input)?;
            let start = Instant::now();
            let sol = solve(&inst, mode.into())?;
            let report = build_report(&inst, &sol, mode.into(), start.elapsed().as_secs_f64());
            emit(output.as_ref(), &serialize_report(&report))?;
            if let Some(path) = svg {
                write_file(&path, &render_svg(&inst, &sol))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            output,
            force,
            angle_samples,
            offset_samples,
        } => {
            let inst = read_instance(&input)?;
            let n = inst.points().len();
            if n > ORACLE_POINT_LIMIT && !force {
                return Err(Error::Parse(format!(
                    "instance has {n} points; the brute-force oracle is sized for at most \
                     {ORACLE_POINT_LIMIT}; pass --force to accept the cost"
                )));
            }
            let mut config = OracleConfig::default();
            if let Some(a) = angle_samples {
                config.angle_samples = a;
            }
            if let Some(o) = offset_samples {
                config.offset_samples = o;
            }

            let sol = solve(&inst, SolveMode::Full)?;
            let mut objective = sol.objective;
            // Test-only fault injection: the integration suite sets this to
            // prove a wrong solver answer is caught. Unset in normal use.
            if let Ok(skew) = std::env::var("FFL_SELFTEST_SKEW") {
                if let Ok(s) = skew.trim().parse::<f64>() {
                    objective += s;
                }
            }

            let verdict = oracle_solve_with_limit(&inst, &config, n.max(ORACLE_POINT_LIMIT))?;
            let lo = verdict.best_sampled - verdict.delta;
            let hi = verdict.enumerated + 1e-9;
            let pass = objective >= lo && objective <= hi;
            let text = format!(
                "solver objective    {objective:.12}\n\
                 oracle best sampled {:.12}\n\
                 oracle enumerated   {:.12}\n\
                 oracle delta        {:.6e}\n\
                 bracket             [{lo:.12}, {hi:.12}]\n\
                 verdict             {}\n",
                verdict.best_sampled,
                verdict.enumerated,
                verdict.delta,
                if pass { "PASS" } else { "FAIL" }
            );
            print!("{text}");
            if let Some(path) = output {
                write_file(&path, &text)?;
            }
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen {
            n,
            distribution,
            clusters,
            weight_range,
            v,
            seed,
            output,
        } => {
            let dist = match distribution {
                DistArg::Uniform => Distribution::Uniform,
                DistArg::Clustered => Distribution::Clustered { clusters },
            };
            let inst = generate_instance(n, dist, weight_range, v, seed)?;
            emit(output.as_ref(), &serialize_instance(&inst))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            sizes,
            repeats,
            v,
            seed,
        } => {
            if sizes.is_empty() {
                return Err(Error::Parse("sizes must not be empty".into()));
            }
            let report = run_bench(&sizes, repeats, v, seed)?;
            let mut text = String::from("n      median-seconds\n");
            for row in &report.rows {
                text.push_str(&format!("{:<6} {:.6}\n", row.n, row.median_seconds));
            }
            if let Some(slope) = report.slope {
                text.push_str(&format!("log-log slope: {slope:.3}\n"));
            }
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
