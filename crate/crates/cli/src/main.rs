mod difftest;
mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use p5hom::{
    build_blob_graph, build_family, generate, oracle_solve_capped, parse_instance, parse_solution,
    solve_connected_case_with, solve_full_with, solve_mwis, verify_solution, write_instance, Density, Error, Family,
    GenSpec, GraphFamily, Instance, PatternSpec, Provenance, SolveOptions, BUDGET_ENV,
};

use report::RunReport;

#[derive(Parser)]
#[command(name = "p5hom", version, about = "Maximum partial list H-coloring on P5-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print the solution with a run report.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Paper)]
        algorithm: Algorithm,
        /// Run only the connected-case solver.
        #[arg(long)]
        force_connected: bool,
        /// Verify the solution before printing it.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Cap on guess branches; the report says whether it was hit.
        #[arg(long, env = BUDGET_ENV)]
        budget: Option<u64>,
    },
    /// Check a solution file against an instance.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Print the family of candidate sets, one sorted id list per line.
    Family { file: PathBuf },
    /// Print the blob graph and its maximum-weight independent set.
    Blob { file: PathBuf },
    /// Generate a seeded random P5-free instance.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = PatternArg::Complete)]
        pattern: PatternArg,
        /// Edge probability, or join probability for cographs.
        #[arg(long, default_value = "0.5")]
        density: Density,
        #[arg(long)]
        seed: u64,
        /// Probability that a color stays in a list.
        #[arg(long, default_value = "1")]
        list_density: Density,
        /// Weight numerators are drawn from 1..=max-weight.
        #[arg(long, default_value_t = 1)]
        max_weight: u32,
        /// Weight denominators are drawn from 1..=max-denominator.
        #[arg(long, default_value_t = 1)]
        max_denominator: u32,
    },
    /// Compare the solver with the exhaustive oracle on seeded trials.
    Difftest {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        max_n: usize,
        /// K3, P4, complete:3, path:4 or edges:K:a-b,...
        #[arg(long)]
        pattern: PatternSpec,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Where strict gaps on non-complete patterns are written.
        #[arg(long, default_value = "findings")]
        findings: PathBuf,
    },
    /// Report an induced P5 if there is one.
    CheckP5free { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Paper,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Cograph,
    Split,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum PatternArg {
    Complete,
    Path,
}

/// Carries the process exit code alongside the message.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn mismatch(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotP5Free(w) => Failure { code: 3, message: format!("not P5-free: induced P5 {}", ids(&w)) },
            Error::Parse { .. } | Error::InvalidArgument(_) => Failure::usage(e.to_string()),
            other => Failure::mismatch(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

pub(crate) fn ids(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    parse_instance(&read_text(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn require_p5_free(inst: &Instance) -> Result<(), Failure> {
    match inst.graph.find_induced_p5() {
        Some(w) => Err(Error::NotP5Free(w).into()),
        None => Ok(()),
    }
}

fn sorted_family(family: &Family) -> Family {
    let mut members = family.members().to_vec();
    members.sort();
    let mut sorted = Family::new();
    for m in members {
        sorted.insert(m, Provenance::Singleton);
    }
    sorted
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { file, algorithm, force_connected, check, parallel, budget } => {
            let inst = read_instance(&file)?;
            let opts = SolveOptions::exhaustive().with_parallel(parallel).with_budget(budget);
            let start = Instant::now();
            let (name, solution, exhaustive) = match (algorithm, force_connected) {
                (Algorithm::Oracle, true) => {
                    return Err(Failure::usage("--force-connected needs --algorithm paper"));
                }
                (Algorithm::Oracle, false) => ("oracle", oracle_solve_capped(&inst, None)?, true),
                (Algorithm::Paper, true) => {
                    require_p5_free(&inst)?;
                    let outcome = solve_connected_case_with(&inst, &opts);
                    ("paper-connected", outcome.value, outcome.exhaustive)
                }
                (Algorithm::Paper, false) => {
                    let outcome = solve_full_with(&inst, &opts)?;
                    ("paper", outcome.solution, outcome.exhaustive)
                }
            };
            let elapsed = start.elapsed();
            if check {
                verify_solution(&inst, &solution).map_err(|v| Failure::mismatch(format!("self-check failed: {v}")))?;
            }
            let report = RunReport::new(name, &inst, &solution, elapsed, exhaustive);
            out.write_all(report.render().as_bytes())?;
        }
        Command::Verify { instance, solution } => {
            let inst = read_instance(&instance)?;
            let sol = parse_solution(&read_text(&solution)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", solution.display())))?;
            verify_solution(&inst, &sol).map_err(|v| Failure::mismatch(format!("invalid: {v}")))?;
            writeln!(out, "valid weight {}", p5hom::format_weight(&sol.weight))?;
        }
        Command::Family { file } => {
            let inst = read_instance(&file)?;
            let family = sorted_family(&build_family(&inst)?);
            for member in family.members() {
                writeln!(out, "{}", ids(&member.to_vec()))?;
            }
        }
        Command::Blob { file } => {
            let inst = read_instance(&file)?;
            let family = sorted_family(&build_family(&inst)?);
            let blob = build_blob_graph(&inst, &family);
            writeln!(out, "# {} members, {} blob edges", blob.members.len(), blob.weighted.graph.edge_count())?;
            for (i, member) in blob.members.iter().enumerate() {
                let w = p5hom::format_weight(&blob.weighted.weights[i]);
                writeln!(out, "member {} weight {w} : {}", i + 1, ids(&member.to_vec()))?;
            }
            for (a, b) in blob.weighted.graph.edges() {
                writeln!(out, "edge {} {}", a + 1, b + 1)?;
            }
            let (chosen, weight) = solve_mwis(&blob.weighted);
            writeln!(out, "selected {}", ids(&chosen.to_vec()))?;
            writeln!(out, "weight {}", p5hom::format_weight(&weight))?;
        }
        Command::Gen { family, n, k, pattern, density, seed, list_density, max_weight, max_denominator } => {
            let family = match family {
                FamilyArg::Cograph => GraphFamily::Cograph,
                FamilyArg::Split => GraphFamily::Split,
                FamilyArg::Random => GraphFamily::RandomP5Free,
            };
            let pattern = match pattern {
                PatternArg::Complete => PatternSpec::Complete(k),
                PatternArg::Path => PatternSpec::Path(k),
            };
            if max_weight == 0 || max_denominator == 0 {
                return Err(Failure::usage("--max-weight and --max-denominator must be positive"));
            }
            let mut spec = GenSpec::new(family, n, pattern, seed);
            spec.density = density;
            spec.list_density = list_density;
            spec.weight_numerators = (1, max_weight);
            spec.max_denominator = max_denominator;
            let inst = generate(&spec)?;
            writeln!(
                out,
                "# gen family={} n={n} pattern={} density={} seed={seed} list-density={}",
                spec.family, spec.pattern, spec.density, spec.list_density
            )?;
            out.write_all(write_instance(&inst).as_bytes())?;
        }
        Command::Difftest { trials, max_n, pattern, seed, parallel, findings } => {
            pattern.build()?;
            if max_n == 0 {
                return Err(Failure::usage("--max-n must be positive"));
            }
            let config = difftest::Config { trials, max_n, pattern, seed, parallel, findings };
            let summary = difftest::run(&config, out)?;
            if summary.failures > 0 {
                return Err(Failure::mismatch(format!("{} trial(s) failed", summary.failures)));
            }
        }
        Command::CheckP5free { file } => {
            let inst = read_instance(&file)?;
            require_p5_free(&inst)?;
            writeln!(out, "P5-free")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let _ = out.flush();
            eprintln!("error: {}", failure.message);
            if failure.code == 3 {
                // The witness also goes to stdout so scripts can parse it.
                let _ = writeln!(out, "{}", failure.message);
            }
            ExitCode::from(failure.code)
        }
    }
}
