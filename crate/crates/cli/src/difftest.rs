use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use p5hom::{
    format_weight, generate, oracle_solve_capped, solve_connected_case, solve_full, trial_spec, verify_solution,
    write_instance, write_solution, Error, Instance, PatternSpec, Solution,
};

use crate::Failure;

pub struct Config {
    pub trials: u64,
    pub max_n: usize,
    pub pattern: PatternSpec,
    pub seed: u64,
    pub parallel: usize,
    pub findings: PathBuf,
}

#[derive(Default)]
pub struct Summary {
    pub ok: u64,
    pub gaps: u64,
    pub skipped: u64,
    pub failures: u64,
}

enum Verdict {
    Ok,
    /// Valid but below the oracle on a non-complete pattern.
    Gap(Box<Finding>),
    Skipped(String),
    Failed(String, Option<Box<Finding>>),
}

struct Finding {
    inst: Instance,
    oracle: Solution,
    found: Solution,
}

fn judge(inst: &Instance, label: &str, sol: &Solution, oracle: &Solution) -> Result<bool, String> {
    verify_solution(inst, sol).map_err(|v| format!("{label} returned an invalid solution: {v}"))?;
    if sol.weight > oracle.weight {
        return Err(format!(
            "{label} weight {} exceeds oracle {}",
            format_weight(&sol.weight),
            format_weight(&oracle.weight)
        ));
    }
    Ok(sol.weight == oracle.weight)
}

fn trial(config: &Config, index: u64, complete: bool) -> Verdict {
    let spec = trial_spec(config.seed, index, config.max_n, config.pattern.clone());
    let inst = match generate(&spec) {
        Ok(inst) => inst,
        Err(Error::GeneratorExhausted(tries)) => {
            return Verdict::Skipped(format!("no P5-free graph after {tries} tries"));
        }
        Err(e) => return Verdict::Failed(format!("generator: {e}"), None),
    };
    let oracle = match oracle_solve_capped(&inst, None) {
        Ok(sol) => sol,
        Err(e) => return Verdict::Failed(format!("oracle: {e}"), None),
    };
    let full = match solve_full(&inst) {
        Ok(sol) => sol,
        Err(e) => return Verdict::Failed(format!("solve_full: {e}"), None),
    };
    let connected = solve_connected_case(&inst);
    let finding =
        |found: &Solution| Some(Box::new(Finding { inst: inst.clone(), oracle: oracle.clone(), found: found.clone() }));
    if let Err(message) = judge(&inst, "solve_connected_case", &connected, &oracle) {
        return Verdict::Failed(message, finding(&connected));
    }
    match judge(&inst, "solve_full", &full, &oracle) {
        Err(message) => Verdict::Failed(message, finding(&full)),
        Ok(true) => Verdict::Ok,
        Ok(false) if complete => Verdict::Failed(
            format!("solve_full weight {} below oracle {}", format_weight(&full.weight), format_weight(&oracle.weight)),
            finding(&full),
        ),
        Ok(false) => Verdict::Gap(finding(&full).unwrap()),
    }
}

fn dump(config: &Config, index: u64, kind: &str, f: &Finding) -> std::io::Result<PathBuf> {
    fs::create_dir_all(&config.findings)?;
    let path = config.findings.join(format!("{kind}-seed{}-trial{index}.txt", config.seed));
    let mut text = format!(
        "# {kind}: pattern {} seed {} trial {index}\n# oracle {} solver {}\n",
        config.pattern,
        config.seed,
        format_weight(&f.oracle.weight),
        format_weight(&f.found.weight)
    );
    text.push_str(&write_instance(&f.inst));
    for (label, sol) in [("oracle", &f.oracle), ("solver", &f.found)] {
        text.push_str(&format!("# {label} solution:\n"));
        for line in write_solution(sol).lines() {
            text.push_str(&format!("#   {line}\n"));
        }
    }
    fs::write(&path, text)?;
    Ok(path)
}

pub fn run(config: &Config, out: &mut impl Write) -> Result<Summary, Failure> {
    let complete = config.pattern.is_complete();
    let next = AtomicU64::new(0);
    let verdicts: Mutex<Vec<(u64, Verdict)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..config.parallel.max(1) {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= config.trials {
                    break;
                }
                let verdict = trial(config, index, complete);
                verdicts.lock().unwrap().push((index, verdict));
            });
        }
    });
    let mut verdicts = verdicts.into_inner().unwrap();
    verdicts.sort_by_key(|(index, _)| *index);

    let mut summary = Summary::default();
    for (index, verdict) in verdicts {
        match verdict {
            Verdict::Ok => summary.ok += 1,
            Verdict::Skipped(why) => {
                summary.skipped += 1;
                writeln!(out, "trial {index}: skipped: {why}")?;
            }
            Verdict::Gap(finding) => {
                summary.gaps += 1;
                let path = dump(config, index, "gap", &finding)?;
                writeln!(out, "trial {index}: gap recorded in {}", path.display())?;
            }
            Verdict::Failed(message, finding) => {
                summary.failures += 1;
                let saved = match finding {
                    Some(f) => format!(" (instance in {})", dump(config, index, "mismatch", &f)?.display()),
                    None => String::new(),
                };
                writeln!(out, "trial {index}: FAIL: {message}{saved}")?;
            }
        }
    }
    writeln!(
        out,
        "difftest pattern={} trials={} ok={} gaps={} skipped={} failures={}",
        config.pattern, config.trials, summary.ok, summary.gaps, summary.skipped, summary.failures
    )?;
    Ok(summary)
}
