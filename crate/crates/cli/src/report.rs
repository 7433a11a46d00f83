use std::fmt::Write as _;
use std::time::Duration;

use sha2::{Digest, Sha256};

use p5hom::{format_weight, write_instance, write_solution, Instance, Solution};

/// Summary of one `solve` run. Rendered as `#` comment lines followed by
/// the solution itself, so the whole output is a valid solution file.
pub struct RunReport {
    pub algorithm: String,
    pub weight: String,
    pub chosen: Vec<(usize, usize)>,
    pub wall_time: Duration,
    pub exhaustive: bool,
    /// SHA-256 of the canonical instance text.
    pub digest: String,
    solution: String,
}

pub fn instance_digest(inst: &Instance) -> String {
    hex::encode(Sha256::digest(write_instance(inst).as_bytes()))
}

impl RunReport {
    pub fn new(algorithm: &str, inst: &Instance, sol: &Solution, wall_time: Duration, exhaustive: bool) -> Self {
        RunReport {
            algorithm: algorithm.to_string(),
            weight: format_weight(&sol.weight),
            chosen: sol.coloring.iter().map(|(&v, &c)| (v + 1, c + 1)).collect(),
            wall_time,
            exhaustive,
            digest: instance_digest(inst),
            solution: write_solution(sol),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# algorithm: {}", self.algorithm).unwrap();
        writeln!(out, "# weight: {}", self.weight).unwrap();
        writeln!(out, "# chosen: {}", self.chosen.len()).unwrap();
        writeln!(out, "# wall_time_ms: {:.3}", self.wall_time.as_secs_f64() * 1e3).unwrap();
        writeln!(out, "# exhaustive: {}", self.exhaustive).unwrap();
        writeln!(out, "# instance_sha256: {}", self.digest).unwrap();
        out.push_str(&self.solution);
        out
    }
}
