//! Line-oriented text formats for instances and solutions.
//!
//! Instance:
//!
//! ```text
//! # comment
//! H 2
//! HEDGE 1 2
//! G 3
//! GEDGE 1 2
//! WT 1 3/2
//! LIST 3 2
//! ```
//!
//! Ids are 1-based, `H` precedes `G`, weights default to 1 and lists to
//! all colors. `LIST u` with no colors gives `u` an empty list.
//!
//! Solution: `weight p/q` followed by `vertex <id> <color>` lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{ColorSet, Instance, PatternGraph, Solution};
use crate::Weight;

/// Always `p/q`, so integers print as `4/1`.
pub fn format_weight(w: &Weight) -> String {
    format!("{}/{}", w.numer(), w.denom())
}

/// Accepts `p` or `p/q` with a nonzero `q`. Negative values parse; callers
/// decide whether they are allowed.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let bad = || Error::InvalidArgument(format!("bad weight {s:?}"));
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Weight::new(p, q))
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }
}

impl<'a> Iterator for Lines<'a> {
    /// (1-based line number, whitespace-separated tokens)
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if !tokens.is_empty() {
                return Some((i + 1, tokens));
            }
        }
        None
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn expect_args(line: usize, tokens: &[&str], count: usize) -> Result<()> {
    if tokens.len() != count + 1 {
        return Err(parse_err(line, format!("{} takes {count} argument(s), got {}", tokens[0], tokens.len() - 1)));
    }
    Ok(())
}

fn count_arg(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, got {tok:?}")))
}

/// Parses a 1-based id in `1..=bound` and returns it 0-based.
fn id_arg(line: usize, tok: &str, bound: usize, what: &str) -> Result<usize> {
    let id: usize = tok.parse().map_err(|_| parse_err(line, format!("expected a {what} id, got {tok:?}")))?;
    if id == 0 || id > bound {
        return Err(parse_err(line, format!("{what} id {id} is out of range 1..={bound}")));
    }
    Ok(id - 1)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut pattern: Option<PatternGraph> = None;
    let mut inst: Option<Instance> = None;
    for (line, tokens) in Lines::new(text) {
        match tokens[0] {
            "H" => {
                expect_args(line, &tokens, 1)?;
                if pattern.is_some() {
                    return Err(parse_err(line, "H given twice"));
                }
                let k = count_arg(line, tokens[1])?;
                pattern = Some(PatternGraph::new(k).map_err(|e| parse_err(line, e.to_string()))?);
            }
            "HEDGE" => {
                expect_args(line, &tokens, 2)?;
                if inst.is_some() {
                    return Err(parse_err(line, "HEDGE after G"));
                }
                let h = pattern.as_mut().ok_or_else(|| parse_err(line, "HEDGE before H"))?;
                let a = id_arg(line, tokens[1], h.k(), "color")?;
                let b = id_arg(line, tokens[2], h.k(), "color")?;
                h.add_edge(a, b).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "G" => {
                expect_args(line, &tokens, 1)?;
                if inst.is_some() {
                    return Err(parse_err(line, "G given twice"));
                }
                let h = pattern.take().ok_or_else(|| parse_err(line, "G before H"))?;
                let n = count_arg(line, tokens[1])?;
                inst = Some(Instance::new(Graph::new(n), h));
            }
            "GEDGE" => {
                expect_args(line, &tokens, 2)?;
                let inst = inst.as_mut().ok_or_else(|| parse_err(line, "GEDGE before G"))?;
                let u = id_arg(line, tokens[1], inst.n(), "vertex")?;
                let v = id_arg(line, tokens[2], inst.n(), "vertex")?;
                inst.graph.add_edge(u, v).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "WT" => {
                expect_args(line, &tokens, 2)?;
                let inst = inst.as_mut().ok_or_else(|| parse_err(line, "WT before G"))?;
                let u = id_arg(line, tokens[1], inst.n(), "vertex")?;
                let w = parse_weight(tokens[2]).map_err(|e| parse_err(line, e.to_string()))?;
                inst.set_weight(u, w).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "LIST" => {
                if tokens.len() < 2 {
                    return Err(parse_err(line, "LIST needs a vertex id"));
                }
                let inst = inst.as_mut().ok_or_else(|| parse_err(line, "LIST before G"))?;
                let u = id_arg(line, tokens[1], inst.n(), "vertex")?;
                let mut list = ColorSet::EMPTY;
                for tok in &tokens[2..] {
                    list.insert(id_arg(line, tok, inst.k(), "color")?);
                }
                inst.set_list(u, list).map_err(|e| parse_err(line, e.to_string()))?;
            }
            other => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }
    inst.ok_or_else(|| parse_err(0, "missing G line"))
}

/// Writes only non-default weights and lists.
pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let h = &inst.pattern;
    writeln!(out, "H {}", h.k()).unwrap();
    for (a, b) in h.edges() {
        writeln!(out, "HEDGE {} {}", a + 1, b + 1).unwrap();
    }
    writeln!(out, "G {}", inst.n()).unwrap();
    for (u, v) in inst.graph.edges() {
        writeln!(out, "GEDGE {} {}", u + 1, v + 1).unwrap();
    }
    for (v, w) in inst.weights().iter().enumerate() {
        if !w.is_one() {
            let text = if w.is_integer() { w.numer().to_string() } else { format_weight(w) };
            writeln!(out, "WT {} {text}", v + 1).unwrap();
        }
    }
    let full = h.colors();
    for (v, &list) in inst.lists().iter().enumerate() {
        if list != full {
            write!(out, "LIST {}", v + 1).unwrap();
            for c in list.iter() {
                write!(out, " {}", c + 1).unwrap();
            }
            out.push('\n');
        }
    }
    out
}

/// Colors and ids are range-checked only against `n` and `k` when given;
/// consistency with an instance is [`crate::verify_solution`]'s job.
pub fn parse_solution(text: &str) -> Result<Solution> {
    let mut weight: Option<Weight> = None;
    let mut coloring = BTreeMap::new();
    for (line, tokens) in Lines::new(text) {
        match tokens[0] {
            "weight" => {
                expect_args(line, &tokens, 1)?;
                if weight.is_some() {
                    return Err(parse_err(line, "weight given twice"));
                }
                let w = parse_weight(tokens[1]).map_err(|e| parse_err(line, e.to_string()))?;
                if w.is_negative() {
                    return Err(parse_err(line, "negative weight"));
                }
                weight = Some(w);
            }
            "vertex" => {
                expect_args(line, &tokens, 2)?;
                let v = id_arg(line, tokens[1], usize::MAX, "vertex")?;
                let c = id_arg(line, tokens[2], usize::MAX, "color")?;
                if coloring.insert(v, c).is_some() {
                    return Err(parse_err(line, format!("vertex {} colored twice", v + 1)));
                }
            }
            other => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }
    let weight = weight.ok_or_else(|| parse_err(0, "missing weight line"))?;
    Ok(Solution { coloring, weight })
}

pub fn write_solution(sol: &Solution) -> String {
    let mut out = format!("weight {}\n", format_weight(&sol.weight));
    for (&v, &c) in &sol.coloring {
        writeln!(out, "vertex {} {}", v + 1, c + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# two colors, one edge
H 2
HEDGE 1 2
G 3
GEDGE 1 2
GEDGE 2 1   # duplicate
WT 1 3/2
WT 2 4
LIST 3
";

    #[test]
    fn parses_sample() {
        let inst = parse_instance(SAMPLE).unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.graph.edge_count(), 1);
        assert_eq!(inst.weight(0), &Weight::new(3.into(), 2.into()));
        assert_eq!(inst.weight(1), &Weight::from_integer(4.into()));
        assert_eq!(inst.weight(2), &Weight::one());
        assert!(inst.list(2).is_empty());
        assert_eq!(inst.list(0), ColorSet::full(2));
    }

    #[test]
    fn round_trip() {
        let inst = parse_instance(SAMPLE).unwrap();
        assert_eq!(parse_instance(&write_instance(&inst)).unwrap(), inst);
    }

    #[test]
    fn errors_carry_lines() {
        let cases = [
            ("H 2\nHEDGE 1 1\n", 2),
            ("G 2\n", 1),
            ("H 2\nG 2\nGEDGE 1 3\n", 3),
            ("H 2\nG 2\n\nWT 1 -1\n", 4),
            ("H 2\nG 2\nLIST 1 3\n", 3),
            ("H 2\nG 2\nFOO\n", 3),
            ("H 2\nG 2\nGEDGE 1 1\n", 3),
        ];
        for (text, line) in cases {
            match parse_instance(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn weights() {
        assert_eq!(format_weight(&Weight::from_integer(4.into())), "4/1");
        assert_eq!(parse_weight("6/4").unwrap(), Weight::new(3.into(), 2.into()));
        assert!(parse_weight("1/0").is_err());
        assert!(parse_weight("x").is_err());
    }

    #[test]
    fn solution_round_trip() {
        let sol =
            Solution { coloring: [(0, 1), (2, 0)].into_iter().collect(), weight: Weight::new(5.into(), 2.into()) };
        let text = write_solution(&sol);
        assert_eq!(text, "weight 5/2\nvertex 1 2\nvertex 3 1\n");
        assert_eq!(parse_solution(&text).unwrap(), sol);
    }
}
