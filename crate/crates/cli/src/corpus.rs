//! Corpus files: `id <TAB> task <TAB> params <TAB> braid`, `#` comments.
//!
//! `params` is `-` or a comma-separated list of `key=value` pairs and bare
//! flags, e.g. `t=4,assert-pa` or `n=2,c=1/4..1/2,assert-hyperbolic`.

use std::collections::{HashMap, HashSet};

use braidcert::braid::BraidWord;
use braidcert::certify::Hypotheses;
use braidcert::dehornoy::ReductionBudget;
use braidcert::fdtc::default_tolerance;
use braidcert::rational::parse_rational;
use rayon::prelude::*;

use crate::error::CliError;
use crate::report::Record;
use crate::task::{parse_fdtc_value, run_task, Task};

pub struct Entry {
    pub id: String,
    pub task: Task,
    pub braid: Option<BraidWord>,
    pub input: String,
}

struct Params {
    values: HashMap<String, String>,
    flags: HashSet<String>,
    line: usize,
}

impl Params {
    fn parse(s: &str, line: usize) -> Params {
        let mut p = Params {
            values: HashMap::new(),
            flags: HashSet::new(),
            line,
        };
        if s.trim() == "-" {
            return p;
        }
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            match item.split_once('=') {
                Some((k, v)) => {
                    p.values.insert(k.trim().to_string(), v.trim().to_string());
                }
                None => {
                    p.flags.insert(item.to_string());
                }
            }
        }
        p
    }

    fn err(&self, message: String) -> CliError {
        CliError::Corpus {
            line: self.line,
            message,
        }
    }

    fn raw(&self, key: &str) -> Result<&str, CliError> {
        self.values
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| self.err(format!("missing parameter `{key}`")))
    }

    fn int<T: std::str::FromStr>(&self, key: &str) -> Result<T, CliError> {
        let raw = self.raw(key)?;
        raw.parse()
            .map_err(|_| self.err(format!("parameter `{key}` must be an integer, got `{raw}`")))
    }

    fn opt_int<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        if self.values.contains_key(key) {
            self.int(key).map(Some)
        } else {
            Ok(None)
        }
    }

    fn flag(&self, name: &str) -> bool {
        self.flags.contains(name)
    }

    fn hypotheses(&self) -> Hypotheses {
        Hypotheses {
            hyperbolic: self.flag("assert-hyperbolic"),
            irreducible: self.flag("assert-irreducible"),
            pseudo_anosov: self.flag("assert-pa"),
            fdtc_nonzero: self.flag("assert-nonzero"),
        }
    }

    fn tol(&self) -> Result<braidcert::rational::Rational, CliError> {
        match self.values.get("tol") {
            Some(t) => Ok(parse_rational(t)?),
            None => Ok(default_tolerance()),
        }
    }

    fn task(&self, name: &str) -> Result<Task, CliError> {
        let hyp = self.hypotheses();
        Ok(match name {
            "order" => Task::Order {
                other: match self.values.get("with") {
                    Some(w) => Some(w.parse().map_err(|e| CliError::at_line(e, self.line, 0))?),
                    None => None,
                },
            },
            "floor" => Task::Floor,
            "fdtc" => Task::Fdtc { tol: self.tol()? },
            "classify3" => Task::Classify3,
            "lspace2" => Task::LSpace2,
            "cover" | "certify-cover" => Task::Cover {
                t: self.int("t")?,
                tol: self.tol()?,
                hyp,
            },
            "genus1" | "certify-genus1" => Task::Genus1 {
                n: self.int("n")?,
                hyp,
            },
            "surgery" | "certify-surgery" => Task::Surgery {
                c: parse_fdtc_value(self.raw("c")?)?,
                n: self.int("n")?,
                q: self.int("q")?,
                genus: self.opt_int("genus")?,
                cone: self.opt_int("cone")?,
                hyp,
            },
            "satellite" | "certify-satellite" => Task::Satellite {
                c: parse_fdtc_value(self.raw("c")?)?,
                companion_zero: self.flag("companion-zero"),
                n: self.int("n")?,
                hyp,
            },
            other => return Err(self.err(format!("unknown task `{other}`"))),
        })
    }
}

/// Parses one non-comment line; `line` is 1-based.
pub fn parse_line(text: &str, line: usize) -> Result<Entry, CliError> {
    let fields: Vec<&str> = text.split('\t').collect();
    let [id, task, params, braid] = fields[..] else {
        return Err(CliError::Corpus {
            line,
            message: format!("expected 4 tab-separated fields, found {}", fields.len()),
        });
    };
    let task = Params::parse(params, line).task(task.trim())?;
    let braid = if braid.trim() == "-" && !task.needs_braid() {
        None
    } else {
        let offset = text.chars().count() - braid.chars().count();
        Some(
            braid
                .parse()
                .map_err(|e| CliError::at_line(e, line, offset))?,
        )
    };
    Ok(Entry {
        id: id.trim().to_string(),
        task,
        braid,
        input: braid_text(text),
    })
}

fn braid_text(line: &str) -> String {
    line.rsplit('\t')
        .next()
        .unwrap_or_default()
        .trim()
        .to_string()
}

/// Runs every entry, in parallel, and returns records in input order.
pub fn run_corpus(text: &str, budget: &ReductionBudget) -> Vec<Record> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .collect();
    let mut seen = HashSet::new();
    let duplicate: Vec<bool> = lines
        .iter()
        .map(|(_, l)| !seen.insert(l.split('\t').next().unwrap_or_default().trim().to_string()))
        .collect();
    lines
        .par_iter()
        .zip(duplicate.par_iter())
        .map(|(&(line, l), &dup)| {
            let fallback_id = l.split('\t').next().map(|s| s.trim().to_string());
            let fallback_task = l.split('\t').nth(1).unwrap_or("?").trim().to_string();
            if dup {
                let message = format!("duplicate id `{}`", fallback_id.clone().unwrap_or_default());
                return Record {
                    id: fallback_id,
                    task: fallback_task,
                    input: Some(braid_text(l)),
                    outcome: Err(CliError::Corpus { line, message }),
                };
            }
            match parse_line(l, line) {
                Ok(entry) => Record {
                    outcome: run_task(&entry.task, entry.braid.as_ref(), budget),
                    id: Some(entry.id),
                    task: entry.task.name().to_string(),
                    input: Some(entry.input),
                },
                Err(e) => Record {
                    id: fallback_id,
                    task: fallback_task,
                    input: Some(braid_text(l)),
                    outcome: Err(e),
                },
            }
        })
        .collect()
}
