//! The `linkhom` command line.
//!
//! [`run`] is the whole program minus process plumbing: it takes the
//! arguments and standard input and returns the exit code with everything
//! that would be written to stdout and stderr. Every command prints a single
//! JSON document; `equiv --jsonl` prints one JSON line per input line.
//!
//! Exit codes: 0 success (or "equivalent"/"found"), 1 a negative answer,
//! 2 bad input or usage.

pub mod json;

use std::ffi::OsString;
use std::io::Read;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::decide::{canonical_form, decide_equiv, Verdict};
use crate::error::{Error, Result};
use crate::form::ClasperForm;
use crate::intlin::smith_normal_form;
use crate::invariants::{
    applicability, case_invariants, milnor_profile, sublink3, Family, LINKING_LABELS, QUADRUPLE_LABELS, TRIPLE_LABELS,
};
use crate::moves::{apply_word, clasper_to_levine};
use crate::oracle::{bounded_bfs, SearchConfig};

use json::{
    clasper_to_json, int_to_json, ints_to_json, levine_to_json, matrix_to_json, parse_instance, parse_instance_value,
    parse_matrix, parse_word, report_to_json, residue_to_json, word_to_json,
};

/// What the program printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(code: i32, v: &Value) -> Self {
        Outcome { code, stdout: format!("{v}\n"), stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

#[derive(Parser, Debug)]
#[command(name = "linkhom", version, about = "Link-homotopy classes of 4-component links as integer 12-tuples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether two tuples are link-homotopic.
    Equiv {
        /// First instance (file path, `-` for stdin, or inline JSON).
        a: Option<String>,
        b: Option<String>,
        /// Read pairs from a JSON-lines file: `{"a": .., "b": ..}` or `[a, b]` per line.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        jsonl: Option<String>,
    },
    /// Apply a move word to a tuple.
    Apply {
        a: String,
        /// Word document (file path or inline JSON).
        #[arg(long)]
        word: String,
        /// Compare the result with this instance; exit 1 on mismatch.
        #[arg(long)]
        check: Option<String>,
    },
    /// Canonical representative of the orbit of a tuple.
    Canon { a: String },
    /// Complete invariants of every applicable family, or of one family.
    Invariants {
        a: String,
        #[arg(long)]
        family: Option<String>,
    },
    /// The twelve Milnor homotopy invariants.
    Milnor { a: String },
    /// Convert between the clasper and Levine encodings.
    Convert {
        a: String,
        #[arg(long, value_enum)]
        to: FormKind,
    },
    /// The 3-component sublink obtained by deleting a component.
    Sublink {
        a: String,
        #[arg(long)]
        drop: u8,
    },
    /// Bounded breadth-first search for a move word from A to B.
    Oracle {
        a: String,
        b: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 32)]
        bound: u64,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        /// Row-major JSON matrix (file path or inline JSON).
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormKind {
    Clasper,
    Levine,
}

/// Run the program on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let mut input = Input { stdin, used: false };
    match dispatch(cli.command, &mut input) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}

/// Resolves command-line sources: `-` is stdin (once), text starting with
/// `{` or `[` is inline JSON, anything else a file path.
struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn read(&mut self, source: &str) -> Result<String> {
        let trimmed = source.trim_start();
        if trimmed.starts_with('{') || trimmed.starts_with('[') {
            return Ok(source.to_string());
        }
        if source == "-" {
            if self.used {
                return Err(Error::usage("standard input can be read only once"));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Error::parse("-", e.to_string()))?;
            return Ok(s);
        }
        std::fs::read_to_string(Path::new(source)).map_err(|e| Error::parse(source, e.to_string()))
    }

    fn clasper(&mut self, source: &str) -> Result<ClasperForm> {
        let text = self.read(source)?;
        parse_instance(&text).map(|d| d.instance.to_clasper()).map_err(|e| in_source(source, e))
    }
}

fn in_source(source: &str, e: Error) -> Error {
    match e {
        Error::Parse { path, message } if !source.trim_start().starts_with(['{', '[']) => {
            Error::Parse { path: format!("{source}: {path}"), message }
        }
        other => other,
    }
}

fn dispatch(cmd: Command, input: &mut Input<'_>) -> Result<Outcome> {
    match cmd {
        Command::Equiv { jsonl: Some(src), .. } => {
            let text = input.read(&src)?;
            Ok(batch_equiv(&text))
        }
        Command::Equiv { a: Some(a), b: Some(b), .. } => {
            let (l1, l2) = (input.clasper(&a)?, input.clasper(&b)?);
            let verdict = decide_equiv(&l1, &l2);
            Ok(Outcome::json(if verdict.is_equivalent() { 0 } else { 1 }, &verdict_json(&verdict)))
        }
        Command::Equiv { .. } => Err(Error::usage("equiv needs two instances or --jsonl")),
        Command::Apply { a, word, check } => {
            let l = input.clasper(&a)?;
            let w = parse_word(&input.read(&word)?).map_err(|e| in_source(&word, e))?;
            let out = apply_word(&l, &w);
            let mut doc = clasper_to_json(&out);
            let mut code = 0;
            if let Some(b) = check {
                let matches = out == input.clasper(&b)?;
                doc["matches"] = Value::Bool(matches);
                code = if matches { 0 } else { 1 };
            }
            Ok(Outcome::json(code, &doc))
        }
        Command::Canon { a } => {
            let cf = canonical_form(&input.clasper(&a)?);
            Ok(Outcome::json(
                0,
                &json!({ "c": ints_to_json(&cf.c), "f_star": ints_to_json(&cf.f_star), "t_star": ints_to_json(&cf.t_star) }),
            ))
        }
        Command::Invariants { a, family } => {
            let l = input.clasper(&a)?;
            let doc = match family {
                Some(id) => report_to_json(&case_invariants(&l, id.parse::<Family>()?)?),
                None => {
                    let fams = applicability(&l);
                    let reports: Vec<Value> =
                        fams.iter().map(|f| report_to_json(&case_invariants(&l, *f).expect("applicable"))).collect();
                    json!({ "applicable": fams.iter().map(|f| f.id()).collect::<Vec<_>>(), "reports": reports })
                }
            };
            Ok(Outcome::json(0, &doc))
        }
        Command::Milnor { a } => Ok(Outcome::json(0, &milnor_json(&input.clasper(&a)?))),
        Command::Convert { a, to } => {
            let l = input.clasper(&a)?;
            let doc = match to {
                FormKind::Clasper => clasper_to_json(&l),
                FormKind::Levine => {
                    let (t, w) = clasper_to_levine(&l);
                    let mut doc = levine_to_json(&t);
                    doc["word"] = word_to_json(&w);
                    doc
                }
            };
            Ok(Outcome::json(0, &doc))
        }
        Command::Sublink { a, drop } => {
            let s = sublink3(&input.clasper(&a)?, drop)?;
            Ok(Outcome::json(
                0,
                &json!({ "components": s.components, "linking": ints_to_json(&s.linking), "triple": residue_to_json(&s.triple) }),
            ))
        }
        Command::Oracle { a, b, depth, bound } => {
            if depth == 0 || bound == 0 {
                return Err(Error::usage("--depth and --bound must be positive"));
            }
            let (l1, l2) = (input.clasper(&a)?, input.clasper(&b)?);
            let cfg = SearchConfig { max_depth: depth, coord_bound: bound, seed: 0 };
            Ok(match bounded_bfs(&l1, &l2, &cfg) {
                Some(w) => Outcome::json(0, &json!({ "found": true, "word": word_to_json(&w), "pretty": w.pretty() })),
                None => Outcome::json(1, &json!({ "found": false })),
            })
        }
        Command::Snf { matrix } => {
            let m = parse_matrix(&input.read(&matrix)?).map_err(|e| in_source(&matrix, e))?;
            let s = smith_normal_form(&m);
            Ok(Outcome::json(
                0,
                &json!({
                    "d": matrix_to_json(&s.d),
                    "p": matrix_to_json(&s.p),
                    "q": matrix_to_json(&s.q),
                    "elementary_divisors": ints_to_json(&s.elementary_divisors()),
                    "rank": s.rank(),
                }),
            ))
        }
    }
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Equivalent { certificate } => {
            json!({ "equivalent": true, "certificate": word_to_json(certificate), "pretty": certificate.pretty() })
        }
        Verdict::NotEquivalent { stage } => json!({ "equivalent": false, "stage": stage.as_str() }),
    }
}

fn milnor_json(l: &ClasperForm) -> Value {
    let p = milnor_profile(l);
    let mut linking = Map::new();
    for (label, v) in LINKING_LABELS.iter().zip(&p.linking) {
        linking.insert((*label).into(), int_to_json(v));
    }
    let mut triple = Map::new();
    for (label, v) in TRIPLE_LABELS.iter().zip(&p.triple) {
        triple.insert((*label).into(), residue_to_json(v));
    }
    let mut quadruple = Map::new();
    for (label, v) in QUADRUPLE_LABELS.iter().zip(&p.quadruple) {
        quadruple.insert((*label).into(), residue_to_json(v));
    }
    json!({ "linking": linking, "triple": triple, "quadruple": quadruple, "delta4": int_to_json(p.delta4()) })
}

fn parse_pair_line(line: &str) -> Result<(ClasperForm, ClasperForm)> {
    let v: Value = serde_json::from_str(line).map_err(|e| Error::parse("$", format!("invalid JSON: {e}")))?;
    let (a, b) = match &v {
        Value::Array(xs) if xs.len() == 2 => (&xs[0], &xs[1]),
        Value::Object(o) => {
            if let Some(k) = o.keys().find(|k| k.as_str() != "a" && k.as_str() != "b") {
                return Err(Error::parse(k.as_str(), "unknown field"));
            }
            (o.get("a").ok_or_else(|| Error::parse("a", "missing field"))?, o.get("b").ok_or_else(|| Error::parse("b", "missing field"))?)
        }
        _ => return Err(Error::parse("$", "expected {\"a\": .., \"b\": ..} or a 2-element array")),
    };
    let prefix = |side: &str, e: Error| match e {
        Error::Parse { path, message } => Error::Parse { path: format!("{side}.{path}"), message },
        other => other,
    };
    let a = parse_instance_value(a).map_err(|e| prefix("a", e))?.instance.to_clasper();
    let b = parse_instance_value(b).map_err(|e| prefix("b", e))?.instance.to_clasper();
    Ok((a, b))
}

/// One output line per non-blank input line, in input order. Lines are
/// decided in parallel. Exits 2 if any line was malformed, else 0.
fn batch_equiv(text: &str) -> Outcome {
    let lines: Vec<(usize, &str)> =
        text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty()).collect();
    let results: Vec<(Value, bool)> = lines
        .par_iter()
        .map(|(n, line)| match parse_pair_line(line) {
            Ok((a, b)) => {
                let mut v = verdict_json(&decide_equiv(&a, &b));
                v.as_object_mut().expect("object").insert("line".into(), json!(n));
                (v, true)
            }
            Err(e) => (json!({ "line": n, "error": e.to_string() }), false),
        })
        .collect();
    let mut out = Outcome { code: 0, stdout: String::new(), stderr: String::new() };
    for (v, ok) in results {
        out.stdout.push_str(&v.to_string());
        out.stdout.push('\n');
        if !ok {
            out.code = 2;
        }
    }
    out
}
