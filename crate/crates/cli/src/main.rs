use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fourqubit::contraction::{builtin_pattern, evaluate, evaluate_naive, BUILTIN_NAMES};
use fourqubit::invariants::InvariantSet;
use fourqubit::monotones::{classify, monotone_set, MonotoneSet, DEFAULT_ZERO_TOL};
use fourqubit::report::{fmt_f64, json_complex};
use fourqubit::state::{gates, SingleQubitOp};
use fourqubit::verify::{self, Suite, SuiteConfig};
use fourqubit::{FourQubitState, LocalOperatorQuartet, OperatorKind, QubitPermutation, StandardState};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{Map, Value};

/// Invariants and entanglement monotones of four-qubit pure states.
#[derive(Parser)]
#[command(name = "fourqubit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print H, L, M, N, Dxt, Dxy, Dxz.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Print |F1|..|F5|, |F2'| and the class label.
    Monotones {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Zero threshold for the class label.
        #[arg(long, default_value_t = DEFAULT_ZERO_TOL)]
        tol: f64,
    },
    /// Print the class label and zero pattern.
    Classify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[arg(long, default_value_t = DEFAULT_ZERO_TOL)]
        tol: f64,
    },
    /// Relabel qubits: qubit q moves to slot p_q.
    Permute {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// 1-based images, e.g. 2,1,3,4.
        #[arg(long, value_name = "p1,p2,p3,p4")]
        perm: String,
    },
    /// Apply one 2x2 operator per qubit.
    Apply {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[command(flatten)]
        ops: OpsSource,
        /// Validation applied to the operators.
        #[arg(long, default_value = "general")]
        kind: String,
    },
    /// Inspect or evaluate a built-in contraction pattern.
    Pattern {
        #[command(subcommand)]
        action: PatternAction,
    },
    /// Print a seeded random state.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw a product state instead.
        #[arg(long)]
        product: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Run verification suites; exits 1 if any suite fails.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Comma-separated suite names; all suites when omitted.
        #[arg(long, value_name = "CSV")]
        suites: Option<String>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum PatternAction {
    /// Print the pairing terms, or list the pattern names.
    Show { name: Option<String> },
    /// Evaluate a pattern on a state.
    Eval {
        name: String,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Use the reference evaluator (degree 6 at most).
        #[arg(long)]
        naive: bool,
    },
}

/// State source; standard input when neither flag is given.
#[derive(Args)]
struct Input {
    /// Built-in state name.
    #[arg(long, value_name = "NAME", conflicts_with = "input")]
    state: Option<String>,
    /// State file, JSON or plain text.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Coefficients for pi1/pi2, complex entries as re+imj.
    #[arg(long, value_name = "LIST", requires = "state")]
    params: Option<String>,
    /// Normalize the state before computing.
    #[arg(long)]
    normalize: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct OpsSource {
    /// Gate names per qubit from I, X, Y, Z, H, e.g. H,I,I,X.
    #[arg(long, value_name = "G1,G2,G3,G4")]
    gates: Option<String>,
    /// JSON file {"ops": [four [[re,im],[re,im]] x2 matrices]}.
    #[arg(long, value_name = "FILE")]
    ops: Option<PathBuf>,
    /// Seed for a random quartet of the given kind.
    #[arg(long, value_name = "N")]
    random: Option<u64>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        Self(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether the command succeeded in the verification sense.
fn run(command: Command) -> Result<bool, InputError> {
    match command {
        Command::Invariants { input, output } => {
            let inv = InvariantSet::of(&input.load()?);
            let text = || {
                let rows = InvariantSet::NAMES
                    .iter()
                    .zip(inv.to_array())
                    .map(|(n, v)| vec![n.to_string(), fmt_f64(v.re), fmt_f64(v.im)]);
                table(&["name", "re", "im"], rows)
            };
            output.emit(inv.to_json(), text)?;
        }
        Command::Monotones { input, output, tol } => {
            let ms = monotone_set(&input.load()?);
            let text = || {
                let mut rows: Vec<Vec<String>> = MonotoneSet::NAMES
                    .iter()
                    .zip(ms.to_array())
                    .map(|(n, v)| vec![n.to_string(), fmt_f64(v)])
                    .collect();
                rows.push(vec!["class".into(), classify(&ms, tol).label.to_string()]);
                table(&["name", "value"], rows)
            };
            output.emit(ms.to_json(tol), text)?;
        }
        Command::Classify { input, output, tol } => {
            let sig = classify(&monotone_set(&input.load()?), tol);
            let names = ["F1", "F2prime", "F3"];
            let mut zeros = Map::new();
            for (n, z) in names.iter().zip(sig.zero_pattern) {
                zeros.insert((*n).into(), Value::Bool(z));
            }
            let mut map = Map::new();
            map.insert("class".into(), Value::from(sig.label.as_str()));
            map.insert("zero_pattern".into(), Value::Object(zeros));
            let text = || {
                let mut rows = vec![vec!["class".to_string(), sig.label.to_string()]];
                rows.extend(names.iter().zip(sig.zero_pattern).map(|(n, z)| {
                    vec![format!("{n} zero"), z.to_string()]
                }));
                table(&["field", "value"], rows)
            };
            output.emit(Value::Object(map), text)?;
        }
        Command::Permute { input, output, perm } => {
            let perm = QubitPermutation::from_str(&perm)?;
            output.emit_state(&input.load()?.apply_permutation(&perm))?;
        }
        Command::Apply {
            input,
            output,
            ops,
            kind,
        } => {
            let kind = OperatorKind::from_str(&kind)?;
            let quartet = ops.quartet(kind)?;
            output.emit_state(&input.load()?.apply_local_ops(&quartet)?)?;
        }
        Command::Pattern { action } => pattern(action)?,
        Command::Random { seed, product, output } => {
            let s = if product {
                FourQubitState::random_product(seed)
            } else {
                FourQubitState::random(seed)
            };
            output.emit_state(&s)?;
        }
        Command::Verify {
            seed,
            trials,
            tol,
            suites,
            output,
        } => {
            let suites = match suites {
                None => Suite::ALL.to_vec(),
                Some(csv) => csv
                    .split(',')
                    .map(|s| Suite::from_str(s.trim()))
                    .collect::<Result<_, _>>()?,
            };
            let report = verify::run(&SuiteConfig::new(seed, trials, tol, suites)?);
            let text = || {
                let rows = report.suites.iter().map(|(s, o)| {
                    vec![
                        s.to_string(),
                        if o.pass { "pass" } else { "FAIL" }.to_string(),
                        o.trials.to_string(),
                        fmt_f64(o.max_residual),
                        o.first_fail_seed.map_or("-".to_string(), |x| x.to_string()),
                    ]
                });
                let mut t = table(&["suite", "result", "trials", "max_residual", "first_fail_seed"], rows);
                t.push_str(if report.overall { "overall: pass\n" } else { "overall: FAIL\n" });
                t
            };
            output.emit(report.to_json(), text)?;
            return Ok(report.overall);
        }
    }
    Ok(true)
}

fn pattern(action: PatternAction) -> Result<(), InputError> {
    match action {
        PatternAction::Show { name: None } => {
            write_out(&None, &format!("{}\n", BUILTIN_NAMES.join("\n")))?;
        }
        PatternAction::Show { name: Some(name) } => {
            write_out(&None, &builtin_pattern(&name)?.to_string())?;
        }
        PatternAction::Eval {
            name,
            input,
            output,
            naive,
        } => {
            let p = builtin_pattern(&name)?;
            let s = input.load()?;
            let value = if naive { evaluate_naive(&s, &p)? } else { evaluate(&s, &p) };
            let mut map = Map::new();
            map.insert("pattern".into(), Value::from(name.as_str()));
            map.insert("degree".into(), Value::from(p.degree()));
            map.insert("evaluator".into(), Value::from(if naive { "naive" } else { "fast" }));
            map.insert("value".into(), json_complex(value));
            let text = || {
                let row = vec![name.clone(), p.degree().to_string(), fmt_f64(value.re), fmt_f64(value.im)];
                table(&["pattern", "degree", "re", "im"], [row])
            };
            output.emit(Value::Object(map), text)?;
        }
    }
    Ok(())
}

impl Input {
    fn load(&self) -> Result<FourQubitState, InputError> {
        let state = match (&self.state, &self.input) {
            (Some(name), _) => {
                let which = StandardState::from_str(name)?;
                let params = match &self.params {
                    Some(list) => parse_params(list)?,
                    None => Vec::new(),
                };
                FourQubitState::standard(which, &params)?
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                FourQubitState::parse(&text)?
            }
            (None, None) => {
                let mut text = String::new();
                io::stdin().read_to_string(&mut text)?;
                FourQubitState::parse(&text)?
            }
        };
        Ok(if self.normalize { state.normalize() } else { state })
    }
}

fn parse_params(list: &str) -> Result<Vec<Complex64>, InputError> {
    list.split(',')
        .map(|s| {
            let s = s.trim();
            Complex64::from_str(s).map_err(|_| InputError(format!("bad complex number `{s}`")))
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OpsDocument {
    ops: Vec<[[[f64; 2]; 2]; 2]>,
}

impl OpsSource {
    fn quartet(&self, kind: OperatorKind) -> Result<LocalOperatorQuartet, InputError> {
        if let Some(seed) = self.random {
            return Ok(LocalOperatorQuartet::random(seed, kind));
        }
        let ops: Vec<SingleQubitOp> = if let Some(list) = &self.gates {
            list.split(',')
                .map(|g| gates::by_name(g.trim()).ok_or_else(|| InputError(format!("unknown gate `{g}`"))))
                .collect::<Result<_, _>>()?
        } else {
            let path = self.ops.as_ref().expect("clap requires one source");
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let doc: OpsDocument = serde_json::from_str(&text)?;
            doc.ops
                .iter()
                .map(|m| m.map(|row| row.map(|[re, im]| Complex64::new(re, im))))
                .collect()
        };
        let ops: [SingleQubitOp; 4] = ops
            .try_into()
            .map_err(|v: Vec<_>| InputError(format!("expected 4 operators, got {}", v.len())))?;
        Ok(LocalOperatorQuartet::new(ops, kind)?)
    }
}

impl Output {
    fn emit(&self, json: Value, text: impl FnOnce() -> String) -> Result<(), InputError> {
        let body = match self.format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&json)?),
            Format::Text => text(),
        };
        write_out(&self.out, &body)
    }

    fn emit_state(&self, state: &FourQubitState) -> Result<(), InputError> {
        let body = match self.format {
            Format::Json => format!("{}\n", state.to_json()),
            Format::Text => {
                let rows = state
                    .amps()
                    .iter()
                    .enumerate()
                    .map(|(r, a)| vec![format!("|{:04b}>", r), fmt_f64(a.re), fmt_f64(a.im)]);
                table(&["ket", "re", "im"], rows)
            }
        };
        write_out(&self.out, &body)
    }
}

fn write_out(path: &Option<PathBuf>, body: &str) -> Result<(), InputError> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut all: Vec<Vec<String>> = vec![header.iter().map(|h| h.to_string()).collect()];
    all.extend(rows);
    let widths: Vec<usize> = (0..header.len())
        .map(|c| all.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &all {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
