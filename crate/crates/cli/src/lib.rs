//! Command dispatch and report rendering for the `flatcert` binary.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use flatcert_core::flats::{certificate_from_gram, gram, CommutingFamily, FlatCertificate};
use flatcert_core::linalg::block_decompose;
use flatcert_core::manifold::{gluing_covariance, npc_certificate, parse_graph, validate};
use flatcert_core::places::{classify, direction_profile, drift_profile};
use flatcert_core::report::sig12;
use flatcert_core::{parse_session, parse_word, Error, Result, SessionSpec, Tolerances};

pub const EXIT_CERTIFICATE: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_OBSTRUCTION: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "flatcert",
    version,
    about = "Exact drift, flat and NPC certificates for matrix groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Session JSON file; standard input when omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Certified radius for complex roots.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tolerance: f64,
    /// Relative positive-definiteness threshold.
    #[arg(long = "pd-epsilon", global = true, default_value_t = 1e-8)]
    pub pd_epsilon: f64,
    /// JSON report (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Plain `key: value` report.
    #[arg(long, global = true)]
    pub text: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Places relevant to the session generators.
    Places,
    /// Classify a word in the generators.
    Classify { word: String },
    /// Simultaneous block decomposition of commuting generators.
    Decompose {
        #[arg(required = true, value_delimiter = ',')]
        names: Vec<String>,
    },
    /// Lattice certificate or degenerate witness for a commuting family.
    Flat {
        #[arg(required = true, value_delimiter = ',')]
        names: Vec<String>,
    },
    /// NPC certificate or obstruction for a graph-manifold representation.
    Graph { file: PathBuf },
}

/// A rendered-ready report with its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome {
            report,
            exit_code: EXIT_CERTIFICATE,
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split([' ', '(', '{'])
        .next()
        .unwrap_or_default()
        .to_string()
}

/// Error report carrying the originating module.
pub fn error_report(e: &Error) -> Value {
    json!({
        "error": {
            "module": e.module(),
            "kind": error_kind(e),
            "message": e.to_string(),
        }
    })
}

fn family(spec: &SessionSpec, items: &[String]) -> Result<CommutingFamily> {
    let places = spec.places()?;
    let mut members = Vec::with_capacity(items.len());
    let mut gens = Vec::with_capacity(items.len());
    for item in items {
        let w = parse_word(item)?;
        gens.push(w.eval(&spec.generators)?);
        members.push(w);
    }
    CommutingFamily::new(members, gens, places)
}

/// Runs one session command.
pub fn run_command(spec: &SessionSpec, command: &Command, tol: &Tolerances) -> Result<Outcome> {
    match command {
        Command::Places => {
            let places = spec.places()?;
            Ok(Outcome::ok(json!({
                "command": "places",
                "generators": spec.generators.keys().collect::<Vec<_>>(),
                "places": to_value(&places),
            })))
        }
        Command::Classify { word } => {
            let places = spec.places()?;
            let m = spec.eval(word)?;
            let class = classify(&m, &places, tol)?;
            let profile = drift_profile(&m, &places, tol)?;
            let mut obj = match to_value(&class) {
                Value::Object(o) => o,
                _ => Map::new(),
            };
            obj.insert("command".into(), json!("classify"));
            obj.insert("word".into(), json!(word));
            obj.insert("arch".into(), to_value(&profile)["arch"].clone());
            obj.insert("padic".into(), to_value(&profile)["padic"].clone());
            obj.insert("length2".into(), to_value(&profile.length_sq()));
            if class.is_ballistic() {
                obj.insert(
                    "direction".into(),
                    to_value(&direction_profile(&m, &places, tol)?),
                );
            }
            Ok(Outcome::ok(Value::Object(obj)))
        }
        Command::Decompose { names } => {
            let gens = names
                .iter()
                .map(|n| spec.get(n).cloned())
                .collect::<Result<Vec<_>>>()?;
            let dec = block_decompose(&gens)?;
            Ok(Outcome::ok(json!({
                "command": "decompose",
                "generators": names,
                "conjugator": to_value(&dec)["conjugator"].clone(),
                "blocks": to_value(&dec)["blocks"].clone(),
            })))
        }
        Command::Flat { names } => {
            let fam = family(spec, names)?;
            let g = gram(&fam, tol)?;
            let cert = certificate_from_gram(&fam, &g, tol)?;
            let combined: Vec<Vec<f64>> = g
                .combined()
                .iter()
                .map(|r| r.iter().map(|x| sig12(*x)).collect())
                .collect();
            let exit_code = match cert {
                FlatCertificate::Lattice { .. } => EXIT_CERTIFICATE,
                FlatCertificate::Degenerate { .. } => EXIT_OBSTRUCTION,
            };
            Ok(Outcome {
                report: json!({
                    "command": "flat",
                    "family": names,
                    "places": to_value(fam.places()),
                    "gram": {
                        "nonarch": to_value(&g)["nonarch"].clone(),
                        "arch": to_value(&g)["arch"].clone(),
                        "combined": combined,
                    },
                    "certificate": to_value(&cert),
                    "note": "the lattice rank of the drift image is a lower bound for the free-abelian rank",
                }),
                exit_code,
            })
        }
        Command::Graph { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Error::InvalidGraph(format!("{}: {e}", file.display())))?;
            run_graph(&text, tol)
        }
    }
}

/// Validates a graph representation and certifies it.
pub fn run_graph(text: &str, tol: &Tolerances) -> Result<Outcome> {
    let rep = parse_graph(text)?;
    let violations = validate(&rep);
    if !violations.is_empty() {
        return Ok(Outcome {
            report: json!({
                "command": "graph",
                "valid": false,
                "violations": to_value(&violations),
            }),
            exit_code: EXIT_ERROR,
        });
    }
    let cert = npc_certificate(&rep, tol)?;
    let covariance = gluing_covariance(&rep, tol)?;
    let exit_code = if covariance.iter().any(|c| !c.passed) {
        EXIT_ERROR
    } else if cert.is_npc() {
        EXIT_CERTIFICATE
    } else {
        EXIT_OBSTRUCTION
    };
    Ok(Outcome {
        report: json!({
            "command": "graph",
            "valid": true,
            "places": to_value(&rep.places),
            "certificate": to_value(&cert),
            "covariance": to_value(&covariance),
        }),
        exit_code,
    })
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}: {s}")),
        other => out.push(format!("{prefix}: {other}")),
    }
}

/// Renders a report as pretty JSON or as `key: value` lines.
pub fn render(report: &Value, text: bool) -> String {
    if text {
        let mut lines = Vec::new();
        flatten("", report, &mut lines);
        lines.join("\n") + "\n"
    } else {
        serde_json::to_string_pretty(report).expect("json") + "\n"
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    use std::io::Read;
    let io_err = |e: std::io::Error| Error::Parse {
        line: 0,
        column: 0,
        message: e.to_string(),
    };
    match path {
        Some(p) => std::fs::read_to_string(p).map_err(io_err),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
            Ok(s)
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let tol = Tolerances {
        root: cli.global.tolerance,
        pd_epsilon: cli.global.pd_epsilon,
    };
    if let Command::Graph { file } = &cli.command {
        let text = std::fs::read_to_string(file)
            .map_err(|e| Error::InvalidGraph(format!("{}: {e}", file.display())))?;
        return run_graph(&text, &tol);
    }
    let spec = parse_session(&read_input(cli.global.input.as_ref())?)?;
    run_command(&spec, &cli.command, &tol)
}

/// Sizes the global worker pool from `FLATCERT_THREADS` when set.
pub fn configure_threads() {
    if let Some(n) = std::env::var("FLATCERT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

/// Full invocation: returns stdout text and the exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_CERTIFICATE
            };
            return (e.render().to_string(), code);
        }
    };
    match execute(&cli) {
        Ok(o) => (render(&o.report, cli.global.text), o.exit_code),
        Err(e) => (render(&error_report(&e), cli.global.text), EXIT_ERROR),
    }
}
