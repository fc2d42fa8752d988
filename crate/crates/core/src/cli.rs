//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when an argument is outside an operation's
//! domain (for example factoring the zero polynomial), and 2 on malformed input.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::canonical::{canonicalize, equivalent};
use crate::envelope::breakpoints;
use crate::error::Error;
use crate::factorization::{expand, factor};
use crate::scalar::Finite;
use crate::{ExtendedRational, Factorization, TropPoly};

#[derive(Debug, Parser)]
#[command(name = "tropical", version, about = "Exact min-plus polynomial toolkit")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Least-coefficient form.
    Canon {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Factor into linear factors.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Multiply out a factorization given as JSON.
    Expand { factored: String },
    /// Distinct roots with multiplicities.
    Roots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Evaluate at a finite scalar.
    Eval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Functional equivalence.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Tropical product.
    Mul {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Tropical sum.
    Add {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Envelope breakpoints as TSV.
    Plot {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

enum Failure {
    Syntax(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_syntax() {
            Failure::Syntax(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn poly(src: &str) -> Result<TropPoly, Failure> {
    src.parse()
        .map_err(|e| Failure::Syntax(format!("in {src:?}: {e}")))
}

fn scalar(src: &str) -> Result<ExtendedRational, Failure> {
    src.parse()
        .map_err(|e| Failure::Syntax(format!("in {src:?}: {e}")))
}

fn poly_out(f: &TropPoly, as_json: bool) -> String {
    if as_json {
        serde_json::to_string(f).unwrap()
    } else {
        f.to_string()
    }
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let as_json = cli.json;
    let out = match &cli.command {
        Command::Canon { poly: src } => {
            let g = canonicalize(&poly(src)?)?;
            poly_out(g.as_poly(), as_json)
        }
        Command::Factor { poly: src } => {
            let fac = factor(&poly(src)?)?;
            if as_json {
                serde_json::to_string(&fac).unwrap()
            } else {
                fac.to_string()
            }
        }
        Command::Expand { factored } => {
            let fac: Factorization = serde_json::from_str(factored)
                .map_err(|e| Failure::Syntax(format!("invalid factorization JSON: {e}")))?;
            poly_out(expand(&fac).as_poly(), as_json)
        }
        Command::Roots { poly: src } => {
            let fac = factor(&poly(src)?)?;
            let grouped = fac.grouped_roots();
            if as_json {
                let roots: Vec<_> = grouped
                    .iter()
                    .map(|(d, m)| json!({"root": d.to_string(), "multiplicity": m}))
                    .collect();
                json!({ "roots": roots }).to_string()
            } else {
                let mut s = String::new();
                for (i, (d, m)) in grouped.iter().enumerate() {
                    if i > 0 {
                        s.push('\n');
                    }
                    write!(s, "{d}\t{m}").unwrap();
                }
                s
            }
        }
        Command::Eval { poly: src, x } => {
            let v = poly(src)?.eval(&scalar(x)?)?;
            if as_json {
                json!({ "value": v }).to_string()
            } else {
                v.to_string()
            }
        }
        Command::Equiv { f, g } => {
            let same = equivalent(&poly(f)?, &poly(g)?);
            if as_json {
                json!({ "equivalent": same }).to_string()
            } else {
                same.to_string()
            }
        }
        Command::Mul { f, g } => poly_out(&poly(f)?.mul(&poly(g)?), as_json),
        Command::Add { f, g } => poly_out(&poly(f)?.add(&poly(g)?), as_json),
        Command::Plot { poly: src } => {
            let f = poly(src)?;
            let mut rows = Vec::new();
            for x in breakpoints(&f)? {
                let x = Finite(x);
                rows.push((f.eval(&x)?, f.argmin_monomials(&x)?, x));
            }
            if as_json {
                let rows: Vec<_> = rows
                    .iter()
                    .map(|(v, degrees, x)| json!({"x": x, "value": v, "active_degrees": degrees}))
                    .collect();
                serde_json::Value::from(rows).to_string()
            } else {
                let mut s = String::from("x\tf(x)\tactive_degrees");
                for (v, degrees, x) in rows {
                    let degrees: Vec<String> = degrees.iter().map(usize::to_string).collect();
                    write!(s, "\n{x}\t{v}\t{}", degrees.join(",")).unwrap();
                }
                s
            }
        }
    };
    Ok(out)
}

pub fn run<I, A>(args: I) -> Outcome
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(mut out) => {
            out.push('\n');
            Outcome::ok(out)
        }
        Err(Failure::Syntax(msg)) => Outcome::fail(2, format!("error: {msg}\n")),
        Err(Failure::Domain(msg)) => Outcome::fail(1, format!("error: {msg}\n")),
    }
}
