//! Argument parsing and command dispatch.

use std::ffi::OsString;

use capelli_core::capelli::eigenvalue;
use capelli_core::exactalg::parse_rational;
use capelli_core::jack::jack;
use capelli_core::okounkov::{interpolation_combinatorial, interpolation_vanishing};
use capelli_core::symfunc::{lr_coefficient, rectangular_decomposition, restriction_multiplicity, FieldCase};
use capelli_core::weyl::{verify_appendix_report, OperatorCase, WeylElement};
use capelli_core::{MultiPoly, Partition, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::suites::{run_suite_with_jobs, Bounds, Suite, SuiteReport};

#[derive(Debug, Parser)]
#[command(name = "capelli", version, about = "Exact computations for Capelli operators and interpolation polynomials")]
pub struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Worker threads for verification suites (0 uses all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Combinatorial,
    Vanishing,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct CaseArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Interpolation polynomial P_λ(x; τ, α).
    Okounkov {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = rational)]
        tau: Rational,
        /// Specializes α; required by the vanishing method.
        #[arg(long, value_parser = rational)]
        alpha: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Method::Combinatorial)]
        method: Method,
    },
    /// Jack polynomial with parameter 1/τ over the monomial basis.
    Jack {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        r: usize,
        #[arg(long, value_parser = rational)]
        tau: Rational,
    },
    /// Eigenvalue c_{λ,s}(μ), formal in s unless --s is given.
    Eigenvalue {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Option<Rational>,
    },
    /// Littlewood-Richardson coefficient c^ν_{λ,μ}.
    Lr {
        #[arg(long)]
        nu: Partition,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// Restriction multiplicity [V_μ : E_λ], or with --m the decomposition
    /// of the r × m rectangle module.
    Branch {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, required_unless_present = "m")]
        mu: Option<Partition>,
        #[arg(long, required_unless_present = "m")]
        lambda: Option<Partition>,
        #[arg(long, conflicts_with_all = ["mu", "lambda"])]
        m: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        max_r: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        /// With --n and --r, checks a single appendix case.
        #[arg(long, requires_all = ["n", "r"])]
        d: Option<u32>,
        #[arg(long, requires_all = ["d", "r"])]
        n: Option<usize>,
        #[arg(long, requires_all = ["d", "n"])]
        r: Option<usize>,
    },
    /// Weyl algebra utilities.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum WeylCommand {
    /// Apply an operator to a polynomial. Arguments are JSON or @file.
    Apply {
        #[arg(long)]
        op: String,
        #[arg(long)]
        poly: String,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

/// A command result before formatting.
enum Doc {
    /// JSON document with a CSV rendering as header and rows.
    Table {
        json: Value,
        header: Vec<String>,
        rows: Vec<Vec<String>>,
    },
    Report(SuiteReport),
}

fn poly_table(p: &MultiPoly) -> (Vec<String>, Vec<Vec<String>>) {
    let j = p.to_json();
    let mut header = j.vars.clone();
    header.push("coef".to_string());
    let rows = j
        .terms
        .iter()
        .map(|t| t.exp.iter().map(|e| e.to_string()).chain(std::iter::once(t.coef.clone())).collect())
        .collect();
    (header, rows)
}

fn poly_value(p: &MultiPoly) -> Value {
    serde_json::to_value(p.to_json()).expect("polynomial JSON")
}

fn read_arg(s: &str) -> Result<String, String> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e)),
        None => Ok(s.to_string()),
    }
}

fn field_case(c: &CaseArgs) -> Result<FieldCase, String> {
    FieldCase::new(c.d, c.n, c.r).map_err(|e| e.to_string())
}

fn poly_doc(mut head: Value, p: &MultiPoly) -> Doc {
    head["poly"] = poly_value(p);
    let (header, rows) = poly_table(p);
    Doc::Table { json: head, header, rows }
}

fn execute(cmd: &Command, jobs: usize) -> Result<Doc, String> {
    let err = |e: capelli_core::Error| e.to_string();
    Ok(match cmd {
        Command::Okounkov { lambda, r, tau, alpha, method } => {
            let head = json!({"lambda": lambda.to_csv(), "r": r, "tau": tau.to_string()});
            let p = match (method, alpha) {
                (Method::Vanishing, None) => return Err("the vanishing method needs --alpha".into()),
                (Method::Vanishing, Some(a)) => interpolation_vanishing(lambda, *r, tau, a).map_err(err)?,
                (Method::Combinatorial, a) => {
                    let p = interpolation_combinatorial(lambda, *r, tau).map_err(err)?;
                    match a {
                        Some(a) => p.at_alpha(a),
                        None => p.poly,
                    }
                }
            };
            poly_doc(head, &p)
        }
        Command::Jack { lambda, r, tau } => {
            let j = jack(lambda, *r, tau).map_err(err)?;
            let coeffs: Vec<Value> =
                j.coeffs.iter().rev().map(|(mu, c)| json!({"mu": mu.to_csv(), "coef": c.to_string()})).collect();
            let rows = j.coeffs.iter().rev().map(|(mu, c)| vec![mu.to_csv(), c.to_string()]).collect();
            Doc::Table {
                json: json!({"lambda": lambda.to_csv(), "r": r, "tau": tau.to_string(), "coefficients": coeffs, "poly": poly_value(&j.to_poly(1))}),
                header: vec!["mu".into(), "coef".into()],
                rows,
            }
        }
        Command::Eigenvalue { lambda, mu, case, s } => {
            let fc = field_case(case)?;
            let v = eigenvalue(lambda, mu, &fc, s.as_ref()).map_err(err)?;
            let head =
                json!({"lambda": lambda.to_csv(), "mu": mu.to_csv(), "case": {"d": fc.d(), "n": fc.n, "r": fc.r}});
            poly_doc(head, &v)
        }
        Command::Lr { nu, lambda, mu } => {
            let c = lr_coefficient(nu, lambda, mu);
            Doc::Table {
                json: json!({"nu": nu.to_csv(), "lambda": lambda.to_csv(), "mu": mu.to_csv(), "coefficient": c}),
                header: vec!["coefficient".into()],
                rows: vec![vec![c.to_string()]],
            }
        }
        Command::Branch { case, mu, lambda, m } => {
            let fc = field_case(case)?;
            let cj = json!({"d": fc.d(), "n": fc.n, "r": fc.r});
            match (m, mu, lambda) {
                (Some(m), _, _) => {
                    let labels: Vec<String> =
                        rectangular_decomposition(&fc, *m).map_err(err)?.iter().map(|p| p.to_csv()).collect();
                    Doc::Table {
                        json: json!({"case": cj, "m": m, "labels": labels}),
                        header: vec!["label".into()],
                        rows: labels.iter().map(|l| vec![l.clone()]).collect(),
                    }
                }
                (None, Some(mu), Some(lambda)) => {
                    let k = restriction_multiplicity(&fc, mu, lambda).map_err(err)?;
                    Doc::Table {
                        json: json!({"case": cj, "mu": mu.to_csv(), "lambda": lambda.to_csv(), "multiplicity": k}),
                        header: vec!["multiplicity".into()],
                        rows: vec![vec![k.to_string()]],
                    }
                }
                _ => return Err("branch needs --mu and --lambda, or --m".into()),
            }
        }
        Command::Verify { suite, max_size, max_r, max_n, max_m, d, n, r } => {
            if let (Some(d), Some(n), Some(r)) = (d, n, r) {
                if *suite != Suite::Appendix {
                    return Err("--d/--n/--r select a single case of the appendix suite only".into());
                }
                let oc = OperatorCase::new(*d, *n, *r).map_err(err)?;
                let rep = verify_appendix_report(&oc).map_err(err)?;
                let c = rep.residual_euler_multiple.as_ref().map(|c| c.to_string());
                return Ok(Doc::Table {
                    json: json!({
                        "case": {"d": d, "n": n, "r": r},
                        "equal": rep.equal,
                        "normal_form_sizes": {"lhs": rep.lhs_terms, "rhs": rep.rhs_terms},
                        "residual_euler_multiple": c,
                    }),
                    header: ["d", "n", "r", "equal", "lhs_terms", "rhs_terms"].map(String::from).to_vec(),
                    rows: vec![vec![
                        d.to_string(),
                        n.to_string(),
                        r.to_string(),
                        rep.equal.to_string(),
                        rep.lhs_terms.to_string(),
                        rep.rhs_terms.to_string(),
                    ]],
                });
            }
            let bounds = Bounds { max_size: *max_size, max_r: *max_r, max_n: *max_n, max_m: *max_m };
            Doc::Report(run_suite_with_jobs(*suite, &bounds, jobs)?)
        }
        Command::Weyl { command: WeylCommand::Apply { op, poly } } => {
            let a = WeylElement::from_json_str(&read_arg(op)?).map_err(err)?;
            let p = MultiPoly::from_json_str(&read_arg(poly)?).map_err(err)?;
            let out = a.apply(&p).map_err(err)?;
            let (header, rows) = poly_table(&out);
            Doc::Table { json: poly_value(&out), header, rows }
        }
    })
}

fn csv_string(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn render(doc: &Doc, format: Format) -> String {
    match (doc, format) {
        (Doc::Table { json, .. }, Format::Json) => format!("{}\n", serde_json::to_string_pretty(json).expect("json")),
        (Doc::Table { header, rows, .. }, Format::Csv) => csv_string(header, rows),
        (Doc::Report(rep), Format::Json) => format!("{}\n", serde_json::to_string_pretty(rep).expect("json")),
        (Doc::Report(rep), Format::Csv) => {
            let rows: Vec<Vec<String>> = rep
                .cases
                .iter()
                .map(|c| vec![rep.suite.clone(), c.params.to_string(), c.pass.to_string(), c.witness.to_string()])
                .collect();
            csv_string(&["suite", "params", "pass", "witness"].map(String::from), &rows)
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let format = if cli.csv { Format::Csv } else { Format::Json };
    let doc = match execute(&cli.command, cli.jobs) {
        Ok(d) => d,
        Err(msg) => return Outcome::usage(msg),
    };
    let stdout = render(&doc, format);
    let (code, stderr) = match &doc {
        Doc::Report(rep) => (
            if rep.pass { 0 } else { 1 },
            format!(
                "{}: {} cases, {} failed, {:.3}s\n",
                rep.suite,
                rep.cases.len(),
                rep.failures().count(),
                rep.elapsed.as_secs_f64()
            ),
        ),
        Doc::Table { json, .. } => {
            let failed = matches!(&cli.command, Command::Verify { .. }) && json["equal"] == Value::Bool(false);
            (if failed { 1 } else { 0 }, String::new())
        }
    };
    Outcome { code, stdout, stderr }
}
