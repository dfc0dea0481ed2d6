use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::workbench::document::{Problem, TaskDoc};
use crate::workbench::report::{Format, Record, Report, Status};
use crate::workbench::suites::{self, Suite, SuiteConfig};
use crate::workbench::{shipped_corpus, tasks};

#[derive(Debug, Parser)]
#[command(name = "embrace", version, about = "Exact brace calculus, twisted complexes and first-order deformations")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Problem document (JSON).
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Hochschild degree for `hh`.
    #[arg(long, global = true, value_name = "N", default_value_t = 2)]
    pub degree: usize,
    #[arg(long, global = true, value_name = "N", default_value_t = 4)]
    pub arity_max: usize,
    #[arg(long, global = true, value_name = "N", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Run independent units of work on a thread pool; output is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension and representatives of HH^p.
    Hh,
    /// Validate the structure, then run the document's task list.
    Check,
    /// The structure, or a named cochain, carried to the document's precomplexes.
    Embr {
        #[arg(long)]
        cochain: Option<String>,
    },
    /// Characteristic class and lift feasibility; every pair when unnamed.
    Obstruct(Target),
    /// As `obstruct`, with the lift witness.
    Lift(Target),
    /// Apply a gauge `h` between two deformations; solved for when omitted.
    Gauge {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_name = "COCHAIN")]
        gauge: Option<String>,
    },
    /// Run a verification suite on the document, or on the shipped corpus.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Brace samples per quiver.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, hide = true)]
        inject_sign_fault: bool,
    },
}

#[derive(Debug, Args)]
pub struct Target {
    #[arg(long)]
    pub deformation: Option<String>,
    #[arg(long)]
    pub complex: Option<String>,
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Verification failures exit with 1, everything the user can fix with 2.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) | Error::GaugeMismatch(_) => 1,
        _ => 2,
    }
}

fn load(g: &Global) -> Result<Problem> {
    let path = g.input.as_ref().ok_or_else(|| Error::schema("--input", "a problem document is required"))?;
    let text = std::fs::read_to_string(path).map_err(|e| Error::schema(path.display().to_string(), e.to_string()))?;
    Problem::parse(&text).map_err(|e| match e {
        Error::Schema { location, message } => Error::schema(format!("{}: {location}", path.display()), message),
        other => other,
    })
}

fn targets(problem: &Problem, t: &Target) -> Result<Vec<(String, String)>> {
    let cat = problem.category()?;
    let defs = match &t.deformation {
        Some(d) => vec![d.clone()],
        None => problem.deformation_names(),
    };
    let complexes = match &t.complex {
        Some(c) => vec![c.clone()],
        None => problem.genuine_complexes(&cat).into_iter().map(|c| c.name).collect(),
    };
    Ok(defs.iter().flat_map(|d| complexes.iter().map(move |c| (d.clone(), c.clone()))).collect())
}

fn execute(cli: &Cli) -> Result<Report> {
    let g = &cli.global;
    let mut report = Report::default();
    match &cli.command {
        Command::Verify { suite, samples, inject_sign_fault } => {
            let problems = match &g.input {
                Some(_) => vec![load(g)?],
                None => shipped_corpus()?,
            };
            let cfg = SuiteConfig {
                seed: g.seed,
                samples: *samples,
                arity_max: g.arity_max,
                parallel: g.parallel,
                sign_fault: *inject_sign_fault,
                ..SuiteConfig::default()
            };
            report.push(
                Record::new("verify", Status::Info)
                    .field("suite", suite.name())
                    .field("seed", g.seed)
                    .field("problems", problems.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join(",")),
            );
            report.extend(suites::run(*suite, &problems, &cfg));
        }
        Command::Check => {
            let p = load(g)?;
            let structure = tasks::check(&p);
            let valid = structure.iter().all(|r| r.status != Status::Fail);
            report.extend(structure);
            if valid {
                let run = |t: &TaskDoc| tasks::run_task(&p, t).unwrap_or_else(|e| vec![Record::check("task", false).field("error", e)]);
                let results: Vec<Vec<Record>> = if g.parallel {
                    use rayon::prelude::*;
                    p.tasks.par_iter().map(run).collect()
                } else {
                    p.tasks.iter().map(run).collect()
                };
                report.extend(results.into_iter().flatten());
            }
        }
        Command::Hh => {
            let p = load(g)?;
            report.extend(tasks::hh(&p, &p.category()?, g.degree)?);
        }
        Command::Embr { cochain } => {
            let p = load(g)?;
            if let Some(c) = cochain {
                if !p.cochains.contains_key(c) {
                    return Err(Error::schema("--cochain", format!("unknown cochain {c:?}")));
                }
            }
            report.extend(tasks::embr(&p, &p.category()?, cochain.as_deref())?);
        }
        Command::Obstruct(t) | Command::Lift(t) => {
            let p = load(g)?;
            let cat = p.category()?;
            let witness = matches!(cli.command, Command::Lift(_));
            for (d, c) in targets(&p, t)? {
                report.extend(tasks::obstruct(&p, &cat, &d, &c, witness)?);
            }
        }
        Command::Gauge { from, to, gauge } => {
            let p = load(g)?;
            let cat = p.category()?;
            match gauge {
                Some(h) => {
                    if !p.cochains.contains_key(h) {
                        return Err(Error::schema("--gauge", format!("unknown cochain {h:?}")));
                    }
                    report.extend(tasks::gauge(&p, &cat, from, to, h)?);
                }
                None => report.extend(tasks::solve_gauge(&p, &cat, from, to)?),
            }
        }
    }
    Ok(report)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            stdout: report.render(cli.global.format),
            stderr: String::new(),
            code: if report.passed() { 0 } else { 1 },
        },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: exit_code(&e) },
    }
}
