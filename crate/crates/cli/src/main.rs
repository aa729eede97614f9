//! contralg: contraction algebras of commutative algebras with involutions.
//!
//! Subcommands: `contract` computes the presentation of the contraction for
//! a job file, `verify` runs selected structural checks, `examples` lists or
//! runs the bundled corpus. Reports are printed as human text on stdout and
//! mirrored to deterministic JSON with `--json`.

mod corpus;
mod job;
mod report;
mod run;

use clap::{Args, Parser, Subcommand};
use contralg::ideals::GroebnerConfig;
use contralg::poly::MonomialOrder;
use report::{Bundle, OpResult, Report};
use run::{exit_code_for, RunOpts};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "contralg",
    version,
    about = "contraction algebras by Groebner elimination"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Monomial order for printed presentations.
    #[arg(long, value_parser = ["grevlex", "lex"], default_value = "grevlex")]
    order: String,
    /// S-pair cap for Groebner computations (env CONTRALG_MAX_PAIRS).
    #[arg(long)]
    max_pairs: Option<usize>,
    /// Total-degree cap for Groebner computations (env CONTRALG_MAX_DEGREE).
    #[arg(long)]
    max_degree: Option<u32>,
    /// Write the JSON report to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Print wall-clock timings to stderr.
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the contraction presentation for a job file.
    Contract {
        job: PathBuf,
        /// Keep the raw 4-per-generator closed-immersion presentation.
        #[arg(long = "raw-4lambda")]
        raw_4lambda: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Verify structural properties for a job file.
    Verify {
        job: PathBuf,
        /// Comma-separated properties: flat, fiber0, unit_fiber, descent,
        /// rees, localize, double, tensor, hopf, cartan, embedding, lie,
        /// action.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// List or run the bundled example corpus.
    Examples {
        #[command(subcommand)]
        what: ExamplesCommand,
    },
}

#[derive(Subcommand)]
enum ExamplesCommand {
    /// List corpus entries.
    List,
    /// Run every corpus entry and report verdicts.
    RunAll {
        /// Run entries on this many threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Run one corpus entry by name.
    Run {
        name: String,
        /// Also report the chart-gluing transition for localizations.
        #[arg(long = "chart-gluing")]
        chart_gluing: bool,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name).ok().and_then(|v| v.parse().ok())
}

fn make_opts(common: &CommonOpts, raw_4lambda: bool, chart_gluing: bool) -> RunOpts {
    let defaults = GroebnerConfig::default();
    let cfg = GroebnerConfig {
        max_pairs: common
            .max_pairs
            .or_else(|| env_usize("CONTRALG_MAX_PAIRS"))
            .unwrap_or(defaults.max_pairs),
        max_degree: common
            .max_degree
            .or_else(|| env_usize("CONTRALG_MAX_DEGREE").map(|v| v as u32))
            .unwrap_or(defaults.max_degree),
    };
    let order = match common.order.as_str() {
        "lex" => MonomialOrder::Lex,
        _ => MonomialOrder::GrevLex,
    };
    RunOpts {
        cfg,
        order,
        raw_4lambda,
        chart_gluing,
    }
}

fn emit(report: &Report, common: &CommonOpts) -> std::io::Result<()> {
    print!("{}", report.render_text());
    if let Some(path) = &common.json {
        let json = serde_json::to_string_pretty(report).expect("report serializes");
        std::fs::write(path, json + "\n")?;
    }
    Ok(())
}

fn error_report(name: &str, field: &str, opts: &RunOpts, e: &contralg::Error) -> Report {
    Report {
        job: name.to_string(),
        field: field.to_string(),
        caps: opts.caps(),
        results: vec![OpResult::Error {
            message: e.to_string(),
        }],
        ok: false,
    }
}

fn load_job_file(path: &PathBuf, cfg: &GroebnerConfig) -> Result<job::Loaded, contralg::Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| contralg::Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let spec = job::parse_job(&text)?;
    job::load(&spec, cfg)
}

/// Run one corpus entry: its contraction plus its configured verify list.
fn run_corpus_entry(name: &str, text: &str, opts: &RunOpts) -> Report {
    let spec = match job::parse_job(text) {
        Ok(s) => s,
        Err(e) => return error_report(name, "?", opts, &e),
    };
    let loaded = match job::load(&spec, &opts.cfg) {
        Ok(l) => l,
        Err(e) => return error_report(name, "?", opts, &e),
    };
    let mut results = Vec::new();
    let mut ok = true;
    // contraction presentation first (skipped for Lie-only entries)
    if !loaded.algebra.ring.vars.is_empty() {
        match run::run_contract(&loaded, opts) {
            Ok(mut r) => results.append(&mut r.results),
            Err(e) => {
                results.push(OpResult::Error {
                    message: e.to_string(),
                });
                ok = false;
            }
        }
    }
    if ok && !loaded.verify.is_empty() {
        let props = loaded.verify.clone();
        match run::run_verify(&loaded, &props, opts) {
            Ok(mut r) => {
                ok &= r.ok;
                results.append(&mut r.results);
            }
            Err(e) => {
                results.push(OpResult::Error {
                    message: e.to_string(),
                });
                ok = false;
            }
        }
    }
    Report {
        job: loaded.name.clone(),
        field: loaded.field.spec().to_string(),
        caps: opts.caps(),
        results,
        ok,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Contract {
            job: path,
            raw_4lambda,
            common,
        } => {
            let opts = make_opts(&common, raw_4lambda, false);
            let started = std::time::Instant::now();
            let loaded = match load_job_file(&path, &opts.cfg) {
                Ok(l) => l,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(exit_code_for(&e) as u8);
                }
            };
            match run::run_contract(&loaded, &opts) {
                Ok(report) => {
                    emit(&report, &common).expect("write report");
                    if common.timings {
                        eprintln!("elapsed: {} ms", started.elapsed().as_millis());
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(exit_code_for(&e) as u8)
                }
            }
        }
        Command::Verify {
            job: path,
            props,
            common,
        } => {
            let opts = make_opts(&common, false, false);
            let started = std::time::Instant::now();
            let loaded = match load_job_file(&path, &opts.cfg) {
                Ok(l) => l,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(exit_code_for(&e) as u8);
                }
            };
            let props = if props.is_empty() {
                loaded.verify.clone()
            } else {
                props
            };
            match run::run_verify(&loaded, &props, &opts) {
                Ok(report) => {
                    emit(&report, &common).expect("write report");
                    if common.timings {
                        eprintln!("elapsed: {} ms", started.elapsed().as_millis());
                    }
                    if report.ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(exit_code_for(&e) as u8)
                }
            }
        }
        Command::Examples { what } => match what {
            ExamplesCommand::List => {
                for (name, _) in corpus::CORPUS {
                    println!("{name}");
                }
                ExitCode::SUCCESS
            }
            ExamplesCommand::Run {
                name,
                chart_gluing,
                common,
            } => {
                let opts = make_opts(&common, false, chart_gluing);
                let Some(text) = corpus::find(&name) else {
                    eprintln!("error: no corpus entry named '{name}'");
                    return ExitCode::from(1);
                };
                let started = std::time::Instant::now();
                let report = run_corpus_entry(&name, text, &opts);
                emit(&report, &common).expect("write report");
                if common.timings {
                    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
                }
                if report.ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            ExamplesCommand::RunAll { jobs, common } => {
                let opts = make_opts(&common, false, false);
                let started = std::time::Instant::now();
                let jobs = jobs.max(1);
                let entries: Vec<(&str, &str)> = corpus::CORPUS.to_vec();
                let mut reports: Vec<Option<Report>> = Vec::new();
                reports.resize_with(entries.len(), || None);
                std::thread::scope(|scope| {
                    let mut pending: Vec<(usize, &(&str, &str))> =
                        entries.iter().enumerate().collect();
                    let mut handles = Vec::new();
                    for chunk in pending.chunks_mut(entries.len().div_ceil(jobs)) {
                        let opts_ref = &opts;
                        let chunk: Vec<(usize, (&str, &str))> =
                            chunk.iter().map(|(i, e)| (*i, **e)).collect();
                        handles.push(scope.spawn(move || {
                            chunk
                                .into_iter()
                                .map(|(i, (name, text))| {
                                    (i, run_corpus_entry(name, text, opts_ref))
                                })
                                .collect::<Vec<_>>()
                        }));
                    }
                    for h in handles {
                        for (i, r) in h.join().expect("corpus worker") {
                            reports[i] = Some(r);
                        }
                    }
                });
                let reports: Vec<Report> = reports.into_iter().map(|r| r.unwrap()).collect();
                let ok = reports.iter().all(|r| r.ok);
                let bundle = Bundle { reports, ok };
                print!("{}", bundle.render_text());
                if let Some(path) = &common.json {
                    let json = serde_json::to_string_pretty(&bundle).expect("bundle serializes");
                    std::fs::write(path, json + "\n").expect("write report");
                }
                if common.timings {
                    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
                }
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
        },
    }
}
