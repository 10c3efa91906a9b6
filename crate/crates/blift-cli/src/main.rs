//! Command-line front door for the bicircular lift matroid engine.
//!
//! Exit codes: 0 = verdict true / all pass; 1 = verdict false /
//! counterexample found; 2 = usage or parse error; 3 = resource cap
//! exceeded with no definite verdict.

use blift::error::Error;
use blift::exminor;
use blift::graph::parse_graph;
use blift::lift;
use blift::matroid::{parse_matroid, render_matroid};
use blift::paperlab;
use blift::SearchCaps;
use clap::{Parser, Subcommand, ValueEnum};
use blift_cli::report::{self, Format, Record, Reporter};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "blift", version, about = "Bicircular lift matroid engine")]
struct Cli {
    /// Seed for the seeded instance families.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on vertices of searched representation graphs.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,

    /// Cap on edges of searched representation graphs.
    #[arg(long, global = true)]
    max_edges: Option<usize>,

    /// Cap on parallel-class size in searched graphs.
    #[arg(long, global = true)]
    max_parallel: Option<usize>,

    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Graph-side operations.
    Graph {
        #[command(subcommand)]
        op: GraphOp,
    },
    /// Matroid-side operations.
    Matroid {
        #[command(subcommand)]
        op: MatroidOp,
    },
    /// Class membership and excluded-minor checks.
    Check {
        #[command(subcommand)]
        op: CheckOp,
    },
    /// Named matroid catalog.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
    /// Scan a catalog stream of matroid records for excluded minors.
    Scan { path: PathBuf },
    /// Run one verification row, or all of them.
    Verify { target: String },
}

#[derive(Subcommand)]
enum GraphOp {
    /// Print the lift matroid L(G) in matroid format.
    Circuits { path: PathBuf },
    /// Cycles, classes and si/co profiles.
    Info { path: PathBuf },
}

#[derive(Subcommand)]
enum MatroidOp {
    Info { path: PathBuf },
}

#[derive(Subcommand)]
enum CheckOp {
    /// Is the matroid graphic?
    Graphic { path: PathBuf },
    /// Is the matroid bicircular lift?
    Biclift { path: PathBuf },
    /// Is the matroid graphic or bicircular lift?
    Class { path: PathBuf },
    /// Is the matroid an excluded minor of the class?
    Excluded { path: PathBuf },
}

#[derive(Subcommand)]
enum CatalogOp {
    Get { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (code, output) = pool.install(|| run(&cli));
    print!("{output}");
    ExitCode::from(code)
}

fn run(cli: &Cli) -> (u8, String) {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Machine => Format::Machine,
    };
    let mut reporter = Reporter::new(format);
    match dispatch(cli, &mut reporter) {
        Ok(code) => (code, reporter.finish()),
        Err(e) => {
            reporter.emit(&Record::Error {
                message: e.to_string(),
            });
            let code = match e {
                Error::Resource(_) => 3,
                _ => 2,
            };
            (code, reporter.finish())
        }
    }
}

/// Caps from the explicit flags over the defaults. When `derive_for` is
/// given and no explicit flag was passed, caps are raised to what an
/// exhaustive decision for that ground size needs.
fn resolve_caps(cli: &Cli, derive_for: Option<usize>) -> SearchCaps {
    let explicit =
        cli.max_vertices.is_some() || cli.max_edges.is_some() || cli.max_parallel.is_some();
    let mut caps = match derive_for {
        Some(n) if !explicit => SearchCaps::for_ground_size(n),
        _ => SearchCaps::default(),
    };
    if let Some(v) = cli.max_vertices {
        caps.max_vertices = v;
    }
    if let Some(e) = cli.max_edges {
        caps.max_edges = e;
    }
    if let Some(p) = cli.max_parallel {
        caps.max_parallel = p;
    }
    caps
}

fn header(cli: &Cli, command: &str, input: &str, caps: &SearchCaps) -> Record {
    Record::Header {
        tool: "blift".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        command: command.to_string(),
        input: input.to_string(),
        caps: *caps,
        seed: cli.seed,
        format: match cli.format {
            FormatArg::Text => "text".to_string(),
            FormatArg::Machine => "machine".to_string(),
        },
    }
}

fn read_input(path: &PathBuf) -> Result<(String, String), Error> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(name.clone(), 0, format!("cannot read file: {e}")))?;
    Ok((name, text))
}

fn dispatch(cli: &Cli, out: &mut Reporter) -> Result<u8, Error> {
    match &cli.command {
        Command::Graph { op } => match op {
            GraphOp::Circuits { path } => {
                let (name, text) = read_input(path)?;
                let g = parse_graph(&text, &name)?;
                let caps = resolve_caps(cli, None);
                out.emit(&header(cli, "graph circuits", &name, &caps));
                let m = lift::lift_matroid(&g)?;
                out.emit(&Record::Artifact {
                    kind: "matroid".to_string(),
                    text: render_matroid(&m),
                });
                Ok(0)
            }
            GraphOp::Info { path } => {
                let (name, text) = read_input(path)?;
                let g = parse_graph(&text, &name)?;
                let caps = resolve_caps(cli, None);
                out.emit(&header(cli, "graph info", &name, &caps));
                out.emit(&Record::GraphInfo(report::graph_info_record(&name, &g)));
                Ok(0)
            }
        },
        Command::Matroid { op } => match op {
            MatroidOp::Info { path } => {
                let (name, text) = read_input(path)?;
                let m = parse_matroid(&text, &name)?;
                let caps = resolve_caps(cli, None);
                out.emit(&header(cli, "matroid info", &name, &caps));
                let connectivity = m.connectivity_order()?;
                out.emit(&Record::MatroidInfo(report::matroid_info_record(
                    &name,
                    &m,
                    &connectivity,
                )));
                Ok(0)
            }
        },
        Command::Check { op } => {
            let (kind, path) = match op {
                CheckOp::Graphic { path } => ("graphic", path),
                CheckOp::Biclift { path } => ("biclift", path),
                CheckOp::Class { path } => ("class", path),
                CheckOp::Excluded { path } => ("excluded", path),
            };
            let (name, text) = read_input(path)?;
            let m = parse_matroid(&text, &name)?;
            let derive = match op {
                CheckOp::Excluded { .. } => Some(m.ground_size()),
                _ => None,
            };
            let caps = resolve_caps(cli, derive);
            out.emit(&header(cli, &format!("check {kind}"), &name, &caps));
            match op {
                CheckOp::Graphic { .. } => {
                    let v = lift::is_graphic(&m, &caps)?;
                    emit_verdict(out, kind, &name, &v);
                    Ok(if v.member { 0 } else { 1 })
                }
                CheckOp::Biclift { .. } => {
                    let v = lift::biclift_witness(&m, &caps)?;
                    emit_verdict(out, kind, &name, &v);
                    Ok(if v.member { 0 } else { 1 })
                }
                CheckOp::Class { .. } => {
                    let v = lift::membership_bl_bar(&m, &caps)?;
                    emit_verdict(out, kind, &name, &v);
                    Ok(if v.member { 0 } else { 1 })
                }
                CheckOp::Excluded { .. } => match exminor::is_excluded_minor(&m, &caps)? {
                    Some(cert) => {
                        out.emit(&Record::Certificate(
                            report::CertificateRecord::from_certificate(&cert),
                        ));
                        Ok(0)
                    }
                    None => {
                        let v = lift::membership_bl_bar(&m, &caps)?;
                        emit_verdict(out, "excluded (membership)", &name, &v);
                        Ok(1)
                    }
                },
            }
        }
        Command::Catalog { op } => match op {
            CatalogOp::Get { name } => {
                let m = blift::matroid::catalog::get(name)?;
                let caps = resolve_caps(cli, None);
                out.emit(&header(cli, "catalog get", name, &caps));
                out.emit(&Record::Artifact {
                    kind: "matroid".to_string(),
                    text: render_matroid(&m),
                });
                Ok(0)
            }
        },
        Command::Scan { path } => {
            let (name, text) = read_input(path)?;
            let explicit = cli.max_vertices.is_some()
                || cli.max_edges.is_some()
                || cli.max_parallel.is_some();
            let user_caps = explicit.then(|| resolve_caps(cli, None));
            let caps_for_header = user_caps.unwrap_or_default();
            out.emit(&header(cli, "scan", &name, &caps_for_header));
            let items = exminor::scan_catalog_stream(&text, &name, user_caps)?;
            for item in &items {
                out.emit(&Record::ScanItem(report::ScanRecord::from_item(item)));
            }
            Ok(0)
        }
        Command::Verify { target } => {
            let caps = resolve_caps(cli, None);
            out.emit(&header(cli, "verify", target, &caps));
            let reports: Vec<(String, Result<paperlab::LemmaReport, Error>)> =
                if target == "all" {
                    paperlab::run_all(&caps, cli.seed)
                } else {
                    vec![(
                        target.clone(),
                        paperlab::verify_lemma(target, &caps, cli.seed),
                    )]
                };
            let mut failed = false;
            let mut resource = false;
            for (id, r) in reports {
                match r {
                    Ok(report) => {
                        failed |= !report.counterexamples.is_empty();
                        out.emit(&Record::Lemma(report));
                    }
                    Err(Error::UnknownName(n)) => return Err(Error::UnknownName(n)),
                    Err(e) => {
                        resource = true;
                        out.emit(&Record::Error {
                            message: format!("{id}: {e}"),
                        });
                    }
                }
            }
            Ok(if resource {
                3
            } else if failed {
                1
            } else {
                0
            })
        }
    }
}

fn emit_verdict(out: &mut Reporter, check: &str, input: &str, v: &lift::ClassVerdict) {
    out.emit(&Record::Verdict {
        check: check.to_string(),
        input: input.to_string(),
        member: v.member,
        search_exhausted: v.search_exhausted,
        witness: v.witness.as_ref().map(report::WitnessRecord::from_witness),
    });
}

