use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rooted_chromatic::enumerate::{
    free_trees, posets, rooted_trees, small_graphs, small_rooted_graphs,
};
use rooted_chromatic::graph::GraphRecord;
use rooted_chromatic::harness::{
    compute, search_collision, verify, CollisionKind, ComputeParams, Invariant, Options, SUITES,
};
use rooted_chromatic::special::irreducibility_certificate;
use rooted_chromatic::sym::Basis;
use rooted_chromatic::Error;

#[derive(Parser)]
#[command(
    name = "rooted-chromatic",
    version,
    about = "Chromatic symmetric functions of rooted graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest instance size for sweeps and searches.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    RootedTrees,
    FreeTrees,
    Graphs,
    ConnectedGraphs,
    RootedGraphs,
    Posets,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant of the graph in FILE ("-" for stdin).
    Compute {
        file: PathBuf,
        /// X, X0, Xne0, Xi, f0, fne0, chi, principal, P, U, Ur, W, spec-kp, x-2p
        #[arg(long)]
        invariant: String,
        /// Expand in the variables x_0..x_N.
        #[arg(long)]
        colors: Option<usize>,
        /// Root color for Xi.
        #[arg(long, default_value_t = 0)]
        color: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        /// For x-2p: root colored 0 rather than avoiding 0.
        #[arg(long)]
        root_zero: bool,
        /// m, mtilde, p or e.
        #[arg(long)]
        basis: Option<String>,
    },
    /// List one representative per isomorphism class, one per line.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite, or "all".
    Verify {
        #[arg(required_unless_present = "list")]
        suite: Option<String>,
        /// Run only the instance with this text line.
        #[arg(long)]
        only: Option<String>,
        /// List the registered suites.
        #[arg(long)]
        list: bool,
    },
    /// Search for non-isomorphic instances sharing an invariant.
    Search {
        /// f-unrooted, X-unrooted or X0-rooted
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Eisenstein irreducibility certificate for the graph in FILE.
    Certify { file: PathBuf },
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    let mut s = String::new();
    let read = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    read.map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    Ok(s)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Guard { .. } => 3,
        _ => 2,
    }
}

fn enumerate(kind: Kind, n: usize) -> Result<Vec<String>, Error> {
    Ok(match kind {
        Kind::RootedTrees => rooted_trees(n)?
            .map(|t| t.to_rooted_graph().to_line())
            .collect(),
        Kind::FreeTrees => free_trees(n)?.map(|g| g.to_line()).collect(),
        Kind::Graphs => small_graphs(n, false)?
            .iter()
            .map(|g| g.to_line())
            .collect(),
        Kind::ConnectedGraphs => small_graphs(n, true)?.iter().map(|g| g.to_line()).collect(),
        Kind::RootedGraphs => small_rooted_graphs(n, false)?
            .iter()
            .map(|g| g.to_line())
            .collect(),
        Kind::Posets => posets(n)?.iter().map(|p| p.to_record().to_line()).collect(),
    })
}

/// The output text and the exit code.
fn run(cli: &Cli) -> Result<(String, u8), Error> {
    let json_out = cli.format == Format::Json;
    let render = |v: &Value| serde_json::to_string_pretty(v).expect("valid JSON") + "\n";
    match &cli.command {
        Command::Compute {
            file,
            invariant,
            colors,
            color,
            k,
            p,
            root_zero,
            basis,
        } => {
            let record = GraphRecord::parse(&read_input(file)?)?;
            let params = ComputeParams {
                colors: *colors,
                color: *color,
                k: *k,
                p: *p,
                root_zero: *root_zero,
                basis: basis.as_deref().map(Basis::from_symbol).transpose()?,
            };
            let c = compute(&record, Invariant::parse(invariant)?, &params)?;
            let text = if json_out {
                serde_json::to_string(&c.json).expect("valid JSON") + "\n"
            } else {
                c.text + "\n"
            };
            Ok((text, 0))
        }
        Command::Enumerate { kind, n } => {
            let lines = enumerate(*kind, *n)?;
            Ok((lines.iter().map(|l| format!("{l}\n")).collect(), 0))
        }
        Command::Verify { list: true, .. } => {
            let text = SUITES
                .iter()
                .map(|s| {
                    format!(
                        "{:22} max-n {:>2} (limit {:>2})  {}\n",
                        s.name, s.default_max_n, s.limit, s.about
                    )
                })
                .collect();
            Ok((text, 0))
        }
        Command::Verify { suite, only, .. } => {
            let suite = suite.as_deref().expect("clap requires a suite");
            let names: Vec<&str> = if suite == "all" {
                SUITES.iter().map(|s| s.name).collect()
            } else {
                vec![suite]
            };
            let opts = Options {
                max_n: cli.max_n,
                jobs: cli.jobs,
                seed: cli.seed,
                only: only.clone(),
            };
            let (mut text, mut reports, mut code) = (String::new(), Vec::new(), 0);
            for name in names {
                let start = Instant::now();
                let report = verify(name, &opts)?;
                eprintln!("{name}: {:.2}s", start.elapsed().as_secs_f64());
                code = code.max(report.exit_code() as u8);
                if json_out {
                    reports.push(report.to_json());
                } else {
                    text.push_str(&report.to_text());
                }
            }
            if json_out {
                text = render(&if reports.len() == 1 {
                    reports.remove(0)
                } else {
                    Value::Array(reports)
                });
            }
            Ok((text, code))
        }
        Command::Search { kind, n } => {
            let kind = CollisionKind::parse(kind)?;
            let n = n
                .or(cli.max_n)
                .ok_or_else(|| Error::Invalid("search needs --n".into()))?;
            let found = search_collision(kind, n)?;
            let text = if json_out {
                render(&json!({"kind": kind.name(), "n": n, "collisions": found}))
            } else {
                let mut s = format!(
                    "{} collisions among {} instances of size {n}\n",
                    found.len(),
                    kind.name()
                );
                for c in &found {
                    s.push_str(&format!("{}  |  {}\n  {}\n", c.first, c.second, c.display));
                }
                s
            };
            Ok((text, 0))
        }
        Command::Certify { file } => {
            let g = GraphRecord::parse(&read_input(file)?)?.graph()?;
            let cert = irreducibility_certificate(&g)?;
            let code = if cert.report.satisfied { 0 } else { 1 };
            let text = if json_out {
                render(&serde_json::to_value(&cert).expect("serializable"))
            } else {
                format!(
                    "k = {}, p = {}, M = {}, satisfied = {}\n",
                    cert.k, cert.p, cert.m, cert.report.satisfied
                )
            };
            Ok((text, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
