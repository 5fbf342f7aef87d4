//! `orcov`: orientation covering numbers from the command line.
//!
//! Exit codes: 0 success or accepted, 1 verification rejected, 2 usage or
//! input error, 3 capacity or search-budget error.

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use orcov_core::families::{for_each_mif, PairOrder};
use orcov_core::oracle::{brute_sigma, BruteSigma, SearchBudget};
use orcov_core::{
    chromatic_number, construct_cover, enumerate_mifs, hosten_morris, parse_graph, sigma_complete,
    sigma_estimate, sigma_of_graph, CoverCertificate, CoverVerdict, Error, Graph, GraphFormat,
    Limits,
};

const EXIT_REJECTED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "orcov",
    version,
    about = "Orientation covering numbers and maximal intersecting families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file (graph6 or edge list), or `-` for stdin.
    graph: PathBuf,
    /// Input format; sniffed from the first line when omitted.
    #[arg(long, value_parser = ["graph6", "edgelist"])]
    format: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of maximal intersecting families over [k].
    Lambda {
        k: u8,
        /// Serve k = 8, 9 from the published table.
        #[arg(long)]
        literature_table: bool,
    },
    /// List every maximal intersecting family over [k], one per line.
    EnumerateMifs {
        k: u8,
        /// Print families as they are found instead of in canonical order.
        #[arg(long)]
        stream: bool,
    },
    /// σ(K_n).
    SigmaComplete {
        n: u128,
        #[arg(long)]
        literature_table: bool,
    },
    /// σ(G), χ(G) and the witnessing ground-set size.
    Sigma {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Closed-form asymptotic estimate of σ(K_n).
    Estimate { n: u128 },
    /// Build a minimum orientation covering.
    ConstructCover {
        #[command(flatten)]
        input: GraphArg,
        /// Write the JSON certificate here (`-` for stdout).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON certificate on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Check a certificate against a graph.
    VerifyCover {
        #[command(flatten)]
        input: GraphArg,
        /// Certificate JSON, or `-` for stdin.
        cert: PathBuf,
    },
    /// σ(G) by exhaustive search over orientation multisets.
    BruteSigma {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 8)]
        max_edges: usize,
        /// Seconds before the search gives up.
        #[arg(long, default_value_t = 300)]
        timeout: u64,
    },
    /// Exact chromatic number.
    Chromatic {
        #[command(flatten)]
        input: GraphArg,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity(_) | Error::Budget(_) => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: e.to_string(),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure {
            code: EXIT_USAGE,
            msg: format!("{}: {e}", path.display()),
        })
    }
}

fn load_graph(arg: &GraphArg) -> Result<Graph, Failure> {
    let text = read_input(&arg.graph)?;
    let format = arg
        .format
        .as_deref()
        .map(str::parse::<GraphFormat>)
        .transpose()?;
    Ok(parse_graph(&text, format)?)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let limits = Limits::from_env()?;
    match cli.command {
        Command::Lambda {
            k,
            literature_table,
        } => {
            let l = hosten_morris(k, &limits.with_literature_table(literature_table))?;
            writeln!(out, "{} {}", l.value, l.provenance)?;
        }
        Command::EnumerateMifs { k, stream } => {
            limits.check_enumerable(k)?;
            if stream {
                let mut res = Ok(());
                for_each_mif(k, PairOrder::Ascending, |f| {
                    if res.is_ok() {
                        res = writeln!(out, "{f}");
                    }
                })?;
                res?;
            } else {
                for f in enumerate_mifs(k)?.families() {
                    writeln!(out, "{f}")?;
                }
            }
        }
        Command::SigmaComplete {
            n,
            literature_table,
        } => {
            let r = sigma_complete(n, &limits.with_literature_table(literature_table))?;
            writeln!(out, "{}", r.value)?;
        }
        Command::Sigma { input } => {
            let g = load_graph(&input)?;
            let r = sigma_of_graph(&g, &limits)?;
            writeln!(
                out,
                "sigma={} chi={} witness_k={} provenance={}",
                r.value, r.chi, r.witness_k, r.provenance
            )?;
        }
        Command::Estimate { n } => {
            let e = sigma_estimate(n)?;
            writeln!(out, "raw={:.6} rounded={}", e.raw, e.rounded)?;
        }
        Command::ConstructCover {
            input,
            out: path,
            json,
        } => {
            let g = load_graph(&input)?;
            let cert = construct_cover(&g, &limits)?;
            let text = cert.to_json();
            match path {
                Some(p) if p == Path::new("-") => writeln!(out, "{text}")?,
                Some(p) => {
                    std::fs::write(&p, format!("{text}\n"))?;
                    eprintln!("wrote {} orientations to {}", cert.k(), p.display());
                }
                None if json => writeln!(out, "{text}")?,
                None => write_summary(out, &g, &cert)?,
            }
        }
        Command::VerifyCover { input, cert } => {
            let g = load_graph(&input)?;
            let cert = CoverCertificate::from_json(&read_input(&cert)?)?;
            if !cert.matches(&g) {
                writeln!(out, "reject: certificate was issued for a different graph")?;
                return Ok(EXIT_REJECTED);
            }
            let verdict = cert.verify(&g)?;
            writeln!(out, "{verdict}")?;
            if let CoverVerdict::Counterexample { .. } = verdict {
                return Ok(EXIT_REJECTED);
            }
        }
        Command::BruteSigma {
            input,
            max_k,
            max_edges,
            timeout,
        } => {
            let g = load_graph(&input)?;
            let budget = SearchBudget {
                max_edges,
                max_k,
                timeout: Duration::from_secs(timeout),
            };
            match brute_sigma(&g, &budget)? {
                BruteSigma::Exact(k) => writeln!(out, "{k}")?,
                BruteSigma::AboveMaxK(k) => writeln!(out, "> {k}")?,
            }
        }
        Command::Chromatic { input } => {
            let g = load_graph(&input)?;
            writeln!(out, "{}", chromatic_number(&g)?)?;
        }
    }
    Ok(0)
}

fn write_summary(out: &mut impl Write, g: &Graph, cert: &CoverCertificate) -> io::Result<()> {
    writeln!(out, "k={}", cert.k())?;
    for (i, o) in cert.orientations().iter().enumerate() {
        let arcs: Vec<String> = g
            .edges()
            .iter()
            .zip(o.dirs())
            .map(|(&(u, v), &fwd)| {
                if fwd {
                    format!("{u}->{v}")
                } else {
                    format!("{v}->{u}")
                }
            })
            .collect();
        writeln!(out, "{}: {}", i + 1, arcs.join(" "))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("orcov: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
