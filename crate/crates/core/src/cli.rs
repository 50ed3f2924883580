//! The `rainbow-lll` command line.
//!
//! Exit codes: 0 success or certificate holds, 1 fails / not found /
//! budget exhausted, 2 usage, format or domain error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::colouring::{gen_k_bounded, gen_locally_k_bounded, EdgeColouring};
use crate::error::{Error, Result};
use crate::experiment::{run_experiment, to_csv, ExperimentSpec};
use crate::graph::{CherryDensity, Graph};
use crate::lll::{
    check_cluster_clique, evaluate_chain, optimize_mu, proper_classes, rainbow_classes,
    standard_mu_proper, standard_mu_rainbow, threshold, ChainSetting, MuForm, SearchConfig,
    Theorem, ThresholdParams,
};
use crate::oracle::{exists_copy_with_budget, DEFAULT_NODE_BUDGET};
use crate::rational::{self, Rational};
use crate::sampler::{find_copy, FindConfig};
use crate::Mode;

#[derive(Debug, Parser)]
#[command(
    name = "rainbow-lll",
    version,
    about = "Local-lemma certificates and resampling search for coloured copies of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree and cherry statistics of a graph.
    Stats {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Largest admissible colour bound k under a theorem.
    Threshold {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        n: u64,
        #[arg(long, conflicts_with = "delta")]
        graph: Option<PathBuf>,
        #[arg(long)]
        delta: Option<u64>,
    },
    /// Check the clique-cover local-lemma condition for a setting.
    Certify(CertifyArgs),
    /// Generate a (locally) k-bounded colouring of K_n.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        mode: Boundedness,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Resampling search for a valid copy.
    Find {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_resamples: Option<u64>,
    },
    /// Exhaustive search for a valid copy.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Run a batch of sampler trials described by a TOML file.
    Experiment {
        #[arg(long)]
        spec: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Boundedness {
    Global,
    Local,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub n: u64,
    #[arg(long, conflicts_with_all = ["delta", "p", "q"])]
    pub graph: Option<PathBuf>,
    #[arg(long, required_unless_present = "graph")]
    pub delta: Option<u64>,
    /// Cherries per vertex of G on average (proper mode).
    #[arg(long, requires = "q")]
    pub p: Option<String>,
    /// Cherries through any vertex of G (proper mode).
    #[arg(long, requires = "p")]
    pub q: Option<String>,
    /// Colour bound; integer, fraction `a/b` or decimal.
    #[arg(long)]
    pub k: String,
    /// Use the fixed μ from the existence proofs (default).
    #[arg(long, conflicts_with = "search_mu")]
    pub paper_mu: bool,
    /// Search for the best μ instead.
    #[arg(long)]
    pub search_mu: bool,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn load_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?)
}

fn load_colouring(path: &Path) -> Result<EdgeColouring> {
    EdgeColouring::parse(&read(path)?)
}

fn emit(out: &mut dyn Write, output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Stats { graph } => {
            let g = load_graph(graph)?;
            let stats = g.cherry_stats();
            let density = stats.density(g.n_vertices() as u64);
            writeln!(out, "n = {}", g.n_vertices())?;
            writeln!(out, "m = {}", stats.edge_count)?;
            writeln!(out, "max_degree = {}", stats.max_degree)?;
            writeln!(out, "total_cherries = {}", stats.total_cherries)?;
            writeln!(out, "p = {}", rational::display(&density.p))?;
            writeln!(out, "q = {}", stats.max_cherries_per_vertex)?;
            Ok(0)
        }
        Command::Threshold {
            theorem,
            n,
            graph,
            delta,
        } => {
            let params = match graph {
                Some(path) => {
                    let g = load_graph(path)?;
                    let stats = g.cherry_stats();
                    ThresholdParams {
                        n: *n,
                        delta: Some(stats.max_degree),
                        density: Some(stats.density(g.n_vertices() as u64)),
                    }
                }
                None => ThresholdParams {
                    n: *n,
                    delta: *delta,
                    density: None,
                },
            };
            writeln!(out, "{}", threshold(*theorem, &params)?)?;
            Ok(0)
        }
        Command::Certify(args) => certify(args, out),
        Command::Gen {
            n,
            k,
            mode,
            seed,
            output,
        } => {
            let colouring = match mode {
                Boundedness::Global => gen_k_bounded(*n, *k, *seed)?,
                Boundedness::Local => gen_locally_k_bounded(*n, *k, *seed)?,
            };
            emit(out, output.as_deref(), &colouring.to_text())?;
            Ok(0)
        }
        Command::Find {
            graph,
            colouring,
            mode,
            seed,
            max_resamples,
        } => {
            let g = load_graph(graph)?;
            let chi = load_colouring(colouring)?;
            let config = FindConfig {
                max_resamples: *max_resamples,
                ..FindConfig::new(*seed)
            };
            let outcome = find_copy(&g, &chi, *mode, &config)?;
            writeln!(out, "{}", outcome.to_json())?;
            Ok(if outcome.is_found() { 0 } else { 1 })
        }
        Command::Oracle {
            graph,
            colouring,
            mode,
            node_budget,
        } => {
            let g = load_graph(graph)?;
            let chi = load_colouring(colouring)?;
            match exists_copy_with_budget(&g, &chi, *mode, *node_budget)? {
                Some(sigma) => {
                    let doc =
                        json!({ "status": "found", "mode": mode, "image_of": sigma.image_of });
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
                    Ok(0)
                }
                None => {
                    writeln!(out, "no valid embedding")?;
                    Ok(1)
                }
            }
        }
        Command::Experiment { spec, output } => {
            let spec = ExperimentSpec::parse(&read(spec)?)?;
            let rows = run_experiment(&spec)?;
            emit(out, output.as_deref(), &to_csv(&rows))?;
            Ok(0)
        }
    }
}

fn certify(args: &CertifyArgs, out: &mut dyn Write) -> Result<i32> {
    let n = args.n;
    let k = rational::parse(&args.k)?;
    if k <= Rational::from_integer(0.into()) {
        return Err(Error::domain("k must be positive"));
    }
    let (delta, density) = match &args.graph {
        Some(path) => {
            let g = load_graph(path)?;
            let stats = g.cherry_stats();
            (stats.max_degree, stats.density(g.n_vertices() as u64))
        }
        None => {
            let delta = args.delta.expect("required by the parser");
            let density = match (&args.p, &args.q) {
                (Some(p), Some(q)) => CherryDensity {
                    p: rational::parse(p)?,
                    q: rational::parse(q)?,
                },
                _ => CherryDensity::from_max_degree(delta),
            };
            (delta, density)
        }
    };
    let (classes, mu, form, setting) = match args.mode {
        Mode::Proper => (
            proper_classes(&density, n, &k)?,
            standard_mu_proper(n)?,
            MuForm::Single,
            ChainSetting::Proper {
                n,
                density: density.clone(),
                k: k.clone(),
            },
        ),
        Mode::Rainbow => {
            if delta == 0 {
                return Err(Error::domain(
                    "rainbow certificates need maximum degree > 0",
                ));
            }
            (
                rainbow_classes(delta, n, &k)?,
                standard_mu_rainbow(n)?,
                MuForm::TwoType,
                ChainSetting::Rainbow {
                    n,
                    delta,
                    k: k.clone(),
                },
            )
        }
    };
    let header = json!({
        "mode": args.mode,
        "n": n,
        "k": rational::display(&k),
        "max_degree": delta,
        "p": rational::display(&density.p),
        "q": rational::display(&density.q),
    });
    let (doc, holds) = if args.search_mu {
        let result = optimize_mu(&classes, &SearchConfig::new(form))?;
        let holds = result.certificate.holds();
        (
            json!({ "setting": header, "mu_source": "search", "search": result }),
            holds,
        )
    } else {
        let certificate = check_cluster_clique(&classes, &mu)?;
        let chain = evaluate_chain(&setting)?;
        let holds = certificate.holds() && chain.holds;
        (
            json!({
                "setting": header,
                "mu_source": "standard",
                "certificate": certificate,
                "chain": chain,
                "holds": holds,
            }),
            holds,
        )
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
    Ok(if holds { 0 } else { 1 })
}
