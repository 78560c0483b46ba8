//! `defcol`: defective colouring, enumeration and exhaustive checks.
//!
//! Exit codes: 0 success or verified, 1 refuted (or a negative answer for
//! `iso`), 2 usage or input error.

mod input;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use defcol_core::catalog::{self, export_catalog};
use defcol_core::coloring::{defective_chromatic_number, find_mk_coloring, is_mk_critical, is_mk_edge_critical};
use defcol_core::enumerate::{EnumerationTask, Filter, Shard};
use defcol_core::iso::are_isomorphic;
use defcol_core::verify::{self, checks, CheckOptions, Universes, VerificationReport};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}: {1}")]
    Io(String, #[source] io::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(name = "defcol", version, about = "k-defective colouring of small triangle-free graphs")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Directory for cached universes.
    #[arg(long, global = true, env = "DEFCOL_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Machine-readable output where supported.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// graph6 file, `-` for stdin, or an inline graph6 string.
    input: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print `g6 TAB chi_k TAB witness` for each input graph.
    Chi {
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        source: GraphInput,
    },
    /// Decide (m,k)-colourability.
    Color {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        source: GraphInput,
    },
    /// Decide (m,k)-criticality.
    Critical {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        source: GraphInput,
    },
    /// Decide (m,k)-edge-criticality.
    EdgeCritical {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        source: GraphInput,
    },
    /// Test two graphs for isomorphism; prints the vertex map.
    Iso { g: String, h: String },
    /// Write one canonical graph6 line per isomorphism class, sorted.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "tf")]
        filter: Filter,
        #[arg(long)]
        shard: Option<Shard>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List catalog graphs, print one by name, or export them.
    Catalog {
        name: Option<String>,
        /// Write catalog.g6 and catalog.labels.txt here.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run a check (or `all`) and report.
    Verify {
        check: String,
        /// Extend flag-gated sweeps to orders 11 and 12.
        #[arg(long)]
        long: bool,
        #[arg(long, default_value_t = checks::DEFAULT_SEED)]
        seed: u64,
        /// Random graphs for the monotonicity check.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Largest order, for `colourable` and `lovasz`.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Write the JSON report (an array for `all`) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(2);
        }
        // fails only if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn stdout() -> BufWriter<io::StdoutLock<'static>> {
    BufWriter::new(io::stdout().lock())
}

fn io_err(what: &str) -> impl Fn(io::Error) -> CliError + '_ {
    move |e| CliError::Io(what.to_string(), e)
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Chi { k, source } => {
            let mut out = stdout();
            for line in input::read_graphs(source.input.as_deref())? {
                let r = defective_chromatic_number(&line.graph, *k);
                writeln!(out, "{}\t{}\t{}", line.text, r.chi, r.witness).map_err(io_err("stdout"))?;
            }
            out.flush().map_err(io_err("stdout"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Color { m, k, source } => {
            let mut out = stdout();
            for line in input::read_graphs(source.input.as_deref())? {
                let text = match find_mk_coloring(&line.graph, *m, *k) {
                    Some(p) => format!("{}\tcolourable\t{p}", line.text),
                    None => format!("{}\tnot-colourable\t-", line.text),
                };
                writeln!(out, "{text}").map_err(io_err("stdout"))?;
            }
            out.flush().map_err(io_err("stdout"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Critical { m, k, source } => {
            let mut out = stdout();
            for line in input::read_graphs(source.input.as_deref())? {
                let c = is_mk_critical(&line.graph, *m, *k);
                let mut text = format!("{}\t{}\tchi={}", line.text, flag(c.holds, "critical"), c.chi);
                if let Some(u) = c.blocker {
                    text.push_str(&format!("\tblocker={u}"));
                }
                writeln!(out, "{text}").map_err(io_err("stdout"))?;
            }
            out.flush().map_err(io_err("stdout"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::EdgeCritical { m, k, source } => {
            let mut out = stdout();
            for line in input::read_graphs(source.input.as_deref())? {
                let c = is_mk_edge_critical(&line.graph, *m, *k);
                let mut text = format!("{}\t{}\tchi={}", line.text, flag(c.holds, "edge-critical"), c.chi);
                if let Some((a, b)) = c.blocker {
                    text.push_str(&format!("\tblocker={a}-{b}"));
                }
                writeln!(out, "{text}").map_err(io_err("stdout"))?;
            }
            out.flush().map_err(io_err("stdout"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Iso { g, h } => {
            let g = single_graph(g)?;
            let h = single_graph(h)?;
            match are_isomorphic(&g, &h).map_err(|e| CliError::Usage(e.to_string()))? {
                Some(map) => {
                    let m: Vec<String> = map.0.iter().map(|v| v.to_string()).collect();
                    println!("isomorphic\t{}", m.join(","));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("not-isomorphic");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Enumerate { n, filter, shard, out } => enumerate(cli, *n, *filter, *shard, out.as_ref()),
        Command::Catalog { name, export } => {
            if let Some(dir) = export {
                export_catalog(dir).map_err(io_err(&dir.display().to_string()))?;
            }
            match name {
                Some(name) => {
                    let g = catalog::catalog_graph(name).map_err(|e| CliError::Usage(e.to_string()))?;
                    println!("{g}");
                }
                None if export.is_none() => {
                    for e in catalog::entries() {
                        println!("{}\t{}", e.name, e.graph);
                    }
                }
                None => {}
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            check,
            long,
            seed,
            samples,
            n,
            m,
            k,
            out,
        } => {
            let opts = CheckOptions {
                long: *long,
                seed: *seed,
                random_graphs: *samples,
            };
            let universes = match &cli.cache_dir {
                Some(dir) => Universes::with_cache_dir(dir),
                None => Universes::in_memory(),
            };
            let ids: Vec<&str> = if check == "all" {
                checks::available_checks().to_vec()
            } else {
                vec![check.as_str()]
            };
            let mut reports = Vec::new();
            for id in ids {
                let r = match id {
                    "colourable" => {
                        let (n, m, k) = match (n, m, k) {
                            (Some(n), Some(m), Some(k)) => (*n, *m, *k),
                            _ => return Err(CliError::Usage("colourable needs --n, --m and --k".into())),
                        };
                        verify::verify_colourable(&universes, 1..=n, m, k)
                    }
                    "lovasz" => verify::verify_lovasz_bound(&universes, n.unwrap_or(10), k.unwrap_or(2)),
                    _ => verify::run_check(id, &universes, &opts),
                }
                .map_err(|e| CliError::Usage(e.to_string()))?;
                if !cli.json {
                    println!(
                        "{}\t{}\tuniverse={}\tcounterexamples={}\t{}ms",
                        r.check_id,
                        if r.is_verified() { "verified" } else { "refuted" },
                        r.universe_size,
                        r.counterexamples.len(),
                        r.wall_time_ms
                    );
                }
                reports.push(r);
            }
            let doc = render(&reports, check == "all");
            if cli.json {
                println!("{doc}");
            }
            if let Some(path) = out {
                fs::write(path, format!("{doc}\n")).map_err(io_err(&path.display().to_string()))?;
            }
            let ok = reports.iter().all(VerificationReport::is_verified);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn flag(holds: bool, word: &str) -> String {
    if holds {
        word.to_string()
    } else {
        format!("not-{word}")
    }
}

fn single_graph(s: &str) -> Result<defcol_core::Graph, CliError> {
    let mut lines = input::read_graphs(Some(s))?;
    match lines.len() {
        1 => Ok(lines.remove(0).graph),
        n => Err(CliError::Usage(format!("expected one graph, found {n}"))),
    }
}

fn render(reports: &[VerificationReport], as_array: bool) -> String {
    if as_array {
        serde_json::to_string_pretty(reports).expect("reports serialise")
    } else {
        reports[0].to_json()
    }
}

fn enumerate(
    cli: &Cli,
    n: usize,
    filter: Filter,
    shard: Option<Shard>,
    out: Option<&PathBuf>,
) -> Result<ExitCode, CliError> {
    let mut task = EnumerationTask::new(n, filter).map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(s) = shard {
        task = task.with_shard(s);
    }
    let mut lines: Vec<String> = task.par_filter_map(|g| Some(g.to_string()));
    lines.sort_unstable();
    let mut body = String::with_capacity(lines.len() * (n + 2));
    for l in &lines {
        body.push_str(l);
        body.push('\n');
    }
    match out {
        Some(path) => fs::write(path, body).map_err(io_err(&path.display().to_string()))?,
        None => {
            let mut o = stdout();
            o.write_all(body.as_bytes()).map_err(io_err("stdout"))?;
            o.flush().map_err(io_err("stdout"))?;
        }
    }
    eprintln!("n={n} classes={}", lines.len());
    if cli.json {
        eprintln!(
            "{}",
            serde_json::json!({ "n": n, "filter": filter.tag(), "classes": lines.len(),
                "shard": shard.map(|s| format!("{}/{}", s.index, s.count)) })
        );
    }
    Ok(ExitCode::SUCCESS)
}
