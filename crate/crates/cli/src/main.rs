//! `split-hc`: certified Hamiltonian-cycle answers for split graphs.
//!
//! Exit codes: 0 verdict produced, 1 negative or missing verdict where one
//! was required, 2 input error, 3 solver/oracle discrepancy.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use split_hc_core::batch::{expand, parse_manifest, run_batch, BatchOptions};
use split_hc_core::engine::classify_premise;
use split_hc_core::graph::first_cycle_violation;
use split_hc_core::io::{parse_cycle, render_cycle};
use split_hc_core::{
    generate, is_two_connected, oracle_solve, parse_graph, recognize_split, reduce, render_graph, solve_with,
    star_free_level, BipartiteInstance, Family, GenSpec, Graph, OracleBudget, OracleVerdict, SolveOptions,
    TwoConnectivity, Verdict,
};

#[derive(Parser)]
#[command(name = "split-hc", version, about = "Hamiltonian cycles in split graphs, with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split partition, star-freeness level, connectivity and premise.
    Recognize { file: PathBuf },
    /// Decide Hamiltonicity; prints a cycle or a no-cycle certificate.
    Solve {
        file: PathBuf,
        /// Let the exact oracle decide instances outside the polynomial cases.
        #[arg(long)]
        oracle_fallback: bool,
        /// Exit 1 unless a cycle is found.
        #[arg(long)]
        require_cycle: bool,
        /// Oracle node budget.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Exact backtracking search.
    Oracle {
        file: PathBuf,
        /// Node budget.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Map a bipartite graph of maximum degree 3 to two split graphs.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        out_prefix: PathBuf,
    },
    /// Generate an instance: `gen planted-hc k=8 i=4 p=0.3 --seed 1 --out g.graph`.
    Gen {
        family: Family,
        /// `k=`, `i=`, `p=` (also `a=`, `b=` for bipartite sides).
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a cycle file against a graph.
    Verify { graph: PathBuf, cycle: PathBuf },
    /// Solve every manifest instance and cross-check with the oracle.
    Batch {
        manifest: PathBuf,
        /// Report file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the summary table on standard output.
        #[arg(long)]
        pretty: bool,
        /// Record wall time per instance (reports stop being reproducible).
        #[arg(long)]
        timing: bool,
        /// Largest instance cross-checked against the oracle.
        #[arg(long, default_value_t = 20)]
        oracle_max_n: usize,
        /// Oracle node budget per instance.
        #[arg(long, default_value_t = 20_000_000)]
        budget: u64,
    },
}

fn read_graph(path: &Path) -> anyhow::Result<(Graph, Option<Vec<usize>>)> {
    let text = fs::read_to_string(path).with_context(|| format!("{}", path.display()))?;
    let f = parse_graph(&text).with_context(|| format!("{}", path.display()))?;
    for w in &f.warnings {
        eprintln!("{}: warning: {w}", path.display());
    }
    Ok((f.graph, f.partition))
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_out(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("{}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn recognize(file: &Path) -> anyhow::Result<u8> {
    let (g, _) = read_graph(file)?;
    let p = match recognize_split(&g) {
        Ok(p) => p,
        Err(w) => {
            println!("split no");
            println!("obstruction {} {}", w.kind, join(&w.vertices));
            return Ok(0);
        }
    };
    println!("split yes");
    println!("K {}", join(p.clique()));
    println!("I {}", join(p.independent()));
    println!("delta_i {}", p.delta_i());
    let level = star_free_level(&g, &p);
    match level.level {
        Some(s) => println!("star_free K_1,{s}"),
        None => println!("star_free none"),
    }
    if let Some(w) = &level.witness {
        println!("largest_star center {} arms {}", w.center, join(&w.arms));
    }
    match is_two_connected(&g) {
        TwoConnectivity::TwoConnected => println!("two_connected yes"),
        TwoConnectivity::CutVertex(v) => println!("two_connected no cut-vertex {v}"),
        TwoConnectivity::Disconnected(v) => println!("two_connected no disconnected {v}"),
        TwoConnectivity::TooSmall => println!("two_connected no too-small"),
    }
    println!("premise {}", classify_premise(&g, &p));
    Ok(0)
}

fn solve_cmd(file: &Path, oracle_fallback: bool, require_cycle: bool, budget: u64) -> anyhow::Result<u8> {
    let (g, _) = read_graph(file)?;
    let opts = SolveOptions { budget: OracleBudget::nodes(budget), oracle_fallback };
    let out = solve_with(&g, &opts).with_context(|| format!("{}", file.display()))?;
    let method = match out.claim {
        Some(c) => format!("{}:{c}", out.method),
        None => out.method.to_string(),
    };
    println!("premise {}", out.premise);
    println!("method {method}");
    if let Some(reason) = &out.fallback {
        println!("fallback {reason}");
    }
    match &out.verdict {
        Verdict::Cycle(c) => {
            if let Some(v) = first_cycle_violation(&g, c) {
                eprintln!("internal error: solver produced an invalid cycle: {v}");
                return Ok(3);
            }
            print!("cycle {}", render_cycle(c));
            Ok(0)
        }
        Verdict::NoCycle(cert) => {
            println!("no-cycle {cert}");
            if !cert.verify(&g) {
                eprintln!("internal error: certificate does not verify");
                return Ok(3);
            }
            Ok(u8::from(require_cycle))
        }
        Verdict::Undecided => {
            println!("undecided");
            if !oracle_fallback {
                eprintln!("outside the polynomial cases; rerun with --oracle-fallback");
            }
            Ok(1)
        }
    }
}

fn oracle_cmd(file: &Path, budget: u64) -> anyhow::Result<u8> {
    let (g, _) = read_graph(file)?;
    match oracle_solve(&g, OracleBudget::nodes(budget)) {
        OracleVerdict::Cycle(c) => {
            print!("cycle {}", render_cycle(&c));
            Ok(0)
        }
        OracleVerdict::NoCycle { nodes } => {
            println!("no-cycle exhaustive {nodes}");
            Ok(0)
        }
        OracleVerdict::Exhausted { nodes } => {
            println!("exhausted {nodes}");
            Ok(1)
        }
    }
}

fn reduce_cmd(file: &Path, prefix: &Path) -> anyhow::Result<u8> {
    let (g, part) = read_graph(file)?;
    let b = match part {
        Some(a) => BipartiteInstance::new(g, &a),
        None => BipartiteInstance::from_two_coloring(g),
    }
    .with_context(|| format!("{}", file.display()))?;
    let r = reduce(&b)?;
    let name = |suffix: &str| {
        let mut s = prefix.as_os_str().to_owned();
        s.push(suffix);
        PathBuf::from(s)
    };
    let (h1, h2, manifest) = (name(".h1.graph"), name(".h2.graph"), name(".manifest"));
    fs::write(&h1, render_graph(&r.h1, Some(&b.part_a)))?;
    fs::write(&h2, render_graph(&r.h2, Some(&b.part_b)))?;
    let mut hist = [0usize; 4];
    for v in 0..b.graph.n() {
        hist[b.graph.degree(v)] += 1;
    }
    let file_name = |p: &Path| p.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let text = format!(
        "# source {}\n# A: {}\n# B: {}\n# degree-histogram 0:{} 1:{} 2:{} 3:{}\nfile {}\nfile {}\n",
        file.display(),
        join(&b.part_a),
        join(&b.part_b),
        hist[0],
        hist[1],
        hist[2],
        hist[3],
        file_name(&h1),
        file_name(&h2)
    );
    fs::write(&manifest, text)?;
    println!("{}\n{}\n{}", h1.display(), h2.display(), manifest.display());
    Ok(0)
}

fn gen_cmd(family: Family, params: &[String], seed: u64, out: Option<&Path>) -> anyhow::Result<u8> {
    let mut words: Vec<&str> = vec![];
    let fam = family.to_string();
    words.push(&fam);
    words.extend(params.iter().map(String::as_str));
    let (mut spec, extra) = GenSpec::parse_words(&words)?;
    if let Some((k, _)) = extra.first() {
        bail!("unknown parameter {k:?}");
    }
    spec.seed = seed;
    let g = generate(&spec)?;
    let text = render_graph(&g.graph, g.clique.as_deref());
    let text = format!("# {}\n{text}", spec.render());
    write_out(out, &text)?;
    Ok(0)
}

fn verify_cmd(graph: &Path, cycle: &Path) -> anyhow::Result<u8> {
    let (g, _) = read_graph(graph)?;
    let text = fs::read_to_string(cycle).with_context(|| format!("{}", cycle.display()))?;
    let c = parse_cycle(&text).with_context(|| format!("{}", cycle.display()))?;
    match first_cycle_violation(&g, &c) {
        None => {
            println!("valid");
            Ok(0)
        }
        Some(v) => {
            println!("invalid {v}");
            Ok(1)
        }
    }
}

fn batch_cmd(manifest: &Path, out: Option<&Path>, pretty: bool, opts: BatchOptions) -> anyhow::Result<u8> {
    let text = fs::read_to_string(manifest).with_context(|| format!("{}", manifest.display()))?;
    let entries = parse_manifest(&text).with_context(|| format!("{}", manifest.display()))?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let instances = expand(&entries, base).with_context(|| format!("{}", manifest.display()))?;
    let report = run_batch(&instances, &opts);
    write_out(out, &report.render())?;
    if pretty {
        print!("{}", report.summary());
    }
    for id in &report.fallbacks {
        eprintln!("fallback {id}");
    }
    if report.discrepancies.is_empty() {
        eprintln!("{} instances, 0 discrepancies", report.records.len());
        return Ok(0);
    }
    let mut dump = String::new();
    for d in &report.discrepancies {
        eprintln!("DISCREPANCY {}: {}", d.id, d.reason);
        dump.push_str(&format!("# {} {}\n{}", d.id, d.reason, render_graph(&d.graph, None)));
    }
    let dump_path = match out {
        Some(p) => {
            let mut s = p.as_os_str().to_owned();
            s.push(".discrepancies");
            PathBuf::from(s)
        }
        None => PathBuf::from("batch.discrepancies"),
    };
    fs::write(&dump_path, dump)?;
    eprintln!("replayable instances written to {}", dump_path.display());
    Ok(3)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Recognize { file } => recognize(&file),
        Command::Solve { file, oracle_fallback, require_cycle, budget } => {
            solve_cmd(&file, oracle_fallback, require_cycle, budget)
        }
        Command::Oracle { file, budget } => oracle_cmd(&file, budget),
        Command::Reduce { file, out_prefix } => reduce_cmd(&file, &out_prefix),
        Command::Gen { family, params, seed, out } => gen_cmd(family, &params, seed, out.as_deref()),
        Command::Verify { graph, cycle } => verify_cmd(&graph, &cycle),
        Command::Batch { manifest, out, pretty, timing, oracle_max_n, budget } => {
            let opts = BatchOptions { budget: OracleBudget::nodes(budget), oracle_max_n, timing };
            batch_cmd(&manifest, out.as_deref(), pretty, opts)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("error")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
