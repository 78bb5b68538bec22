use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tempfile::NamedTempFile;

use ecc_core::enumerate::{extremal_scan, ScanClass};
use ecc_core::families::Family;
use ecc_core::graph::edgelist;
use ecc_core::metrics::{closed_form_tau, index_report};
use ecc_core::rewrite::Algorithm;
use ecc_core::verify::{self, Bounds};
use ecc_core::Graph;

/// Total eccentricity index: compute, construct, rewrite, enumerate, verify.
#[derive(Parser)]
#[command(name = "ecc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eccentricity indices of a connected graph given as an edge list.
    Tau {
        file: PathBuf,
        /// Also print every vertex eccentricity.
        #[arg(long)]
        all: bool,
    },
    /// Build a named family member and compare its closed form with BFS.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        /// Second parameter: k for double_star, m for complete_bipartite.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run a tree rewriting procedure (1: to path, 2: to star, 3: conjugated
    /// tree to its minimum).
    Rewrite {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        algorithm: u8,
        file: PathBuf,
        /// Write the trace here instead of standard output.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Extremal scan per order as CSV.
    Enumerate {
        /// tree, unicyclic, bicyclic, conjugated-tree or all.
        #[arg(long)]
        class: String,
        #[arg(long)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        /// Dump every extremal witness as an edge-list file here.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
        #[command(flatten)]
        threads: Threads,
    },
    /// Run the full verification suite and print a pass/fail table.
    Verify {
        /// Cap every class bound at this order.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_tree: Option<usize>,
        #[arg(long)]
        max_unicyclic: Option<usize>,
        #[arg(long)]
        max_bicyclic: Option<usize>,
        #[arg(long)]
        max_conjugated: Option<usize>,
        /// Replace the named family's constructor by a cycle of equal order.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
        #[command(flatten)]
        threads: Threads,
    },
}

#[derive(Args)]
struct Threads {
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

impl Threads {
    fn install(&self) -> Result<(), Failure> {
        if let Some(n) = self.threads {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| Failure::Input(format!("cannot start thread pool: {e}")))?;
        }
        Ok(())
    }
}

enum Failure {
    /// Bad arguments or input; exit code 1.
    Input(String),
    /// A check did not hold; exit code 2.
    Check(String),
}

impl From<ecc_core::Error> for Failure {
    fn from(e: ecc_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    edgelist::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Write `contents` to `path` through a temporary file in the same directory.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Input(format!("{}: {e}", path.display()));
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

fn cmd_tau(file: &Path, all: bool) -> Result<(), Failure> {
    let r = index_report(&read_graph(file)?)?;
    println!(
        "n={} m={} tau={} avec={} xi={} rad={} diam={}",
        r.n, r.m, r.tau, r.avec, r.xi, r.rad, r.diam
    );
    if all {
        let ecc: Vec<String> = r.ecc.iter().map(u32::to_string).collect();
        println!("ecc={}", ecc.join(" "));
    }
    Ok(())
}

fn cmd_family(name: &str, n: usize, k: Option<usize>) -> Result<(), Failure> {
    let family = Family::parse(name, n, k)?;
    let g = family.construct()?;
    let computed = index_report(&g)?.tau;
    print!("# {family}\n{}", edgelist::write(&g));
    println!("# tau_computed={computed}");
    match closed_form_tau(family) {
        Ok(cf) => {
            println!("# tau_closed_form={}", cf.value);
            println!("# tau_published={}", cf.published);
            println!("# formula={}", cf.formula);
            println!("# status={}", cf.status);
            if !cf.note.is_empty() {
                println!("# note={}", cf.note);
            }
        }
        Err(e) => println!("# closed_form=unavailable ({e})"),
    }
    Ok(())
}

fn cmd_rewrite(algorithm: u8, file: &Path, trace_out: Option<&Path>) -> Result<(), Failure> {
    let alg = Algorithm::from_number(algorithm)
        .ok_or_else(|| Failure::Input(format!("unknown algorithm {algorithm}")))?;
    let g = read_graph(file)?;
    let trace = alg.run(&g)?;
    trace
        .check_monotone()
        .map_err(|e| Failure::Check(e.to_string()))?;
    let text = trace.to_text();
    match trace_out {
        Some(path) => write_atomic(path, &text)?,
        None => print!("{text}"),
    }
    println!(
        "algorithm {alg}: tau {} -> {} in {} steps, {} rounds",
        trace.initial_tau,
        trace.final_tau(),
        trace.steps.len(),
        trace.round_count()
    );
    Ok(())
}

fn cmd_enumerate(
    class: &str,
    min_n: usize,
    max_n: usize,
    witness_dir: Option<&Path>,
) -> Result<(), Failure> {
    let classes: Vec<ScanClass> = if class == "all" {
        ScanClass::ALL.to_vec()
    } else {
        vec![class.parse().map_err(Failure::Input)?]
    };
    if min_n > max_n {
        return Err(Failure::Input(format!(
            "--min-n {min_n} exceeds --max-n {max_n}"
        )));
    }
    let mut csv = String::from("class,n,count,min_tau,max_tau,min_witnesses,max_witnesses\n");
    let mut dumps = Vec::new();
    for class in classes {
        for n in (min_n..=max_n).filter(|&n| class.accepts(n)) {
            let r = extremal_scan(class, n)?;
            csv.push_str(&format!(
                "{class},{n},{},{},{},{},{}\n",
                r.count,
                r.min_tau,
                r.max_tau,
                r.min_witnesses.len(),
                r.max_witnesses.len()
            ));
            for (kind, ws) in [("min", &r.min_witnesses), ("max", &r.max_witnesses)] {
                for (i, w) in ws.iter().enumerate() {
                    let name = format!("{class}_n{n}_{kind}_{i}.txt");
                    dumps.push((name, edgelist::write(&w.graph)));
                }
            }
        }
    }
    if let Some(dir) = witness_dir {
        fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        for (name, text) in &dumps {
            write_atomic(&dir.join(name), text)?;
        }
    }
    print!("{csv}");
    Ok(())
}

fn cmd_verify(bounds: Bounds, inject_fault: Option<&str>) -> Result<(), Failure> {
    let broken = match inject_fault {
        Some(name) => Some(
            Family::parse(name, 8, None)
                .or_else(|_| Family::parse(name, 9, None))?
                .name(),
        ),
        None => None,
    };
    let ctor = move |f: Family| match broken {
        Some(name) if f.name() == name && f.order() >= 3 => Family::Cycle(f.order()).construct(),
        _ => f.construct(),
    };
    let report = verify::run_all(&bounds, &ctor)?;
    println!("{report}");
    if report.all_passed() {
        Ok(())
    } else {
        let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        Err(Failure::Check(format!("failed: {}", names.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Tau { file, all } => cmd_tau(&file, all),
        Command::Family { name, n, k } => cmd_family(&name, n, k),
        Command::Rewrite {
            algorithm,
            file,
            trace,
        } => cmd_rewrite(algorithm, &file, trace.as_deref()),
        Command::Enumerate {
            class,
            min_n,
            max_n,
            witness_dir,
            threads,
        } => {
            threads.install()?;
            cmd_enumerate(&class, min_n, max_n, witness_dir.as_deref())
        }
        Command::Verify {
            max_n,
            max_tree,
            max_unicyclic,
            max_bicyclic,
            max_conjugated,
            inject_fault,
            threads,
        } => {
            threads.install()?;
            let base = max_n.map_or_else(Bounds::default, Bounds::capped);
            let bounds = Bounds {
                tree: max_tree.unwrap_or(base.tree),
                unicyclic: max_unicyclic.unwrap_or(base.unicyclic),
                bicyclic: max_bicyclic.unwrap_or(base.bicyclic),
                conjugated: max_conjugated.unwrap_or(base.conjugated),
            };
            cmd_verify(bounds, inject_fault.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failure: {msg}");
            ExitCode::from(2)
        }
    }
}
