mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use jumpgraph::catalog::{generate, ingest};
use jumpgraph::classify::{ClassifyError, DEFAULT_MAX_K};
use jumpgraph::dot::{graph_to_dot, trace_to_dot, tree_to_dot};
use jumpgraph::format::to_edge_list;
use jumpgraph::preimage::{build_dissipation_tree_guarded, has_jump_preimage, jump_preimages, DEFAULT_TREE_GUARD};
use jumpgraph::verify::{run_checks, CheckId};
use jumpgraph::{classify_with, find_snipped, to_graph6, Graph, Limits, Verdict, MAX_VERTICES};

use input::{read_graph, InputFormat};

const AFTER_HELP: &str = "\
Graph input (--in, --h, --g):
  g6:<string>        graph6 inline, e.g. g6:Dhc
  edges:<list>       inline edges, e.g. edges:0-1,1-2 or edges:6:0-1,1-2 (6 vertices)
  <path>             a file holding one graph
  -                  standard input
Files are graph6 (one line) or an edge list: a header line `n <count>` then one `u v`
per line, `#` starting a comment. The format is detected from the first line unless
--format is given.

Exit status: 0 on success, 1 when a computation cannot be resolved or a check fails,
2 on bad usage or unreadable input.";

#[derive(Parser)]
#[command(name = "jumpgraph", version, about = "Jump graphs: the complement of the line graph, iterated", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Graph to read (see below for forms)
    #[arg(long = "in", value_name = "INPUT", default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
}

#[derive(Args)]
struct OutputArgs {
    /// Format for printed graphs
    #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
    out_format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    Edges,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest number of jumps to take
    #[arg(long, env = "JUMPGRAPH_MAX_K", default_value_t = DEFAULT_MAX_K)]
    max_k: usize,
    /// Largest iterate, in vertices, that is built explicitly
    #[arg(long, env = "JUMPGRAPH_VERTEX_LIMIT", default_value_t = MAX_VERTICES)]
    vertex_limit: usize,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits { max_k: self.max_k, vertex_limit: self.vertex_limit }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the jump graph J(G)
    Jump {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print `k<TAB>n<TAB>m<TAB>graph6` for J^0(G) .. J^K(G)
    Iterate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
    /// Decide whether G dissipates, is a fixed point, or diverges
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        limits: LimitArgs,
        /// Print the vertex map of the C5 or N copy certifying divergence
        #[arg(long)]
        witness: bool,
    },
    /// Print the dissipation number, or INFINITE
    DValue {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Test whether H is a snipped subgraph of G
    Snipped {
        /// The smaller graph
        #[arg(long)]
        h: String,
        /// The host graph
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
    },
    /// Print every H without isolated vertices with J(H) isomorphic to G
    Preimage {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Largest edge count searched; preimages have as many edges as G has vertices
        #[arg(long, default_value_t = 8)]
        bound: usize,
    },
    /// Build the tree of dissipating graphs with at most E edges; prints the manifest
    Tree {
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        /// Also write Graphviz output here
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Refuse edge bounds above this
        #[arg(long, default_value_t = DEFAULT_TREE_GUARD)]
        guard: usize,
    },
    /// Run the verification checks over all graphs with at most N vertices
    Verify {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, env = "JUMPGRAPH_MAX_K", default_value_t = DEFAULT_MAX_K)]
        max_k: usize,
        /// Use the graphs of this graph6 file instead of generating
        #[arg(long, value_name = "PATH")]
        catalog: Option<PathBuf>,
        /// Comma-separated check ids, e.g. V1,V7
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Print `id<TAB>tested<TAB>failures<TAB>status` lines only
        #[arg(long)]
        machine: bool,
        /// Include per-check running times
        #[arg(long)]
        timing: bool,
    },
    /// Write Graphviz output for G, or for its first K iterates with --steps
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "PATH")]
        dot: PathBuf,
        #[arg(long)]
        steps: Option<usize>,
    },
}

enum Fail {
    Usage(anyhow::Error),
    Domain(anyhow::Error),
}

impl From<anyhow::Error> for Fail {
    fn from(e: anyhow::Error) -> Fail {
        Fail::Domain(e)
    }
}

fn usage<T>(r: Result<T>) -> std::result::Result<T, Fail> {
    r.map_err(Fail::Usage)
}

fn print_graph(g: &Graph, f: OutputFormat) {
    match f {
        OutputFormat::Graph6 => println!("{}", to_graph6(g)),
        OutputFormat::Edges => print!("{}", to_edge_list(g)),
    }
}

fn iterate_error(k: usize, prev: &Graph) -> anyhow::Error {
    anyhow!("iterate {k} would have {} vertices, beyond the limit of {MAX_VERTICES}", prev.edge_count())
}

fn trace_table(out: &mut String, trace: &[jumpgraph::classify::TraceStep]) {
    out.push_str("k\tn\tm\n");
    for s in trace {
        writeln!(out, "{}\t{}\t{}", s.k, s.vertices, s.edges).unwrap();
    }
}

fn run(cli: Cli) -> std::result::Result<(), Fail> {
    match cli.command {
        Command::Jump { input, output } => {
            let g = usage(read_graph(&input.input, input.format))?;
            let j = g.jump().map_err(|_| iterate_error(1, &g))?;
            print_graph(&j, output.out_format);
        }
        Command::Iterate { input, steps } => {
            let mut g = usage(read_graph(&input.input, input.format))?;
            for k in 0..=steps {
                println!("{k}\t{}\t{}\t{}", g.vertex_count(), g.edge_count(), to_graph6(&g));
                if k < steps {
                    g = g.jump().map_err(|_| iterate_error(k + 1, &g))?;
                }
            }
        }
        Command::Classify { input, limits, witness } => {
            let g = usage(read_graph(&input.input, input.format))?;
            let mut out = String::new();
            match classify_with(&g, &limits.limits()) {
                Ok(c) => {
                    match &c.verdict {
                        Verdict::Dissipates { d } => writeln!(out, "DISSIPATES d={d}").unwrap(),
                        Verdict::Converges { fixed_point } => writeln!(out, "CONVERGES target={fixed_point}").unwrap(),
                        Verdict::Diverges(acc) => {
                            writeln!(out, "DIVERGES k={} target={}", acc.k, acc.target).unwrap();
                            if witness {
                                let map: Vec<String> =
                                    acc.witness.vertex_map.iter().enumerate().map(|(i, x)| format!("{i}->{x}")).collect();
                                writeln!(out, "witness {}", map.join(" ")).unwrap();
                            }
                        }
                    }
                    trace_table(&mut out, &c.trace);
                    print!("{out}");
                }
                Err(ClassifyError::Unresolved { reason, trace, snipped_hint, .. }) => {
                    write!(out, "UNRESOLVED {reason}").unwrap();
                    if let Some(tag) = snipped_hint {
                        write!(out, "; {tag} is snipped in the last iterate").unwrap();
                    }
                    out.push('\n');
                    trace_table(&mut out, &trace);
                    print!("{out}");
                    return Err(Fail::Domain(anyhow!("classification unresolved; raise --max-k")));
                }
                Err(e) => return Err(Fail::Usage(e.into())),
            }
        }
        Command::DValue { input, limits } => {
            let g = usage(read_graph(&input.input, input.format))?;
            match classify_with(&g, &limits.limits()) {
                Ok(c) => match c.d_value() {
                    Some(d) => println!("{d}"),
                    None => println!("INFINITE"),
                },
                Err(e @ ClassifyError::Unresolved { .. }) => {
                    println!("UNRESOLVED");
                    return Err(Fail::Domain(e.into()));
                }
                Err(e) => return Err(Fail::Usage(e.into())),
            }
        }
        Command::Snipped { h, g, format } => {
            let h = usage(read_graph(&h, format))?;
            let g = usage(read_graph(&g, format))?;
            let hs = h.strip_isolated();
            if hs.vertex_count() != h.vertex_count() {
                eprintln!("note: isolated vertices of H dropped; labels refer to the remaining vertices in order");
            }
            match find_snipped(&hs, &g) {
                Some(w) => println!("{w}"),
                None => println!("NOT-SNIPPED"),
            }
        }
        Command::Preimage { input, output, bound } => {
            let g = usage(read_graph(&input.input, input.format))?;
            if !has_jump_preimage(&g) {
                eprintln!("no preimage: the complement is not a line graph");
                return Ok(());
            }
            for h in jump_preimages(&g, bound).context("preimage search")? {
                print_graph(&h, output.out_format);
            }
        }
        Command::Tree { max_edges, dot, guard } => {
            let t = build_dissipation_tree_guarded(max_edges, guard).map_err(|e| Fail::Usage(e.into()))?;
            print!("{}", t.manifest());
            if let Some(path) = dot {
                std::fs::write(&path, tree_to_dot(&t)).with_context(|| format!("cannot write {}", path.display()))?;
            }
        }
        Command::Verify { n_max, max_k, catalog, checks, machine, timing } => {
            let ids: Vec<CheckId> = if checks.is_empty() {
                CheckId::ALL.to_vec()
            } else {
                usage(checks.iter().map(|c| c.parse::<CheckId>().map_err(anyhow::Error::from)).collect())?
            };
            let cat = match catalog {
                Some(path) => usage(ingest(&path).map_err(anyhow::Error::from))?,
                None => usage(generate(n_max).map_err(anyhow::Error::from))?,
            };
            let report = usage(run_checks(&cat, max_k, &ids).map_err(anyhow::Error::from))?;
            if machine {
                print!("{}", report.to_machine());
            } else {
                print!("{}", report.to_text(timing));
            }
            if !report.passed() {
                return Err(Fail::Domain(anyhow!("{} check failures", report.failure_count())));
            }
        }
        Command::Render { input, dot, steps } => {
            let g = usage(read_graph(&input.input, input.format))?;
            let text = match steps {
                None => graph_to_dot(&g, "G"),
                Some(k) => {
                    let mut its = vec![g];
                    for i in 1..=k {
                        let last = its.last().expect("nonempty");
                        let next = last.jump().map_err(|_| iterate_error(i, last))?;
                        its.push(next);
                    }
                    trace_to_dot(&its)
                }
            };
            std::fs::write(&dot, text).with_context(|| format!("cannot write {}", dot.display()))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(e)) => {
            eprintln!("error: {e:#}");
            eprintln!("hint: run `jumpgraph --help` for input forms and options");
            ExitCode::from(2)
        }
    }
}
