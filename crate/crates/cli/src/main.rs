use std::fmt::Display;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclic_ie::bipartite::n_expansion;
use cyclic_ie::digraph::{cie, undirected_cycles, GraphElement};
use cyclic_ie::gamma::{gamma_nc, gamma_unlabeled};
use cyclic_ie::kerov::{kerov_coeff, kerov_table, Partition};
use cyclic_ie::rewrite::{cie_span_rank, CycleMode, Reducer, Target};
use cyclic_ie::setcomp::to_dstar;
use cyclic_ie::wqsym::{convert, WqsymElement};
use cyclic_ie::{selftest, Basis, DStarPerm, Digraph, Error, Rational, SetComposition, UndirectedCycle};

#[derive(Parser)]
#[command(name = "cyclic-ie", version, about = "Gessel morphisms of acyclic digraphs, CIE rewriting and Kerov coefficients")]
struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Image of a graph in WQSym (or QSym with --commutative).
    Gamma {
        /// Graph file ("-" for stdin).
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "M")]
        basis: Basis,
        /// Project to QSym in the monomial basis.
        #[arg(long)]
        commutative: bool,
    },
    /// Lists the simple cycles of a graph, or expands the CIE element of one.
    Cie {
        #[arg(long)]
        graph: PathBuf,
        /// Cycle as a comma separated vertex list, e.g. 6,2,3,5,1.
        #[arg(long)]
        cycle: Option<String>,
    },
    /// Rewrites a graph into canonical graphs modulo CIE.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        /// Target the bipartite canonical graphs instead.
        #[arg(long)]
        bipartite: bool,
        /// Print every rewrite step.
        #[arg(long)]
        trace: bool,
    },
    /// Rank of the CIE span over all labeled graphs on n vertices.
    KernelRank {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        #[arg(long)]
        bipartite: bool,
    },
    /// Support of the N-expansion of a bipartite graph.
    NExpand {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Kerov coefficients of the normalized character of type mu.
    Kerov {
        #[arg(long)]
        mu: Partition,
        #[arg(long, conflicts_with = "table")]
        nu: Option<Partition>,
        /// Every admissible nu with its coefficient.
        #[arg(long)]
        table: bool,
    },
    /// Expands one basis element of WQSym in another basis.
    Bases {
        #[arg(long)]
        from: Basis,
        #[arg(long)]
        to: Basis,
        /// Set composition, or starred permutation for L and F.
        #[arg(long)]
        key: String,
    },
    /// Reproduces the worked examples.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    All,
    Small,
}

enum Failure {
    Input(String),
    Cap(String),
    Selftest,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.max(1)).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if let Failure::Input(msg) | Failure::Cap(msg) = &failure {
                eprintln!("error: {msg}");
            }
            ExitCode::from(exit_code(&failure))
        }
    }
}

fn exit_code(failure: &Failure) -> u8 {
    match failure {
        Failure::Input(_) => 1,
        Failure::Cap(_) => 2,
        Failure::Selftest => 3,
    }
}

fn read_graph(path: &PathBuf) -> Result<Digraph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    Ok(Digraph::parse_text(&text)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

/// Two columns, the coefficients right-aligned.
fn print_table<C: Display, K: Display>(rows: &[(C, K)]) {
    let cells: Vec<(String, String)> = rows.iter().map(|(c, k)| (c.to_string(), k.to_string())).collect();
    let width = cells.iter().map(|(c, _)| c.len()).max().unwrap_or(0);
    for (c, k) in cells {
        println!("{c:>width$}  {k}");
    }
}

fn wqsym_rows(v: &WqsymElement<Rational>) -> Vec<(Rational, String)> {
    v.terms()
        .iter()
        .map(|(k, c)| {
            let key = match v.basis() {
                Basis::L | Basis::F => to_dstar(k).to_string(),
                Basis::M | Basis::N => k.to_string(),
            };
            (c.clone(), format!("{}_{key}", v.basis()))
        })
        .collect()
}

fn graph_label(g: &Digraph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}->{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn print_graph_vec(v: &GraphElement<Rational>, json: bool) {
    if json {
        print_json(&v.to_json());
    } else {
        let rows: Vec<(Rational, String)> = v.terms().iter().map(|(g, c)| (c.clone(), graph_label(g))).collect();
        print_table(&rows);
    }
}

fn cycle_json(c: &UndirectedCycle) -> Value {
    json!({
        "vertices": c.vertices(),
        "plus": c.plus_edges(),
        "minus": c.minus_edges(),
    })
}

fn parse_cycle(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| Failure::Input(format!("cycle vertex {t:?}: {e}"))))
        .collect()
}

fn parse_key(basis: Basis, key: &str) -> Result<WqsymElement<Rational>, Failure> {
    Ok(match basis {
        Basis::L | Basis::F => WqsymElement::from_dstar(basis, &key.parse::<DStarPerm>()?),
        Basis::M | Basis::N => WqsymElement::basis_element(basis, key.parse::<SetComposition>()?),
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Gamma { graph, basis, commutative } => {
            let g = read_graph(graph)?;
            if *commutative {
                let q = gamma_unlabeled::<Rational>(&g);
                if cli.json {
                    print_json(&q.to_json());
                } else {
                    let rows: Vec<(Rational, String)> =
                        q.terms().iter().map(|(k, c)| (c.clone(), format!("M_{k}"))).collect();
                    print_table(&rows);
                }
            } else {
                let v = convert(&gamma_nc::<Rational>(&g), *basis)?;
                if cli.json {
                    print_json(&v.to_json());
                } else {
                    print_table(&wqsym_rows(&v));
                }
            }
        }
        Command::Cie { graph, cycle } => {
            let g = read_graph(graph)?;
            match cycle {
                Some(c) => {
                    let c = UndirectedCycle::from_vertices(&g, parse_cycle(c)?)?;
                    let v = cie::<Rational>(&g, &c)?;
                    print_graph_vec(&v, cli.json);
                }
                None => {
                    let cycles = undirected_cycles(&g, g.n());
                    if cli.json {
                        print_json(&Value::Array(cycles.iter().map(cycle_json).collect()));
                    } else {
                        for c in &cycles {
                            let list = |es: &[(usize, usize)]| {
                                es.iter().map(|(u, v)| format!("{u}->{v}")).collect::<Vec<_>>().join(" ")
                            };
                            let vs: Vec<String> = c.vertices().iter().map(ToString::to_string).collect();
                            println!("({})  plus: {}  minus: {}", vs.join(","), list(c.plus_edges()), list(c.minus_edges()));
                        }
                    }
                }
            }
        }
        Command::Reduce { graph, bipartite, trace } => {
            let g = read_graph(graph)?;
            let target = if *bipartite { Target::Bipartite } else { Target::Canonical };
            let mut reducer: Reducer<Rational> =
                if *trace { Reducer::with_trace(target) } else { Reducer::new(target) };
            let v = reducer.reduce(&g)?;
            if cli.json {
                let steps: Vec<Value> = reducer
                    .trace()
                    .iter()
                    .map(|s| {
                        json!({
                            "graph": s.graph.edges_json(),
                            "rule": s.rule.to_string(),
                            "replacement": s.replacement.iter()
                                .map(|(h, c)| json!([h.edges_json(), c]))
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                let mut out = json!({"result": v.to_json()});
                if *trace {
                    out["trace"] = Value::Array(steps);
                }
                print_json(&out);
            } else {
                for s in reducer.trace() {
                    let parts: Vec<String> =
                        s.replacement.iter().map(|(h, c)| format!("{c:+} {}", graph_label(h))).collect();
                    println!("{}  [{}]  => {}", graph_label(&s.graph), s.rule, parts.join(", "));
                }
                if *trace {
                    println!();
                }
                print_graph_vec(&v, false);
            }
        }
        Command::KernelRank { n, mode, bipartite } => {
            let cycle_mode = match mode {
                Mode::All => CycleMode::All,
                Mode::Small => CycleMode::Small,
            };
            let rank = cie_span_rank(*n, cycle_mode, *bipartite)?;
            if cli.json {
                let mode = match mode {
                    Mode::All => "all",
                    Mode::Small => "small",
                };
                print_json(&json!({"n": n, "mode": mode, "bipartite": bipartite, "rank": rank}));
            } else {
                println!("{rank}");
            }
        }
        Command::NExpand { graph } => {
            let g = read_graph(graph)?;
            let v = n_expansion::<Rational>(&g)?;
            if cli.json {
                print_json(&v.to_json());
            } else {
                for k in v.terms().keys() {
                    println!("{k}");
                }
            }
        }
        Command::Kerov { mu, nu, table } => match (nu, table) {
            (Some(nu), _) => {
                let c = kerov_coeff(mu, nu)?;
                if cli.json {
                    print_json(&json!({"mu": mu.to_string(), "nu": nu.to_string(), "coefficient": c}));
                } else {
                    println!("{c}");
                }
            }
            (None, _) => {
                let rows = kerov_table(mu)?;
                let rows: Vec<(i64, Partition)> = if *table {
                    rows.into_iter().map(|(nu, c)| (c, nu)).collect()
                } else {
                    rows.into_iter().filter(|(_, c)| *c != 0).map(|(nu, c)| (c, nu)).collect()
                };
                if cli.json {
                    let terms: Vec<Value> = rows.iter().map(|(c, nu)| json!([nu.to_string(), c])).collect();
                    print_json(&json!({"mu": mu.to_string(), "terms": terms}));
                } else {
                    let rows: Vec<(i64, String)> = rows
                        .into_iter()
                        .map(|(c, nu)| {
                            let monomial: Vec<String> = nu.parts().iter().map(|k| format!("R_{}", k + 1)).collect();
                            (c, monomial.join(" "))
                        })
                        .collect();
                    print_table(&rows);
                }
            }
        },
        Command::Bases { from, to, key } => {
            let v = convert(&parse_key(*from, key)?, *to)?;
            if cli.json {
                print_json(&v.to_json());
            } else {
                print_table(&wqsym_rows(&v));
            }
        }
        Command::Selftest => {
            let checks = selftest::run_all();
            let failed = checks.iter().filter(|c| !c.passed()).count();
            if cli.json {
                let items: Vec<Value> = checks
                    .iter()
                    .map(|c| json!({"name": c.name, "passed": c.passed(), "expected": c.expected, "actual": c.actual}))
                    .collect();
                print_json(&json!({"checks": items, "failed": failed}));
            } else {
                for c in &checks {
                    let verdict = if c.passed() { "PASS" } else { "FAIL" };
                    println!("{verdict}  {}: {}", c.name, c.actual);
                    if !c.passed() {
                        println!("      expected: {}", c.expected);
                    }
                }
                println!("{} of {} examples reproduced", checks.len() - failed, checks.len());
            }
            if failed > 0 {
                return Err(Failure::Selftest);
            }
        }
    }
    Ok(())
}
