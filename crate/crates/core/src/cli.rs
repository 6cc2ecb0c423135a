//! Command-line front end. Every command prints one JSON document.
//!
//! Exit codes: 0 success, 1 negative answer, 2 usage or input error,
//! 3 search budget or arithmetic overflow, 4 internal proof-step failure.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::collapse;
use crate::error::Error;
use crate::graph::{connected_graphs, Family, Graph, GraphFile};
use crate::oracle::{self, SearchBudget, DEFAULT_MAX_STATES};
use crate::pebbling::{Distribution, GoalDistribution};
use crate::solver;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

/// Outcome of one invocation: exit status, JSON for stdout, text for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: u8,
    pub payload: Option<Value>,
    pub diagnostic: Option<String>,
}

impl CommandResult {
    fn json(status: u8, payload: Value) -> Self {
        CommandResult {
            status,
            payload: Some(payload),
            diagnostic: None,
        }
    }

    fn failure(error: &Error) -> Self {
        let status = match error {
            Error::BudgetExceeded { .. } | Error::Overflow(_) => EXIT_LIMIT,
            Error::ProofViolation(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        CommandResult {
            status,
            payload: None,
            diagnostic: Some(format!("error: {error}")),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pebble",
    version,
    about = "Cover pebbling numbers of connected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cover pebbling number and the cost from every node.
    Gamma(GraphArgs),
    /// Decide by exhaustive search whether a distribution can reach a cover.
    Coverable {
        #[command(flatten)]
        graph: GraphArgs,
        /// Pebble counts in node order, e.g. "3,0".
        #[arg(long)]
        dist: String,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: u64,
    },
    /// Run the concentration procedure and report every step.
    Collapse {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        dist: String,
    },
    /// Compare the formula with the exhaustive definition.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Check every connected graph on 1..=N nodes instead of one graph.
        #[arg(long, value_name = "N", conflicts_with_all = ["file", "family"])]
        all_connected: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
        max_states: u64,
    },
    /// Build a Cartesian product and check the product law.
    Product {
        first: PathBuf,
        second: PathBuf,
        /// Goal for the first factor; overrides the file.
        #[arg(long)]
        goal1: Option<String>,
        /// Goal for the second factor; overrides the file.
        #[arg(long)]
        goal2: Option<String>,
    },
}

#[derive(Debug, Args)]
struct GraphArgs {
    /// Graph JSON file.
    file: Option<PathBuf>,
    /// Generate a graph instead: path, cycle, even_cycle, odd_cycle,
    /// hypercube, complete, complete_multipartite, wheel.
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,
    /// Family size; node count for `cycle`.
    #[arg(long)]
    n: Option<usize>,
    /// Part sizes for complete_multipartite, e.g. "3,2".
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    /// Goal distribution, e.g. "1,2,1"; overrides the file. Default: one per node.
    #[arg(long)]
    goal: Option<String>,
}

/// Graph plus goal, resolved from the command line.
struct Instance {
    graph: Graph,
    goal: GoalDistribution,
}

fn parse_family(kind: &str, n: Option<usize>, parts: Option<Vec<usize>>) -> Result<Family, Error> {
    let need_n = || n.ok_or_else(|| Error::BadParams(format!("--family {kind} needs --n")));
    Ok(match kind {
        "path" => Family::Path(need_n()?),
        "cycle" => Family::cycle(need_n()?),
        "even_cycle" => Family::EvenCycle(need_n()?),
        "odd_cycle" => Family::OddCycle(need_n()?),
        "hypercube" => Family::Hypercube(
            u32::try_from(need_n()?).map_err(|_| Error::BadParams("dimension too large".into()))?,
        ),
        "complete" => Family::Complete(need_n()?),
        "complete_multipartite" | "multipartite" => {
            let mut parts =
                parts.ok_or_else(|| Error::BadParams(format!("--family {kind} needs --parts")))?;
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Family::CompleteMultipartite(parts)
        }
        "wheel" => Family::Wheel(need_n()?),
        other => return Err(Error::BadParams(format!("unknown family {other:?}"))),
    })
}

fn read_graph_file(path: &Path) -> Result<GraphFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    GraphFile::from_json(&text)
}

fn resolve_goal(
    graph: &Graph,
    flag: Option<&str>,
    from_file: Option<Vec<u64>>,
) -> Result<GoalDistribution, Error> {
    let goal = match (flag, from_file) {
        (Some(text), _) => text.parse()?,
        (None, Some(demand)) => GoalDistribution::new(demand)?,
        (None, None) => GoalDistribution::ones(graph.node_count()),
    };
    goal.for_graph(graph)
}

impl GraphArgs {
    fn resolve(self) -> Result<Instance, Error> {
        let (graph, file_goal) = match (&self.file, &self.family) {
            (Some(path), _) => {
                let file = read_graph_file(path)?;
                (file.to_graph()?, file.goal)
            }
            (None, Some(kind)) => (parse_family(kind, self.n, self.parts)?.graph()?, None),
            (None, None) => {
                return Err(Error::Parse(
                    "no graph given: pass a file or --family".into(),
                ))
            }
        };
        let goal = resolve_goal(&graph, self.goal.as_deref(), file_goal)?;
        Ok(Instance { graph, goal })
    }
}

fn parse_dist(text: &str, graph: &Graph) -> Result<Distribution, Error> {
    let dist: Distribution = text.parse()?;
    if dist.len() != graph.node_count() {
        return Err(Error::DimensionMismatch {
            expected: graph.node_count(),
            found: dist.len(),
        });
    }
    Ok(dist)
}

fn gamma(args: GraphArgs) -> Result<CommandResult, Error> {
    let Instance { graph, goal } = args.resolve()?;
    let profile = solver::gamma(&graph, &goal)?;
    Ok(CommandResult::json(
        EXIT_OK,
        serde_json::to_value(profile).expect("serializable"),
    ))
}

fn coverable(args: GraphArgs, dist: &str, max_states: u64) -> Result<CommandResult, Error> {
    let Instance { graph, goal } = args.resolve()?;
    let dist = parse_dist(dist, &graph)?;
    let mut budget = SearchBudget::new(max_states);
    let decision = oracle::can_cover(&graph, &dist, &goal, &mut budget)?;
    Ok(match decision.witness_moves {
        Some(moves) => CommandResult::json(
            EXIT_OK,
            json!({
                "coverable": true,
                "witness": moves,
                "states_visited": decision.states_visited,
            }),
        ),
        None => CommandResult::json(
            EXIT_NEGATIVE,
            json!({"coverable": false, "states_visited": decision.states_visited}),
        ),
    })
}

fn collapse(args: GraphArgs, dist: &str) -> Result<CommandResult, Error> {
    let Instance { graph, goal } = args.resolve()?;
    let dist = parse_dist(dist, &graph)?;
    let report = collapse::collapse_witness(&graph, &dist, &goal)?;
    Ok(CommandResult::json(
        EXIT_OK,
        serde_json::to_value(report).expect("serializable"),
    ))
}

fn verify_one(graph: &Graph, goal: &GoalDistribution, max_states: u64) -> Result<Value, Error> {
    let mut budget = SearchBudget::new(max_states);
    let brute = oracle::brute_gamma(graph, goal, &mut budget)?;
    let formula = solver::gamma(graph, goal)?;
    Ok(json!({
        "brute": brute.gamma,
        "formula": formula.gamma,
        "match": brute.gamma == formula.gamma,
        "argmax_node": formula.argmax_node,
        "certificate": brute.certificate,
        "states_visited": brute.states_visited,
    }))
}

fn verify(
    args: GraphArgs,
    all_connected: Option<usize>,
    max_states: u64,
) -> Result<CommandResult, Error> {
    let Some(max_nodes) = all_connected else {
        let Instance { graph, goal } = args.resolve()?;
        let result = verify_one(&graph, &goal, max_states)?;
        let status = if result["match"] == json!(true) {
            EXIT_OK
        } else {
            EXIT_NEGATIVE
        };
        return Ok(CommandResult::json(status, result));
    };
    if args.goal.is_some() {
        return Err(Error::Parse(
            "--goal cannot be combined with --all-connected".into(),
        ));
    }
    let mut graphs = Vec::new();
    for n in 1..=max_nodes {
        graphs.extend(connected_graphs(n)?);
    }
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = graphs
            .iter()
            .map(|graph| {
                scope.spawn(move || {
                    let goal = GoalDistribution::ones(graph.node_count());
                    verify_one(graph, &goal, max_states).map(|mut result| {
                        result["graph"] =
                            serde_json::to_value(GraphFile::from(graph)).expect("serializable");
                        result
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let all_match = results.iter().all(|r| r["match"] == json!(true));
    let status = if all_match { EXIT_OK } else { EXIT_NEGATIVE };
    Ok(CommandResult::json(
        status,
        json!({"graphs": results.len(), "all_match": all_match, "results": results}),
    ))
}

fn product(
    first: &Path,
    second: &Path,
    goal1: Option<&str>,
    goal2: Option<&str>,
) -> Result<CommandResult, Error> {
    let (f1, f2) = (read_graph_file(first)?, read_graph_file(second)?);
    let (g1, g2) = (f1.to_graph()?, f2.to_graph()?);
    let w1 = resolve_goal(&g1, goal1, f1.goal)?;
    let w2 = resolve_goal(&g2, goal2, f2.goal)?;
    let graph = g1.product(&g2)?;
    let goal = w1.product(&w2)?;
    let check = solver::product_gamma_check(&g1, &w1, &g2, &w2)?;
    let status = if check.equal { EXIT_OK } else { EXIT_NEGATIVE };
    Ok(CommandResult::json(
        status,
        json!({
            "graph": GraphFile::from(&graph),
            "goal": goal,
            "lhs": check.lhs,
            "rhs": check.rhs,
            "match": check.equal,
        }),
    ))
}

/// Parses `args` (program name first) and runs the chosen command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return CommandResult {
                status,
                payload: None,
                diagnostic: Some(e.render().to_string()),
            };
        }
    };
    let outcome = match cli.command {
        Command::Gamma(graph) => gamma(graph),
        Command::Coverable {
            graph,
            dist,
            max_states,
        } => coverable(graph, &dist, max_states),
        Command::Collapse { graph, dist } => collapse(graph, &dist),
        Command::Verify {
            graph,
            all_connected,
            max_states,
        } => verify(graph, all_connected, max_states),
        Command::Product {
            first,
            second,
            goal1,
            goal2,
        } => product(&first, &second, goal1.as_deref(), goal2.as_deref()),
    };
    outcome.unwrap_or_else(|e| CommandResult::failure(&e))
}
