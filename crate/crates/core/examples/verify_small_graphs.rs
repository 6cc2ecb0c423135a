// Exhaustive check that single-node placements are the worst case on
// every connected graph with up to four nodes.

use cover_pebbling::graph::connected_graphs;
use cover_pebbling::oracle::{brute_gamma, SearchBudget};
use cover_pebbling::solver::gamma;
use cover_pebbling::GoalDistribution;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        for graph in connected_graphs(n)? {
            let goal = GoalDistribution::ones(n);
            let mut budget = SearchBudget::default();
            let brute = brute_gamma(&graph, &goal, &mut budget)?;
            let formula = gamma(&graph, &goal)?.gamma;
            println!(
                "n={n} edges={:?}: search {} formula {formula}, stuck at {}",
                graph.edges(),
                brute.gamma,
                brute.certificate
            );
            if brute.gamma != formula {
                return Err("mismatch".into());
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
