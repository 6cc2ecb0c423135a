// A five-node digraph where covering from node 4 costs 1 + 2 + 4 + 8 + 8
// = 23 pebbles. The search confirms that 22 pebbles there are not
// enough, and that every single-node cost is tight.

use cover_pebbling::oracle::{can_cover, worst_simple_check, SearchBudget};
use cover_pebbling::solver::gamma;
use cover_pebbling::{Distribution, GoalDistribution, GraphFile};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/digraph5.json");
    let graph = GraphFile::from_json(&std::fs::read_to_string(path)?)?.to_graph()?;
    let goal = GoalDistribution::ones(graph.node_count());

    let distances = graph.distance_matrix();
    println!("distances from node 4: {:?}", distances.row(4));
    let profile = gamma(&graph, &goal)?;
    println!("costs per node: {:?}", profile.costs);
    println!("cover pebbling number: {}", profile.gamma);

    let mut budget = SearchBudget::default();
    for pebbles in [22, 23] {
        let start = Distribution::simple(graph.node_count(), 4, pebbles)?;
        let decision = can_cover(&graph, &start, &goal, &mut budget)?;
        println!(
            "{pebbles} pebbles on node 4: coverable = {}",
            decision.coverable
        );
    }
    let tight = worst_simple_check(&graph, &goal, &mut budget)?;
    println!(
        "formula is tight: {tight} ({} states searched)",
        budget.states_visited
    );
    if profile.costs[4] != 23 || !tight {
        return Err("unexpected result for the five-node digraph".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
