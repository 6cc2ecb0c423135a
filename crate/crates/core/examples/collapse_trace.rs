// The concentration procedure on a stuck distribution: each iteration
// pushes a pebble from a fat node to the nearest thin node, and the last
// fat node standing is a node where the same pebbles, all stacked up,
// are still not enough.

use cover_pebbling::collapse::{chain_move, collapse_witness};
use cover_pebbling::oracle::{can_cover, SearchBudget};
use cover_pebbling::solver::cost_from;
use cover_pebbling::{Distribution, Family, GoalDistribution, ValuedDistribution};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let path = Family::Path(5).graph()?;
    let ones = GoalDistribution::ones(5);
    let start = ValuedDistribution::unit(&Distribution::new(vec![17, 1, 1, 1, 0])?)?;
    let step = chain_move(&path, &start, &ones, 0, 4)?;
    println!(
        "chain {:?}: counts {}, arriving value {}",
        step.path,
        step.distribution.counts(),
        step.arriving_value
    );

    let graph = path;
    let goal = ones;
    let stuck: Distribution = "0,0,6,0,3".parse()?;
    let mut budget = SearchBudget::default();
    if can_cover(&graph, &stuck, &goal, &mut budget)?.coverable {
        return Err("expected a stuck distribution".into());
    }
    let report = collapse_witness(&graph, &stuck, &goal)?;
    for it in &report.iterations {
        println!(
            "pair {:?} via {:?}: value {}, fat pebbles {} -> {}",
            it.pair,
            it.path,
            it.new_pebble_value,
            it.fat_pebble_total_before,
            it.fat_pebble_total_after
        );
    }
    let cost = cost_from(&graph, &goal, report.witness)?;
    println!(
        "witness node {} costs {cost} > {} pebbles; all checks passed: {}",
        report.witness,
        stuck.total(),
        report.sound()
    );
    if cost <= stuck.total() || !report.sound() {
        return Err("collapse witness check failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
