// Cover pebbling numbers of the standard graph families, computed from
// single-node costs and compared with their closed forms.

use cover_pebbling::solver::{closed_form, gamma};
use cover_pebbling::{Family, GoalDistribution};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let families = [
        Family::Path(4),
        Family::cycle(4),
        Family::cycle(3),
        Family::Hypercube(3),
        Family::Complete(4),
        Family::CompleteMultipartite(vec![3, 2]),
        Family::Wheel(4),
    ];
    println!(
        "{:<28} {:>6} {:>8} {:>8}",
        "graph", "nodes", "gamma", "closed"
    );
    for family in &families {
        let graph = family.graph()?;
        let profile = gamma(&graph, &GoalDistribution::ones(graph.node_count()))?;
        let expected = closed_form(family)?;
        println!(
            "{:<28} {:>6} {:>8} {:>8}",
            family.to_string(),
            graph.node_count(),
            profile.gamma,
            expected
        );
        if profile.gamma != expected {
            return Err(format!("{family}: {} != {expected}", profile.gamma).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
