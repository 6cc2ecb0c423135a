// Deciding whether a given distribution can be pebbled into a cover, and
// replaying the witness move sequence.

use cover_pebbling::oracle::{CoverSearch, SearchBudget};
use cover_pebbling::{Distribution, Family, GoalDistribution};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let graph = Family::cycle(5).graph()?;
    let goal = GoalDistribution::new(vec![1, 2, 1, 1, 1])?;
    let mut search = CoverSearch::new(&graph, &goal)?;
    let mut budget = SearchBudget::default();

    for text in ["12,0,0,0,0", "0,0,16,0,0", "4,0,0,4,4", "1,2,1,1,1"] {
        let start: Distribution = text.parse()?;
        let decision = search.can_cover(&start, &mut budget)?;
        match decision.witness_moves {
            Some(moves) => {
                let end = moves.iter().try_fold(start.clone(), |d, &(from, to)| {
                    d.apply_move(&graph, from, to)
                })?;
                println!(
                    "{start:>12}: coverable in {} moves, ends at {end}",
                    moves.len()
                );
                if !end.is_cover(&goal)? {
                    return Err("witness does not reach a cover".into());
                }
            }
            None => println!("{start:>12}: stuck"),
        }
    }
    println!("{} states cached", search.cached_states());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
