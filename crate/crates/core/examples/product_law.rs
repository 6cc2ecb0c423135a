// Cartesian products: the cover pebbling number of a product, under the
// product goal, is the product of the factors' numbers.

use cover_pebbling::solver::product_gamma_check;
use cover_pebbling::{Family, GoalDistribution, GraphFile};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let factors = [
        ("P2", Family::Path(2).graph()?, GoalDistribution::ones(2)),
        (
            "P3",
            Family::Path(3).graph()?,
            GoalDistribution::new(vec![2, 1, 3])?,
        ),
        (
            "K3",
            Family::Complete(3).graph()?,
            GoalDistribution::ones(3),
        ),
        (
            "C4",
            Family::cycle(4).graph()?,
            GoalDistribution::new(vec![1, 1, 2, 1])?,
        ),
    ];
    for (a, g1, w1) in &factors {
        for (b, g2, w2) in &factors {
            let check = product_gamma_check(g1, w1, g2, w2)?;
            println!("{a} x {b}: {} = {} ({})", check.lhs, check.rhs, check.equal);
            if !check.equal {
                return Err(format!("{a} x {b} breaks the product law").into());
            }
        }
    }
    let grid = factors[0].1.product(&factors[1].1)?;
    println!("{}", serde_json::to_string(&GraphFile::from(&grid))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
