//! Cover pebbling numbers from simple distributions.
//!
//! Putting all pebbles on `v` and covering `w` costs
//! `sum_u w(u) * 2^d(v,u)`. The `w`-cover pebbling number of a connected
//! graph is the largest of these costs over all `v`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::pebbling::GoalDistribution;

/// Costs of covering from every simple distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostProfile {
    pub costs: Vec<u64>,
    pub gamma: u64,
    /// Least node id attaining `gamma`.
    pub argmax_node: usize,
}

fn checked_cost(goal: &GoalDistribution, source: usize, distances: &[u32]) -> Result<u64> {
    distances
        .iter()
        .enumerate()
        .try_fold(0u64, |acc, (target, &d)| {
            let demand = goal.get(target);
            1u64.checked_shl(d)
                .and_then(|unit| unit.checked_mul(demand))
                .and_then(|term| acc.checked_add(term))
                .ok_or_else(|| {
                    Error::Overflow(format!(
                        "cost from node {source}: term for node {target} ({demand} * 2^{d})"
                    ))
                })
        })
}

/// Pebbles needed on `source` alone to reach a `goal` cover.
pub fn cost_from(graph: &Graph, goal: &GoalDistribution, source: usize) -> Result<u64> {
    let goal_len = goal.len();
    if goal_len != graph.node_count() {
        return Err(Error::DimensionMismatch {
            expected: graph.node_count(),
            found: goal_len,
        });
    }
    graph.check_node(source)?;
    checked_cost(goal, source, &graph.distances_from(source))
}

/// The `goal`-cover pebbling number of `graph`, with the cost from every node.
pub fn gamma(graph: &Graph, goal: &GoalDistribution) -> Result<CostProfile> {
    let costs = graph
        .nodes()
        .map(|v| cost_from(graph, goal, v))
        .collect::<Result<Vec<_>>>()?;
    let (argmax_node, &gamma) = costs
        .iter()
        .enumerate()
        .rev()
        .max_by_key(|&(_, cost)| cost)
        .expect("graphs have at least one node");
    Ok(CostProfile {
        costs,
        gamma,
        argmax_node,
    })
}

/// Known cover pebbling number of a family member under the 1-distribution.
pub fn closed_form(family: &Family) -> Result<u64> {
    family.validate()?;
    // Computed in u128 so values just below 2^64 are not lost to
    // intermediate overflow.
    let pow2 = |n: usize| u32::try_from(n).ok().and_then(|n| 1u128.checked_shl(n));
    let wide = |n: usize| n as u128;
    let value = match family {
        Family::Path(n) => pow2(*n).map(|p| p - 1),
        Family::EvenCycle(n) => pow2(*n).map(|p| 3 * (p - 1)),
        Family::OddCycle(n) => pow2(n + 1).map(|p| p - 3),
        Family::Hypercube(n) => 3u128.checked_pow(*n),
        Family::Complete(n) => Some(2 * wide(*n) - 1),
        Family::CompleteMultipartite(parts) => {
            let rest: u128 = parts[1..].iter().map(|&p| wide(p)).sum();
            Some(4 * wide(parts[0]) + 2 * rest - 3)
        }
        Family::Wheel(n) => Some(4 * wide(*n) - 5),
    };
    value
        .and_then(|v| u64::try_from(v).ok())
        .ok_or_else(|| Error::Overflow(format!("closed form for {family}")))
}

/// Both sides of the product law for cover pebbling numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductCheck {
    /// Cover pebbling number of the product graph under the product goal.
    pub lhs: u64,
    /// Product of the factors' cover pebbling numbers.
    pub rhs: u64,
    pub equal: bool,
}

pub fn product_gamma_check(
    g1: &Graph,
    w1: &GoalDistribution,
    g2: &Graph,
    w2: &GoalDistribution,
) -> Result<ProductCheck> {
    let product = g1.product(g2)?;
    let goal = w1.product(w2)?;
    let lhs = gamma(&product, &goal)?.gamma;
    let (left, right) = (gamma(g1, w1)?.gamma, gamma(g2, w2)?.gamma);
    let rhs = left
        .checked_mul(right)
        .ok_or_else(|| Error::Overflow(format!("{left} * {right}")))?;
    Ok(ProductCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}
