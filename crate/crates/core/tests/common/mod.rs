//! Test-only reference implementations and instance generators.
#![allow(dead_code)]

use std::collections::HashSet;

use cover_pebbling::graph::connected_graphs;
use cover_pebbling::{GoalDistribution, Graph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn five_node_digraph() -> Graph {
    Graph::new(5, true, &[(4, 3), (3, 2), (2, 0), (2, 1), (0, 4), (1, 4)]).unwrap()
}

/// Node whose single-node cost is 23.
pub const DIGRAPH_SOURCE: usize = 4;

/// Every connected undirected graph on at most four nodes, up to isomorphism.
pub fn small_graphs() -> Vec<Graph> {
    (1..=4).flat_map(|n| connected_graphs(n).unwrap()).collect()
}

pub fn random_goal(rng: &mut StdRng, n: usize, max_entry: u64) -> GoalDistribution {
    GoalDistribution::new((0..n).map(|_| rng.random_range(1..=max_entry)).collect()).unwrap()
}

/// Random strongly connected digraph on `n` nodes, by rejection sampling.
pub fn random_digraph(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let arcs: Vec<_> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .filter(|_| rng.random_bool(0.45))
            .collect();
        if let Ok(g) = Graph::new(n, true, &arcs) {
            return g;
        }
    }
}

/// Random connected undirected graph on `n` nodes, by rejection sampling.
pub fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(0.5))
            .collect();
        if let Ok(g) = Graph::new(n, false, &edges) {
            return g;
        }
    }
}

/// All-pairs distances by Floyd–Warshall over the adjacency relation.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.node_count();
    let inf = u64::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Coverability by plain recursive enumeration of every move sequence,
/// remembering only states already proven stuck.
pub fn naive_coverable(g: &Graph, counts: &[u64], goal: &[u64]) -> bool {
    fn go(g: &Graph, state: &mut Vec<u64>, goal: &[u64], stuck: &mut HashSet<Vec<u64>>) -> bool {
        if state.iter().zip(goal).all(|(c, w)| c >= w) {
            return true;
        }
        if stuck.contains(state) {
            return false;
        }
        for from in 0..state.len() {
            if state[from] < 2 {
                continue;
            }
            for &to in g.neighbors(from) {
                state[from] -= 2;
                state[to] += 1;
                let found = go(g, state, goal, stuck);
                state[from] += 2;
                state[to] -= 1;
                if found {
                    return true;
                }
            }
        }
        stuck.insert(state.clone());
        false
    }
    go(g, &mut counts.to_vec(), goal, &mut HashSet::new())
}

/// All distributions of `total` pebbles on `n` nodes, by recursion.
pub fn all_distributions(total: u64, n: usize) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .rev()
        .flat_map(|head| {
            all_distributions(total - head, n - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, head);
                    rest
                })
        })
        .collect()
}

/// Cover pebbling number straight from the definition, using [`naive_coverable`].
pub fn naive_gamma(g: &Graph, goal: &[u64]) -> u64 {
    let mut n: u64 = goal.iter().sum();
    loop {
        if all_distributions(n, g.node_count())
            .iter()
            .all(|d| naive_coverable(g, d, goal))
        {
            return n;
        }
        n += 1;
    }
}

/// Prints one acceptance line and returns whether the criterion passed.
pub fn report(id: u32, title: &str, passed: bool, detail: &str) -> bool {
    let mark = if passed { "PASS" } else { "FAIL" };
    println!("[{mark}] criterion {id}: {title} ({detail})");
    passed
}
