//! Exhaustive ground truth for small instances.
//!
//! [`CoverSearch`] decides whether a distribution can be pebbled into a
//! cover by depth-first search over count vectors. Every move removes a
//! pebble, so the state graph is acyclic and a state's answer can be cached
//! once it has been fully explored. The cache is keyed on exact count
//! vectors and is shared by every query made through the same search.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pebbling::{covers, Distribution, GoalDistribution};
use crate::solver;

pub const DEFAULT_MAX_STATES: u64 = 1_000_000;

/// Cap on the number of states a search may expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_states: u64,
    pub states_visited: u64,
}

impl SearchBudget {
    pub fn new(max_states: u64) -> Self {
        SearchBudget {
            max_states,
            states_visited: 0,
        }
    }

    fn charge(&mut self) -> Result<()> {
        if self.states_visited >= self.max_states {
            return Err(Error::BudgetExceeded {
                max_states: self.max_states,
            });
        }
        self.states_visited += 1;
        Ok(())
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(DEFAULT_MAX_STATES)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverDecision {
    pub coverable: bool,
    /// Moves `(from, to)` leading to a cover, present iff coverable.
    pub witness_moves: Option<Vec<(usize, usize)>>,
    /// States expanded while answering this query.
    pub states_visited: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Dead,
    Covered,
    /// Coverable; taking arc `arcs[i]` leads to another coverable state.
    Via(usize),
}

/// Reusable exact coverability search for one graph and goal.
pub struct CoverSearch<'g> {
    graph: &'g Graph,
    goal: GoalDistribution,
    /// All arcs in ascending `(from, to)` order.
    arcs: Vec<(usize, usize)>,
    memo: HashMap<Box<[u64]>, Outcome>,
}

struct Frame {
    state: Box<[u64]>,
    next_arc: usize,
}

impl<'g> CoverSearch<'g> {
    pub fn new(graph: &'g Graph, goal: &GoalDistribution) -> Result<Self> {
        let goal = goal.clone().for_graph(graph)?;
        let arcs = graph
            .nodes()
            .flat_map(|from| graph.neighbors(from).iter().map(move |&to| (from, to)))
            .collect();
        Ok(CoverSearch {
            graph,
            goal,
            arcs,
            memo: HashMap::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn goal(&self) -> &GoalDistribution {
        &self.goal
    }

    /// Number of cached states.
    pub fn cached_states(&self) -> usize {
        self.memo.len()
    }

    fn is_cover(&self, state: &[u64]) -> bool {
        covers(state, self.goal.as_slice())
    }

    fn child(&self, state: &[u64], arc: usize) -> Option<Box<[u64]>> {
        let (from, to) = self.arcs[arc];
        (state[from] >= 2).then(|| {
            let mut next: Box<[u64]> = state.into();
            next[from] -= 2;
            next[to] += 1;
            next
        })
    }

    /// Exact answer for `dist`, with a witness when coverable.
    pub fn can_cover(
        &mut self,
        dist: &Distribution,
        budget: &mut SearchBudget,
    ) -> Result<CoverDecision> {
        if dist.len() != self.graph.node_count() {
            return Err(Error::DimensionMismatch {
                expected: self.graph.node_count(),
                found: dist.len(),
            });
        }
        let before = budget.states_visited;
        let coverable = self.decide(dist.counts(), budget)?;
        let witness_moves = coverable.then(|| self.witness(dist.counts()));
        Ok(CoverDecision {
            coverable,
            witness_moves,
            states_visited: budget.states_visited - before,
        })
    }

    fn decide(&mut self, start: &[u64], budget: &mut SearchBudget) -> Result<bool> {
        if self.is_cover(start) {
            return Ok(true);
        }
        if let Some(outcome) = self.memo.get(start) {
            return Ok(*outcome != Outcome::Dead);
        }
        budget.charge()?;
        let mut stack = vec![Frame {
            state: start.into(),
            next_arc: 0,
        }];
        while let Some(frame) = stack.last_mut() {
            let Some(arc) =
                (frame.next_arc..self.arcs.len()).find(|&arc| frame.state[self.arcs[arc].0] >= 2)
            else {
                let done = stack.pop().expect("non-empty stack");
                self.memo.insert(done.state, Outcome::Dead);
                continue;
            };
            frame.next_arc = arc + 1;
            let child = self.child(&frame.state, arc).expect("arc has two pebbles");
            let found = if self.is_cover(&child) {
                self.memo.insert(child, Outcome::Covered);
                true
            } else {
                match self.memo.get(&child) {
                    Some(Outcome::Dead) => false,
                    Some(_) => true,
                    None => {
                        budget.charge()?;
                        stack.push(Frame {
                            state: child,
                            next_arc: 0,
                        });
                        continue;
                    }
                }
            };
            if found {
                // Every state on the stack reaches a cover through the arc it
                // is currently exploring.
                for frame in stack.drain(..) {
                    self.memo
                        .insert(frame.state, Outcome::Via(frame.next_arc - 1));
                }
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn witness(&self, start: &[u64]) -> Vec<(usize, usize)> {
        let mut moves = Vec::new();
        let mut state: Box<[u64]> = start.into();
        while !self.is_cover(&state) {
            let Some(Outcome::Via(arc)) = self.memo.get(&state) else {
                unreachable!("coverable states are cached with their next move");
            };
            moves.push(self.arcs[*arc]);
            state = self.child(&state, *arc).expect("cached move is legal");
        }
        moves
    }
}

/// Whether `dist` can be pebbled into a `goal` cover on `graph`.
pub fn can_cover(
    graph: &Graph,
    dist: &Distribution,
    goal: &GoalDistribution,
    budget: &mut SearchBudget,
) -> Result<CoverDecision> {
    CoverSearch::new(graph, goal)?.can_cover(dist, budget)
}

/// Weak compositions of `total` into `parts` non-negative parts, starting
/// from `(total, 0, ..., 0)` and ending at `(0, ..., 0, total)`.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u64>>,
}

impl Compositions {
    pub fn new(total: u64, parts: usize) -> Self {
        let current = (parts > 0 || total == 0).then(|| {
            let mut first = vec![0; parts];
            if let Some(head) = first.first_mut() {
                *head = total;
            }
            first
        });
        Compositions { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.current.take()?;
        let parts = current.len();
        // Rightmost non-zero entry left of the last slot; move one unit right
        // of it and gather everything after it there.
        if let Some(i) = (0..parts.saturating_sub(1)).rev().find(|&i| current[i] > 0) {
            let mut next = current.clone();
            let tail: u64 = next[i + 1..].iter().sum();
            next[i] -= 1;
            next[i + 1..].fill(0);
            next[i + 1] = tail + 1;
            self.current = Some(next);
        }
        Some(current)
    }
}

/// Definitional cover pebbling number found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruteGamma {
    pub gamma: u64,
    /// A distribution of `gamma - 1` pebbles that admits no cover pebbling.
    pub certificate: Distribution,
    pub states_visited: u64,
}

/// Smallest `n` such that every distribution of `n` pebbles is coverable.
///
/// Scans `n` upward from the goal total. Adding a pebble never hurts, so the
/// first `n` where every composition is coverable is the answer.
pub fn brute_gamma(
    graph: &Graph,
    goal: &GoalDistribution,
    budget: &mut SearchBudget,
) -> Result<BruteGamma> {
    let mut search = CoverSearch::new(graph, goal)?;
    brute_gamma_with(&mut search, budget)
}

/// [`brute_gamma`] reusing the cache of an existing search.
pub fn brute_gamma_with(
    search: &mut CoverSearch<'_>,
    budget: &mut SearchBudget,
) -> Result<BruteGamma> {
    let before = budget.states_visited;
    let nodes = search.graph().node_count();
    let mut n = search.goal().total();
    let mut certificate =
        first_blocked(search, n - 1, budget)?.expect("fewer pebbles than demanded can never cover");
    loop {
        match first_blocked(search, n, budget)? {
            Some(blocked) => {
                certificate = blocked;
                n += 1;
            }
            None => {
                debug_assert_eq!(certificate.total() + 1, n);
                debug_assert_eq!(certificate.len(), nodes);
                return Ok(BruteGamma {
                    gamma: n,
                    certificate,
                    states_visited: budget.states_visited - before,
                });
            }
        }
    }
}

fn first_blocked(
    search: &mut CoverSearch<'_>,
    total: u64,
    budget: &mut SearchBudget,
) -> Result<Option<Distribution>> {
    for counts in Compositions::new(total, search.graph().node_count()) {
        if !search.decide(&counts, budget)? {
            return Distribution::new(counts).map(Some);
        }
    }
    Ok(None)
}

/// Tightness of the simple-distribution formula, checked by search: one
/// pebble short on the worst node is stuck, and the full amount works from
/// every node.
pub fn worst_simple_check(
    graph: &Graph,
    goal: &GoalDistribution,
    budget: &mut SearchBudget,
) -> Result<bool> {
    let profile = solver::gamma(graph, goal)?;
    let mut search = CoverSearch::new(graph, goal)?;
    let n = graph.node_count();
    let short = Distribution::simple(n, profile.argmax_node, profile.gamma - 1)?;
    if search.can_cover(&short, budget)?.coverable {
        return Ok(false);
    }
    for node in graph.nodes() {
        let full = Distribution::simple(n, node, profile.gamma)?;
        if !search.can_cover(&full, budget)?.coverable {
            return Ok(false);
        }
    }
    Ok(true)
}
