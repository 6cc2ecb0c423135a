//! Pebble configurations and the pebbling move.
//!
//! A move takes two pebbles off a node and puts one pebble on an
//! out-neighbour. [`ValuedDistribution`] additionally tracks how many
//! original pebbles went into each pebble; that total never changes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn parse_list(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<u64>()
                .map_err(|e| Error::Parse(format!("bad pebble count {item:?}: {e}")))
        })
        .collect()
}

/// Positive pebble demand per node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GoalDistribution(Vec<u64>);

impl GoalDistribution {
    pub fn new(demand: Vec<u64>) -> Result<Self> {
        if demand.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if let Some(node) = demand.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveGoal { node });
        }
        demand
            .iter()
            .try_fold(0u64, |acc, &w| acc.checked_add(w))
            .ok_or_else(|| Error::Overflow("goal total exceeds u64".into()))?;
        Ok(GoalDistribution(demand))
    }

    /// One pebble on every node.
    pub fn ones(node_count: usize) -> Self {
        GoalDistribution(vec![1; node_count])
    }

    pub fn for_graph(self, graph: &Graph) -> Result<Self> {
        check_len(graph.node_count(), self.len())?;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, node: usize) -> u64 {
        self.0[node]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Every entry multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<Self> {
        let demand = self
            .0
            .iter()
            .map(|&w| {
                w.checked_mul(factor)
                    .ok_or_else(|| Error::Overflow(format!("{w} * {factor}")))
            })
            .collect::<Result<_>>()?;
        GoalDistribution::new(demand)
    }

    /// Goal on a product graph: `(v1, v2)` demands `w1(v1) * w2(v2)`,
    /// row-major like [`Graph::product`].
    pub fn product(&self, other: &GoalDistribution) -> Result<Self> {
        let mut demand = Vec::with_capacity(self.len() * other.len());
        for &a in &self.0 {
            for &b in &other.0 {
                demand.push(
                    a.checked_mul(b)
                        .ok_or_else(|| Error::Overflow(format!("goal product {a} * {b}")))?,
                );
            }
        }
        GoalDistribution::new(demand)
    }
}

impl FromStr for GoalDistribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GoalDistribution::new(parse_list(s)?)
    }
}

impl<'de> Deserialize<'de> for GoalDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let demand = Vec::<u64>::deserialize(d)?;
        GoalDistribution::new(demand).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeStatus {
    Fat,
    Thin,
    Perfect,
}

impl NodeStatus {
    pub fn of(count: u64, demand: u64) -> Self {
        match count.cmp(&demand) {
            std::cmp::Ordering::Greater => NodeStatus::Fat,
            std::cmp::Ordering::Less => NodeStatus::Thin,
            std::cmp::Ordering::Equal => NodeStatus::Perfect,
        }
    }
}

/// Pebble counts per node.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Distribution {
    counts: Vec<u64>,
    total: u64,
}

impl Serialize for Distribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.counts.serialize(s)
    }
}

impl Distribution {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        let total = counts
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or_else(|| Error::Overflow("pebble total exceeds u64".into()))?;
        Ok(Distribution { counts, total })
    }

    /// `pebbles` on `node`, nothing elsewhere.
    pub fn simple(node_count: usize, node: usize, pebbles: u64) -> Result<Self> {
        if node >= node_count {
            return Err(Error::NodeOutOfRange(node));
        }
        let mut counts = vec![0; node_count];
        counts[node] = pebbles;
        Distribution::new(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<u64> {
        self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, node: usize) -> u64 {
        self.counts[node]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn classify(&self, goal: &GoalDistribution, node: usize) -> Result<NodeStatus> {
        check_len(self.len(), goal.len())?;
        if node >= self.len() {
            return Err(Error::NodeOutOfRange(node));
        }
        Ok(NodeStatus::of(self.counts[node], goal.get(node)))
    }

    /// Whether every node holds at least its demand.
    pub fn is_cover(&self, goal: &GoalDistribution) -> Result<bool> {
        check_len(self.len(), goal.len())?;
        Ok(covers(&self.counts, goal.as_slice()))
    }

    /// Pointwise `self >= other`.
    pub fn dominates(&self, other: &Distribution) -> bool {
        self.len() == other.len() && self.counts.iter().zip(&other.counts).all(|(a, b)| a >= b)
    }

    /// Result of one pebbling move `from -> to`.
    pub fn apply_move(&self, graph: &Graph, from: usize, to: usize) -> Result<Distribution> {
        check_len(graph.node_count(), self.len())?;
        if !graph.has_edge(from, to) {
            return Err(Error::NotAnEdge { from, to });
        }
        let have = self.counts[from];
        if have < 2 {
            return Err(Error::InsufficientPebbles { node: from, have });
        }
        let mut counts = self.counts.clone();
        counts[from] -= 2;
        counts[to] += 1;
        Ok(Distribution {
            counts,
            total: self.total - 1,
        })
    }
}

pub(crate) fn covers(counts: &[u64], goal: &[u64]) -> bool {
    counts.iter().zip(goal).all(|(c, w)| c >= w)
}

impl FromStr for Distribution {
    type Err = Error;

    /// Comma-separated counts in node order, e.g. `"23,0,0,0,0"`.
    fn from_str(s: &str) -> Result<Self> {
        Distribution::new(parse_list(s)?)
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.counts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Pebbles with values: per node, a sorted multiset of positive values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ValuedDistribution {
    values: Vec<Vec<u64>>,
}

impl ValuedDistribution {
    /// Every pebble of `dist` with value one.
    pub fn unit(dist: &Distribution) -> Result<Self> {
        let values = dist
            .counts()
            .iter()
            .map(|&c| {
                usize::try_from(c)
                    .map(|c| vec![1; c])
                    .map_err(|_| Error::Overflow(format!("{c} pebbles on one node")))
            })
            .collect::<Result<_>>()?;
        Ok(ValuedDistribution { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values on `node`, ascending.
    pub fn values(&self, node: usize) -> &[u64] {
        &self.values[node]
    }

    pub fn count(&self, node: usize) -> u64 {
        self.values[node].len() as u64
    }

    pub fn counts(&self) -> Distribution {
        let counts = self.values.iter().map(|v| v.len() as u64).collect();
        Distribution::new(counts).expect("pebble count fits in memory")
    }

    pub fn total_value(&self) -> u128 {
        self.values.iter().flatten().map(|&v| u128::from(v)).sum()
    }

    /// Move two pebbles of values `parents` from `from`, creating one of
    /// value `parents.0 + parents.1` on `to`.
    pub fn apply_move(
        &self,
        graph: &Graph,
        from: usize,
        to: usize,
        parents: (u64, u64),
    ) -> Result<ValuedDistribution> {
        check_len(graph.node_count(), self.len())?;
        if !graph.has_edge(from, to) {
            return Err(Error::NotAnEdge { from, to });
        }
        let merged = parents.0.checked_add(parents.1).ok_or_else(|| {
            Error::Overflow(format!("pebble value {} + {}", parents.0, parents.1))
        })?;
        let mut next = self.clone();
        for value in [parents.0, parents.1] {
            let pile = &mut next.values[from];
            let at = pile
                .binary_search(&value)
                .map_err(|_| Error::ValueNotPresent { node: from, value })?;
            pile.remove(at);
        }
        let pile = &mut next.values[to];
        let at = pile.partition_point(|&v| v <= merged);
        pile.insert(at, merged);
        Ok(next)
    }
}
