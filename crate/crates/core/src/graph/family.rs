use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// The graph classes with a known cover pebbling number.
///
/// Cycle parameters are half-lengths: `EvenCycle(n)` is the cycle on
/// `2n` nodes and `OddCycle(n)` the cycle on `2n - 1` nodes. Use
/// [`Family::cycle`] to pick by node count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "params")]
pub enum Family {
    Path(usize),
    EvenCycle(usize),
    OddCycle(usize),
    Hypercube(u32),
    Complete(usize),
    /// Part sizes, non-increasing.
    CompleteMultipartite(Vec<usize>),
    /// `n` rim nodes around one hub.
    Wheel(usize),
}

const MAX_HYPERCUBE_DIM: u32 = 20;

impl Family {
    /// The cycle with `len` nodes.
    pub fn cycle(len: usize) -> Family {
        if len.is_multiple_of(2) {
            Family::EvenCycle(len / 2)
        } else {
            Family::OddCycle(len.div_ceil(2))
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::EvenCycle(_) => "even_cycle",
            Family::OddCycle(_) => "odd_cycle",
            Family::Hypercube(_) => "hypercube",
            Family::Complete(_) => "complete",
            Family::CompleteMultipartite(_) => "complete_multipartite",
            Family::Wheel(_) => "wheel",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::BadParams(msg));
        match self {
            Family::Path(0) => bad("path needs at least one node".into()),
            Family::EvenCycle(n) if *n < 2 => bad(format!("even cycle needs n >= 2, got {n}")),
            Family::OddCycle(n) if *n < 2 => bad(format!("odd cycle needs n >= 2, got {n}")),
            Family::Hypercube(n) if *n > MAX_HYPERCUBE_DIM => bad(format!(
                "hypercube dimension {n} exceeds {MAX_HYPERCUBE_DIM}"
            )),
            Family::Complete(0) => bad("complete graph needs at least one node".into()),
            Family::CompleteMultipartite(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    bad(format!("parts must be positive, got {parts:?}"))
                } else if parts.windows(2).any(|w| w[0] < w[1]) {
                    bad(format!("parts must be non-increasing, got {parts:?}"))
                } else if parts.len() == 1 && parts[0] > 1 {
                    bad(format!(
                        "a single part of size {} is disconnected",
                        parts[0]
                    ))
                } else {
                    Ok(())
                }
            }
            Family::Wheel(n) if *n < 3 => bad(format!("wheel needs at least 3 rim nodes, got {n}")),
            _ => Ok(()),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Family::Path(n) | Family::Complete(n) => *n,
            Family::EvenCycle(n) => 2 * n,
            Family::OddCycle(n) => 2 * n - 1,
            Family::Hypercube(n) => 1 << n,
            Family::CompleteMultipartite(parts) => parts.iter().sum(),
            Family::Wheel(n) => n + 1,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.node_count();
        let mut edges = Vec::new();
        match self {
            Family::Path(_) => edges.extend((1..n).map(|v| (v - 1, v))),
            Family::EvenCycle(_) | Family::OddCycle(_) => {
                edges.extend((0..n).map(|v| (v, (v + 1) % n)));
            }
            Family::Hypercube(dim) => {
                for u in 0..n {
                    for bit in 0..*dim {
                        let v = u ^ (1 << bit);
                        if u < v {
                            edges.push((u, v));
                        }
                    }
                }
            }
            Family::Complete(_) => {
                for u in 0..n {
                    edges.extend((u + 1..n).map(|v| (u, v)));
                }
            }
            Family::CompleteMultipartite(parts) => {
                let mut part_of = Vec::with_capacity(n);
                for (i, &size) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(i, size));
                }
                for u in 0..n {
                    edges.extend(
                        (u + 1..n)
                            .filter(|&v| part_of[u] != part_of[v])
                            .map(|v| (u, v)),
                    );
                }
            }
            Family::Wheel(rim) => {
                edges.extend((0..*rim).map(|v| (v, (v + 1) % rim)));
                edges.extend((0..*rim).map(|v| (v, *rim)));
            }
        }
        Graph::new(n, false, &edges)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n)
            | Family::EvenCycle(n)
            | Family::OddCycle(n)
            | Family::Complete(n)
            | Family::Wheel(n) => {
                write!(f, "{}({n})", self.kind())
            }
            Family::Hypercube(n) => write!(f, "{}({n})", self.kind()),
            Family::CompleteMultipartite(parts) => write!(f, "{}({parts:?})", self.kind()),
        }
    }
}
