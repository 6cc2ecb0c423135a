//! Cover pebbling numbers of connected graphs.
//!
//! A pebbling move takes two pebbles off a node and places one on a
//! neighbour. Given a positive goal `w`, the `w`-cover pebbling number is
//! the least `n` such that every placement of `n` pebbles can be moved
//! into a configuration with at least `w(v)` pebbles on every node `v`.
//! It equals the largest cost of covering from a single node, which
//! [`solver::gamma`] computes directly.
//!
//! [`oracle`] answers the same question by exhaustive search on small
//! instances, and [`collapse`] runs the concentration procedure that
//! explains why single-node placements are the worst case.
//!
//! ```
//! use cover_pebbling::oracle::{can_cover, SearchBudget};
//! use cover_pebbling::solver::gamma;
//! use cover_pebbling::{Distribution, Family, GoalDistribution};
//!
//! let g = Family::Path(4).graph()?;
//! let goal = GoalDistribution::ones(4);
//! assert_eq!(gamma(&g, &goal)?.gamma, 15);
//!
//! let start: Distribution = "14,0,0,0".parse()?;
//! let decision = can_cover(&g, &start, &goal, &mut SearchBudget::default())?;
//! assert!(!decision.coverable);
//! # Ok::<(), cover_pebbling::Error>(())
//! ```

pub mod cli;
pub mod collapse;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod pebbling;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Family, Graph, GraphFile};
pub use pebbling::{Distribution, GoalDistribution, NodeStatus, ValuedDistribution};
