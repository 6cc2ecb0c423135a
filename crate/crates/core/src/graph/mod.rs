//! Connected graphs, hop distances, Cartesian products and the standard families.
//!
//! Nodes are dense ids `0..node_count`. Undirected graphs are stored as
//! symmetric directed adjacency so every algorithm has a single code path.

mod enumerate;
mod family;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::connected_graphs;
pub use family::Family;

/// Largest node count accepted by [`Graph::new`].
pub const MAX_NODES: usize = 1 << 20;

const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    /// Out-neighbours of each node, sorted ascending.
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds and validates a graph.
    ///
    /// For undirected graphs every pair is listed once; `(u, v)` and `(v, u)`
    /// together count as a duplicate. The graph must be connected, strongly
    /// so when directed.
    pub fn new(node_count: usize, directed: bool, edges: &[(usize, usize)]) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::EmptyGraph);
        }
        if node_count > MAX_NODES {
            return Err(Error::TooManyNodes {
                nodes: node_count,
                max: MAX_NODES,
            });
        }
        let mut adjacency = vec![Vec::new(); node_count];
        for &(from, to) in edges {
            if from >= node_count || to >= node_count {
                return Err(Error::InvalidEdge {
                    from,
                    to,
                    reason: "node id out of range",
                });
            }
            if from == to {
                return Err(Error::InvalidEdge {
                    from,
                    to,
                    reason: "self-loop",
                });
            }
            adjacency[from].push(to);
            if !directed {
                adjacency[to].push(from);
            }
        }
        for (from, targets) in adjacency.iter_mut().enumerate() {
            targets.sort_unstable();
            if let Some(pair) = targets.windows(2).find(|pair| pair[0] == pair[1]) {
                return Err(Error::InvalidEdge {
                    from,
                    to: pair[0],
                    reason: "duplicate edge",
                });
            }
        }
        let graph = Graph {
            directed,
            adjacency,
        };
        graph.check_connected()?;
        Ok(graph)
    }

    fn check_connected(&self) -> Result<()> {
        let forward = self.bfs_distances(0);
        if let Some(to) = forward.iter().position(|&d| d == UNREACHED) {
            return Err(Error::NotConnected { from: 0, to });
        }
        if self.directed {
            let reversed = self.reversed();
            let backward = reversed.bfs_distances(0);
            if let Some(from) = backward.iter().position(|&d| d == UNREACHED) {
                return Err(Error::NotConnected { from, to: 0 });
            }
        }
        Ok(())
    }

    fn reversed(&self) -> Graph {
        let mut adjacency = vec![Vec::new(); self.node_count()];
        for (from, targets) in self.adjacency.iter().enumerate() {
            for &to in targets {
                adjacency[to].push(from);
            }
        }
        // Pushed in ascending `from` order, so already sorted.
        Graph {
            directed: self.directed,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.node_count()
    }

    /// Out-neighbours of `node` in ascending order.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.adjacency
            .get(from)
            .is_some_and(|targets| targets.binary_search(&to).is_ok())
    }

    /// Edges in canonical form: every arc for directed graphs, `u < v` pairs
    /// for undirected ones. Sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(from, targets)| targets.iter().map(move |&to| (from, to)))
            .filter(|&(from, to)| self.directed || from < to)
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        let arcs: usize = self.adjacency.iter().map(Vec::len).sum();
        if self.directed {
            arcs
        } else {
            arcs / 2
        }
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<()> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange(node))
        }
    }

    /// Hop distances from `source` to every node.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        self.bfs_distances(source)
    }

    fn bfs_distances(&self, source: usize) -> Vec<u32> {
        self.multi_source_bfs(std::iter::once(source))
    }

    /// Distance from the nearest of `sources` to every node; `None` where no
    /// source exists.
    pub fn nearest_source_distances<I>(&self, sources: I) -> Vec<Option<u32>>
    where
        I: IntoIterator<Item = usize>,
    {
        self.multi_source_bfs(sources)
            .into_iter()
            .map(|d| (d != UNREACHED).then_some(d))
            .collect()
    }

    fn multi_source_bfs<I>(&self, sources: I) -> Vec<u32>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut dist = vec![UNREACHED; self.node_count()];
        let mut queue = VecDeque::new();
        for source in sources {
            if dist[source] == UNREACHED {
                dist[source] = 0;
                queue.push_back(source);
            }
        }
        while let Some(node) = queue.pop_front() {
            let next = dist[node] + 1;
            for &to in &self.adjacency[node] {
                if dist[to] == UNREACHED {
                    dist[to] = next;
                    queue.push_back(to);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances, one breadth-first search per source.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.node_count();
        let mut entries = Vec::with_capacity(n * n);
        for source in self.nodes() {
            entries.extend(self.bfs_distances(source));
        }
        DistanceMatrix { n, entries }
    }

    /// One minimal path from `from` to `to`, both ends included.
    ///
    /// Breadth-first search expanding neighbours in ascending id order, with
    /// each node's parent fixed at first discovery, so ties go to the lower id.
    pub fn shortest_path(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        self.check_node(from)?;
        self.check_node(to)?;
        let mut parent = vec![usize::MAX; self.node_count()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        'search: while let Some(node) = queue.pop_front() {
            if node == to {
                break;
            }
            for &next in &self.adjacency[node] {
                if parent[next] == usize::MAX {
                    parent[next] = node;
                    if next == to {
                        break 'search;
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut path = vec![to];
        let mut node = to;
        while node != from {
            node = parent[node];
            path.push(node);
        }
        path.reverse();
        Ok(path)
    }

    /// Cartesian product; node `(a, b)` is encoded as `a * other.node_count() + b`.
    pub fn product(&self, other: &Graph) -> Result<Graph> {
        if self.directed != other.directed {
            return Err(Error::MixedDirectedness);
        }
        let (n1, n2) = (self.node_count(), other.node_count());
        let n = n1
            .checked_mul(n2)
            .filter(|&n| n <= MAX_NODES)
            .ok_or(Error::TooManyNodes {
                nodes: n1.saturating_mul(n2),
                max: MAX_NODES,
            })?;
        let mut adjacency = Vec::with_capacity(n);
        for a in 0..n1 {
            for b in 0..n2 {
                let mut targets: Vec<usize> = self.adjacency[a]
                    .iter()
                    .map(|&a2| a2 * n2 + b)
                    .chain(other.adjacency[b].iter().map(|&b2| a * n2 + b2))
                    .collect();
                targets.sort_unstable();
                adjacency.push(targets);
            }
        }
        Ok(Graph {
            directed: self.directed,
            adjacency,
        })
    }

    /// Same graph with node `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.node_count();
        if perm.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse(format!("{perm:?} is not a permutation")));
            }
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(n, self.directed, &edges)
    }
}

/// Hop counts between every ordered pair of nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    /// Distance from `from` to `to`.
    pub fn get(&self, from: usize, to: usize) -> u32 {
        self.entries[from * self.n + to]
    }

    pub fn row(&self, from: usize) -> &[u32] {
        &self.entries[from * self.n..(from + 1) * self.n]
    }
}

/// On-disk graph description.
///
/// `goal` is optional; a missing goal means one pebble per node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub nodes: usize,
    pub directed: bool,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goal: Option<Vec<u64>>,
}

impl GraphFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<_> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::new(self.nodes, self.directed, &edges)
    }
}

impl From<&Graph> for GraphFile {
    fn from(graph: &Graph) -> Self {
        GraphFile {
            nodes: graph.node_count(),
            directed: graph.is_directed(),
            edges: graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            goal: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, false, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cycle4() -> Graph {
        Graph::new(4, false, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn five_node_digraph() -> Graph {
        Graph::new(5, true, &[(4, 3), (3, 2), (2, 0), (2, 1), (0, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn smallest_connected_graph() {
        let g = Graph::new(2, false, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
    }

    #[test]
    fn five_node_digraph_is_strongly_connected() {
        let g = five_node_digraph();
        assert!(g.is_directed());
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(4, 3) && !g.has_edge(3, 4));
    }

    #[test]
    fn rejects_isolated_node() {
        assert_eq!(
            Graph::new(3, false, &[(0, 1)]),
            Err(Error::NotConnected { from: 0, to: 2 })
        );
    }

    #[test]
    fn rejects_weakly_connected_digraph() {
        assert_eq!(
            Graph::new(2, true, &[(0, 1)]),
            Err(Error::NotConnected { from: 1, to: 0 })
        );
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(2, false, &[(0, 0), (0, 1)]),
            Err(Error::InvalidEdge {
                reason: "self-loop",
                ..
            })
        ));
        assert!(matches!(
            Graph::new(2, false, &[(0, 2)]),
            Err(Error::InvalidEdge { .. })
        ));
        assert!(matches!(
            Graph::new(2, false, &[(0, 1), (1, 0)]),
            Err(Error::InvalidEdge {
                reason: "duplicate edge",
                ..
            })
        ));
        // Antiparallel arcs are distinct in a digraph.
        assert!(Graph::new(2, true, &[(0, 1), (1, 0)]).is_ok());
        assert_eq!(Graph::new(0, false, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn distances() {
        assert_eq!(path3().distance_matrix().get(0, 2), 2);
        let c4 = cycle4().distance_matrix();
        assert_eq!((c4.get(0, 1), c4.get(0, 2), c4.get(0, 3)), (1, 2, 1));
        assert_eq!(
            five_node_digraph().distance_matrix().row(4),
            &[3, 3, 2, 1, 0]
        );
    }

    #[test]
    fn nearest_source() {
        let d = path3().nearest_source_distances([0, 2]);
        assert_eq!(d, vec![Some(0), Some(1), Some(0)]);
        assert_eq!(path3().nearest_source_distances([]), vec![None; 3]);
    }

    #[test]
    fn shortest_paths() {
        assert_eq!(path3().shortest_path(0, 2).unwrap(), vec![0, 1, 2]);
        let k4 = Family::Complete(4).graph().unwrap();
        assert_eq!(k4.shortest_path(0, 3).unwrap(), vec![0, 3]);
        assert_eq!(cycle4().shortest_path(0, 2).unwrap(), vec![0, 1, 2]);
        assert_eq!(cycle4().shortest_path(2, 2).unwrap(), vec![2]);
        assert_eq!(
            five_node_digraph().shortest_path(4, 1).unwrap(),
            vec![4, 3, 2, 1]
        );
        assert!(path3().shortest_path(0, 3).is_err());
    }

    #[test]
    fn products() {
        let p2 = Graph::new(2, false, &[(0, 1)]).unwrap();
        let square = p2.product(&p2).unwrap();
        assert_eq!((square.node_count(), square.edge_count()), (4, 4));
        assert!(square
            .edges()
            .iter()
            .all(|&(u, v)| square.neighbors(u).contains(&v)));

        let grid = p2.product(&path3()).unwrap();
        assert_eq!((grid.node_count(), grid.edge_count()), (6, 7));

        let k1 = Graph::new(1, false, &[]).unwrap();
        assert_eq!(k1.product(&cycle4()).unwrap(), cycle4());
        assert_eq!(cycle4().product(&k1).unwrap(), cycle4());

        assert_eq!(
            p2.product(&five_node_digraph()),
            Err(Error::MixedDirectedness)
        );
    }

    #[test]
    fn graph_file_round_trip() {
        let text = r#"{"nodes": 3, "directed": false, "edges": [[0,1],[1,2]]}"#;
        let file = GraphFile::from_json(text).unwrap();
        assert_eq!(file.goal, None);
        let g = file.to_graph().unwrap();
        assert_eq!(GraphFile::from(&g), file);
        assert!(GraphFile::from_json("{\"nodes\": 3}").is_err());
    }
}
