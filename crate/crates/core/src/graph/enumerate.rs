use super::Graph;
use crate::error::{Error, Result};

const MAX_ENUMERATED_NODES: usize = 5;

/// One representative of every isomorphism class of connected undirected
/// graphs on `n` nodes, ordered by edge count then edge mask.
///
/// Canonical forms are found by trying every relabelling, so `n` is capped at 5.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATED_NODES {
        return Err(Error::BadParams(format!(
            "can enumerate graphs on 1..={MAX_ENUMERATED_NODES} nodes, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);

    let mut canonical: Vec<u32> = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges = edges_of(mask, &pairs);
        if Graph::new(n, false, &edges).is_err() {
            continue;
        }
        let least = perms
            .iter()
            .map(|perm| {
                edges.iter().fold(0u32, |acc, &(u, v)| {
                    let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    acc | 1 << pair_index(n, a, b)
                })
            })
            .min()
            .unwrap_or(mask);
        canonical.push(least);
    }
    canonical.sort_unstable_by_key(|&mask| (mask.count_ones(), mask));
    canonical.dedup();
    canonical
        .into_iter()
        .map(|mask| Graph::new(n, false, &edges_of(mask, &pairs)))
        .collect()
}

fn edges_of(mask: u32, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &pair)| pair)
        .collect()
}

/// Position of `(a, b)`, `a < b`, in the lexicographic list of pairs.
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}
