//! Brute-force oracles shared by the integration tests. These deliberately
//! avoid the library's closed-form adjacency and pruned search.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use ltq::topology::{neighbors_recursive, NodeLabel};

/// Adjacency lists built from the recursive definition only.
pub fn recursive_adjacency(dim: u32) -> Vec<Vec<u32>> {
    (0..1u32 << dim)
        .map(|v| {
            neighbors_recursive(NodeLabel::new(dim, v).unwrap())
                .into_iter()
                .map(|n| n.value())
                .collect()
        })
        .collect()
}

/// Every Hamiltonian cycle through node 0 by plain DFS, oriented so the
/// second node is smaller than the last.
pub fn brute_force_cycles(dim: u32) -> BTreeSet<Vec<u32>> {
    let adj = recursive_adjacency(dim);
    let n = adj.len();
    let mut out = BTreeSet::new();
    let mut path = vec![0u32];
    let mut seen = vec![false; n];
    seen[0] = true;
    fn dfs(adj: &[Vec<u32>], path: &mut Vec<u32>, seen: &mut [bool], out: &mut BTreeSet<Vec<u32>>) {
        let n = adj.len();
        let head = *path.last().unwrap();
        if path.len() == n {
            if adj[head as usize].contains(&0) {
                let mut c = path.clone();
                if c[1] > c[n - 1] {
                    c[1..].reverse();
                }
                out.insert(c);
            }
            return;
        }
        for &w in &adj[head as usize] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                path.push(w);
                dfs(adj, path, seen, out);
                path.pop();
                seen[w as usize] = false;
            }
        }
    }
    dfs(&adj, &mut path, &mut seen, &mut out);
    out
}

pub fn cycle_edge_set(c: &[u32]) -> HashSet<(u32, u32)> {
    (0..c.len())
        .map(|i| {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}

pub fn disjoint_pair_count(cycles: &[Vec<u32>]) -> usize {
    let sets: Vec<_> = cycles.iter().map(|c| cycle_edge_set(c)).collect();
    let mut count = 0;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].is_disjoint(&sets[j]) {
                count += 1;
            }
        }
    }
    count
}
