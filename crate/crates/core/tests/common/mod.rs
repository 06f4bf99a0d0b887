//! Brute-force references used by the integration tests. These work on the
//! raw edge relation only and share no code with the library algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use brooks_color::{Color, Graph, Vertex};

/// Adjacency matrix over positions in `g.vertices()`.
pub fn matrix(g: &Graph) -> (Vec<Vertex>, Vec<Vec<bool>>) {
    let ids = g.vertices().to_vec();
    let n = ids.len();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        let a = ids.iter().position(|&x| x == u).unwrap();
        let b = ids.iter().position(|&x| x == v).unwrap();
        adj[a][b] = true;
        adj[b][a] = true;
    }
    (ids, adj)
}

/// True iff some vertex subset of size at least four induces a cycle.
pub fn has_chordless_cycle(g: &Graph) -> bool {
    let (_, adj) = matrix(g);
    let n = adj.len();
    assert!(n <= 16, "exponential reference");
    (0u32..1 << n).any(|mask| {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        members.len() >= 4 && induces_cycle(&adj, &members)
    })
}

fn induces_cycle(adj: &[Vec<bool>], members: &[usize]) -> bool {
    let inner = |a: usize| members.iter().filter(|&&b| adj[a][b]).count();
    if members.iter().any(|&a| inner(a) != 2) {
        return false;
    }
    // 2-regular: a cycle iff connected.
    let mut seen = vec![members[0]];
    let mut frontier = vec![members[0]];
    while let Some(a) = frontier.pop() {
        for &b in members {
            if adj[a][b] && !seen.contains(&b) {
                seen.push(b);
                frontier.push(b);
            }
        }
    }
    seen.len() == members.len()
}

/// Every vertex subset of size >= 4 that induces a cycle (as a set).
pub fn chordless_cycle_sets(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    let (ids, adj) = matrix(g);
    let n = adj.len();
    (0u32..1 << n)
        .filter_map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            (members.len() >= 4 && induces_cycle(&adj, &members))
                .then(|| members.iter().map(|&i| ids[i]).collect())
        })
        .collect()
}

/// Size of a largest clique.
pub fn max_clique(g: &Graph) -> usize {
    let (_, adj) = matrix(g);
    let n = adj.len();
    assert!(n <= 16, "exponential reference");
    (0u32..1 << n)
        .filter(|&mask| {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            members
                .iter()
                .enumerate()
                .all(|(p, &a)| members[p + 1..].iter().all(|&b| adj[a][b]))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Whether a path from `from` to `to` exists avoiding `blocked`, by
/// depth-first enumeration of simple paths.
pub fn path_exists_avoiding(g: &Graph, from: Vertex, to: Vertex, blocked: &BTreeSet<Vertex>) -> bool {
    let (ids, adj) = matrix(g);
    let pos = |v: Vertex| ids.iter().position(|&x| x == v).unwrap();
    fn dfs(adj: &[Vec<bool>], cur: usize, to: usize, on_path: &mut Vec<bool>, blocked: &[bool]) -> bool {
        if cur == to {
            return true;
        }
        on_path[cur] = true;
        for next in 0..adj.len() {
            if adj[cur][next] && !on_path[next] && !blocked[next] && dfs(adj, next, to, on_path, blocked) {
                return true;
            }
        }
        on_path[cur] = false;
        false
    }
    let blocked_mask: Vec<bool> = ids.iter().map(|v| blocked.contains(v)).collect();
    let mut on_path = vec![false; ids.len()];
    dfs(&adj, pos(from), pos(to), &mut on_path, &blocked_mask)
}

/// Whether the cycle `0-1-...-(k-1)-0` can be properly colored from `lists`.
pub fn cycle_colorable(lists: &[Vec<Color>]) -> bool {
    fn go(lists: &[Vec<Color>], chosen: &mut Vec<Color>) -> bool {
        let i = chosen.len();
        if i == lists.len() {
            return chosen[0] != chosen[i - 1];
        }
        for &c in &lists[i] {
            if i > 0 && chosen[i - 1] == c {
                continue;
            }
            chosen.push(c);
            if go(lists, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(lists, &mut Vec::new())
}
