//! Certifying chordality and greedy list coloring along vertex orders.
//!
//! Orders follow the "earlier neighbors" convention: in a perfect
//! elimination ordering `v_1, ..., v_n`, the neighbors of `v_i` among
//! `v_1, ..., v_{i-1}` form a clique. Maximum cardinality search produces
//! such an order on every chordal graph; when the order fails the check, a
//! hole (chordless cycle of length at least four) is extracted instead, so
//! every verdict comes with a witness.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::coloring::{Color, Coloring, ListAssignment};
use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordalError {
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("witness ({v}, {u}, {w}) breaks the precondition: u and w must be non-adjacent neighbors of v")]
    PreconditionBreach { v: Vertex, u: Vertex, w: Vertex },
    #[error("order is not a perfect elimination ordering: {0}")]
    InvalidPeo(PeoViolation),
    #[error("invalid hole: {0}")]
    InvalidHole(&'static str),
    #[error("vertex {0} has no list")]
    MissingList(Vertex),
    #[error("no free list color at vertex {0}")]
    ListExhausted(Vertex),
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `vertex` has two earlier neighbors `witness_pair` that are not adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeoViolation {
    pub vertex: Vertex,
    pub witness_pair: (Vertex, Vertex),
}

impl std::fmt::Display for PeoViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "earlier neighbors {} and {} of vertex {} are not adjacent",
            self.witness_pair.0, self.witness_pair.1, self.vertex
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeoError {
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("{0}")]
    Violation(PeoViolation),
}

/// A verified perfect elimination ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    order: Vec<Vertex>,
    position: BTreeMap<Vertex, usize>,
}

impl EliminationOrder {
    /// Checks `order` against `g` and wraps it on success.
    pub fn verified(g: &Graph, order: Vec<Vertex>) -> Result<Self, PeoError> {
        verify_peo(g, &order)?;
        let position = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Ok(Self { order, position })
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.position.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// A chordless cycle `x_1 x_2 ... x_k x_1` with `k >= 4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hole {
    cycle: Vec<Vertex>,
}

impl Hole {
    /// Audits `cycle` in `g` and wraps it on success.
    pub fn new(g: &Graph, cycle: Vec<Vertex>) -> Result<Self, ChordalError> {
        check_hole(g, &cycle)?;
        Ok(Self { cycle })
    }

    /// Wraps without auditing. Callers must have established the invariants.
    pub(crate) fn new_unchecked(cycle: Vec<Vertex>) -> Self {
        Self { cycle }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        check_hole(g, &self.cycle).is_ok()
    }
}

fn check_hole(g: &Graph, cycle: &[Vertex]) -> Result<(), ChordalError> {
    let k = cycle.len();
    if k < 4 {
        return Err(ChordalError::InvalidHole("fewer than four vertices"));
    }
    let mut seen = BTreeSet::new();
    for &v in cycle {
        if !g.contains(v) {
            return Err(ChordalError::Graph(GraphError::UnknownVertex(v)));
        }
        if !seen.insert(v) {
            return Err(ChordalError::InvalidHole("repeated vertex"));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return Err(if consecutive {
                    ChordalError::InvalidHole("consecutive vertices are not adjacent")
                } else {
                    ChordalError::InvalidHole("cycle has a chord")
                });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalityCertificate {
    Peo(EliminationOrder),
    Hole(Hole),
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::Peo(_))
    }
}

/// Maximum cardinality search. Starts at the smallest id; each step visits
/// the unvisited vertex with the most visited neighbors, smallest id first.
pub fn mcs_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n.max(1)];
    buckets[0].extend(0..n);
    let mut top = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let a = buckets[top].pop_first().expect("non-empty bucket");
        visited[a] = true;
        order.push(g.id(a));
        for &b in g.neighbor_indices(a) {
            if !visited[b] {
                buckets[weight[b]].remove(&b);
                weight[b] += 1;
                buckets[weight[b]].insert(b);
                top = top.max(weight[b]);
            }
        }
    }
    order
}

/// Index positions of `order`, or `None` if it is not a permutation.
fn positions(g: &Graph, order: &[Vertex]) -> Option<Vec<usize>> {
    if order.len() != g.vertex_count() {
        return None;
    }
    let mut pos = vec![usize::MAX; order.len()];
    for (i, &v) in order.iter().enumerate() {
        let idx = g.index_of(v)?;
        if pos[idx] != usize::MAX {
            return None;
        }
        pos[idx] = i;
    }
    Some(pos)
}

/// Checks the perfect elimination property. Reports the violation with the
/// smallest position, then the lexicographically smallest witness pair.
pub fn verify_peo(g: &Graph, order: &[Vertex]) -> Result<(), PeoError> {
    let pos = positions(g, order).ok_or(PeoError::NotAPermutation)?;
    let mut earlier = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let a = g.index_of(v).expect("checked permutation");
        earlier.clear();
        earlier.extend(g.neighbor_indices(a).iter().copied().filter(|&b| pos[b] < i));
        for (p, &x) in earlier.iter().enumerate() {
            for &y in &earlier[p + 1..] {
                if !g.adjacent_indices(x, y) {
                    return Err(PeoError::Violation(PeoViolation {
                        vertex: v,
                        witness_pair: (g.id(x), g.id(y)),
                    }));
                }
            }
        }
    }
    Ok(())
}

/// Closes `v, u, ..., w` into a hole through a shortest `u`–`w` path that
/// avoids every other neighbor of `v`.
pub fn find_hole_from_witness(
    g: &Graph,
    v: Vertex,
    u: Vertex,
    w: Vertex,
) -> Result<Option<Hole>, ChordalError> {
    let breach = ChordalError::PreconditionBreach { v, u, w };
    let (Some(iv), Some(iu), Some(iw)) = (g.index_of(v), g.index_of(u), g.index_of(w)) else {
        return Err(breach);
    };
    if u == w || !g.adjacent_indices(iv, iu) || !g.adjacent_indices(iv, iw) || g.adjacent_indices(iu, iw) {
        return Err(breach);
    }
    Ok(hole_search(g, iv, iu, iw))
}

fn hole_search(g: &Graph, iv: usize, iu: usize, iw: usize) -> Option<Hole> {
    const UNSEEN: usize = usize::MAX;
    let mut parent = vec![UNSEEN; g.vertex_count()];
    parent[iv] = iv;
    for &b in g.neighbor_indices(iv) {
        if b != iu && b != iw {
            parent[b] = b;
        }
    }
    parent[iu] = iu;
    let mut queue = VecDeque::from([iu]);
    while let Some(a) = queue.pop_front() {
        for &b in g.neighbor_indices(a) {
            if parent[b] != UNSEEN {
                continue;
            }
            parent[b] = a;
            if b == iw {
                let mut path = vec![iw];
                let mut cur = iw;
                while cur != iu {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.push(iv);
                path.reverse();
                return Some(Hole::new_unchecked(path.into_iter().map(|i| g.id(i)).collect()));
            }
            queue.push_back(b);
        }
    }
    None
}

/// Either a verified elimination order or a hole.
pub fn chordality_certificate(g: &Graph) -> Result<ChordalityCertificate, ChordalError> {
    let order = mcs_order(g);
    match EliminationOrder::verified(g, order) {
        Ok(peo) => Ok(ChordalityCertificate::Peo(peo)),
        Err(PeoError::NotAPermutation) => Err(ChordalError::InternalInvariantBroken(
            "search order is not a permutation",
        )),
        Err(PeoError::Violation(_)) => {
            for a in 0..g.vertex_count() {
                let nbrs = g.neighbor_indices(a);
                for (p, &x) in nbrs.iter().enumerate() {
                    for &y in &nbrs[p + 1..] {
                        if g.adjacent_indices(x, y) {
                            continue;
                        }
                        if let Some(hole) = hole_search(g, a, x, y) {
                            debug_assert!(hole.is_valid_in(g));
                            return Ok(ChordalityCertificate::Hole(hole));
                        }
                    }
                }
            }
            Err(ChordalError::InternalInvariantBroken(
                "elimination check failed but no hole was found",
            ))
        }
    }
}

/// One more than the largest earlier-neighbor count; 0 on the empty graph.
pub fn clique_number_from_peo(g: &Graph, peo: &EliminationOrder) -> Result<usize, ChordalError> {
    let pos = positions(g, peo.order()).ok_or(ChordalError::NotAPermutation)?;
    verify_peo(g, peo.order()).map_err(|e| match e {
        PeoError::NotAPermutation => ChordalError::NotAPermutation,
        PeoError::Violation(v) => ChordalError::InvalidPeo(v),
    })?;
    Ok((0..g.vertex_count())
        .map(|a| 1 + g.neighbor_indices(a).iter().filter(|&&b| pos[b] < pos[a]).count())
        .max()
        .unwrap_or(0))
}

/// Colors vertices in `order`, each with the smallest list color unused by
/// its already-colored neighbors.
pub fn greedy_color_along(
    g: &Graph,
    order: &[Vertex],
    lists: &ListAssignment,
) -> Result<Coloring, ChordalError> {
    if positions(g, order).is_none() {
        return Err(ChordalError::NotAPermutation);
    }
    let mut assigned: Vec<Option<Color>> = vec![None; g.vertex_count()];
    let mut used = Vec::new();
    for &v in order {
        let a = g.index_of(v).expect("checked permutation");
        let list = lists.get(v).ok_or(ChordalError::MissingList(v))?;
        used.clear();
        used.extend(g.neighbor_indices(a).iter().filter_map(|&b| assigned[b]));
        let color = list
            .iter()
            .copied()
            .find(|c| !used.contains(c))
            .ok_or(ChordalError::ListExhausted(v))?;
        assigned[a] = Some(color);
    }
    Ok(g
        .vertices()
        .iter()
        .zip(assigned)
        .map(|(&v, c)| (v, c.expect("every vertex colored")))
        .collect())
}
