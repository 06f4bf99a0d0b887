//! Immutable simple undirected graphs with stable vertex ids.
//!
//! Vertices keep the id they were created with through every derived graph
//! ([`Graph::surgery`]), so a vertex named in one graph can be looked up in
//! any graph obtained from it by deletion or edge insertion.
//!
//! Internally a graph stores its ids in ascending order together with
//! index-based sorted adjacency lists. Index order equals id order, which
//! makes "ascending id" iteration free everywhere.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

/// A vertex identifier. Any non-negative integer is allowed.
pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("edge ({0}, {1}) has an endpoint scheduled for deletion")]
    EndpointDeleted(Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    ids: Vec<Vertex>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from a vertex collection and an edge list.
    ///
    /// Repeated ids and repeated (or reversed) edges collapse silently.
    pub fn new<I, E>(vertices: I, edges: E) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut ids: Vec<Vertex> = vertices.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        let mut graph = Graph {
            adj: vec![Vec::new(); ids.len()],
            ids,
            edge_count: 0,
        };
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let iu = graph.index_of(u).ok_or(GraphError::UnknownVertex(u))?;
            let iv = graph.index_of(v).ok_or(GraphError::UnknownVertex(v))?;
            pairs.push((iu.min(iv), iu.max(iv)));
        }
        graph.install_edges(pairs);
        Ok(graph)
    }

    /// Vertices `1..=n` and the given edges.
    pub fn with_vertex_count<E>(n: u32, edges: E) -> Result<Self, GraphError>
    where
        E: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::new(1..=n, edges)
    }

    fn install_edges(&mut self, mut pairs: Vec<(usize, usize)>) {
        pairs.sort_unstable();
        pairs.dedup();
        for &(a, b) in &pairs {
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
        for list in &mut self.adj {
            list.sort_unstable();
        }
        self.edge_count = pairs.len();
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.ids
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index_of(v).is_some()
    }

    /// Position of `v` in [`Graph::vertices`].
    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub(crate) fn id(&self, index: usize) -> Vertex {
        self.ids[index]
    }

    pub(crate) fn neighbor_indices(&self, index: usize) -> &[usize] {
        &self.adj[index]
    }

    pub(crate) fn adjacent_indices(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    fn require(&self, v: Vertex) -> Result<usize, GraphError> {
        self.index_of(v).ok_or(GraphError::UnknownVertex(v))
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: Vertex) -> Result<impl Iterator<Item = Vertex> + '_, GraphError> {
        let i = self.require(v)?;
        Ok(self.adj[i].iter().map(move |&j| self.ids[j]))
    }

    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        Ok(self.adj[self.require(v)?].len())
    }

    /// False when either endpoint is missing.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.adjacent_indices(a, b),
            _ => false,
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(a, list)| {
            list.iter()
                .filter(move |&&b| b > a)
                .map(move |&b| (self.ids[a], self.ids[b]))
        })
    }

    /// Maximum degree, 0 for edgeless and empty graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted ascending, ordered by smallest id.
    pub fn connected_components(&self) -> ComponentPartition {
        let n = self.ids.len();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(a) = queue.pop_front() {
                members.push(a);
                for &b in &self.adj[a] {
                    if !seen[b] {
                        seen[b] = true;
                        queue.push_back(b);
                    }
                }
            }
            members.sort_unstable();
            components.push(members.into_iter().map(|i| self.ids[i]).collect());
        }
        ComponentPartition { components }
    }

    /// True iff every pair of vertices in `set` is adjacent.
    pub fn is_complete(&self, set: &[Vertex]) -> Result<bool, GraphError> {
        let indices = set
            .iter()
            .map(|&v| self.require(v))
            .collect::<Result<Vec<_>, _>>()?;
        for (pos, &a) in indices.iter().enumerate() {
            for &b in &indices[pos + 1..] {
                if a != b && !self.adjacent_indices(a, b) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Removes `delete`, then inserts `add_edges` among the survivors.
    ///
    /// Surviving vertices keep their ids.
    pub fn surgery(
        &self,
        delete: &[Vertex],
        add_edges: &[(Vertex, Vertex)],
    ) -> Result<Graph, GraphError> {
        let mut removed = vec![false; self.ids.len()];
        for &v in delete {
            removed[self.require(v)?] = true;
        }
        for &(u, v) in add_edges {
            let a = self.require(u)?;
            let b = self.require(v)?;
            if a == b {
                return Err(GraphError::SelfLoop(u));
            }
            if removed[a] || removed[b] {
                return Err(GraphError::EndpointDeleted(u, v));
            }
        }
        self.induced_with(&removed, add_edges)
    }

    /// Subgraph induced by `keep`.
    pub fn induced(&self, keep: &[Vertex]) -> Result<Graph, GraphError> {
        let mut removed = vec![true; self.ids.len()];
        for &v in keep {
            removed[self.require(v)?] = false;
        }
        self.induced_with(&removed, &[])
    }

    fn induced_with(
        &self,
        removed: &[bool],
        add_edges: &[(Vertex, Vertex)],
    ) -> Result<Graph, GraphError> {
        let mut remap = vec![usize::MAX; self.ids.len()];
        let mut ids = Vec::with_capacity(self.ids.len());
        for (i, &id) in self.ids.iter().enumerate() {
            if !removed[i] {
                remap[i] = ids.len();
                ids.push(id);
            }
        }
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(ids.len());
        let mut edge_count = 0;
        for (i, list) in self.adj.iter().enumerate() {
            if removed[i] {
                continue;
            }
            let kept: Vec<usize> = list
                .iter()
                .filter(|&&j| !removed[j])
                .map(|&j| remap[j])
                .collect();
            edge_count += kept.len();
            adj.push(kept);
        }
        let mut graph = Graph {
            ids,
            adj,
            edge_count: edge_count / 2,
        };
        for &(u, v) in add_edges {
            let a = remap[self.require(u)?];
            let b = remap[self.require(v)?];
            if let Err(pos) = graph.adj[a].binary_search(&b) {
                graph.adj[a].insert(pos, b);
                let pos = graph.adj[b].binary_search(&a).unwrap_err();
                graph.adj[b].insert(pos, a);
                graph.edge_count += 1;
            }
        }
        Ok(graph)
    }

    /// Full structural audit: symmetric adjacency, no self-loops, no
    /// dangling neighbors, sorted lists, consistent edge count.
    pub fn audit(&self) -> bool {
        if self.ids.windows(2).any(|w| w[0] >= w[1]) || self.adj.len() != self.ids.len() {
            return false;
        }
        let mut half_edges = 0;
        for (a, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &b in list {
                if b == a || b >= self.ids.len() || self.adj[b].binary_search(&a).is_err() {
                    return false;
                }
            }
            half_edges += list.len();
        }
        half_edges == 2 * self.edge_count
    }

    /// Sets of neighbors keyed by id, mainly for tests and small tools.
    pub fn adjacency_sets(&self) -> Vec<(Vertex, BTreeSet<Vertex>)> {
        self.ids
            .iter()
            .enumerate()
            .map(|(a, &id)| (id, self.adj[a].iter().map(|&b| self.ids[b]).collect()))
            .collect()
    }
}

/// Disjoint vertex sets covering a graph, one per connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub components: Vec<Vec<Vertex>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Vertex]> {
        self.components.iter().map(Vec::as_slice)
    }
}

/// A few named graphs used throughout tests and examples.
pub mod named {
    use super::{Graph, Vertex};

    pub fn path(n: u32) -> Graph {
        Graph::with_vertex_count(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
    }

    pub fn cycle(n: u32) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::with_vertex_count(n, (1..=n).map(|i| (i, i % n + 1))).expect("valid cycle")
    }

    pub fn complete(n: u32) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::with_vertex_count(n, edges).expect("valid clique")
    }

    /// Parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: u32, b: u32) -> Graph {
        let edges = (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)));
        Graph::with_vertex_count(a + b, edges).expect("valid bipartite graph")
    }

    /// Outer cycle 1..5, spokes i–(i+5), inner pentagram on 6..10.
    pub fn petersen() -> Graph {
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for i in 0..5u32 {
            edges.push((i + 1, (i + 1) % 5 + 1));
            edges.push((i + 1, i + 6));
            edges.push((i + 6, (i + 2) % 5 + 6));
        }
        Graph::with_vertex_count(10, edges).expect("valid Petersen graph")
    }

    /// Star with the given center and leaves.
    pub fn star(center: Vertex, leaves: &[Vertex]) -> Graph {
        let vertices = leaves.iter().copied().chain([center]);
        Graph::new(vertices, leaves.iter().map(|&l| (center, l))).expect("valid star")
    }

    /// Disjoint union; the second graph's ids are shifted by `offset`.
    pub fn disjoint_union(a: &Graph, b: &Graph, offset: Vertex) -> Graph {
        let vertices = a
            .vertices()
            .iter()
            .copied()
            .chain(b.vertices().iter().map(|&v| v + offset));
        let edges = a
            .edges()
            .chain(b.edges().map(|(u, v)| (u + offset, v + offset)))
            .collect::<Vec<_>>();
        let g = Graph::new(vertices, edges).expect("valid union");
        assert_eq!(g.vertex_count(), a.vertex_count() + b.vertex_count(), "ids overlap");
        g
    }
}
