//! Ground truth for small instances: a coloring validator and an exhaustive
//! list-coloring search. Neither depends on the chordal or Brooks machinery.

use thiserror::Error;

use crate::coloring::{Color, Coloring, ListAssignment};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Defect {
    #[error("vertex {0} is not colored")]
    IncompleteColoring(Vertex),
    #[error("colored vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("vertex {0} has no list")]
    MissingList(Vertex),
    #[error("vertex {vertex} has color {color} outside its list")]
    ColorOutsideList { vertex: Vertex, color: Color },
    #[error("edge ({u}, {v}) is monochromatic with color {color}")]
    MonochromaticEdge { u: Vertex, v: Vertex, color: Color },
}

/// Checks properness and list membership.
///
/// Completeness is checked first over all vertices; after that vertices are
/// scanned in ascending order, each checked for list membership and then
/// against its larger neighbors.
pub fn verify_coloring(g: &Graph, lists: &ListAssignment, phi: &Coloring) -> Result<(), Defect> {
    if let Some(&v) = g.vertices().iter().find(|&&v| phi.get(v).is_none()) {
        return Err(Defect::IncompleteColoring(v));
    }
    if let Some((v, _)) = phi.iter().find(|&(v, _)| !g.contains(v)) {
        return Err(Defect::UnknownVertex(v));
    }
    for &v in g.vertices() {
        let color = phi.get(v).expect("checked complete");
        let list = lists.get(v).ok_or(Defect::MissingList(v))?;
        if !list.contains(&color) {
            return Err(Defect::ColorOutsideList { vertex: v, color });
        }
        for u in g.neighbors(v).expect("own vertex").filter(|&u| u > v) {
            if phi.get(u) == Some(color) {
                return Err(Defect::MonochromaticEdge { u: v, v: u, color });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteForceOutcome {
    Colored(Coloring),
    Unsatisfiable,
    LimitExceeded,
}

/// Backtracking over vertices in ascending id order and list colors in
/// ascending order. Returns the lexicographically first list coloring.
///
/// `node_limit` bounds the number of tentative color assignments. A vertex
/// with no list has no admissible color.
pub fn brute_force_list_color(g: &Graph, lists: &ListAssignment, node_limit: u64) -> BruteForceOutcome {
    let n = g.vertex_count();
    let ids = g.vertices();
    let options: Vec<Vec<Color>> = ids
        .iter()
        .map(|&v| lists.get(v).map(|l| l.iter().copied().collect()).unwrap_or_default())
        .collect();
    // Only neighbors earlier in the search order can conflict.
    let earlier: Vec<Vec<usize>> = (0..n)
        .map(|i| g.neighbor_indices(i).iter().copied().filter(|&j| j < i).collect())
        .collect();

    let mut assigned: Vec<Color> = vec![0; n];
    let mut next_choice = vec![0usize; n + 1];
    let mut nodes = 0u64;
    let mut depth = 0usize;
    loop {
        if depth == n {
            return BruteForceOutcome::Colored(ids.iter().copied().zip(assigned).collect());
        }
        let start = next_choice[depth];
        let found = options[depth][start..]
            .iter()
            .position(|c| earlier[depth].iter().all(|&j| assigned[j] != *c));
        match found {
            Some(offset) => {
                nodes += 1;
                if nodes > node_limit {
                    return BruteForceOutcome::LimitExceeded;
                }
                assigned[depth] = options[depth][start + offset];
                next_choice[depth] = start + offset + 1;
                depth += 1;
                next_choice[depth] = 0;
            }
            None => {
                if depth == 0 {
                    return BruteForceOutcome::Unsatisfiable;
                }
                next_choice[depth] = 0;
                depth -= 1;
            }
        }
    }
}
