//! Constructive list coloring for graphs meeting the list version of
//! Brooks' theorem: connected, maximum degree `Δ >= 3`, not `K_{Δ+1}`, and
//! every list of size at least `Δ`.
//!
//! Each component is handled on its own. A component whose lists all exceed
//! the vertex degrees is colored greedily. Otherwise a chordal component is
//! colored greedily along a perfect elimination ordering, and a non-chordal
//! one is reduced through a hole `C = x_1 ... x_k`:
//!
//! * `F = (G - {x_4, ..., x_k}) + x_1x_3`
//! * `H = (G - {x_1, x_5, ..., x_k}) + x_2x_4`
//!
//! At least one of the two contains no `K_{Δ+1}`; that graph is colored
//! recursively, the colors of the cycle vertices are dropped, and the cycle
//! is recolored from its residual lists going around the cycle.
//!
//! The recursion runs on an explicit work stack, so depth is bounded by
//! heap memory rather than the thread stack.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::chordal::{chordality_certificate, greedy_color_along, ChordalError, ChordalityCertificate, Hole};
use crate::coloring::{Color, Coloring, ListAssignment};
use crate::graph::{Graph, GraphError, Vertex};
use crate::oracle::{verify_coloring, Defect};

/// Conditions that the constructive argument guarantees never happen.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantBreach {
    #[error("both branch graphs contain a complete graph on Δ+1 vertices")]
    BothBranchesBlocked,
    #[error("no adjacent cycle pair admits a start color")]
    NoStartPair,
    #[error("residual list of cycle vertex {vertex} has {size} colors, need at least 2")]
    ResidualTooSmall { vertex: Vertex, size: usize },
    #[error("exterior neighbor {0} of the cycle is uncolored")]
    UncoloredExterior(Vertex),
    #[error("chordality: {0}")]
    Chordal(ChordalError),
    #[error("graph surgery: {0}")]
    Graph(GraphError),
    #[error("final coloring failed verification: {0}")]
    Unverified(Defect),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("hypothesis violation: {0}")]
    HypothesisViolation(HypothesisReport),
    #[error("vertex {0} has no list")]
    MissingList(Vertex),
    #[error("invalid hole: {0}")]
    InvalidHole(ChordalError),
    #[error("internal invariant broken: {0}")]
    InternalInvariantBroken(#[from] InvariantBreach),
}

/// Which sufficient condition a component satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Every list is longer than the vertex degree.
    DegreePlusOne,
    /// `Δc >= 3`, lists of size at least `Δc`, and not `K_{Δc+1}`.
    Brooks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrooksFailure {
    DegreeBelowThree { max_degree: usize },
    ShortList { vertex: Vertex, size: usize, max_degree: usize },
    CompleteGraph { max_degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentViolation {
    /// Smallest id in the component.
    pub component: Vertex,
    /// First vertex whose list is not longer than its degree.
    pub short_vertex: Vertex,
    pub failure: BrooksFailure,
}

impl fmt::Display for ComponentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "component of vertex {}: list of vertex {} does not exceed its degree, and ",
            self.component, self.short_vertex
        )?;
        match self.failure {
            BrooksFailure::DegreeBelowThree { max_degree } => {
                write!(f, "maximum degree {max_degree} is below 3")
            }
            BrooksFailure::ShortList { vertex, size, max_degree } => {
                write!(f, "vertex {vertex} has {size} colors for maximum degree {max_degree}")
            }
            BrooksFailure::CompleteGraph { max_degree } => {
                write!(f, "the component is K_{}", max_degree + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub component: Vertex,
    pub size: usize,
    pub max_degree: usize,
    pub verdict: Result<Condition, ComponentViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HypothesisReport {
    pub components: Vec<ComponentReport>,
}

impl HypothesisReport {
    pub fn is_ok(&self) -> bool {
        self.components.iter().all(|c| c.verdict.is_ok())
    }

    pub fn violations(&self) -> impl Iterator<Item = &ComponentViolation> {
        self.components.iter().filter_map(|c| c.verdict.as_ref().err())
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, violation) in self.violations().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{violation}")?;
            any = true;
        }
        if !any {
            f.write_str("all components satisfy the hypotheses")?;
        }
        Ok(())
    }
}

fn assess_component(
    g: &Graph,
    members: &[Vertex],
    lists: &ListAssignment,
) -> Result<ComponentReport, SolveError> {
    let mut max_degree = 0;
    let mut short_vertex = None;
    let mut shortest: Option<(Vertex, usize)> = None;
    for &v in members {
        let degree = g.degree(v).expect("component member");
        let size = lists.get(v).ok_or(SolveError::MissingList(v))?.len();
        max_degree = max_degree.max(degree);
        if short_vertex.is_none() && size < degree + 1 {
            short_vertex = Some(v);
        }
        if shortest.is_none_or(|(_, s)| size < s) {
            shortest = Some((v, size));
        }
    }
    let verdict = match short_vertex {
        None => Ok(Condition::DegreePlusOne),
        Some(short_vertex) => {
            let (vertex, size) = shortest.expect("non-empty component");
            let failure = if max_degree < 3 {
                Some(BrooksFailure::DegreeBelowThree { max_degree })
            } else if size < max_degree {
                Some(BrooksFailure::ShortList { vertex, size, max_degree })
            } else if members.len() == max_degree + 1 && g.is_complete(members).expect("members") {
                Some(BrooksFailure::CompleteGraph { max_degree })
            } else {
                None
            };
            match failure {
                None => Ok(Condition::Brooks),
                Some(failure) => Err(ComponentViolation {
                    component: members[0],
                    short_vertex,
                    failure,
                }),
            }
        }
    };
    Ok(ComponentReport {
        component: members[0],
        size: members.len(),
        max_degree,
        verdict,
    })
}

/// Checks, per component, the degree-plus-one condition or the Brooks
/// condition.
pub fn check_hypotheses(g: &Graph, lists: &ListAssignment) -> Result<HypothesisReport, SolveError> {
    let components = g
        .connected_components()
        .iter()
        .map(|members| assess_component(g, members, lists))
        .collect::<Result<_, _>>()?;
    Ok(HypothesisReport { components })
}

/// The two reduced graphs built from a hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchPair {
    pub f_graph: Graph,
    pub h_graph: Graph,
    pub cycle: Hole,
    pub f_retained: [Vertex; 3],
    pub h_retained: [Vertex; 3],
    pub f_added_edge: (Vertex, Vertex),
    pub h_added_edge: (Vertex, Vertex),
}

pub fn build_branch_pair(g: &Graph, c: &Hole) -> Result<BranchPair, SolveError> {
    Hole::new(g, c.vertices().to_vec()).map_err(SolveError::InvalidHole)?;
    let x = c.vertices();
    let f_added_edge = (x[0], x[2]);
    let h_added_edge = (x[1], x[3]);
    let f_graph = g
        .surgery(&x[3..], &[f_added_edge])
        .map_err(InvariantBreach::Graph)?;
    let h_delete: Vec<Vertex> = x[4..].iter().copied().chain([x[0]]).collect();
    let h_graph = g
        .surgery(&h_delete, &[h_added_edge])
        .map_err(InvariantBreach::Graph)?;
    debug_assert!(f_graph.max_degree() <= g.max_degree());
    debug_assert!(h_graph.max_degree() <= g.max_degree());
    Ok(BranchPair {
        f_graph,
        h_graph,
        cycle: c.clone(),
        f_retained: [x[0], x[1], x[2]],
        h_retained: [x[1], x[2], x[3]],
        f_added_edge,
        h_added_edge,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    F,
    H,
}

#[derive(Debug, Clone, Copy)]
pub struct ChosenBranch<'a> {
    pub branch: Branch,
    pub graph: &'a Graph,
    pub retained: [Vertex; 3],
}

/// True if some component of `g` is a complete graph on `delta + 1` vertices.
pub fn contains_complete_component(g: &Graph, delta: usize) -> bool {
    g.connected_components().iter().any(|members| {
        members.len() == delta + 1
            && members.iter().all(|&v| g.degree(v).expect("member") == delta)
            && g.is_complete(members).expect("members")
    })
}

/// Prefers F; falls back to H when F contains `K_{delta+1}`.
pub fn select_branch(pair: &BranchPair, delta: usize) -> Result<ChosenBranch<'_>, InvariantBreach> {
    if !contains_complete_component(&pair.f_graph, delta) {
        Ok(ChosenBranch {
            branch: Branch::F,
            graph: &pair.f_graph,
            retained: pair.f_retained,
        })
    } else if !contains_complete_component(&pair.h_graph, delta) {
        Ok(ChosenBranch {
            branch: Branch::H,
            graph: &pair.h_graph,
            retained: pair.h_retained,
        })
    } else {
        Err(InvariantBreach::BothBranchesBlocked)
    }
}

/// Lists of the cycle vertices after removing colors of exterior neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualLists {
    star: BTreeMap<Vertex, BTreeSet<Color>>,
}

impl ResidualLists {
    pub fn get(&self, v: Vertex) -> Option<&BTreeSet<Color>> {
        self.star.get(&v)
    }
}

impl FromIterator<(Vertex, BTreeSet<Color>)> for ResidualLists {
    fn from_iter<T: IntoIterator<Item = (Vertex, BTreeSet<Color>)>>(iter: T) -> Self {
        Self {
            star: iter.into_iter().collect(),
        }
    }
}

/// Neighbors of each cycle vertex that lie off the cycle.
fn exterior_neighbors(g: &Graph, c: &Hole) -> Vec<Vec<Vertex>> {
    let on_cycle: BTreeSet<Vertex> = c.vertices().iter().copied().collect();
    c.vertices()
        .iter()
        .map(|&x| {
            g.neighbors(x)
                .expect("cycle vertex")
                .filter(|u| !on_cycle.contains(u))
                .collect()
        })
        .collect()
}

fn residual_from_exterior(
    c: &Hole,
    exterior: &[Vec<Vertex>],
    lists: &ListAssignment,
    f: &Coloring,
) -> Result<ResidualLists, SolveError> {
    let mut star = BTreeMap::new();
    for (&x, outside) in c.vertices().iter().zip(exterior) {
        let mut remaining = lists.get(x).ok_or(SolveError::MissingList(x))?.clone();
        for &u in outside {
            let color = f.get(u).ok_or(InvariantBreach::UncoloredExterior(u))?;
            remaining.remove(&color);
        }
        if remaining.len() < 2 {
            return Err(InvariantBreach::ResidualTooSmall {
                vertex: x,
                size: remaining.len(),
            }
            .into());
        }
        star.insert(x, remaining);
    }
    Ok(ResidualLists { star })
}

/// `L*(x_i) = L(x_i) - { f(u) : u adjacent to x_i, u off the cycle }`.
///
/// Colors `f` assigns to cycle vertices are ignored.
pub fn residual_lists(
    g: &Graph,
    c: &Hole,
    lists: &ListAssignment,
    f: &Coloring,
) -> Result<ResidualLists, SolveError> {
    Hole::new(g, c.vertices().to_vec()).map_err(SolveError::InvalidHole)?;
    residual_from_exterior(c, &exterior_neighbors(g, c), lists, f)
}

/// Colors the cycle from its residual lists.
///
/// Finds the first ordered adjacent pair `(a, b)` and color `c` in `L*(a)`
/// with `|L*(b) - {c}| >= 2`; pairs are scanned by position of `a` along the
/// stored cycle, forward neighbor before backward neighbor, colors
/// ascending. The cycle is then read starting `a, b, ...`, `a` gets `c`, the
/// remaining vertices are colored walking backwards from the far end, each
/// with its smallest color differing from the vertex after it, and `b` last
/// with a color avoiding both of its cycle neighbors.
pub fn extend_around_cycle(c: &Hole, star: &ResidualLists) -> Result<Coloring, InvariantBreach> {
    let x = c.vertices();
    let k = x.len();
    let list = |v: Vertex| -> Result<&BTreeSet<Color>, InvariantBreach> {
        match star.get(v) {
            Some(l) if l.len() >= 2 => Ok(l),
            other => Err(InvariantBreach::ResidualTooSmall {
                vertex: v,
                size: other.map_or(0, BTreeSet::len),
            }),
        }
    };
    for &v in x {
        list(v)?;
    }

    let mut start = None;
    'scan: for pos in 0..k {
        for step in [1, k - 1] {
            let a = x[pos];
            let b = x[(pos + step) % k];
            let lb = list(b)?;
            for &color in list(a)? {
                if lb.len() - usize::from(lb.contains(&color)) >= 2 {
                    start = Some((pos, step, color));
                    break 'scan;
                }
            }
        }
    }
    let (pos, step, c1) = start.ok_or(InvariantBreach::NoStartPair)?;
    let seq: Vec<Vertex> = (0..k).map(|j| x[(pos + j * step) % k]).collect();

    let mut colors = vec![c1; k];
    let mut after = c1;
    for i in (2..k).rev() {
        let ci = list(seq[i])?
            .iter()
            .copied()
            .find(|&col| col != after)
            .expect("list has two colors");
        colors[i] = ci;
        after = ci;
    }
    colors[1] = list(seq[1])?
        .iter()
        .copied()
        .find(|&col| col != c1 && col != colors[2])
        .expect("start pair leaves two colors");
    Ok(seq.into_iter().zip(colors).collect())
}

/// Counters describing one solver run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Components colored in ascending id order (degree-plus-one case).
    pub degree_greedy: usize,
    /// Chordal components colored along an elimination order.
    pub peo_greedy: usize,
    /// Holes branched on.
    pub holes: usize,
    pub f_branches: usize,
    pub h_branches: usize,
    /// Deepest nesting of branch reductions.
    pub max_depth: usize,
}

enum Task {
    Solve { graph: Graph, depth: usize },
    Extend { hole: Hole, exterior: Vec<Vec<Vertex>> },
}

/// Colors every vertex of `g` from its list.
pub fn brooks_list_color(g: &Graph, lists: &ListAssignment) -> Result<Coloring, SolveError> {
    brooks_list_color_with_stats(g, lists).map(|(coloring, _)| coloring)
}

pub fn brooks_list_color_with_stats(
    g: &Graph,
    lists: &ListAssignment,
) -> Result<(Coloring, SolveStats), SolveError> {
    let report = check_hypotheses(g, lists)?;
    if !report.is_ok() {
        return Err(SolveError::HypothesisViolation(report));
    }
    let mut coloring = Coloring::new();
    let mut stats = SolveStats::default();
    let mut tasks = vec![Task::Solve {
        graph: g.clone(),
        depth: 0,
    }];
    while let Some(task) = tasks.pop() {
        match task {
            Task::Solve { graph, depth } => {
                stats.max_depth = stats.max_depth.max(depth);
                let components = graph.connected_components();
                if components.len() == 1 {
                    solve_component(graph, depth, lists, &mut coloring, &mut tasks, &mut stats)?;
                } else {
                    for members in components.iter() {
                        let sub = graph.induced(members).map_err(InvariantBreach::Graph)?;
                        solve_component(sub, depth, lists, &mut coloring, &mut tasks, &mut stats)?;
                    }
                }
            }
            Task::Extend { hole, exterior } => {
                for &v in hole.vertices() {
                    coloring.remove(v);
                }
                let star = residual_from_exterior(&hole, &exterior, lists, &coloring)?;
                coloring.extend_from(&extend_around_cycle(&hole, &star)?);
            }
        }
    }
    verify_coloring(g, lists, &coloring).map_err(InvariantBreach::Unverified)?;
    Ok((coloring, stats))
}

fn solve_component(
    gc: Graph,
    depth: usize,
    lists: &ListAssignment,
    coloring: &mut Coloring,
    tasks: &mut Vec<Task>,
    stats: &mut SolveStats,
) -> Result<(), SolveError> {
    debug_assert!(
        check_hypotheses(&gc, lists).is_ok_and(|r| r.is_ok()),
        "reduced component violates the hypotheses"
    );
    let chordal_err = |e: ChordalError| match e {
        ChordalError::MissingList(v) => SolveError::MissingList(v),
        other => InvariantBreach::Chordal(other).into(),
    };
    let degree_plus_one = gc.vertices().iter().all(|&v| {
        let size = lists.get(v).map_or(0, BTreeSet::len);
        size > gc.degree(v).expect("own vertex")
    });
    if degree_plus_one {
        stats.degree_greedy += 1;
        let colors = greedy_color_along(&gc, gc.vertices(), lists).map_err(chordal_err)?;
        coloring.extend_from(&colors);
        return Ok(());
    }
    match chordality_certificate(&gc).map_err(chordal_err)? {
        ChordalityCertificate::Peo(peo) => {
            stats.peo_greedy += 1;
            let colors = greedy_color_along(&gc, peo.order(), lists).map_err(chordal_err)?;
            coloring.extend_from(&colors);
        }
        ChordalityCertificate::Hole(hole) => {
            let delta = gc.max_degree();
            let pair = build_branch_pair(&gc, &hole)?;
            let branch = select_branch(&pair, delta)?.branch;
            debug_assert!(pair.f_graph.vertex_count() < gc.vertex_count());
            debug_assert!(pair.h_graph.vertex_count() < gc.vertex_count());
            stats.holes += 1;
            let exterior = exterior_neighbors(&gc, &hole);
            let BranchPair { f_graph, h_graph, .. } = pair;
            let graph = match branch {
                Branch::F => {
                    stats.f_branches += 1;
                    f_graph
                }
                Branch::H => {
                    stats.h_branches += 1;
                    h_graph
                }
            };
            tasks.push(Task::Extend { hole, exterior });
            tasks.push(Task::Solve {
                graph,
                depth: depth + 1,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    /// Cycle 1-2-3-4-1 plus vertex 5 adjacent to 1, 2 and 3.
    fn house_with_apex() -> Graph {
        Graph::with_vertex_count(5, [(1, 2), (2, 3), (3, 4), (4, 1), (5, 1), (5, 2), (5, 3)]).unwrap()
    }

    fn hole(g: &Graph, cycle: &[Vertex]) -> Hole {
        Hole::new(g, cycle.to_vec()).unwrap()
    }

    fn residual(lists: &[&[Color]]) -> ResidualLists {
        lists
            .iter()
            .enumerate()
            .map(|(i, l)| (i as Vertex + 1, l.iter().copied().collect()))
            .collect()
    }

    #[test]
    fn hypotheses_examples() {
        let p = petersen();
        let report = check_hypotheses(&p, &ListAssignment::uniform(&p, 3)).unwrap();
        assert!(report.is_ok());
        assert_eq!(report.components[0].verdict, Ok(Condition::Brooks));

        let k4 = complete(4);
        let report = check_hypotheses(&k4, &ListAssignment::uniform(&k4, 3)).unwrap();
        assert!(!report.is_ok());
        let violation = report.violations().next().unwrap();
        assert_eq!(violation.failure, BrooksFailure::CompleteGraph { max_degree: 3 });
        assert_eq!(violation.short_vertex, 1);

        let c5 = cycle(5);
        let report = check_hypotheses(&c5, &ListAssignment::uniform(&c5, 3)).unwrap();
        assert_eq!(report.components[0].verdict, Ok(Condition::DegreePlusOne));
    }

    #[test]
    fn hypotheses_failures() {
        let c5 = cycle(5);
        let report = check_hypotheses(&c5, &ListAssignment::uniform(&c5, 2)).unwrap();
        assert_eq!(
            report.violations().next().unwrap().failure,
            BrooksFailure::DegreeBelowThree { max_degree: 2 }
        );
        let p = petersen();
        let mut lists = ListAssignment::uniform(&p, 3);
        lists.set(7, [1, 2]);
        let report = check_hypotheses(&p, &lists).unwrap();
        assert_eq!(
            report.violations().next().unwrap().failure,
            BrooksFailure::ShortList { vertex: 7, size: 2, max_degree: 3 }
        );
        assert_eq!(
            check_hypotheses(&p, &ListAssignment::new()),
            Err(SolveError::MissingList(1))
        );
    }

    #[test]
    fn hypotheses_are_per_component() {
        // Petersen (Δ=3, fine) next to a K_4 (fails).
        let g = disjoint_union(&petersen(), &complete(4), 10);
        let report = check_hypotheses(&g, &ListAssignment::uniform(&g, 3)).unwrap();
        assert_eq!(report.components.len(), 2);
        assert!(report.components[0].verdict.is_ok());
        assert_eq!(report.violations().next().unwrap().component, 11);
    }

    #[test]
    fn branch_pair_examples() {
        let c4 = cycle(4);
        let pair = build_branch_pair(&c4, &hole(&c4, &[1, 2, 3, 4])).unwrap();
        assert_eq!(pair.f_graph, complete(3));
        assert_eq!(pair.h_graph, Graph::new([2, 3, 4], [(2, 3), (3, 4), (2, 4)]).unwrap());
        assert_eq!(pair.f_added_edge, (1, 3));
        assert_eq!(pair.h_added_edge, (2, 4));

        let c5 = cycle(5);
        let pair = build_branch_pair(&c5, &hole(&c5, &[1, 2, 3, 4, 5])).unwrap();
        assert_eq!(pair.f_graph, complete(3));
        assert_eq!(pair.h_graph, Graph::new([2, 3, 4], [(2, 3), (3, 4), (2, 4)]).unwrap());
        assert_eq!(pair.f_retained, [1, 2, 3]);
        assert_eq!(pair.h_retained, [2, 3, 4]);
    }

    #[test]
    fn branch_pair_with_apex() {
        let g = house_with_apex();
        let pair = build_branch_pair(&g, &hole(&g, &[1, 2, 3, 4])).unwrap();
        assert_eq!(pair.f_graph.vertices(), &[1, 2, 3, 5]);
        assert!(pair.f_graph.is_complete(&[1, 2, 3, 5]).unwrap());
        assert_eq!(
            pair.h_graph,
            Graph::new([2, 3, 4, 5], [(2, 3), (3, 4), (2, 4), (5, 2), (5, 3)]).unwrap()
        );
        assert!(!pair.h_graph.is_complete(&[2, 3, 4, 5]).unwrap());
    }

    #[test]
    fn branch_pair_rejects_bad_hole() {
        let k4 = complete(4);
        let fake = Hole::new_unchecked(vec![1, 2, 3, 4]);
        assert!(matches!(build_branch_pair(&k4, &fake), Err(SolveError::InvalidHole(_))));
    }

    #[test]
    fn select_branch_examples() {
        let g = house_with_apex();
        let pair = build_branch_pair(&g, &hole(&g, &[1, 2, 3, 4])).unwrap();
        let chosen = select_branch(&pair, 3).unwrap();
        assert_eq!(chosen.branch, Branch::H);
        assert_eq!(chosen.retained, [2, 3, 4]);

        let c5 = cycle(5);
        let pair = build_branch_pair(&c5, &hole(&c5, &[1, 2, 3, 4, 5])).unwrap();
        assert_eq!(select_branch(&pair, 3).unwrap().branch, Branch::F);
    }

    #[test]
    fn select_branch_both_blocked() {
        // Triangles are K_3: with delta = 2 both branches of C_4 are blocked.
        let c4 = cycle(4);
        let pair = build_branch_pair(&c4, &hole(&c4, &[1, 2, 3, 4])).unwrap();
        assert_eq!(select_branch(&pair, 2).unwrap_err(), InvariantBreach::BothBranchesBlocked);
    }

    #[test]
    fn residual_examples() {
        let c4 = cycle(4);
        let lists = ListAssignment::uniform(&c4, 3);
        let star = residual_lists(&c4, &hole(&c4, &[1, 2, 3, 4]), &lists, &Coloring::new()).unwrap();
        for v in 1..=4 {
            assert_eq!(star.get(v), lists.get(v));
        }

        let g = house_with_apex();
        let lists = ListAssignment::uniform(&g, 3);
        let f: Coloring = [(5, 1)].into_iter().collect();
        let star = residual_lists(&g, &hole(&g, &[1, 2, 3, 4]), &lists, &f).unwrap();
        let two_three: BTreeSet<Color> = [2, 3].into();
        assert_eq!(star.get(1), Some(&two_three));
        assert_eq!(star.get(2), Some(&two_three));
        assert_eq!(star.get(3), Some(&two_three));
        assert_eq!(star.get(4), Some(&[1, 2, 3].into()));

        // Exterior colors outside the list change nothing.
        let f: Coloring = [(5, 9)].into_iter().collect();
        let star = residual_lists(&g, &hole(&g, &[1, 2, 3, 4]), &lists, &f).unwrap();
        assert_eq!(star.get(1), lists.get(1));
    }

    #[test]
    fn residual_errors() {
        let g = house_with_apex();
        let c = hole(&g, &[1, 2, 3, 4]);
        let lists = ListAssignment::uniform(&g, 2);
        let f: Coloring = [(5, 1)].into_iter().collect();
        assert_eq!(
            residual_lists(&g, &c, &lists, &f),
            Err(InvariantBreach::ResidualTooSmall { vertex: 1, size: 1 }.into())
        );
        assert_eq!(
            residual_lists(&g, &c, &ListAssignment::uniform(&g, 3), &Coloring::new()),
            Err(InvariantBreach::UncoloredExterior(5).into())
        );
    }

    #[test]
    fn extend_examples() {
        let c4 = cycle(4);
        let h = hole(&c4, &[1, 2, 3, 4]);
        let out = extend_around_cycle(&h, &residual(&[&[1, 2], &[2, 3], &[1, 2], &[1, 2]])).unwrap();
        assert_eq!(out.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 2), (3, 1), (4, 2)]);
        let out = extend_around_cycle(&h, &residual(&[&[1, 2, 3][..]; 4])).unwrap();
        assert_eq!(out.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 2), (3, 1), (4, 2)]);

        let c5 = cycle(5);
        let h5 = hole(&c5, &[1, 2, 3, 4, 5]);
        let out = extend_around_cycle(&h5, &residual(&[&[1, 2, 3][..]; 5])).unwrap();
        // x_1=1, x_5=2, x_4=1, x_3=2, x_2 avoids {1, 2}.
        assert_eq!(out.iter().collect::<Vec<_>>(), vec![(1, 1), (2, 3), (3, 2), (4, 1), (5, 2)]);
    }

    #[test]
    fn extend_relabels_cycle() {
        // Only x_3 has a third color, so the first usable pair is (x_2, x_3).
        let c4 = cycle(4);
        let h = hole(&c4, &[1, 2, 3, 4]);
        let out = extend_around_cycle(&h, &residual(&[&[1, 2], &[1, 2], &[1, 2, 3], &[1, 2]])).unwrap();
        // Sequence 2,3,4,1: x_2=1, x_1=2, x_4=1, x_3 avoids {1}.
        assert_eq!(out.iter().collect::<Vec<_>>(), vec![(1, 2), (2, 1), (3, 2), (4, 1)]);
    }

    #[test]
    fn extend_errors() {
        let c4 = cycle(4);
        let h = hole(&c4, &[1, 2, 3, 4]);
        assert_eq!(
            extend_around_cycle(&h, &residual(&[&[1, 2][..]; 4])),
            Err(InvariantBreach::NoStartPair)
        );
        assert_eq!(
            extend_around_cycle(&h, &residual(&[&[1, 2], &[1], &[1, 2], &[1, 2]])),
            Err(InvariantBreach::ResidualTooSmall { vertex: 2, size: 1 })
        );
    }

    #[test]
    fn color_examples() {
        for g in [petersen(), complete_bipartite(3, 3)] {
            let lists = ListAssignment::uniform(&g, 3);
            let phi = brooks_list_color(&g, &lists).unwrap();
            assert_eq!(verify_coloring(&g, &lists, &phi), Ok(()));
        }
        let k4 = complete(4);
        assert!(matches!(
            brooks_list_color(&k4, &ListAssignment::uniform(&k4, 3)),
            Err(SolveError::HypothesisViolation(_))
        ));
    }

    #[test]
    fn petersen_takes_the_hole_branch() {
        let p = petersen();
        let (phi, stats) = brooks_list_color_with_stats(&p, &ListAssignment::uniform(&p, 3)).unwrap();
        assert!(stats.holes >= 1);
        assert_eq!(phi.len(), 10);
    }

    #[test]
    fn apex_graph_colors_through_h() {
        let g = house_with_apex();
        let lists = ListAssignment::uniform(&g, 3);
        let (phi, stats) = brooks_list_color_with_stats(&g, &lists).unwrap();
        assert_eq!(verify_coloring(&g, &lists, &phi), Ok(()));
        assert_eq!(stats.h_branches, 1);
    }

    #[test]
    fn colors_empty_graph() {
        let g = Graph::default();
        assert_eq!(brooks_list_color(&g, &ListAssignment::new()), Ok(Coloring::new()));
    }
}
