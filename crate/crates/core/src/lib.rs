//! Certifying list coloring for graphs that satisfy the list version of
//! Brooks' theorem.
//!
//! * [`graph`]: immutable simple graphs with stable ids.
//! * [`chordal`]: chordality certificates (elimination orders or holes) and
//!   greedy list coloring along an order.
//! * [`brooks`]: the hole-based reduction that colors every component
//!   meeting the hypotheses from lists of size `Δ`.
//! * [`oracle`]: coloring validation and exhaustive search.
//! * [`format`], [`generate`], [`cli`]: text formats, seeded generators and
//!   the `brooks-color` command.

pub mod brooks;
pub mod chordal;
pub mod cli;
pub mod coloring;
pub mod format;
pub mod generate;
pub mod graph;
pub mod oracle;

pub use brooks::{brooks_list_color, check_hypotheses, HypothesisReport, SolveError};
pub use chordal::{chordality_certificate, ChordalityCertificate, EliminationOrder, Hole};
pub use coloring::{Color, Coloring, ListAssignment};
pub use graph::{Graph, GraphError, Vertex};
