//! Seeded instance generators.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a configuration reproduces the same instance on every
//! platform.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::{Color, ListAssignment};
use crate::format::Instance;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("infeasible generator configuration: {0}")]
    InfeasibleConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// Random spanning tree plus random extra edges, all under the degree cap.
    TreePlusEdges,
    /// Each new vertex attaches to a random clique of the graph so far.
    ChordalSimplicial,
    /// `G(n, p)` with edges dropped when they would break the degree cap.
    GnpCapped,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::TreePlusEdges => "tree-plus-edges",
            Model::ChordalSimplicial => "chordal-simplicial",
            Model::GnpCapped => "gnp-capped",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tree-plus-edges" => Ok(Model::TreePlusEdges),
            "chordal-simplicial" => Ok(Model::ChordalSimplicial),
            "gnp-capped" => Ok(Model::GnpCapped),
            other => Err(format!("unknown model '{other}'")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n: u32,
    /// Maximum degree cap.
    pub delta: usize,
    pub model: Model,
    pub seed: u64,
    /// Lists are drawn from colors `1..=palette`.
    pub palette: u32,
    pub list_size: usize,
    /// Edge probability for [`Model::GnpCapped`].
    pub edge_probability: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        Self {
            n: 10,
            delta: 3,
            model: Model::TreePlusEdges,
            seed: 0,
            palette: 6,
            list_size: 3,
            edge_probability: 0.5,
        }
    }
}

struct Builder {
    degree: Vec<usize>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl Builder {
    fn new(n: u32) -> Self {
        Self {
            degree: vec![0; n as usize + 1],
            edges: BTreeSet::new(),
        }
    }

    fn add(&mut self, u: Vertex, v: Vertex) -> bool {
        if u == v || !self.edges.insert((u.min(v), u.max(v))) {
            return false;
        }
        self.degree[u as usize] += 1;
        self.degree[v as usize] += 1;
        true
    }

    fn has(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn finish(self, n: u32) -> Graph {
        Graph::with_vertex_count(n, self.edges).expect("generated edges are valid")
    }
}

fn tree_plus_edges(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Graph {
    let n = config.n;
    let cap = config.delta;
    let mut b = Builder::new(n);
    let mut open: Vec<Vertex> = if n > 0 { vec![1] } else { Vec::new() };
    for v in 2..=n {
        let slot = rng.random_range(0..open.len());
        let parent = open[slot];
        b.add(parent, v);
        if b.degree[parent as usize] >= cap {
            open.swap_remove(slot);
        }
        if b.degree[v as usize] < cap {
            open.push(v);
        }
    }
    for _ in 0..(n as usize * cap) {
        let u = rng.random_range(1..=n);
        let v = rng.random_range(1..=n);
        if u != v && !b.has(u, v) && b.degree[u as usize] < cap && b.degree[v as usize] < cap {
            b.add(u, v);
        }
    }
    b.finish(n)
}

fn chordal_simplicial(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Graph {
    let n = config.n;
    let cap = config.delta;
    let mut b = Builder::new(n);
    // The clique each vertex was attached to; together with the vertex
    // itself it is again a clique.
    let mut attached: Vec<Vec<Vertex>> = vec![Vec::new(); n as usize + 1];
    for v in 2..=n {
        let open: Vec<Vertex> = (1..v).filter(|&u| b.degree[u as usize] < cap).collect();
        if open.is_empty() {
            continue;
        }
        let anchor = open[rng.random_range(0..open.len())];
        let mut clique = vec![anchor];
        for &u in &attached[anchor as usize] {
            if b.degree[u as usize] < cap && rng.random_bool(0.5) {
                clique.push(u);
            }
        }
        clique.sort_unstable();
        for &u in &clique {
            b.add(u, v);
        }
        attached[v as usize] = clique;
    }
    b.finish(n)
}

fn gnp_capped(config: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Graph {
    let n = config.n;
    let cap = config.delta;
    let mut b = Builder::new(n);
    for u in 1..=n {
        for v in u + 1..=n {
            let pick = rng.random_bool(config.edge_probability);
            if pick && b.degree[u as usize] < cap && b.degree[v as usize] < cap {
                b.add(u, v);
            }
        }
    }
    b.finish(n)
}

/// Uniform random `size`-subsets of `1..=palette`, one per vertex in
/// ascending id order.
pub fn random_lists<R: Rng>(g: &Graph, palette: u32, size: usize, rng: &mut R) -> ListAssignment {
    g.vertices()
        .iter()
        .map(|&v| {
            let colors = index::sample(rng, palette as usize, size)
                .into_iter()
                .map(|i| i as Color + 1)
                .collect();
            (v, colors)
        })
        .collect()
}

fn validate(config: &GeneratorConfig) -> Result<(), GenerateError> {
    let fail = |msg: String| Err(GenerateError::InfeasibleConfig(msg));
    if config.n == 0 {
        return fail("n must be at least 1".into());
    }
    if config.list_size > config.palette as usize {
        return fail(format!(
            "list size {} exceeds palette {}",
            config.list_size, config.palette
        ));
    }
    if !(0.0..=1.0).contains(&config.edge_probability) {
        return fail(format!("edge probability {} outside [0, 1]", config.edge_probability));
    }
    if config.model == Model::TreePlusEdges {
        let needed = match config.n {
            1 => 0,
            2 => 1,
            _ => 2,
        };
        if config.delta < needed {
            return fail(format!(
                "a spanning tree on {} vertices needs degree cap at least {needed}",
                config.n
            ));
        }
    }
    Ok(())
}

pub fn generate(config: &GeneratorConfig) -> Result<Instance, GenerateError> {
    validate(config)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let graph = match config.model {
        Model::TreePlusEdges => tree_plus_edges(config, &mut rng),
        Model::ChordalSimplicial => chordal_simplicial(config, &mut rng),
        Model::GnpCapped => gnp_capped(config, &mut rng),
    };
    let lists = random_lists(&graph, config.palette, config.list_size, &mut rng);
    Ok(Instance {
        graph,
        lists: Some(lists),
    })
}

/// Comment lines recording the configuration.
pub fn describe(config: &GeneratorConfig) -> Vec<String> {
    let mut line = format!(
        "generated model={} n={} delta={} seed={} palette={} list-size={}",
        config.model, config.n, config.delta, config.seed, config.palette, config.list_size
    );
    if config.model == Model::GnpCapped {
        line.push_str(&format!(" p={}", config.edge_probability));
    }
    vec![line]
}
