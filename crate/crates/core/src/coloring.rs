//! List assignments and colorings.

use std::collections::{btree_map, BTreeMap, BTreeSet};

use crate::graph::{Graph, Vertex};

pub type Color = i64;

/// The allowed colors of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListAssignment {
    lists: BTreeMap<Vertex, BTreeSet<Color>>,
}

impl ListAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{1, ..., k}` on every vertex of `g`.
    pub fn uniform(g: &Graph, k: usize) -> Self {
        let palette: BTreeSet<Color> = (1..=k as Color).collect();
        Self {
            lists: g.vertices().iter().map(|&v| (v, palette.clone())).collect(),
        }
    }

    /// Replaces the list of `v`, returning the previous one.
    pub fn set<I>(&mut self, v: Vertex, colors: I) -> Option<BTreeSet<Color>>
    where
        I: IntoIterator<Item = Color>,
    {
        self.lists.insert(v, colors.into_iter().collect())
    }

    pub fn get(&self, v: Vertex) -> Option<&BTreeSet<Color>> {
        self.lists.get(&v)
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Vertex, BTreeSet<Color>> {
        self.lists.iter()
    }

    /// Lists of the given vertices only; vertices without a list are skipped.
    pub fn restrict(&self, vertices: &[Vertex]) -> Self {
        Self {
            lists: vertices
                .iter()
                .filter_map(|v| self.lists.get(v).map(|l| (*v, l.clone())))
                .collect(),
        }
    }

    /// First vertex of `g` (ascending) without a list.
    pub fn first_missing(&self, g: &Graph) -> Option<Vertex> {
        g.vertices().iter().copied().find(|v| !self.lists.contains_key(v))
    }
}

impl FromIterator<(Vertex, BTreeSet<Color>)> for ListAssignment {
    fn from_iter<T: IntoIterator<Item = (Vertex, BTreeSet<Color>)>>(iter: T) -> Self {
        Self {
            lists: iter.into_iter().collect(),
        }
    }
}

/// A color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Coloring {
    colors: BTreeMap<Vertex, Color>,
}

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.colors.get(&v).copied()
    }

    pub fn insert(&mut self, v: Vertex, color: Color) -> Option<Color> {
        self.colors.insert(v, color)
    }

    pub fn remove(&mut self, v: Vertex) -> Option<Color> {
        self.colors.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// `(vertex, color)` pairs in ascending vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.colors.iter().map(|(&v, &c)| (v, c))
    }

    pub fn extend_from(&mut self, other: &Coloring) {
        self.colors.extend(other.iter());
    }

    /// Number of distinct colors used.
    pub fn distinct_colors(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }
}

impl FromIterator<(Vertex, Color)> for Coloring {
    fn from_iter<T: IntoIterator<Item = (Vertex, Color)>>(iter: T) -> Self {
        Self {
            colors: iter.into_iter().collect(),
        }
    }
}
