use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which construction produced a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Varietal,
    Hypercube,
    Circulant,
    Generic,
}

impl Family {
    /// Families whose vertex ids are `n`-bit labels.
    pub fn is_labeled(self) -> bool {
        matches!(self, Family::Varietal | Family::Hypercube)
    }
}

/// An immutable simple undirected graph in compressed adjacency form.
///
/// Vertices are `0..vertex_count()`. For the labeled families the vertex id
/// is the packed label value. Neighbor lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    family: Family,
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an undirected edge list. Duplicate edges are
    /// merged; self-loops and out-of-range endpoints are rejected.
    ///
    /// `n` is the dimension for labeled families and the vertex count
    /// otherwise.
    pub fn from_edges(
        family: Family,
        n: u32,
        vertex_count: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        if vertex_count > u32::MAX as usize {
            return Err(Error::Range(format!(
                "{vertex_count} vertices do not fit u32 ids"
            )));
        }
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Contract(format!("self-loop at vertex {u}")));
            }
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return Err(Error::Range(format!(
                    "edge ({u}, {v}) outside 0..{vertex_count}"
                )));
            }
            pairs.push((u, v));
            pairs.push((v, u));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0usize; vertex_count + 1];
        for &(u, _) in &pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..vertex_count {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Self {
            n,
            family,
            offsets,
            targets,
        })
    }

    /// Dimension (labeled families) or vertex count (others).
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        (u as usize) < self.vertex_count() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Each undirected edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.vertex_count() as u32).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.vertex_count() as u32)
            .all(|v| self.degree(v) == d)
            .then_some(d)
    }

    /// Width of the binary rendering of vertex ids: the dimension for
    /// labeled families, otherwise enough bits for the largest id.
    pub fn label_width(&self) -> u32 {
        if self.family.is_labeled() {
            self.n
        } else {
            let max = self.vertex_count().saturating_sub(1) as u64;
            (u64::BITS - max.leading_zeros()).max(1)
        }
    }

    pub fn is_connected(&self) -> bool {
        let count = self.vertex_count();
        if count == 0 {
            return true;
        }
        let mut seen = vec![false; count];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == count
    }

    /// True if both graphs have the same vertex set and edge set.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.offsets == other.offsets && self.targets == other.targets
    }
}
