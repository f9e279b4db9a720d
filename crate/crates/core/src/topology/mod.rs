//! Vertex labels, the closed-form adjacency oracles of the varietal
//! hypercube `VQ_n`, and explicit graph builders for `VQ_n`, the ordinary
//! hypercube `Q_n` and circulant graphs.
//!
//! `VQ_n` joins two copies of `VQ_{n-1}` (prefix bit 0 and prefix bit 1).
//! At a dimension `d` that is not a multiple of 3 every vertex `0X` is joined
//! to `1X`. At `d = 3k` the two bits just below the top are related through
//! [`CROSSING_RULE`] instead of equality, which yields the crossing edges.

mod export;
mod graph;
mod label;

use serde::{Deserialize, Serialize};

pub use export::{to_dot, to_edge_list};
pub use graph::{Family, Graph};
pub use label::{low_mask, VertexLabel, MAX_LABEL_DIM};

pub(crate) use label::fmt_bits;

use crate::error::{Error, Result};

/// Largest `n` materialized as an explicit graph unless configured otherwise.
pub const DEFAULT_SIZE_CAP: u32 = 20;

/// Hard ceiling for any configured size cap (vertex ids are `u32`).
pub const MAX_SIZE_CAP: u32 = 30;

/// Allowed `(x_{d-1} x_{d-2}, y_{d-1} y_{d-2})` pairs for a `d`-transversal
/// edge at `d = 3k`, as 2-bit patterns.
pub const CROSSING_RULE: [(u8, u8); 4] = [(0b00, 0b00), (0b01, 0b01), (0b10, 0b11), (0b11, 0b10)];

/// Whether dimension `d` uses the crossing rule.
#[inline]
pub const fn is_crossing_dim(d: u32) -> bool {
    d >= 3 && d.is_multiple_of(3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Normal,
    Crossing,
}

/// The dimension of a transversal edge and whether it is normal or crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeClass {
    pub dimension: u32,
    pub kind: EdgeKind,
}

#[inline]
pub(crate) fn neighbor_raw(x: u64, d: u32) -> u64 {
    let mut y = x ^ (1u64 << (d - 1));
    if is_crossing_dim(d) && (x >> (d - 2)) & 1 == 1 {
        y ^= 1u64 << (d - 3);
    }
    y
}

/// The unique neighbor of `x` across the `d`-transversal cut.
///
/// Bit `d` is flipped; at a crossing dimension with `x_{d-1} = 1` bit `d-2`
/// is flipped as well.
pub fn dimension_neighbor(x: VertexLabel, d: u32) -> Result<VertexLabel> {
    if d == 0 || d > x.dim() {
        return Err(Error::Range(format!(
            "dimension {d} outside 1..={}",
            x.dim()
        )));
    }
    Ok(VertexLabel::from_raw(neighbor_raw(x.value(), d), x.dim()))
}

/// `[dimension_neighbor(x, d) for d in 1..=n]`.
pub fn neighbors(x: VertexLabel) -> Vec<VertexLabel> {
    (1..=x.dim())
        .map(|d| VertexLabel::from_raw(neighbor_raw(x.value(), d), x.dim()))
        .collect()
}

pub(crate) fn classify_raw(x: u64, y: u64) -> Option<EdgeClass> {
    let diff = x ^ y;
    debug_assert!(diff != 0);
    let d = u64::BITS - diff.leading_zeros();
    let top = 1u64 << (d - 1);
    if diff == top {
        // Equal below d: normal unless this is a crossing dimension with
        // x_{d-1} = y_{d-1} = 1, a pattern the rule excludes.
        if is_crossing_dim(d) && (x >> (d - 2)) & 1 == 1 {
            return None;
        }
        return Some(EdgeClass {
            dimension: d,
            kind: EdgeKind::Normal,
        });
    }
    if is_crossing_dim(d) && diff == top | (1u64 << (d - 3)) && (x >> (d - 2)) & 1 == 1 {
        return Some(EdgeClass {
            dimension: d,
            kind: EdgeKind::Crossing,
        });
    }
    None
}

/// Classifies the pair `{x, y}` as an edge of `VQ_n`, or `None` when the
/// vertices are not adjacent.
pub fn classify_edge(x: VertexLabel, y: VertexLabel) -> Result<Option<EdgeClass>> {
    if x.dim() != y.dim() {
        return Err(Error::Contract(format!(
            "labels of dimension {} and {} cannot form an edge",
            x.dim(),
            y.dim()
        )));
    }
    if x == y {
        return Err(Error::Contract(format!(
            "self-pair {x} is not a simple-graph edge"
        )));
    }
    Ok(classify_raw(x.value(), y.value()))
}

fn check_cap(n: u32, cap: u32) -> Result<()> {
    let cap = cap.min(MAX_SIZE_CAP);
    if n > cap {
        return Err(Error::Resource {
            what: "dimension",
            requested: u64::from(n),
            cap: u64::from(cap),
        });
    }
    Ok(())
}

/// `VQ_n` built by the literal doubling construction under the default cap.
pub fn build_recursive(n: u32) -> Result<Graph> {
    build_recursive_capped(n, DEFAULT_SIZE_CAP)
}

/// `VQ_n` built by doubling `VQ_{k-1}` for `k = 1..=n` and joining the two
/// copies with the transversal rule for level `k`.
///
/// This path never calls [`dimension_neighbor`]; it is the reference the
/// closed-form oracles are checked against.
pub fn build_recursive_capped(n: u32, cap: u32) -> Result<Graph> {
    check_cap(n, cap)?;
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(n as usize * (1usize << n) / 2);
    for k in 1..=n {
        let half = 1u32 << (k - 1);
        let lower = edges.len();
        for i in 0..lower {
            let (u, v) = edges[i];
            edges.push((u | half, v | half));
        }
        for x in 0..half {
            if is_crossing_dim(k) {
                let shift = k - 3;
                let pattern = (x >> shift) as u8;
                let rest = x & ((1u32 << shift) - 1);
                for &(from, to) in CROSSING_RULE.iter().filter(|(from, _)| *from == pattern) {
                    debug_assert_eq!(from, pattern);
                    edges.push((x, half | (u32::from(to) << shift) | rest));
                }
            } else {
                edges.push((x, half | x));
            }
        }
    }
    Graph::from_edges(Family::Varietal, n, 1usize << n, edges)
}

/// The hypercube `Q_n` under the default cap.
pub fn build_hypercube(n: u32) -> Result<Graph> {
    build_hypercube_capped(n, DEFAULT_SIZE_CAP)
}

pub fn build_hypercube_capped(n: u32, cap: u32) -> Result<Graph> {
    check_cap(n, cap)?;
    let count = 1u32 << n;
    let edges = (0..count).flat_map(move |u| {
        (0..n)
            .map(move |b| (u, u ^ (1 << b)))
            .filter(|&(u, v)| u < v)
    });
    Graph::from_edges(Family::Hypercube, n, count as usize, edges)
}

/// The circulant graph `C(Z_m, S)`: vertex `i` is joined to `i + s mod m`
/// for each `s` in `connection`.
pub fn build_circulant(m: u32, connection: &[u32]) -> Result<Graph> {
    if m == 0 {
        return Err(Error::Contract(
            "circulant needs at least one vertex".into(),
        ));
    }
    for &s in connection {
        if s == 0 || s >= m {
            return Err(Error::Contract(format!(
                "connection element {s} outside 1..{m}"
            )));
        }
        if !connection.contains(&(m - s)) {
            return Err(Error::Contract(format!(
                "connection set is not symmetric: {s} present but {} missing",
                m - s
            )));
        }
    }
    let edges: Vec<(u32, u32)> = (0..m)
        .flat_map(|i| connection.iter().map(move |&s| (i, (i + s) % m)))
        .collect();
    Graph::from_edges(Family::Circulant, m, m as usize, edges)
}
