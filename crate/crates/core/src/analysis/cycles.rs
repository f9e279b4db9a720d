use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::topology::{build_recursive, Graph, VertexLabel};

/// Default upper bound on the cycle length considered.
pub const DEFAULT_CYCLE_BOUND: u32 = 8;

/// Largest `n` for which [`refute_edge_transitivity`] profiles `VQ_n`.
pub const REFUTE_MAX_DIM: u32 = 8;

/// The two edges of `VQ_4` at `0101` that are compared by default.
const VQ4_WITNESS: [(&str, &str); 2] = [("0101", "0001"), ("0101", "1101")];

fn count_paths(g: &Graph, at: u32, target: u32, remaining: u32, on_path: &mut [bool]) -> u64 {
    if remaining == 1 {
        return u64::from(g.has_edge(at, target));
    }
    let mut total = 0;
    for &w in g.neighbors(at) {
        if w == target || on_path[w as usize] {
            continue;
        }
        on_path[w as usize] = true;
        total += count_paths(g, w, target, remaining - 1, on_path);
        on_path[w as usize] = false;
    }
    total
}

fn check_edge(g: &Graph, (u, v): (u32, u32)) -> Result<()> {
    if !g.has_edge(u, v) {
        return Err(Error::Contract(format!("({u}, {v}) is not an edge")));
    }
    Ok(())
}

fn check_length(length: u32, bound: u32) -> Result<()> {
    if !(3..=bound).contains(&length) {
        return Err(Error::Range(format!(
            "cycle length {length} outside 3..={bound}"
        )));
    }
    Ok(())
}

/// Number of simple cycles of exactly `length` edges through the edge
/// `{u, v}`. Each such cycle is the edge plus one simple `u`-`v` path of
/// `length - 1` edges, so paths are counted in one direction only.
pub fn cycles_through_edge(g: &Graph, edge: (u32, u32), length: u32, bound: u32) -> Result<u64> {
    check_edge(g, edge)?;
    check_length(length, bound)?;
    let (u, v) = edge;
    let mut on_path = vec![false; g.vertex_count()];
    on_path[u as usize] = true;
    Ok(count_paths(g, u, v, length - 1, &mut on_path))
}

/// Cycle counts through one edge for every length `3..=bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCycleProfile {
    pub edge: (VertexLabel, VertexLabel),
    pub counts: BTreeMap<u32, u64>,
}

pub fn cycle_profile(g: &Graph, edge: (u32, u32), bound: u32) -> Result<EdgeCycleProfile> {
    check_edge(g, edge)?;
    check_length(3, bound)?;
    let width = g.label_width();
    let counts = (3..=bound)
        .into_par_iter()
        .map(|l| cycles_through_edge(g, edge, l, bound).map(|c| (l, c)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(EdgeCycleProfile {
        edge: (
            VertexLabel::new(u64::from(edge.0), width)?,
            VertexLabel::new(u64::from(edge.1), width)?,
        ),
        counts,
    })
}

/// Two edges whose counts of `cycle_length`-cycles differ, so no
/// automorphism maps one onto the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeWitness {
    pub cycle_length: u32,
    pub first_edge: (VertexLabel, VertexLabel),
    pub first_count: u64,
    pub second_edge: (VertexLabel, VertexLabel),
    pub second_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeTransitivityReport {
    pub n: u32,
    pub cycle_bound: u32,
    /// Profiles of the candidate edges that were compared.
    pub profiles: Vec<EdgeCycleProfile>,
    /// `None` means no distinguishing length up to `cycle_bound`, which is
    /// not a proof of edge-transitivity.
    pub witness: Option<EdgeWitness>,
}

impl EdgeTransitivityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::to_value(self).expect("report serializes"))
            .expect("json values serialize")
    }
}

/// Prefers a length where one edge lies on no cycle and the other does,
/// then any length with differing counts.
fn distinguish(profiles: &[EdgeCycleProfile]) -> Option<EdgeWitness> {
    let witness = |l: u32, a: &EdgeCycleProfile, b: &EdgeCycleProfile| EdgeWitness {
        cycle_length: l,
        first_edge: a.edge,
        first_count: a.counts[&l],
        second_edge: b.edge,
        second_count: b.counts[&l],
    };
    let lengths: Vec<u32> = profiles.first()?.counts.keys().copied().collect();
    let pairs = || {
        profiles
            .iter()
            .enumerate()
            .flat_map(move |(i, a)| profiles[i + 1..].iter().map(move |b| (a, b)))
    };
    for &l in &lengths {
        if let Some((a, b)) = pairs().find(|(a, b)| (a.counts[&l] == 0) != (b.counts[&l] == 0)) {
            // Report the edge that does lie on such cycles first.
            return Some(if a.counts[&l] > 0 {
                witness(l, a, b)
            } else {
                witness(l, b, a)
            });
        }
    }
    for &l in &lengths {
        if let Some((a, b)) = pairs().find(|(a, b)| a.counts[&l] != b.counts[&l]) {
            return Some(witness(l, a, b));
        }
    }
    None
}

/// Looks for two edges of `VQ_n` with different cycle profiles.
///
/// Since `VQ_n` is vertex-transitive, every edge is the image of an edge at
/// the all-zero vertex, so the edges at that vertex are the candidates.
/// For `n = 4` the two edges at `0101` towards `0001` and `1101` are used.
pub fn refute_edge_transitivity(n: u32, bound: u32) -> Result<EdgeTransitivityReport> {
    if n > REFUTE_MAX_DIM {
        return Err(Error::Resource {
            what: "cycle profiling dimension",
            requested: u64::from(n),
            cap: u64::from(REFUTE_MAX_DIM),
        });
    }
    check_length(3, bound)?;
    let g = build_recursive(n)?;
    let candidates: Vec<(u32, u32)> = if n == 4 {
        VQ4_WITNESS
            .iter()
            .map(|(a, b)| {
                let a: VertexLabel = a.parse().expect("constant label");
                let b: VertexLabel = b.parse().expect("constant label");
                (a.value() as u32, b.value() as u32)
            })
            .collect()
    } else if n == 0 {
        Vec::new()
    } else {
        g.neighbors(0).iter().map(|&v| (0, v)).collect()
    };
    let profiles = candidates
        .into_iter()
        .map(|e| cycle_profile(&g, e, bound))
        .collect::<Result<Vec<_>>>()?;
    let witness = distinguish(&profiles);
    Ok(EdgeTransitivityReport {
        n,
        cycle_bound: bound,
        profiles,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{build_circulant, build_hypercube};

    fn v(s: &str) -> u32 {
        s.parse::<VertexLabel>().unwrap().value() as u32
    }

    #[test]
    fn four_cycle() {
        let g = build_recursive(2).unwrap();
        assert_eq!(cycles_through_edge(&g, (0, 1), 4, 8).unwrap(), 1);
        assert_eq!(cycles_through_edge(&g, (0, 1), 3, 8).unwrap(), 0);
    }

    #[test]
    fn vq4_five_cycles() {
        let g = build_recursive(4).unwrap();
        assert_eq!(
            cycles_through_edge(&g, (v("0101"), v("1101")), 5, 8).unwrap(),
            0
        );
        assert_eq!(
            cycles_through_edge(&g, (v("0101"), v("0001")), 5, 8).unwrap(),
            4
        );
    }

    #[test]
    fn complete_graph_counts() {
        // K5: cycles of length L through a fixed edge = (3)_(L-2) paths.
        let k5 = build_circulant(5, &[1, 2, 3, 4]).unwrap();
        let counts: Vec<u64> = (3..=5)
            .map(|l| cycles_through_edge(&k5, (0, 1), l, 8).unwrap())
            .collect();
        assert_eq!(counts, vec![3, 6, 6]);
    }

    #[test]
    fn argument_checks() {
        let g = build_recursive(3).unwrap();
        assert!(matches!(
            cycles_through_edge(&g, (0, 3), 4, 8),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            cycles_through_edge(&g, (0, 1), 2, 8),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            cycles_through_edge(&g, (0, 1), 9, 8),
            Err(Error::Range(_))
        ));
        assert!(refute_edge_transitivity(9, 8).is_err());
    }

    #[test]
    fn refutation_reports() {
        let r4 = refute_edge_transitivity(4, DEFAULT_CYCLE_BOUND).unwrap();
        let w = r4.witness.expect("VQ4 is not edge-transitive");
        assert_eq!(w.cycle_length, 5);
        assert_eq!(
            w.first_edge,
            ("0101".parse().unwrap(), "0001".parse().unwrap())
        );
        assert_eq!(
            w.second_edge,
            ("0101".parse().unwrap(), "1101".parse().unwrap())
        );
        assert_eq!((w.first_count, w.second_count), (4, 0));

        let r2 = refute_edge_transitivity(2, DEFAULT_CYCLE_BOUND).unwrap();
        assert!(r2.witness.is_none());
        assert_eq!(r2.profiles.len(), 2);

        // VQ3: no zero/non-zero split up to 8; 4-cycle counts 2 vs 1 differ.
        let r3 = refute_edge_transitivity(3, DEFAULT_CYCLE_BOUND).unwrap();
        let w3 = r3.witness.unwrap();
        assert_eq!(w3.cycle_length, 4);
        assert_eq!((w3.first_count, w3.second_count), (2, 1));
    }

    #[test]
    fn hypercube_edges_look_alike() {
        let q4 = build_hypercube(4).unwrap();
        let a = cycle_profile(&q4, (0, 1), 6).unwrap();
        let b = cycle_profile(&q4, (0, 8), 6).unwrap();
        assert_eq!(a.counts, b.counts);
    }
}
