//! Distance metrics, bounded per-edge cycle counts and small-graph
//! isomorphism.

mod cycles;

use std::collections::{BTreeMap, VecDeque};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::search::isomorphisms;
use crate::topology::{build_circulant, build_recursive, Family, Graph};

pub use cycles::{
    cycle_profile, cycles_through_edge, refute_edge_transitivity, EdgeCycleProfile,
    EdgeTransitivityReport, EdgeWitness, DEFAULT_CYCLE_BOUND, REFUTE_MAX_DIM,
};

/// Distance reported for vertices that BFS cannot reach.
pub const UNREACHABLE: u32 = u32::MAX;

/// Largest vertex count accepted by [`isomorphic_small`].
pub const SMALL_GRAPH_CAP: usize = 16;

/// Hop distances from `src` to every vertex.
pub fn bfs_distances(g: &Graph, src: u32) -> Result<Vec<u32>> {
    if src as usize >= g.vertex_count() {
        return Err(Error::Range(format!(
            "source {src} outside 0..{}",
            g.vertex_count()
        )));
    }
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    dist[src as usize] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u as usize] + 1;
        for &v in g.neighbors(u) {
            if dist[v as usize] == UNREACHABLE {
                dist[v as usize] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricsMode {
    /// One BFS from vertex 0, extended to all sources by vertex-transitivity.
    SingleSourceViaTransitivity,
    /// BFS from every vertex.
    AllSources,
}

impl MetricsMode {
    pub fn as_str(self) -> &'static str {
        match self {
            MetricsMode::SingleSourceViaTransitivity => "single-source-via-transitivity",
            MetricsMode::AllSources => "all-sources",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricsReport {
    pub n: u32,
    pub family: Family,
    pub diameter: u32,
    /// Sum of distances over ordered pairs `(u, v)`, `u != v`, divided by
    /// the number of such pairs.
    pub average_distance: Ratio<u64>,
    /// Eccentricity -> number of vertices with it.
    pub eccentricity_profile: BTreeMap<u32, usize>,
    pub mode: MetricsMode,
}

/// `num / den` rounded half-up to `places` decimals.
pub fn decimal(r: Ratio<u64>, places: u32) -> String {
    let scale = 10u128.pow(places);
    let num = u128::from(*r.numer());
    let den = u128::from(*r.denom());
    let scaled = (num * scale * 2 + den) / (den * 2);
    let int = scaled / scale;
    let frac = scaled % scale;
    if places == 0 {
        int.to_string()
    } else {
        format!("{int}.{frac:0width$}", width = places as usize)
    }
}

impl MetricsReport {
    pub fn average_distance_decimal(&self) -> String {
        decimal(self.average_distance, 6)
    }

    /// Key-sorted JSON object with the report fields.
    pub fn to_json_value(&self) -> Value {
        let profile: serde_json::Map<String, Value> = self
            .eccentricity_profile
            .iter()
            .map(|(e, c)| (e.to_string(), json!(c)))
            .collect();
        json!({
            "n": self.n,
            "diameter": self.diameter,
            "average_distance_num": self.average_distance.numer(),
            "average_distance_den": self.average_distance.denom(),
            "average_distance_decimal": self.average_distance_decimal(),
            "mode": self.mode.as_str(),
            "eccentricity_profile": profile,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("json values serialize")
    }
}

fn source_stats(g: &Graph, src: u32) -> Result<(u32, u64)> {
    let dist = bfs_distances(g, src)?;
    let mut ecc = 0;
    let mut sum = 0u64;
    for &d in &dist {
        if d == UNREACHABLE {
            return Err(Error::Contract(
                "distance metrics need a connected graph".into(),
            ));
        }
        ecc = ecc.max(d);
        sum += u64::from(d);
    }
    Ok((ecc, sum))
}

/// Diameter, average distance and eccentricity profile of a connected graph.
///
/// Single-source mode is only accepted for the varietal, hypercube and
/// circulant families, which are vertex-transitive.
pub fn metrics(g: &Graph, mode: MetricsMode) -> Result<MetricsReport> {
    let count = g.vertex_count() as u64;
    let (profile, total) = match mode {
        MetricsMode::SingleSourceViaTransitivity => {
            if g.family() == Family::Generic {
                return Err(Error::Contract(
                    "single-source metrics need a vertex-transitive family".into(),
                ));
            }
            let (ecc, sum) = source_stats(g, 0)?;
            (BTreeMap::from([(ecc, g.vertex_count())]), sum * count)
        }
        MetricsMode::AllSources => {
            let stats = (0..g.vertex_count() as u32)
                .into_par_iter()
                .map(|s| source_stats(g, s))
                .collect::<Result<Vec<_>>>()?;
            let mut profile = BTreeMap::new();
            let mut total = 0u64;
            for (ecc, sum) in stats {
                *profile.entry(ecc).or_insert(0) += 1;
                total += sum;
            }
            (profile, total)
        }
    };
    let pairs = count * count.saturating_sub(1);
    let average_distance = if pairs == 0 {
        Ratio::from_integer(0)
    } else {
        Ratio::new(total, pairs)
    };
    Ok(MetricsReport {
        n: g.n(),
        family: g.family(),
        diameter: profile.keys().next_back().copied().unwrap_or(0),
        average_distance,
        eccentricity_profile: profile,
        mode,
    })
}

/// An isomorphism `g -> h` as `map[v] = image`, or `None` if there is none.
pub fn isomorphic_small(g: &Graph, h: &Graph) -> Result<Option<Vec<u32>>> {
    for x in [g, h] {
        if x.vertex_count() > SMALL_GRAPH_CAP {
            return Err(Error::Resource {
                what: "vertex count",
                requested: x.vertex_count() as u64,
                cap: SMALL_GRAPH_CAP as u64,
            });
        }
    }
    Ok(isomorphisms(g, h, 1).pop())
}

/// True if `map` is a bijection `g -> h` preserving adjacency both ways.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[u32]) -> bool {
    let count = g.vertex_count();
    if h.vertex_count() != count || map.len() != count {
        return false;
    }
    let mut hit = vec![false; count];
    for &m in map {
        if m as usize >= count || std::mem::replace(&mut hit[m as usize], true) {
            return false;
        }
    }
    (0..count as u32).all(|u| {
        (0..count as u32).all(|v| g.has_edge(u, v) == h.has_edge(map[u as usize], map[v as usize]))
    })
}

/// Result of matching `VQ_3` against the circulant `C(Z_8, {1, 4, 7})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyCheck {
    /// `mapping[x]` is the residue assigned to label `x`.
    pub mapping: Option<Vec<u32>>,
}

pub fn cayley_check() -> Result<CayleyCheck> {
    let vq3 = build_recursive(3)?;
    let circ = build_circulant(8, &[1, 4, 7])?;
    Ok(CayleyCheck {
        mapping: isomorphic_small(&vq3, &circ)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::build_hypercube;

    #[test]
    fn bfs_examples() {
        let vq3 = build_recursive(3).unwrap();
        let d = bfs_distances(&vq3, 0b000).unwrap();
        assert_eq!(d[0b111], 2);
        assert_eq!(d[0], 0);
        let q4 = build_hypercube(4).unwrap();
        assert_eq!(bfs_distances(&q4, 0).unwrap()[0b1111], 4);
        assert!(matches!(bfs_distances(&q4, 16), Err(Error::Range(_))));
    }

    #[test]
    fn bfs_marks_unreachable() {
        let g = Graph::from_edges(Family::Generic, 3, 3, [(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&g, 0).unwrap(), vec![0, 1, UNREACHABLE]);
        assert!(metrics(&g, MetricsMode::AllSources).is_err());
    }

    #[test]
    fn small_metrics() {
        // Values cross-checked with networkx.
        let vq3 = metrics(&build_recursive(3).unwrap(), MetricsMode::AllSources).unwrap();
        assert_eq!(vq3.diameter, 2);
        assert_eq!(vq3.average_distance, Ratio::new(11, 7));
        assert_eq!(vq3.eccentricity_profile, BTreeMap::from([(2, 8)]));
        let q3 = metrics(
            &build_hypercube(3).unwrap(),
            MetricsMode::SingleSourceViaTransitivity,
        )
        .unwrap();
        assert_eq!(q3.diameter, 3);
        assert_eq!(q3.average_distance, Ratio::new(12, 7));
        let k1 = metrics(&build_recursive(0).unwrap(), MetricsMode::AllSources).unwrap();
        assert_eq!(
            (k1.diameter, k1.average_distance),
            (0, Ratio::from_integer(0))
        );
    }

    #[test]
    fn single_source_rejected_for_generic() {
        let g = Graph::from_edges(Family::Generic, 2, 2, [(0, 1)]).unwrap();
        assert!(matches!(
            metrics(&g, MetricsMode::SingleSourceViaTransitivity),
            Err(Error::Contract(_))
        ));
        assert!(metrics(&g, MetricsMode::AllSources).is_ok());
    }

    #[test]
    fn json_fields() {
        let r = metrics(&build_recursive(3).unwrap(), MetricsMode::AllSources).unwrap();
        let text = r.to_json();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["average_distance_num"], 11);
        assert_eq!(v["average_distance_den"], 7);
        assert_eq!(v["average_distance_decimal"], "1.571429");
        assert_eq!(v["mode"], "all-sources");
        assert_eq!(v["eccentricity_profile"]["2"], 8);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("average_distance_decimal") < pos("diameter"));
    }

    #[test]
    fn decimal_rounding() {
        assert_eq!(decimal(Ratio::new(2, 3), 6), "0.666667");
        assert_eq!(decimal(Ratio::new(2, 1), 6), "2.000000");
        assert_eq!(decimal(Ratio::new(1, 8), 2), "0.13");
        assert_eq!(decimal(Ratio::new(7, 2), 0), "4");
    }

    #[test]
    fn isomorphism_examples() {
        let check = cayley_check().unwrap();
        let map = check.mapping.expect("VQ3 is circulant");
        assert!(is_isomorphism(
            &build_recursive(3).unwrap(),
            &build_circulant(8, &[1, 4, 7]).unwrap(),
            &map
        ));
        let c4 = build_circulant(4, &[1, 3]).unwrap();
        assert!(isomorphic_small(&build_recursive(2).unwrap(), &c4)
            .unwrap()
            .is_some());
        assert!(
            isomorphic_small(&build_recursive(3).unwrap(), &build_hypercube(3).unwrap())
                .unwrap()
                .is_none()
        );
        assert!(matches!(
            isomorphic_small(&build_recursive(5).unwrap(), &build_hypercube(5).unwrap()),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn is_isomorphism_rejects_bad_maps() {
        let c4 = build_circulant(4, &[1, 3]).unwrap();
        assert!(is_isomorphism(&c4, &c4, &[0, 1, 2, 3]));
        assert!(!is_isomorphism(&c4, &c4, &[0, 2, 1, 3]));
        assert!(!is_isomorphism(&c4, &c4, &[0, 0, 1, 2]));
        assert!(!is_isomorphism(&c4, &c4, &[0, 1, 2]));
    }
}
