use rayon::prelude::*;
use serde::Serialize;

use super::Automorphism;
use crate::error::{Error, Result};
use crate::topology::{build_recursive_capped, Family, Graph, VertexLabel, DEFAULT_SIZE_CAP};

/// At most this many witnesses are kept per check.
pub const MAX_WITNESSES: usize = 64;

/// Evidence that a map is not an automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Two labels share an image.
    Collision {
        first: VertexLabel,
        second: VertexLabel,
        image: VertexLabel,
    },
    /// An edge whose image pair is not an edge.
    BrokenEdge {
        edge: (VertexLabel, VertexLabel),
        image: (VertexLabel, VertexLabel),
    },
}

/// Outcome of checking a map against the edge set of `VQ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphismCheck {
    pub dim: u32,
    pub edges_checked: usize,
    /// Total number of violations found (collisions or broken edges).
    pub violations: usize,
    /// The first violations in label order, capped at [`MAX_WITNESSES`].
    pub witnesses: Vec<Witness>,
}

impl AutomorphismCheck {
    pub fn is_ok(&self) -> bool {
        self.violations == 0
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    /// True if some broken-edge witness is the undirected edge `{a, b}`.
    pub fn has_broken_edge(&self, a: VertexLabel, b: VertexLabel) -> bool {
        self.witnesses.iter().any(|w| match w {
            Witness::BrokenEdge { edge, .. } => *edge == (a, b) || *edge == (b, a),
            Witness::Collision { .. } => false,
        })
    }
}

/// Checks `a` against `VQ_{a.dim}` built under the default size cap.
pub fn is_automorphism(a: &Automorphism) -> Result<AutomorphismCheck> {
    is_automorphism_capped(a, DEFAULT_SIZE_CAP)
}

pub fn is_automorphism_capped(a: &Automorphism, cap: u32) -> Result<AutomorphismCheck> {
    let g = build_recursive_capped(a.dim(), cap)?;
    is_automorphism_in(a, &g)
}

/// Checks `a` against an already built `VQ_n`: the induced map must be a
/// bijection sending every edge to an edge. With a finite edge set that
/// also makes the image of `E` equal to `E`.
pub fn is_automorphism_in(a: &Automorphism, g: &Graph) -> Result<AutomorphismCheck> {
    if g.family() != Family::Varietal || g.n() != a.dim() {
        return Err(Error::Contract(format!(
            "automorphism of dimension {} checked against a {:?} graph with n = {}",
            a.dim(),
            g.family(),
            g.n()
        )));
    }
    let dim = a.dim();
    let label = |v: u64| VertexLabel::from_raw(v, dim);
    let table = a.to_table()?;

    let mut preimage: Vec<Option<u64>> = vec![None; table.len()];
    let mut collisions = Vec::new();
    let mut collision_count = 0;
    for (x, &y) in table.iter().enumerate() {
        match preimage[y as usize] {
            Some(first) => {
                collision_count += 1;
                if collisions.len() < MAX_WITNESSES {
                    collisions.push(Witness::Collision {
                        first: label(first),
                        second: label(x as u64),
                        image: label(y),
                    });
                }
            }
            None => preimage[y as usize] = Some(x as u64),
        }
    }
    if collision_count > 0 {
        return Ok(AutomorphismCheck {
            dim,
            edges_checked: 0,
            violations: collision_count,
            witnesses: collisions,
        });
    }

    const CHUNK: usize = 4096;
    let vertices = g.vertex_count();
    let chunks: Vec<(usize, Vec<Witness>)> = (0..vertices.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut count = 0;
            let mut found = Vec::new();
            for u in (c * CHUNK) as u32..((c + 1) * CHUNK).min(vertices) as u32 {
                let fu = table[u as usize];
                for &v in g.neighbors(u).iter().filter(|&&v| u < v) {
                    let fv = table[v as usize];
                    if !g.has_edge(fu as u32, fv as u32) {
                        count += 1;
                        if found.len() < MAX_WITNESSES {
                            found.push(Witness::BrokenEdge {
                                edge: (label(u64::from(u)), label(u64::from(v))),
                                image: (label(fu), label(fv)),
                            });
                        }
                    }
                }
            }
            (count, found)
        })
        .collect();

    let mut violations = 0;
    let mut witnesses = Vec::new();
    for (count, found) in chunks {
        violations += count;
        let room = MAX_WITNESSES - witnesses.len();
        witnesses.extend(found.into_iter().take(room));
    }
    Ok(AutomorphismCheck {
        dim,
        edges_checked: g.edge_count(),
        violations,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::PhiIndex;

    fn lbl(s: &str) -> VertexLabel {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_sigma1_pass() {
        for n in 0..=6 {
            assert!(is_automorphism(&Automorphism::identity(n).unwrap())
                .unwrap()
                .is_ok());
        }
        for n in 1..=10 {
            let check = is_automorphism(&Automorphism::sigma1(n).unwrap()).unwrap();
            assert!(check.is_ok(), "sigma1({n}): {:?}", check.witness());
            assert_eq!(check.edges_checked, n as usize * (1 << (n - 1)));
        }
    }

    #[test]
    fn sigma1_keeps_crossing_edge() {
        let s1 = Automorphism::sigma1(3).unwrap();
        let g = build_recursive_capped(3, 3).unwrap();
        let (a, b) = (s1.apply(lbl("011")).unwrap(), s1.apply(lbl("110")).unwrap());
        assert_eq!((a, b), (lbl("111"), lbl("010")));
        assert!(g.has_edge(a.value() as u32, b.value() as u32));
    }

    #[test]
    fn uniform_phi2_pair_breaks_the_crossing_edge() {
        let id0 = Automorphism::identity(0).unwrap();
        let p2 = Automorphism::lift_phi(PhiIndex::Two, id0, 3).unwrap();
        let bad = Automorphism::sigma0_unchecked(3, p2.clone(), p2).unwrap();
        assert_eq!(bad.apply(lbl("011")).unwrap(), lbl("001"));
        assert_eq!(bad.apply(lbl("110")).unwrap(), lbl("100"));
        let check = is_automorphism(&bad).unwrap();
        assert!(!check.is_ok());
        assert!(check.has_broken_edge(lbl("011"), lbl("110")));
        assert_eq!(check.violations, 4);
    }

    #[test]
    fn different_maps_per_half_break_transversal_edges() {
        // Reflecting only the x_2 = 1 half of the 4-cycle breaks both
        // 2-transversal edges.
        let id1 = Automorphism::identity(1).unwrap();
        let swap1 = Automorphism::from_table(1, vec![1, 0]).unwrap();
        let skew = Automorphism::sigma0_unchecked(2, id1, swap1).unwrap();
        let check = is_automorphism(&skew).unwrap();
        assert_eq!(check.violations, 2);
        assert!(check.has_broken_edge(lbl("00"), lbl("10")));
        assert!(check.has_broken_edge(lbl("01"), lbl("11")));
    }

    #[test]
    fn hypercube_reflection_is_not_a_vq_automorphism() {
        // Swapping bits 1 and 3 preserves Q_3 but not VQ_3.
        let table = (0u64..8)
            .map(|x| (x & 0b010) | ((x & 1) << 2) | ((x >> 2) & 1))
            .collect();
        let swap = Automorphism::from_table(3, table).unwrap();
        let check = is_automorphism(&swap).unwrap();
        assert!(!check.is_ok());
        assert!(matches!(check.witness(), Some(Witness::BrokenEdge { .. })));
    }

    #[test]
    fn rejects_mismatched_graph() {
        let g = crate::topology::build_hypercube(3).unwrap();
        assert!(is_automorphism_in(&Automorphism::identity(3).unwrap(), &g).is_err());
        assert!(matches!(
            is_automorphism_capped(&Automorphism::identity(9).unwrap(), 8),
            Err(Error::Resource { .. })
        ));
    }
}
