//! Backtracking search for isomorphisms between small graphs.
//!
//! Vertices of the source graph are placed in BFS order so each new vertex
//! (apart from component roots) has an already-mapped parent; its candidate
//! images are then limited to the neighbors of the parent's image. Every
//! candidate must match degree and agree on adjacency with all vertices
//! mapped so far, which keeps partial maps adjacency-preserving both ways.

use std::collections::VecDeque;

use crate::topology::Graph;

fn bfs_order(g: &Graph) -> Vec<(u32, Option<u32>)> {
    let count = g.vertex_count();
    let mut seen = vec![false; count];
    let mut order = Vec::with_capacity(count);
    for root in 0..count as u32 {
        if seen[root as usize] {
            continue;
        }
        seen[root as usize] = true;
        let mut queue = VecDeque::from([root]);
        order.push((root, None));
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    order.push((v, Some(u)));
                    queue.push_back(v);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<(u32, Option<u32>)>,
    forward: Vec<Option<u32>>,
    used: Vec<bool>,
    limit: usize,
    found: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn consistent(&self, v: u32, c: u32, depth: usize) -> bool {
        if self.used[c as usize] || self.g.degree(v) != self.h.degree(c) {
            return false;
        }
        self.order[..depth].iter().all(|&(u, _)| {
            let fu = self.forward[u as usize].expect("placed vertices are mapped");
            self.g.has_edge(v, u) == self.h.has_edge(c, fu)
        })
    }

    fn extend(&mut self, depth: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            let map = self
                .forward
                .iter()
                .map(|f| f.expect("complete map"))
                .collect();
            self.found.push(map);
            return;
        }
        let (v, parent) = self.order[depth];
        let candidates: Vec<u32> = match parent {
            Some(p) => {
                let fp = self.forward[p as usize].expect("parent placed first");
                self.h.neighbors(fp).to_vec()
            }
            None => (0..self.h.vertex_count() as u32).collect(),
        };
        for c in candidates {
            if !self.consistent(v, c, depth) {
                continue;
            }
            self.forward[v as usize] = Some(c);
            self.used[c as usize] = true;
            self.extend(depth + 1);
            self.used[c as usize] = false;
            self.forward[v as usize] = None;
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

/// Up to `limit` isomorphisms `g -> h`, each as a table `map[v] = image of v`.
pub(crate) fn isomorphisms(g: &Graph, h: &Graph, limit: usize) -> Vec<Vec<u32>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Vec::new();
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..x.vertex_count() as u32).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Vec::new();
    }
    let count = g.vertex_count();
    let mut search = Search {
        g,
        h,
        order: bfs_order(g),
        forward: vec![None; count],
        used: vec![false; count],
        limit,
        found: Vec::new(),
    };
    search.extend(0);
    search.found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{build_circulant, build_hypercube, Family};

    #[test]
    fn counts_automorphisms_of_small_cycles() {
        let c4 = build_circulant(4, &[1, 3]).unwrap();
        assert_eq!(isomorphisms(&c4, &c4, usize::MAX).len(), 8);
        let c5 = build_circulant(5, &[1, 4]).unwrap();
        assert_eq!(isomorphisms(&c5, &c5, usize::MAX).len(), 10);
        let q3 = build_hypercube(3).unwrap();
        assert_eq!(isomorphisms(&q3, &q3, usize::MAX).len(), 48);
    }

    #[test]
    fn handles_disconnected_graphs() {
        let two_edges = Graph::from_edges(Family::Generic, 4, 4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(isomorphisms(&two_edges, &two_edges, usize::MAX).len(), 8);
        let path = Graph::from_edges(Family::Generic, 4, 4, [(0, 1), (1, 2)]).unwrap();
        let star = Graph::from_edges(Family::Generic, 4, 4, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(isomorphisms(&path, &star, usize::MAX).len(), 2);
    }

    #[test]
    fn rejects_non_isomorphic() {
        let c6 = build_circulant(6, &[1, 5]).unwrap();
        let two_triangles = Graph::from_edges(
            Family::Generic,
            6,
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        assert!(isomorphisms(&c6, &two_triangles, 1).is_empty());
    }
}
