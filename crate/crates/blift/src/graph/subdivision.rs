//! Subdivision structure: is the graph a subdivision of K2^n, and if not,
//! does it contain a K4-subdivision?

use super::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubdivisionProfile {
    /// The graph is a subdivision of the two-vertex graph with `n` parallel
    /// edges. A cycle on >= 2 vertices reports `K2nSubdivision(2)`.
    K2nSubdivision(usize),
    ContainsK4Subdivision,
    Neither,
}

impl Multigraph {
    pub fn subdivision_profile(&self) -> SubdivisionProfile {
        if let Some(n) = self.k2n_subdivision() {
            return SubdivisionProfile::K2nSubdivision(n);
        }
        if self.contains_k4_subdivision() {
            return SubdivisionProfile::ContainsK4Subdivision;
        }
        SubdivisionProfile::Neither
    }

    /// Tests whether the whole graph is a subdivision of K2^n, returning n.
    fn k2n_subdivision(&self) -> Option<usize> {
        if self.edge_count() == 0 || !self.is_connected() || !self.loops().is_empty() {
            return None;
        }
        let degrees: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        if degrees.iter().any(|&d| d == 0) {
            return None;
        }
        let branch: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| degrees[v] != 2)
            .collect();
        if branch.is_empty() {
            // Connected 2-regular and loop-free: a cycle on >= 2 vertices.
            return Some(2);
        }
        let [a, b] = branch[..] else { return None };
        let k = degrees[a];
        if k < 3 || degrees[b] != k {
            return None;
        }
        // Walk each of the k edge-starts at `a` through degree-2 vertices;
        // all walks must end at `b` and jointly use every edge once.
        let mut used = vec![false; self.edge_count()];
        for start in 0..self.edge_count() {
            let (u, v) = self.edge(start);
            if (u != a && v != a) || used[start] {
                continue;
            }
            used[start] = true;
            let mut via = start;
            let mut at = if u == a { v } else { u };
            while at != b {
                if at == a {
                    return None; // walked back into the start branch vertex
                }
                // Degree-2 interior vertex: exactly one unused other edge.
                let mut next = None;
                for e in 0..self.edge_count() {
                    if e == via || used[e] {
                        continue;
                    }
                    let (x, y) = self.edge(e);
                    if x == at || y == at {
                        if next.is_some() {
                            return None;
                        }
                        next = Some((e, if x == at { y } else { x }));
                    }
                }
                let (e, w) = next?;
                used[e] = true;
                via = e;
                at = w;
            }
        }
        if used.iter().all(|&u| u) {
            Some(k)
        } else {
            None
        }
    }

    /// A K4-subdivision exists iff a K4-minor exists (K4 is cubic), and
    /// K4-minor-free multigraphs are exactly those that series-parallel
    /// reduce to nothing.
    fn contains_k4_subdivision(&self) -> bool {
        let n = self.vertex_count();
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        loop {
            let mut changed = false;

            // Drop loops.
            let before = edges.len();
            edges.retain(|&(u, v)| u != v);
            changed |= edges.len() != before;

            // Merge one edge of each parallel pair.
            let mut i = 0;
            while i < edges.len() {
                let mut j = i + 1;
                let mut dropped = false;
                while j < edges.len() {
                    if edges[j] == edges[i] {
                        edges.swap_remove(j);
                        changed = true;
                        dropped = true;
                        break;
                    }
                    j += 1;
                }
                if !dropped {
                    i += 1;
                }
            }

            // Delete degree-<=1 vertices and suppress degree-2 vertices.
            let mut deg = vec![0usize; n];
            for &(u, v) in &edges {
                deg[u] += 1;
                deg[v] += 1;
            }
            if let Some(v) = (0..n).position(|v| deg[v] == 1) {
                edges.retain(|&(a, b)| a != v && b != v);
                changed = true;
            } else if let Some(v) = (0..n).position(|v| deg[v] == 2) {
                let inc: Vec<usize> = (0..edges.len())
                    .filter(|&i| edges[i].0 == v || edges[i].1 == v)
                    .collect();
                if inc.len() == 2 {
                    let other = |i: usize| {
                        let (a, b) = edges[i];
                        if a == v {
                            b
                        } else {
                            a
                        }
                    };
                    let (x, y) = (other(inc[0]), other(inc[1]));
                    edges.remove(inc[1]);
                    edges.remove(inc[0]);
                    edges.push((x.min(y), x.max(y)));
                    changed = true;
                }
                // A single loop-shaped pair at v is handled by the loop rule
                // after the push above turns it into a loop.
            }

            if !changed {
                break;
            }
        }
        !edges.is_empty()
    }
}
