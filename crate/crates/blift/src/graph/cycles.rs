//! Cycle enumeration: a cycle is an edge set X with `G|X` connected and
//! 2-regular. Loops are single-edge cycles, parallel pairs two-edge cycles.

use super::Multigraph;
use crate::bits::EdgeSet;

/// One cycle: its edge set and the mask of vertices it covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleData {
    pub edges: EdgeSet,
    pub vertices: u64,
}

impl Multigraph {
    /// All cycles, in a deterministic order (sorted by edge set).
    pub fn cycles(&self) -> Vec<CycleData> {
        let n = self.vertex_count();
        let mut out = Vec::new();

        // Adjacency over links only; loops are cycles on their own.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (i, (u, v)) in self.edges().enumerate() {
            if u == v {
                out.push(CycleData {
                    edges: EdgeSet::singleton(i),
                    vertices: 1 << u,
                });
            } else {
                adj[u].push((i, v));
                adj[v].push((i, u));
            }
        }

        // Paths from s through vertices > s, closing back at s. Each cycle is
        // seen once per direction; keeping first label < closing label
        // deduplicates.
        for s in 0..n {
            for &(e0, u) in &adj[s] {
                if u < s {
                    continue;
                }
                let mut stack = vec![(u, EdgeSet::singleton(e0), (1u64 << s) | (1u64 << u))];
                while let Some((at, used, verts)) = stack.pop() {
                    for &(e, w) in &adj[at] {
                        if used.contains(e) {
                            continue;
                        }
                        if w == s {
                            if e > e0 {
                                out.push(CycleData {
                                    edges: used.with(e),
                                    vertices: verts,
                                });
                            }
                        } else if w > s && verts & (1 << w) == 0 {
                            stack.push((w, used.with(e), verts | (1 << w)));
                        }
                    }
                }
            }
        }

        out.sort_unstable_by_key(|c| c.edges);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, k2n, Multigraph};

    /// Brute-force oracle straight from the definition: X is a cycle iff G|X
    /// is connected and 2-regular.
    fn cycle_oracle(g: &Multigraph) -> Vec<EdgeSet> {
        let m = g.edge_count();
        let mut out = Vec::new();
        for mask in 1u32..(1 << m) {
            let x = crate::bits::Bits32(mask);
            if g.subgraph_components(x) != 1 {
                continue;
            }
            let covered = g.covered_vertices(x);
            let mut two_regular = true;
            for v in 0..g.vertex_count() {
                if covered & (1 << v) == 0 {
                    continue;
                }
                let mut d = 0;
                for i in x.iter() {
                    let (a, b) = g.edge(i);
                    if a == v {
                        d += 1;
                    }
                    if b == v {
                        d += 1;
                    }
                }
                if d != 2 {
                    two_regular = false;
                    break;
                }
            }
            if two_regular {
                out.push(x);
            }
        }
        out
    }

    #[test]
    fn k4_has_seven_cycles() {
        assert_eq!(complete_graph(4).cycles().len(), 7);
    }

    #[test]
    fn two_loops_are_two_cycles() {
        let g = Multigraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let cycles: Vec<_> = g.cycles().iter().map(|c| c.edges).collect();
        assert_eq!(cycles, vec![EdgeSet::singleton(0), EdgeSet::singleton(1)]);
    }

    #[test]
    fn k23_has_three_cycles() {
        assert_eq!(k2n(3).cycles().len(), 3);
    }

    #[test]
    fn cycles_match_definition_oracle() {
        let samples = vec![
            complete_graph(4),
            k2n(4),
            Multigraph::new(3, vec![(0, 0), (0, 1), (0, 1), (1, 2), (0, 2)]).unwrap(),
            Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 1)]).unwrap(),
        ];
        for g in samples {
            let mut got: Vec<_> = g.cycles().iter().map(|c| c.edges).collect();
            got.sort_unstable();
            let mut want = cycle_oracle(&g);
            want.sort_unstable();
            assert_eq!(got, want, "cycle mismatch on {g:?}");
        }
    }

    #[test]
    fn every_cycle_has_cyclomatic_one() {
        let g = complete_graph(4);
        for c in g.cycles() {
            assert_eq!(g.cyclomatic(c.edges), 1);
            for e in c.edges.iter() {
                assert_eq!(g.cyclomatic(c.edges.without(e)), 0);
            }
        }
    }
}
