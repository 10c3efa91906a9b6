//! Canonical exhaustive enumeration of multigraphs.
//!
//! One representative per isomorphism class is produced, in a deterministic
//! order. The canonical form of a graph is the lexicographically minimal
//! sorted edge multiset over all vertex relabelings, with edge pairs ordered
//! by (max endpoint, min endpoint). Generation is orderly: edges are added in
//! non-decreasing order and every prefix is required to be canonical, which
//! is sound because deleting the largest edge of a canonical multiset leaves
//! a canonical multiset.

use super::Multigraph;
use crate::error::{Error, Result};

/// Enumeration cap on vertices; vertex relabeling search is factorial.
pub const MAX_ENUM_VERTICES: usize = 12;

/// Constraints applied during enumeration. `max_loops` bounds the total
/// number of loops in the graph, `max_parallel` the size of any parallel
/// class; `every_edge_on_cycle` is checked at the leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EnumConstraints {
    pub max_loops: Option<usize>,
    pub max_parallel: Option<usize>,
    pub every_edge_on_cycle: bool,
}

impl EnumConstraints {
    pub fn none() -> Self {
        EnumConstraints::default()
    }

    pub fn on_cycles() -> Self {
        EnumConstraints {
            every_edge_on_cycle: true,
            ..Default::default()
        }
    }
}

pub struct MultigraphEnumerator {
    n: usize,
    m: usize,
    cons: EnumConstraints,
    domain: Vec<(u8, u8)>,
    choices: Vec<usize>,
    cursor: usize,
    adj: [[u8; MAX_ENUM_VERTICES]; MAX_ENUM_VERTICES],
    loop_count: usize,
    floor: usize,
    done: bool,
    nodes: u64,
}

impl MultigraphEnumerator {
    pub fn new(n: usize, m: usize, cons: EnumConstraints) -> Result<Self> {
        Self::with_prefix(n, m, cons, &[])
    }

    /// Resume enumeration inside the subtree of a canonical choice prefix
    /// produced by [`split_prefixes`].
    pub fn with_prefix(
        n: usize,
        m: usize,
        cons: EnumConstraints,
        prefix: &[usize],
    ) -> Result<Self> {
        if n > MAX_ENUM_VERTICES {
            return Err(Error::Capacity(format!(
                "enumeration capped at {MAX_ENUM_VERTICES} vertices, requested {n}"
            )));
        }
        if m > super::MAX_EDGES {
            return Err(Error::Capacity(format!(
                "enumeration capped at {} edges, requested {m}",
                super::MAX_EDGES
            )));
        }
        let mut domain = Vec::with_capacity(n * (n + 1) / 2);
        for v in 0..n {
            for u in 0..=v {
                domain.push((u as u8, v as u8));
            }
        }
        let mut e = MultigraphEnumerator {
            n,
            m,
            cons,
            domain,
            choices: Vec::with_capacity(m),
            cursor: 0,
            adj: [[0; MAX_ENUM_VERTICES]; MAX_ENUM_VERTICES],
            loop_count: 0,
            floor: prefix.len(),
            done: false,
            nodes: 0,
        };
        assert!(prefix.len() <= m, "prefix longer than edge count");
        for &d in prefix {
            let (u, v) = e.domain[d];
            e.adj[u as usize][v as usize] += 1;
            e.adj[v as usize][u as usize] += if u == v { 0 } else { 1 };
            if u == v {
                e.loop_count += 1;
            }
            e.choices.push(d);
        }
        e.cursor = prefix.last().copied().unwrap_or(0);
        Ok(e)
    }

    /// Canonicity-test nodes visited so far; callers charge budgets with it.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn add(&mut self, d: usize) {
        let (u, v) = self.domain[d];
        self.adj[u as usize][v as usize] += 1;
        if u != v {
            self.adj[v as usize][u as usize] += 1;
        } else {
            self.loop_count += 1;
        }
    }

    fn remove(&mut self, d: usize) {
        let (u, v) = self.domain[d];
        self.adj[u as usize][v as usize] -= 1;
        if u != v {
            self.adj[v as usize][u as usize] -= 1;
        } else {
            self.loop_count -= 1;
        }
    }

    fn admissible(&self, d: usize) -> bool {
        let (u, v) = self.domain[d];
        if u == v {
            match self.cons.max_loops {
                Some(cap) => self.loop_count < cap,
                None => true,
            }
        } else {
            match self.cons.max_parallel {
                Some(cap) => (self.adj[u as usize][v as usize] as usize) < cap,
                None => true,
            }
        }
    }

    fn build(&self) -> Multigraph {
        let edges = self.choices.iter().map(|&d| self.domain[d]).collect();
        Multigraph::from_normalized(self.n, edges)
    }

    /// Is the current edge multiset the lexicographic minimum over all
    /// vertex relabelings? Runs a backtracking search over partial
    /// relabelings; each new label's block of incident-to-earlier edges is
    /// compared against the reference blocks taken from the identity
    /// labeling.
    fn is_canonical(&mut self) -> bool {
        self.nodes += 1;
        // Called with one pending edge added to `adj` but not yet pushed.
        let total: usize = self.choices.len() + 1;
        let mut perm = [0u8; MAX_ENUM_VERTICES];
        let mut used = 0u16;
        !self.smaller_labeling_exists(0, &mut perm, &mut used, 0, total)
    }

    fn smaller_labeling_exists(
        &self,
        depth: usize,
        perm: &mut [u8; MAX_ENUM_VERTICES],
        used: &mut u16,
        determined: usize,
        total: usize,
    ) -> bool {
        if depth == self.n {
            return false;
        }
        for w in 0..self.n {
            if *used & (1 << w) != 0 {
                continue;
            }
            // Compare the candidate block with the reference block for the
            // new label `depth`, as count vectors over the min endpoint.
            let mut verdict = std::cmp::Ordering::Equal;
            let mut block = 0usize;
            for u in 0..=depth {
                let cand = if u == depth {
                    self.adj[w][w]
                } else {
                    self.adj[w][perm[u] as usize]
                };
                let reference = self.adj[u][depth];
                block += cand as usize;
                if cand != reference {
                    // More copies of a small min endpoint sorts earlier.
                    verdict = if cand > reference {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    };
                    break;
                }
            }
            match verdict {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => continue,
                std::cmp::Ordering::Equal => {
                    let det = determined + block;
                    if det == total {
                        // Every edge is already placed identically; any
                        // completion ties with the reference.
                        continue;
                    }
                    perm[depth] = w as u8;
                    *used |= 1 << w;
                    let found = self.smaller_labeling_exists(depth + 1, perm, used, det, total);
                    *used &= !(1 << w);
                    if found {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn leaf_ok(&self, g: &Multigraph) -> bool {
        !self.cons.every_edge_on_cycle || g.every_edge_on_cycle()
    }
}

impl Iterator for MultigraphEnumerator {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        if self.done {
            return None;
        }
        if self.m == 0 {
            self.done = true;
            return Some(Multigraph::from_normalized(self.n, Vec::new()));
        }
        if self.choices.len() == self.m && self.choices.len() == self.floor {
            // Fully specified prefix: emit it and stop.
            self.done = true;
            let g = self.build();
            return if self.leaf_ok(&g) { Some(g) } else { None };
        }
        loop {
            if self.cursor >= self.domain.len() {
                if self.choices.len() <= self.floor {
                    self.done = true;
                    return None;
                }
                let d = self.choices.pop().expect("non-empty stack");
                self.remove(d);
                self.cursor = d + 1;
                continue;
            }
            let d = self.cursor;
            if !self.admissible(d) {
                self.cursor += 1;
                continue;
            }
            self.add(d);
            if !self.is_canonical() {
                self.remove(d);
                self.cursor += 1;
                continue;
            }
            if self.choices.len() + 1 == self.m {
                let mut g_choices = self.choices.clone();
                g_choices.push(d);
                let edges = g_choices.iter().map(|&i| self.domain[i]).collect();
                let g = Multigraph::from_normalized(self.n, edges);
                self.remove(d);
                self.cursor = d + 1;
                if self.leaf_ok(&g) {
                    return Some(g);
                }
            } else {
                self.choices.push(d);
                self.cursor = d;
            }
        }
    }
}

/// Canonical choice prefixes of length `min(depth, m)`; the subtrees they
/// root partition the enumeration, so they can be consumed in parallel and
/// re-merged in prefix order.
pub fn split_prefixes(
    n: usize,
    m: usize,
    cons: EnumConstraints,
    depth: usize,
) -> Result<Vec<Vec<usize>>> {
    let depth = depth.min(m);
    if depth == 0 {
        return Ok(vec![Vec::new()]);
    }
    // Enumerate canonical prefixes of exactly `depth` edges by running the
    // ordinary enumerator with the prefix length as the edge count and no
    // leaf-only constraints.
    let mut relaxed = cons;
    relaxed.every_edge_on_cycle = false;
    let mut out = Vec::new();
    let mut en = MultigraphEnumerator::new(n, depth, relaxed)?;
    while let Some(g) = en.next() {
        let prefix = g
            .edges()
            .map(|(u, v)| {
                // Domain index of (u, v) with u <= v in (max, min) order.
                v * (v + 1) / 2 + u
            })
            .collect();
        out.push(prefix);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, m: usize, cons: EnumConstraints) -> usize {
        MultigraphEnumerator::new(n, m, cons).unwrap().count()
    }

    #[test]
    fn two_vertices_three_edges() {
        // Multisets of {loop@0, loop@1, link} of size 3 up to swapping the
        // vertices: (3,0,0)~(0,3,0), (2,1,0)~(1,2,0), (2,0,1)~(0,2,1),
        // (1,1,1), (1,0,2)~(0,1,2), (0,0,3) -> 6 classes.
        assert_eq!(count(2, 3, EnumConstraints::none()), 6);
    }

    #[test]
    fn one_vertex_two_loops() {
        assert_eq!(count(1, 2, EnumConstraints::none()), 1);
    }

    #[test]
    fn two_vertices_two_edges_on_cycles() {
        // Digon, or two loops (same vertex / different vertices): the two
        // loop placements are distinguished; a loop plus a link fails the
        // cycle constraint.
        assert_eq!(count(2, 2, EnumConstraints::on_cycles()), 3);
    }

    #[test]
    fn prefix_split_covers_everything() {
        let cons = EnumConstraints::none();
        let all: Vec<_> = MultigraphEnumerator::new(3, 4, cons).unwrap().collect();
        let mut merged = Vec::new();
        for prefix in split_prefixes(3, 4, cons, 2).unwrap() {
            merged.extend(MultigraphEnumerator::with_prefix(3, 4, cons, &prefix).unwrap());
        }
        assert_eq!(all, merged);
    }

    #[test]
    fn no_two_isomorphic_small() {
        // Cross-check against labeled enumeration with a permutation oracle.
        for n in 1..=4usize {
            for m in 0..=5usize {
                isomorph_free_check(n, m);
            }
        }
    }

    fn isomorph_free_check(n: usize, m: usize) {
        let canonical: Vec<Multigraph> =
            MultigraphEnumerator::new(n, m, EnumConstraints::none())
                .unwrap()
                .collect();
        // All labeled multisets, canonized by brute force over all vertex
        // permutations.
        let mut domain = Vec::new();
        for v in 0..n {
            for u in 0..=v {
                domain.push((u, v));
            }
        }
        let mut classes = std::collections::HashSet::new();
        let mut multiset = vec![0usize; m];
        'outer: loop {
            let edges: Vec<(usize, usize)> = multiset.iter().map(|&d| domain[d]).collect();
            classes.insert(brute_canonical(n, &edges));
            // Advance the non-decreasing multiset.
            let mut i = m;
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                if multiset[i] + 1 < domain.len() {
                    let v = multiset[i] + 1;
                    for x in multiset.iter_mut().skip(i) {
                        *x = v;
                    }
                    continue 'outer;
                }
            }
        }
        if m == 0 {
            assert_eq!(canonical.len(), 1);
            return;
        }
        assert_eq!(canonical.len(), classes.len(), "n={n} m={m}");
        // And the enumerator's graphs are pairwise non-isomorphic.
        let keys: std::collections::HashSet<_> = canonical
            .iter()
            .map(|g| brute_canonical(n, &g.edges().collect::<Vec<_>>()))
            .collect();
        assert_eq!(keys.len(), canonical.len());
    }

    fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        permute(&mut perm, 0, &mut |p| {
            let mut img: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u], p[v]);
                    (a.max(b), a.min(b))
                })
                .collect();
            img.sort_unstable();
            if best.as_ref().map_or(true, |b| img < *b) {
                best = Some(img);
            }
        });
        best.unwrap()
    }

    fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(perm, k + 1, f);
            perm.swap(k, i);
        }
    }
}
