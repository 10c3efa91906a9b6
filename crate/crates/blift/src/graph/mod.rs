//! Labeled multigraphs and the graph-side constructions the engine uses:
//! cycles, si/co reductions, Whitney switches, 1-sums, subdivision profiles,
//! cycle matroids and canonical enumeration.

mod cycles;
pub mod enumerate;
mod subdivision;

pub use cycles::CycleData;
pub use enumerate::{EnumConstraints, MultigraphEnumerator};
pub use subdivision::SubdivisionProfile;

use crate::bits::EdgeSet;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use std::fmt;

/// Hard cap on edge labels (edge sets are 32-bit masks).
pub const MAX_EDGES: usize = 32;
/// Hard cap on vertices (vertex sets are 64-bit masks).
pub const MAX_VERTICES: usize = 64;

/// A labeled multigraph. Loops, parallel edges and isolated vertices are all
/// permitted; edge `i` is the `i`-th entry of the edge list, endpoints are
/// stored with `u <= v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(u8, u8)>,
}

/// Relabeling of surviving edges after an operation: `map[old]` is the new
/// dense label, or `None` if the edge was removed. Order-preserving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    map: Vec<Option<usize>>,
}

impl LabelMap {
    pub(crate) fn identity(m: usize) -> Self {
        LabelMap {
            map: (0..m).map(Some).collect(),
        }
    }

    pub(crate) fn from_kept(m: usize, kept: EdgeSet) -> Self {
        let mut next = 0;
        LabelMap {
            map: (0..m)
                .map(|i| {
                    if kept.contains(i) {
                        next += 1;
                        Some(next - 1)
                    } else {
                        None
                    }
                })
                .collect(),
        }
    }

    pub fn get(&self, old: usize) -> Option<usize> {
        self.map.get(old).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `self` then `next`.
    pub fn compose(&self, next: &LabelMap) -> LabelMap {
        LabelMap {
            map: self
                .map
                .iter()
                .map(|s| s.and_then(|i| next.get(i)))
                .collect(),
        }
    }

    /// Push a surviving edge set through the map.
    pub fn image(&self, set: EdgeSet) -> EdgeSet {
        EdgeSet::from_iter(set.iter().filter_map(|e| self.get(e)))
    }
}

/// Non-trivial parallel and series classes plus the loop set of a graph.
/// Trivial (singleton) classes are omitted: they carry no information for
/// si/co reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClasses {
    pub parallel: Vec<EdgeSet>,
    pub series: Vec<EdgeSet>,
    pub loops: EdgeSet,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > MAX_EDGES {
            return Err(Error::Capacity(format!(
                "{} edges exceeds the {MAX_EDGES}-edge cap",
                edges.len()
            )));
        }
        if vertex_count > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "{vertex_count} vertices exceeds the {MAX_VERTICES}-vertex cap"
            )));
        }
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) has an endpoint >= vertex count {vertex_count}"
                )));
            }
            norm.push((u.min(v) as u8, u.max(v) as u8));
        }
        Ok(Multigraph {
            vertex_count,
            edges: norm,
        })
    }

    pub(crate) fn from_normalized(vertex_count: usize, edges: Vec<(u8, u8)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u <= v && (v as usize) < vertex_count));
        Multigraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, i: usize) -> (usize, usize) {
        let (u, v) = self.edges[i];
        (u as usize, v as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn is_loop(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        u == v
    }

    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn loops(&self) -> EdgeSet {
        EdgeSet::from_iter((0..self.edges.len()).filter(|&i| self.is_loop(i)))
    }

    /// Degree with the usual convention that a loop adds 2.
    pub fn degree(&self, v: usize) -> usize {
        let mut d = 0;
        for &(a, b) in &self.edges {
            if a as usize == v {
                d += 1;
            }
            if b as usize == v {
                d += 1;
            }
        }
        d
    }

    /// Vertices covered by the edge set `x`, as a bit mask.
    pub fn covered_vertices(&self, x: EdgeSet) -> u64 {
        let mut mask = 0u64;
        for i in x.iter() {
            let (u, v) = self.edges[i];
            mask |= 1 << u;
            mask |= 1 << v;
        }
        mask
    }

    /// Number of connected components of `G|x` (isolated vertices dropped).
    pub fn subgraph_components(&self, x: EdgeSet) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for i in x.iter() {
            let (u, v) = self.edges[i];
            uf.union(u as usize, v as usize);
        }
        let covered = self.covered_vertices(x);
        let mut roots = 0u64;
        for v in 0..self.vertex_count {
            if covered & (1 << v) != 0 {
                roots |= 1 << uf.find(v);
            }
        }
        roots.count_ones() as usize
    }

    /// Independent-cycle count of `G|x`: `|x| - |V(G|x)| + c(G|x)`; 0 for the
    /// empty set.
    pub fn cyclomatic(&self, x: EdgeSet) -> usize {
        if x.is_empty() {
            return 0;
        }
        let verts = self.covered_vertices(x).count_ones() as usize;
        x.len() + self.subgraph_components(x) - verts
    }

    /// Number of connected components of the whole graph, isolated vertices
    /// included.
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(u, v) in &self.edges {
            uf.union(u as usize, v as usize);
        }
        (0..self.vertex_count).filter(|&v| uf.find(v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components() == 1
    }

    /// Edges lying on no cycle. Loops always lie on their own cycle; a link
    /// lies on a cycle iff its endpoints stay connected after removing it.
    pub fn cut_edges(&self) -> EdgeSet {
        let mut out = EdgeSet::empty();
        for i in 0..self.edges.len() {
            let (u, v) = self.edges[i];
            if u == v {
                continue;
            }
            let mut uf = UnionFind::new(self.vertex_count);
            for (j, &(a, b)) in self.edges.iter().enumerate() {
                if j != i {
                    uf.union(a as usize, b as usize);
                }
            }
            if uf.find(u as usize) != uf.find(v as usize) {
                out.insert(i);
            }
        }
        out
    }

    /// True when every edge lies on some cycle (the 2-edge-connectivity
    /// convention used throughout; the graph may be disconnected).
    pub fn every_edge_on_cycle(&self) -> bool {
        self.cut_edges().is_empty()
    }

    /// Deletion followed by contraction, with a dense order-preserving
    /// relabeling of the surviving edges. Contracting a loop deletes it.
    pub fn minor(&self, delete: EdgeSet, contract: EdgeSet) -> Result<(Multigraph, LabelMap)> {
        if delete.intersects(contract) {
            return Err(Error::InvalidArgument(format!(
                "delete {delete} and contract {contract} overlap"
            )));
        }
        let m = self.edges.len();
        let all = self.full_edge_set();
        if !delete.is_subset(all) || !contract.is_subset(all) {
            return Err(Error::InvalidArgument(
                "delete/contract sets reference labels outside the graph".into(),
            ));
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for i in contract.iter() {
            let (u, v) = self.edges[i];
            uf.union(u as usize, v as usize);
        }
        // Renumber vertex classes by their smallest representative.
        let mut class_of = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = uf.find(v);
            if class_of[r] == usize::MAX {
                class_of[r] = next;
                next += 1;
            }
        }
        let kept = all.difference(delete).difference(contract);
        let mut edges = Vec::with_capacity(kept.len());
        for i in kept.iter() {
            let (u, v) = self.edges[i];
            let (a, b) = (class_of[uf.find(u as usize)], class_of[uf.find(v as usize)]);
            edges.push((a.min(b) as u8, a.max(b) as u8));
        }
        Ok((
            Multigraph {
                vertex_count: next,
                edges,
            },
            LabelMap::from_kept(m, kept),
        ))
    }

    /// si(G): delete all loops, keep the smallest label of each non-trivial
    /// parallel class.
    pub fn simplify(&self) -> (Multigraph, LabelMap) {
        let mut kept = EdgeSet::empty();
        let mut seen: Vec<(u8, u8)> = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                continue;
            }
            if !seen.contains(&(u, v)) {
                seen.push((u, v));
                kept.insert(i);
            }
        }
        let edges = kept.iter().map(|i| self.edges[i]).collect();
        (
            Multigraph {
                vertex_count: self.vertex_count,
                edges,
            },
            LabelMap::from_kept(self.edges.len(), kept),
        )
    }

    pub fn is_simple(&self) -> bool {
        let (s, _) = self.simplify();
        s.edge_count() == self.edge_count()
    }

    /// co(G): contract all cut-edges, then all but the smallest label of each
    /// non-trivial series class, and iterate to a fixpoint.
    pub fn cosimplify(&self) -> (Multigraph, LabelMap) {
        let mut g = self.clone();
        let mut map = LabelMap::identity(self.edges.len());
        loop {
            let cut = g.cut_edges();
            if !cut.is_empty() {
                let (h, step) = g.minor(EdgeSet::empty(), cut).expect("disjoint");
                g = h;
                map = map.compose(&step);
                continue;
            }
            let classes = g.edge_classes();
            let mut contract = EdgeSet::empty();
            for class in &classes.series {
                let keep = class.smallest().expect("non-trivial class");
                contract = contract.union(class.without(keep));
            }
            if contract.is_empty() {
                return (g, map);
            }
            let (h, step) = g.minor(EdgeSet::empty(), contract).expect("disjoint");
            g = h;
            map = map.compose(&step);
        }
    }

    pub fn is_cosimple(&self) -> bool {
        self.cut_edges().is_empty() && self.edge_classes().series.is_empty()
    }

    /// Non-trivial parallel classes, non-trivial series classes and loops.
    ///
    /// Series classes only contain edges lying on at least one cycle; two
    /// edges are in series when no cycle meets them in exactly one element
    /// and some cycle contains both.
    pub fn edge_classes(&self) -> EdgeClasses {
        let m = self.edges.len();
        let loops = self.loops();

        let mut parallel = Vec::new();
        let mut grouped: Vec<((u8, u8), EdgeSet)> = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u == v {
                continue;
            }
            match grouped.iter_mut().find(|(key, _)| *key == (u, v)) {
                Some((_, set)) => set.insert(i),
                None => grouped.push(((u, v), EdgeSet::singleton(i))),
            }
        }
        for (_, set) in grouped {
            if set.len() >= 2 {
                parallel.push(set);
            }
        }

        let cycles = self.cycles();
        let mut cyclic = EdgeSet::empty();
        for c in &cycles {
            cyclic = cyclic.union(c.edges);
        }
        let mut uf = UnionFind::new(m.max(1));
        let mut in_series_class = EdgeSet::empty();
        for e in cyclic.iter() {
            for f in cyclic.iter().filter(|&f| f > e) {
                let mut joint = false;
                let mut split = false;
                for c in &cycles {
                    let he = c.edges.contains(e);
                    let hf = c.edges.contains(f);
                    if he && hf {
                        joint = true;
                    } else if he != hf {
                        split = true;
                        break;
                    }
                }
                if joint && !split {
                    uf.union(e, f);
                    in_series_class.insert(e);
                    in_series_class.insert(f);
                }
            }
        }
        let mut series = Vec::new();
        for e in in_series_class.iter() {
            if uf.find(e) == e {
                let class =
                    EdgeSet::from_iter(in_series_class.iter().filter(|&f| uf.find(f) == e));
                series.push(class);
            }
        }
        series.sort_by(|a, b| a.lex_cmp(*b));
        parallel.sort_by(|a, b| a.lex_cmp(*b));

        EdgeClasses {
            parallel,
            series,
            loops,
        }
    }

    /// Whitney switching on the 2-vertex cut `{u1, u2}`: the edges outside
    /// `part1` are reattached with `u1` and `u2` exchanged. Labels survive
    /// unchanged, and the labeled cycle family is preserved.
    pub fn whitney_switch(&self, part1: EdgeSet, u1: usize, u2: usize) -> Result<Multigraph> {
        let all = self.full_edge_set();
        if !part1.is_subset(all) || part1.is_empty() || part1 == all {
            return Err(Error::InvalidArgument(
                "part1 must be a nonempty proper subset of the edge labels".into(),
            ));
        }
        if u1 == u2 || u1 >= self.vertex_count || u2 >= self.vertex_count {
            return Err(Error::InvalidArgument(format!(
                "({u1},{u2}) is not a pair of distinct vertices"
            )));
        }
        let part2 = all.difference(part1);
        let shared = self.covered_vertices(part1) & self.covered_vertices(part2);
        if shared != (1u64 << u1) | (1u64 << u2) {
            return Err(Error::InvalidArgument(format!(
                "the partition shares vertices {shared:#b}, not exactly {{{u1},{u2}}}"
            )));
        }
        let swap = |w: u8| -> u8 {
            if w as usize == u1 {
                u2 as u8
            } else if w as usize == u2 {
                u1 as u8
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                if part2.contains(i) {
                    let (a, b) = (swap(u), swap(v));
                    (a.min(b), a.max(b))
                } else {
                    (u, v)
                }
            })
            .collect();
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// 1-sum along marker loops: the loop vertices are identified and both
    /// loops removed. Labels of `other` are shifted after the surviving
    /// labels of `self`; both relabelings are returned.
    pub fn one_sum(
        &self,
        e1: usize,
        other: &Multigraph,
        e2: usize,
    ) -> Result<(Multigraph, LabelMap, LabelMap)> {
        if e1 >= self.edge_count() || !self.is_loop(e1) {
            return Err(Error::InvalidArgument(format!(
                "marker edge {e1} is not a loop of the first graph"
            )));
        }
        if e2 >= other.edge_count() || !other.is_loop(e2) {
            return Err(Error::InvalidArgument(format!(
                "marker edge {e2} is not a loop of the second graph"
            )));
        }
        let n = self.vertex_count + other.vertex_count - 1;
        if n > MAX_VERTICES || self.edge_count() + other.edge_count() - 2 > MAX_EDGES {
            return Err(Error::Capacity("1-sum exceeds size caps".into()));
        }
        let a = self.edges[e1].0;
        let b = other.edges[e2].0 as usize;
        let remap = |w: u8| -> u8 {
            let w = w as usize;
            if w == b {
                a
            } else if w < b {
                (self.vertex_count + w) as u8
            } else {
                (self.vertex_count + w - 1) as u8
            }
        };
        let mut edges = Vec::with_capacity(self.edge_count() + other.edge_count() - 2);
        for (i, &e) in self.edges.iter().enumerate() {
            if i != e1 {
                edges.push(e);
            }
        }
        for (i, &(u, v)) in other.edges.iter().enumerate() {
            if i != e2 {
                let (x, y) = (remap(u), remap(v));
                edges.push((x.min(y), x.max(y)));
            }
        }
        let map1 = LabelMap::from_kept(self.edge_count(), self.full_edge_set().without(e1));
        let shift = self.edge_count() - 1;
        let map2 = LabelMap {
            map: (0..other.edge_count())
                .map(|i| {
                    if i == e2 {
                        None
                    } else if i < e2 {
                        Some(shift + i)
                    } else {
                        Some(shift + i - 1)
                    }
                })
                .collect(),
        };
        Ok((
            Multigraph {
                vertex_count: n,
                edges,
            },
            map1,
            map2,
        ))
    }

    /// The graphic matroid: circuits are exactly the cycles.
    pub fn cycle_matroid(&self) -> Result<Matroid> {
        let circuits = self.cycles().iter().map(|c| c.edges).collect::<Vec<_>>();
        Matroid::from_circuits(self.edge_count(), circuits)
    }

    /// Key that orders graphs canonically: vertex count, then the edge list
    /// in (max, min) column order. Canonical enumeration emits graphs in
    /// strictly increasing key order.
    pub fn canonical_key(&self) -> (usize, Vec<(u8, u8)>) {
        let mut edges: Vec<(u8, u8)> = self.edges.iter().map(|&(u, v)| (v, u)).collect();
        edges.sort_unstable();
        (self.vertex_count, edges)
    }
}

/// Labeled 2-isomorphism: the labeled cycle families coincide.
pub fn labeled_two_isomorphic(g1: &Multigraph, g2: &Multigraph) -> Result<bool> {
    if g1.edge_count() != g2.edge_count() {
        return Err(Error::InvalidArgument(
            "labeled 2-isomorphism needs identical edge-label sets".into(),
        ));
    }
    let mut c1: Vec<EdgeSet> = g1.cycles().iter().map(|c| c.edges).collect();
    let mut c2: Vec<EdgeSet> = g2.cycles().iter().map(|c| c.edges).collect();
    c1.sort_unstable();
    c2.sort_unstable();
    Ok(c1 == c2)
}

/// Unlabeled 2-isomorphism, decided through cycle-matroid isomorphism.
pub fn unlabeled_two_isomorphic(g1: &Multigraph, g2: &Multigraph) -> Result<bool> {
    let m1 = g1.cycle_matroid()?;
    let m2 = g2.cycle_matroid()?;
    Ok(crate::matroid::iso::find_isomorphism(&m1, &m2).is_some())
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges={:?})", self.vertex_count, self.edges)
    }
}

// ---------------------------------------------------------------------------
// Standard constructions
// ---------------------------------------------------------------------------

pub fn complete_graph(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Multigraph::new(n, edges).expect("within caps")
}

pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Multigraph::new(a + b, edges).expect("within caps")
}

/// Two vertices joined by `k` parallel edges.
pub fn k2n(k: usize) -> Multigraph {
    Multigraph::new(2, vec![(0, 1); k]).expect("within caps")
}

pub fn cycle_graph(len: usize) -> Multigraph {
    assert!(len >= 1);
    if len == 1 {
        return Multigraph::new(1, vec![(0, 0)]).expect("within caps");
    }
    let edges = (0..len).map(|i| (i, (i + 1) % len)).collect();
    Multigraph::new(len, edges).expect("within caps")
}

pub fn path_graph(edges: usize) -> Multigraph {
    let list = (0..edges).map(|i| (i, i + 1)).collect();
    Multigraph::new(edges + 1, list).expect("within caps")
}

/// Wheel with `k` spokes: hub 0, rim vertices `1..=k`. Rim edges come first
/// (labels `0..k`), spokes after (labels `k..2k`).
pub fn wheel_graph(k: usize) -> Multigraph {
    assert!(k >= 2);
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((1 + i, 1 + (i + 1) % k));
    }
    for i in 0..k {
        edges.push((0, 1 + i));
    }
    Multigraph::new(k + 1, edges).expect("within caps")
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Renders the exact interchange format: `GRAPH <n> <m>` then one `<u> <v>`
/// line per edge in label order.
pub fn render_graph(g: &Multigraph) -> String {
    let mut out = format!("GRAPH {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the graph text format; `#` starts a comment line.
pub fn parse_graph(text: &str, file: &str) -> Result<Multigraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(file, 0, "empty graph file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("GRAPH") {
        return Err(Error::parse(file, ln, "expected 'GRAPH <n> <m>'"));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(file, ln, "bad vertex count"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(file, ln, "bad edge count"))?;
    if parts.next().is_some() {
        return Err(Error::parse(file, ln, "trailing tokens after header"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(file, 0, format!("expected {m} edge lines")))?;
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(file, ln, "bad edge endpoint"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(file, ln, "bad edge endpoint"))?;
        if parts.next().is_some() {
            return Err(Error::parse(file, ln, "trailing tokens on edge line"));
        }
        if u > v {
            return Err(Error::parse(file, ln, format!("endpoints must satisfy u <= v, got {u} {v}")));
        }
        if v >= n {
            return Err(Error::parse(file, ln, format!("endpoint {v} >= vertex count {n}")));
        }
        edges.push((u, v));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(file, ln, "unexpected content after edge list"));
    }
    Multigraph::new(n, edges)
}

// ---------------------------------------------------------------------------

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Union keeping the smaller root as representative.
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Bits32;

    #[test]
    fn k4_minor_by_contraction() {
        let k4 = complete_graph(4);
        let (g, map) = k4.minor(EdgeSet::empty(), EdgeSet::singleton(0)).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.edge_classes().parallel.len(), 2);
        assert_eq!(map.get(0), None);
        assert_eq!(map.get(5), Some(4));
    }

    #[test]
    fn deleting_a_loop_keeps_vertices() {
        let g = Multigraph::new(2, vec![(0, 0), (0, 1)]).unwrap();
        let (h, _) = g.minor(EdgeSet::singleton(0), EdgeSet::empty()).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn contracting_spanning_tree_of_triangle_leaves_loop() {
        let tri = cycle_graph(3);
        let (g, _) = tri
            .minor(EdgeSet::empty(), EdgeSet::from_iter([0, 1]))
            .unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_loop(0));
    }

    #[test]
    fn simplify_k24_keeps_label_zero() {
        let g = k2n(4);
        let (s, map) = g.simplify();
        assert_eq!(s.edge_count(), 1);
        assert_eq!(map.get(0), Some(0));
        assert_eq!(map.get(1), None);
    }

    #[test]
    fn simplify_single_loop() {
        let g = Multigraph::new(1, vec![(0, 0)]).unwrap();
        let (s, _) = g.simplify();
        assert_eq!(s.edge_count(), 0);
        assert_eq!(s.vertex_count(), 1);
    }

    #[test]
    fn cosimplify_triangle_to_loop() {
        let (g, _) = cycle_graph(3).cosimplify();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_loop(0));
    }

    #[test]
    fn cosimplify_subdivided_theta() {
        // Theta with one branch subdivided: a,b direct, then c=(0,2), d=(2,1).
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (0, 2), (1, 2)]).unwrap();
        let (h, map) = g.cosimplify();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 3);
        assert!(h.edge_classes().parallel.len() == 1);
        // Series class {c,d} keeps c (smallest label).
        assert_eq!(map.get(2), Some(2));
        assert_eq!(map.get(3), None);
    }

    #[test]
    fn cosimplify_k24_unchanged() {
        let g = k2n(4);
        let (h, _) = g.cosimplify();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.vertex_count(), 2);
    }

    #[test]
    fn cut_edges_of_path_and_theta() {
        assert_eq!(path_graph(3).cut_edges().len(), 3);
        assert!(k2n(3).cut_edges().is_empty());
        // Theta plus one pendant edge.
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.cut_edges(), EdgeSet::singleton(3));
    }

    #[test]
    fn edge_classes_subdivided_k24() {
        // a,b,c parallel 0-1; d=(0,2), e=(2,1) the subdivided fourth edge.
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (0, 1), (0, 2), (1, 2)]).unwrap();
        let cls = g.edge_classes();
        assert_eq!(cls.parallel, vec![Bits32::from_iter([0, 1, 2])]);
        assert_eq!(cls.series, vec![Bits32::from_iter([3, 4])]);
        assert!(cls.loops.is_empty());
    }

    #[test]
    fn edge_classes_four_cycle_and_loops() {
        let c4 = cycle_graph(4);
        let cls = c4.edge_classes();
        assert_eq!(cls.series, vec![Bits32::full(4)]);
        assert!(cls.parallel.is_empty());

        let g = Multigraph::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let cls = g.edge_classes();
        assert_eq!(cls.loops, Bits32::full(2));
        assert!(cls.parallel.is_empty());
        assert!(cls.series.is_empty());
    }

    #[test]
    fn whitney_switch_preserves_cycles() {
        // 4-cycle split at the antipodal pair {0, 2}.
        let c4 = cycle_graph(4);
        let part1 = EdgeSet::from_iter([0, 1]);
        let g = c4.whitney_switch(part1, 0, 2).unwrap();
        assert!(labeled_two_isomorphic(&c4, &g).unwrap());

        // Degenerate partition errors out.
        assert!(c4.whitney_switch(c4.full_edge_set(), 0, 2).is_err());
    }

    #[test]
    fn whitney_switch_two_triangles() {
        // Two triangles sharing exactly {0, 1}.
        let g = Multigraph::new(4, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let part1 = EdgeSet::from_iter([0, 1, 2]);
        let h = g.whitney_switch(part1, 0, 1).unwrap();
        assert!(labeled_two_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn one_sum_triangle_digon() {
        // Triangle with a marker loop at vertex 0; digon with a marker loop.
        let g1 = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2), (0, 0)]).unwrap();
        let g2 = Multigraph::new(2, vec![(0, 1), (0, 1), (1, 1)]).unwrap();
        let (s, map1, map2) = g1.one_sum(3, &g2, 2).unwrap();
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(s.edge_count(), 5);
        assert!(s.loops().is_empty());
        assert_eq!(map1.get(0), Some(0));
        assert_eq!(map2.get(0), Some(3));

        // Marker must be a loop.
        assert!(g1.one_sum(0, &g2, 2).is_err());
    }

    #[test]
    fn one_sum_of_bare_loops() {
        let l = Multigraph::new(1, vec![(0, 0)]).unwrap();
        let (s, _, _) = l.one_sum(0, &l, 0).unwrap();
        assert_eq!(s.vertex_count(), 1);
        assert_eq!(s.edge_count(), 0);
    }

    #[test]
    fn text_format_round_trip() {
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (2, 2)]).unwrap();
        let text = render_graph(&g);
        let h = parse_graph(&text, "test").unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn text_format_rejects_unordered_endpoints() {
        let err = parse_graph("GRAPH 2 1\n1 0\n", "bad").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
