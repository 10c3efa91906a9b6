//! Explicit-circuit matroids on at most 32 elements: construction with axiom
//! validation, rank, duality, minors, sums, connectivity, reductions, clones
//! and the named catalog.

pub mod catalog;
pub mod iso;
pub mod minor_search;

use crate::bits::{Bits32, ElemSet, MAX_GROUND};
use crate::caps::NodeBudget;
use crate::error::{Error, Result};
use crate::graph::LabelMap;
use std::fmt;

/// A matroid given by its ground size and its full circuit list. Circuits
/// are kept sorted lexicographically (as element sequences) with the rank
/// cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: usize,
    circuits: Vec<ElemSet>,
    rank: usize,
}

/// A bijection between ground sets, as an index array: `map[i]` is the image
/// of element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundMap {
    map: Vec<usize>,
}

impl GroundMap {
    pub fn new(map: Vec<usize>) -> Self {
        GroundMap { map }
    }

    pub fn identity(n: usize) -> Self {
        GroundMap {
            map: (0..n).collect(),
        }
    }

    pub fn get(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, set: ElemSet) -> ElemSet {
        ElemSet::from_iter(set.iter().map(|i| self.map[i]))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> GroundMap {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        GroundMap { map: inv }
    }
}

/// Loops, coloops and the non-trivial parallel/series classes of a matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementClasses {
    pub loops: ElemSet,
    pub coloops: ElemSet,
    pub parallel: Vec<ElemSet>,
    pub series: Vec<ElemSet>,
}

/// Verdict of the exhaustive 1/2-separation search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connectivity {
    Disconnected { separation: (ElemSet, ElemSet) },
    ConnectedNot3 { separation: (ElemSet, ElemSet) },
    ThreeConnected,
}

impl Connectivity {
    pub fn is_connected(&self) -> bool {
        !matches!(self, Connectivity::Disconnected { .. })
    }

    pub fn is_three_connected(&self) -> bool {
        matches!(self, Connectivity::ThreeConnected)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Connectivity::Disconnected { .. } => "disconnected",
            Connectivity::ConnectedNot3 { .. } => "connected_not_3",
            Connectivity::ThreeConnected => "three_connected",
        }
    }
}

impl Matroid {
    /// Validated constructor: checks ground capacity and both circuit axioms
    /// (antichain and elimination), naming an offending pair on failure.
    pub fn from_circuits(ground: usize, mut circuits: Vec<ElemSet>) -> Result<Self> {
        if ground > MAX_GROUND {
            return Err(Error::Capacity(format!(
                "{ground} elements exceeds the {MAX_GROUND}-element cap"
            )));
        }
        let full = Bits32::full(ground);
        for c in &circuits {
            if c.is_empty() {
                return Err(Error::Construction("the empty set cannot be a circuit".into()));
            }
            if !c.is_subset(full) {
                return Err(Error::Construction(format!(
                    "circuit {c} leaves the ground set 0..{ground}"
                )));
            }
        }
        circuits.sort_by(|a, b| a.lex_cmp(*b));
        for i in 0..circuits.len() {
            for j in 0..circuits.len() {
                if i != j && circuits[i].is_subset(circuits[j]) {
                    return Err(Error::Construction(format!(
                        "containment between circuits {} and {}",
                        circuits[i], circuits[j]
                    )));
                }
            }
        }
        for i in 0..circuits.len() {
            for j in (i + 1)..circuits.len() {
                let (c1, c2) = (circuits[i], circuits[j]);
                let common = c1.intersection(c2);
                if common.is_empty() {
                    continue;
                }
                let union = c1.union(c2);
                for e in common.iter() {
                    let target = union.without(e);
                    if !circuits.iter().any(|c| c.is_subset(target)) {
                        return Err(Error::Construction(format!(
                            "elimination fails for circuits {c1} and {c2} at element {e}"
                        )));
                    }
                }
            }
        }
        Ok(Self::from_circuits_unchecked(ground, circuits))
    }

    /// Constructor for circuit families already known to satisfy the axioms
    /// (duals, minors, cycle families). Sorts and computes the rank.
    pub(crate) fn from_circuits_unchecked(ground: usize, mut circuits: Vec<ElemSet>) -> Self {
        circuits.sort_by(|a, b| a.lex_cmp(*b));
        let rank = rank_of_set(&circuits, Bits32::full(ground));
        Matroid {
            ground,
            circuits,
            rank,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.ground - self.rank
    }

    pub fn circuits(&self) -> &[ElemSet] {
        &self.circuits
    }

    pub fn full_set(&self) -> ElemSet {
        Bits32::full(self.ground)
    }

    /// Size multiset of the circuits, ascending; a cheap isomorphism
    /// invariant.
    pub fn circuit_size_profile(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.circuits.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn is_independent(&self, x: ElemSet) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(x))
    }

    /// Rank of a subset by greedy extension; greedy is exact on matroids.
    pub fn rank_of(&self, x: ElemSet) -> usize {
        rank_of_set(&self.circuits, x)
    }

    /// True when `x` is a circuit.
    pub fn is_circuit(&self, x: ElemSet) -> bool {
        self.circuits.contains(&x)
    }

    /// Dual matroid: cocircuits are the complements of hyperplanes, and the
    /// hyperplanes are the closures of the independent (r-1)-subsets.
    pub fn dual(&self) -> Matroid {
        let n = self.ground;
        if self.rank == 0 {
            return Matroid {
                ground: n,
                circuits: Vec::new(),
                rank: n,
            };
        }
        let by_elem = self.circuits_by_element();
        let mut hyperplanes = std::collections::HashSet::new();
        let mut stack: Vec<(ElemSet, usize)> = vec![(ElemSet::empty(), 0)];
        let target = self.rank - 1;
        while let Some((set, next)) = stack.pop() {
            if set.len() == target {
                // Close the independent set.
                let mut cl = set;
                for e in 0..n {
                    if cl.contains(e) {
                        continue;
                    }
                    let with_e = set.with(e);
                    if by_elem[e].iter().any(|c| c.is_subset(with_e)) {
                        cl.insert(e);
                    }
                }
                hyperplanes.insert(cl.0);
                continue;
            }
            for e in next..n {
                let with_e = set.with(e);
                if by_elem[e].iter().any(|c| c.is_subset(with_e)) {
                    continue;
                }
                stack.push((with_e, e + 1));
            }
        }
        let full = self.full_set();
        let cocircuits: Vec<ElemSet> = hyperplanes
            .into_iter()
            .map(|h| full.difference(Bits32(h)))
            .collect();
        let out = Matroid::from_circuits_unchecked(n, cocircuits);
        debug_assert_eq!(out.rank, n - self.rank);
        out
    }

    fn circuits_by_element(&self) -> Vec<Vec<ElemSet>> {
        let mut by_elem: Vec<Vec<ElemSet>> = vec![Vec::new(); self.ground];
        for &c in &self.circuits {
            for e in c.iter() {
                by_elem[e].push(c);
            }
        }
        by_elem
    }

    /// Deletion then contraction, with a dense order-preserving relabeling of
    /// the surviving elements. Contraction routes through dual-delete-dual.
    pub fn minor(&self, delete: ElemSet, contract: ElemSet) -> Result<(Matroid, LabelMap)> {
        if delete.intersects(contract) {
            return Err(Error::InvalidArgument(format!(
                "delete {delete} and contract {contract} overlap"
            )));
        }
        let full = self.full_set();
        if !delete.is_subset(full) || !contract.is_subset(full) {
            return Err(Error::InvalidArgument(
                "delete/contract sets leave the ground set".into(),
            ));
        }
        let kept = full.difference(delete).difference(contract);
        let deleted = self.delete_compressed(delete);
        let contract_new = contract.compress_into(full.difference(delete));
        let contracted = if contract_new.is_empty() {
            deleted
        } else {
            let dual = deleted.dual();
            let dual_deleted = dual.delete_compressed(contract_new);
            dual_deleted.dual()
        };
        Ok((contracted, label_map_from_kept(self.ground, kept)))
    }

    fn delete_compressed(&self, delete: ElemSet) -> Matroid {
        let kept = self.full_set().difference(delete);
        let circuits = self
            .circuits
            .iter()
            .filter(|c| !c.intersects(delete))
            .map(|c| c.compress_into(kept))
            .collect();
        Matroid::from_circuits_unchecked(kept.len(), circuits)
    }

    /// Direct sum; the second ground set is shifted after the first.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.ground + other.ground;
        if n > MAX_GROUND {
            return Err(Error::Capacity(format!(
                "direct sum has {n} elements, cap is {MAX_GROUND}"
            )));
        }
        let mut circuits = self.circuits.clone();
        circuits.extend(other.circuits.iter().map(|c| Bits32(c.0 << self.ground)));
        Ok(Matroid::from_circuits_unchecked(n, circuits))
    }

    /// 2-sum along basepoints `e1` of `self` and `e2` of `other`; the two
    /// basepoints are identified and removed. Elements of `self` keep their
    /// relative order, followed by the elements of `other`.
    pub fn two_sum(&self, e1: usize, other: &Matroid, e2: usize) -> Result<Matroid> {
        for (m, e, side) in [(self, e1, "first"), (other, e2, "second")] {
            if e >= m.ground {
                return Err(Error::InvalidArgument(format!(
                    "basepoint {e} outside the {side} ground set"
                )));
            }
            let is_loop = m.is_circuit(ElemSet::singleton(e));
            let is_coloop = !m.circuits.iter().any(|c| c.contains(e));
            if is_loop || is_coloop {
                return Err(Error::InvalidArgument(format!(
                    "basepoint {e} is a loop or coloop of the {side} part"
                )));
            }
        }
        let n1 = self.ground - 1;
        let n2 = other.ground - 1;
        let n = n1 + n2;
        if n > MAX_GROUND {
            return Err(Error::Capacity(format!(
                "2-sum has {n} elements, cap is {MAX_GROUND}"
            )));
        }
        let kept1 = self.full_set().without(e1);
        let kept2 = other.full_set().without(e2);
        let side1 = |c: ElemSet| c.without(e1).compress_into(kept1);
        let side2 = |c: ElemSet| Bits32(c.without(e2).compress_into(kept2).0 << n1);
        let mut circuits: Vec<ElemSet> = Vec::new();
        circuits.extend(
            self.circuits
                .iter()
                .filter(|c| !c.contains(e1))
                .map(|&c| side1(c)),
        );
        circuits.extend(
            other
                .circuits
                .iter()
                .filter(|c| !c.contains(e2))
                .map(|&c| side2(c)),
        );
        for &c1 in self.circuits.iter().filter(|c| c.contains(e1)) {
            for &c2 in other.circuits.iter().filter(|c| c.contains(e2)) {
                circuits.push(side1(c1).union(side2(c2)));
            }
        }
        Matroid::from_circuits(n, circuits)
    }

    pub fn element_classes(&self) -> ElementClasses {
        let n = self.ground;
        let mut loops = ElemSet::empty();
        let mut in_circuit = ElemSet::empty();
        for c in &self.circuits {
            in_circuit = in_circuit.union(*c);
            if c.len() == 1 {
                loops = loops.union(*c);
            }
        }
        let coloops = self.full_set().difference(in_circuit);

        let mut uf = crate::graph::UnionFind::new(n.max(1));
        let mut in_parallel = ElemSet::empty();
        for c in &self.circuits {
            if c.len() == 2 {
                let mut it = c.iter();
                let (x, y) = (it.next().unwrap(), it.next().unwrap());
                uf.union(x, y);
                in_parallel.insert(x);
                in_parallel.insert(y);
            }
        }
        let parallel = classes_of(&mut uf, in_parallel);

        let mut uf = crate::graph::UnionFind::new(n.max(1));
        let mut in_series = ElemSet::empty();
        for x in in_circuit.iter() {
            for y in in_circuit.iter().filter(|&y| y > x) {
                let mut joint = false;
                let mut split = false;
                for c in &self.circuits {
                    match (c.contains(x), c.contains(y)) {
                        (true, true) => joint = true,
                        (true, false) | (false, true) => {
                            split = true;
                            break;
                        }
                        _ => {}
                    }
                }
                if joint && !split {
                    uf.union(x, y);
                    in_series.insert(x);
                    in_series.insert(y);
                }
            }
        }
        let series = classes_of(&mut uf, in_series);

        ElementClasses {
            loops,
            coloops,
            parallel,
            series,
        }
    }

    /// co(N): contract all coloops, then all but the smallest element of
    /// each non-trivial series class, iterating to a fixpoint.
    pub fn cosimplify(&self) -> (Matroid, LabelMap) {
        let mut m = self.clone();
        let mut map = label_map_from_kept(self.ground, self.full_set());
        loop {
            let classes = m.element_classes();
            let mut contract = classes.coloops;
            for class in &classes.series {
                let keep = class.smallest().expect("non-trivial class");
                contract = contract.union(class.without(keep));
            }
            if contract.is_empty() {
                return (m, map);
            }
            let (next, step) = m
                .minor(ElemSet::empty(), contract)
                .expect("disjoint by construction");
            m = next;
            map = map.compose(&step);
        }
    }

    /// Exhaustive search for 1- and 2-separations. The first witnessing
    /// partition in lexicographic order (on the side containing element 0)
    /// is returned.
    pub fn connectivity_order(&self) -> Result<Connectivity> {
        self.connectivity_order_with(&NodeBudget::new(u64::MAX))
    }

    pub fn connectivity_order_with(&self, budget: &NodeBudget) -> Result<Connectivity> {
        let n = self.ground;
        if n < 2 {
            return Ok(Connectivity::ThreeConnected);
        }
        for k in [1usize, 2usize] {
            if let Some(sep) = self.find_separation(k, budget)? {
                return Ok(match k {
                    1 => Connectivity::Disconnected { separation: sep },
                    _ => Connectivity::ConnectedNot3 { separation: sep },
                });
            }
        }
        Ok(Connectivity::ThreeConnected)
    }

    fn find_separation(
        &self,
        k: usize,
        budget: &NodeBudget,
    ) -> Result<Option<(ElemSet, ElemSet)>> {
        let n = self.ground;
        let full = self.full_set();
        // DFS in lexicographic order over subsets containing element 0.
        let mut stack = vec![(ElemSet::singleton(0), 0usize)];
        while let Some((x, last)) = stack.pop() {
            if !budget.charge(1) {
                return Err(Error::Resource(
                    "connectivity separation search budget exhausted".into(),
                ));
            }
            let y = full.difference(x);
            if x.len() >= k && y.len() >= k && self.rank_of(x) + self.rank_of(y) <= self.rank + k - 1
            {
                return Ok(Some((x, y)));
            }
            // Extend with larger elements, pushed in reverse so the smallest
            // extension pops first (lexicographic-first witness).
            for e in ((last + 1)..n).rev() {
                if x.len() + 1 < n {
                    stack.push((x.with(e), e));
                }
            }
        }
        Ok(None)
    }

    /// Is the transposition of `x` and `y` an automorphism?
    pub fn are_clones(&self, x: usize, y: usize) -> bool {
        assert!(x != y, "clone test needs two distinct elements");
        let mut swapped: Vec<ElemSet> = self
            .circuits
            .iter()
            .map(|&c| {
                let bx = c.contains(x);
                let by = c.contains(y);
                if bx != by {
                    Bits32(c.0 ^ ((1 << x) | (1 << y)))
                } else {
                    c
                }
            })
            .collect();
        swapped.sort_by(|a, b| a.lex_cmp(*b));
        swapped == self.circuits
    }

    /// Size of the longest U(2,t) restriction: the largest subset in which
    /// every 3-element subset is a circuit. Returns 0 when there is no
    /// 3-element circuit. Exhaustive, so usable as a sound search cap.
    pub fn longest_line(&self) -> usize {
        let mut best = 0;
        for seed in self.circuits.iter().filter(|c| c.len() == 3) {
            self.extend_line(*seed, seed.iter().last().unwrap_or(0), &mut best);
        }
        best
    }

    fn extend_line(&self, line: ElemSet, from: usize, best: &mut usize) {
        *best = (*best).max(line.len());
        for d in ((from + 1)..self.ground).filter(|&d| !line.contains(d)) {
            let ok = line.iter().all(|a| {
                line.iter()
                    .filter(|&b| b > a)
                    .all(|b| self.is_circuit(ElemSet::from_iter([a, b, d])))
            });
            if ok {
                self.extend_line(line.with(d), d, best);
            }
        }
    }

    /// Some 5-element subset restricts to U(2,5).
    pub fn has_u25_restriction(&self) -> bool {
        self.longest_line() >= 5
    }

    /// Exact bound on the size of a parallel class in any graph whose lift
    /// matroid is `self`: a class of p >= 3 parallel edges restricts to
    /// U(2,p), so classes beyond `max(2, longest_line)` are impossible.
    pub fn max_parallel_bound(&self) -> usize {
        self.longest_line().max(2)
    }

    /// Upper bound on the number of loops of any graph whose lift matroid is
    /// `self`: loops are pairwise parallel in the lift.
    pub fn max_loops_bound(&self) -> usize {
        let largest = self
            .element_classes()
            .parallel
            .iter()
            .map(|c| c.len())
            .max()
            .unwrap_or(0);
        largest.max(1)
    }
}

fn classes_of(uf: &mut crate::graph::UnionFind, members: ElemSet) -> Vec<ElemSet> {
    let mut out = Vec::new();
    for e in members.iter() {
        if uf.find(e) == e {
            let class = ElemSet::from_iter(members.iter().filter(|&f| uf.find(f) == e));
            out.push(class);
        }
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

fn label_map_from_kept(n: usize, kept: ElemSet) -> LabelMap {
    LabelMap::from_kept(n, kept)
}

/// Greedy rank of `x` against a circuit list.
pub(crate) fn rank_of_set(circuits: &[ElemSet], x: ElemSet) -> usize {
    let mut ind = ElemSet::empty();
    for e in x.iter() {
        let trial = ind.with(e);
        if !circuits.iter().any(|c| c.is_subset(trial)) {
            ind = trial;
        }
    }
    ind.len()
}

/// Circuits of a single-element deletion, in the original labels.
pub(crate) fn delete_circuits(circuits: &[ElemSet], e: usize) -> Vec<ElemSet> {
    circuits.iter().filter(|c| !c.contains(e)).copied().collect()
}

/// Circuits of a single-element contraction, in the original labels: the
/// minimal nonempty sets among `{C - e}`.
pub(crate) fn contract_circuits(circuits: &[ElemSet], e: usize) -> Vec<ElemSet> {
    let mut cands: Vec<ElemSet> = circuits
        .iter()
        .map(|c| c.without(e))
        .filter(|c| !c.is_empty())
        .collect();
    cands.sort_unstable_by_key(|c| c.len());
    let mut kept: Vec<ElemSet> = Vec::with_capacity(cands.len());
    'outer: for c in cands {
        for k in &kept {
            if k.is_subset(c) {
                continue 'outer;
            }
        }
        kept.push(c);
    }
    kept
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid(n={}, r={}, circuits={:?})",
            self.ground, self.rank, self.circuits
        )
    }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// `MATROID <n> <r>` / `CIRCUITS <k>` / one line of strictly increasing
/// element indices per circuit, sorted lexicographically.
pub fn render_matroid(m: &Matroid) -> String {
    let mut out = format!("MATROID {} {}\n", m.ground_size(), m.rank());
    out.push_str(&format!("CIRCUITS {}\n", m.circuits().len()));
    for c in m.circuits() {
        let items: Vec<String> = c.iter().map(|e| e.to_string()).collect();
        out.push_str(&items.join(" "));
        out.push('\n');
    }
    out
}

/// Parses and validates a matroid record; the declared rank must match the
/// computed rank.
pub fn parse_matroid(text: &str, file: &str) -> Result<Matroid> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::parse(file, 0, "empty matroid record"))?;
    let (n, declared_rank) = parse_matroid_header(header)
        .ok_or_else(|| Error::parse(file, ln, "expected 'MATROID <n> <r>'"))?;
    if n > MAX_GROUND {
        return Err(Error::Capacity(format!(
            "{n} elements exceeds the {MAX_GROUND}-element cap"
        )));
    }
    let (ln, counts) = lines
        .next()
        .ok_or_else(|| Error::parse(file, ln, "expected 'CIRCUITS <k>'"))?;
    let mut parts = counts.split_whitespace();
    if parts.next() != Some("CIRCUITS") {
        return Err(Error::parse(file, ln, "expected 'CIRCUITS <k>'"));
    }
    let k: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(file, ln, "bad circuit count"))?;
    let mut circuits = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(file, 0, format!("expected {k} circuit lines")))?;
        let mut prev: Option<usize> = None;
        let mut c = ElemSet::empty();
        for tok in line.split_whitespace() {
            let e: usize = tok
                .parse()
                .map_err(|_| Error::parse(file, ln, format!("bad element '{tok}'")))?;
            if e >= n {
                return Err(Error::parse(file, ln, format!("element {e} >= ground size {n}")));
            }
            if prev.is_some_and(|p| p >= e) {
                return Err(Error::parse(file, ln, "elements must be strictly increasing"));
            }
            prev = Some(e);
            c.insert(e);
        }
        if c.is_empty() {
            return Err(Error::parse(file, ln, "empty circuit line"));
        }
        circuits.push(c);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(file, ln, "unexpected content after circuits"));
    }
    let m = Matroid::from_circuits(n, circuits)?;
    if m.rank() != declared_rank {
        return Err(Error::parse(
            file,
            1,
            format!(
                "declared rank {declared_rank} does not match computed rank {}",
                m.rank()
            ),
        ));
    }
    Ok(m)
}

/// Header fields of a matroid record, without building it. Used to skip
/// over-cap records in catalog streams.
pub fn parse_matroid_header(header: &str) -> Option<(usize, usize)> {
    let mut parts = header.split_whitespace();
    if parts.next() != Some("MATROID") {
        return None;
    }
    let n: usize = parts.next()?.parse().ok()?;
    let r: usize = parts.next()?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some((n, r))
}

// ---------------------------------------------------------------------------

/// Uniform matroid U(r, n): circuits are all (r+1)-subsets.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n > MAX_GROUND {
        return Err(Error::Capacity(format!(
            "{n} elements exceeds the {MAX_GROUND}-element cap"
        )));
    }
    if r > n {
        return Err(Error::InvalidArgument(format!("uniform({r},{n}) needs r <= n")));
    }
    let mut circuits = Vec::new();
    if r < n {
        let mut buf = Vec::new();
        subsets_of_size(n, r + 1, 0, &mut buf, &mut circuits);
    }
    Ok(Matroid::from_circuits_unchecked(n, circuits))
}

fn subsets_of_size(
    n: usize,
    size: usize,
    start: usize,
    buf: &mut Vec<usize>,
    out: &mut Vec<ElemSet>,
) {
    if buf.len() == size {
        out.push(ElemSet::from_iter(buf.iter().copied()));
        return;
    }
    for e in start..n {
        buf.push(e);
        subsets_of_size(n, size, e + 1, buf, out);
        buf.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_circuits_examples() {
        let u23 = Matroid::from_circuits(3, vec![Bits32::full(3)]).unwrap();
        assert_eq!(u23.rank(), 2);

        let err = Matroid::from_circuits(
            2,
            vec![ElemSet::singleton(0), Bits32::from_iter([0, 1])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Construction(_)));

        let u24 = uniform(2, 4).unwrap();
        let explicit = Matroid::from_circuits(4, u24.circuits().to_vec()).unwrap();
        assert_eq!(u24, explicit);
    }

    #[test]
    fn rank_of_subsets() {
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(u24.rank_of(u24.full_set()), 2);
        assert_eq!(u24.rank_of(ElemSet::empty()), 0);
        assert_eq!(u24.rank_of(ElemSet::singleton(2)), 1);
    }

    #[test]
    fn dual_of_uniform() {
        let u13 = uniform(1, 3).unwrap();
        let d = u13.dual();
        assert_eq!(d, uniform(2, 3).unwrap());
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(u24.dual(), u24);
    }

    #[test]
    fn dual_dual_is_identity() {
        for m in [
            uniform(0, 3).unwrap(),
            uniform(3, 3).unwrap(),
            uniform(2, 5).unwrap(),
            crate::graph::complete_graph(4).cycle_matroid().unwrap(),
        ] {
            assert_eq!(m.dual().dual(), m);
        }
    }

    #[test]
    fn minor_examples() {
        let u24 = uniform(2, 4).unwrap();
        let (c, _) = u24.minor(ElemSet::empty(), ElemSet::singleton(1)).unwrap();
        assert_eq!(c, uniform(1, 3).unwrap());
        let (same, _) = u24.minor(ElemSet::empty(), ElemSet::empty()).unwrap();
        assert_eq!(same, u24);
        assert!(u24
            .minor(ElemSet::singleton(0), ElemSet::singleton(0))
            .is_err());
    }

    #[test]
    fn contraction_matches_direct_formula() {
        // The public dual-delete-dual route must agree with the direct
        // minimal-nonempty circuit formula used inside searches.
        let samples = vec![
            uniform(2, 5).unwrap(),
            crate::graph::complete_graph(4).cycle_matroid().unwrap(),
            crate::graph::k2n(4).cycle_matroid().unwrap(),
        ];
        for m in samples {
            for e in 0..m.ground_size() {
                let (via_dual, _) = m.minor(ElemSet::empty(), ElemSet::singleton(e)).unwrap();
                let kept = m.full_set().without(e);
                let direct: Vec<ElemSet> = contract_circuits(m.circuits(), e)
                    .into_iter()
                    .map(|c| c.compress_into(kept))
                    .collect();
                let direct = Matroid::from_circuits_unchecked(m.ground_size() - 1, direct);
                assert_eq!(via_dual, direct, "contraction mismatch at {e} in {m:?}");
            }
        }
    }

    #[test]
    fn direct_sum_with_loop() {
        let u24 = uniform(2, 4).unwrap();
        let loop_m = uniform(0, 1).unwrap();
        let s = u24.direct_sum(&loop_m).unwrap();
        assert_eq!(s.ground_size(), 5);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.circuits().len(), 5);
        let empty = uniform(0, 0).unwrap();
        assert_eq!(u24.direct_sum(&empty).unwrap(), u24);
    }

    #[test]
    fn two_sum_arithmetic() {
        let u24 = uniform(2, 4).unwrap();
        let u23 = uniform(2, 3).unwrap();
        let s = u24.two_sum(3, &u23, 0).unwrap();
        assert_eq!(s.ground_size(), 5);
        assert_eq!(s.rank(), 3);
        let s2 = u24.two_sum(3, &u24, 0).unwrap();
        assert_eq!(s2.ground_size(), 6);
        assert_eq!(s2.rank(), 3);
        // Coloop basepoint errors out.
        let free = uniform(2, 2).unwrap();
        assert!(u24.two_sum(0, &free, 0).is_err());
    }

    #[test]
    fn connectivity_examples() {
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(u24.connectivity_order().unwrap(), Connectivity::ThreeConnected);

        let loopy = u24.direct_sum(&uniform(0, 1).unwrap()).unwrap();
        assert!(matches!(
            loopy.connectivity_order().unwrap(),
            Connectivity::Disconnected { .. }
        ));

        let s = u24.two_sum(3, &uniform(2, 3).unwrap(), 0).unwrap();
        match s.connectivity_order().unwrap() {
            Connectivity::ConnectedNot3 { separation: (x, y) } => {
                assert!(x.len() >= 2 && y.len() >= 2);
            }
            other => panic!("expected a 2-separation, got {other:?}"),
        }
    }

    #[test]
    fn element_classes_examples() {
        let c4 = crate::graph::cycle_graph(4).cycle_matroid().unwrap();
        let cls = c4.element_classes();
        assert_eq!(cls.series, vec![Bits32::full(4)]);
        assert!(cls.parallel.is_empty());

        let k23 = crate::graph::k2n(3).cycle_matroid().unwrap();
        let cls = k23.element_classes();
        assert_eq!(cls.parallel, vec![Bits32::full(3)]);

        let u24 = uniform(2, 4).unwrap();
        let cls = u24.element_classes();
        assert!(cls.loops.is_empty());
        assert!(cls.coloops.is_empty());
        assert!(cls.parallel.is_empty());
        assert!(cls.series.is_empty());
    }

    #[test]
    fn cosimplify_examples() {
        let c4 = crate::graph::cycle_graph(4).cycle_matroid().unwrap();
        let (co, _) = c4.cosimplify();
        assert_eq!(co, uniform(0, 1).unwrap());

        let u24 = uniform(2, 4).unwrap();
        assert_eq!(u24.cosimplify().0, u24);

        let coloop = uniform(1, 1).unwrap();
        assert_eq!(coloop.cosimplify().0.ground_size(), 0);
    }

    #[test]
    fn clones_examples() {
        let u24 = uniform(2, 4).unwrap();
        assert!(u24.are_clones(0, 3));
        let loopy = u24.direct_sum(&uniform(0, 1).unwrap()).unwrap();
        assert!(!loopy.are_clones(4, 0));
        assert!(loopy.are_clones(0, 1));
    }

    #[test]
    fn u25_restriction() {
        assert!(uniform(2, 5).unwrap().has_u25_restriction());
        assert!(!uniform(2, 4).unwrap().has_u25_restriction());
        assert!(!catalog::get("F7").unwrap().has_u25_restriction());
    }

    #[test]
    fn text_round_trip_and_rank_check() {
        let m = uniform(2, 4).unwrap();
        let text = render_matroid(&m);
        assert_eq!(parse_matroid(&text, "u24").unwrap(), m);

        let bad = text.replacen("MATROID 4 2", "MATROID 4 3", 1);
        assert!(parse_matroid(&bad, "u24").is_err());
    }

    #[test]
    fn remark_two_circuits_iff_corank_two() {
        for m in [
            uniform(2, 4).unwrap(),
            uniform(1, 2).unwrap(),
            uniform(3, 4).unwrap(),
            crate::graph::cycle_graph(4).cycle_matroid().unwrap(),
        ] {
            assert_eq!(m.circuits().len() >= 2, m.corank() >= 2, "{m:?}");
        }
    }
}
