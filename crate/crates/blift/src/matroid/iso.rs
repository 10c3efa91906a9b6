//! Matroid isomorphism by backtracking over element bijections, pruned with
//! per-element invariants (circuit membership count and the sorted sizes of
//! the incident circuits).

use super::{GroundMap, Matroid};
use crate::bits::ElemSet;
use std::collections::HashSet;

/// First isomorphism in the deterministic search order, if any.
pub fn find_isomorphism(m1: &Matroid, m2: &Matroid) -> Option<GroundMap> {
    isomorphisms(m1, m2, 1).into_iter().next()
}

/// Up to `limit` isomorphisms, in the deterministic search order.
pub fn isomorphisms(m1: &Matroid, m2: &Matroid, limit: usize) -> Vec<GroundMap> {
    if m1.rank() != m2.rank() {
        return Vec::new();
    }
    iso_on_circuits(
        m1.ground_size(),
        m1.circuits(),
        m2.ground_size(),
        m2.circuits(),
        limit,
    )
}

/// Isomorphism search over raw circuit families. Exposed within the crate so
/// representation searches can match candidate families without building
/// validated matroids.
pub(crate) fn iso_on_circuits(
    n1: usize,
    c1: &[ElemSet],
    n2: usize,
    c2: &[ElemSet],
    limit: usize,
) -> Vec<GroundMap> {
    if n1 != n2 || c1.len() != c2.len() || limit == 0 {
        return Vec::new();
    }
    let n = n1;
    if n == 0 {
        return vec![GroundMap::identity(0)];
    }
    let inv1 = invariants(n, c1);
    let inv2 = invariants(n, c2);
    {
        let mut s1 = inv1.clone();
        let mut s2 = inv2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return Vec::new();
        }
    }

    // Domain order: by invariant, ties by index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv1[a].cmp(&inv1[b]).then(a.cmp(&b)));

    let by_elem1: Vec<Vec<usize>> = per_element(n, c1);
    let by_elem2: Vec<Vec<usize>> = per_element(n, c2);
    let set2: HashSet<ElemSet> = c2.iter().copied().collect();

    let mut state = Search {
        c1,
        c2,
        by_elem1: &by_elem1,
        by_elem2: &by_elem2,
        set2: &set2,
        inv1: &inv1,
        inv2: &inv2,
        order: &order,
        map: vec![usize::MAX; n],
        taken: 0,
        domain: ElemSet::empty(),
        image: ElemSet::empty(),
        out: Vec::new(),
        limit,
    };
    state.descend(0);
    let out = state.out;
    out.into_iter().map(GroundMap::new).collect()
}

/// Sorted sizes of the circuits through each element.
fn invariants(n: usize, circuits: &[ElemSet]) -> Vec<Vec<usize>> {
    let mut inv = vec![Vec::new(); n];
    for c in circuits {
        for e in c.iter() {
            inv[e].push(c.len());
        }
    }
    for v in &mut inv {
        v.sort_unstable();
    }
    inv
}

fn per_element(n: usize, circuits: &[ElemSet]) -> Vec<Vec<usize>> {
    let mut by = vec![Vec::new(); n];
    for (i, c) in circuits.iter().enumerate() {
        for e in c.iter() {
            by[e].push(i);
        }
    }
    by
}

struct Search<'a> {
    c1: &'a [ElemSet],
    c2: &'a [ElemSet],
    by_elem1: &'a [Vec<usize>],
    by_elem2: &'a [Vec<usize>],
    set2: &'a HashSet<ElemSet>,
    inv1: &'a [Vec<usize>],
    inv2: &'a [Vec<usize>],
    order: &'a [usize],
    map: Vec<usize>,
    taken: u32,
    domain: ElemSet,
    image: ElemSet,
    out: Vec<Vec<usize>>,
    limit: usize,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.out.push(self.map.clone());
            return self.out.len() >= self.limit;
        }
        let x = self.order[depth];
        for y in 0..self.map.len() {
            if self.taken & (1 << y) != 0 || self.inv1[x] != self.inv2[y] {
                continue;
            }
            if !self.consistent(x, y) {
                continue;
            }
            self.map[x] = y;
            self.taken |= 1 << y;
            self.domain.insert(x);
            self.image.insert(y);
            let stop = self.descend(depth + 1);
            self.map[x] = usize::MAX;
            self.taken &= !(1 << y);
            self.domain.remove(x);
            self.image.remove(y);
            if stop {
                return true;
            }
        }
        false
    }

    /// After extending with x -> y, every circuit completed on the domain
    /// side must map onto a circuit, and the two sides must complete the
    /// same number of circuits.
    fn consistent(&self, x: usize, y: usize) -> bool {
        let domain = self.domain.with(x);
        let image = self.image.with(y);
        let mut completed1 = 0usize;
        for &ci in &self.by_elem1[x] {
            let c = self.c1[ci];
            if !c.is_subset(domain) {
                continue;
            }
            completed1 += 1;
            let mut img = ElemSet::empty();
            for e in c.iter() {
                img.insert(if e == x { y } else { self.map[e] });
            }
            if !self.set2.contains(&img) {
                return false;
            }
        }
        let completed2 = self.by_elem2[y]
            .iter()
            .filter(|&&ci| self.c2[ci].is_subset(image))
            .count();
        completed1 == completed2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{catalog, uniform};

    #[test]
    fn identity_on_self() {
        let m = uniform(2, 4).unwrap();
        let map = find_isomorphism(&m, &m).unwrap();
        assert_eq!(map.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn fano_not_isomorphic_to_its_dual() {
        let f7 = catalog::get("F7").unwrap();
        let f7d = catalog::get("F7dual").unwrap();
        assert!(find_isomorphism(&f7, &f7d).is_none());
    }

    #[test]
    fn relabeled_graph_matroids_match() {
        let k4 = crate::graph::complete_graph(4);
        let relabeled = crate::graph::Multigraph::new(
            4,
            vec![(3, 2), (1, 3), (3, 0), (2, 1), (0, 2), (0, 1)],
        )
        .unwrap();
        let m1 = k4.cycle_matroid().unwrap();
        let m2 = relabeled.cycle_matroid().unwrap();
        let map = find_isomorphism(&m1, &m2).expect("K4 relabelings are isomorphic");
        // The map must carry circuits onto circuits.
        for c in m1.circuits() {
            assert!(m2.is_circuit(map.image(*c)));
        }
    }

    #[test]
    fn automorphism_count_of_u24() {
        // Every permutation of U(2,4) is an automorphism.
        let m = uniform(2, 4).unwrap();
        assert_eq!(isomorphisms(&m, &m, usize::MAX).len(), 24);
    }
}
