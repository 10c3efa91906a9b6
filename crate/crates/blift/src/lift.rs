//! The bicircular lift matroid L(G) and the membership problems built on it.
//!
//! Circuits of L(G) are the minimal edge sets carrying at least two cycles:
//! theta subgraphs, tight handcuffs (two cycles sharing one vertex) and
//! pairs of vertex-disjoint cycles. There are no connecting-path circuits,
//! so a cut-edge of G never lies in a circuit.

use crate::bits::{EdgeSet, ElemSet};
use crate::caps::{NodeBudget, SearchCaps};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate::{EnumConstraints, MultigraphEnumerator},
    Multigraph,
};
use crate::matroid::{catalog, iso, minor_search, GroundMap, Matroid};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Raw circuit family of L(G): every circuit is a union of two distinct
/// cycles, and the circuits are exactly the minimal such unions.
pub fn lift_circuits(g: &Multigraph) -> Vec<EdgeSet> {
    let cycles = g.cycles();
    let k = cycles.len();
    let mut cands: Vec<EdgeSet> = Vec::with_capacity(k * (k.saturating_sub(1)) / 2);
    for i in 0..k {
        for j in (i + 1)..k {
            cands.push(cycles[i].edges.union(cycles[j].edges));
        }
    }
    cands.sort_unstable();
    cands.dedup();
    cands.sort_unstable_by_key(|c| c.len());
    let mut out: Vec<EdgeSet> = Vec::new();
    'outer: for c in cands {
        for kept in &out {
            if kept.is_subset(c) {
                continue 'outer;
            }
        }
        out.push(c);
    }
    out
}

/// L(G) as a validated matroid.
pub fn lift_matroid(g: &Multigraph) -> Result<Matroid> {
    Matroid::from_circuits(g.edge_count(), lift_circuits(g))
}

/// Same circuits without axiom re-validation; for bulk interior use where
/// the family is then cross-checked by other oracles.
pub fn lift_matroid_unvalidated(g: &Multigraph) -> Matroid {
    Matroid::from_circuits_unchecked(g.edge_count(), lift_circuits(g))
}

/// Rank of an edge set in L(G) computed on the graph side:
/// `|V(G|x)| - c(G|x) + min(1, cyclomatic(x))`.
pub fn lift_rank(g: &Multigraph, x: EdgeSet) -> usize {
    if x.is_empty() {
        return 0;
    }
    let verts = g.covered_vertices(x).count_ones() as usize;
    let comps = g.subgraph_components(x);
    verts - comps + g.cyclomatic(x).min(1)
}

// ---------------------------------------------------------------------------
// Membership verdicts
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum WitnessKind {
    Graphic,
    BicircularLift,
}

/// A representing graph: mapping matroid elements through `map` onto edge
/// labels carries the matroid's circuits onto the cycle family (graphic) or
/// the lift circuit family (bicircular lift) of `graph`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub graph: Multigraph,
    pub map: GroundMap,
}

impl Witness {
    /// Re-checks the witness against `m` through public constructions.
    pub fn validates(&self, m: &Matroid) -> bool {
        if self.map.len() != m.ground_size() || m.ground_size() != self.graph.edge_count() {
            return false;
        }
        let mut family = match self.kind {
            WitnessKind::Graphic => self
                .graph
                .cycles()
                .iter()
                .map(|c| c.edges)
                .collect::<Vec<_>>(),
            WitnessKind::BicircularLift => lift_circuits(&self.graph),
        };
        let mut mapped: Vec<ElemSet> = m.circuits().iter().map(|c| self.map.image(*c)).collect();
        mapped.sort_unstable();
        family.sort_unstable();
        mapped == family
    }
}

/// Outcome of a class-membership search. `member` implies a witness; a
/// negative verdict implies the search space was exhausted (or the answer
/// follows from a complete excluded-minor characterization).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdict {
    pub member: bool,
    pub witness: Option<Witness>,
    pub search_exhausted: bool,
}

// ---------------------------------------------------------------------------
// Graphicness: excluded minors and representation search, cross-asserted
// ---------------------------------------------------------------------------

static GRAPHIC_EXCLUDED: Lazy<Vec<Matroid>> = Lazy::new(|| {
    vec![
        crate::matroid::uniform(2, 4).unwrap(),
        catalog::get("F7").unwrap(),
        catalog::get("F7dual").unwrap(),
        catalog::get("dualK5").unwrap(),
        catalog::get("dualK33").unwrap(),
    ]
});

/// Graphicness decided twice: by the five excluded minors, and by an
/// exhaustive search for a representing graph. The two verdicts are
/// asserted equal on every call.
pub fn is_graphic(m: &Matroid, caps: &SearchCaps) -> Result<ClassVerdict> {
    let budget = NodeBudget::new(caps.node_budget);
    let mut by_minors = true;
    for target in GRAPHIC_EXCLUDED.iter() {
        if minor_search::find_minor(m, target, None, &budget)?.is_some() {
            by_minors = false;
            break;
        }
    }
    let witness = graphic_witness_search(m, caps)?;
    assert_eq!(
        by_minors,
        witness.is_some(),
        "graphicness deciders disagree on {m:?}"
    );
    Ok(ClassVerdict {
        member: by_minors,
        witness,
        search_exhausted: true,
    })
}

/// Exhaustive search for a graph whose cycle matroid is `m`, component by
/// component. Deterministic: components in order of their smallest element,
/// first canonical graph per component.
fn graphic_witness_search(m: &Matroid, caps: &SearchCaps) -> Result<Option<Witness>> {
    let n = m.ground_size();
    let comps = element_components(m);

    // Endpoints per element; vertex blocks are allocated per component so
    // that edge label i realizes element i in the assembled graph.
    let mut endpoints: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut vertex_total = 0usize;

    for comp in &comps {
        if comp.len() == 1 {
            let e = comp.smallest().unwrap();
            if m.is_circuit(*comp) {
                // matroid loop: a graph loop on its own vertex
                endpoints[e] = Some((vertex_total, vertex_total));
                vertex_total += 1;
            } else {
                // coloop: a bridge on its own two vertices
                endpoints[e] = Some((vertex_total, vertex_total + 1));
                vertex_total += 2;
            }
            continue;
        }
        let elems: Vec<usize> = comp.iter().collect();
        let sub_circuits: Vec<ElemSet> = m
            .circuits()
            .iter()
            .filter(|c| c.is_subset(*comp))
            .map(|c| c.compress_into(*comp))
            .collect();
        let sub = Matroid::from_circuits_unchecked(elems.len(), sub_circuits);
        let Some((g, map)) = connected_cycle_realization(&sub, caps)? else {
            return Ok(None);
        };
        for (j, &e) in elems.iter().enumerate() {
            let (u, v) = g.edge(map.get(j));
            endpoints[e] = Some((vertex_total + u, vertex_total + v));
        }
        vertex_total += g.vertex_count();
    }

    let edges: Vec<(usize, usize)> = endpoints.into_iter().map(|p| p.unwrap()).collect();
    let graph = Multigraph::new(vertex_total, edges)?;
    let witness = Witness {
        kind: WitnessKind::Graphic,
        graph,
        map: GroundMap::identity(n),
    };
    debug_assert!(witness.validates(m));
    Ok(Some(witness))
}

/// Connected components of the ground set under "lies in a common circuit".
pub fn element_components(m: &Matroid) -> Vec<ElemSet> {
    let n = m.ground_size();
    let mut uf = crate::graph::UnionFind::new(n.max(1));
    for c in m.circuits() {
        let first = c.smallest().unwrap();
        for e in c.iter() {
            uf.union(first, e);
        }
    }
    let mut out = Vec::new();
    for e in 0..n {
        if uf.find(e) == e {
            out.push(ElemSet::from_iter((0..n).filter(|&f| uf.find(f) == e)));
        }
    }
    out
}

/// First canonical connected graph realizing a connected matroid (with >= 2
/// elements) as its cycle matroid, plus the element-to-edge map.
fn connected_cycle_realization(
    sub: &Matroid,
    caps: &SearchCaps,
) -> Result<Option<(Multigraph, GroundMap)>> {
    let edges = sub.ground_size();
    let verts = sub.rank() + 1;
    if verts > caps.max_vertices {
        return Err(Error::Resource(format!(
            "graphic witness search needs {verts} vertices, cap is {}",
            caps.max_vertices
        )));
    }
    if edges > caps.max_edges {
        return Err(Error::Resource(format!(
            "graphic witness search needs {edges} edges, cap is {}",
            caps.max_edges
        )));
    }
    let largest_parallel = sub
        .element_classes()
        .parallel
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(1);
    let cons = EnumConstraints {
        max_loops: Some(0),
        max_parallel: Some(largest_parallel),
        every_edge_on_cycle: true,
    };
    let profile = sub.circuit_size_profile();
    let graphs = canonical_graphs(verts, edges, cons)?;
    let found = graphs.par_iter().find_map_first(|g| {
        if !g.is_connected()
            || g.covered_vertices(g.full_edge_set()).count_ones() as usize != verts
        {
            return None;
        }
        let cycles = g.cycles();
        if cycles.len() != sub.circuits().len() {
            return None;
        }
        let mut sizes: Vec<usize> = cycles.iter().map(|c| c.edges.len()).collect();
        sizes.sort_unstable();
        if sizes != profile {
            return None;
        }
        let family: Vec<ElemSet> = cycles.iter().map(|c| c.edges).collect();
        iso::iso_on_circuits(edges, sub.circuits(), edges, &family, 1)
            .into_iter()
            .next()
            .map(|map| (g.clone(), map))
    });
    Ok(found)
}

// ---------------------------------------------------------------------------
// Bicircular lift membership
// ---------------------------------------------------------------------------

/// Exhaustive search for a graph G with L(G) = m.
///
/// Coloops of m correspond to cut-edges, which never meet circuits, so they
/// are stripped first and re-attached as pendant edges. For the coloop-free
/// core it suffices to search connected graphs with exactly rank-many
/// vertices: identifying one vertex from each component of a disconnected
/// representation preserves the labeled cycle family (a cycle through the
/// glue vertex would fall apart on its removal), hence preserves the lift
/// matroid, so every representable core has a connected representation.
pub fn biclift_witness(m: &Matroid, caps: &SearchCaps) -> Result<ClassVerdict> {
    let n = m.ground_size();

    // Lift matroids never have loops.
    if m.circuits().iter().any(|c| c.len() == 1) {
        return Ok(ClassVerdict {
            member: false,
            witness: None,
            search_exhausted: true,
        });
    }

    let mut in_circuit = ElemSet::empty();
    for c in m.circuits() {
        in_circuit = in_circuit.union(*c);
    }
    let coloops = m.full_set().difference(in_circuit);
    let core_elems: Vec<usize> = in_circuit.iter().collect();

    if core_elems.is_empty() {
        // Free matroid: a path realizes it.
        let witness = Witness {
            kind: WitnessKind::BicircularLift,
            graph: crate::graph::path_graph(n),
            map: GroundMap::identity(n),
        };
        return Ok(ClassVerdict {
            member: true,
            witness: Some(witness),
            search_exhausted: true,
        });
    }

    let core_circuits: Vec<ElemSet> = m
        .circuits()
        .iter()
        .map(|c| c.compress_into(in_circuit))
        .collect();
    let core = Matroid::from_circuits_unchecked(core_elems.len(), core_circuits);

    let hit = core_lift_realization(&core, caps, RealizationScope::First)?
        .into_iter()
        .next();
    let Some((g, map)) = hit else {
        return Ok(ClassVerdict {
            member: false,
            witness: None,
            search_exhausted: true,
        });
    };

    // Re-attach coloops as pendant edges at vertex 0, labeling edges so that
    // edge i realizes element i.
    let mut endpoints: Vec<(usize, usize)> = vec![(0, 0); n];
    for (j, &e) in core_elems.iter().enumerate() {
        endpoints[e] = g.edge(map.get(j));
    }
    let mut next_vertex = g.vertex_count();
    for e in coloops.iter() {
        endpoints[e] = (0, next_vertex);
        next_vertex += 1;
    }
    let graph = Multigraph::new(next_vertex, endpoints)?;
    let witness = Witness {
        kind: WitnessKind::BicircularLift,
        graph,
        map: GroundMap::identity(n),
    };
    debug_assert!(witness.validates(m));
    Ok(ClassVerdict {
        member: true,
        witness: Some(witness),
        search_exhausted: true,
    })
}

enum RealizationScope {
    /// First connected witness in canonical order.
    First,
    /// All connected witnesses.
    All,
}

/// Connected realizations of a coloop-free matroid as L(G), in canonical
/// order. Candidates are connected graphs with every edge on a cycle and
/// exactly rank-many vertices; this is exhaustive because disconnected
/// representations glue into connected ones with the same lift matroid.
fn core_lift_realization(
    core: &Matroid,
    caps: &SearchCaps,
    scope: RealizationScope,
) -> Result<Vec<(Multigraph, GroundMap)>> {
    let m_edges = core.ground_size();
    let verts = core.rank();
    if m_edges > caps.max_edges {
        return Err(Error::Resource(format!(
            "lift witness search needs {m_edges} edges, cap is {}",
            caps.max_edges
        )));
    }
    if verts > caps.max_vertices {
        return Err(Error::Resource(format!(
            "lift witness search needs {verts} vertices, cap is {}",
            caps.max_vertices
        )));
    }
    if verts > m_edges || verts == 0 {
        return Ok(Vec::new()); // min degree 2 forces |V| <= |E|
    }
    let max_parallel = core.max_parallel_bound();
    if max_parallel > caps.max_parallel {
        return Err(Error::Resource(format!(
            "input has a U(2,{max_parallel}) restriction; raise the parallel cap (currently {})",
            caps.max_parallel
        )));
    }
    let max_loops = core.max_loops_bound();
    let two_circuits = core.circuits().iter().filter(|c| c.len() == 2).count();
    let three_circuits = core.circuits().iter().filter(|c| c.len() == 3).count();
    let profile = core.circuit_size_profile();

    let cons = EnumConstraints {
        max_loops: Some(max_loops),
        max_parallel: Some(max_parallel),
        every_edge_on_cycle: true,
    };

    let graphs = canonical_graphs(verts, m_edges, cons)?;
    let check = |g: &Multigraph| -> Option<(Multigraph, GroundMap)> {
        if g.covered_vertices(g.full_edge_set()).count_ones() as usize != verts
            || !g.is_connected()
        {
            return None;
        }
        // Loop pairs are exactly the 2-circuits of L(G).
        let loops = g.loops().len();
        if loops * loops.saturating_sub(1) / 2 != two_circuits {
            return None;
        }
        // Triple parallels and loop-digon pairs are exactly the 3-circuits.
        let mut thetas = 0usize;
        let mut digons = 0usize;
        for class in g.edge_classes().parallel {
            let p = class.len();
            thetas += p * (p - 1) * (p - 2) / 6;
            digons += p * (p - 1) / 2;
        }
        if thetas + loops * digons != three_circuits {
            return None;
        }
        let family = lift_circuits(g);
        if family.len() != core.circuits().len() {
            return None;
        }
        let mut sizes: Vec<usize> = family.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        if sizes != profile {
            return None;
        }
        iso::iso_on_circuits(m_edges, core.circuits(), m_edges, &family, 1)
            .into_iter()
            .next()
            .map(|map| (g.clone(), map))
    };
    Ok(match scope {
        RealizationScope::First => graphs
            .par_iter()
            .find_map_first(|g| check(g))
            .into_iter()
            .collect(),
        RealizationScope::All => graphs.par_iter().filter_map(|g| check(g)).collect(),
    })
}

/// Membership in the class of matroids that are graphic or bicircular lift.
pub fn membership_bl_bar(m: &Matroid, caps: &SearchCaps) -> Result<ClassVerdict> {
    let graphic = is_graphic(m, caps)?;
    if graphic.member {
        return Ok(graphic);
    }
    biclift_witness(m, caps)
}

/// All connected representations of `m` as a lift matroid, deduplicated up
/// to unlabeled 2-isomorphism, in canonical order.
///
/// Requires `m` connected and not free. Single-circuit matroids (corank 1)
/// are allowed: they sit below the two-circuit hypothesis of the uniqueness
/// theorem and can have several representation classes, as U(2,3) does.
pub fn all_lift_representations(m: &Matroid, caps: &SearchCaps) -> Result<Vec<Multigraph>> {
    if m.circuits().is_empty() {
        return Err(Error::InvalidArgument(
            "representation enumeration needs at least one circuit".into(),
        ));
    }
    if element_components(m).len() != 1 {
        return Err(Error::InvalidArgument(
            "representation enumeration needs a connected matroid".into(),
        ));
    }
    let hits = core_lift_realization(m, caps, RealizationScope::All)?;
    let mut reps: Vec<Multigraph> = Vec::new();
    let mut rep_matroids: Vec<Matroid> = Vec::new();
    for (g, _) in hits {
        let mg = g.cycle_matroid()?;
        if rep_matroids
            .iter()
            .all(|prev| iso::find_isomorphism(prev, &mg).is_none())
        {
            reps.push(g);
            rep_matroids.push(mg);
        }
    }
    Ok(reps)
}

// ---------------------------------------------------------------------------
// Enumeration cache
// ---------------------------------------------------------------------------

type EnumKey = (usize, usize, EnumConstraints);

static ENUM_CACHE: Lazy<Mutex<HashMap<EnumKey, Arc<Vec<Multigraph>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Canonical graphs for (n, m, constraints), memoized for the class sizes
/// that recur across searches. Results are in canonical enumeration order.
pub(crate) fn canonical_graphs(
    n: usize,
    m: usize,
    cons: EnumConstraints,
) -> Result<Arc<Vec<Multigraph>>> {
    let cacheable = n <= 8 && m <= 12;
    let key = (n, m, cons);
    if cacheable {
        if let Some(hit) = ENUM_CACHE.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
    }
    let graphs: Vec<Multigraph> = MultigraphEnumerator::new(n, m, cons)?.collect();
    let graphs = Arc::new(graphs);
    if cacheable {
        ENUM_CACHE.lock().unwrap().insert(key, graphs.clone());
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, k2n, Multigraph};
    use crate::matroid::uniform;

    #[test]
    fn lift_of_k24_is_u24() {
        let m = lift_matroid(&k2n(4)).unwrap();
        let u24 = uniform(2, 4).unwrap();
        assert!(iso::find_isomorphism(&m, &u24).is_some());
    }

    #[test]
    fn lift_of_k4_is_u46() {
        let m = lift_matroid(&complete_graph(4)).unwrap();
        let u46 = uniform(4, 6).unwrap();
        assert_eq!(m, u46);
    }

    #[test]
    fn two_loops_in_one_component_form_a_circuit() {
        // Path 0-1 with a loop at each end: the loops are vertex-disjoint
        // cycles, so together they are a 2-element circuit.
        let g = Multigraph::new(2, vec![(0, 0), (1, 1), (0, 1)]).unwrap();
        let m = lift_matroid(&g).unwrap();
        assert_eq!(m.circuits(), &[crate::bits::Bits32::from_iter([0, 1])]);
    }

    #[test]
    fn lift_rank_examples() {
        let k4 = complete_graph(4);
        assert_eq!(lift_rank(&k4, k4.full_edge_set()), 4);
        let tri = crate::graph::cycle_graph(3);
        assert_eq!(lift_rank(&tri, tri.full_edge_set()), 3);
        let path = crate::graph::path_graph(3);
        assert_eq!(lift_rank(&path, path.full_edge_set()), 3);
        assert_eq!(lift_rank(&path, EdgeSet::empty()), 0);
    }

    #[test]
    fn graphic_examples() {
        let caps = SearchCaps::default();
        let mk4 = complete_graph(4).cycle_matroid().unwrap();
        let v = is_graphic(&mk4, &caps).unwrap();
        assert!(v.member);
        assert!(v.witness.unwrap().validates(&mk4));

        let u24 = uniform(2, 4).unwrap();
        assert!(!is_graphic(&u24, &caps).unwrap().member);

        let dual_k5 = catalog::get("dualK5").unwrap();
        let caps = SearchCaps::for_ground_size(10);
        assert!(!is_graphic(&dual_k5, &caps).unwrap().member);
    }

    #[test]
    fn biclift_finds_k24_for_u24() {
        let caps = SearchCaps::default();
        let u24 = uniform(2, 4).unwrap();
        let v = biclift_witness(&u24, &caps).unwrap();
        assert!(v.member);
        let w = v.witness.unwrap();
        assert_eq!(w.graph.vertex_count(), 2);
        assert_eq!(w.graph.edge_count(), 4);
        assert!(w.validates(&u24));
    }

    #[test]
    fn biclift_finds_k4_for_u46() {
        let caps = SearchCaps::default();
        let u46 = uniform(4, 6).unwrap();
        let v = biclift_witness(&u46, &caps).unwrap();
        assert!(v.member);
        assert!(v.witness.unwrap().validates(&u46));
    }

    #[test]
    fn matroids_with_loops_are_not_lift() {
        let caps = SearchCaps::default();
        let loopy = uniform(2, 4)
            .unwrap()
            .direct_sum(&uniform(0, 1).unwrap())
            .unwrap();
        let v = biclift_witness(&loopy, &caps).unwrap();
        assert!(!v.member);
        assert!(v.search_exhausted);
    }

    #[test]
    fn u23_has_two_representation_classes() {
        let caps = SearchCaps::default();
        let u23 = uniform(2, 3).unwrap();
        let reps = all_lift_representations(&u23, &caps).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(!crate::graph::unlabeled_two_isomorphic(&reps[0], &reps[1]).unwrap());
    }

    #[test]
    fn membership_of_two_sums() {
        let caps = SearchCaps::default();
        let u24 = uniform(2, 4).unwrap();
        let u23 = uniform(2, 3).unwrap();
        let s = u24.two_sum(3, &u23, 0).unwrap();
        let v = membership_bl_bar(&s, &caps).unwrap();
        assert!(v.member);
        assert_eq!(v.witness.unwrap().kind, WitnessKind::BicircularLift);
    }

    #[test]
    fn free_matroids_are_members() {
        let caps = SearchCaps::default();
        let free = uniform(3, 3).unwrap();
        let v = biclift_witness(&free, &caps).unwrap();
        assert!(v.member);
        assert!(v.witness.unwrap().validates(&free));
    }

    #[test]
    fn coloops_of_lift_are_cut_edges_when_two_cycles_exist() {
        // Theta plus pendant edge: the pendant is the one coloop.
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        let m = lift_matroid(&g).unwrap();
        let mut in_circuit = EdgeSet::empty();
        for c in m.circuits() {
            in_circuit = in_circuit.union(*c);
        }
        let coloops = m.full_set().difference(in_circuit);
        assert_eq!(coloops, g.cut_edges());
    }
}
