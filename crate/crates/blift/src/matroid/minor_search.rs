//! Exhaustive minor containment: assign every element keep / delete /
//! contract in lexicographic order, pruning on rank and corank, and test
//! isomorphism at the leaves. The first witness in search order is returned,
//! so results are deterministic.

use super::{contract_circuits, delete_circuits, iso, GroundMap, Matroid};
use crate::bits::ElemSet;
use crate::caps::NodeBudget;
use crate::error::{Error, Result};

/// A minor witness: `m` with `delete` deleted and `contract` contracted is
/// isomorphic to the target via `map`, which carries target elements to the
/// surviving labels of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorWitness {
    pub delete: ElemSet,
    pub contract: ElemSet,
    pub map: GroundMap,
}

/// Searches for a minor of `m` isomorphic to `target`. `forced` names an
/// element that must survive into the minor.
pub fn find_minor(
    m: &Matroid,
    target: &Matroid,
    forced: Option<usize>,
    budget: &NodeBudget,
) -> Result<Option<MinorWitness>> {
    let n = m.ground_size();
    if target.ground_size() > n
        || target.rank() > m.rank()
        || target.corank() > m.corank()
    {
        return Ok(None);
    }
    if let Some(f) = forced {
        if f >= n {
            return Err(Error::InvalidArgument(format!(
                "forced element {f} outside the ground set"
            )));
        }
    }
    let mut search = MinorSearch {
        target,
        forced,
        n,
        budget,
        witness: None,
    };
    let circuits: Vec<ElemSet> = m.circuits().to_vec();
    search.descend(
        0,
        &circuits,
        ElemSet::empty(),
        ElemSet::empty(),
        ElemSet::empty(),
        m.rank(),
        m.corank(),
    )?;
    Ok(search.witness)
}

struct MinorSearch<'a> {
    target: &'a Matroid,
    forced: Option<usize>,
    n: usize,
    budget: &'a NodeBudget,
    witness: Option<MinorWitness>,
}

impl MinorSearch<'_> {
    #[allow(clippy::too_many_arguments)]
    fn descend(
        &mut self,
        next: usize,
        circuits: &[ElemSet],
        kept: ElemSet,
        deleted: ElemSet,
        contracted: ElemSet,
        rank: usize,
        corank: usize,
    ) -> Result<bool> {
        if !self.budget.charge(1) {
            return Err(Error::Resource("minor search budget exhausted".into()));
        }
        if rank < self.target.rank() || corank < self.target.corank() {
            return Ok(false);
        }
        let want = self.target.ground_size();
        let remaining = self.n - next;
        if kept.len() + remaining < want || kept.len() > want {
            return Ok(false);
        }
        if next == self.n {
            return Ok(self.try_leaf(circuits, kept, deleted, contracted));
        }
        let e = next;

        // keep
        if kept.len() < want
            && self.descend(
                next + 1,
                circuits,
                kept.with(e),
                deleted,
                contracted,
                rank,
                corank,
            )?
        {
            return Ok(true);
        }
        if self.forced == Some(e) {
            return Ok(false);
        }

        let in_some_circuit = circuits.iter().any(|c| c.contains(e));
        let is_loop = circuits.contains(&ElemSet::singleton(e));

        // delete: a coloop loses rank, anything else loses corank
        {
            let rest = delete_circuits(circuits, e);
            let (r, c) = if in_some_circuit {
                (rank, corank - 1)
            } else {
                (rank - 1, corank)
            };
            if self.descend(next + 1, &rest, kept, deleted.with(e), contracted, r, c)? {
                return Ok(true);
            }
        }

        // contract: a loop loses corank, anything else loses rank
        {
            let rest = contract_circuits(circuits, e);
            let (r, c) = if is_loop {
                (rank, corank - 1)
            } else {
                (rank - 1, corank)
            };
            if self.descend(next + 1, &rest, kept, deleted, contracted.with(e), r, c)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn try_leaf(
        &mut self,
        circuits: &[ElemSet],
        kept: ElemSet,
        deleted: ElemSet,
        contracted: ElemSet,
    ) -> bool {
        let want = self.target.ground_size();
        if kept.len() != want {
            return false;
        }
        let compressed: Vec<ElemSet> = circuits.iter().map(|c| c.compress_into(kept)).collect();
        let maps = iso::iso_on_circuits(
            want,
            self.target.circuits(),
            want,
            &compressed,
            1,
        );
        let Some(map) = maps.into_iter().next() else {
            return false;
        };
        // Recast the map into original labels of m.
        let survivors: Vec<usize> = kept.iter().collect();
        let map = GroundMap::new(map.as_slice().iter().map(|&i| survivors[i]).collect());
        if let Some(f) = self.forced {
            debug_assert!(kept.contains(f));
        }
        self.witness = Some(MinorWitness {
            delete: deleted,
            contract: contracted,
            map,
        });
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{catalog, uniform};

    fn budget() -> NodeBudget {
        NodeBudget::new(u64::MAX)
    }

    #[test]
    fn matroid_is_its_own_minor() {
        let u24 = uniform(2, 4).unwrap();
        let w = find_minor(&u24, &u24, None, &budget()).unwrap().unwrap();
        assert!(w.delete.is_empty());
        assert!(w.contract.is_empty());
        assert_eq!(w.map.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn fano_is_binary() {
        let f7 = catalog::get("F7").unwrap();
        let u24 = uniform(2, 4).unwrap();
        assert!(find_minor(&f7, &u24, None, &budget()).unwrap().is_none());
    }

    #[test]
    fn dual_k5_has_no_u24_minor() {
        let m = catalog::get("dualK5").unwrap();
        let u24 = uniform(2, 4).unwrap();
        assert!(find_minor(&m, &u24, None, &budget()).unwrap().is_none());
    }

    #[test]
    fn whirl_has_u24_minor_through_any_element() {
        let w3 = catalog::get("whirl(3)").unwrap();
        let u24 = uniform(2, 4).unwrap();
        for e in 0..w3.ground_size() {
            let w = find_minor(&w3, &u24, Some(e), &budget()).unwrap();
            let witness = w.expect("whirls are non-binary");
            assert!(witness.map.as_slice().contains(&e));
        }
    }

    #[test]
    fn witness_validates_through_public_minor() {
        let m = crate::graph::complete_graph(4).cycle_matroid().unwrap();
        let u13 = uniform(1, 3).unwrap();
        let w = find_minor(&m, &u13, None, &budget()).unwrap().unwrap();
        let (minor, label_map) = m.minor(w.delete, w.contract).unwrap();
        // Push the witness map through the dense relabeling and compare.
        for c in u13.circuits() {
            let img = ElemSet::from_iter(
                c.iter().map(|e| label_map.get(w.map.get(e)).expect("survivor")),
            );
            assert!(minor.is_circuit(img));
        }
        assert_eq!(minor.circuits().len(), u13.circuits().len());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let m = catalog::get("dualK5").unwrap();
        let u24 = uniform(2, 4).unwrap();
        let tiny = NodeBudget::new(10);
        assert!(matches!(
            find_minor(&m, &u24, None, &tiny),
            Err(Error::Resource(_))
        ));
    }
}
