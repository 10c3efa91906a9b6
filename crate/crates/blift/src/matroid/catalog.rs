//! Named matroids: uniform matroids, the Fano plane and its dual, M(K4),
//! the duals of M(K5) and M(K3,3), wheels and whirls.

use super::{uniform, Matroid};
use crate::bits::{Bits32, ElemSet};
use crate::error::{Error, Result};
use crate::graph;

/// Fetch a catalog matroid by name. Accepted names: `uniform(r,n)`, `F7`,
/// `F7dual`, `MK4`, `dualK5`, `dualK33`, `wheel(k)`, `whirl(k)`.
pub fn get(name: &str) -> Result<Matroid> {
    let name = name.trim();
    match name {
        "F7" => return fano(),
        "F7dual" => return Ok(fano()?.dual()),
        "MK4" => return graph::complete_graph(4).cycle_matroid(),
        "dualK5" => return Ok(graph::complete_graph(5).cycle_matroid()?.dual()),
        "dualK33" => return Ok(graph::complete_bipartite(3, 3).cycle_matroid()?.dual()),
        _ => {}
    }
    if let Some(args) = parse_call(name, "uniform") {
        let [r, n] = args[..] else {
            return Err(Error::UnknownName(name.into()));
        };
        return uniform(r, n);
    }
    if let Some(args) = parse_call(name, "wheel") {
        let [k] = args[..] else {
            return Err(Error::UnknownName(name.into()));
        };
        return wheel(k);
    }
    if let Some(args) = parse_call(name, "whirl") {
        let [k] = args[..] else {
            return Err(Error::UnknownName(name.into()));
        };
        return whirl(k);
    }
    Err(Error::UnknownName(name.into()))
}

/// All fixed catalog names plus small wheels and whirls; used by self-tests
/// and the decider-agreement suite.
pub fn builtin_names() -> Vec<String> {
    let mut names: Vec<String> = ["F7", "F7dual", "MK4", "dualK5", "dualK33"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for (r, n) in [(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6), (0, 1), (1, 1)] {
        names.push(format!("uniform({r},{n})"));
    }
    for k in 2..=4 {
        names.push(format!("wheel({k})"));
        names.push(format!("whirl({k})"));
    }
    names
}

fn parse_call(name: &str, func: &str) -> Option<Vec<usize>> {
    let rest = name.strip_prefix(func)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().ok())
        .collect()
}

/// The Fano plane on {0..6}: seven 3-point lines; the circuits are the lines
/// and the complements of the lines.
fn fano() -> Result<Matroid> {
    let lines: [[usize; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let full = Bits32::full(7);
    let mut circuits: Vec<ElemSet> = Vec::with_capacity(14);
    for l in lines {
        let line = ElemSet::from_iter(l);
        circuits.push(line);
        circuits.push(full.difference(line));
    }
    Matroid::from_circuits(7, circuits)
}

/// M(W_k): the cycle matroid of the wheel with `k` spokes; rim elements come
/// first (labels `0..k`), spokes after.
pub fn wheel(k: usize) -> Result<Matroid> {
    if !(2..=16).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "wheel({k}) needs 2 <= k <= 16"
        )));
    }
    graph::wheel_graph(k).cycle_matroid()
}

/// The whirl W^k: the wheel with its rim circuit-hyperplane relaxed.
pub fn whirl(k: usize) -> Result<Matroid> {
    let wheel = wheel(k)?;
    let rim = Bits32::full(k);
    debug_assert!(wheel.is_circuit(rim), "rim must be a circuit of the wheel");
    let mut circuits: Vec<ElemSet> = wheel
        .circuits()
        .iter()
        .copied()
        .filter(|&c| c != rim)
        .collect();
    for spoke in k..2 * k {
        circuits.push(rim.with(spoke));
    }
    Matroid::from_circuits(2 * k, circuits)
}
