use blift::graph::enumerate::{EnumConstraints, MultigraphEnumerator};
use std::time::Instant;

fn main() {
    for (n, m, ml, mp, cyc) in [
        (6usize, 10usize, Some(1), Some(2), true),
        (7, 10, Some(1), Some(2), true),
        (5, 8, None, None, false),
        (6, 10, None, None, true),
        (6, 9, None, None, true),
    ] {
        let cons = EnumConstraints { max_loops: ml, max_parallel: mp, every_edge_on_cycle: cyc };
        let t = Instant::now();
        let en = MultigraphEnumerator::new(n, m, cons).unwrap();
        let mut count = 0u64;
        let mut nodes = 0u64;
        let mut e = en;
        while let Some(_g) = e.next() { count += 1; }
        nodes = e.nodes();
        println!("n={n} m={m} loops={ml:?} par={mp:?} cyc={cyc}: {count} graphs, {nodes} nodes, {:?}", t.elapsed());
    }
}
