use blift::paperlab::{verify_lemma, LEMMA_IDS};
use blift::SearchCaps;
use std::time::Instant;

fn main() {
    let caps = SearchCaps::default();
    for id in LEMMA_IDS {
        let t = Instant::now();
        match verify_lemma(id, &caps, 0) {
            Ok(r) => println!(
                "{id}: {} instances, {} cex, {:?}",
                r.instances_checked,
                r.counterexamples.len(),
                t.elapsed()
            ),
            Err(e) => println!("{id}: ERROR {e} after {:?}", t.elapsed()),
        }
    }
}
