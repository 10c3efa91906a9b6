use blift::paperlab::verify_lemma;
use blift::SearchCaps;

fn main() {
    let caps = SearchCaps::default();
    let r = verify_lemma("del_rank", &caps, 0).unwrap();
    for cex in r.counterexamples.iter().take(3) {
        println!("{cex}\n---");
    }
}
