use blift::exminor::{is_excluded_minor, named_excluded_inputs};
use blift::SearchCaps;
use std::time::Instant;

fn main() {
    for (name, m) in named_excluded_inputs().unwrap() {
        let caps = SearchCaps::for_ground_size(m.ground_size());
        let t = Instant::now();
        let cert = is_excluded_minor(&m, &caps).unwrap();
        println!(
            "{name}: certificate={} in {:?}",
            cert.is_some(),
            t.elapsed()
        );
    }
}
