// dev scratch: census timings (removed before finalizing)
use statseq::enumerate::{enum_connected, enum_trees, enum_unicyclic};
use std::time::Instant;

fn main() {
    for n in 1..=12 {
        let t = Instant::now();
        let c = enum_trees(n).unwrap().count();
        println!("trees {n} {c}  ({:?})", t.elapsed());
    }
    for n in 3..=12 {
        let t = Instant::now();
        let c = enum_unicyclic(n).unwrap().count();
        println!("unicyclic {n} {c}  ({:?})", t.elapsed());
    }
    for n in 1..=9 {
        let t = Instant::now();
        let c = enum_connected(n).unwrap().count();
        println!("connected {n} {c}  ({:?})", t.elapsed());
    }
}
