// dev scratch: prufer oracle at 9 and 10 (removed before finalizing)
use statseq::oracle::trees_by_prufer;
use std::time::Instant;

fn main() {
    for n in [8, 9, 10] {
        let t = Instant::now();
        let c = trees_by_prufer(n).len();
        println!("prufer trees {n} {c}  ({:?})", t.elapsed());
    }
}
