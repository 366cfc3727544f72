//! Structural properties of statuses on trees, checked over enumerated and
//! randomly sampled corpora: the edge-difference identity, the accelerating
//! step bound along paths, the closed form on paths, and the Wiener-index
//! double-count, each against an independent computation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use statseq::graph::Graph;
use statseq::oracle::wiener_index_brute;
use statseq::prufer::tree_from_prufer;
use statseq::status::{all_statuses, status, status_sequence};

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    if n <= 2 {
        return tree_from_prufer(&[], n).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_prufer(&seq, n).unwrap()
}

/// Sizes of the two components of `tree - uv`, as (side of u, side of v).
fn split_sizes(tree: &Graph, u: usize, v: usize) -> (i64, i64) {
    let mut seen = vec![false; tree.n()];
    seen[u] = true;
    let mut stack = vec![u];
    let mut size_u = 1i64;
    while let Some(x) = stack.pop() {
        for y in tree.neighbors(x) {
            // the removed edge is the only bridge between the two sides
            if x == u && y == v {
                continue;
            }
            if !seen[y] {
                seen[y] = true;
                size_u += 1;
                stack.push(y);
            }
        }
    }
    (size_u, tree.n() as i64 - size_u)
}

/// The unique path between two vertices of a tree.
fn tree_path(tree: &Graph, from: usize, to: usize) -> Vec<usize> {
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for y in tree.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn check_edge_difference(tree: &Graph, statuses: &[u64]) {
    for (u, v) in tree.edges() {
        let (cu, cv) = split_sizes(tree, u, v);
        // status(v) = status(u) + |side of u| - |side of v|
        assert_eq!(
            statuses[v] as i64,
            statuses[u] as i64 + cu - cv,
            "edge {u}-{v}"
        );
    }
}

fn check_path_steps(tree: &Graph, statuses: &[u64]) {
    let n = tree.n();
    for from in 0..n {
        for to in 0..n {
            if from == to {
                continue;
            }
            let path = tree_path(tree, from, to);
            if path.len() < 3 {
                continue;
            }
            let s = |i: usize| statuses[path[i]] as i64;
            let d = s(1) - s(0);
            for j in 1..path.len() - 1 {
                assert!(
                    s(j + 1) - s(j) >= d + 2 * j as i64,
                    "step bound failed along {path:?} at j={j}"
                );
            }
        }
    }
}

#[test]
fn edge_difference_and_path_steps_on_enumerated_trees() {
    for n in 2..=9 {
        for tree in statseq::enum_trees(n).unwrap() {
            let statuses = all_statuses(&tree).unwrap();
            check_edge_difference(&tree, &statuses);
            check_path_steps(&tree, &statuses);
        }
    }
}

#[test]
fn edge_difference_and_path_steps_on_random_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..300 {
        let n = rng.gen_range(2..=40);
        let tree = random_tree(&mut rng, n);
        let statuses = all_statuses(&tree).unwrap();
        check_edge_difference(&tree, &statuses);
        check_path_steps(&tree, &statuses);
    }
}

#[test]
fn path_closed_form_up_to_order_50() {
    for m in 1..=50usize {
        let path =
            Graph::from_edges(m, &(0..m - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        for i in 1..=m {
            let expect = (i as i64) * (i as i64 - m as i64 - 1) + (m as i64) * (m as i64 + 1) / 2;
            assert_eq!(status(&path, i - 1).unwrap(), expect as u64);
        }
    }
}

#[test]
fn sequence_sum_is_twice_wiener_index() {
    // independent accumulation via Floyd-Warshall
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..50 {
        let n = rng.gen_range(2..=30);
        let tree = random_tree(&mut rng, n);
        let sum: u64 = status_sequence(&tree).unwrap().values().iter().sum();
        assert_eq!(sum, 2 * wiener_index_brute(&tree));
    }
    for g in statseq::enum_connected(6).unwrap() {
        let sum: u64 = status_sequence(&g).unwrap().values().iter().sum();
        assert_eq!(sum, 2 * wiener_index_brute(&g));
    }
}

#[test]
fn sequence_entries_bounded_below() {
    // every entry of a connected graph of order n >= 2 is at least n - 1
    for n in 2..=7 {
        for g in statseq::enum_connected(n).unwrap() {
            let seq = status_sequence(&g).unwrap();
            assert!(seq.values().iter().all(|&s| s >= (n as u64) - 1));
            assert!(seq.values().windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
