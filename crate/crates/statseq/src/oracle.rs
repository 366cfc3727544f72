//! Slow reference routes used to cross-validate the fast paths: labeled
//! brute-force enumeration with dedup, explicit permutation isomorphism
//! tests, an independent tree code (AHU), and Floyd-Warshall distances.
//! Everything here trades speed for being structurally independent of the
//! code it checks.

use std::collections::HashSet;

use crate::canon::{canonical_form, dedup_by_canonical};
use crate::graph::Graph;

/// One representative per isomorphism class of connected graphs of order
/// `n`, by brute force over all labeled graphs. Feasible for `n <= 7`.
pub fn connected_classes_brute(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "brute-force enumeration needs n <= 7");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let all = (0u64..(1u64 << pairs.len())).filter_map(|mask| {
        let mut g = Graph::new(n);
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                g.add_edge(u, v).unwrap();
            }
        }
        g.is_connected().then_some(g)
    });
    dedup_by_canonical(all)
}

/// Brute-force isomorphism by trying all vertex permutations.
pub fn are_isomorphic_brute(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    assert!(n <= 8, "permutation search needs n <= 8");
    let mut perm: Vec<usize> = (0..n).collect();
    try_perms(&mut perm, 0, &mut |p| {
        a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
    })
}

fn try_perms(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        let hit = try_perms(perm, k + 1, check);
        perm.swap(k, i);
        if hit {
            return true;
        }
    }
    false
}

/// One representative per isomorphism class of free trees of order `n`,
/// by decoding every Prüfer sequence and deduplicating with the AHU code
/// (an independent canonical invariant for trees). `n <= 10`; the work is
/// `n^(n-2)` decodings, so 9 and 10 are slow.
pub fn trees_by_prufer(n: usize) -> Vec<Graph> {
    assert!((1..=10).contains(&n), "prufer enumeration needs n <= 10");
    if n == 1 {
        return vec![Graph::new(1)];
    }
    if n == 2 {
        return vec![crate::prufer::tree_from_prufer(&[], 2).unwrap()];
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    loop {
        let t = crate::prufer::tree_from_prufer(&seq, n).unwrap();
        if seen.insert(ahu_code(&t)) {
            out.push(t);
        }
        // odometer over base-n sequences
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// Canonical AHU code of a free tree: root at the centroid (or the centroid
/// edge) and serialize subtrees in sorted order. Equal codes iff isomorphic.
pub fn ahu_code(tree: &Graph) -> Vec<u8> {
    let n = tree.n();
    debug_assert_eq!(tree.edge_count(), n - 1, "ahu_code expects a tree");
    if n == 1 {
        return b"()".to_vec();
    }
    let centroids = centroids(tree);
    match centroids[..] {
        [c] => rooted_code(tree, c, usize::MAX),
        [c1, c2] => {
            let a = rooted_code(tree, c1, c2);
            let b = rooted_code(tree, c2, c1);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let mut out = Vec::with_capacity(lo.len() + hi.len() + 2);
            out.push(b'[');
            out.extend_from_slice(&lo);
            out.extend_from_slice(&hi);
            out.push(b']');
            out
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

fn rooted_code(tree: &Graph, v: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = tree
        .neighbors(v)
        .filter(|&w| w != parent)
        .map(|w| rooted_code(tree, w, v))
        .collect();
    children.sort();
    let mut out = vec![b'('];
    for c in children {
        out.extend_from_slice(&c);
    }
    out.push(b')');
    out
}

fn centroids(tree: &Graph) -> Vec<usize> {
    let n = tree.n();
    let mut size = vec![0usize; n];
    let mut best = n;
    let mut out = Vec::new();
    // iterative post-order from vertex 0
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for w in tree.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    for &u in order.iter().rev() {
        size[u] += 1;
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    for v in 0..n {
        let mut heaviest = n - size[v];
        for w in tree.neighbors(v) {
            if w != parent[v] {
                heaviest = heaviest.max(size[w]);
            }
        }
        match heaviest.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = heaviest;
                out.clear();
                out.push(v);
            }
            std::cmp::Ordering::Equal => out.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    out
}

/// All-pairs shortest path matrix by Floyd-Warshall; `None` when a pair is
/// unreachable. Independent of the BFS route in `status`.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.n();
    const INF: u64 = u64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| (x < INF).then_some(x))
                .collect()
        })
        .collect()
}

/// Sum of distances over unordered pairs (the Wiener index), from the
/// Floyd-Warshall matrix. Panics on disconnected input.
pub fn wiener_index_brute(g: &Graph) -> u64 {
    let d = floyd_warshall(g);
    let n = g.n();
    let mut total = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            total += d[i][j].expect("connected graph");
        }
    }
    total
}

/// Validates that the canonical form separates exactly the isomorphism
/// classes among `graphs`: invariance between equal-form graphs is implied
/// by construction, completeness is checked by permutation search across
/// distinct forms. Quadratic; intended for small corpora.
pub fn assert_canonical_separates(graphs: &[Graph]) {
    let forms: Vec<_> = graphs
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            let iso = are_isomorphic_brute(&graphs[i], &graphs[j]);
            let same_form = forms[i] == forms[j];
            assert_eq!(
                iso, same_form,
                "canonical form disagrees with permutation search on pair ({i}, {j})"
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn connected_counts_tiny() {
        assert_eq!(connected_classes_brute(1).len(), 1);
        assert_eq!(connected_classes_brute(2).len(), 1);
        assert_eq!(connected_classes_brute(3).len(), 2);
        assert_eq!(connected_classes_brute(4).len(), 6);
    }

    #[test]
    fn prufer_tree_counts_tiny() {
        assert_eq!(trees_by_prufer(1).len(), 1);
        assert_eq!(trees_by_prufer(2).len(), 1);
        assert_eq!(trees_by_prufer(3).len(), 1);
        assert_eq!(trees_by_prufer(4).len(), 2);
        assert_eq!(trees_by_prufer(5).len(), 3);
        assert_eq!(trees_by_prufer(6).len(), 6);
    }

    #[test]
    fn ahu_agrees_with_canonical_form_on_trees() {
        let trees = trees_by_prufer(7);
        // pairwise: equal AHU iff equal canonical form
        for i in 0..trees.len() {
            for j in i..trees.len() {
                let same_ahu = ahu_code(&trees[i]) == ahu_code(&trees[j]);
                let same_canon =
                    canonical_form(&trees[i]).unwrap() == canonical_form(&trees[j]).unwrap();
                assert_eq!(same_ahu, same_canon, "pair ({i}, {j})");
            }
        }
    }

    #[test]
    fn iso_brute_basics() {
        let p4a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p4b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(are_isomorphic_brute(&p4a, &p4b));
        assert!(!are_isomorphic_brute(&p4a, &star));
    }

    #[test]
    fn floyd_matches_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = floyd_warshall(&p4);
        assert_eq!(d[0][3], Some(3));
        assert_eq!(wiener_index_brute(&p4), 1 + 2 + 3 + 1 + 2 + 1);
    }
}
