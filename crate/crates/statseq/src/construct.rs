//! The uniform family of a tree and a unicyclic graph of every order
//! `n >= 19` that share a status sequence.
//!
//! Vertices carry 1-based labels: label `i` is stored at index `i - 1`, and
//! this labeling is part of the public contract so the closed-form status
//! table and the tree/unicyclic correspondence stay auditable.
//!
//! For odd `n = 2k + 5` (`k >= 7`) the tree is the path `x_1 .. x_2k` with
//! five pendant vertices attached at `x_3`, `x_{k+1}`, `x_{k+3}`,
//! `x_{2k-3}`, `x_{2k-2}`; the unicyclic partner is a path with three
//! pendants and a 4-cycle through `x_{2k-2}, x_{2k-1}, x_{2k+1}, x_{2k+2}`.
//! For even `n = 2k + 6` both graphs gain one extra pendant on vertex
//! `2k + 5`.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClass};
use crate::status::{all_statuses, status_sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// The order-`n` tree/unicyclic pair, with equal status sequences verified
/// at construction time.
#[derive(Debug, Clone)]
pub struct ConstructionPair {
    pub n: usize,
    pub k: usize,
    pub parity: Parity,
    pub tree: Graph,
    pub unicyclic: Graph,
}

/// Closed-form statuses for every vertex of the order-`n` tree, by label.
#[derive(Debug, Clone)]
pub struct ClosedFormTable {
    pub n: usize,
    pub k: usize,
    pub parity: Parity,
    /// the minimum status, attained exactly at label `k + 1`
    pub base: u64,
    /// entry `i` is the status of label `i + 1`
    pub entries: Vec<u64>,
}

/// Splits `n >= 19` into `(k, parity)` with `n = 2k + 5` or `n = 2k + 6`.
pub fn order_params(n: usize) -> Result<(usize, Parity)> {
    if n < 19 {
        return Err(Error::OrderBelowUniform { order: n });
    }
    if n % 2 == 1 {
        Ok(((n - 5) / 2, Parity::Odd))
    } else {
        Ok(((n - 6) / 2, Parity::Even))
    }
}

fn tree_edges(n: usize) -> Result<Vec<(usize, usize)>> {
    let (k, parity) = order_params(n)?;
    // labels throughout; converted to indices on insertion
    let mut edges: Vec<(usize, usize)> = (1..2 * k).map(|i| (i, i + 1)).collect();
    edges.push((3, 2 * k + 1));
    edges.push((k + 1, 2 * k + 5));
    edges.push((k + 3, 2 * k + 4));
    edges.push((2 * k - 3, 2 * k + 3));
    edges.push((2 * k - 2, 2 * k + 2));
    if parity == Parity::Even {
        edges.push((2 * k + 5, 2 * k + 6));
    }
    Ok(edges)
}

fn unicyclic_edges(n: usize) -> Result<Vec<(usize, usize)>> {
    let (k, parity) = order_params(n)?;
    let mut edges: Vec<(usize, usize)> = (1..2 * k).map(|i| (i, i + 1)).collect();
    edges.push((5, 2 * k + 3));
    edges.push((k - 1, 2 * k + 4));
    edges.push((k + 1, 2 * k + 5));
    edges.push((2 * k - 2, 2 * k + 2));
    edges.push((2 * k - 1, 2 * k + 1));
    edges.push((2 * k + 1, 2 * k + 2));
    if parity == Parity::Even {
        edges.push((2 * k + 5, 2 * k + 6));
    }
    Ok(edges)
}

fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut g = Graph::new(n);
    for &(a, b) in edges {
        g.add_edge(a - 1, b - 1).expect("construction edges in range");
    }
    g
}

/// The order-`n` tree of the family (`n >= 19`).
pub fn build_tree(n: usize) -> Result<Graph> {
    let g = from_labeled_edges(n, &tree_edges(n)?);
    debug_assert_eq!(g.classify(), GraphClass::Tree);
    debug_assert!(g.max_degree() <= 3);
    Ok(g)
}

/// The order-`n` unicyclic partner (`n >= 19`); its unique cycle has
/// length 4.
pub fn build_unicyclic(n: usize) -> Result<Graph> {
    let g = from_labeled_edges(n, &unicyclic_edges(n)?);
    debug_assert_eq!(g.classify(), GraphClass::Unicyclic);
    Ok(g)
}

/// Builds both graphs and verifies entrywise status-sequence equality
/// before returning. A mismatch would mean a transcription bug in the edge
/// lists, so it fails hard.
pub fn build_pair(n: usize) -> Result<ConstructionPair> {
    let (k, parity) = order_params(n)?;
    let tree = build_tree(n)?;
    let unicyclic = build_unicyclic(n)?;
    let st = status_sequence(&tree).expect("constructed tree is connected");
    let su = status_sequence(&unicyclic).expect("constructed unicyclic graph is connected");
    assert_eq!(
        st, su,
        "status sequences of the order-{n} pair must agree; construction is broken"
    );
    Ok(ConstructionPair {
        n,
        k,
        parity,
        tree,
        unicyclic,
    })
}

/// The label bijection witnessing equal status sequences: entry `i` is
/// `sigma(i + 1)` where the status of tree vertex `x_i` equals the status
/// of unicyclic vertex `y_sigma(i)`. Fixed outside `4..=2k-2`, reversed
/// (`i -> 2k + 2 - i`) inside.
pub fn correspondence(n: usize) -> Result<Vec<usize>> {
    let (k, _) = order_params(n)?;
    Ok((1..=n)
        .map(|i| {
            if (4..=2 * k - 2).contains(&i) {
                2 * k + 2 - i
            } else {
                i
            }
        })
        .collect())
}

/// Status of tree vertex `x_i` (1-based label) by the closed-form case
/// table, without building the graph.
pub fn closed_form_status(n: usize, i: usize) -> Result<u64> {
    let (k, parity) = order_params(n)?;
    if i < 1 || i > n {
        return Err(Error::LabelOutOfRange { label: i, order: n });
    }
    let k = k as i64;
    let i = i as i64;
    let value = match parity {
        Parity::Odd => {
            let a = k * k + 3 * k - 2;
            if i == k + 1 {
                a
            } else if i <= k {
                let p = k - i;
                if p <= k - 3 {
                    a + (p + 2) * (p + 2) - 1
                } else if p == k - 2 {
                    a + k * k + 1
                } else {
                    a + (k + 1) * (k + 1) + 3
                }
            } else if i <= 2 * k {
                let q = i - k;
                if q == 2 {
                    a + 1
                } else if q <= k - 3 {
                    a + q * q - 5
                } else {
                    a + (q + 2) * (q + 2) - 4 * k + 1
                }
            } else {
                match i - 2 * k {
                    r @ 1..=3 => a + (k + 1 - r) * (k + 1 - r) + 3,
                    4 => a + 2 * k + 7,
                    _ => a + 2 * k + 3,
                }
            }
        }
        Parity::Even => {
            let d = k * k + 3 * k;
            if i == k + 1 {
                d
            } else if i <= k {
                let p = k - i;
                if p <= k - 3 {
                    d + p * p + 5 * p + 4
                } else if p == k - 2 {
                    d + k * k + k
                } else {
                    d + k * k + 3 * k + 4
                }
            } else if i <= 2 * k {
                let q = i - k;
                if q == 2 {
                    d + 2
                } else if q <= k - 3 {
                    d + q * q + q - 6
                } else {
                    d + q * q + 5 * q - 4 * k + 4
                }
            } else {
                match i - 2 * k {
                    1 => d + k * k + k + 2,
                    2 => d + k * k - k + 2,
                    3 => d + k * k - 3 * k + 4,
                    4 => d + 2 * k + 10,
                    5 => d + 2 * k + 2,
                    _ => d + 4 * k + 6,
                }
            }
        }
    };
    Ok(value as u64)
}

/// The full closed-form table for order `n`.
pub fn closed_form_table(n: usize) -> Result<ClosedFormTable> {
    let (k, parity) = order_params(n)?;
    let entries = (1..=n)
        .map(|i| closed_form_status(n, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(ClosedFormTable {
        n,
        k,
        parity,
        base: entries[k],
        entries,
    })
}

/// BFS statuses of the tree by label (entry `i` is the status of
/// `x_{i+1}`); convenience for reports and tests.
pub fn tree_statuses(g: &Graph) -> Vec<u64> {
    all_statuses(g).expect("construction graphs are connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::status::{status, status_sequence};

    #[test]
    fn rejects_small_orders() {
        for n in [0, 1, 12, 18] {
            assert_eq!(build_tree(n), Err(Error::OrderBelowUniform { order: n }));
            assert_eq!(build_unicyclic(n), Err(Error::OrderBelowUniform { order: n }));
        }
    }

    #[test]
    fn tree_19_shape() {
        let g = build_tree(19).unwrap();
        assert_eq!(g.n(), 19);
        assert_eq!(g.edge_count(), 18);
        assert_eq!(g.max_degree(), 3);
        // pendant edges with k = 7, as labels
        for (a, b) in [(3, 15), (8, 19), (10, 18), (11, 17), (12, 16)] {
            assert!(g.has_edge(a - 1, b - 1), "missing pendant {a}-{b}");
        }
    }

    #[test]
    fn tree_20_extends_tree_19() {
        let t19 = build_tree(19).unwrap();
        let t20 = build_tree(20).unwrap();
        for (u, v) in t19.edges() {
            assert!(t20.has_edge(u, v));
        }
        assert_eq!(t20.edge_count(), t19.edge_count() + 1);
        assert!(t20.has_edge(18, 19)); // labels 19-20
    }

    #[test]
    fn unicyclic_19_has_the_4_cycle() {
        let g = build_unicyclic(19).unwrap();
        assert_eq!(g.classify(), GraphClass::Unicyclic);
        assert_eq!(g.n(), 19);
        assert_eq!(g.edge_count(), 19);
        // cycle y_12 y_13 y_15 y_16 (labels), found by cycle detection:
        let cycle = find_unique_cycle(&g);
        let mut labels: Vec<usize> = cycle.iter().map(|&v| v + 1).collect();
        labels.sort_unstable();
        assert_eq!(labels, vec![12, 13, 15, 16]);
    }

    /// Vertices on the unique cycle of a unicyclic graph: strip leaves
    /// until none remain.
    fn find_unique_cycle(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = queue.pop() {
            removed[v] = true;
            for w in g.neighbors(v) {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        queue.push(w);
                    }
                }
            }
        }
        (0..n).filter(|&v| !removed[v]).collect()
    }

    #[test]
    fn pair_19_matches_published_values() {
        let pair = build_pair(19).unwrap();
        let seq = status_sequence(&pair.tree).unwrap();
        assert_eq!(seq, status_sequence(&pair.unicyclic).unwrap());
        // minimum status 68 = k^2 + 3k - 2 at k = 7, attained once
        assert_eq!(seq.min_value(), 68);
        assert_eq!(seq.multiplicity(68), 1);
        // it is attained at x_{k+1} = x_8
        assert_eq!(status(&pair.tree, 7).unwrap(), 68);
        assert_eq!(status(&pair.tree, 6).unwrap(), 71); // x_7 = x_{k-0}
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(closed_form_status(19, 8).unwrap(), 68);
        assert_eq!(closed_form_status(19, 19).unwrap(), 85); // a + 2k + 3
        assert_eq!(closed_form_status(20, 8).unwrap(), 70);
        assert_eq!(closed_form_status(20, 20).unwrap(), 104); // d + 4k + 6
        assert!(closed_form_status(19, 0).is_err());
        assert!(closed_form_status(19, 20).is_err());
        assert!(closed_form_status(18, 1).is_err());
    }

    #[test]
    fn correspondence_19() {
        let sigma = correspondence(19).unwrap();
        assert_eq!(sigma[4 - 1], 12); // 2k + 2 - 4 with k = 7
        assert_eq!(sigma[8 - 1], 8); // k + 1 is fixed
        assert_eq!(sigma[1 - 1], 1);
        assert_eq!(correspondence(20).unwrap()[20 - 1], 20);
        // sigma is an involution on labels
        for (i0, &s) in sigma.iter().enumerate() {
            assert_eq!(sigma[s - 1], i0 + 1);
        }
    }

    #[test]
    fn pair_100_equal_sequences() {
        let pair = build_pair(100).unwrap();
        assert_eq!(
            status_sequence(&pair.tree).unwrap(),
            status_sequence(&pair.unicyclic).unwrap()
        );
    }
}
