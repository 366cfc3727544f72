//! Labeled trees from Prüfer sequences.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decodes a Prüfer sequence of length `n - 2` into the labeled tree on
/// vertices `0..n`. Orders 1 and 2 take the empty sequence.
pub fn tree_from_prufer(seq: &[usize], n: usize) -> Result<Graph> {
    if n == 0 || seq.len() + 2 != n.max(2) {
        return Err(Error::EdgeList(format!(
            "prufer sequence length {} does not match order {}",
            seq.len(),
            n
        )));
    }
    let mut g = Graph::new(n);
    if n == 1 {
        return Ok(g);
    }
    for &s in seq {
        if s >= n {
            return Err(Error::VertexOutOfRange { index: s, order: n });
        }
    }
    let mut deg = vec![1usize; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    for &s in seq {
        let u = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&u);
        g.add_edge(u, s)?;
        deg[u] -= 1;
        deg[s] -= 1;
        if deg[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut it = leaves.iter();
    let (&a, &b) = (it.next().unwrap(), it.next().unwrap());
    g.add_edge(a, b)?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphClass;

    #[test]
    fn tiny_orders() {
        assert_eq!(tree_from_prufer(&[], 1).unwrap().n(), 1);
        let k2 = tree_from_prufer(&[], 2).unwrap();
        assert!(k2.has_edge(0, 1));
    }

    #[test]
    fn every_sequence_is_a_tree() {
        let n = 5;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t = tree_from_prufer(&[a, b, c], n).unwrap();
                    assert_eq!(t.classify(), GraphClass::Tree);
                }
            }
        }
    }

    #[test]
    fn known_decoding() {
        // sequence [3, 3, 3, 4] gives the tree with edges 0-3 1-3 2-3 3-4 4-5
        let t = tree_from_prufer(&[3, 3, 3, 4], 6).unwrap();
        assert_eq!(t.edges(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(tree_from_prufer(&[9], 3).is_err());
        assert!(tree_from_prufer(&[0, 0], 3).is_err());
    }
}
