//! Exhaustive discovery of (tree, non-tree) pairs sharing a status
//! sequence: index the trees of order `n` by status sequence, stream a
//! non-tree universe against the index, and re-verify every hit before
//! reporting it.

use std::collections::HashMap;

use serde::Serialize;

use crate::codec::to_graph6;
use crate::enumerate::{enum_trees, enum_unicyclic, shards_for, Family};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClass};
use crate::status::{status_sequence, StatusSequence};

/// A discovered (tree, non-tree) pair with equal status sequences, with
/// enough data to re-check it from scratch. Serializes to one JSON line.
#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub order: usize,
    /// graph6 of the tree
    pub tree: String,
    /// graph6 of the non-tree partner
    pub other: String,
    pub other_class: GraphClass,
    pub sequence: StatusSequence,
    pub verified: bool,
}

/// Which non-tree graphs to stream against the tree index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Universe {
    UnicyclicOnly,
    AllNontree,
}

impl Universe {
    pub fn family_name(&self) -> &'static str {
        match self {
            Universe::UnicyclicOnly => "unicyclic",
            Universe::AllNontree => "nontree-connected",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// parallel workers for the all-nontree universe (output is identical
    /// for every worker count)
    pub workers: usize,
    /// allows order 10 in the all-nontree universe (long runtime)
    pub allow_order_ten: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: 1,
            allow_order_ten: false,
        }
    }
}

/// Everything a search run produced: the verified pair reports plus census
/// counts of the scanned universes.
#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub order: usize,
    pub universe: Universe,
    pub tree_count: u64,
    /// non-tree graphs scanned
    pub universe_count: u64,
    pub pairs: Vec<PairReport>,
}

/// Re-checks a candidate pair: equal status sequences, first graph a tree,
/// second not a tree. Errors on order mismatch or disconnected input.
pub fn verify_pair(tree: &Graph, other: &Graph) -> Result<PairReport> {
    if tree.n() != other.n() {
        return Err(Error::OrderMismatch {
            left: tree.n(),
            right: other.n(),
        });
    }
    let seq_tree = status_sequence(tree)?;
    let seq_other = status_sequence(other)?;
    let tree_class = tree.classify();
    let other_class = other.classify();
    let verified = seq_tree == seq_other
        && tree_class == GraphClass::Tree
        && other_class != GraphClass::Tree;
    Ok(PairReport {
        order: tree.n(),
        tree: to_graph6(tree),
        other: to_graph6(other),
        other_class,
        sequence: seq_tree,
        verified,
    })
}

/// Finds every (tree, non-tree) same-sequence pair at order `n` over the
/// chosen universe. Deterministic for fixed parameters, including the
/// worker count.
pub fn find_pairs(n: usize, universe: Universe, opts: &SearchOptions) -> Result<SearchOutcome> {
    let trees: Vec<Graph> = enum_trees(n)?.collect();
    let mut index: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for (i, t) in trees.iter().enumerate() {
        let seq = status_sequence(t).expect("trees are connected");
        index.entry(seq.values().to_vec()).or_default().push(i);
    }

    let (universe_count, pairs) = match universe {
        Universe::UnicyclicOnly => {
            let mut count = 0u64;
            let mut pairs = Vec::new();
            for g in enum_unicyclic(n)? {
                count += 1;
                probe(&g, &trees, &index, &mut pairs);
            }
            (count, pairs)
        }
        Universe::AllNontree => {
            if n > crate::enumerate::CONNECTED_MAX_ORDER && !opts.allow_order_ten {
                return Err(Error::OptInRequired);
            }
            if n > crate::enumerate::CONNECTED_OPT_IN_ORDER {
                return Err(Error::EnumerationBound {
                    family: "connected",
                    lo: 1,
                    hi: crate::enumerate::CONNECTED_OPT_IN_ORDER,
                    order: n,
                });
            }
            scan_nontree_sharded(n, &trees, &index, opts.workers.max(1))
        }
    };

    Ok(SearchOutcome {
        order: n,
        universe,
        tree_count: trees.len() as u64,
        universe_count,
        pairs,
    })
}

fn probe(
    g: &Graph,
    trees: &[Graph],
    index: &HashMap<Vec<u64>, Vec<usize>>,
    pairs: &mut Vec<PairReport>,
) {
    let seq = status_sequence(g).expect("streamed graphs are connected");
    if let Some(tree_ids) = index.get(seq.values()) {
        for &i in tree_ids {
            let report = verify_pair(&trees[i], g).expect("same order, both connected");
            debug_assert!(report.verified);
            pairs.push(report);
        }
    }
}

fn scan_nontree_sharded(
    n: usize,
    trees: &[Graph],
    index: &HashMap<Vec<u64>, Vec<usize>>,
    workers: usize,
) -> (u64, Vec<PairReport>) {
    let shards = shards_for(Family::ConnectedAll, n);
    let scan_shard = |shard: &crate::enumerate::Shard| {
        let mut count = 0u64;
        let mut pairs = Vec::new();
        shard.for_each(|g| {
            if g.edge_count() >= g.n() {
                count += 1;
                probe(&g, trees, index, &mut pairs);
            }
        });
        (count, pairs)
    };

    let results: Vec<(u64, Vec<PairReport>)> = if workers == 1 {
        shards.iter().map(scan_shard).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            shards.par_iter().map(scan_shard).collect()
        })
    };

    let mut count = 0u64;
    let mut pairs = Vec::new();
    for (c, mut p) in results {
        count += c;
        pairs.append(&mut p);
    }
    (count, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_pair;
    use crate::graph::Graph;

    #[test]
    fn verify_the_constructed_pair() {
        let pair = build_pair(19).unwrap();
        let report = verify_pair(&pair.tree, &pair.unicyclic).unwrap();
        assert!(report.verified);
        assert_eq!(report.other_class, GraphClass::Unicyclic);
    }

    #[test]
    fn verify_rejects_unequal_sequences_and_classes() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let report = verify_pair(&p4, &c4).unwrap();
        assert!(!report.verified);

        let pair = build_pair(19).unwrap();
        let report = verify_pair(&pair.tree, &pair.tree.clone()).unwrap();
        assert!(!report.verified, "other must not be a tree");

        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(matches!(
            verify_pair(&p4, &p5),
            Err(Error::OrderMismatch { left: 4, right: 5 })
        ));
    }

    #[test]
    fn small_orders_have_no_pairs() {
        for n in 4..=7 {
            let out = find_pairs(n, Universe::AllNontree, &SearchOptions::default()).unwrap();
            assert!(out.pairs.is_empty(), "unexpected pair at order {n}");
            assert!(out.universe_count > 0);
        }
    }

    #[test]
    fn unicyclic_universe_runs() {
        let out = find_pairs(8, Universe::UnicyclicOnly, &SearchOptions::default()).unwrap();
        assert!(out.pairs.is_empty());
        assert_eq!(out.order, 8);
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let base = find_pairs(7, Universe::AllNontree, &SearchOptions::default()).unwrap();
        let par = find_pairs(
            7,
            Universe::AllNontree,
            &SearchOptions {
                workers: 4,
                allow_order_ten: false,
            },
        )
        .unwrap();
        assert_eq!(base.universe_count, par.universe_count);
        assert_eq!(
            serde_json::to_string(&base.pairs).unwrap(),
            serde_json::to_string(&par.pairs).unwrap()
        );
    }

    #[test]
    fn order_ten_needs_opt_in() {
        assert!(matches!(
            find_pairs(10, Universe::AllNontree, &SearchOptions::default()),
            Err(Error::OptInRequired)
        ));
    }

    #[test]
    fn report_serializes_to_one_json_line() {
        let pair = build_pair(19).unwrap();
        let report = verify_pair(&pair.tree, &pair.unicyclic).unwrap();
        let line = serde_json::to_string(&report).unwrap();
        assert!(!line.contains('\n'));
        assert!(line.contains("\"verified\":true"));
        assert!(line.contains("\"other_class\":\"unicyclic\""));
    }
}
