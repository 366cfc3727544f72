//! Isomorphism-free generation of trees, unicyclic graphs and all connected
//! graphs at small orders.
//!
//! Trees and connected graphs are generated by canonical augmentation: a
//! graph of order `p` is extended by one vertex joined to a nonempty subset
//! of its vertices (a single vertex, for trees), and the extension is kept
//! only when the new vertex lies in the canonical deletion orbit of the
//! child — the orbit of the non-cut vertex with the largest canonical
//! label. Each isomorphism class is then produced exactly once without any
//! global seen-set, so disjoint subtrees of the generation tree can run on
//! independent workers.
//!
//! Unicyclic graphs are generated as tree plus one non-edge with canonical
//! deduplication, reusing the tree stream.

use std::collections::HashSet;

use crate::canon::{canonize_dense, CanonicalForm, Dense};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const TREE_MAX_ORDER: usize = 12;
pub const UNICYCLIC_MAX_ORDER: usize = 12;
pub const CONNECTED_MAX_ORDER: usize = 9;
/// Order 10 over all connected graphs is allowed only behind an explicit
/// opt-in; expect minutes of runtime.
pub const CONNECTED_OPT_IN_ORDER: usize = 10;

/// Generation prefixes are materialized at this order (or at `n - 1` when
/// smaller); one shard per prefix graph.
const SHARD_PREFIX_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Trees,
    Unicyclic,
    ConnectedAll,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Trees => "trees",
            Family::Unicyclic => "unicyclic",
            Family::ConnectedAll => "connected",
        }
    }
}

/// Every free tree of order `n` (1 <= n <= 12), exactly once up to
/// isomorphism, in a deterministic order.
pub fn enum_trees(n: usize) -> Result<GraphStream> {
    if !(1..=TREE_MAX_ORDER).contains(&n) {
        return Err(Error::EnumerationBound {
            family: "tree",
            lo: 1,
            hi: TREE_MAX_ORDER,
            order: n,
        });
    }
    Ok(GraphStream {
        family: Family::Trees,
        order: n,
        inner: StreamImpl::Augment(AugmentIter::from_base(n, true)),
    })
}

/// Every unicyclic graph of order `n` (3 <= n <= 12), exactly once up to
/// isomorphism.
pub fn enum_unicyclic(n: usize) -> Result<GraphStream> {
    if !(3..=UNICYCLIC_MAX_ORDER).contains(&n) {
        return Err(Error::EnumerationBound {
            family: "unicyclic",
            lo: 3,
            hi: UNICYCLIC_MAX_ORDER,
            order: n,
        });
    }
    Ok(GraphStream {
        family: Family::Unicyclic,
        order: n,
        inner: StreamImpl::Unicyclic(UnicyclicIter::new(n)),
    })
}

/// Every connected graph of order `n` (1 <= n <= 9), exactly once up to
/// isomorphism.
pub fn enum_connected(n: usize) -> Result<GraphStream> {
    if !(1..=CONNECTED_MAX_ORDER).contains(&n) {
        return Err(Error::EnumerationBound {
            family: "connected",
            lo: 1,
            hi: CONNECTED_MAX_ORDER,
            order: n,
        });
    }
    Ok(connected_stream(n))
}

/// As [`enum_connected`] but additionally allows order 10 (documented long
/// runtime: tens of millions of canonical labelings).
pub fn enum_connected_opt_in(n: usize) -> Result<GraphStream> {
    if !(1..=CONNECTED_OPT_IN_ORDER).contains(&n) {
        return Err(Error::EnumerationBound {
            family: "connected",
            lo: 1,
            hi: CONNECTED_OPT_IN_ORDER,
            order: n,
        });
    }
    Ok(connected_stream(n))
}

fn connected_stream(n: usize) -> GraphStream {
    GraphStream {
        family: Family::ConnectedAll,
        order: n,
        inner: StreamImpl::Augment(AugmentIter::from_base(n, false)),
    }
}

/// A deterministic, isomorphism-free stream of graphs of one family and
/// order. Implements `Iterator`.
pub struct GraphStream {
    family: Family,
    order: usize,
    inner: StreamImpl,
}

enum StreamImpl {
    Augment(AugmentIter),
    Unicyclic(UnicyclicIter),
}

impl GraphStream {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.inner {
            StreamImpl::Augment(it) => it.next().map(|d| d.to_graph()),
            StreamImpl::Unicyclic(it) => it.next(),
        }
    }
}

// ---------------------------------------------------------------------------
// Canonical augmentation
// ---------------------------------------------------------------------------

struct AugmentIter {
    target: usize,
    singles_only: bool,
    /// pending graphs, deepest last; popping yields depth-first order
    stack: Vec<Dense>,
}

impl AugmentIter {
    fn from_base(target: usize, singles_only: bool) -> AugmentIter {
        AugmentIter {
            target,
            singles_only,
            stack: vec![Dense::empty(1)],
        }
    }

    fn from_root(root: Dense, target: usize, singles_only: bool) -> AugmentIter {
        AugmentIter {
            target,
            singles_only,
            stack: vec![root],
        }
    }
}

impl Iterator for AugmentIter {
    type Item = Dense;

    fn next(&mut self) -> Option<Dense> {
        while let Some(g) = self.stack.pop() {
            if g.n == self.target {
                return Some(g);
            }
            let children = accepted_children(&g, self.singles_only);
            self.stack.extend(children.into_iter().rev());
        }
        None
    }
}

/// All canonical one-vertex extensions of `parent`, in subset order.
///
/// Isomorphic children of one parent arise exactly from attachment subsets
/// in the same `Aut(parent)` orbit, so deduplicating accepted children by
/// canonical form yields one representative per orbit.
fn accepted_children(parent: &Dense, singles_only: bool) -> Vec<Dense> {
    let p = parent.n;
    let new_vertex = p;
    let mut out = Vec::new();
    let mut accepted_forms: HashSet<Vec<u16>> = HashSet::new();
    let masks: Vec<u16> = if singles_only {
        (0..p).map(|v| 1u16 << v).collect()
    } else {
        (1..(1u32 << p)).map(|m| m as u16).collect()
    };
    for mask in masks {
        let child = parent.with_new_vertex(mask);
        let outcome = canonize_dense(&child);
        if is_canonical_extension(&child, new_vertex, &outcome)
            && accepted_forms.insert(outcome.image)
        {
            out.push(child);
        }
    }
    out
}

/// The canonicity test: the new vertex must lie in the same automorphism
/// orbit as the non-cut vertex with the largest canonical label.
fn is_canonical_extension(
    child: &Dense,
    new_vertex: usize,
    outcome: &crate::canon::CanonOutcome,
) -> bool {
    let non_cut = child.non_cut_mask();
    debug_assert!(non_cut & (1 << new_vertex) != 0);
    let mut target = usize::MAX;
    let mut best_pos = 0;
    let mut m = non_cut;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if target == usize::MAX || outcome.pos[v] > best_pos {
            target = v;
            best_pos = outcome.pos[v];
        }
    }
    outcome.orbit_rep[new_vertex] == outcome.orbit_rep[target]
}

// ---------------------------------------------------------------------------
// Unicyclic = tree + one non-edge, deduplicated by canonical form
// ---------------------------------------------------------------------------

struct UnicyclicIter {
    trees: AugmentIter,
    current: Option<(Dense, Vec<(usize, usize)>, usize)>,
    seen: HashSet<CanonicalForm>,
}

impl UnicyclicIter {
    fn new(n: usize) -> UnicyclicIter {
        UnicyclicIter {
            trees: AugmentIter::from_base(n, true),
            current: None,
            seen: HashSet::new(),
        }
    }
}

impl Iterator for UnicyclicIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if self.current.is_none() {
                let tree = self.trees.next()?;
                let n = tree.n;
                let non_edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| !tree.has(u, v))
                    .collect();
                self.current = Some((tree, non_edges, 0));
            }
            let (tree, non_edges, idx) = self.current.as_mut().unwrap();
            if *idx == non_edges.len() {
                self.current = None;
                continue;
            }
            let (u, v) = non_edges[*idx];
            *idx += 1;
            let mut candidate = *tree;
            candidate.add_edge(u, v);
            let form = canonize_dense(&candidate).form();
            if self.seen.insert(form) {
                return Some(candidate.to_graph());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Prefix shards for parallel runs
// ---------------------------------------------------------------------------

/// One independent unit of generation work: the augmentation subtree below
/// a fixed prefix graph. Shards of a family/order pair are disjoint and
/// together cover the whole stream, in stream order.
pub struct Shard {
    root: Graph,
    target: usize,
    singles_only: bool,
}

impl Shard {
    pub fn for_each<F: FnMut(Graph)>(&self, mut f: F) {
        let it = AugmentIter::from_root(
            Dense::from_graph(&self.root),
            self.target,
            self.singles_only,
        );
        for d in it {
            f(d.to_graph());
        }
    }
}

/// Decomposes tree or connected-graph generation at order `n` into shards.
/// The decomposition is a fixed function of `(family, n)`, so merged shard
/// output is identical to the sequential stream regardless of worker count.
/// Bounds are the caller's responsibility (this is pub(crate) plumbing).
pub(crate) fn shards_for(family: Family, n: usize) -> Vec<Shard> {
    let singles_only = match family {
        Family::Trees => true,
        Family::ConnectedAll => false,
        Family::Unicyclic => unreachable!("unicyclic generation is not sharded"),
    };
    let prefix_order = SHARD_PREFIX_ORDER.min(n.saturating_sub(1)).max(1);
    AugmentIter::from_base(prefix_order, singles_only)
        .map(|d| Shard {
            root: d.to_graph(),
            target: n,
            singles_only,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphClass;

    #[test]
    fn tiny_tree_counts() {
        assert_eq!(enum_trees(1).unwrap().count(), 1);
        assert_eq!(enum_trees(2).unwrap().count(), 1);
        assert_eq!(enum_trees(3).unwrap().count(), 1);
        assert_eq!(enum_trees(4).unwrap().count(), 2);
    }

    #[test]
    fn tiny_unicyclic_counts() {
        assert_eq!(enum_unicyclic(3).unwrap().count(), 1);
        assert_eq!(enum_unicyclic(4).unwrap().count(), 2);
    }

    #[test]
    fn tiny_connected_counts() {
        assert_eq!(enum_connected(1).unwrap().count(), 1);
        assert_eq!(enum_connected(2).unwrap().count(), 1);
        assert_eq!(enum_connected(3).unwrap().count(), 2);
        assert_eq!(enum_connected(4).unwrap().count(), 6);
    }

    #[test]
    fn bounds_enforced() {
        assert!(enum_trees(0).is_err());
        assert!(enum_trees(13).is_err());
        assert!(enum_unicyclic(2).is_err());
        assert!(enum_connected(10).is_err());
        assert!(enum_connected_opt_in(10).is_ok());
        assert!(enum_connected_opt_in(11).is_err());
    }

    #[test]
    fn families_are_sound() {
        for g in enum_trees(7).unwrap() {
            assert_eq!(g.classify(), GraphClass::Tree);
        }
        for g in enum_unicyclic(7).unwrap() {
            assert_eq!(g.classify(), GraphClass::Unicyclic);
        }
        for g in enum_connected(6).unwrap() {
            assert!(g.is_connected());
        }
    }

    #[test]
    fn stream_is_deterministic() {
        let a: Vec<_> = enum_connected(6).unwrap().map(|g| g.edges()).collect();
        let b: Vec<_> = enum_connected(6).unwrap().map(|g| g.edges()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn shards_merge_to_the_stream() {
        for family in [Family::Trees, Family::ConnectedAll] {
            for n in [5usize, 8] {
                let stream: Vec<_> = match family {
                    Family::Trees => enum_trees(n).unwrap().map(|g| g.edges()).collect(),
                    Family::ConnectedAll => {
                        enum_connected(n).unwrap().map(|g| g.edges()).collect()
                    }
                    Family::Unicyclic => unreachable!(),
                };
                let mut merged = Vec::new();
                for shard in shards_for(family, n) {
                    shard.for_each(|g| merged.push(g.edges()));
                }
                assert_eq!(stream, merged, "{family:?} n={n}");
            }
        }
    }
}
