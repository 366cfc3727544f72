//! Vertex statuses (sums of distances) and status sequences, all in exact
//! integer arithmetic. Status is only defined on connected graphs; every
//! operation here errors on disconnected input.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Nondecreasing list of all vertex statuses of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct StatusSequence(Vec<u64>);

impl StatusSequence {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min_value(&self) -> u64 {
        self.0[0]
    }

    /// Number of entries equal to `value`.
    pub fn multiplicity(&self, value: u64) -> usize {
        self.0.iter().filter(|&&s| s == value).count()
    }

    pub fn has_repeat(&self) -> bool {
        self.0.windows(2).any(|w| w[0] == w[1])
    }
}

/// BFS distances from `v` to every vertex.
pub fn distances_from(g: &Graph, v: usize) -> Result<Vec<u64>> {
    let n = g.n();
    if v >= n {
        return Err(Error::VertexOutOfRange { index: v, order: n });
    }
    let mut dist = vec![u64::MAX; n];
    dist[v] = 0;
    let mut queue = VecDeque::with_capacity(n);
    queue.push_back(v);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == u64::MAX {
                dist[w] = dist[u] + 1;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    if reached != n {
        return Err(Error::NotConnected);
    }
    Ok(dist)
}

/// Status of `v`: the sum of distances from `v` to all other vertices.
pub fn status(g: &Graph, v: usize) -> Result<u64> {
    Ok(distances_from(g, v)?.iter().sum())
}

/// Statuses of all vertices in index order (unsorted).
pub fn all_statuses(g: &Graph) -> Result<Vec<u64>> {
    (0..g.n()).map(|v| status(g, v)).collect()
}

/// The status sequence: all vertex statuses sorted nondecreasing.
pub fn status_sequence(g: &Graph) -> Result<StatusSequence> {
    let mut values = all_statuses(g)?;
    values.sort_unstable();
    Ok(StatusSequence(values))
}

/// True iff all vertex statuses are pairwise distinct.
pub fn is_status_injective(g: &Graph) -> Result<bool> {
    Ok(!status_sequence(g)?.has_repeat())
}

/// First (lexicographically smallest) pair of vertices with equal status,
/// if any.
pub fn first_status_collision(g: &Graph) -> Result<Option<(usize, usize)>> {
    let statuses = all_statuses(g)?;
    for i in 0..statuses.len() {
        for j in i + 1..statuses.len() {
            if statuses[i] == statuses[j] {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}
