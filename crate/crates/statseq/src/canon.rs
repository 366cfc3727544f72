//! Exact canonical labeling for graphs of order at most 16.
//!
//! The algorithm is the usual individualization-refinement scheme: vertices
//! are first grouped by an isomorphism-invariant key (degree plus distance
//! profile), the partition is refined to equitability by neighbor counting,
//! and the remaining symmetry is resolved by backtracking over target-cell
//! candidates. The canonical form is the lexicographically largest adjacency
//! image over all visited leaves. Automorphisms discovered at leaves prune
//! the search and yield the exact orbit partition as a byproduct.

use std::collections::HashSet;

use crate::codec::graph6_bytes;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard upper bound on canonizable order (adjacency rows are `u16` masks).
pub const CANON_BOUND: usize = 16;

const MAXN: usize = 16;
const GENS_CAP: usize = 256;

/// Canonical, isomorphism-complete encoding of a graph. Two graphs of order
/// at most [`CANON_BOUND`] compare equal here iff they are isomorphic.
///
/// The bytes are the graph6 encoding of the canonically relabeled graph, so
/// a form can be decoded back into a concrete representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative as a graph6 string.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 bytes are ASCII")
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", self.as_graph6())
    }
}

/// Canonical form under the default order bound of 16.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_bounded(g, CANON_BOUND)
}

/// Canonical form with a caller-tightened order bound (`bound <= 16`).
pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<CanonicalForm> {
    let bound = bound.min(CANON_BOUND);
    if g.n() > bound {
        return Err(Error::CanonBoundExceeded {
            order: g.n(),
            bound,
        });
    }
    let dense = Dense::from_graph(g);
    Ok(canonize_dense(&dense).form())
}

/// A permutation mapping each vertex to its canonical position.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > CANON_BOUND {
        return Err(Error::CanonBoundExceeded {
            order: g.n(),
            bound: CANON_BOUND,
        });
    }
    let dense = Dense::from_graph(g);
    Ok(canonize_dense(&dense).pos)
}

/// Automorphism orbit representative (smallest member) per vertex.
pub fn automorphism_orbits(g: &Graph) -> Result<Vec<usize>> {
    if g.n() > CANON_BOUND {
        return Err(Error::CanonBoundExceeded {
            order: g.n(),
            bound: CANON_BOUND,
        });
    }
    let dense = Dense::from_graph(g);
    Ok(canonize_dense(&dense).orbit_rep)
}

// ---------------------------------------------------------------------------
// Dense bitmask representation (internal work format, also used by the
// enumeration engine).
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) struct Dense {
    pub n: usize,
    pub rows: [u16; MAXN],
}

impl Dense {
    pub fn empty(n: usize) -> Self {
        assert!((1..=MAXN).contains(&n));
        Dense { n, rows: [0; MAXN] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut d = Dense::empty(g.n());
        for (u, v) in g.edges() {
            d.add_edge(u, v);
        }
        d
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            let mut m = self.rows[u] & !((1u32 << (u + 1)) as u16).wrapping_sub(1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                g.add_edge(u, v).expect("dense edges are valid");
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.rows[u] & (1 << v) != 0
    }

    /// Copy with one extra vertex adjacent to `mask`.
    pub fn with_new_vertex(&self, mask: u16) -> Dense {
        debug_assert!(self.n < MAXN);
        debug_assert_eq!(mask & !(((1u32 << self.n) as u16).wrapping_sub(1)), 0);
        let mut d = *self;
        d.n += 1;
        let v = d.n - 1;
        d.rows[v] = mask;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            d.rows[u] |= 1 << v;
        }
        d
    }

    fn full_mask(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    /// Vertices reachable from `start` while staying inside `allowed`.
    fn reach(&self, start: usize, allowed: u16) -> u16 {
        let mut seen = (1u16 << start) & allowed;
        loop {
            let mut frontier = seen;
            let mut next = seen;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                next |= self.rows[u] & allowed;
            }
            if next == seen {
                return seen;
            }
            seen = next;
        }
    }

    /// Vertices whose removal keeps the graph connected.
    pub fn non_cut_mask(&self) -> u16 {
        let full = self.full_mask();
        if self.n == 1 {
            return full;
        }
        let mut out = 0u16;
        for v in 0..self.n {
            let rest = full & !(1u16 << v);
            let start = rest.trailing_zeros() as usize;
            if self.reach(start, rest) == rest {
                out |= 1 << v;
            }
        }
        out
    }

    /// BFS distances; unreached vertices get `u8::MAX`.
    pub fn distances(&self, src: usize) -> [u8; MAXN] {
        let mut dist = [u8::MAX; MAXN];
        dist[src] = 0;
        let mut seen = 1u16 << src;
        let mut frontier = seen;
        let mut d = 0u8;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[u];
            }
            next &= !seen & self.full_mask();
            d += 1;
            let mut nf = next;
            while nf != 0 {
                let v = nf.trailing_zeros() as usize;
                nf &= nf - 1;
                dist[v] = d;
            }
            seen |= next;
            frontier = next;
        }
        dist
    }
}

// ---------------------------------------------------------------------------
// Ordered partition with cells as contiguous runs of `lab`.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct Part {
    lab: [u8; MAXN],
    pos: [u8; MAXN],
    /// bit p set: a cell ends at position p
    bnd: u16,
    n: usize,
}

impl Part {
    /// Builds a partition from vertex groups, cells in the given order.
    fn from_groups(n: usize, groups: &[Vec<usize>]) -> Part {
        let mut lab = [0u8; MAXN];
        let mut pos = [0u8; MAXN];
        let mut bnd = 0u16;
        let mut p = 0;
        for group in groups {
            for &v in group {
                lab[p] = v as u8;
                pos[v] = p as u8;
                p += 1;
            }
            bnd |= 1 << (p - 1);
        }
        debug_assert_eq!(p, n);
        Part { lab, pos, bnd, n }
    }

    /// End position (inclusive) of the cell starting at `start`.
    fn cell_end(&self, start: usize) -> usize {
        (self.bnd >> start).trailing_zeros() as usize + start
    }

    fn first_nonsingleton(&self) -> Option<(usize, usize)> {
        let mut s = 0;
        while s < self.n {
            let e = self.cell_end(s);
            if e > s {
                return Some((s, e));
            }
            s = e + 1;
        }
        None
    }

    /// Splits `v` off to the front of its cell. Returns the start of the
    /// remainder fragment.
    fn individualize(&mut self, v: usize) -> usize {
        let p = self.pos[v] as usize;
        let mut s = p;
        while s > 0 && self.bnd & (1 << (s - 1)) == 0 {
            s -= 1;
        }
        let w = self.lab[s];
        self.lab[s] = v as u8;
        self.lab[p] = w;
        self.pos[v] = s as u8;
        self.pos[w as usize] = p as u8;
        self.bnd |= 1 << s;
        s + 1
    }
}

// ---------------------------------------------------------------------------
// Equitable refinement by neighbor counting.
// ---------------------------------------------------------------------------

/// Refines `part` until every cell has constant neighbor counts against
/// every other cell. `queue`/`queued` seed the splitter worklist (start
/// positions); every fragment created by a split is enqueued, which is
/// sufficient for the fixpoint.
fn refine(g: &Dense, part: &mut Part, queue: &mut Vec<u8>, queued: &mut u16) {
    while let Some(s) = queue.pop() {
        let s = s as usize;
        *queued &= !(1u16 << s);
        let e = part.cell_end(s);
        let mut w_mask = 0u16;
        for i in s..=e {
            w_mask |= 1 << part.lab[i];
        }
        // split every cell by neighbor count into w_mask
        let mut c_start = 0;
        while c_start < part.n {
            let c_end = part.cell_end(c_start);
            if c_end > c_start {
                split_cell(g, part, c_start, c_end, w_mask, queue, queued);
            }
            c_start = c_end + 1;
        }
    }
}

fn split_cell(
    g: &Dense,
    part: &mut Part,
    start: usize,
    end: usize,
    w_mask: u16,
    queue: &mut Vec<u8>,
    queued: &mut u16,
) {
    let size = end - start + 1;
    let mut cnt = [0u8; MAXN];
    let mut uniform = true;
    for i in 0..size {
        cnt[i] = (g.rows[part.lab[start + i] as usize] & w_mask).count_ones() as u8;
        if cnt[i] != cnt[0] {
            uniform = false;
        }
    }
    if uniform {
        return;
    }
    // stable insertion sort of the slice by count, ascending
    let mut order: [u8; MAXN] = [0; MAXN];
    for (i, o) in order.iter_mut().enumerate().take(size) {
        *o = i as u8;
    }
    for i in 1..size {
        let mut j = i;
        while j > 0 && cnt[order[j - 1] as usize] > cnt[order[j] as usize] {
            order.swap(j - 1, j);
            j -= 1;
        }
    }
    let mut new_lab = [0u8; MAXN];
    for i in 0..size {
        new_lab[i] = part.lab[start + order[i] as usize];
    }
    let mut frag_start = start;
    for i in 0..size {
        let p = start + i;
        part.lab[p] = new_lab[i];
        part.pos[new_lab[i] as usize] = p as u8;
        let last_of_frag = i + 1 == size || cnt[order[i + 1] as usize] != cnt[order[i] as usize];
        if last_of_frag {
            part.bnd |= 1 << p;
            if *queued & (1 << frag_start) == 0 {
                *queued |= 1 << frag_start;
                queue.push(frag_start as u8);
            }
            frag_start = p + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Backtracking search over the residual candidates.
// ---------------------------------------------------------------------------

pub(crate) struct CanonOutcome {
    /// vertex -> canonical position
    pub pos: Vec<usize>,
    /// canonical adjacency rows (by position)
    pub image: Vec<u16>,
    /// automorphism orbit representative (smallest member) per vertex
    pub orbit_rep: Vec<usize>,
}

impl CanonOutcome {
    pub fn form(&self) -> CanonicalForm {
        let bytes = graph6_bytes(self.image.len(), |u, v| self.image[u] & (1 << v) != 0);
        CanonicalForm(bytes)
    }
}

struct Search<'a> {
    g: &'a Dense,
    n: usize,
    first_img: [u16; MAXN],
    first_lab: [u8; MAXN],
    have_first: bool,
    best_img: [u16; MAXN],
    best_lab: [u8; MAXN],
    gens: Vec<[u8; MAXN]>,
    orbit: [u8; MAXN],
    path: [u8; MAXN],
    depth: usize,
}

pub(crate) fn canonize_dense(g: &Dense) -> CanonOutcome {
    let n = g.n;
    let groups = initial_groups(g);
    let mut part = Part::from_groups(n, &groups);
    let mut queue: Vec<u8> = Vec::with_capacity(n);
    let mut queued = 0u16;
    let mut s = 0;
    while s < n {
        if queued & (1 << s) == 0 {
            queued |= 1 << s;
            queue.push(s as u8);
        }
        s = part.cell_end(s) + 1;
    }
    refine(g, &mut part, &mut queue, &mut queued);

    let mut orbit = [0u8; MAXN];
    for (v, o) in orbit.iter_mut().enumerate() {
        *o = v as u8;
    }
    let mut search = Search {
        g,
        n,
        first_img: [0; MAXN],
        first_lab: [0; MAXN],
        have_first: false,
        best_img: [0; MAXN],
        best_lab: [0; MAXN],
        gens: Vec::new(),
        orbit,
        path: [0; MAXN],
        depth: 0,
    };
    search.explore(part);

    let mut pos = vec![0usize; n];
    for p in 0..n {
        pos[search.best_lab[p] as usize] = p;
    }
    let orbit_rep = (0..n).map(|v| find(&mut search.orbit, v)).collect();
    CanonOutcome {
        pos,
        image: search.best_img[..n].to_vec(),
        orbit_rep,
    }
}

/// Initial vertex grouping by (degree, distance profile), an isomorphism
/// invariant. Groups are ordered by the invariant key so the ordering is
/// label-independent.
fn initial_groups(g: &Dense) -> Vec<Vec<usize>> {
    let n = g.n;
    let mut keyed: Vec<(u64, usize)> = (0..n)
        .map(|v| {
            let dist = g.distances(v);
            // counts per distance value, plus degree, folded FNV-style
            let mut counts = [0u8; MAXN + 1];
            for &d in dist[..n].iter() {
                let idx = if d == u8::MAX { MAXN } else { d as usize };
                counts[idx] += 1;
            }
            let mut h: u64 = 0xcbf2_9ce4_8422_2325;
            for &c in counts.iter() {
                h ^= c as u64;
                h = h.wrapping_mul(0x1000_0000_01b3);
            }
            h ^= g.rows[v].count_ones() as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
            (h, v)
        })
        .collect();
    keyed.sort_unstable();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut prev: Option<u64> = None;
    for (key, v) in keyed {
        if prev != Some(key) {
            groups.push(Vec::new());
            prev = Some(key);
        }
        groups.last_mut().unwrap().push(v);
    }
    groups
}

fn find(parent: &mut [u8; MAXN], v: usize) -> usize {
    let mut r = v;
    while parent[r] as usize != r {
        parent[r] = parent[parent[r] as usize];
        r = parent[r] as usize;
    }
    r
}

fn union_min(parent: &mut [u8; MAXN], a: usize, b: usize) {
    let ra = find(parent, a);
    let rb = find(parent, b);
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo as u8;
    }
}

impl Search<'_> {
    fn explore(&mut self, part: Part) {
        let Some((s, e)) = part.first_nonsingleton() else {
            self.leaf(&part);
            return;
        };
        let mut cand: Vec<u8> = part.lab[s..=e].to_vec();
        cand.sort_unstable();
        let mut explored: Vec<u8> = Vec::with_capacity(cand.len());
        // orbits of the subgroup generated by prefix-fixing generators,
        // rebuilt whenever new generators appear
        let mut local = [0u8; MAXN];
        let mut synced = usize::MAX;
        for &v in &cand {
            if synced != self.gens.len() {
                self.rebuild_local(&mut local);
                synced = self.gens.len();
            }
            let rv = find(&mut local, v as usize);
            if explored
                .iter()
                .any(|&w| find(&mut local, w as usize) == rv)
            {
                continue;
            }
            let mut child = part;
            let rest = child.individualize(v as usize);
            // both fragments of the split cell seed the worklist; the target
            // cell has size >= 2 so the remainder at `rest` is nonempty
            let mut queue: Vec<u8> = vec![(rest - 1) as u8, rest as u8];
            let mut queued = (1u16 << (rest - 1)) | (1u16 << rest);
            refine(self.g, &mut child, &mut queue, &mut queued);
            self.path[self.depth] = v;
            self.depth += 1;
            self.explore(child);
            self.depth -= 1;
            explored.push(v);
        }
    }

    fn rebuild_local(&mut self, local: &mut [u8; MAXN]) {
        for (v, l) in local.iter_mut().enumerate() {
            *l = v as u8;
        }
        let prefix = &self.path[..self.depth];
        for gi in 0..self.gens.len() {
            let gen = self.gens[gi];
            if prefix.iter().any(|&p| gen[p as usize] != p) {
                continue;
            }
            for v in 0..self.n {
                union_min(local, v, gen[v] as usize);
            }
        }
    }

    fn leaf(&mut self, part: &Part) {
        let n = self.n;
        let mut img = [0u16; MAXN];
        for p in 0..n {
            let mut row = self.g.rows[part.lab[p] as usize];
            let mut out = 0u16;
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                out |= 1 << part.pos[w];
            }
            img[p] = out;
        }
        if !self.have_first {
            self.first_img = img;
            self.first_lab = part.lab;
            self.have_first = true;
            self.best_img = img;
            self.best_lab = part.lab;
            return;
        }
        let mut recorded = false;
        if img[..n] == self.first_img[..n] {
            self.record_automorphism(part, &self.first_lab.clone());
            recorded = true;
        }
        match img[..n].cmp(&self.best_img[..n]) {
            std::cmp::Ordering::Greater => {
                self.best_img = img;
                self.best_lab = part.lab;
            }
            std::cmp::Ordering::Equal => {
                if !recorded || self.best_lab != self.first_lab {
                    self.record_automorphism(part, &self.best_lab.clone());
                }
            }
            std::cmp::Ordering::Less => {}
        }
    }

    /// Leaf image equals the image of `ref_lab`; the composition is an
    /// automorphism of `g`.
    fn record_automorphism(&mut self, part: &Part, ref_lab: &[u8; MAXN]) {
        let mut a = [0u8; MAXN];
        let mut identity = true;
        for v in 0..self.n {
            a[v] = ref_lab[part.pos[v] as usize];
            if a[v] as usize != v {
                identity = false;
            }
        }
        if identity {
            return;
        }
        for v in 0..self.n {
            union_min(&mut self.orbit, v, a[v] as usize);
        }
        if self.gens.len() < GENS_CAP {
            self.gens.push(a);
        }
    }
}

// ---------------------------------------------------------------------------

/// True iff `perm` maps g exactly onto itself edge-for-edge.
#[cfg(test)]
fn is_automorphism(g: &Dense, perm: &[u8; MAXN]) -> bool {
    for u in 0..g.n {
        for v in u + 1..g.n {
            if g.has(u, v) != g.has(perm[u] as usize, perm[v] as usize) {
                return false;
            }
        }
    }
    true
}

/// Deduplicates graphs by canonical form, preserving first-seen order.
pub(crate) fn dedup_by_canonical<I: IntoIterator<Item = Graph>>(graphs: I) -> Vec<Graph> {
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        let form = canonical_form(&g).expect("order within canonical bound");
        if seen.insert(form) {
            out.push(g);
        }
    }
    out
}
