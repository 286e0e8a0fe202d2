//! Graph types anchored on the Hamiltonian-boundary labeling.
//!
//! [`CycleGraph`] represents an order-`n` graph whose vertices `0..n-1` lie on
//! a Hamiltonian cycle in label order; the cycle edges are implicit (for
//! `n >= 3`) and only the chords are stored. Every maximal outer-planar graph
//! of order `n >= 4` has a unique Hamiltonian cycle (an edge lies on the
//! boundary iff it belongs to exactly one triangle), so this representation is
//! lossless for the graphs this crate enumerates. [`GeneralGraph`] is a plain
//! edge-set graph for subjects that are not cycle-anchored (stars, `G + e`
//! experiments).
//!
//! All values are immutable; edits return new values, so anything here can be
//! shared freely across threads.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Common read-only surface shared by [`CycleGraph`] and [`GeneralGraph`].
pub trait Graph {
    /// Number of vertices.
    fn order(&self) -> usize;

    /// All edges as sorted pairs `(a, b)` with `a < b`, in ascending order.
    fn edges(&self) -> Vec<(usize, usize)>;

    fn has_edge(&self, u: usize, v: usize) -> bool;

    /// Number of edges, `m(G)`.
    fn size(&self) -> usize {
        self.edges().len()
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.order()];
        for (a, b) in self.edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }
}

/// Sum of the degrees of the neighbors of `u`.
pub fn neighbor_degree_sum<G: Graph + ?Sized>(g: &G, u: usize) -> Result<usize> {
    if u >= g.order() {
        return Err(Error::InvalidVertex {
            vertex: u,
            order: g.order(),
        });
    }
    let deg = g.degrees();
    Ok(g.edges()
        .into_iter()
        .filter_map(|(a, b)| {
            if a == u {
                Some(deg[b])
            } else if b == u {
                Some(deg[a])
            } else {
                None
            }
        })
        .sum())
}

/// Breadth-first connectivity. A one-vertex graph is connected.
pub fn is_connected<G: Graph + ?Sized>(g: &G) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for (a, b) in g.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

/// An order-`n` graph with vertices `0..n-1` on a Hamiltonian cycle in label
/// order plus a set of chords. Cycle edges are implicit for `n >= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleGraph {
    n: usize,
    chords: BTreeSet<(usize, usize)>,
}

impl CycleGraph {
    /// Builds a cycle-anchored graph. Each chord `{a, b}` must satisfy
    /// `0 <= a < b <= n-1`, `b - a >= 2`, and `(a, b) != (0, n-1)`, so that no
    /// chord duplicates a cycle edge.
    pub fn new(n: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("order must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for (x, y) in chords {
            let (a, b) = (x.min(y), x.max(y));
            if b >= n {
                return Err(Error::InvalidVertex { vertex: b, order: n });
            }
            if a == b || b - a < 2 || (a == 0 && b == n - 1) {
                return Err(Error::InvalidParameter(format!(
                    "({a}, {b}) is not a valid chord of the {n}-cycle"
                )));
            }
            set.insert((a, b));
        }
        Ok(CycleGraph { n, chords: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.chords.iter().copied()
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    pub fn has_chord(&self, a: usize, b: usize) -> bool {
        self.chords.contains(&(a.min(b), a.max(b)))
    }

    fn is_cycle_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        self.n >= 3 && a < self.n && b < self.n && (b - a == 1 || (a == 0 && b == self.n - 1))
    }

    /// Returns a copy with the edge added. The edge must not already be
    /// present; cycle edges always are.
    pub fn add_edge(&self, a: usize, b: usize) -> Result<Self> {
        if self.is_cycle_edge(a, b) || self.has_chord(a, b) {
            return Err(Error::EdgeExists(a.min(b), a.max(b)));
        }
        // goes through the chord validation in `new`
        CycleGraph::new(self.n, self.chords.iter().copied().chain([(a, b)]))
    }

    /// Returns a copy with the chord removed. Only chords can be removed; a
    /// cycle edge cannot be dropped without leaving the cycle-anchored
    /// representation (convert with [`CycleGraph::to_general`] first).
    pub fn remove_edge(&self, a: usize, b: usize) -> Result<Self> {
        let key = (a.min(b), a.max(b));
        if !self.chords.contains(&key) {
            return Err(Error::EdgeMissing(key.0, key.1));
        }
        let mut next = self.clone();
        next.chords.remove(&key);
        Ok(next)
    }

    /// True iff the chords triangulate the polygon: exactly `n - 3` of them
    /// (equivalently `m = 2n - 3`) and no two cross.
    ///
    /// Two chords `{a, b}`, `{c, d}` (each sorted) cross iff their endpoints
    /// interleave: `a < c < b < d` or `c < a < d < b`; chords sharing an
    /// endpoint never cross in a convex embedding. Non-crossing chords split
    /// the polygon into `|chords| + 1` faces, and with `n - 3` chords an
    /// Euler-count argument forces every inner face to be a triangle, which is
    /// exactly the standard-embedding characterization of maximality.
    pub fn is_maximal_outerplanar(&self) -> Result<bool> {
        if self.n < 3 {
            return Err(Error::InvalidParameter(
                "maximality is defined for order >= 3".into(),
            ));
        }
        if self.chords.len() != self.n - 3 {
            return Ok(false);
        }
        let chords: Vec<_> = self.chords.iter().copied().collect();
        for (i, &(a, b)) in chords.iter().enumerate() {
            for &(c, d) in &chords[i + 1..] {
                if chords_cross((a, b), (c, d)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn to_general(&self) -> GeneralGraph {
        GeneralGraph::new(self.n, self.edges()).expect("cycle graph edges are simple")
    }
}

/// Interleaving test for sorted chord pairs; shared endpoints do not cross.
pub fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl Graph for CycleGraph {
    fn order(&self) -> usize {
        self.n
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut es: Vec<(usize, usize)> = Vec::with_capacity(self.n + self.chords.len());
        if self.n >= 3 {
            for i in 0..self.n - 1 {
                es.push((i, i + 1));
            }
            es.push((0, self.n - 1));
        }
        es.extend(self.chords.iter().copied());
        es.sort_unstable();
        es
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && (self.is_cycle_edge(u, v) || self.has_chord(u, v))
    }

    fn size(&self) -> usize {
        if self.n >= 3 {
            self.n + self.chords.len()
        } else {
            0
        }
    }
}

/// A simple undirected graph given by an explicit edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl GeneralGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("order must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            if x == y {
                return Err(Error::InvalidParameter(format!("loop at vertex {x}")));
            }
            let (a, b) = (x.min(y), x.max(y));
            if b >= n {
                return Err(Error::InvalidVertex { vertex: b, order: n });
            }
            set.insert((a, b));
        }
        Ok(GeneralGraph { n, edges: set })
    }

    pub fn add_edge(&self, a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidParameter(format!("loop at vertex {a}")));
        }
        if a.max(b) >= self.n {
            return Err(Error::InvalidVertex {
                vertex: a.max(b),
                order: self.n,
            });
        }
        if self.has_edge(a, b) {
            return Err(Error::EdgeExists(a.min(b), a.max(b)));
        }
        let mut next = self.clone();
        next.edges.insert((a.min(b), a.max(b)));
        Ok(next)
    }

    pub fn remove_edge(&self, a: usize, b: usize) -> Result<Self> {
        let key = (a.min(b), a.max(b));
        if !self.edges.contains(&key) {
            return Err(Error::EdgeMissing(key.0, key.1));
        }
        let mut next = self.clone();
        next.edges.remove(&key);
        Ok(next)
    }
}

impl Graph for GeneralGraph {
    fn order(&self) -> usize {
        self.n
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().copied().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn size(&self) -> usize {
        self.edges.len()
    }
}
