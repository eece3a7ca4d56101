//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bit mask per vertex.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..64`, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// Every vertex strictly greater than `v`.
    pub fn above(v: usize) -> Self {
        if v + 1 >= MAX_VERTICES {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX << (v + 1))
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.0 &= !(1u64 << v);
        }
    }

    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    pub fn without(self, v: usize) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The `k` smallest members (all of them if fewer).
    pub fn lowest(self, k: usize) -> VertexSet {
        self.iter().take(k).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is symmetric and irreflexive; every constructor and mutator
/// keeps it that way.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of [`Graph::induced_subgraph`]: the subgraph re-indexed to
/// `0..|S|` together with the map back to the ambient graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the ambient index of local vertex `i`, increasing.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    pub fn original_vertex(&self, local: usize) -> usize {
        self.original[local]
    }

    pub fn local_vertex(&self, original: usize) -> Option<usize> {
        self.original.binary_search(&original).ok()
    }

    pub fn to_original(&self, local: VertexSet) -> VertexSet {
        local.iter().map(|v| self.original[v]).collect()
    }

    pub fn to_local(&self, original: VertexSet) -> VertexSet {
        original.iter().filter_map(|v| self.local_vertex(v)).collect()
    }
}

/// Result of [`Graph::contract_set`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// `provenance[i]` is the set of input vertices that new vertex `i`
    /// stands for. The sets partition the input vertex set.
    pub provenance: Vec<VertexSet>,
    /// Index of the vertex that replaced the contracted set.
    pub merged: usize,
}

impl Contraction {
    /// New index of input vertex `v`.
    pub fn image(&self, v: usize) -> Option<usize> {
        self.provenance.iter().position(|p| p.contains(v))
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency masks, checking every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let full = VertexSet::full(n);
        for (u, &nb) in adj.iter().enumerate() {
            if let Some(v) = (nb - full).min() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if nb.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            for v in nb {
                if !adj[v].contains(u) {
                    return Err(Error::Precondition(format!(
                        "adjacency not symmetric at {u}{v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let full = VertexSet::full(n.min(MAX_VERTICES));
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = full.without(v);
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Panics on out-of-range endpoints or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] & VertexSet::above(u)).iter().map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| (full - self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Graph with vertex `v` of `self` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            adj[perm[u]] = self.adj[u].iter().map(|v| perm[v]).collect();
        }
        Graph { n: self.n, adj }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).min() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// Open neighbourhood `N(S)`: vertices outside `S` with a neighbour in `S`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s & self.vertices() {
            out |= self.adj[v];
        }
        out - s
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        let s = s & self.vertices();
        self.neighborhood(s) | s
    }

    pub fn induced_subgraph(&self, s: VertexSet) -> Result<InducedSubgraph> {
        self.check_set(s)?;
        let original = s.to_vec();
        let mut local = [usize::MAX; MAX_VERTICES];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let adj = original
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| local[w]).collect())
            .collect();
        Ok(InducedSubgraph { graph: Graph { n: original.len(), adj }, original })
    }

    /// Deletes the vertices in `s`, compacting the remaining indices.
    pub fn delete(&self, s: VertexSet) -> InducedSubgraph {
        self.induced_subgraph(self.vertices() - s)
            .expect("complement of a set is in range")
    }

    /// The vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        if !within.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    /// Whether `G[S]` is connected. The empty set counts as disconnected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.min() {
            Some(v) => self.reach(v, s) == s,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(self.vertices())
    }

    /// Connected components of `G[S]`, ordered by smallest member.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach(v, rest);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Whether some edge joins `a` and `b`.
    pub fn touches(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().any(|v| self.adj[v].intersects(b))
    }

    /// Replaces the connected set `s` by a single vertex adjacent to `N(S)`.
    ///
    /// The merged vertex takes the place of `min(S)`; all other survivors
    /// keep their relative order.
    pub fn contract_set(&self, s: VertexSet) -> Result<Contraction> {
        self.check_set(s)?;
        let keep = match s.min() {
            Some(v) => v,
            None => return Err(Error::EmptySet),
        };
        if !self.is_connected_set(s) {
            return Err(Error::DisconnectedSet(s.to_vec()));
        }
        let survivors = (self.vertices() - s).with(keep);
        let mut provenance = Vec::with_capacity(survivors.len());
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, v) in survivors.iter().enumerate() {
            provenance.push(if v == keep { s } else { VertexSet::singleton(v) });
            for w in provenance[i] {
                index[w] = i;
            }
        }
        let m = provenance.len();
        let mut adj = vec![VertexSet::EMPTY; m];
        for (i, p) in provenance.iter().enumerate() {
            let nb = self.neighborhood(*p);
            adj[i] = nb.iter().map(|w| index[w]).collect::<VertexSet>().without(i);
        }
        Ok(Contraction {
            graph: Graph { n: m, adj },
            merged: index[keep],
            provenance,
        })
    }

    /// Disjoint union with all edges between the two parts added. `self`
    /// keeps indices `0..n`, `other` is shifted to `n..n+m`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        Ok(g)
    }
}
