//! Labeled simple graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is stored as one `u64` row per vertex, so every vertex subset is
//! a single machine word and set algebra (volumes, boundaries, component
//! search) reduces to popcounts and masks.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use crate::error::{Error, Result};

/// Largest supported vertex count (one bitset word).
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..n` stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
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
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitXor for VertexSet {
    type Output = VertexSet;
    fn bitxor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 ^ rhs.0)
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

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
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

impl ExactSizeIterator for Members {}

/// Vertex sets of the connected components left after deleting some vertices.
///
/// Blocks are pairwise disjoint and sorted by ascending size (ties by smallest
/// member).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<VertexSet>,
}

impl ComponentPartition {
    /// Builds a partition from arbitrary disjoint, nonempty blocks. Whether the
    /// blocks are really components of some graph is up to the caller.
    pub fn from_blocks(mut blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() {
                return Err(Error::Precondition("empty block in partition".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::Precondition("partition blocks overlap".into()));
            }
            seen = seen | b;
        }
        blocks.sort_by_key(|b| (b.len(), b.first()));
        Ok(ComponentPartition { blocks })
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Number of blocks, ω.
    pub fn omega(&self) -> usize {
        self.blocks.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn union(&self) -> VertexSet {
        self.blocks.iter().fold(VertexSet::EMPTY, |acc, &b| acc | b)
    }
}

/// Maximum degree, minimum degree and the full degree sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub max: usize,
    pub min: usize,
    pub degrees: Vec<usize>,
}

/// Immutable labeled simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph `n K₁`.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut rows = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Self::from_rows_unchecked(n, rows))
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n).bits();
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in VertexSet::from_bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency is not symmetric for ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Self::from_rows_unchecked(n, rows))
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<u64>) -> Self {
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n, rows, m }
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let full = VertexSet::full(n).bits();
        let rows = (0..n).map(|v| full & !(1u64 << v)).collect();
        Ok(Self::from_rows_unchecked(n, rows))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices { required: 3, actual: n });
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Self::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    /// The Petersen graph as the Kneser graph K(5,2): vertices are the ten
    /// 2-subsets of {0..4} in lexicographic order, adjacent when disjoint.
    pub fn petersen() -> Self {
        let pairs: Vec<u32> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (1u32 << a) | (1u32 << b)))
            .collect();
        let mut edges = Vec::new();
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if pairs[i] & pairs[j] == 0 {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(10, edges).expect("petersen construction is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| {
            VertexSet(self.rows[v] & ((1u64 << v) - 1))
                .iter()
                .map(move |u| (u, v))
        })
    }

    pub fn contains_set(&self, x: VertexSet) -> bool {
        x.is_subset(self.vertices())
    }

    fn check_set(&self, x: VertexSet) -> Result<()> {
        if self.contains_set(x) {
            Ok(())
        } else {
            let vertex = (x - self.vertices()).first().unwrap_or(0);
            Err(Error::VertexOutOfRange { vertex, n: self.n })
        }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeProfile {
            max: degrees.iter().copied().max().unwrap_or(0),
            min: degrees.iter().copied().min().unwrap_or(0),
            degrees,
        }
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// ν_X, the sum of degrees over `x`.
    pub fn volume(&self, x: VertexSet) -> usize {
        x.iter().map(|v| self.degree(v)).sum()
    }

    /// e_{X,Y}: ordered pairs (x, y) with x ∈ X, y ∈ Y adjacent. Edges with
    /// both ends in X ∩ Y are counted twice.
    pub fn edge_boundary(&self, x: VertexSet, y: VertexSet) -> usize {
        x.iter()
            .map(|v| (self.rows[v] & y.0).count_ones() as usize)
            .sum()
    }

    /// Number of edges with both ends in `x`.
    pub fn edges_within(&self, x: VertexSet) -> usize {
        self.edge_boundary(x, x) / 2
    }

    pub fn is_independent(&self, x: VertexSet) -> bool {
        x.iter().all(|v| self.rows[v] & x.0 == 0)
    }

    /// Component of `G[within]` containing `seed`.
    pub(crate) fn reach(&self, seed: usize, within: u64) -> u64 {
        let mut comp = 1u64 << seed;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & within & !comp;
            comp |= frontier;
        }
        comp
    }

    /// ω(G − removed) without allocating.
    pub fn component_count(&self, removed: VertexSet) -> usize {
        let mut rest = self.vertices().0 & !removed.0;
        let mut count = 0;
        while rest != 0 {
            let seed = rest.trailing_zeros() as usize;
            rest &= !self.reach(seed, rest);
            count += 1;
        }
        count
    }

    /// Connected components of `G − removed`.
    pub fn components(&self, removed: VertexSet) -> Result<ComponentPartition> {
        self.check_set(removed)?;
        if removed == self.vertices() {
            return Err(Error::EmptyRemainder);
        }
        let mut rest = self.vertices().0 & !removed.0;
        let mut blocks = Vec::new();
        while rest != 0 {
            let seed = rest.trailing_zeros() as usize;
            let comp = self.reach(seed, rest);
            rest &= !comp;
            blocks.push(VertexSet(comp));
        }
        blocks.sort_by_key(|b| (b.len(), b.first()));
        Ok(ComponentPartition { blocks })
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_count(VertexSet::EMPTY) == 1
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// `G[x]`, relabeled so the members of `x` become `0..|x|` in ascending
    /// order.
    pub fn induced_subgraph(&self, x: VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        let members = x.to_vec();
        let rows = members
            .iter()
            .map(|&u| {
                members
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |row, (j, _)| row | 1 << j)
            })
            .collect();
        Ok(Graph::from_rows_unchecked(members.len(), rows))
    }

    /// `self ⊔ other`, with `other` relabeled to `n..n+n'`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    /// `self ∨ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph> {
        let total = self.n + other.n;
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total));
        }
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(total).0 & !left;
        let mut rows = Vec::with_capacity(total);
        rows.extend(self.rows.iter().map(|&r| if cross { r | right } else { r }));
        rows.extend(
            other
                .rows
                .iter()
                .map(|&r| (r << self.n) | if cross { left } else { 0 }),
        );
        Ok(Graph::from_rows_unchecked(total, rows))
    }
}
