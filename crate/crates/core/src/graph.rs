//! Immutable signed bipartite graph with degree-based vertex priority.
//!
//! Vertices are dense 0-based indices per side. Every adjacency list is kept
//! sorted by *descending* priority of the neighbor, where priority orders
//! vertices by degree and breaks ties by index (higher degree, then higher
//! index, wins). A second copy sorted by neighbor index backs merge-style
//! intersections.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    fn slot(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRef {
    pub side: Side,
    pub index: u32,
}

impl VertexRef {
    pub fn left(index: u32) -> Self {
        VertexRef {
            side: Side::Left,
            index,
        }
    }

    pub fn right(index: u32) -> Self {
        VertexRef {
            side: Side::Right,
            index,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    /// `1` for positive and `0` for negative, as in the canonical file body.
    pub fn as_bit(self) -> u8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => 0,
        }
    }

    /// Product of two signs (`+·+ = +`, `+·- = -`, `-·- = +`).
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Parity of a multiset of signs: `true` when the number of negatives is even.
pub fn even_negatives<I: IntoIterator<Item = Sign>>(signs: I) -> bool {
    signs.into_iter().filter(|s| s.is_negative()).count() % 2 == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Neighbor {
    pub vertex: u32,
    pub sign: Sign,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate edge ({left}, {right})")]
    DuplicateEdge { left: u32, right: u32 },
    #[error("{side} vertex {index} out of range (side has {count} vertices)")]
    IndexOutOfRange { side: Side, index: u32, count: usize },
    #[error("priority comparison across sides ({0} vs {1})")]
    CrossSideComparison(Side, Side),
    #[error("vertex count {0} exceeds the 32-bit index space")]
    TooManyVertices(usize),
}

/// Compressed adjacency for one side.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    entries: Vec<Neighbor>,
}

impl Csr {
    fn row(&self, i: usize) -> &[Neighbor] {
        &self.entries[self.offsets[i]..self.offsets[i + 1]]
    }
}

#[derive(Clone, Debug)]
pub struct SignedBipartiteGraph {
    counts: [usize; 2],
    edge_count: usize,
    max_degree: usize,
    /// Adjacency ordered by descending neighbor priority.
    by_priority: [Csr; 2],
    /// Adjacency ordered by ascending neighbor index.
    by_index: [Csr; 2],
    /// `rank[side][v]`: position of `v` in ascending priority order.
    rank: [Vec<u32>; 2],
    edge_index: FxHashMap<(u32, u32), Sign>,
}

impl PartialEq for SignedBipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.counts == other.counts && self.by_index == other.by_index
    }
}

impl Eq for SignedBipartiteGraph {}

impl SignedBipartiteGraph {
    /// Builds a graph whose side sizes are one past the largest index seen.
    pub fn from_edges(edges: &[(u32, u32, Sign)]) -> Result<Self, GraphError> {
        let m = edges.iter().map(|e| e.0 as usize + 1).max().unwrap_or(0);
        let n = edges.iter().map(|e| e.1 as usize + 1).max().unwrap_or(0);
        Self::with_counts(m, n, edges)
    }

    /// Builds a graph with explicit side sizes, allowing trailing isolated vertices.
    pub fn with_counts(m: usize, n: usize, edges: &[(u32, u32, Sign)]) -> Result<Self, GraphError> {
        for count in [m, n] {
            if count > u32::MAX as usize {
                return Err(GraphError::TooManyVertices(count));
            }
        }
        let counts = [m, n];
        let mut edge_index = FxHashMap::default();
        edge_index.reserve(edges.len());
        let mut degree = [vec![0usize; m], vec![0usize; n]];
        for &(u, v, s) in edges {
            if u as usize >= m {
                return Err(GraphError::IndexOutOfRange {
                    side: Side::Left,
                    index: u,
                    count: m,
                });
            }
            if v as usize >= n {
                return Err(GraphError::IndexOutOfRange {
                    side: Side::Right,
                    index: v,
                    count: n,
                });
            }
            if edge_index.insert((u, v), s).is_some() {
                return Err(GraphError::DuplicateEdge { left: u, right: v });
            }
            degree[0][u as usize] += 1;
            degree[1][v as usize] += 1;
        }

        let max_degree = degree.iter().flatten().copied().max().unwrap_or(0);
        let rank = [
            priority_ranks(&degree[0], max_degree),
            priority_ranks(&degree[1], max_degree),
        ];

        let mut by_index = [csr_skeleton(&degree[0]), csr_skeleton(&degree[1])];
        {
            let mut cursor = [by_index[0].offsets.clone(), by_index[1].offsets.clone()];
            // Sorting edges by (u, v) fills left rows in index order; right rows
            // receive u in ascending order for the same reason.
            let mut sorted: Vec<(u32, u32, Sign)> = edges.to_vec();
            sorted.sort_unstable_by_key(|&(u, v, _)| (u, v));
            for &(u, v, s) in &sorted {
                let slot = &mut cursor[0][u as usize];
                by_index[0].entries[*slot] = Neighbor { vertex: v, sign: s };
                *slot += 1;
            }
            sorted.sort_unstable_by_key(|&(u, v, _)| (v, u));
            for &(u, v, s) in &sorted {
                let slot = &mut cursor[1][v as usize];
                by_index[1].entries[*slot] = Neighbor { vertex: u, sign: s };
                *slot += 1;
            }
        }

        let mut by_priority = by_index.clone();
        for side in [Side::Left, Side::Right] {
            let other = &rank[side.opposite().slot()];
            let csr = &mut by_priority[side.slot()];
            for i in 0..counts[side.slot()] {
                let (lo, hi) = (csr.offsets[i], csr.offsets[i + 1]);
                csr.entries[lo..hi].sort_unstable_by(|a, b| other[b.vertex as usize].cmp(&other[a.vertex as usize]));
            }
        }

        Ok(SignedBipartiteGraph {
            counts,
            edge_count: edges.len(),
            max_degree,
            by_priority,
            by_index,
            rank,
            edge_index,
        })
    }

    pub fn left_count(&self) -> usize {
        self.counts[0]
    }

    pub fn right_count(&self) -> usize {
        self.counts[1]
    }

    pub fn count(&self, side: Side) -> usize {
        self.counts[side.slot()]
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, side: Side, index: u32) -> usize {
        let csr = &self.by_index[side.slot()];
        csr.offsets[index as usize + 1] - csr.offsets[index as usize]
    }

    /// Neighbors of `index` sorted by strictly descending priority.
    pub fn neighbors(&self, side: Side, index: u32) -> &[Neighbor] {
        self.by_priority[side.slot()].row(index as usize)
    }

    /// Neighbors of `index` sorted by ascending vertex index.
    pub fn neighbors_by_index(&self, side: Side, index: u32) -> &[Neighbor] {
        self.by_index[side.slot()].row(index as usize)
    }

    pub fn neighbors_desc(&self, vertex: VertexRef) -> impl Iterator<Item = (VertexRef, Sign)> + '_ {
        let other = vertex.side.opposite();
        self.neighbors(vertex.side, vertex.index).iter().map(move |n| {
            (
                VertexRef {
                    side: other,
                    index: n.vertex,
                },
                n.sign,
            )
        })
    }

    /// Priority rank of a vertex: `0` is the lowest priority on its side.
    pub fn rank(&self, side: Side, index: u32) -> u32 {
        self.rank[side.slot()][index as usize]
    }

    pub fn ranks(&self, side: Side) -> &[u32] {
        &self.rank[side.slot()]
    }

    /// `true` iff `a` has strictly higher priority than `b`.
    pub fn priority_gt(&self, a: VertexRef, b: VertexRef) -> Result<bool, GraphError> {
        if a.side != b.side {
            return Err(GraphError::CrossSideComparison(a.side, b.side));
        }
        Ok(self.rank(a.side, a.index) > self.rank(b.side, b.index))
    }

    /// Sign of the edge `(left, right)`, if present.
    pub fn edge_sign(&self, left: u32, right: u32) -> Option<Sign> {
        self.edge_index.get(&(left, right)).copied()
    }

    /// Side-agnostic sign lookup; `None` for same-side pairs or non-edges.
    pub fn edge_sign_between(&self, a: VertexRef, b: VertexRef) -> Option<Sign> {
        match (a.side, b.side) {
            (Side::Left, Side::Right) => self.edge_sign(a.index, b.index),
            (Side::Right, Side::Left) => self.edge_sign(b.index, a.index),
            _ => None,
        }
    }

    /// Sign of the edge between `a` on `side` and `b` on the opposite side.
    pub fn sign_from(&self, side: Side, a: u32, b: u32) -> Option<Sign> {
        match side {
            Side::Left => self.edge_sign(a, b),
            Side::Right => self.edge_sign(b, a),
        }
    }

    /// All edges as `(left, right, sign)` sorted by `(left, right)`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, Sign)> + '_ {
        (0..self.counts[0] as u32).flat_map(move |u| {
            self.neighbors_by_index(Side::Left, u)
                .iter()
                .map(move |n| (u, n.vertex, n.sign))
        })
    }

    /// The same graph with the two sides exchanged.
    pub fn transposed(&self) -> SignedBipartiteGraph {
        let edges: Vec<_> = self.edges().map(|(u, v, s)| (v, u, s)).collect();
        Self::with_counts(self.counts[1], self.counts[0], &edges).expect("transpose of a valid graph")
    }

    /// The same graph with every edge sign negated.
    pub fn sign_flipped(&self) -> SignedBipartiteGraph {
        let edges: Vec<_> = self.edges().map(|(u, v, s)| (u, v, s.flipped())).collect();
        Self::with_counts(self.counts[0], self.counts[1], &edges).expect("flip of a valid graph")
    }

    pub fn stats(&self) -> GraphStats {
        let histogram = |side: Side| {
            let mut h = vec![0usize; self.max_degree + 1];
            for i in 0..self.count(side) as u32 {
                h[self.degree(side, i)] += 1;
            }
            h
        };
        let positive = self.edges().filter(|e| e.2 == Sign::Positive).count();
        GraphStats {
            left_count: self.counts[0],
            right_count: self.counts[1],
            edge_count: self.edge_count,
            positive_edges: positive,
            negative_edges: self.edge_count - positive,
            max_degree: self.max_degree,
            left_degree_histogram: histogram(Side::Left),
            right_degree_histogram: histogram(Side::Right),
        }
    }

    /// Rough byte footprint of the adjacency structures.
    pub fn approx_bytes(&self) -> usize {
        let csr = |c: &Csr| {
            c.offsets.capacity() * std::mem::size_of::<usize>() + c.entries.capacity() * std::mem::size_of::<Neighbor>()
        };
        self.by_priority
            .iter()
            .chain(self.by_index.iter())
            .map(csr)
            .sum::<usize>()
            + self.rank.iter().map(|r| r.capacity() * 4).sum::<usize>()
            + self.edge_index.capacity() * (std::mem::size_of::<(u32, u32)>() + std::mem::size_of::<Sign>() + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub left_count: usize,
    pub right_count: usize,
    pub edge_count: usize,
    pub positive_edges: usize,
    pub negative_edges: usize,
    pub max_degree: usize,
    /// `left_degree_histogram[d]` = number of left vertices with degree `d`.
    pub left_degree_histogram: Vec<usize>,
    pub right_degree_histogram: Vec<usize>,
}

fn csr_skeleton(degree: &[usize]) -> Csr {
    let mut offsets = Vec::with_capacity(degree.len() + 1);
    offsets.push(0);
    let mut acc = 0;
    for &d in degree {
        acc += d;
        offsets.push(acc);
    }
    Csr {
        offsets,
        entries: vec![
            Neighbor {
                vertex: 0,
                sign: Sign::Positive
            };
            acc
        ],
    }
}

/// Counting sort over degrees; within a degree bucket, indices ascend, so the
/// resulting rank orders by (degree, index).
fn priority_ranks(degree: &[usize], max_degree: usize) -> Vec<u32> {
    let mut start = vec![0usize; max_degree + 2];
    for &d in degree {
        start[d + 1] += 1;
    }
    for d in 1..start.len() {
        start[d] += start[d - 1];
    }
    let mut rank = vec![0u32; degree.len()];
    for (i, &d) in degree.iter().enumerate() {
        rank[i] = start[d] as u32;
        start[d] += 1;
    }
    rank
}
