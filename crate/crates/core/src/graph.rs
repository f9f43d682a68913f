//! Undirected simple graphs on vertices `0..n` with dense bit-row adjacency.
//!
//! Vertices are positional. Text formats and user-facing output present them
//! 1-based; everything inside the library is 0-based.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::matrix::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("cannot compose an empty list of graphs")]
    EmptyParts,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

const WORD: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn new(n: usize) -> Self {
        BitRow(vec![0; n.div_ceil(WORD)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / WORD] >> (i % WORD) & 1 == 1
    }

    fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % WORD);
        if value {
            self.0[i / WORD] |= mask;
        } else {
            self.0[i / WORD] &= !mask;
        }
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + bit)
            })
        })
    }
}

/// An undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BitRow>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| BitRow::new(n)).collect(),
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    g.adj[i].set(j, true);
                }
            }
        }
        g
    }

    /// Builds a graph from 0-based edges. Rejects loops, repeats and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if g.adj[a].get(b) {
                return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
            }
            g.adj[a].set(b, true);
            g.adj[b].set(a, true);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate; `f(i, i)` is ignored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if f(i, j) {
                    g.adj[i].set(j, true);
                    g.adj[j].set(i, true);
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitRow::count).sum::<usize>() / 2
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].get(j)
    }

    /// Neighbours of `i` in increasing order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].ones()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].count()
    }

    /// `d(i)` listed in vertex order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| {
                self.neighbors(i)
                    .filter(move |&j| j > i)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// Disjoint union. Part `k`'s vertices are numbered after those of all
    /// earlier parts.
    pub fn union_of(parts: &[Graph]) -> Result<Graph, GraphError> {
        Self::compose(parts, false)
    }

    /// Join: the disjoint union plus every edge between distinct parts.
    /// Vertex numbering as in [`Graph::union_of`].
    pub fn join_of(parts: &[Graph]) -> Result<Graph, GraphError> {
        Self::compose(parts, true)
    }

    fn compose(parts: &[Graph], cross: bool) -> Result<Graph, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::EmptyParts);
        }
        let n = parts.iter().map(|p| p.n).sum();
        let mut owner = Vec::with_capacity(n);
        for (k, p) in parts.iter().enumerate() {
            owner.extend(std::iter::repeat_n(k, p.n));
        }
        let mut g = Graph::empty(n);
        let mut offset = 0;
        for p in parts {
            for (i, j) in p.edges() {
                g.adj[offset + i].set(offset + j, true);
                g.adj[offset + j].set(offset + i, true);
            }
            offset += p.n;
        }
        if cross {
            for i in 0..n {
                for j in 0..n {
                    if owner[i] != owner[j] {
                        g.adj[i].set(j, true);
                    }
                }
            }
        }
        Ok(g)
    }

    /// Flips every off-diagonal adjacency entry.
    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }

    /// Subgraph induced on `vertices`; vertex `k` of the result is `vertices[k]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |a, b| {
            self.has_edge(vertices[a], vertices[b])
        })
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with at most one component. The empty graph counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `L = Δ - A`.
    pub fn laplacian(&self) -> IntegerMatrix {
        IntegerMatrix::from_fn(self.n, self.n, |i, j| {
            if i == j {
                self.degree(i) as i64
            } else if self.has_edge(i, j) {
                -1
            } else {
                0
            }
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> =
            self.edges().iter().map(|&(i, j)| (i + 1, j + 1)).collect();
        write!(f, "Graph {{ n: {}, edges: {:?} }}", self.n, edges)
    }
}
