//! Exact Laplacian eigenstructure of a cograph, read off its cotree.
//!
//! Every internal node `v` with children `v_1..v_k` contributes `k - 1`
//! eigenvectors supported on its leaves. Their eigenvalue starts as
//! `lab(v) * l(v)` and is shifted by `lab(u) * (l(u) - l(u'))` for every
//! ancestor `u` reached from its child `u'` on the way to the root. The
//! eigenvectors are the columns of an integer pattern over the child leaf
//! counts `n_1..n_k`: column `j` holds `n_{j+1}` on the leaves of children
//! `1..=j`, `-(n_1 + .. + n_j)` on the leaves of child `j + 1`, and zeros
//! elsewhere.
//!
//! Everything here is integral; no floating point is involved.
//!
//! For a disconnected cograph (union root) the same rules produce the extra
//! zero eigenvalues of the union composition. That extension is an
//! implementation choice; the controllability routines never consume it.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::cotree::{CoTree, Label, NodeId};
use crate::matrix::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("node {} is a leaf, expected an internal node", .0.index())]
    NotInternal(NodeId),
    #[error("node {} is not an ancestor of node {}", .ancestor.index(), .node.index())]
    NotAncestor { node: NodeId, ancestor: NodeId },
    #[error("cannot compose an empty list of spectra")]
    EmptyParts,
}

/// The eigenvectors contributed by one internal node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenBlock {
    pub node: NodeId,
    /// Updated eigenvalue at the root.
    pub lambda: u64,
    /// `l(v) x (c(v) - 1)`; row `k` belongs to vertex `row_support[k]`.
    pub block: IntegerMatrix,
    /// The leaves of `v`, grouped child by child in child order.
    pub row_support: Vec<usize>,
}

impl EigenBlock {
    pub fn multiplicity(&self) -> usize {
        self.block.cols()
    }

    /// The block placed into an `n`-row matrix, zero outside `row_support`.
    pub fn embedded(&self, n: usize) -> IntegerMatrix {
        let mut out = IntegerMatrix::zeros(n, self.block.cols());
        for (k, &vertex) in self.row_support.iter().enumerate() {
            for j in 0..self.block.cols() {
                out.set(vertex, j, self.block.get(k, j).clone());
            }
        }
        out
    }
}

/// Laplacian spectrum of a graph on `n` vertices: the trivial eigenvalue 0
/// plus `n - 1` nontrivial eigenvalues, kept in per-node order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    n: usize,
    nontrivial: Vec<u64>,
}

impl Spectrum {
    /// Panics unless `nontrivial.len() + 1 == n`.
    pub fn from_nontrivial(n: usize, nontrivial: Vec<u64>) -> Self {
        assert_eq!(
            nontrivial.len() + 1,
            n,
            "a spectrum has n - 1 nontrivial eigenvalues"
        );
        Spectrum { n, nontrivial }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn nontrivial(&self) -> &[u64] {
        &self.nontrivial
    }

    /// All `n` eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<u64> {
        let mut all = Vec::with_capacity(self.n);
        all.push(0);
        all.extend(&self.nontrivial);
        all.sort_unstable();
        all
    }

    /// `(eigenvalue, multiplicity)` pairs, ascending, trivial 0 included.
    pub fn grouped(&self) -> Vec<(u64, usize)> {
        let mut counts = BTreeMap::new();
        for lambda in self.eigenvalues() {
            *counts.entry(lambda).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn sum(&self) -> u64 {
        self.nontrivial.iter().sum()
    }
}

fn require_internal(t: &CoTree, v: NodeId) -> Result<Label, SpectralError> {
    t.label(v).ok_or(SpectralError::NotInternal(v))
}

fn lab(t: &CoTree, v: NodeId) -> u64 {
    match t.label(v) {
        Some(Label::Join) => 1,
        _ => 0,
    }
}

/// `lab(v) * l(v)`.
pub fn lambda_new(t: &CoTree, v: NodeId) -> Result<u64, SpectralError> {
    require_internal(t, v)?;
    Ok(lab(t, v) * t.leaf_count(v) as u64)
}

/// Updated eigenvalue of `v` at its ancestor (or itself) `w`.
pub fn lambda_upd_at(t: &CoTree, v: NodeId, w: NodeId) -> Result<u64, SpectralError> {
    let mut lambda = lambda_new(t, v)?;
    let mut below = v;
    while below != w {
        let u = t.parent(below).ok_or(SpectralError::NotAncestor {
            node: v,
            ancestor: w,
        })?;
        lambda += lab(t, u) * (t.leaf_count(u) - t.leaf_count(below)) as u64;
        below = u;
    }
    Ok(lambda)
}

/// Updated eigenvalue of `v` at the root.
pub fn lambda_upd(t: &CoTree, v: NodeId) -> Result<u64, SpectralError> {
    lambda_upd_at(t, v, t.root())
}

/// The child-leaf-count pattern of `v` with its root eigenvalue.
pub fn modal_block(t: &CoTree, v: NodeId) -> Result<EigenBlock, SpectralError> {
    let lambda = lambda_upd(t, v)?;
    Ok(block_with_lambda(t, v, lambda))
}

fn block_with_lambda(t: &CoTree, v: NodeId, lambda: u64) -> EigenBlock {
    let children = t.children(v);
    let sizes: Vec<usize> = children.iter().map(|&c| t.leaf_count(c)).collect();
    let mut row_support = Vec::with_capacity(t.leaf_count(v));
    let mut owner = Vec::with_capacity(t.leaf_count(v));
    for (k, &c) in children.iter().enumerate() {
        row_support.extend_from_slice(t.leaves_below(c));
        owner.extend(std::iter::repeat_n(k, sizes[k]));
    }
    let prefix: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            *acc += s;
            Some(*acc)
        })
        .collect();
    let block = IntegerMatrix::from_fn(row_support.len(), children.len() - 1, |row, col| {
        let child = owner[row];
        if child <= col {
            BigInt::from(sizes[col + 1])
        } else if child == col + 1 {
            -BigInt::from(prefix[col])
        } else {
            BigInt::from(0)
        }
    });
    EigenBlock {
        node: v,
        lambda,
        block,
        row_support,
    }
}

/// Root eigenvalue of every node, in one top-down pass. Leaves get 0.
fn all_lambdas(t: &CoTree) -> Vec<u64> {
    // shift[v]: sum of ancestor corrections above v.
    let mut shift = vec![0u64; t.node_count()];
    let mut out = vec![0u64; t.node_count()];
    // Preorder storage means parents precede children.
    for v in t.nodes() {
        if let Some(p) = t.parent(v) {
            shift[v.index()] =
                shift[p.index()] + lab(t, p) * (t.leaf_count(p) - t.leaf_count(v)) as u64;
        }
        if t.is_internal(v) {
            out[v.index()] = lab(t, v) * t.leaf_count(v) as u64 + shift[v.index()];
        }
    }
    out
}

/// One block per internal node, in preorder.
pub fn eigen_blocks(t: &CoTree) -> Vec<EigenBlock> {
    let lambdas = all_lambdas(t);
    t.internal_nodes()
        .map(|v| block_with_lambda(t, v, lambdas[v.index()]))
        .collect()
}

/// Each internal node's root eigenvalue repeated `c(v) - 1` times, plus the
/// trivial 0.
pub fn spectrum(t: &CoTree) -> Spectrum {
    let lambdas = all_lambdas(t);
    let mut nontrivial = Vec::with_capacity(t.vertex_count().saturating_sub(1));
    for v in t.internal_nodes() {
        let m = t.children(v).len() - 1;
        nontrivial.extend(std::iter::repeat_n(lambdas[v.index()], m));
    }
    Spectrum::from_nontrivial(t.vertex_count(), nontrivial)
}

/// The `n x (n - 1)` nontrivial modal matrix: every block embedded into `n`
/// rows, blocks concatenated in preorder. Column order matches
/// [`Spectrum::nontrivial`].
pub fn modal_matrix(t: &CoTree) -> IntegerMatrix {
    let n = t.vertex_count();
    let embedded: Vec<IntegerMatrix> = eigen_blocks(t).iter().map(|b| b.embedded(n)).collect();
    let refs: Vec<&IntegerMatrix> = embedded.iter().collect();
    IntegerMatrix::hconcat(n, &refs)
}

/// Nontrivial spectrum of a union or join of graphs from those of the parts.
///
/// Union keeps every part's eigenvalues and adds `p - 1` zeros; join shifts
/// part `i` by `n - n_i` and adds `p - 1` copies of `n`.
pub fn compose_spectrum(op: Label, parts: &[Spectrum]) -> Result<Spectrum, SpectralError> {
    if parts.is_empty() {
        return Err(SpectralError::EmptyParts);
    }
    let n: usize = parts.iter().map(Spectrum::vertex_count).sum();
    let mut nontrivial = Vec::with_capacity(n - 1);
    for part in parts {
        let shift = match op {
            Label::Union => 0,
            Label::Join => (n - part.vertex_count()) as u64,
        };
        nontrivial.extend(part.nontrivial().iter().map(|&l| l + shift));
    }
    let fresh = match op {
        Label::Union => 0,
        Label::Join => n as u64,
    };
    nontrivial.extend(std::iter::repeat_n(fresh, parts.len() - 1));
    Ok(Spectrum::from_nontrivial(n, nontrivial))
}

/// Folds [`compose_spectrum`] bottom-up over the cotree.
pub fn spectrum_by_composition(t: &CoTree) -> Spectrum {
    let mut done: Vec<Option<Spectrum>> = vec![None; t.node_count()];
    for v in t.nodes().collect::<Vec<_>>().into_iter().rev() {
        let s = match t.label(v) {
            None => Spectrum::from_nontrivial(1, Vec::new()),
            Some(label) => {
                let parts: Vec<Spectrum> = t
                    .children(v)
                    .iter()
                    .map(|c| done[c.index()].take().expect("child first"))
                    .collect();
                compose_spectrum(label, &parts).expect("internal nodes have children")
            }
        };
        done[v.index()] = Some(s);
    }
    done[0].take().expect("root computed")
}
