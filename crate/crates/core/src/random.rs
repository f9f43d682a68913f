//! Random cotrees and threshold sequences for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::cotree::{CoTree, CoTreeBuilder, Label, NodeId};
use crate::parser::ThresholdSequence;

/// Canonical cotree on `n >= 1` vertices with a join root (connected graph)
/// unless `n == 1`.
pub fn random_cotree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CoTree {
    random_cotree_rooted(n, Label::Join, rng)
}

/// As [`random_cotree`], with the root label chosen by the caller.
pub fn random_cotree_rooted<R: Rng + ?Sized>(n: usize, root: Label, rng: &mut R) -> CoTree {
    assert!(n >= 1, "a cotree needs at least one vertex");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut b = CoTreeBuilder::new();
    let top = grow(&mut b, &order, root, rng);
    b.build(top)
        .expect("generated tree is well formed")
        .canonicalize()
}

fn grow<R: Rng + ?Sized>(
    b: &mut CoTreeBuilder,
    vertices: &[usize],
    label: Label,
    rng: &mut R,
) -> NodeId {
    if vertices.len() == 1 {
        return b.leaf(vertices[0]);
    }
    let k = rng.gen_range(2..=vertices.len());
    // k - 1 distinct cut points inside the block.
    let mut cuts: Vec<usize> = (1..vertices.len()).collect();
    cuts.shuffle(rng);
    cuts.truncate(k - 1);
    cuts.sort_unstable();
    let mut children = Vec::with_capacity(k);
    let mut start = 0;
    for end in cuts.into_iter().chain(std::iter::once(vertices.len())) {
        children.push(grow(b, &vertices[start..end], label.flipped(), rng));
        start = end;
    }
    b.internal(label, children)
}

/// Uniform bit string of length `n >= 1`; the last bit is forced to 1 when
/// `n > 1` so the graph is connected.
pub fn random_threshold<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ThresholdSequence {
    assert!(n >= 1, "a threshold sequence needs at least one vertex");
    let mut bits: Vec<bool> = (0..n).map(|i| i > 0 && rng.gen()).collect();
    if n > 1 {
        bits[n - 1] = true;
    }
    ThresholdSequence::new(bits).expect("first bit is zero")
}
