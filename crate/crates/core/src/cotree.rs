//! Cotrees: rooted trees whose leaves are graph vertices and whose internal
//! nodes are labelled union (`0`) or join (`1`).
//!
//! Two vertices are adjacent in the represented graph exactly when their
//! lowest common ancestor is a join node. A cotree is *canonical* when every
//! internal node has at least two children, labels alternate along every
//! root path, and children are ordered by their smallest leaf. Canonical
//! cotrees are unique per cograph, so structural equality of canonical trees
//! is graph equality.
//!
//! All tree walks are iterative; threshold graphs produce cotrees whose depth
//! is linear in the vertex count.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// Index of a node inside a [`CoTree`] arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub(crate) usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// `0`: disjoint union of the children.
    Union,
    /// `1`: join of the children.
    Join,
}

impl Label {
    pub fn bit(self) -> u8 {
        match self {
            Label::Union => 0,
            Label::Join => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Option<Label> {
        match bit {
            0 => Some(Label::Union),
            1 => Some(Label::Join),
            _ => None,
        }
    }

    pub fn flipped(self) -> Label {
        match self {
            Label::Union => Label::Join,
            Label::Join => Label::Union,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    /// A 0-based vertex id.
    Leaf(usize),
    Internal(Label),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CotreeError {
    #[error("a cotree needs at least one node")]
    Empty,
    #[error("internal node {0} has no children")]
    ChildlessInternal(usize),
    #[error("node {0} is referenced more than once")]
    SharedNode(usize),
    #[error("node {0} is not reachable from the root")]
    Unreachable(usize),
    #[error("node reference {0} does not exist")]
    UnknownNode(usize),
    #[error("leaf id {} appears more than once", .0 + 1)]
    DuplicateLeaf(usize),
    #[error("leaf ids must cover 1..={n}; missing {}", .missing + 1)]
    LeafIdsNotCovering { n: usize, missing: usize },
}

/// Four vertices inducing a path `a - b - c - d`. Stored 0-based, in path
/// order, starting from the endpoint with the smaller id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct P4Witness(pub [usize; 4]);

impl P4Witness {
    /// Orders four vertices along their induced path, or returns `None` if
    /// they do not induce a `P4` in `g`.
    pub fn from_quad(g: &Graph, quad: [usize; 4]) -> Option<P4Witness> {
        let mut edges = 0;
        let mut deg = [0usize; 4];
        for a in 0..4 {
            for b in a + 1..4 {
                if g.has_edge(quad[a], quad[b]) {
                    edges += 1;
                    deg[a] += 1;
                    deg[b] += 1;
                }
            }
        }
        let mut sorted = deg;
        sorted.sort_unstable();
        if edges != 3 || sorted != [1, 1, 2, 2] {
            return None;
        }
        // Three edges with degrees (1,1,2,2) is always a path.
        let ends: Vec<usize> = (0..4).filter(|&k| deg[k] == 1).map(|k| quad[k]).collect();
        let mut path = [ends[0].min(ends[1]), 0, 0, 0];
        let mut prev = usize::MAX;
        for slot in 1..4 {
            let cur = path[slot - 1];
            let next = quad
                .iter()
                .copied()
                .find(|&w| w != cur && w != prev && g.has_edge(cur, w))
                .expect("induced path continues");
            prev = cur;
            path[slot] = next;
        }
        Some(P4Witness(path))
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.0
    }
}

impl fmt::Display for P4Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{}-{}-{}-{}", a + 1, b + 1, c + 1, d + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Node {
    kind: NodeKind,
    parent: Option<NodeId>,
    children: Vec<NodeId>,
    /// Sorted vertex ids of the leaves below this node.
    leaves: Vec<usize>,
}

/// A validated cotree. Nodes are stored in preorder, root first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoTree {
    nodes: Vec<Node>,
    /// `leaf_node[v]` is the leaf holding vertex `v`.
    leaf_node: Vec<NodeId>,
}

/// Bottom-up construction of a cotree. Nodes may be added in any order;
/// [`CoTreeBuilder::build`] validates the result.
#[derive(Debug, Clone, Default)]
pub struct CoTreeBuilder {
    kinds: Vec<NodeKind>,
    children: Vec<Vec<usize>>,
}

impl CoTreeBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a leaf for the 0-based vertex `vertex`.
    pub fn leaf(&mut self, vertex: usize) -> NodeId {
        self.kinds.push(NodeKind::Leaf(vertex));
        self.children.push(Vec::new());
        NodeId(self.kinds.len() - 1)
    }

    pub fn internal(&mut self, label: Label, children: Vec<NodeId>) -> NodeId {
        self.kinds.push(NodeKind::Internal(label));
        self.children
            .push(children.into_iter().map(|c| c.0).collect());
        NodeId(self.kinds.len() - 1)
    }

    pub(crate) fn push_child(&mut self, parent: NodeId, child: NodeId) {
        self.children[parent.0].push(child.0);
    }

    /// Validates and freezes the tree rooted at `root`. Children keep the
    /// order they were given in; no canonicalization happens here.
    pub fn build(self, root: NodeId) -> Result<CoTree, CotreeError> {
        let count = self.kinds.len();
        if count == 0 {
            return Err(CotreeError::Empty);
        }
        if root.0 >= count {
            return Err(CotreeError::UnknownNode(root.0));
        }
        let mut referenced = vec![false; count];
        referenced[root.0] = true;
        for (id, kids) in self.children.iter().enumerate() {
            if matches!(self.kinds[id], NodeKind::Internal(_)) && kids.is_empty() {
                return Err(CotreeError::ChildlessInternal(id));
            }
            for &c in kids {
                if c >= count {
                    return Err(CotreeError::UnknownNode(c));
                }
                if referenced[c] {
                    return Err(CotreeError::SharedNode(c));
                }
                referenced[c] = true;
            }
        }

        // Preorder renumbering; with every node referenced at most once the
        // walk cannot revisit a node.
        let mut order = Vec::with_capacity(count);
        let mut stack = vec![root.0];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().rev().copied());
        }
        if order.len() != count {
            let mut seen = vec![false; count];
            for &v in &order {
                seen[v] = true;
            }
            let lost = (0..count).find(|&v| !seen[v]).unwrap_or(0);
            return Err(CotreeError::Unreachable(lost));
        }
        let mut new_id = vec![0; count];
        for (pos, &old) in order.iter().enumerate() {
            new_id[old] = pos;
        }

        let mut nodes: Vec<Node> = order
            .iter()
            .map(|&old| Node {
                kind: self.kinds[old],
                parent: None,
                children: self.children[old]
                    .iter()
                    .map(|&c| NodeId(new_id[c]))
                    .collect(),
                leaves: Vec::new(),
            })
            .collect();
        for p in 0..count {
            for c in nodes[p].children.clone() {
                nodes[c.0].parent = Some(NodeId(p));
            }
        }

        let leaf_ids: Vec<usize> = nodes
            .iter()
            .filter_map(|n| match n.kind {
                NodeKind::Leaf(v) => Some(v),
                NodeKind::Internal(_) => None,
            })
            .collect();
        let n = leaf_ids.len();
        let mut leaf_node = vec![None; n];
        for (pos, node) in nodes.iter().enumerate() {
            if let NodeKind::Leaf(v) = node.kind {
                if v >= n {
                    let missing = (0..n).find(|&k| !leaf_ids.contains(&k)).unwrap_or(n);
                    return Err(CotreeError::LeafIdsNotCovering { n, missing });
                }
                if leaf_node[v].is_some() {
                    return Err(CotreeError::DuplicateLeaf(v));
                }
                leaf_node[v] = Some(NodeId(pos));
            }
        }
        let leaf_node: Vec<NodeId> = leaf_node
            .into_iter()
            .map(|x| x.expect("bijection"))
            .collect();

        // Reverse preorder visits children before parents.
        for pos in (0..count).rev() {
            let leaves = match nodes[pos].kind {
                NodeKind::Leaf(v) => vec![v],
                NodeKind::Internal(_) => {
                    let mut all: Vec<usize> = nodes[pos]
                        .children
                        .iter()
                        .flat_map(|c| nodes[c.0].leaves.iter().copied())
                        .collect();
                    all.sort_unstable();
                    all
                }
            };
            nodes[pos].leaves = leaves;
        }

        Ok(CoTree { nodes, leaf_node })
    }
}

impl CoTree {
    /// The single-vertex cotree.
    pub fn single() -> CoTree {
        let mut b = CoTreeBuilder::new();
        let root = b.leaf(0);
        b.build(root).expect("single leaf is valid")
    }

    /// One internal node over `n >= 2` leaves: `K_n` for a join, the empty
    /// graph for a union.
    pub fn star(label: Label, n: usize) -> CoTree {
        assert!(n >= 2, "a star cotree needs at least two leaves");
        let mut b = CoTreeBuilder::new();
        let leaves = (0..n).map(|v| b.leaf(v)).collect();
        let root = b.internal(label, leaves);
        b.build(root).expect("star is valid")
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    /// Number of leaves, i.e. vertices of the represented graph.
    pub fn vertex_count(&self) -> usize {
        self.leaf_node.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    /// Internal nodes in preorder.
    pub fn internal_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().filter(|&v| self.is_internal(v))
    }

    pub fn kind(&self, v: NodeId) -> NodeKind {
        self.nodes[v.0].kind
    }

    pub fn is_internal(&self, v: NodeId) -> bool {
        matches!(self.kind(v), NodeKind::Internal(_))
    }

    pub fn label(&self, v: NodeId) -> Option<Label> {
        match self.kind(v) {
            NodeKind::Internal(l) => Some(l),
            NodeKind::Leaf(_) => None,
        }
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.nodes[v.0].parent
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.nodes[v.0].children
    }

    /// Sorted vertex ids below `v`.
    pub fn leaves_below(&self, v: NodeId) -> &[usize] {
        &self.nodes[v.0].leaves
    }

    pub fn leaf_count(&self, v: NodeId) -> usize {
        self.nodes[v.0].leaves.len()
    }

    pub fn leaf_node(&self, vertex: usize) -> NodeId {
        self.leaf_node[vertex]
    }

    /// `(v, parent(v), ..., root)`.
    pub fn path_to_root(&self, v: NodeId) -> Vec<NodeId> {
        std::iter::successors(Some(v), |&u| self.parent(u)).collect()
    }

    /// True when `a` is a strict ancestor of `b`.
    pub fn is_ancestor(&self, a: NodeId, b: NodeId) -> bool {
        std::iter::successors(self.parent(b), |&u| self.parent(u)).any(|u| u == a)
    }

    /// Lowest common ancestor of the leaves of vertices `i` and `j`.
    pub fn lca(&self, i: usize, j: usize) -> NodeId {
        let pi = self.path_to_root(self.leaf_node(i));
        let pj = self.path_to_root(self.leaf_node(j));
        pi.iter()
            .rev()
            .zip(pj.iter().rev())
            .take_while(|(a, b)| a == b)
            .last()
            .map(|(a, _)| *a)
            .expect("paths share the root")
    }

    /// Whether `i` and `j` are adjacent in the represented graph.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.label(self.lca(i, j)) == Some(Label::Join)
    }

    /// True for connected represented graphs: a single vertex or a join root.
    pub fn is_connected(&self) -> bool {
        self.label(self.root()) != Some(Label::Union)
    }

    pub fn is_canonical(&self) -> bool {
        self.internal_nodes().all(|v| {
            let kids = self.children(v);
            kids.len() >= 2
                && kids.iter().all(|&c| self.label(c) != self.label(v))
                && kids
                    .windows(2)
                    .all(|w| self.leaves_below(w[0])[0] < self.leaves_below(w[1])[0])
        })
    }

    /// The canonical cotree of the same graph: unary nodes spliced out,
    /// same-label parent/child pairs merged, children sorted by smallest leaf.
    /// Idempotent.
    pub fn canonicalize(&self) -> CoTree {
        let count = self.nodes.len();
        // For each node: the node that replaces it once unary chains are
        // spliced, and the flattened child list of internal nodes.
        let mut effective: Vec<NodeId> = (0..count).map(NodeId).collect();
        let mut flat: Vec<Vec<NodeId>> = vec![Vec::new(); count];
        for pos in (0..count).rev() {
            let v = NodeId(pos);
            let Some(label) = self.label(v) else {
                continue;
            };
            let mut kids = Vec::new();
            for &c in self.children(v) {
                let e = effective[c.0];
                if self.label(e) == Some(label) {
                    kids.extend(flat[e.0].iter().copied());
                } else {
                    kids.push(e);
                }
            }
            if kids.len() == 1 {
                effective[pos] = kids[0];
            } else {
                kids.sort_by_key(|&c| self.leaves_below(c)[0]);
                flat[pos] = kids;
            }
        }

        let mut b = CoTreeBuilder::new();
        let root = effective[0];
        let mut map = vec![None; count];
        // Emit bottom-up from the retained nodes.
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            if self.is_internal(v) {
                stack.extend(flat[v.0].iter().copied());
            }
        }
        for &v in order.iter().rev() {
            let id = match self.kind(v) {
                NodeKind::Leaf(x) => b.leaf(x),
                NodeKind::Internal(l) => {
                    let kids = flat[v.0]
                        .iter()
                        .map(|c| map[c.0].expect("child first"))
                        .collect();
                    b.internal(l, kids)
                }
            };
            map[v.0] = Some(id);
        }
        b.build(map[root.0].expect("root emitted"))
            .expect("canonicalization preserves validity")
    }

    /// The represented graph, composed bottom-up with union/join per node.
    pub fn to_graph(&self) -> Graph {
        let count = self.nodes.len();
        // Each node yields a graph on its leaves, in the order they appear
        // when children are concatenated.
        let mut built: Vec<Option<(Graph, Vec<usize>)>> = vec![None; count];
        for pos in (0..count).rev() {
            let v = NodeId(pos);
            built[pos] = Some(match self.kind(v) {
                NodeKind::Leaf(x) => (Graph::empty(1), vec![x]),
                NodeKind::Internal(label) => {
                    let mut parts = Vec::new();
                    let mut order = Vec::new();
                    for c in self.children(v) {
                        let (g, o) = built[c.0].take().expect("child built");
                        parts.push(g);
                        order.extend(o);
                    }
                    let g = match label {
                        Label::Union => Graph::union_of(&parts),
                        Label::Join => Graph::join_of(&parts),
                    }
                    .expect("internal nodes have children");
                    (g, order)
                }
            });
        }
        let (g, order) = built[0].take().expect("root built");
        let mut pos = vec![0; order.len()];
        for (k, &x) in order.iter().enumerate() {
            pos[x] = k;
        }
        Graph::from_fn(order.len(), |i, j| g.has_edge(pos[i], pos[j]))
    }
}

/// `1(0(1,2),3)` style serialization with 1-based leaf ids.
impl fmt::Display for CoTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Step {
            Node(NodeId),
            Text(&'static str),
        }
        let mut stack = vec![Step::Node(self.root())];
        while let Some(step) = stack.pop() {
            match step {
                Step::Text(s) => f.write_str(s)?,
                Step::Node(v) => match self.kind(v) {
                    NodeKind::Leaf(x) => write!(f, "{}", x + 1)?,
                    NodeKind::Internal(l) => {
                        write!(f, "{}(", l.bit())?;
                        stack.push(Step::Text(")"));
                        for (k, &c) in self.children(v).iter().enumerate().rev() {
                            stack.push(Step::Node(c));
                            if k > 0 {
                                stack.push(Step::Text(","));
                            }
                        }
                    }
                },
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoTree({self})")
    }
}

/// Decomposes `g` into its canonical cotree, or returns an induced `P4`.
///
/// Splits a vertex set into connected components (union node) or complement
/// components (join node). When both the subgraph and its complement are
/// connected the subgraph is not a cograph, and a `P4` is searched among its
/// 4-subsets. Worst case `O(n^3)` plus the quartic search at the failing
/// level only.
///
/// Panics on the empty graph.
pub fn recognize(g: &Graph) -> Result<CoTree, P4Witness> {
    assert!(g.vertex_count() >= 1, "recognize needs at least one vertex");
    let mut b = CoTreeBuilder::new();
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let root = if all.len() == 1 {
        b.leaf(0)
    } else {
        b.internal(Label::Union, Vec::new())
    };
    let mut work = vec![(root, all)];
    while let Some((slot, set)) = work.pop() {
        if set.len() == 1 {
            continue;
        }
        let sub = g.induced(&set);
        let mut label = Label::Union;
        let mut parts = sub.components();
        if parts.len() == 1 {
            label = Label::Join;
            parts = sub.complement().components();
        }
        if parts.len() == 1 {
            return Err(find_p4(g, &set).expect("a prime subgraph contains an induced P4"));
        }
        b.kinds[slot.0] = NodeKind::Internal(label);
        for part in parts {
            let vertices: Vec<usize> = part.into_iter().map(|k| set[k]).collect();
            let child = if vertices.len() == 1 {
                b.leaf(vertices[0])
            } else {
                b.internal(label.flipped(), Vec::new())
            };
            b.push_child(slot, child);
            work.push((child, vertices));
        }
    }
    let t = b.build(root).expect("decomposition yields a valid cotree");
    debug_assert!(t.is_canonical());
    Ok(t)
}

fn find_p4(g: &Graph, set: &[usize]) -> Option<P4Witness> {
    let k = set.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    if let Some(w) = P4Witness::from_quad(g, [set[a], set[b], set[c], set[d]]) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_cotree;

    fn tree(text: &str) -> CoTree {
        parse_cotree(text).unwrap()
    }

    const EIGHT_VERTEX: &str = "1(0(1(1,2),3),0(4,1(5,0(6,7,8))))";

    #[test]
    fn p4_is_rejected_with_its_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(recognize(&p4), Err(P4Witness([0, 1, 2, 3])));
        // Relabelled path 3-1-4-2 (1-based).
        let g = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(recognize(&g), Err(P4Witness([1, 3, 0, 2])));
    }

    #[test]
    fn complete_graph_is_one_join_node() {
        for n in 2..=6 {
            let t = recognize(&Graph::complete(n)).unwrap();
            assert_eq!(t, CoTree::star(Label::Join, n));
            assert_eq!(t.internal_nodes().count(), 1);
            assert_eq!(t.children(t.root()).len(), n);
        }
        assert_eq!(recognize(&Graph::empty(1)).unwrap(), CoTree::single());
    }

    #[test]
    fn disconnected_graph_gets_union_root() {
        let g = Graph::union_of(&[Graph::complete(2), Graph::empty(1)]).unwrap();
        let t = recognize(&g).unwrap();
        assert_eq!(t.to_string(), "0(1(1,2),3)");
        assert!(!t.is_connected());
    }

    #[test]
    fn eight_vertex_example_facts() {
        let t = tree(EIGHT_VERTEX);
        assert!(t.is_canonical());
        let g = t.to_graph();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(recognize(&g).unwrap(), t);
        assert_eq!(t.leaf_count(t.root()), 8);
        // 1,2 share a parent; so do 6,7,8.
        assert_eq!(t.parent(t.leaf_node(0)), t.parent(t.leaf_node(1)));
        let p6 = t.parent(t.leaf_node(5));
        assert_eq!(p6, t.parent(t.leaf_node(6)));
        assert_eq!(p6, t.parent(t.leaf_node(7)));
        assert_eq!(t.label(t.lca(5, 6)), Some(Label::Union));
        assert!(!g.has_edge(5, 6));
        assert_eq!(t.label(t.lca(0, 1)), Some(Label::Join));
    }

    #[test]
    fn canonicalize_hoists_and_splices() {
        let t = tree("1(1(1,2),3)");
        assert!(!t.is_canonical());
        let c = t.canonicalize();
        assert_eq!(c.to_string(), "1(1,2,3)");
        assert_eq!(c.to_graph(), t.to_graph());

        let t = tree("0(1(2),1)");
        let c = t.canonicalize();
        assert_eq!(c.to_string(), "0(1,2)");

        let t = tree("1(1)");
        assert_eq!(t.canonicalize(), CoTree::single());

        // Splicing a unary node can bring two same-label nodes together.
        let t = tree("1(0(1(2,3)),1)");
        assert_eq!(t.canonicalize().to_string(), "1(1,2,3)");
    }

    #[test]
    fn canonicalize_is_idempotent_and_sorts() {
        let t = tree("1(0(5,4),1(3,0(2,1)))");
        let c = t.canonicalize();
        assert_eq!(c.to_string(), "1(0(1,2),3,0(4,5))");
        assert_eq!(c.canonicalize(), c);
        assert_eq!(c.to_graph(), t.to_graph());
    }

    #[test]
    fn structural_queries() {
        let t = tree("1(0(1,2),3,0(4,5))");
        let root = t.root();
        assert_eq!(t.leaf_count(root), 5);
        assert_eq!(t.leaves_below(t.children(root)[2]), &[3, 4]);
        let leaf4 = t.leaf_node(3);
        let path = t.path_to_root(leaf4);
        assert_eq!(path.len(), 3);
        assert_eq!(*path.last().unwrap(), root);
        assert_eq!(t.lca(3, 4), t.children(root)[2]);
        assert_eq!(t.lca(0, 4), root);
        assert!(t.is_ancestor(root, leaf4));
        assert!(!t.is_ancestor(leaf4, root));
        assert!(!t.is_ancestor(root, root));
    }

    #[test]
    fn to_graph_small_cases() {
        assert_eq!(CoTree::single().to_graph(), Graph::empty(1));
        assert_eq!(CoTree::star(Label::Join, 3).to_graph(), Graph::complete(3));
    }

    #[test]
    fn builder_rejects_malformed_trees() {
        let mut b = CoTreeBuilder::new();
        let l = b.leaf(0);
        let r = b.internal(Label::Join, vec![l, l]);
        assert_eq!(b.build(r), Err(CotreeError::SharedNode(0)));

        let mut b = CoTreeBuilder::new();
        let r = b.internal(Label::Join, vec![]);
        assert_eq!(b.build(r), Err(CotreeError::ChildlessInternal(0)));

        let mut b = CoTreeBuilder::new();
        let x = b.leaf(0);
        let y = b.leaf(2);
        let r = b.internal(Label::Join, vec![x, y]);
        assert_eq!(
            b.build(r),
            Err(CotreeError::LeafIdsNotCovering { n: 2, missing: 1 })
        );

        let mut b = CoTreeBuilder::new();
        let x = b.leaf(0);
        let y = b.leaf(0);
        let r = b.internal(Label::Join, vec![x, y]);
        assert_eq!(b.build(r), Err(CotreeError::DuplicateLeaf(0)));

        let mut b = CoTreeBuilder::new();
        let x = b.leaf(0);
        let _stray = b.leaf(1);
        assert_eq!(b.build(x), Err(CotreeError::Unreachable(1)));
    }

    #[test]
    fn deep_threshold_cotree_does_not_overflow() {
        let n = 800;
        let g = Graph::from_fn(n, |i, j| {
            let hi = i.max(j);
            hi % 2 == 1
        });
        let t = recognize(&g).unwrap();
        assert!(t.is_canonical());
        assert_eq!(t.to_string().matches('(').count(), n - 1);
    }
}
