//! Leader selection for `x' = -L x + B u` on a connected cograph.
//!
//! Leaves sharing a cotree parent are *siblings*; the sibling cells
//! partition the vertices. The pair `(-L, B)` is controllable exactly when
//! every cell has at most one vertex outside the control set, so the
//! minimum number of control vertices is `n - p` for `p` cells and there are
//! `m_1 * .. * m_p` minimum sets.
//!
//! [`is_controllable`] uses that cell test directly. [`pbh_check`] reaches
//! the same verdict through ranks of the integer eigenvector blocks, and the
//! two are kept as independent cross-checks of each other.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::cotree::{CoTree, NodeId};
use crate::matrix::IntegerMatrix;
use crate::spectral::eigen_blocks;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ControlError {
    #[error("the graph is disconnected; no control set spans every component's consensus mode")]
    Disconnected,
    #[error("the graph must have more than one vertex")]
    TooSmall,
    #[error("vertex {vertex} out of range 1..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),
    #[error("node {} is a leaf, expected an internal node", .0.index())]
    NotInternal(NodeId),
    #[error("invalid row choice: {0}")]
    InvalidChoice(String),
}

/// Vertices grouped into maximal sibling cells, ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SiblingPartition {
    cells: Vec<Vec<usize>>,
}

impl SiblingPartition {
    pub(crate) fn from_cells(mut cells: Vec<Vec<usize>>) -> Self {
        for c in &mut cells {
            c.sort_unstable();
        }
        cells.sort_unstable_by_key(|c| c[0]);
        SiblingPartition { cells }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Number of cells, `p`.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Same cells regardless of order.
    pub fn same_partition(&self, other: &SiblingPartition) -> bool {
        self.cells == other.cells
    }
}

/// The control vertices `j_1..j_m`, i.e. `B = [e_{j_1}, .., e_{j_m}]`.
/// Stored 0-based, in the given order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ControlSet {
    vertices: Vec<usize>,
}

impl ControlSet {
    /// Rejects repeated vertices. Range is checked against a tree or graph
    /// by the operations that consume the set.
    pub fn new(vertices: Vec<usize>) -> Result<Self, ControlError> {
        let mut seen = std::collections::HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(ControlError::DuplicateVertex(v + 1));
            }
        }
        Ok(ControlSet { vertices })
    }

    /// From 1-based ids; 0 is out of range.
    pub fn from_one_based(ids: &[usize]) -> Result<Self, ControlError> {
        if let Some(&bad) = ids.iter().find(|&&v| v == 0) {
            return Err(ControlError::VertexOutOfRange { vertex: bad, n: 0 });
        }
        Self::new(ids.iter().map(|v| v - 1).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// 1-based ids, ascending.
    pub fn one_based_sorted(&self) -> Vec<usize> {
        let mut ids: Vec<usize> = self.vertices.iter().map(|v| v + 1).collect();
        ids.sort_unstable();
        ids
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Errors if any vertex is `>= n`.
    pub fn check_range(&self, n: usize) -> Result<(), ControlError> {
        match self.vertices.iter().find(|&&v| v >= n) {
            Some(&v) => Err(ControlError::VertexOutOfRange { vertex: v + 1, n }),
            None => Ok(()),
        }
    }

    /// The `n x m` input matrix.
    pub fn input_matrix(&self, n: usize) -> IntegerMatrix {
        IntegerMatrix::from_fn(n, self.len(), |i, j| i64::from(self.vertices[j] == i))
    }
}

/// `{1,6,7}`: 1-based, ascending.
impl fmt::Display for ControlSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self
            .one_based_sorted()
            .iter()
            .map(ToString::to_string)
            .collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// Which vertices of a cell a selection keeps when dropping one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieRule {
    /// Keep the lowest ids, drop the highest.
    #[default]
    LowestIds,
    /// Keep the highest ids, drop the lowest.
    HighestIds,
}

/// Leaves grouped by parent. A single-vertex tree is one cell.
pub fn sibling_partition(t: &CoTree) -> SiblingPartition {
    let mut by_parent: BTreeMap<Option<NodeId>, Vec<usize>> = BTreeMap::new();
    for v in 0..t.vertex_count() {
        by_parent
            .entry(t.parent(t.leaf_node(v)))
            .or_default()
            .push(v);
    }
    SiblingPartition::from_cells(by_parent.into_values().collect())
}

fn require_connected(t: &CoTree) -> Result<(), ControlError> {
    if t.vertex_count() < 2 {
        Err(ControlError::TooSmall)
    } else if !t.is_connected() {
        Err(ControlError::Disconnected)
    } else {
        Ok(())
    }
}

/// `n - p`.
pub fn min_control_size(t: &CoTree) -> Result<usize, ControlError> {
    require_connected(t)?;
    Ok(t.vertex_count() - sibling_partition(t).len())
}

pub(crate) fn pick_all_but_one(cells: &[Vec<usize>], tie: TieRule) -> ControlSet {
    let mut chosen = Vec::new();
    for cell in cells {
        let keep = cell.len() - 1;
        match tie {
            TieRule::LowestIds => chosen.extend_from_slice(&cell[..keep]),
            TieRule::HighestIds => chosen.extend_from_slice(&cell[1..]),
        }
    }
    chosen.sort_unstable();
    ControlSet::new(chosen).expect("cells are disjoint")
}

/// All but one vertex of every sibling cell.
pub fn select_min_control_set(t: &CoTree, tie: TieRule) -> Result<ControlSet, ControlError> {
    require_connected(t)?;
    Ok(pick_all_but_one(sibling_partition(t).cells(), tie))
}

/// `m_1 * .. * m_p`, computed without enumerating.
pub fn count_min_control_sets(t: &CoTree) -> Result<BigUint, ControlError> {
    require_connected(t)?;
    Ok(sibling_partition(t)
        .sizes()
        .into_iter()
        .map(BigUint::from)
        .product())
}

/// Every minimum control set, in lexicographic order of their sorted
/// vertex lists.
pub fn enumerate_min_control_sets(t: &CoTree) -> Result<MinControlSets, ControlError> {
    require_connected(t)?;
    Ok(MinControlSets::new(&sibling_partition(t)))
}

/// Streams the minimum control sets of a sibling partition.
///
/// Walks the vertices in id order deciding include/omit, including whenever
/// that still leaves room to omit one vertex of the cell later. Sets of equal
/// size compare lexicographically by their smallest differing vertex, so this
/// include-first order is lexicographic. Every branch completes, so each
/// step costs `O(n)`.
#[derive(Debug, Clone)]
pub struct MinControlSets {
    cell_of: Vec<usize>,
    cell_size: Vec<usize>,
    /// `include[v]` for the current set; empty once exhausted.
    include: Vec<bool>,
    omitted: Vec<bool>,
    remaining: Vec<usize>,
    started: bool,
    done: bool,
}

impl MinControlSets {
    fn new(partition: &SiblingPartition) -> Self {
        let n = partition.vertex_count();
        let mut cell_of = vec![0; n];
        for (k, cell) in partition.cells().iter().enumerate() {
            for &v in cell {
                cell_of[v] = k;
            }
        }
        let cell_size = partition.sizes();
        MinControlSets {
            cell_of,
            remaining: cell_size.clone(),
            omitted: vec![false; cell_size.len()],
            cell_size,
            include: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    /// Decides vertices `include.len()..n`, include-first.
    fn fill(&mut self) {
        for v in self.include.len()..self.cell_of.len() {
            let c = self.cell_of[v];
            self.remaining[c] -= 1;
            let can_include = self.omitted[c] || self.remaining[c] > 0;
            if !can_include {
                self.omitted[c] = true;
            }
            self.include.push(can_include);
        }
    }

    /// Moves to the next set; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(was_included) = self.include.pop() {
            let v = self.include.len();
            let c = self.cell_of[v];
            self.remaining[c] += 1;
            if !was_included {
                self.omitted[c] = false;
                continue;
            }
            if !self.omitted[c] {
                self.remaining[c] -= 1;
                self.omitted[c] = true;
                self.include.push(false);
                self.fill();
                return true;
            }
        }
        false
    }

    fn current(&self) -> ControlSet {
        let vertices = self
            .include
            .iter()
            .enumerate()
            .filter(|(_, &inc)| inc)
            .map(|(v, _)| v)
            .collect();
        ControlSet { vertices }
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_size
    }
}

impl Iterator for MinControlSets {
    type Item = ControlSet;

    fn next(&mut self) -> Option<ControlSet> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// The cell test: every sibling cell has at most one vertex outside `c`.
pub fn is_controllable(t: &CoTree, c: &ControlSet) -> Result<bool, ControlError> {
    require_connected(t)?;
    c.check_range(t.vertex_count())?;
    let mut chosen = vec![false; t.vertex_count()];
    for &v in c.vertices() {
        chosen[v] = true;
    }
    Ok(sibling_partition(t)
        .cells()
        .iter()
        .all(|cell| cell.iter().filter(|&&v| !chosen[v]).count() <= 1))
}

/// Eigenvector test: for each distinct eigenvalue, the rows at `c` of its
/// full eigenvector basis must have full column rank (no eigenvector is
/// orthogonal to every input column).
///
/// The basis of a nontrivial eigenvalue is the stack of all eigen blocks
/// sharing it; the trivial eigenvalue 0 has the all-ones vector.
pub fn pbh_check(t: &CoTree, c: &ControlSet) -> Result<bool, ControlError> {
    require_connected(t)?;
    let n = t.vertex_count();
    c.check_range(n)?;
    if c.is_empty() {
        return Ok(false);
    }
    let mut groups: BTreeMap<u64, Vec<IntegerMatrix>> = BTreeMap::new();
    groups
        .entry(0)
        .or_default()
        .push(IntegerMatrix::from_fn(n, 1, |_, _| 1));
    for block in eigen_blocks(t) {
        groups
            .entry(block.lambda)
            .or_default()
            .push(block.embedded(n));
    }
    Ok(groups.values().all(|mats| {
        let refs: Vec<&IntegerMatrix> = mats.iter().collect();
        IntegerMatrix::hconcat(n, &refs)
            .select_rows(c.vertices())
            .has_full_column_rank()
    }))
}

/// Rows picked by choosing `c(v) - 1` distinct children of `v` and one leaf
/// below each. `picks` lists `(child position, vertex)` pairs, 0-based.
/// Returns the chosen vertices, ascending; the modal block of `v` restricted
/// to these rows is square and nonsingular.
pub fn procedure_one_rows(
    t: &CoTree,
    v: NodeId,
    picks: &[(usize, usize)],
) -> Result<Vec<usize>, ControlError> {
    if !t.is_internal(v) {
        return Err(ControlError::NotInternal(v));
    }
    let children = t.children(v);
    if picks.len() != children.len() - 1 {
        return Err(ControlError::InvalidChoice(format!(
            "need {} picks, got {}",
            children.len() - 1,
            picks.len()
        )));
    }
    let mut used = vec![false; children.len()];
    let mut rows = Vec::with_capacity(picks.len());
    for &(child, vertex) in picks {
        if child >= children.len() {
            return Err(ControlError::InvalidChoice(format!(
                "no child at position {child}"
            )));
        }
        if std::mem::replace(&mut used[child], true) {
            return Err(ControlError::InvalidChoice(format!(
                "child {child} picked twice"
            )));
        }
        if t.leaves_below(children[child])
            .binary_search(&vertex)
            .is_err()
        {
            return Err(ControlError::InvalidChoice(format!(
                "vertex {} is not below child {child}",
                vertex + 1
            )));
        }
        rows.push(vertex);
    }
    rows.sort_unstable();
    Ok(rows)
}

/// Every row set [`procedure_one_rows`] can produce for `v`, each ascending.
pub fn procedure_one_choices(t: &CoTree, v: NodeId) -> Result<Vec<Vec<usize>>, ControlError> {
    if !t.is_internal(v) {
        return Err(ControlError::NotInternal(v));
    }
    let children = t.children(v);
    let mut out = Vec::new();
    for skip in 0..children.len() {
        let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
        for (k, &c) in children.iter().enumerate() {
            if k == skip {
                continue;
            }
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    t.leaves_below(c).iter().map(move |&leaf| {
                        let mut q = p.clone();
                        q.push(leaf);
                        q
                    })
                })
                .collect();
        }
        for mut rows in partial {
            rows.sort_unstable();
            out.push(rows);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cotree::{recognize, Label};
    use crate::parser::{parse_cotree, parse_expr, parse_threshold, threshold_to_graph};
    use crate::spectral::modal_block;

    const EIGHT_VERTEX: &str = "1(0(1(1,2),3),0(4,1(5,0(6,7,8))))";

    fn eight_vertex() -> CoTree {
        parse_cotree(EIGHT_VERTEX).unwrap()
    }

    fn threshold_seven() -> CoTree {
        recognize(&threshold_to_graph(&parse_threshold("0101001").unwrap())).unwrap()
    }

    fn set(ids: &[usize]) -> ControlSet {
        ControlSet::from_one_based(ids).unwrap()
    }

    fn one_based(p: &SiblingPartition) -> Vec<Vec<usize>> {
        p.cells()
            .iter()
            .map(|c| c.iter().map(|v| v + 1).collect())
            .collect()
    }

    #[test]
    fn sibling_partition_examples() {
        assert_eq!(
            one_based(&sibling_partition(&eight_vertex())),
            vec![vec![1, 2], vec![3], vec![4], vec![5], vec![6, 7, 8]]
        );
        assert_eq!(
            one_based(&sibling_partition(&CoTree::star(Label::Join, 5))),
            vec![vec![1, 2, 3, 4, 5]]
        );
        let k23 = parse_expr("2*3").unwrap();
        assert_eq!(sibling_partition(&k23).sizes(), vec![2, 3]);
        assert_eq!(
            one_based(&sibling_partition(&threshold_seven())),
            vec![vec![1, 2], vec![3], vec![4], vec![5, 6], vec![7]]
        );
        assert_eq!(sibling_partition(&CoTree::single()).len(), 1);
    }

    #[test]
    fn siblings_share_neighbourhoods() {
        let t = eight_vertex();
        let g = t.to_graph();
        let p = sibling_partition(&t);
        let cell_of = |v: usize| p.cells().iter().position(|c| c.contains(&v)).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                if i == j {
                    continue;
                }
                let ni: Vec<usize> = g.neighbors(i).filter(|&x| x != j).collect();
                let nj: Vec<usize> = g.neighbors(j).filter(|&x| x != i).collect();
                assert_eq!(ni == nj, cell_of(i) == cell_of(j), "{i} {j}");
            }
        }
    }

    #[test]
    fn min_size_examples() {
        assert_eq!(min_control_size(&eight_vertex()), Ok(3));
        for n in 2..8 {
            assert_eq!(min_control_size(&CoTree::star(Label::Join, n)), Ok(n - 1));
        }
        assert_eq!(min_control_size(&parse_expr("3*4").unwrap()), Ok(5));
        assert_eq!(
            min_control_size(&CoTree::single()),
            Err(ControlError::TooSmall)
        );
        assert_eq!(
            min_control_size(&parse_cotree("0(1,2)").unwrap()),
            Err(ControlError::Disconnected)
        );
    }

    #[test]
    fn selection_examples() {
        assert_eq!(
            select_min_control_set(&eight_vertex(), TieRule::LowestIds).unwrap(),
            set(&[1, 6, 7])
        );
        assert_eq!(
            select_min_control_set(&eight_vertex(), TieRule::HighestIds).unwrap(),
            set(&[2, 7, 8])
        );
        assert_eq!(
            select_min_control_set(&CoTree::star(Label::Join, 3), TieRule::LowestIds).unwrap(),
            set(&[1, 2])
        );
        assert_eq!(
            select_min_control_set(&threshold_seven(), TieRule::LowestIds).unwrap(),
            set(&[1, 5])
        );
    }

    #[test]
    fn enumeration_examples() {
        let sets: Vec<String> = enumerate_min_control_sets(&eight_vertex())
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(
            sets,
            ["{1,6,7}", "{1,6,8}", "{1,7,8}", "{2,6,7}", "{2,6,8}", "{2,7,8}"]
        );
        assert_eq!(
            count_min_control_sets(&eight_vertex()),
            Ok(BigUint::from(6u8))
        );
        for n in 2..7 {
            let t = CoTree::star(Label::Join, n);
            assert_eq!(enumerate_min_control_sets(&t).unwrap().count(), n);
        }
        let sets: Vec<String> = enumerate_min_control_sets(&threshold_seven())
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(sets, ["{1,5}", "{1,6}", "{2,5}", "{2,6}"]);
        assert_eq!(
            count_min_control_sets(&threshold_seven()),
            Ok(BigUint::from(4u8))
        );
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let t = parse_cotree("1(0(1,2,3),0(4,5),6,0(7,1(8,9)))").unwrap();
        let sets: Vec<Vec<usize>> = enumerate_min_control_sets(&t)
            .unwrap()
            .map(|s| s.one_based_sorted())
            .collect();
        let count = count_min_control_sets(&t).unwrap();
        assert_eq!(BigUint::from(sets.len()), count);
        assert!(sets.windows(2).all(|w| w[0] < w[1]));
        for s in &sets {
            assert!(is_controllable(&t, &ControlSet::from_one_based(s).unwrap()).unwrap());
        }
    }

    #[test]
    fn count_does_not_materialize() {
        // 40 cells of two leaves: 2^40 sets.
        let mut text = String::from("1(");
        for k in 0..40 {
            if k > 0 {
                text.push(',');
            }
            text.push_str(&format!("0({},{})", 2 * k + 1, 2 * k + 2));
        }
        text.push(')');
        let t = parse_cotree(&text).unwrap();
        assert_eq!(
            count_min_control_sets(&t).unwrap(),
            BigUint::from(1u64 << 40)
        );
        assert_eq!(enumerate_min_control_sets(&t).unwrap().take(3).count(), 3);
    }

    #[test]
    fn controllability_examples() {
        let t = eight_vertex();
        assert_eq!(is_controllable(&t, &set(&[1, 6, 7])), Ok(true));
        assert_eq!(is_controllable(&t, &set(&[6, 7])), Ok(false));
        assert_eq!(
            is_controllable(&t, &set(&[1, 2, 3, 4, 5, 6, 7, 8])),
            Ok(true)
        );
        assert_eq!(pbh_check(&t, &set(&[2, 7, 8])), Ok(true));
        assert_eq!(pbh_check(&t, &set(&[6, 7])), Ok(false));
        assert_eq!(pbh_check(&t, &set(&[])), Ok(false));
        assert_eq!(is_controllable(&t, &set(&[])), Ok(false));
        let k23 = parse_expr("2*3").unwrap();
        assert_eq!(pbh_check(&k23, &set(&[1, 3, 4])), Ok(true));
        assert_eq!(is_controllable(&k23, &set(&[1, 3, 4])), Ok(true));
        assert_eq!(
            is_controllable(&t, &set(&[9])),
            Err(ControlError::VertexOutOfRange { vertex: 9, n: 8 })
        );
        assert_eq!(
            pbh_check(&t, &set(&[9])),
            Err(ControlError::VertexOutOfRange { vertex: 9, n: 8 })
        );
        assert_eq!(
            ControlSet::from_one_based(&[1, 1]),
            Err(ControlError::DuplicateVertex(1))
        );
    }

    #[test]
    fn row_choice_examples() {
        let t = parse_cotree("1(1,2)").unwrap();
        let r = t.root();
        assert_eq!(procedure_one_rows(&t, r, &[(0, 0)]), Ok(vec![0]));
        assert_eq!(procedure_one_rows(&t, r, &[(1, 1)]), Ok(vec![1]));
        assert!(matches!(
            procedure_one_rows(&t, r, &[(0, 1)]),
            Err(ControlError::InvalidChoice(_))
        ));
        assert!(matches!(
            procedure_one_rows(&t, r, &[]),
            Err(ControlError::InvalidChoice(_))
        ));
        let leaf = t.leaf_node(0);
        assert_eq!(
            procedure_one_rows(&t, leaf, &[]),
            Err(ControlError::NotInternal(leaf))
        );

        let t = parse_cotree("1(0(1,2),3,0(4,5))").unwrap();
        let r = t.root();
        assert_eq!(procedure_one_rows(&t, r, &[(0, 1), (2, 3)]), Ok(vec![1, 3]));
        assert!(matches!(
            procedure_one_rows(&t, r, &[(0, 0), (0, 1)]),
            Err(ControlError::InvalidChoice(_))
        ));
        assert_eq!(procedure_one_choices(&t, r).unwrap().len(), 2 + 4 + 2);
    }

    #[test]
    fn row_choices_are_exactly_the_nonsingular_ones() {
        for t in [
            eight_vertex(),
            threshold_seven(),
            parse_cotree("1(0(1,2,3),0(4,5),6,0(7,1(8,9)))").unwrap(),
        ] {
            for v in t.internal_nodes() {
                let block = modal_block(&t, v).unwrap();
                let k = block.multiplicity();
                let full = block.embedded(t.vertex_count());
                let valid: std::collections::HashSet<Vec<usize>> =
                    procedure_one_choices(&t, v).unwrap().into_iter().collect();
                // Every (c(v)-1)-subset of the leaves below v.
                let leaves = t.leaves_below(v).to_vec();
                let mut idx: Vec<usize> = (0..k).collect();
                loop {
                    let rows: Vec<usize> = idx.iter().map(|&i| leaves[i]).collect();
                    let nonsingular = full.select_rows(&rows).rank() == k;
                    assert_eq!(
                        nonsingular,
                        valid.contains(&rows),
                        "{t} node {v:?} rows {rows:?}"
                    );
                    // Next combination.
                    let mut i = k;
                    while i > 0 && idx[i - 1] == leaves.len() - k + i - 1 {
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    idx[i - 1] += 1;
                    for j in i..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                }
            }
        }
    }

    #[test]
    fn same_child_leaves_are_singular() {
        let t = parse_cotree("1(0(1,2),3)").unwrap();
        let full = modal_block(&t, t.root()).unwrap().embedded(3);
        assert_eq!(full.select_rows(&[0]).rank(), 1);
        let t = parse_cotree("1(0(1,2),3,4)").unwrap();
        let full = modal_block(&t, t.root()).unwrap().embedded(4);
        assert_eq!(full.select_rows(&[0, 1]).rank(), 1);
    }
}
