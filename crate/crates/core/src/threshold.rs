//! Threshold graphs: siblings are exactly the vertices of equal degree, so
//! the sibling partition can be read off the degree sequence without a
//! cotree.

use std::collections::BTreeMap;

use crate::control::{pick_all_but_one, ControlError, ControlSet, SiblingPartition, TieRule};
use crate::graph::Graph;
use crate::parser::{threshold_to_graph, ThresholdSequence};

/// Vertices grouped by degree, cells in increasing degree order.
///
/// Defined for any graph. It coincides with the sibling partition only for
/// threshold graphs; general cographs can have equal-degree non-siblings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePartition {
    cells: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl DegreePartition {
    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Degree shared by each cell.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The same cells in sibling-partition order (by smallest vertex), for
    /// comparison as set partitions.
    pub fn to_partition(&self) -> SiblingPartition {
        SiblingPartition::from_cells(self.cells.clone())
    }
}

pub fn degree_partition(g: &Graph) -> DegreePartition {
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let (degrees, cells) = by_degree.into_iter().unzip();
    DegreePartition { cells, degrees }
}

/// Minimum control size `n - p` and a minimum set (lowest ids kept) from the
/// degree partition of a connected threshold graph.
pub fn threshold_min_control(seq: &ThresholdSequence) -> Result<(usize, ControlSet), ControlError> {
    threshold_min_control_with(seq, TieRule::LowestIds)
}

pub fn threshold_min_control_with(
    seq: &ThresholdSequence,
    tie: TieRule,
) -> Result<(usize, ControlSet), ControlError> {
    if seq.len() < 2 {
        return Err(ControlError::TooSmall);
    }
    if !seq.is_connected() {
        return Err(ControlError::Disconnected);
    }
    let partition = degree_partition(&threshold_to_graph(seq));
    let size = seq.len() - partition.len();
    let set = pick_all_but_one(partition.to_partition().cells(), tie);
    Ok((size, set))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::control::{select_min_control_set, sibling_partition};
    use crate::cotree::recognize;
    use crate::parser::parse_threshold;
    use proptest::prelude::*;

    fn seq(text: &str) -> ThresholdSequence {
        parse_threshold(text).unwrap()
    }

    fn one_based(cells: &[Vec<usize>]) -> Vec<Vec<usize>> {
        cells
            .iter()
            .map(|c| c.iter().map(|v| v + 1).collect())
            .collect()
    }

    #[test]
    fn degree_partition_examples() {
        assert_eq!(degree_partition(&Graph::complete(5)).len(), 1);
        let p = degree_partition(&threshold_to_graph(&seq("0101001")));
        assert_eq!(
            one_based(p.cells()),
            vec![vec![5, 6], vec![3], vec![1, 2], vec![4], vec![7]]
        );
        assert_eq!(p.degrees(), &[1, 2, 3, 4, 6]);
        let star = threshold_to_graph(&seq("0001"));
        let p = degree_partition(&star);
        assert_eq!(one_based(p.cells()), vec![vec![1, 2, 3], vec![4]]);
    }

    #[test]
    fn min_control_examples() {
        let (size, set) = threshold_min_control(&seq("0101001")).unwrap();
        assert_eq!(size, 2);
        assert_eq!(set.to_string(), "{1,5}");
        assert_eq!(threshold_min_control(&seq("01")).unwrap().0, 1);
        // Anti-regular: one repeated degree, a single leader suffices.
        for text in ["01", "001", "0101", "01011", "010101", "0100111"] {
            let g = threshold_to_graph(&seq(text));
            let mut d = g.degree_sequence();
            d.sort_unstable();
            d.dedup();
            if d.len() == g.vertex_count() - 1 {
                assert_eq!(threshold_min_control(&seq(text)).unwrap().0, 1, "{text}");
            }
        }
        assert_eq!(threshold_min_control(&seq("010101")).unwrap().0, 1);
    }

    #[test]
    fn seven_vertex_cotree_shape() {
        let g = threshold_to_graph(&seq("0101001"));
        let t = recognize(&g).unwrap();
        assert_eq!(t.to_string(), "1(0(1(0(1(1,2),3),4),5,6),7)");
        assert_eq!(t.internal_nodes().count(), 5);
        assert_eq!(t.to_graph(), g);
    }

    #[test]
    fn min_control_errors() {
        assert_eq!(
            threshold_min_control(&seq("0")),
            Err(ControlError::TooSmall)
        );
        assert_eq!(
            threshold_min_control(&seq("0110")),
            Err(ControlError::Disconnected)
        );
    }

    #[test]
    fn equal_degree_is_not_sibling_for_general_cographs() {
        // K_{1,2} + K_2: the star's leaves and both K_2 vertices have degree 1.
        let g = Graph::union_of(&[
            Graph::join_of(&[Graph::empty(1), Graph::empty(2)]).unwrap(),
            Graph::complete(2),
        ])
        .unwrap();
        let t = recognize(&g).unwrap();
        assert!(!degree_partition(&g)
            .to_partition()
            .same_partition(&sibling_partition(&t)));
    }

    proptest! {
        #[test]
        fn degree_cells_are_sibling_cells(bits in proptest::collection::vec(any::<bool>(), 0..12)) {
            let mut all = vec![false];
            all.extend(bits);
            let s = ThresholdSequence::new(all).unwrap();
            let g = threshold_to_graph(&s);
            let t = recognize(&g).expect("threshold graphs are cographs");
            prop_assert!(degree_partition(&g).to_partition().same_partition(&sibling_partition(&t)));
            if s.len() > 1 && s.is_connected() {
                let (size, set) = threshold_min_control(&s).unwrap();
                prop_assert_eq!(set.len(), size);
                prop_assert_eq!(set, select_min_control_set(&t, TieRule::LowestIds).unwrap());
            }
        }
    }
}
