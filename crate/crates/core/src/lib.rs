//! Cographs through their cotrees: recognition, exact Laplacian spectra and
//! minimum leader selection for consensus networks.
//!
//! Vertex ids are 0-based throughout the library; text formats and
//! [`ControlSet`]'s `Display` use 1-based ids.

pub mod control;
pub mod cotree;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod parser;
pub mod random;
pub mod spectral;
pub mod threshold;

pub use control::{
    count_min_control_sets, enumerate_min_control_sets, is_controllable, min_control_size,
    pbh_check, select_min_control_set, sibling_partition, ControlError, ControlSet,
    SiblingPartition, TieRule,
};
pub use cotree::{
    recognize, CoTree, CoTreeBuilder, CotreeError, Label, NodeId, NodeKind, P4Witness,
};
pub use graph::{Graph, GraphError};
pub use matrix::IntegerMatrix;
pub use parser::{
    parse_cotree, parse_expr, parse_threshold, read_edge_list, serialize_cotree,
    threshold_to_graph, write_edge_list, ParseError, ParseErrorKind, ThresholdSequence,
};
pub use spectral::{eigen_blocks, modal_matrix, spectrum, EigenBlock, SpectralError, Spectrum};
pub use threshold::{degree_partition, threshold_min_control, DegreePartition};
