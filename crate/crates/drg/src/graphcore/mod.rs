//! Graph representation and structural operations: complements, line
//! graphs, local graphs, distance partitions, quotient matrices, switching,
//! cocliques, and isomorphism.
//!
//! ```
//! use drg::graphcore::{check_interlacing, distance_partition, Graph};
//!
//! let g = Graph::cycle(6);
//! let pi = distance_partition(&g, 0).unwrap();
//! assert_eq!(pi.blocks().len(), 4);
//! assert!(check_interlacing(&g, &pi));
//! ```

mod bitset;
mod coclique;
mod graph;
mod io;
mod iso;
mod partition;

pub use bitset::BitSet;
pub use coclique::max_coclique;
pub use graph::Graph;
pub use io::{format_native, parse_graph6, parse_native};
pub use iso::isomorphic;
pub use partition::{check_interlacing, distance_partition, quotient_matrix, VertexPartition};

#[derive(thiserror::Error, Debug)]
pub enum GraphError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is disconnected; components: {0:?}")]
    Disconnected(Vec<Vec<usize>>),
    #[error("line graph of an edgeless graph is undefined")]
    Edgeless,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{0}")]
    BudgetExceeded(String),
}
