//! Graph constructions: named families, finite-field machinery, embedded
//! assets, and distance-regularity certification.
//!
//! The Gosset graph is locally the valency-10 Schlafli graph, the
//! complement of the valency-16 convention used by [`FamilySpec::Schlafli`]:
//!
//! ```
//! use drg::constructions::{build, is_locally, FamilySpec};
//!
//! let gosset = build(&FamilySpec::Gosset).unwrap();
//! let schlafli = build(&FamilySpec::Schlafli).unwrap();
//! assert!(is_locally(&gosset, &schlafli.complement()).unwrap());
//! ```

pub mod assets;
pub mod certify;
pub mod families;
pub mod gf;

pub use assets::{named_graph, NamedGraph};
pub use certify::{check_drg, distance_k_graph, is_locally, DrgVerdict};
pub use families::{build, symplectic_cover, taylor_double, FamilySpec};
pub use gf::FiniteField;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("graph error: {0}")]
    Graph(String),
}
