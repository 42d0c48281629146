//! Intersection-array algebra: derived parameters, exact spectra with
//! multiplicities, and feasibility filters.
//!
//! ```
//! use drg::arrays::{spectrum, IntersectionArray};
//! use num_bigint::BigInt;
//!
//! let arr: IntersectionArray = "{27,16,1;1,16,27}".parse().unwrap();
//! let s = spectrum(&arr).unwrap();
//! assert_eq!(s.nu, BigInt::from(56));
//! assert!(s.eigenvalues_integral());
//! assert!(s.multiplicities_integral());
//! ```

mod array;
mod feasibility;
mod spectrum;

pub use array::{
    coclique_ratio_bound, srg_from_eigs, DRGParams, IntersectionArray, SRGParams, ShapeTag,
};
pub use feasibility::{feasibility, Assumptions, FeasibilityReport, Verdict};
pub use spectrum::{quotient_matrix_of, spectrum, SpectrumEntry, SpectrumEstimate};

#[derive(thiserror::Error, Debug)]
pub enum ArrayError {
    #[error("malformed intersection array: {0}")]
    Malformed(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("inconsistent parameters: {0}")]
    Inconsistent(String),
}
