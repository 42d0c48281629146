//! Exact-arithmetic toolkit for distance-regular graphs.
//!
//! The crate provides four layers:
//!
//! * [`exactlinalg`]: integer characteristic polynomials, Sturm sequences,
//!   and algebraic eigenvalues (rationals, quadratic irrationals, isolating
//!   intervals).
//! * [`graphcore`]: bitset graphs, distance partitions, quotient matrices,
//!   interlacing, cocliques, switching, and isomorphism testing.
//! * [`arrays`]: intersection arrays, their spectra, and feasibility
//!   filters.
//! * [`constructions`] and [`classification`]: named graph families and the
//!   classification machinery for graphs whose local graphs have second
//!   largest eigenvalue at most one.
//!
//! Quick start: build a named graph, certify it is distance-regular, and
//! check the local eigenvalue condition.
//!
//! ```
//! use drg::classification::local_property;
//! use drg::constructions::{build, check_drg, FamilySpec};
//! use num_rational::BigRational;
//! use num_traits::One;
//!
//! let g = build(&FamilySpec::Petersen).unwrap();
//! let verdict = check_drg(&g).unwrap();
//! assert_eq!(verdict.array().unwrap().to_string(), "{3,2;1,1}");
//!
//! let summary = local_property(&g, &BigRational::one());
//! assert!(summary.all_pass());
//! ```

pub mod arrays;
pub mod classification;
pub mod cli;
pub mod constructions;
pub mod exactlinalg;
pub mod graphcore;
