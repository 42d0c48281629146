//! The classification theorems as executable verifications: per-graph
//! local-eigenvalue checks, partition bounds, and the case-analysis scans
//! with surviving/eliminated reports.
//!
//! The diameter-two scan narrows the candidate intersection arrays to six
//! open survivors:
//!
//! ```
//! use drg::classification::scan_diameter2;
//!
//! let result = scan_diameter2();
//! let claim = result.case("claim").unwrap();
//! assert_eq!(claim.surviving_arrays().len(), 6);
//! ```

pub mod corpus;
pub mod facts;
pub mod local;
pub mod scan;
pub mod verify;

pub use corpus::{corpus, CorpusEntry};
pub use facts::{fact, ImportedFact};
pub use local::{
    connectivity_props, local_eigenvalue_sandwich, local_property, partition_bound,
    LocalSpectrumSummary, PartitionBound, VertexLocalData,
};
pub use scan::{scan_diameter2, scan_diameter3plus, CaseReport, Candidate, Outcome, Provenance, ScanResult};
pub use verify::{
    verify_props, verify_theorem_1_1, verify_theorem_1_2, Check, Status, VerificationReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ClassificationError {
    #[error("hypothesis not met: {0}")]
    Inapplicable(String),
    #[error("graph error: {0}")]
    Graph(String),
}

/// Run `f` under a thread pool capped by the DRG_THREADS environment
/// variable. Without the variable, rayon's global pool (machine
/// parallelism) is used. Results are merged in canonical order by the
/// callers, so output never depends on scheduling.
pub fn with_thread_pool<R: Send>(f: impl FnOnce() -> R + Send) -> R {
    let cap = std::env::var("DRG_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n >= 1);
    match cap {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}
