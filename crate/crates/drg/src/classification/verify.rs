//! Executable verification of the two classification statements and of
//! the supporting propositions, over the built corpus.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Ordering;

use super::corpus::{corpus, CorpusEntry, OPEN_ARRAYS};
use super::local::{connectivity_props, local_eigenvalue_sandwich, local_property};
use crate::arrays::{spectrum, IntersectionArray, SRGParams};
use crate::constructions::check_drg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    /// all checks pass but the statement has undecided entries
    Open,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn finish(name: &str, checks: Vec<Check>, notes: Vec<String>, open: bool) -> Self {
        let status = if checks.iter().any(|c| !c.pass) {
            Status::Fail
        } else if open {
            Status::Open
        } else {
            Status::Pass
        };
        VerificationReport {
            name: name.into(),
            status,
            checks,
            notes,
        }
    }
}

fn parsed(e: &CorpusEntry) -> IntersectionArray {
    e.array.parse().expect("corpus array")
}

/// Members of the smallest-eigenvalue equality statement, by corpus name.
const EQUALITY_LIST: [&str; 12] = [
    "multipartite-4x2",
    "grid-4-complement",
    "triangular-7-complement",
    "petersen-complement",
    "shrikhande-complement",
    "chang-1-complement",
    "chang-2-complement",
    "chang-3-complement",
    "johnson-6-3",
    "halved-6-cube-distance-2",
    "gosset",
    "conway-smith",
];

/// The smallest-eigenvalue statement: among the corpus graphs with
/// diameter at least two and a1 >= 2, exactly the listed ones attain the
/// value -1 - b1/2 (complete multipartite graphs are listed but lie
/// strictly below the value; see the notes).
pub fn verify_theorem_1_1() -> VerificationReport {
    let checks: Vec<Check> = corpus()
        .par_iter()
        .filter(|e| parsed(e).diameter() >= 2)
        .map(|e| {
            let arr = parsed(e);
            let b1 = arr.b[1];
            let value = BigRational::new(BigInt::from(-2 - b1), BigInt::from(2));
            let sp = spectrum(&arr).expect("corpus spectrum");
            let smallest = sp.smallest();
            let cmp = smallest.cmp_rational(&value);
            let listed = EQUALITY_LIST.contains(&e.name);
            let multipartite = e.name == "multipartite-4x2";
            let pass = if multipartite {
                cmp == Ordering::Less
            } else if listed {
                cmp == Ordering::Equal
            } else {
                cmp != Ordering::Equal
            };
            Check {
                name: e.name.into(),
                pass,
                detail: format!(
                    "smallest eigenvalue {} vs -1-b1/2 = {} ({})",
                    smallest,
                    value,
                    if listed { "listed" } else { "not listed" }
                ),
            }
        })
        .collect();
    VerificationReport::finish(
        "smallest-eigenvalue-equality",
        checks,
        vec![
            "complete multipartite graphs K_{n x t} with t >= 2 appear in the \
             published equality list but have smallest eigenvalue -t, which is \
             strictly below -1 - b1/2 = -(t+1)/2; the check therefore demands \
             strict inequality for them"
                .into(),
        ],
        false,
    )
}

/// The main classification: every corpus graph certifies its published
/// intersection array and satisfies the local eigenvalue hypothesis; the
/// six undecided arrays are arithmetically feasible and reported open.
pub fn verify_theorem_1_2() -> VerificationReport {
    let mut checks: Vec<Check> = corpus()
        .par_iter()
        .map(|e| {
            let g = (e.build)();
            let verdict = check_drg(&g).expect("corpus graph connected");
            let arr_ok = verdict
                .array()
                .map(|a| a.to_string() == e.array)
                .unwrap_or(false);
            let local = local_property(&g, &BigRational::from(BigInt::from(1)));
            let pass = arr_ok && local.all_pass();
            Check {
                name: e.name.into(),
                pass,
                detail: format!(
                    "certified array {} (expected {}), local second largest \
                     eigenvalues at most one: {}",
                    verdict
                        .array()
                        .map(|a| a.to_string())
                        .unwrap_or_else(|| "none".into()),
                    e.array,
                    local.all_pass()
                ),
            }
        })
        .collect();
    for s in OPEN_ARRAYS {
        let arr: IntersectionArray = s.parse().expect("open array");
        let sp = spectrum(&arr).expect("open array spectrum");
        checks.push(Check {
            name: format!("open {}", s),
            pass: sp.multiplicities_integral(),
            detail: "arithmetically feasible; no graph is known and no \
                     nonexistence proof is known"
                .into(),
        });
    }
    VerificationReport::finish(
        "classification",
        checks,
        vec![
            "the six open diameter-two arrays are reported as undecided, not \
             as failures"
                .into(),
        ],
        true,
    )
}

/// Supporting propositions over the corpus: local connectivity, the
/// Taylor local-graph identity, the local eigenvalue sandwich, and the
/// m_x versus k_2 bound.
pub fn verify_props() -> VerificationReport {
    let taylor = [
        "icosahedron",
        "johnson-6-3",
        "halved-6-cube-distance-2",
        "gosset",
    ];
    // complement of the local graph is disconnected exactly for complete
    // (multipartite) graphs
    let multipartite_like = ["complete-5", "multipartite-4x2"];
    let checks: Vec<Check> = corpus()
        .par_iter()
        .flat_map(|e| {
            let g = (e.build)();
            let arr = parsed(e);
            let a1 = if arr.diameter() == 1 {
                arr.k() - 1
            } else {
                arr.k() - arr.b[1] - 1
            };
            let mut out = Vec::new();

            let conn = connectivity_props(&g);
            if a1 >= 2 {
                out.push(Check {
                    name: format!("{}: local graphs connected", e.name),
                    pass: conn.iter().all(|&(l, _)| l),
                    detail: format!("a1 = {} > 1 forces connected local graphs", a1),
                });
            }
            if !multipartite_like.contains(&e.name) {
                out.push(Check {
                    name: format!("{}: local complements connected", e.name),
                    pass: conn.iter().all(|&(_, c)| c),
                    detail: "not complete multipartite, so the complement of \
                             every local graph is connected"
                        .into(),
                });
            }

            if taylor.contains(&e.name) {
                let local = g.local_graph(0);
                let verdict = check_drg(&local).expect("local graph connected");
                let pass = verdict
                    .array()
                    .and_then(SRGParams::from_array)
                    .map(|p| 2 * p.mu == p.k && p.k == a1)
                    .unwrap_or(false);
                out.push(Check {
                    name: format!("{}: Taylor local identity", e.name),
                    pass,
                    detail: "local graph is strongly regular with 2 mu = k = a1".into(),
                });
            }

            if arr.diameter() >= 3 {
                let pass = local_eigenvalue_sandwich(&g).unwrap_or(false);
                out.push(Check {
                    name: format!("{}: local eigenvalue sandwich", e.name),
                    pass,
                    detail: "per-vertex local spectrum fits between \
                             -1-b1/(theta_1+1) and -1-b1/(theta_D+1)"
                        .into(),
                });
            }

            if arr.diameter() >= 2 {
                let local = local_property(&g, &BigRational::from(BigInt::from(1)));
                let k2 = arr.derive().k_seq[2].clone();
                let bound = k2 + BigRational::from(BigInt::from(1));
                let pass = local
                    .per_vertex
                    .iter()
                    .all(|v| BigRational::from(BigInt::from(v.m_x as i64)) <= bound);
                out.push(Check {
                    name: format!("{}: m_x <= 1 + k_2", e.name),
                    pass,
                    detail: format!(
                        "max m_x = {} against 1 + k_2 = {}",
                        local.max_m_x(),
                        bound
                    ),
                });
            }
            out
        })
        .collect();
    VerificationReport::finish("propositions", checks, Vec::new(), false)
}
