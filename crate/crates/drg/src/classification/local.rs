//! Per-vertex local eigenvalue data, connectivity flags, the local
//! eigenvalue sandwich for diameter at least three, and the quotient bound
//! for bipartitions of graphs with second largest eigenvalue at most one.
//!
//! The icosahedron is locally a pentagon, whose second largest eigenvalue
//! is the golden-ratio conjugate (-1+sqrt 5)/2 < 1, and 1 is not an
//! eigenvalue of a pentagon at all:
//!
//! ```
//! use drg::classification::local_property;
//! use drg::constructions::{build, FamilySpec};
//! use num_rational::BigRational;
//! use num_traits::One;
//!
//! let g = build(&FamilySpec::Icosahedron).unwrap();
//! let summary = local_property(&g, &BigRational::one());
//! assert!(summary.all_pass());
//! assert_eq!(summary.max_m_x(), 0);
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::ClassificationError;
use crate::arrays::spectrum;
use crate::constructions::{check_drg, DrgVerdict};
use crate::exactlinalg::{AlgebraicValue, CharPoly};
use crate::graphcore::{quotient_matrix, Graph, VertexPartition};

/// Exact local data at one vertex: the second largest eigenvalue of the
/// local graph, the multiplicity m_x of the eigenvalue 1, the threshold
/// verdict, and connectivity of the local graph and its complement.
#[derive(Clone, Debug)]
pub struct VertexLocalData {
    /// None when the local graph has fewer than two vertices.
    pub theta1: Option<AlgebraicValue>,
    pub m_x: usize,
    pub passes: bool,
    pub local_connected: bool,
    pub complement_connected: bool,
}

/// Per-vertex local spectrum summary for a fixed rational threshold.
#[derive(Clone, Debug)]
pub struct LocalSpectrumSummary {
    pub threshold: BigRational,
    pub per_vertex: Vec<VertexLocalData>,
}

impl LocalSpectrumSummary {
    pub fn all_pass(&self) -> bool {
        self.per_vertex.iter().all(|v| v.passes)
    }

    pub fn max_m_x(&self) -> usize {
        self.per_vertex.iter().map(|v| v.m_x).max().unwrap_or(0)
    }

    /// Vertices whose local graph violates the threshold.
    pub fn failures(&self) -> Vec<usize> {
        self.per_vertex
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.passes)
            .map(|(x, _)| x)
            .collect()
    }
}

fn vertex_data(g: &Graph, x: usize, t: &BigRational) -> VertexLocalData {
    let local = g.local_graph(x);
    let local_connected = local.is_connected();
    let complement_connected = local.complement().is_connected();
    if local.n() == 0 {
        return VertexLocalData {
            theta1: None,
            m_x: 0,
            passes: true,
            local_connected,
            complement_connected,
        };
    }
    let cp = CharPoly::of(&local.adjacency_matrix());
    let passes = cp.second_largest_at_most(&AlgebraicValue::Rational(t.clone()));
    let m_x = cp.multiplicity_at(&AlgebraicValue::integer(1));
    let theta1 = if local.n() < 2 {
        None
    } else {
        let eigs = cp.eigenvalues();
        if eigs[0].1 >= 2 {
            Some(eigs[0].0.clone())
        } else {
            Some(eigs[1].0.clone())
        }
    };
    VertexLocalData {
        theta1,
        m_x,
        passes,
        local_connected,
        complement_connected,
    }
}

/// Exact verdict per vertex on whether the second largest eigenvalue of
/// the local graph is at most `t`. The list is in vertex order, so the
/// output does not depend on scheduling.
pub fn local_property(g: &Graph, t: &BigRational) -> LocalSpectrumSummary {
    let per_vertex: Vec<VertexLocalData> = (0..g.n())
        .into_par_iter()
        .map(|x| vertex_data(g, x, t))
        .collect();
    LocalSpectrumSummary {
        threshold: t.clone(),
        per_vertex,
    }
}

/// Per-vertex flags (local graph connected, complement of local graph
/// connected).
pub fn connectivity_props(g: &Graph) -> Vec<(bool, bool)> {
    (0..g.n())
        .into_par_iter()
        .map(|x| {
            let local = g.local_graph(x);
            (local.is_connected(), local.complement().is_connected())
        })
        .collect()
}

fn av_add_rat(v: &AlgebraicValue, q: &BigRational) -> AlgebraicValue {
    match v {
        AlgebraicValue::Rational(r) => AlgebraicValue::Rational(r + q),
        AlgebraicValue::Quadratic(w) => AlgebraicValue::Quadratic(w.add_rat(q)),
        AlgebraicValue::Interval { lo, hi } => AlgebraicValue::Interval {
            lo: lo + q,
            hi: hi + q,
        },
    }
}

/// The map θ ↦ −1 − b₁/(θ + 1), exact for rational and quadratic θ and
/// endpoint-monotone for isolating intervals (the map is increasing away
/// from the pole at −1).
fn sandwich_bound(theta: &AlgebraicValue, b1: i64) -> AlgebraicValue {
    let one = BigRational::one();
    let neg_b1 = BigRational::from_integer(BigInt::from(-b1));
    let neg_one = -BigRational::one();
    match theta {
        AlgebraicValue::Rational(q) => {
            let shifted = q + &one;
            assert!(!shifted.is_zero(), "eigenvalue -1 has no sandwich bound");
            AlgebraicValue::Rational(&neg_one + &neg_b1 / shifted)
        }
        AlgebraicValue::Quadratic(v) => {
            let inv = v.add_rat(&one).inv();
            av_add_rat(&inv.mul_rat(&neg_b1), &neg_one)
        }
        AlgebraicValue::Interval { lo, hi } => {
            let shift = |x: &BigRational| x + &one;
            assert!(
                shift(lo).is_positive() == shift(hi).is_positive()
                    && !shift(lo).is_zero()
                    && !shift(hi).is_zero(),
                "isolating interval touches the pole at -1"
            );
            AlgebraicValue::Interval {
                lo: &neg_one + &neg_b1 / shift(lo),
                hi: &neg_one + &neg_b1 / shift(hi),
            }
        }
    }
}

/// For a certified distance-regular graph with diameter at least three and
/// spectrum k = θ₀ > θ₁ > … > θ_D, check at every vertex that the local
/// eigenvalues λ₂ ≥ … ≥ λ_k satisfy
/// −1 − b₁/(θ_D + 1) ≥ λ₂ and λ_k ≥ −1 − b₁/(θ₁ + 1).
/// Comparisons are exact for rational and quadratic bounds; interval
/// bounds are checked against their conservative endpoint.
pub fn local_eigenvalue_sandwich(g: &Graph) -> Result<bool, ClassificationError> {
    let verdict = check_drg(g).map_err(|e| ClassificationError::Graph(e.to_string()))?;
    let arr = match verdict {
        DrgVerdict::DistanceRegular(a) => a,
        _ => {
            return Err(ClassificationError::Inapplicable(
                "graph is not distance-regular".into(),
            ))
        }
    };
    if arr.diameter() < 3 {
        return Err(ClassificationError::Inapplicable(format!(
            "diameter {} is below three",
            arr.diameter()
        )));
    }
    let sp = spectrum(&arr).map_err(|e| ClassificationError::Graph(e.to_string()))?;
    let b1 = arr.b_at(1);
    let upper = sandwich_bound(sp.smallest(), b1);
    let lower = sandwich_bound(&sp.entries[1].theta, b1);

    let ok = (0..g.n()).into_par_iter().all(|x| {
        let cp = CharPoly::of(&g.local_graph(x).adjacency_matrix());
        let upper_ok = match &upper {
            AlgebraicValue::Interval { lo, .. } => {
                cp.count_greater(&AlgebraicValue::Rational(lo.clone())) <= 1
            }
            exact => cp.count_greater(exact) <= 1,
        };
        let lower_ok = match &lower {
            AlgebraicValue::Interval { hi, .. } => {
                cp.count_less(&AlgebraicValue::Rational(hi.clone())) == 0
            }
            exact => cp.count_less(exact) == 0,
        };
        upper_ok && lower_ok
    });
    Ok(ok)
}

/// Bipartition quotient data and the bound α ≥ (k−1)|B|/ν for regular
/// graphs with second largest eigenvalue at most one; equality forces the
/// partition to be equitable.
#[derive(Clone, Debug)]
pub struct PartitionBound {
    /// Average number of neighbors in B over the vertices of A.
    pub alpha: BigRational,
    /// Average number of neighbors in A over the vertices of B.
    pub beta: BigRational,
    pub bound: BigRational,
    pub equality: bool,
    pub equitable: bool,
}

pub fn partition_bound(g: &Graph, a: &[usize]) -> Result<PartitionBound, ClassificationError> {
    let k = g
        .regular_valency()
        .ok_or_else(|| ClassificationError::Inapplicable("graph is not regular".into()))?;
    let n = g.n();
    let cp = CharPoly::of(&g.adjacency_matrix());
    if !cp.second_largest_at_most(&AlgebraicValue::integer(1)) {
        return Err(ClassificationError::Inapplicable(
            "second largest eigenvalue exceeds one".into(),
        ));
    }
    let mut in_a = vec![false; n];
    for &v in a {
        if v >= n {
            return Err(ClassificationError::Graph(format!(
                "vertex {} out of range",
                v
            )));
        }
        in_a[v] = true;
    }
    let a_block: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    let b_block: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();
    if a_block.is_empty() || b_block.is_empty() {
        return Err(ClassificationError::Inapplicable(
            "partition needs both sides nonempty".into(),
        ));
    }
    let b_len = b_block.len();
    let pi = VertexPartition::new(n, vec![a_block, b_block])
        .map_err(|e| ClassificationError::Graph(e.to_string()))?;
    let (q, equitable) = quotient_matrix(g, &pi);
    let alpha = q.get(0, 1).clone();
    let beta = q.get(1, 0).clone();
    let bound = BigRational::new(
        BigInt::from((k as i64 - 1) * b_len as i64),
        BigInt::from(n as i64),
    );
    let equality = alpha == bound;
    // the lemma promises equitability on equality; surface both so callers
    // can assert it
    Ok(PartitionBound {
        alpha,
        beta,
        bound,
        equality,
        equitable,
    })
}
