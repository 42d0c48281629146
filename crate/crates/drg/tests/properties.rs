//! Randomized universal properties, driven by proptest with fixed seeds
//! for reproducibility.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::Config;

use drg::arrays::{feasibility, Assumptions, IntersectionArray};
use drg::exactlinalg::{AlgebraicValue, CharPoly};
use drg::graphcore::{check_interlacing, Graph, VertexPartition};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |edges| {
            let mut g = Graph::empty(n);
            let mut idx = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if edges[idx] {
                        g.add_edge(i, j);
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(Config { cases: 64, ..Config::default() })]

    /// The characteristic polynomial has the right degree, zero trace, and
    /// eigenvalues summing (with multiplicity) to zero.
    #[test]
    fn charpoly_eigenvalue_basics(g in graph_strategy(8)) {
        let cp = CharPoly::of(&g.adjacency_matrix());
        let eigs = cp.eigenvalues();
        let total: usize = eigs.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(total, g.n());
        // decreasing order
        for w in eigs.windows(2) {
            prop_assert!(w[0].0.cmp(&w[1].0) == std::cmp::Ordering::Greater);
        }
        // trace zero via float approximation (exact sum may be irrational)
        let trace: f64 = eigs
            .iter()
            .map(|(v, m)| v.to_f64() * *m as f64)
            .sum();
        prop_assert!(trace.abs() < 1e-6);
    }

    /// Exact eigenvalues match a double-precision eigensolver.
    #[test]
    fn charpoly_matches_float_eigensolver(g in graph_strategy(8)) {
        let n = g.n();
        let cp = CharPoly::of(&g.adjacency_matrix());
        let mut exact: Vec<f64> = Vec::new();
        for (v, m) in cp.eigenvalues() {
            for _ in 0..m {
                exact.push(v.to_f64());
            }
        }
        let m = nalgebra::DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
        let mut float: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        float.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (e, f) in exact.iter().zip(&float) {
            prop_assert!((e - f).abs() < 1e-6, "exact {} vs float {}", e, f);
        }
    }

    /// Quotient eigenvalues of any vertex partition interlace the spectrum.
    #[test]
    fn quotient_interlacing_universal(
        g in graph_strategy(8),
        assignment in proptest::collection::vec(0usize..3, 8),
    ) {
        let n = g.n();
        let blocks_used: Vec<usize> = {
            let mut seen: Vec<usize> = assignment[..n].to_vec();
            seen.sort_unstable();
            seen.dedup();
            seen
        };
        let mut blocks = vec![Vec::new(); blocks_used.len()];
        for v in 0..n {
            let b = blocks_used.iter().position(|&x| x == assignment[v]).unwrap();
            blocks[b].push(v);
        }
        let pi = VertexPartition::new(n, blocks).unwrap();
        prop_assert!(check_interlacing(&g, &pi));
    }

    /// Counting identities: count_greater + multiplicity_at + count_less
    /// partitions the spectrum at any rational threshold.
    #[test]
    fn counting_partitions_spectrum(g in graph_strategy(8), num in -8i64..8, den in 1i64..4) {
        let cp = CharPoly::of(&g.adjacency_matrix());
        let t = AlgebraicValue::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)));
        let total = cp.count_greater(&t) + cp.multiplicity_at(&t) + cp.count_less(&t);
        prop_assert_eq!(total, g.n());
    }

    /// Intersection-array literals round-trip through parse and display.
    #[test]
    fn array_literal_roundtrip(
        b in proptest::collection::vec(1i64..50, 1..5),
        c in proptest::collection::vec(1i64..50, 1..5),
    ) {
        let d = b.len().min(c.len());
        if let Ok(arr) = IntersectionArray::new(b[..d].to_vec(), c[..d].to_vec()) {
            let s = arr.to_string();
            let back: IntersectionArray = s.parse().unwrap();
            prop_assert_eq!(arr, back);
        }
    }

    /// The feasibility battery never crashes and fails monotone arrays only
    /// with a named filter.
    #[test]
    fn feasibility_total(
        b in proptest::collection::vec(1i64..30, 2..4),
        c in proptest::collection::vec(1i64..30, 2..4),
        quad in any::<bool>(),
    ) {
        let d = b.len().min(c.len());
        if let Ok(arr) = IntersectionArray::new(b[..d].to_vec(), c[..d].to_vec()) {
            let report = feasibility(&arr, Assumptions { contains_quadrangle: quad });
            let any_fail = report.filters.iter().any(|(_, v)| v.failed());
            prop_assert_eq!(report.surviving, !any_fail);
        }
    }
}

/// Counting with quadratic thresholds stays consistent when the threshold
/// is itself an eigenvalue (including its conjugate).
#[test]
fn quadratic_threshold_at_eigenvalue() {
    // C5: eigenvalues 2, (-1+sqrt(5))/2 x2, (-1-sqrt(5))/2 x2
    let g = Graph::cycle(5);
    let cp = CharPoly::of(&g.adjacency_matrix());
    for (v, m) in cp.eigenvalues() {
        let gt = cp.count_greater(&v);
        let at = cp.multiplicity_at(&v);
        let lt = cp.count_less(&v);
        assert_eq!(at, m);
        assert_eq!(gt + at + lt, 5);
    }
}
