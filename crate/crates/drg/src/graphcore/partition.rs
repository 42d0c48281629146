//! Vertex partitions, distance partitions, quotient matrices, and the
//! eigenvalue interlacing check.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Graph, GraphError};
use crate::exactlinalg::{AlgebraicValue, CharPoly, RationalMatrix};

/// An ordered partition of the vertex set into disjoint nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(GraphError::InvalidPartition("empty block".into()));
            }
            for &v in b {
                if v >= n {
                    return Err(GraphError::InvalidPartition(format!(
                        "vertex {} out of range",
                        v
                    )));
                }
                if seen[v] {
                    return Err(GraphError::InvalidPartition(format!(
                        "vertex {} in two blocks",
                        v
                    )));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(GraphError::InvalidPartition(
                "blocks do not cover all vertices".into(),
            ));
        }
        Ok(VertexPartition { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Distance partition {Γ_0(x), Γ_1(x), …, Γ_D(x)}. Fails on disconnected
/// input, listing the components.
pub fn distance_partition(g: &Graph, x: usize) -> Result<VertexPartition, GraphError> {
    let dist = g.distances_from(x);
    if dist.iter().any(|&d| d == usize::MAX) {
        return Err(GraphError::Disconnected(g.components()));
    }
    let diam = *dist.iter().max().unwrap();
    let mut blocks = vec![Vec::new(); diam + 1];
    for (v, &d) in dist.iter().enumerate() {
        blocks[d].push(v);
    }
    Ok(VertexPartition { blocks })
}

/// Quotient matrix of a partition: entry (i, j) is the average number of
/// neighbors in block j over the vertices of block i. The boolean reports
/// whether the partition is equitable (every vertex of block i has the same
/// count into block j).
pub fn quotient_matrix(g: &Graph, pi: &VertexPartition) -> (RationalMatrix, bool) {
    let t = pi.len();
    let mut block_of = vec![0usize; g.n()];
    for (bi, b) in pi.blocks().iter().enumerate() {
        for &v in b {
            block_of[v] = bi;
        }
    }
    let mut q = RationalMatrix::zeros(t);
    let mut equitable = true;
    for (bi, b) in pi.blocks().iter().enumerate() {
        // counts per vertex into each block
        let mut totals = vec![0i64; t];
        let mut per_vertex: Vec<Vec<i64>> = Vec::with_capacity(b.len());
        for &v in b {
            let mut row = vec![0i64; t];
            for w in g.neighbors(v).iter() {
                row[block_of[w]] += 1;
            }
            for (tot, r) in totals.iter_mut().zip(&row) {
                *tot += r;
            }
            per_vertex.push(row);
        }
        if per_vertex.windows(2).any(|w| w[0] != w[1]) {
            equitable = false;
        }
        let size = BigInt::from(b.len());
        for (bj, &tot) in totals.iter().enumerate() {
            q.set(bi, bj, BigRational::new(BigInt::from(tot), size.clone()));
        }
    }
    (q, equitable)
}

/// Verify that the quotient eigenvalues of Π interlace the spectrum of the
/// graph: θ_{ν−t+i} ≤ θ_i(B) ≤ θ_i for i = 1..t (eigenvalues in decreasing
/// order). Exact where the quotient eigenvalues are rational or quadratic;
/// isolated irrational quotient eigenvalues are checked through their
/// isolating interval endpoints.
pub fn check_interlacing(g: &Graph, pi: &VertexPartition) -> bool {
    let a = CharPoly::of(&g.adjacency_matrix());
    let (q, _) = quotient_matrix(g, pi);
    let b = CharPoly::of(&q);
    let nu = g.n();
    let t = pi.len();

    let mut beigs: Vec<AlgebraicValue> = Vec::new();
    for (v, m) in b.eigenvalues() {
        for _ in 0..m {
            beigs.push(v.clone());
        }
    }
    // decreasing order, 1-based position i
    for (idx, theta) in beigs.iter().enumerate() {
        let i = idx + 1;
        match theta {
            AlgebraicValue::Interval { lo, hi } => {
                // θ_i(B) ≤ θ_i relaxes to: at least i graph eigenvalues
                // exceed lo (true interlacing implies it since θ_i(B) > lo)
                let upper_ok = a.count_greater(&AlgebraicValue::Rational(lo.clone())) >= i;
                // θ_{ν−t+i} ≤ θ_i(B): at most ν−t+i−1 eigenvalues > hi
                let lower_ok =
                    a.count_greater(&AlgebraicValue::Rational(hi.clone())) <= nu - t + i - 1;
                if !(upper_ok && lower_ok) {
                    return false;
                }
            }
            exact => {
                // θ_i(B) ≤ θ_i: #{graph eigenvalues ≥ θ_i(B)} ≥ i
                let geq = a.count_greater(exact) + a.multiplicity_at(exact);
                if geq < i {
                    return false;
                }
                // θ_{ν−t+i} ≤ θ_i(B): #{graph eigenvalues > θ_i(B)} ≤ ν−t+i−1
                if a.count_greater(exact) > nu - t + i - 1 {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    #[test]
    fn petersen_distance_partition() {
        let pi = distance_partition(&petersen(), 0).unwrap();
        assert_eq!(pi.block_sizes(), vec![1, 3, 6]);
    }

    #[test]
    fn distance_partition_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        match distance_partition(&g, 0) {
            Err(GraphError::Disconnected(c)) => assert_eq!(c.len(), 2),
            other => panic!("expected disconnected, got {:?}", other),
        }
    }

    #[test]
    fn quotient_of_singletons_is_adjacency() {
        let g = Graph::cycle(4);
        let (q, eq) = quotient_matrix(&g, &VertexPartition::singletons(4));
        assert!(eq);
        assert_eq!(q, g.adjacency_matrix());
    }

    #[test]
    fn distance_partition_of_drg_is_equitable_tridiagonal() {
        let g = petersen();
        let pi = distance_partition(&g, 0).unwrap();
        let (q, eq) = quotient_matrix(&g, &pi);
        assert!(eq);
        // tridiagonal with b = (3, 2, 1), c = (1, 1)
        let as_i64 = |i: usize, j: usize| -> i64 {
            let v = q.get(i, j);
            assert!(v.is_integer());
            i64::try_from(v.to_integer()).unwrap()
        };
        assert_eq!(as_i64(0, 1), 3);
        assert_eq!(as_i64(1, 0), 1);
        assert_eq!(as_i64(1, 2), 2);
        assert_eq!(as_i64(2, 1), 1);
        assert_eq!(as_i64(0, 2), 0);
        assert_eq!(as_i64(2, 0), 0);
    }

    #[test]
    fn unequitable_partition_detected() {
        // one vertex of C6 versus the rest
        let g = Graph::cycle(6);
        let pi = VertexPartition::new(6, vec![vec![0], vec![1, 2, 3, 4, 5]]).unwrap();
        let (_, eq) = quotient_matrix(&g, &pi);
        assert!(!eq);
    }

    #[test]
    fn interlacing_holds_for_distance_partition() {
        let g = petersen();
        let pi = distance_partition(&g, 0).unwrap();
        assert!(check_interlacing(&g, &pi));
    }

    #[test]
    fn interlacing_holds_for_coarse_partition() {
        let g = petersen();
        let all: Vec<usize> = (0..10).collect();
        let pi = VertexPartition::new(10, vec![all]).unwrap();
        assert!(check_interlacing(&g, &pi));
    }

    #[test]
    fn interlacing_with_irrational_quotient() {
        // C5 with a path-like partition gives non-integer quotient
        // eigenvalues; the theorem still guarantees interlacing
        let g = Graph::cycle(5);
        let pi = VertexPartition::new(5, vec![vec![0], vec![1, 4], vec![2, 3]]).unwrap();
        assert!(check_interlacing(&g, &pi));
    }
}
