//! Exact maximum coclique (independent set) via branch and bound.

use super::bitset::BitSet;
use super::{Graph, GraphError};

const BUDGET: usize = 120;

/// Exact maximum independent-set size. Instances above 120 vertices are
/// rejected.
pub fn max_coclique(g: &Graph) -> Result<usize, GraphError> {
    if g.n() > BUDGET {
        return Err(GraphError::BudgetExceeded(format!(
            "instance too large: {} vertices (coclique budget {})",
            g.n(),
            BUDGET
        )));
    }
    let mut best = 0usize;
    let cand = BitSet::full(g.n());
    branch(g, cand, 0, &mut best);
    Ok(best)
}

/// Upper bound: a greedy clique cover of the candidate set; each clique can
/// contribute at most one vertex to an independent set.
fn clique_cover_bound(g: &Graph, cand: &BitSet) -> usize {
    let mut rest = cand.clone();
    let mut cliques = 0usize;
    while let Some(v) = rest.first() {
        // grow a clique inside rest starting at v
        rest.remove(v);
        let mut common = g.neighbors(v).clone();
        common.intersect_with(&rest);
        while let Some(w) = common.first() {
            rest.remove(w);
            common.remove(w);
            common.intersect_with(g.neighbors(w));
        }
        cliques += 1;
    }
    cliques
}

fn branch(g: &Graph, cand: BitSet, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if cand.is_empty() || size + clique_cover_bound(g, &cand) <= *best {
        return;
    }
    // branch on the candidate of maximum degree within the candidate set
    let v = cand
        .iter()
        .max_by_key(|&v| g.neighbors(v).intersection_count(&cand))
        .unwrap();
    // include v
    let mut with_v = cand.clone();
    with_v.remove(v);
    with_v.subtract(g.neighbors(v));
    branch(g, with_v, size + 1, best);
    // exclude v
    let mut without_v = cand;
    without_v.remove(v);
    branch(g, without_v, size, best);
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
    fn petersen_coclique_is_4() {
        assert_eq!(max_coclique(&petersen()).unwrap(), 4);
    }

    #[test]
    fn petersen_matches_exhaustive_search() {
        let g = petersen();
        let mut best = 0;
        for mask in 0u32..1 << 10 {
            let verts: Vec<usize> = (0..10).filter(|&i| mask >> i & 1 == 1).collect();
            if verts
                .iter()
                .all(|&i| verts.iter().all(|&j| i == j || !g.has_edge(i, j)))
            {
                best = best.max(verts.len());
            }
        }
        assert_eq!(best, 4);
        assert_eq!(max_coclique(&g).unwrap(), best);
    }

    #[test]
    fn complete_graph_coclique_is_1() {
        assert_eq!(max_coclique(&Graph::complete(7)).unwrap(), 1);
    }

    #[test]
    fn complete_multipartite_coclique_is_part_size() {
        // K_{3x4}: 3 parts of size 4
        let mut g = Graph::empty(12);
        for i in 0..12 {
            for j in (i + 1)..12 {
                if i / 4 != j / 4 {
                    g.add_edge(i, j);
                }
            }
        }
        assert_eq!(max_coclique(&g).unwrap(), 4);
    }

    #[test]
    fn budget_enforced() {
        assert!(max_coclique(&Graph::empty(121)).is_err());
    }
}
