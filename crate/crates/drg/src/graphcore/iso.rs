//! Graph isomorphism by iterated refinement plus backtracking.

use super::{Graph, GraphError};
use std::collections::BTreeMap;

const BUDGET: usize = 64;

/// Deterministic isomorphism test for graphs of at most 64 vertices.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.n() > BUDGET || h.n() > BUDGET {
        return Err(GraphError::BudgetExceeded(format!(
            "isomorphism budget is {} vertices",
            BUDGET
        )));
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let cg = refine(g);
    let ch = refine(h);
    if color_histogram(&cg) != color_histogram(&ch) {
        return Ok(false);
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(backtrack(g, h, &cg, &ch, &mut map, &mut used, 0, &order(&cg)))
}

/// Iterated color refinement: colors start as degrees and are refined by
/// the multiset of neighbor colors until stable. Returns a canonical color
/// id per vertex.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colors[w]).collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        // assign ids in sorted signature order so colors are label-invariant
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let ids: BTreeMap<&(usize, Vec<usize>), usize> =
            sorted.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let new_colors: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        if new_colors == colors {
            return colors;
        }
        colors = new_colors;
    }
}

fn color_histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0usize) += 1;
    }
    h
}

/// Vertex order for backtracking: rarest colors first, then index.
fn order(colors: &[usize]) -> Vec<usize> {
    let hist = color_histogram(colors);
    let mut verts: Vec<usize> = (0..colors.len()).collect();
    verts.sort_by_key(|&v| (hist[&colors[v]], colors[v], v));
    verts
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    map: &mut [usize],
    used: &mut [bool],
    depth: usize,
    ord: &[usize],
) -> bool {
    if depth == ord.len() {
        return true;
    }
    let v = ord[depth];
    for w in 0..h.n() {
        if used[w] || ch[w] != cg[v] {
            continue;
        }
        // adjacency with already-mapped vertices must match
        let ok = ord[..depth].iter().all(|&u| {
            g.has_edge(v, u) == h.has_edge(w, map[u])
        });
        if !ok {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if backtrack(g, h, cg, ch, map, used, depth + 1, ord) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        let mut h = Graph::empty(g.n());
        for (i, j) in g.edges() {
            h.add_edge(perm[i], perm[j]);
        }
        h
    }

    #[test]
    fn cycle_relabeled() {
        let g = Graph::cycle(6);
        let h = relabel(&g, &[3, 1, 4, 0, 5, 2]);
        assert!(isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn c6_vs_two_triangles() {
        let g = Graph::cycle(6);
        let mut h = Graph::empty(6);
        for t in 0..2 {
            let b = 3 * t;
            h.add_edge(b, b + 1);
            h.add_edge(b + 1, b + 2);
            h.add_edge(b, b + 2);
        }
        assert!(!isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn line_graph_k5_is_petersen_complement() {
        let lg = Graph::complete(5).line_graph().unwrap();
        let mut petersen = Graph::empty(10);
        for i in 0..5 {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(i, i + 5);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        assert!(isomorphic(&lg, &petersen.complement()).unwrap());
        assert!(!isomorphic(&lg, &petersen).unwrap());
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        // all graphs on 4 vertices, a few pairs
        let n = 4;
        let all_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let graphs: Vec<Graph> = (0..1u32 << all_edges.len())
            .map(|mask| {
                let es: Vec<(usize, usize)> = all_edges
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edges(n, &es)
            })
            .collect();
        let perms: Vec<Vec<usize>> = permutations(n);
        for (i, g) in graphs.iter().enumerate() {
            for h in graphs.iter().skip(i).take(8) {
                let brute = perms.iter().any(|p| &relabel(g, p) == h);
                assert_eq!(isomorphic(g, h).unwrap(), brute);
            }
        }
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn budget_enforced() {
        let g = Graph::empty(65);
        assert!(isomorphic(&g, &g).is_err());
    }
}
