//! Procedural constructions of every named graph family.

use super::gf::FiniteField;
use super::ConstructionError;
use crate::graphcore::Graph;

/// A named family with parameters, covering every graph the theorems use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    CompleteK(usize),
    /// K_{n×t}: n parts of size t
    Multipartite(usize, usize),
    /// T(n) = J(n, 2)
    Triangular(usize),
    /// n×n rook's graph
    Grid(usize),
    GridComplement(usize),
    Paley(u64),
    Johnson(usize, usize),
    HalvedCube(usize),
    FoldedCube(usize),
    Cycle(usize),
    Icosahedron,
    Petersen,
    Shrikhande,
    /// valency 5 (folded 5-cube) or valency 10 (halved 5-cube)
    Clebsch(usize),
    Schlafli,
    Gosset,
    Chang(usize),
    SymplecticCover { q: u64, r: u64, b: u64 },
    /// embedded adjacency asset: "conway-smith" or "doro"
    Named(String),
}

pub fn build(spec: &FamilySpec) -> Result<Graph, ConstructionError> {
    match spec {
        FamilySpec::CompleteK(n) => require(*n >= 1, "complete graph needs n ≥ 1")
            .map(|_| Graph::complete(*n)),
        FamilySpec::Multipartite(n, t) => multipartite(*n, *t),
        FamilySpec::Triangular(n) => {
            require(*n >= 4, "triangular graph needs n ≥ 4")?;
            Ok(johnson(*n, 2))
        }
        FamilySpec::Grid(n) => {
            require(*n >= 2, "grid graph needs n ≥ 2")?;
            Ok(grid(*n))
        }
        FamilySpec::GridComplement(n) => {
            require(*n >= 2, "grid graph needs n ≥ 2")?;
            Ok(grid(*n).complement())
        }
        FamilySpec::Paley(q) => paley(*q),
        FamilySpec::Johnson(n, k) => {
            require(*k >= 1 && k < n, "Johnson graph needs 1 ≤ k < n")?;
            Ok(johnson(*n, *k))
        }
        FamilySpec::HalvedCube(n) => {
            require(*n >= 2 && *n <= 16, "halved cube needs 2 ≤ n ≤ 16")?;
            Ok(halved_cube(*n))
        }
        FamilySpec::FoldedCube(n) => {
            require(*n >= 3 && *n <= 16, "folded cube needs 3 ≤ n ≤ 16")?;
            Ok(folded_cube(*n))
        }
        FamilySpec::Cycle(n) => require(*n >= 3, "cycle needs n ≥ 3").map(|_| Graph::cycle(*n)),
        FamilySpec::Icosahedron => Ok(icosahedron()),
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::Shrikhande => Ok(shrikhande()),
        FamilySpec::Clebsch(5) => Ok(folded_cube(5)),
        FamilySpec::Clebsch(10) => Ok(folded_cube(5).complement()),
        FamilySpec::Clebsch(v) => Err(ConstructionError::InvalidParams(format!(
            "Clebsch valency must be 5 or 10, got {}",
            v
        ))),
        FamilySpec::Schlafli => Ok(lines_meet_graph().complement()),
        FamilySpec::Gosset => Ok(taylor_double(&lines_meet_graph())),
        FamilySpec::Chang(i) => chang(*i),
        FamilySpec::SymplecticCover { q, r, b } => symplectic_cover(*q, *r, *b),
        FamilySpec::Named(name) => super::assets::named_graph(name).map(|e| e.graph),
    }
}

fn require(cond: bool, msg: &str) -> Result<(), ConstructionError> {
    if cond {
        Ok(())
    } else {
        Err(ConstructionError::InvalidParams(msg.into()))
    }
}

fn multipartite(n: usize, t: usize) -> Result<Graph, ConstructionError> {
    require(n >= 2 && t >= 1, "K_{n×t} needs n ≥ 2, t ≥ 1")?;
    let mut g = Graph::empty(n * t);
    for i in 0..n * t {
        for j in (i + 1)..n * t {
            if i / t != j / t {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// k-subsets of {0..n-1} in lexicographic order; adjacent iff the subsets
/// share k − 1 elements.
fn johnson(n: usize, k: usize) -> Graph {
    let subsets = k_subsets(n, k);
    let mut g = Graph::empty(subsets.len());
    for (a, sa) in subsets.iter().enumerate() {
        for (b, sb) in subsets.iter().enumerate().skip(a + 1) {
            let inter = sa.iter().filter(|x| sb.contains(x)).count();
            if inter == k - 1 {
                g.add_edge(a, b);
            }
        }
    }
    g
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn grid(n: usize) -> Graph {
    let mut g = Graph::empty(n * n);
    for i in 0..n * n {
        for j in (i + 1)..n * n {
            if i / n == j / n || i % n == j % n {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn paley(q: u64) -> Result<Graph, ConstructionError> {
    if q % 4 != 1 {
        return Err(ConstructionError::InvalidParams(format!(
            "Paley graph needs a prime power q ≡ 1 (mod 4), got {}",
            q
        )));
    }
    let f = FiniteField::new(q)?;
    let squares: std::collections::HashSet<u64> = f.squares().into_iter().collect();
    let mut g = Graph::empty(q as usize);
    for x in 0..q {
        for y in (x + 1)..q {
            if squares.contains(&f.sub(x, y)) {
                g.add_edge(x as usize, y as usize);
            }
        }
    }
    Ok(g)
}

/// Even-weight binary n-vectors, adjacent iff Hamming distance two.
fn halved_cube(n: usize) -> Graph {
    let verts: Vec<u32> = (0u32..1 << n).filter(|v| v.count_ones() % 2 == 0).collect();
    let mut g = Graph::empty(verts.len());
    for (a, &va) in verts.iter().enumerate() {
        for (b, &vb) in verts.iter().enumerate().skip(a + 1) {
            if (va ^ vb).count_ones() == 2 {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Antipodal quotient of the n-cube: vectors of length n − 1, adjacent iff
/// Hamming distance 1 or n − 1.
fn folded_cube(n: usize) -> Graph {
    let bits = n - 1;
    let count = 1usize << bits;
    let mut g = Graph::empty(count);
    for a in 0..count {
        for b in (a + 1)..count {
            let d = ((a ^ b) as u32).count_ones() as usize;
            if d == 1 || d == bits {
                g.add_edge(a, b);
            }
        }
    }
    g
}

fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Two apexes over a pentagonal antiprism.
fn icosahedron() -> Graph {
    let mut g = Graph::empty(12);
    // 0 top apex, 1..=5 upper pentagon, 6..=10 lower pentagon, 11 bottom
    for i in 0..5 {
        g.add_edge(0, 1 + i);
        g.add_edge(11, 6 + i);
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 1) % 5);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(1 + i, 6 + (i + 1) % 5);
    }
    g
}

/// Cayley graph on Z₄ × Z₄ with connection set {±(1,0), ±(0,1), ±(1,1)}.
fn shrikhande() -> Graph {
    let conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let mut g = Graph::empty(16);
    for a in 0..4usize {
        for b in 0..4usize {
            for &(da, db) in &conn {
                let a2 = (a + da) % 4;
                let b2 = (b + db) % 4;
                let u = 4 * a + b;
                let v = 4 * a2 + b2;
                if u < v {
                    g.add_edge(u, v);
                }
            }
        }
    }
    g
}

/// The "lines meet" graph on the classical 27-line labels a_i, b_i, c_{ij}:
/// a_i ~ b_j iff i ≠ j; a_i, b_i ~ c_{jk} iff i ∈ {j,k}; c_{ij} ~ c_{kl}
/// iff the index pairs are disjoint. This is SRG(27, 10, 1, 5); its
/// complement is the Schläfli graph.
fn lines_meet_graph() -> Graph {
    // vertices: 0..6 = a_i, 6..12 = b_i, 12..27 = c_{ij} lexicographic
    let mut pairs = Vec::new();
    for i in 0..6 {
        for j in (i + 1)..6 {
            pairs.push((i, j));
        }
    }
    let cidx = |i: usize, j: usize| {
        12 + pairs.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap()
    };
    let mut g = Graph::empty(27);
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                g.add_edge(i, 6 + j);
            }
        }
    }
    for i in 0..6 {
        for &(j, k) in &pairs {
            if i == j || i == k {
                g.add_edge(i, cidx(j, k));
                g.add_edge(6 + i, cidx(j, k));
            }
        }
    }
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in pairs.iter().skip(x + 1) {
            if i != k && i != l && j != k && j != l {
                g.add_edge(cidx(i, j), cidx(k, l));
            }
        }
    }
    g
}

/// Taylor double of a graph Δ on n vertices: vertices {∞, v_1..v_n, ∞',
/// v'_1..v'_n}; ∞ joined to every v, ∞' to every v', v ~ w and v' ~ w' iff
/// vw is an edge of Δ, and v ~ w' iff v ≠ w and vw is a non-edge of Δ.
pub fn taylor_double(delta: &Graph) -> Graph {
    let n = delta.n();
    let mut g = Graph::empty(2 * n + 2);
    // 0 = ∞, 1..=n = v_i, n+1 = ∞', n+2.. = v'_i
    for i in 0..n {
        g.add_edge(0, 1 + i);
        g.add_edge(n + 1, n + 2 + i);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if delta.has_edge(i, j) {
                g.add_edge(1 + i, 1 + j);
                g.add_edge(n + 2 + i, n + 2 + j);
            } else {
                g.add_edge(1 + i, n + 2 + j);
                g.add_edge(1 + j, n + 2 + i);
            }
        }
    }
    g
}

/// The three Chang graphs: Seidel switching of T(8) = L(K₈) on the edge
/// sets of a perfect matching, an 8-cycle, and a disjoint triangle plus
/// pentagon in K₈.
fn chang(i: usize) -> Result<Graph, ConstructionError> {
    let t8 = Graph::complete(8).line_graph().expect("K8 has edges");
    let edges = Graph::complete(8).edges();
    let switch_edges: Vec<(usize, usize)> = match i {
        1 => vec![(0, 1), (2, 3), (4, 5), (6, 7)],
        2 => (0..8).map(|v| (v.min((v + 1) % 8), v.max((v + 1) % 8))).collect(),
        3 => vec![
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (3, 7),
        ],
        _ => {
            return Err(ConstructionError::InvalidParams(format!(
                "Chang index must be 1, 2 or 3, got {}",
                i
            )))
        }
    };
    let set: Vec<usize> = switch_edges
        .iter()
        .map(|e| {
            edges
                .iter()
                .position(|f| f == e)
                .expect("switching edge exists in K8")
        })
        .collect();
    Ok(t8.seidel_switch(&set))
}

/// Antipodal cover from a symplectic form over GF(q): vertices are the
/// K-orbits of nonzero vectors of GF(q)², where K is the index-r subgroup
/// of GF(q)*, and Ku ~ Kv iff u₁v₂ − u₂v₁ lands in the coset bK.
pub fn symplectic_cover(q: u64, r: u64, b: u64) -> Result<Graph, ConstructionError> {
    let contract = |msg: String| ConstructionError::InvalidParams(msg);
    if r < 2 {
        return Err(contract(format!("need r > 1, got r = {}", r)));
    }
    if (q - 1) % r != 0 {
        return Err(contract(format!(
            "q = rm + 1 must be a prime power: r = {} does not divide q − 1 = {}",
            r,
            q - 1
        )));
    }
    let m = (q - 1) / r;
    if m % 2 != 0 && !q.is_power_of_two() {
        return Err(contract(format!(
            "need m = (q−1)/r even or q a power of two, got q = {}, m = {}",
            q, m
        )));
    }
    if b == 0 || b >= q {
        return Err(contract(format!("need a nonzero field element b, got {}", b)));
    }
    let f = FiniteField::new(q)?;
    let k_sub = f.power_residues(r);
    let coset: std::collections::HashSet<u64> =
        k_sub.iter().map(|&x| f.mul(b, x)).collect();

    // canonical representative of each K-orbit: lexicographically least
    let mut reps: Vec<(u64, u64)> = Vec::new();
    let mut rep_of = std::collections::HashMap::new();
    for u1 in 0..q {
        for u2 in 0..q {
            if u1 == 0 && u2 == 0 {
                continue;
            }
            let rep = k_sub
                .iter()
                .map(|&l| (f.mul(l, u1), f.mul(l, u2)))
                .min()
                .unwrap();
            if rep == (u1, u2) {
                rep_of.insert(rep, reps.len());
                reps.push(rep);
            }
        }
    }
    debug_assert_eq!(reps.len() as u64, r * (q + 1));

    let mut g = Graph::empty(reps.len());
    for (a, &(u1, u2)) in reps.iter().enumerate() {
        for (c, &(v1, v2)) in reps.iter().enumerate().skip(a + 1) {
            let form = f.sub(f.mul(u1, v2), f.mul(u2, v1));
            if coset.contains(&form) {
                g.add_edge(a, c);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::IntersectionArray;
    use crate::constructions::certify::check_drg;

    fn arr_of(g: &Graph) -> IntersectionArray {
        check_drg(g).unwrap().array().cloned().expect("distance-regular")
    }

    fn expect(g: &Graph, s: &str) {
        assert_eq!(arr_of(g), s.parse::<IntersectionArray>().unwrap());
    }

    #[test]
    fn petersen_array() {
        expect(&build(&FamilySpec::Petersen).unwrap(), "{3,2;1,1}");
    }

    #[test]
    fn paley_13_and_17() {
        expect(&build(&FamilySpec::Paley(13)).unwrap(), "{6,3;1,3}");
        expect(&build(&FamilySpec::Paley(17)).unwrap(), "{8,4;1,4}");
        assert!(build(&FamilySpec::Paley(12)).is_err());
        assert!(build(&FamilySpec::Paley(19)).is_err());
    }

    #[test]
    fn johnson_j63() {
        expect(&build(&FamilySpec::Johnson(6, 3)).unwrap(), "{9,4,1;1,4,9}");
    }

    #[test]
    fn triangular_t5_is_petersen_complement() {
        let t5 = build(&FamilySpec::Triangular(5)).unwrap();
        expect(&t5, "{6,2;1,4}");
    }

    #[test]
    fn icosahedron_array() {
        expect(&build(&FamilySpec::Icosahedron).unwrap(), "{5,2,1;1,2,5}");
    }

    #[test]
    fn shrikhande_is_locally_c6() {
        let g = build(&FamilySpec::Shrikhande).unwrap();
        expect(&g, "{6,3;1,2}");
        assert!(crate::constructions::certify::is_locally(&g, &Graph::cycle(6)).unwrap());
    }

    #[test]
    fn clebsch_graphs() {
        let c5 = build(&FamilySpec::Clebsch(5)).unwrap();
        expect(&c5, "{5,4;1,2}");
        let c10 = build(&FamilySpec::Clebsch(10)).unwrap();
        expect(&c10, "{10,3;1,6}");
        assert_eq!(c5.complement(), c10);
        assert!(build(&FamilySpec::Clebsch(7)).is_err());
    }

    #[test]
    fn schlafli_and_gosset() {
        let meet = lines_meet_graph();
        expect(&meet, "{10,8;1,5}");
        let schlafli = build(&FamilySpec::Schlafli).unwrap();
        expect(&schlafli, "{16,5;1,8}");
        let gosset = build(&FamilySpec::Gosset).unwrap();
        assert_eq!(gosset.n(), 56);
        expect(&gosset, "{27,16,1;1,16,27}");
    }

    #[test]
    fn halved_and_folded_cubes() {
        expect(&build(&FamilySpec::HalvedCube(6)).unwrap(), "{15,6,1;1,6,15}");
        expect(&build(&FamilySpec::FoldedCube(5)).unwrap(), "{5,4;1,2}");
    }

    #[test]
    fn symplectic_cover_small_cases() {
        let ico = symplectic_cover(5, 2, 1).unwrap();
        expect(&ico, "{5,2,1;1,2,5}");
        assert!(crate::graphcore::isomorphic(&ico, &icosahedron()).unwrap());

        let c15 = symplectic_cover(4, 3, 1).unwrap();
        assert_eq!(c15.n(), 15);
        expect(&c15, "{4,2,1;1,1,4}");
    }

    #[test]
    fn symplectic_cover_contract() {
        // r must divide q − 1
        assert!(symplectic_cover(16, 7, 1).is_err());
        assert!(symplectic_cover(13, 4, 0).is_err());
        // q = 13, r = 4 gives odd m = 3 with q not a power of two
        assert!(symplectic_cover(13, 4, 1).is_err());
    }

    #[test]
    fn multipartite_and_grid() {
        expect(&build(&FamilySpec::Multipartite(4, 2)).unwrap(), "{6,1;1,6}");
        expect(&build(&FamilySpec::Grid(3)).unwrap(), "{4,2;1,2}");
        expect(&build(&FamilySpec::GridComplement(3)).unwrap(), "{4,2;1,2}");
    }
}
