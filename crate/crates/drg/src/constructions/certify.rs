//! Distance-regularity certification and local-structure checks.

use crate::arrays::IntersectionArray;
use crate::graphcore::{isomorphic, Graph, GraphError};

use super::ConstructionError;

/// Outcome of checking distance-regularity over all ordered vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrgVerdict {
    DistanceRegular(IntersectionArray),
    /// A single vertex: diameter zero, empty array.
    Trivial,
    NotDistanceRegular {
        /// offending ordered pair (x, y) and what disagreed
        witness: (usize, usize),
        reason: String,
    },
}

impl DrgVerdict {
    pub fn array(&self) -> Option<&IntersectionArray> {
        match self {
            DrgVerdict::DistanceRegular(a) => Some(a),
            _ => None,
        }
    }
}

/// Certify the intersection numbers b_i, c_i over every ordered pair at
/// every distance. Errors only on disconnected input.
pub fn check_drg(g: &Graph) -> Result<DrgVerdict, GraphError> {
    let n = g.n();
    if n == 1 {
        return Ok(DrgVerdict::Trivial);
    }
    let comps = g.components();
    if comps.len() != 1 {
        return Err(GraphError::Disconnected(comps));
    }
    let diam = g.diameter()?;
    let mut b = vec![None::<i64>; diam + 1];
    let mut c = vec![None::<i64>; diam + 1];
    for x in 0..n {
        let dist = g.distances_from(x);
        for y in 0..n {
            let i = dist[y];
            let mut up = 0i64;
            let mut down = 0i64;
            for z in g.neighbors(y).iter() {
                if dist[z] == i + 1 {
                    up += 1;
                } else if i > 0 && dist[z] == i - 1 {
                    down += 1;
                }
            }
            match b[i] {
                None => b[i] = Some(up),
                Some(v) if v != up => {
                    return Ok(DrgVerdict::NotDistanceRegular {
                        witness: (x, y),
                        reason: format!(
                            "b_{} = {} for pair ({}, {}), expected {}",
                            i, up, x, y, v
                        ),
                    })
                }
                _ => {}
            }
            if i > 0 {
                match c[i] {
                    None => c[i] = Some(down),
                    Some(v) if v != down => {
                        return Ok(DrgVerdict::NotDistanceRegular {
                            witness: (x, y),
                            reason: format!(
                                "c_{} = {} for pair ({}, {}), expected {}",
                                i, down, x, y, v
                            ),
                        })
                    }
                    _ => {}
                }
            }
        }
    }
    let bs: Vec<i64> = (0..diam).map(|i| b[i].unwrap()).collect();
    let cs: Vec<i64> = (1..=diam).map(|i| c[i].unwrap()).collect();
    let arr = IntersectionArray::new(bs, cs)
        .expect("certified sequences have matching lengths");
    Ok(DrgVerdict::DistanceRegular(arr))
}

/// Graph on the same vertices joining pairs at distance exactly k.
pub fn distance_k_graph(g: &Graph, k: usize) -> Result<Graph, ConstructionError> {
    let diam = g
        .diameter()
        .map_err(|e| ConstructionError::Graph(e.to_string()))?;
    if k > diam {
        return Err(ConstructionError::InvalidParams(format!(
            "distance {} exceeds diameter {}",
            k, diam
        )));
    }
    let mut out = Graph::empty(g.n());
    for x in 0..g.n() {
        let dist = g.distances_from(x);
        for (y, &d) in dist.iter().enumerate() {
            if y > x && d == k {
                out.add_edge(x, y);
            }
        }
    }
    Ok(out)
}

/// True iff the local graph at every vertex is isomorphic to H.
pub fn is_locally(g: &Graph, h: &Graph) -> Result<bool, ConstructionError> {
    for x in 0..g.n() {
        let local = g.local_graph(x);
        if local.n() != h.n() {
            return Ok(false);
        }
        if !isomorphic(&local, h).map_err(|e| ConstructionError::Graph(e.to_string()))? {
            return Ok(false);
        }
    }
    Ok(true)
}
