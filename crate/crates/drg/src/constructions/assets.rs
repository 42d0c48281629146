//! Embedded adjacency lists for graphs without a short procedural
//! construction, certified at load time.

use super::certify::{check_drg, is_locally};
use super::ConstructionError;
use crate::arrays::IntersectionArray;
use crate::graphcore::{parse_native, Graph};

pub struct NamedGraph {
    pub name: &'static str,
    pub graph: Graph,
    pub array: IntersectionArray,
}

const CONWAY_SMITH: &str = include_str!("../../assets/conway_smith.txt");
const DORO: &str = include_str!("../../assets/doro.txt");

/// Load an embedded graph by name ("conway-smith" or "doro"). The
/// adjacency data is re-certified on every load: the intersection array is
/// recomputed from scratch and checked against the expected one, and the
/// Conway-Smith graph is additionally checked to be locally Petersen.
pub fn named_graph(name: &str) -> Result<NamedGraph, ConstructionError> {
    let (canonical, text, expected) = match name {
        "conway-smith" | "conway_smith" => ("conway-smith", CONWAY_SMITH, "{10,6,4,1;1,2,6,10}"),
        "doro" => ("doro", DORO, "{10,6,4;1,2,5}"),
        other => {
            return Err(ConstructionError::InvalidParams(format!(
                "unknown named graph {:?}; available: conway-smith, doro",
                other
            )))
        }
    };
    let graph = parse_native(text).map_err(|e| ConstructionError::Graph(e.to_string()))?;
    let array: IntersectionArray = expected.parse().expect("embedded array literal");
    let verdict = check_drg(&graph).map_err(|e| ConstructionError::Graph(e.to_string()))?;
    match verdict.array() {
        Some(a) if *a == array => {}
        other => {
            return Err(ConstructionError::Graph(format!(
                "embedded {} data failed certification: {:?}",
                canonical, other
            )))
        }
    }
    if canonical == "conway-smith" {
        let mut petersen = Graph::empty(10);
        for i in 0..5 {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(i, i + 5);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        if !is_locally(&graph, &petersen)? {
            return Err(ConstructionError::Graph(
                "embedded conway-smith data is not locally Petersen".into(),
            ));
        }
    }
    Ok(NamedGraph {
        name: canonical,
        graph,
        array,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conway_smith_certifies() {
        let g = named_graph("conway-smith").unwrap();
        assert_eq!(g.graph.n(), 63);
        assert_eq!(g.array.to_string(), "{10,6,4,1;1,2,6,10}");
    }

    #[test]
    fn doro_certifies() {
        let g = named_graph("doro").unwrap();
        assert_eq!(g.graph.n(), 65);
        assert_eq!(g.array.to_string(), "{10,6,4;1,2,5}");
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(named_graph("higman-sims").is_err());
    }
}
