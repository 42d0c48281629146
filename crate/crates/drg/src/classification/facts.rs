//! Imported literature facts.
//!
//! The scans are honest about provenance: everything that can be decided
//! by exact arithmetic or explicit construction is decided that way, and
//! the few remaining appeals to published tables or classification results
//! live here as a static keyed table with citation strings.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ImportedFact {
    pub key: &'static str,
    pub statement: &'static str,
    pub citation: &'static str,
}

pub const FACTS: &[ImportedFact] = &[
    ImportedFact {
        key: "cover-tables-d3",
        statement: "no distance-regular graph exists with intersection array \
                    {15,8,1;1,4,15} or {10,6,1;1,3,10}",
        citation: "published tables of feasible intersection arrays for \
                   antipodal diameter-3 covers of complete graphs",
    },
    ImportedFact {
        key: "no-locally-petersen-srg-26",
        statement: "no strongly regular graph with parameters (26,10,3,4) has \
                    every local graph isomorphic to the Petersen graph; the \
                    connected locally Petersen graphs are T(7), the \
                    Conway-Smith graph and the Doro graph",
        citation: "Hall, Locally Petersen graphs, J. Graph Theory 4 (1980)",
    },
    ImportedFact {
        key: "no-conference-21",
        statement: "there is no conference graph on 21 vertices (21 is not a \
                    sum of two squares)",
        citation: "standard strongly regular graph parameter tables",
    },
    ImportedFact {
        key: "paley-13-17-unique",
        statement: "the Paley graphs on 13 and 17 vertices are the unique \
                    strongly regular graphs with parameters (13,6,2,3) and \
                    (17,8,3,4)",
        citation: "standard strongly regular graph parameter tables",
    },
    ImportedFact {
        key: "local-graph-of-50-28",
        statement: "a strongly regular graph with parameters (50,28,15,16) \
                    whose local second largest eigenvalues are at most one is \
                    locally the complement of a Chang graph or of T(8); both \
                    are SRG(28,15,6,10), so the local graph has mu = 10",
        citation: "classification of regular graphs with smallest eigenvalue \
                   at least -2 (Cameron-Goethals-Seidel-Shult) plus parameter \
                   tables",
    },
    ImportedFact {
        key: "local-graph-of-76-45",
        statement: "a strongly regular graph with parameters (76,45,28,24) \
                    whose local second largest eigenvalues are at most one is \
                    locally the complement of T(10), an SRG(45,28,15,21), so \
                    the local graph has mu = 21",
        citation: "classification of regular graphs with smallest eigenvalue \
                   at least -2 (Cameron-Goethals-Seidel-Shult) plus parameter \
                   tables",
    },
    ImportedFact {
        key: "primitive-tables-d3",
        statement: "in the diameter-3 cases, the candidate parameter windows \
                    contain no primitive distance-regular graph, so the graph \
                    must be an antipodal r-cover with r at least 3",
        citation: "published tables of distance-regular graphs of small order",
    },
];

pub fn fact(key: &str) -> &'static ImportedFact {
    FACTS
        .iter()
        .find(|f| f.key == key)
        .unwrap_or_else(|| panic!("unknown imported fact {:?}", key))
}
