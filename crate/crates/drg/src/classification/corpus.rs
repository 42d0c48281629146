//! The corpus: one constructible representative for every entry of the
//! classification, with its published intersection array. Infinite
//! families are represented by their smallest member with a1 >= 2.

use crate::constructions::{build, distance_k_graph, FamilySpec};
use crate::graphcore::Graph;

#[derive(Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    /// which item of the classification the graph realizes
    pub item: &'static str,
    pub array: &'static str,
    pub build: fn() -> Graph,
}

impl std::fmt::Debug for CorpusEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CorpusEntry({} {})", self.name, self.array)
    }
}

fn g(spec: FamilySpec) -> Graph {
    build(&spec).expect("corpus construction")
}

fn complete_5() -> Graph {
    g(FamilySpec::CompleteK(5))
}
fn multipartite_4x2() -> Graph {
    g(FamilySpec::Multipartite(4, 2))
}
fn grid_4_complement() -> Graph {
    g(FamilySpec::Grid(4)).complement()
}
fn triangular_7_complement() -> Graph {
    g(FamilySpec::Triangular(7)).complement()
}
fn petersen_complement() -> Graph {
    g(FamilySpec::Petersen).complement()
}
fn shrikhande_complement() -> Graph {
    g(FamilySpec::Shrikhande).complement()
}
fn chang_1_complement() -> Graph {
    g(FamilySpec::Chang(1)).complement()
}
fn chang_2_complement() -> Graph {
    g(FamilySpec::Chang(2)).complement()
}
fn chang_3_complement() -> Graph {
    g(FamilySpec::Chang(3)).complement()
}
fn shrikhande() -> Graph {
    g(FamilySpec::Shrikhande)
}
fn clebsch() -> Graph {
    g(FamilySpec::Clebsch(10))
}
fn paley_13() -> Graph {
    g(FamilySpec::Paley(13))
}
fn paley_17() -> Graph {
    g(FamilySpec::Paley(17))
}
fn icosahedron() -> Graph {
    g(FamilySpec::Icosahedron)
}
fn johnson_6_3() -> Graph {
    g(FamilySpec::Johnson(6, 3))
}
fn doro() -> Graph {
    g(FamilySpec::Named("doro".into()))
}
fn halved_6_cube_distance_2() -> Graph {
    distance_k_graph(&g(FamilySpec::HalvedCube(6)), 2).expect("distance-2 graph")
}
fn folded_5_cube_cover() -> Graph {
    g(FamilySpec::SymplecticCover { q: 16, r: 3, b: 1 })
}
fn gosset() -> Graph {
    g(FamilySpec::Gosset)
}
fn conway_smith() -> Graph {
    g(FamilySpec::Named("conway-smith".into()))
}

pub const ENTRIES: &[CorpusEntry] = &[
    CorpusEntry {
        name: "complete-5",
        item: "I (complete graphs, representative n = 5)",
        array: "{4;1}",
        build: complete_5,
    },
    CorpusEntry {
        name: "multipartite-4x2",
        item: "II(a) (complete multipartite, representative K_{4x2})",
        array: "{6,1;1,6}",
        build: multipartite_4x2,
    },
    CorpusEntry {
        name: "grid-4-complement",
        item: "II(b) (grid complements, representative n = 4)",
        array: "{9,4;1,6}",
        build: grid_4_complement,
    },
    CorpusEntry {
        name: "triangular-7-complement",
        item: "II(c) (triangular complements, representative n = 7)",
        array: "{10,6;1,6}",
        build: triangular_7_complement,
    },
    CorpusEntry {
        name: "petersen-complement",
        item: "II(d)",
        array: "{6,2;1,4}",
        build: petersen_complement,
    },
    CorpusEntry {
        name: "shrikhande-complement",
        item: "II(e)",
        array: "{9,4;1,6}",
        build: shrikhande_complement,
    },
    CorpusEntry {
        name: "chang-1-complement",
        item: "II(f)",
        array: "{15,8;1,10}",
        build: chang_1_complement,
    },
    CorpusEntry {
        name: "chang-2-complement",
        item: "II(f)",
        array: "{15,8;1,10}",
        build: chang_2_complement,
    },
    CorpusEntry {
        name: "chang-3-complement",
        item: "II(f)",
        array: "{15,8;1,10}",
        build: chang_3_complement,
    },
    CorpusEntry {
        name: "shrikhande",
        item: "II(g)",
        array: "{6,3;1,2}",
        build: shrikhande,
    },
    CorpusEntry {
        name: "clebsch",
        item: "II(h)",
        array: "{10,3;1,6}",
        build: clebsch,
    },
    CorpusEntry {
        name: "paley-13",
        item: "II(i)",
        array: "{6,3;1,3}",
        build: paley_13,
    },
    CorpusEntry {
        name: "paley-17",
        item: "II(j)",
        array: "{8,4;1,4}",
        build: paley_17,
    },
    CorpusEntry {
        name: "icosahedron",
        item: "III(a)",
        array: "{5,2,1;1,2,5}",
        build: icosahedron,
    },
    CorpusEntry {
        name: "johnson-6-3",
        item: "III(b)",
        array: "{9,4,1;1,4,9}",
        build: johnson_6_3,
    },
    CorpusEntry {
        name: "doro",
        item: "III(c)",
        array: "{10,6,4;1,2,5}",
        build: doro,
    },
    CorpusEntry {
        name: "halved-6-cube-distance-2",
        item: "III(d)",
        array: "{15,8,1;1,8,15}",
        build: halved_6_cube_distance_2,
    },
    CorpusEntry {
        name: "locally-folded-5-cube-cover",
        item: "III(e)",
        array: "{16,10,1;1,5,16}",
        build: folded_5_cube_cover,
    },
    CorpusEntry {
        name: "gosset",
        item: "III(f)",
        array: "{27,16,1;1,16,27}",
        build: gosset,
    },
    CorpusEntry {
        name: "conway-smith",
        item: "IV",
        array: "{10,6,4,1;1,2,6,10}",
        build: conway_smith,
    },
];

/// The six diameter-two arrays the classification leaves undecided.
pub const OPEN_ARRAYS: [&str; 6] = [
    "{12,6;1,6}",
    "{15,8;1,6}",
    "{18,10;1,6}",
    "{21,12;1,6}",
    "{21,12;1,9}",
    "{27,16;1,12}",
];

pub fn corpus() -> &'static [CorpusEntry] {
    ENTRIES
}
