use std::fmt;

use crate::graph::{contains_induced, contains_subgraph, contains_subgraph_through, is_k_colorable, Edge, Graph, GraphFamily};

/// Graph property tested on the Avoider seat's graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PropertyDetector {
    /// At least one edge.
    HasEdge,
    /// Some member of the family as a subgraph.
    Subgraph(GraphFamily),
    /// Some member of the family as an induced subgraph.
    InducedSubgraph(GraphFamily),
    /// Not properly colourable with `k` colours.
    NotKColorable(usize),
}

impl PropertyDetector {
    pub fn holds(&self, g: &Graph) -> bool {
        match self {
            PropertyDetector::HasEdge => g.edge_count() > 0,
            PropertyDetector::Subgraph(fam) => fam.members().iter().any(|h| contains_subgraph(g, h).is_some()),
            PropertyDetector::InducedSubgraph(fam) => fam.members().iter().any(|h| contains_induced(g, h).is_some()),
            PropertyDetector::NotKColorable(k) => is_k_colorable(g, *k).is_none(),
        }
    }

    /// Whether adding edges can never destroy the property.
    ///
    /// Induced containment is monotone only when every member is complete.
    pub fn is_monotone(&self) -> bool {
        match self {
            PropertyDetector::InducedSubgraph(fam) => fam.all_complete(),
            _ => true,
        }
    }

    /// The family's minimum chromatic number, or `k + 1` for `nc:k`; `None` for `edge`.
    pub fn chromatic_k(&self) -> Option<usize> {
        match self {
            PropertyDetector::HasEdge => None,
            PropertyDetector::Subgraph(fam) | PropertyDetector::InducedSubgraph(fam) => Some(fam.k()),
            PropertyDetector::NotKColorable(k) => Some(k + 1),
        }
    }
}

impl fmt::Display for PropertyDetector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyDetector::HasEdge => f.write_str("edge"),
            PropertyDetector::Subgraph(fam) if fam.label().starts_with("family:") => f.write_str(fam.label()),
            PropertyDetector::Subgraph(fam) => write!(f, "subgraph:{}", fam.label()),
            PropertyDetector::InducedSubgraph(fam) => write!(f, "induced:{}", fam.label()),
            PropertyDetector::NotKColorable(k) => write!(f, "nc:{k}"),
        }
    }
}

/// Tracks a detector along a growing graph, reusing work between edge additions.
#[derive(Clone, Debug)]
pub struct IncrementalDetector {
    detector: PropertyDetector,
    started: bool,
    held: bool,
    /// Last proper colouring found, for `NotKColorable`.
    colouring: Option<Vec<usize>>,
}

impl IncrementalDetector {
    pub fn new(detector: PropertyDetector) -> Self {
        Self {
            detector,
            started: false,
            held: false,
            colouring: None,
        }
    }

    pub fn detector(&self) -> &PropertyDetector {
        &self.detector
    }

    /// Whether the property holds for `g`, which must be the previously observed graph plus `added`.
    pub fn observe(&mut self, g: &Graph, added: Edge) -> bool {
        if !self.started {
            self.started = true;
            self.held = self.full(g);
            return self.held;
        }
        if self.held && self.detector.is_monotone() {
            return true;
        }
        self.held = match &self.detector {
            PropertyDetector::HasEdge => true,
            PropertyDetector::Subgraph(fam) => fam
                .members()
                .iter()
                .any(|h| contains_subgraph_through(g, h, added.u, added.v).is_some()),
            PropertyDetector::NotKColorable(_) => match &self.colouring {
                Some(c) if c[added.u] != c[added.v] => false,
                _ => self.full(g),
            },
            PropertyDetector::InducedSubgraph(_) => self.full(g),
        };
        self.held
    }

    fn full(&mut self, g: &Graph) -> bool {
        match &self.detector {
            PropertyDetector::NotKColorable(k) => {
                self.colouring = is_k_colorable(g, *k);
                self.colouring.is_none()
            }
            d => d.holds(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Edge};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fam(names: &[&str]) -> GraphFamily {
        let members = names.iter().map(|s| named_graph(s).unwrap()).collect();
        GraphFamily::new(members, names.join("+")).unwrap()
    }

    fn detectors() -> Vec<PropertyDetector> {
        vec![
            PropertyDetector::HasEdge,
            PropertyDetector::Subgraph(fam(&["K3"])),
            PropertyDetector::Subgraph(fam(&["C4", "K4"])),
            PropertyDetector::Subgraph(fam(&["C5"])),
            PropertyDetector::InducedSubgraph(fam(&["K3"])),
            PropertyDetector::InducedSubgraph(fam(&["K4"])),
            PropertyDetector::InducedSubgraph(fam(&["P3"])),
            PropertyDetector::NotKColorable(1),
            PropertyDetector::NotKColorable(2),
            PropertyDetector::NotKColorable(3),
        ]
    }

    #[test]
    fn display_round_trips_the_dsl() {
        assert_eq!(PropertyDetector::HasEdge.to_string(), "edge");
        assert_eq!(PropertyDetector::Subgraph(fam(&["K3"])).to_string(), "subgraph:K3");
        assert_eq!(PropertyDetector::InducedSubgraph(fam(&["C5"])).to_string(), "induced:C5");
        assert_eq!(PropertyDetector::NotKColorable(2).to_string(), "nc:2");
    }

    #[test]
    fn small_examples() {
        let tri = named_graph("K3").unwrap();
        let path = named_graph("P3").unwrap();
        assert!(PropertyDetector::Subgraph(fam(&["K3"])).holds(&tri));
        assert!(!PropertyDetector::Subgraph(fam(&["K3"])).holds(&path));
        assert!(PropertyDetector::NotKColorable(2).holds(&tri));
        assert!(!PropertyDetector::NotKColorable(3).holds(&tri));
        assert!(PropertyDetector::NotKColorable(1).holds(&path));
        assert!(!PropertyDetector::HasEdge.holds(&Graph::empty(3)));
    }

    #[test]
    fn induced_path_is_not_monotone() {
        let d = PropertyDetector::InducedSubgraph(fam(&["P3"]));
        assert!(!d.is_monotone());
        let path = named_graph("P3").unwrap();
        assert!(d.holds(&path));
        assert!(!d.holds(&Graph::complete(3)));
    }

    fn chain(n: usize, seed: u64) -> Vec<Edge> {
        let mut edges = crate::graph::edge_table(n);
        edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        edges
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn monotone_detectors_never_flip_back(n in 2usize..=8, seed: u64) {
            for d in detectors().into_iter().filter(|d| d.is_monotone()) {
                let mut g = Graph::empty(n);
                let mut seen = d.holds(&g);
                for e in chain(n, seed) {
                    g.add_edge(e).unwrap();
                    let now = d.holds(&g);
                    prop_assert!(!seen || now, "{d} flipped back");
                    seen = now;
                }
            }
        }

        #[test]
        fn incremental_matches_full(n in 2usize..=8, seed: u64) {
            for d in detectors() {
                let mut inc = IncrementalDetector::new(d.clone());
                let mut g = Graph::empty(n);
                for e in chain(n, seed) {
                    g.add_edge(e).unwrap();
                    prop_assert_eq!(inc.observe(&g, e), d.holds(&g), "{}", d);
                }
            }
        }
    }
}
