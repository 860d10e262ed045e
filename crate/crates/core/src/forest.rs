use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestInfo {
    pub is_forest: bool,
    pub is_tree: bool,
    /// Connected components, each ascending, ordered by least vertex.
    pub components: Vec<Vec<usize>>,
}

/// A graph is a forest iff every component has one fewer edge than vertices.
pub fn classify_forest(g: &Graph) -> ForestInfo {
    let components = g.components();
    let is_forest = components.iter().all(|comp| {
        let twice_edges: usize = comp.iter().map(|&v| g.degree(v)).sum();
        twice_edges / 2 + 1 == comp.len()
    });
    ForestInfo {
        is_forest,
        is_tree: is_forest && components.len() == 1,
        components,
    }
}
