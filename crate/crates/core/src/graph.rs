//! Immutable simple undirected graphs on dense labels `0..n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A simple undirected graph. Neighbor lists are kept sorted ascending so
/// every traversal in the crate iterates in a canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeListRepr", into = "EdgeListRepr")]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if let Some(w) = nbrs.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}-{}",
                    v.min(w[0]),
                    v.max(w[0])
                )));
            }
        }
        Ok(Self::from_sorted_adjacency(adjacency))
    }

    fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let degree = adjacency.iter().map(Vec::len).collect();
        Self {
            n: adjacency.len(),
            adjacency,
            degree,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.degree.iter().sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    /// Δ(G); zero for the empty and edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// N_G[v] as a vertex set.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut set = VertexSet::new(self.n);
        set.insert(v);
        for &w in &self.adjacency[v] {
            set.insert(w);
        }
        set
    }

    /// N_G[S] as a vertex set.
    pub fn closed_neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in s.iter() {
            out.insert(v);
            for &w in &self.adjacency[v] {
                out.insert(w);
            }
        }
        out
    }

    /// G[S], relabelled to `0..|S|` in ascending parent order.
    pub fn induced(&self, s: &VertexSet) -> Subgraph {
        let parent: Vec<usize> = s.iter().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in parent.iter().enumerate() {
            local[v] = i;
        }
        let adjacency = parent
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&w| local[w] != usize::MAX)
                    .map(|&w| local[w])
                    .collect()
            })
            .collect();
        Subgraph {
            graph: Self::from_sorted_adjacency(adjacency),
            parent,
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|nbrs| nbrs.iter().map(|&w| w + shift).collect()),
        );
        Self::from_sorted_adjacency(adjacency)
    }

    /// Connected components, each sorted ascending, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }
}

/// A derived graph together with the map from its labels back to the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub parent: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        Self {
            n: g.n,
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;

    fn try_from(r: EdgeListRepr) -> Result<Self> {
        Graph::from_edges(r.n, &r.edges)
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

/// K_{1,leaves} with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).expect("complete graph edges are valid")
}

/// The balanced double star with `s` leaves on each center.
///
/// Labels: centers `w1 = 0`, `w2 = 1`; leaves of `w1` are `2..=s+1`, leaves
/// of `w2` are `s+2..=2s+1`.
pub fn balanced_double_star(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::Domain(
            "balanced double star needs s >= 1 leaves per center".into(),
        ));
    }
    let mut edges = Vec::with_capacity(2 * s + 1);
    edges.push((0, 1));
    edges.extend((2..=s + 1).map(|v| (0, v)));
    edges.extend((s + 2..=2 * s + 1).map(|u| (1, u)));
    Graph::from_edges(2 * s + 2, &edges)
}

/// True when `g` is a tree with exactly two non-leaf vertices of equal degree.
pub fn is_balanced_double_star(g: &Graph) -> bool {
    if g.n() < 4 || g.edge_count() + 1 != g.n() || !g.is_connected() {
        return false;
    }
    let centers: Vec<usize> = g.vertices().filter(|&v| g.degree(v) > 1).collect();
    centers.len() == 2
        && g.degree(centers[0]) == g.degree(centers[1])
        && g.has_edge(centers[0], centers[1])
}

/// L(G): one vertex per edge of `g` (in `Graph::edges` order), adjacent when
/// the edges share an endpoint. The returned vector maps each line-graph
/// vertex back to its edge in `g`.
pub fn line_graph(g: &Graph) -> Result<(Graph, Vec<(usize, usize)>)> {
    if !g.is_connected() {
        return Err(Error::Domain(
            "line graph requires a connected graph".into(),
        ));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident = vec![Vec::new(); g.n()];
    for (idx, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(idx);
        incident[v].push(idx);
    }
    let mut line_edges = Vec::new();
    for at_vertex in &incident {
        for (i, &a) in at_vertex.iter().enumerate() {
            for &b in &at_vertex[i + 1..] {
                line_edges.push((a.min(b), a.max(b)));
            }
        }
    }
    // A simple graph has no two edges sharing both endpoints, so every pair
    // appears at exactly one shared vertex.
    let lg = Graph::from_edges(edges.len(), &line_edges)?;
    Ok((lg, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn adjacency_sorted_and_symmetric() {
        let g = Graph::from_edges(4, &[(3, 0), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
        }
        assert_eq!(g.degrees(), &[3, 1, 1, 1]);
    }

    #[test]
    fn double_star_shapes() {
        // s = 1 is P_4 relabelled as 2-0-1-3
        let p4 = balanced_double_star(1).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(p4.max_degree(), 2);
        let g = balanced_double_star(3).unwrap();
        assert_eq!(g.n(), 8);
        let mut degs = g.degrees().to_vec();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 1, 1, 1, 4, 4]);
        assert!(balanced_double_star(0).is_err());
        assert!(is_balanced_double_star(&g));
        assert!(!is_balanced_double_star(&star(5)));
        let unbalanced = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (1, 4)]).unwrap();
        assert!(!is_balanced_double_star(&unbalanced));
    }

    #[test]
    fn line_graph_examples() {
        let (l, _) = line_graph(&complete(2)).unwrap();
        assert_eq!(l, Graph::empty(1));
        let (l, _) = line_graph(&path(4)).unwrap();
        assert_eq!(l, path(3));
        let (l, _) = line_graph(&star(3)).unwrap();
        assert_eq!(l, complete(3));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(line_graph(&two_edges).is_err());
    }

    #[test]
    fn induced_keeps_parent_map() {
        let g = path(5);
        let s = VertexSet::from_iter_in(5, [1, 2, 4]);
        let sub = g.induced(&s);
        assert_eq!(sub.parent, vec![1, 2, 4]);
        assert_eq!(sub.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
