//! Test-only oracles, written independently of the library code paths they
//! check.
#![allow(dead_code)]

use std::collections::HashSet;

use domratio::Graph;
use rand::Rng;

/// Decodes a Prüfer sequence over `0..n` into a tree edge list.
pub fn prufer_to_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Center(s) of a tree by repeatedly stripping leaves.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism-invariant string for a tree: the least parenthesis code over
/// its centers.
pub fn tree_canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    centers(&adj)
        .into_iter()
        .map(|c| rooted_code(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

pub fn graph_canonical_form(g: &Graph) -> String {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    tree_canonical_form(g.n(), &edges)
}

/// Non-increasing multiplicity vectors of length `slots` summing to `total`.
fn partitions(
    total: usize,
    slots: usize,
    max_part: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if prefix.len() == slots {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for part in (0..=max_part.min(total)).rev() {
        prefix.push(part);
        partitions(total - part, slots, part, prefix, out);
        prefix.pop();
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (0..v.len().saturating_sub(1))
        .rev()
        .find(|&i| v[i] < v[i + 1])
    else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Isomorphism classes of trees on `n` vertices, found by decoding Prüfer
/// sequences and deduplicating canonical forms.
///
/// Vertex `v` occurs `deg(v) - 1` times in a Prüfer sequence, and every tree
/// has a labelling whose degrees are non-increasing in the label, so only
/// sequences whose multiplicities are non-increasing need decoding.
pub fn prufer_classes(n: usize) -> HashSet<String> {
    let mut classes = HashSet::new();
    match n {
        0 => return classes,
        1 => {
            classes.insert(tree_canonical_form(1, &[]));
            return classes;
        }
        2 => {
            classes.insert(tree_canonical_form(2, &[(0, 1)]));
            return classes;
        }
        _ => {}
    }
    let len = n - 2;
    let mut shapes = Vec::new();
    partitions(len, n, len, &mut Vec::new(), &mut shapes);
    for mult in shapes {
        let mut seq: Vec<usize> = mult
            .iter()
            .enumerate()
            .flat_map(|(v, &m)| std::iter::repeat_n(v, m))
            .collect();
        loop {
            classes.insert(tree_canonical_form(n, &prufer_to_edges(&seq, n)));
            if !next_permutation(&mut seq) {
                break;
            }
        }
    }
    classes
}

/// graph6 encoder built from an explicit bit string.
pub fn reference_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = String::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    let mut out = String::new();
    out.push(char::from(63 + n as u8));
    for chunk in bits.as_bytes().chunks(6) {
        let value = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push(char::from(63 + value));
    }
    out
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    match n {
        1 => Graph::empty(1),
        2 => Graph::from_edges(2, &[(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            Graph::from_edges(n, &prufer_to_edges(&seq, n)).unwrap()
        }
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | 1 << w))
        .collect()
}

fn dominates(closed: &[u32], set: u32) -> bool {
    let full = (1u32 << closed.len()) - 1;
    let covered = (0..closed.len())
        .filter(|&v| set >> v & 1 == 1)
        .fold(0, |m, v| m | closed[v]);
    covered == full
}

fn independent(closed: &[u32], set: u32) -> bool {
    (0..closed.len())
        .filter(|&v| set >> v & 1 == 1)
        .all(|v| closed[v] & set == 1 << v)
}

/// Minimum size over all 2^n subsets; `independent_only` restricts to
/// independent sets.
pub fn exhaustive_minimum(g: &Graph, independent_only: bool) -> usize {
    let closed = masks(g);
    (0u32..1 << g.n())
        .filter(|&s| dominates(&closed, s) && (!independent_only || independent(&closed, s)))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Every minimum dominating set, as bitmasks.
pub fn all_minimum_dominating_sets(g: &Graph) -> Vec<u32> {
    let closed = masks(g);
    let all: Vec<u32> = (0u32..1 << g.n())
        .filter(|&s| dominates(&closed, s))
        .collect();
    let best = all.iter().map(|s| s.count_ones()).min().unwrap();
    all.into_iter().filter(|s| s.count_ones() == best).collect()
}
