//! Constant-delay generation of free trees as canonical level sequences.
//!
//! A tree is stored as the depth of each vertex in preorder, rooted at its
//! center (the centroid-side center for bicentral trees). The successor
//! function steps through rooted-tree level sequences in decreasing
//! lexicographic order and jumps over sequences whose root is not the
//! canonical center, so each isomorphism class is produced exactly once.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 20;

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tree order must lie in 1..={MAX_ORDER}, got {n}"
        )))
    }
}

/// Stream of one representative per isomorphism class of trees on `n`
/// vertices. Vertex 0 is the root of the canonical level sequence.
#[derive(Debug, Clone)]
pub struct TreeStream {
    n: usize,
    produced: u64,
    pending: Option<Vec<usize>>,
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn produced(&self) -> u64 {
        self.produced
    }

    /// Advances to the next level sequence without building a graph.
    pub fn next_level_sequence(&mut self) -> Option<Vec<usize>> {
        if self.n == 1 {
            let seq = self.pending.take()?;
            self.produced += 1;
            return Some(seq);
        }
        let candidate = self.pending.take()?;
        let tree = next_valid_tree(candidate)?;
        self.pending = next_rooted_tree(&tree, None);
        self.produced += 1;
        Some(tree)
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_level_sequence()
            .map(|s| level_sequence_to_graph(&s))
    }
}

pub fn enumerate_trees(n: usize) -> Result<TreeStream> {
    check_order(n)?;
    // Start from the path rooted at its center.
    let first: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    Ok(TreeStream {
        n,
        produced: 0,
        pending: Some(first),
    })
}

/// Counts the classes by walking the whole stream.
pub fn count_trees(n: usize) -> Result<u64> {
    let mut stream = enumerate_trees(n)?;
    let mut count = 0;
    while stream.next_level_sequence().is_some() {
        count += 1;
    }
    Ok(count)
}

/// Builds the tree of a level sequence: each vertex attaches to the most
/// recent vertex one level up.
pub fn level_sequence_to_graph(levels: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (v, &level) in levels.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if levels[top] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Graph::from_edges(levels.len(), &edges).expect("level sequence yields a tree")
}

/// Next rooted tree in decreasing level-sequence order. `p` defaults to the
/// last position whose level exceeds one.
fn next_rooted_tree(prev: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => (0..prev.len()).rev().find(|&i| prev[i] != 1)?,
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while prev[q] != prev[p] - 1 {
        q -= 1;
    }
    let mut next = prev.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Splits a level sequence at the root into the first subtree (re-rooted,
/// levels shifted down by one) and the rest of the tree.
fn split_tree(levels: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = levels
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(levels.len(), |(i, _)| i);
    let left = levels[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(levels[m..].iter().copied())
        .collect();
    (left, rest)
}

/// Returns `candidate` if it is rooted at its canonical center, otherwise
/// jumps to the next candidate that is.
fn next_valid_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let tie_broken_wrong = rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest));
    if rest_height >= left_height && !tie_broken_wrong {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (slot, level) in next[len - (height + 1)..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    Some(next)
}

/// A round-robin partition of a stream: shard `id` of `count` takes the trees
/// whose ordinal is congruent to `id` modulo `count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub count: usize,
    pub id: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { count: 1, id: 0 };

    pub fn new(count: usize, id: usize) -> Result<Self> {
        if count == 0 || id >= count {
            return Err(Error::Domain(format!("shard id {id} is not in 0..{count}")));
        }
        Ok(Self { count, id })
    }

    pub fn contains(&self, ordinal: u64) -> bool {
        ordinal % self.count as u64 == self.id as u64
    }
}

/// The trees of order `n` belonging to `shard`, with their stream ordinals.
pub fn enumerate_shard(n: usize, shard: Shard) -> Result<impl Iterator<Item = (u64, Graph)>> {
    let stream = enumerate_trees(n)?;
    Ok(stream
        .enumerate()
        .map(|(i, g)| (i as u64, g))
        .filter(move |(i, _)| shard.contains(*i)))
}
