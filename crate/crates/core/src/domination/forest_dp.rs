//! Linear-time dynamic programming for γ and i on forests.
//!
//! Each component is rooted at its least vertex. Every vertex carries three
//! costs for its subtree:
//!
//! * `in_set`: the vertex is chosen;
//! * `by_child`: not chosen, dominated by at least one chosen child;
//! * `needs_parent`: not chosen, no chosen child, so the parent must be chosen.
//!
//! The two parameters differ only in `in_set`: for independent domination a
//! chosen vertex may not have a chosen child.

use crate::error::{Error, Result};
use crate::forest::classify_forest;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

const INF: u32 = u32::MAX / 4;

fn add(a: u32, b: u32) -> u32 {
    if a >= INF || b >= INF {
        INF
    } else {
        a + b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Variant {
    Dominating,
    IndependentDominating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Force {
    Free,
    In,
    Out,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    InSet,
    ByChild,
    NeedsParent,
}

#[derive(Debug, Clone, Copy)]
struct Costs {
    in_set: u32,
    by_child: u32,
    needs_parent: u32,
}

/// Rooted view of a forest: preorder, parents and children.
struct Rooted<'g> {
    g: &'g Graph,
    preorder: Vec<usize>,
    parent: Vec<Option<usize>>,
    roots: Vec<usize>,
}

impl<'g> Rooted<'g> {
    fn new(g: &'g Graph) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::Domain(
                "domination is undefined on the empty graph".into(),
            ));
        }
        if !classify_forest(g).is_forest {
            return Err(Error::Domain(
                "forest solver requires an acyclic graph".into(),
            ));
        }
        let n = g.n();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut preorder = Vec::with_capacity(n);
        let mut roots = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            roots.push(root);
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                preorder.push(v);
                for &w in g.neighbors(v).iter().rev() {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        stack.push(w);
                    }
                }
            }
        }
        Ok(Self {
            g,
            preorder,
            parent,
            roots,
        })
    }

    fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.parent[v];
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| Some(w) != p)
    }

    fn costs(&self, variant: Variant, force: &[Force]) -> Vec<Costs> {
        let mut table = vec![
            Costs {
                in_set: INF,
                by_child: INF,
                needs_parent: INF,
            };
            self.g.n()
        ];
        for &v in self.preorder.iter().rev() {
            let mut in_set = 1;
            let mut sum_min = 0;
            let mut penalty = INF;
            let mut needs_parent = 0;
            for c in self.children(v) {
                let t = table[c];
                let below_chosen = match variant {
                    Variant::Dominating => t.in_set.min(t.by_child).min(t.needs_parent),
                    Variant::IndependentDominating => t.by_child.min(t.needs_parent),
                };
                in_set = add(in_set, below_chosen);
                let best = t.in_set.min(t.by_child);
                sum_min = add(sum_min, best);
                penalty = penalty.min(t.in_set.saturating_sub(best));
                needs_parent = add(needs_parent, t.by_child);
            }
            let mut c = Costs {
                in_set,
                by_child: add(sum_min, penalty),
                needs_parent,
            };
            match force[v] {
                Force::Free => {}
                Force::In => {
                    c.by_child = INF;
                    c.needs_parent = INF;
                }
                Force::Out => c.in_set = INF,
            }
            table[v] = c;
        }
        table
    }

    fn optimum(&self, table: &[Costs]) -> u32 {
        self.roots.iter().fold(0, |acc, &r| {
            add(acc, table[r].in_set.min(table[r].by_child))
        })
    }

    fn traceback(&self, variant: Variant, table: &[Costs]) -> VertexSet {
        let n = self.g.n();
        let mut state = vec![State::NeedsParent; n];
        let mut chosen = VertexSet::new(n);
        for &r in &self.roots {
            let t = table[r];
            state[r] = if t.in_set <= t.by_child {
                State::InSet
            } else {
                State::ByChild
            };
        }
        for &v in &self.preorder {
            match state[v] {
                State::InSet => {
                    chosen.insert(v);
                    for c in self.children(v) {
                        let t = table[c];
                        state[c] = if variant == Variant::Dominating
                            && t.in_set <= t.by_child.min(t.needs_parent)
                        {
                            State::InSet
                        } else if t.by_child <= t.needs_parent {
                            State::ByChild
                        } else {
                            State::NeedsParent
                        };
                    }
                }
                State::ByChild => {
                    let mut any_chosen = false;
                    let mut cheapest: Option<(u32, usize)> = None;
                    for c in self.children(v) {
                        let t = table[c];
                        if t.in_set <= t.by_child {
                            state[c] = State::InSet;
                            any_chosen = true;
                        } else {
                            state[c] = State::ByChild;
                            let extra = t.in_set - t.by_child;
                            if cheapest.is_none_or(|(e, _)| extra < e) {
                                cheapest = Some((extra, c));
                            }
                        }
                    }
                    if !any_chosen {
                        let (_, c) = cheapest.expect("by_child state has a finite child");
                        state[c] = State::InSet;
                    }
                }
                State::NeedsParent => {
                    for c in self.children(v) {
                        state[c] = State::ByChild;
                    }
                }
            }
        }
        chosen
    }

    fn solve(&self, variant: Variant) -> (usize, VertexSet) {
        let force = vec![Force::Free; self.g.n()];
        let table = self.costs(variant, &force);
        let value = self.optimum(&table);
        let witness = self.traceback(variant, &table);
        debug_assert_eq!(witness.len(), value as usize);
        (value as usize, witness)
    }

    /// Fixes vertices in ascending order, choosing each one whenever some
    /// optimal set agrees with the decisions so far. Quadratic.
    fn solve_lex_least(&self, variant: Variant) -> (usize, VertexSet) {
        let n = self.g.n();
        let mut force = vec![Force::Free; n];
        let target = self.optimum(&self.costs(variant, &force));
        for v in 0..n {
            force[v] = Force::In;
            if self.optimum(&self.costs(variant, &force)) != target {
                force[v] = Force::Out;
            }
        }
        let chosen = VertexSet::from_iter_in(n, (0..n).filter(|&v| force[v] == Force::In));
        debug_assert_eq!(chosen.len(), target as usize);
        (target as usize, chosen)
    }
}

/// γ(G) and a minimum dominating set for a forest, in linear time.
pub fn gamma_forest_dp(g: &Graph) -> Result<(usize, VertexSet)> {
    Ok(Rooted::new(g)?.solve(Variant::Dominating))
}

/// i(G) and a minimum independent dominating set for a forest, in linear time.
pub fn i_forest_dp(g: &Graph) -> Result<(usize, VertexSet)> {
    Ok(Rooted::new(g)?.solve(Variant::IndependentDominating))
}

/// γ(G) with the lexicographically least minimum dominating set.
pub fn gamma_forest_canonical(g: &Graph) -> Result<(usize, VertexSet)> {
    Ok(Rooted::new(g)?.solve_lex_least(Variant::Dominating))
}

/// i(G) with the lexicographically least minimum independent dominating set.
pub fn i_forest_canonical(g: &Graph) -> Result<(usize, VertexSet)> {
    Ok(Rooted::new(g)?.solve_lex_least(Variant::IndependentDominating))
}
