//! Exhaustive subset search. Subsets are visited by size, then in
//! lexicographic order of their ascending member lists, so the first hit is
//! the lexicographically least minimum set.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const BRUTE_FORCE_CAP: usize = 20;

/// True iff N_G[S] = V(G).
pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    g.vertices()
        .all(|v| s.contains(v) || g.neighbors(v).iter().any(|&w| s.contains(w)))
}

/// True iff no edge of `g` has both ends in `s`.
pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter()
        .all(|v| g.neighbors(v).iter().all(|&w| !s.contains(w)))
}

pub fn gamma_brute(g: &Graph) -> Result<(usize, VertexSet)> {
    search(g, false)
}

pub fn i_brute(g: &Graph) -> Result<(usize, VertexSet)> {
    search(g, true)
}

fn search(g: &Graph, independent: bool) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Domain(
            "domination is undefined on the empty graph".into(),
        ));
    }
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            n,
            cap: BRUTE_FORCE_CAP,
            what: "brute-force solver",
        });
    }
    let open: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let full: u32 = (1u32 << n) - 1;

    for k in 1..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let mut chosen = 0u32;
            let mut covered = 0u32;
            for &v in &combo {
                chosen |= 1 << v;
                covered |= open[v];
            }
            let independent_ok = !independent || covered & chosen == 0;
            if independent_ok && (covered | chosen) == full {
                return Ok((k, VertexSet::from_mask(n, chosen as u64)));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("V(G) itself dominates and a maximal independent set always exists")
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{balanced_double_star, complete, path, star};

    fn set(n: usize, items: &[usize]) -> VertexSet {
        VertexSet::from_iter_in(n, items.iter().copied())
    }

    #[test]
    fn dominating_examples() {
        assert!(is_dominating(&star(5), &set(6, &[0])));
        assert!(!is_dominating(&path(4), &set(4, &[0])));
        assert!(is_dominating(&path(4), &set(4, &[1, 2])));
    }

    #[test]
    fn independent_examples() {
        assert!(is_independent(&path(4), &set(4, &[0, 2])));
        assert!(!is_independent(&path(4), &set(4, &[1, 2])));
        assert!(is_independent(&complete(5), &VertexSet::new(5)));
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn small_values() {
        assert_eq!(gamma_brute(&path(4)).unwrap(), (2, set(4, &[0, 2])));
        assert_eq!(i_brute(&path(4)).unwrap(), (2, set(4, &[0, 2])));
        assert_eq!(gamma_brute(&star(5)).unwrap(), (1, set(6, &[0])));
        assert_eq!(i_brute(&star(5)).unwrap(), (1, set(6, &[0])));
        let ds = balanced_double_star(3).unwrap();
        assert_eq!(gamma_brute(&ds).unwrap(), (2, set(8, &[0, 1])));
        assert_eq!(i_brute(&ds).unwrap(), (4, set(8, &[0, 5, 6, 7])));
        assert_eq!(gamma_brute(&complete(4)).unwrap().0, 1);
        assert_eq!(i_brute(&Graph::empty(3)).unwrap(), (3, set(3, &[0, 1, 2])));
    }

    #[test]
    fn caps_and_empty() {
        assert!(matches!(
            gamma_brute(&Graph::empty(0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(i_brute(&path(21)), Err(Error::TooLarge { .. })));
        assert_eq!(gamma_brute(&path(20)).unwrap().0, 7);
    }
}
