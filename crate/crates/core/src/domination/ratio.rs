use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::brute::{gamma_brute, i_brute, BRUTE_FORCE_CAP};
use super::forest_dp::{gamma_forest_canonical, i_forest_canonical};
use crate::error::{Error, Result};
use crate::forest::classify_forest;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub type Rational = Ratio<i64>;

/// The tree/forest bound on i/γ: 1 when Δ ≤ 2, otherwise Δ/2.
pub fn ratio_bound(max_degree: usize) -> Rational {
    if max_degree <= 2 {
        Rational::from_integer(1)
    } else {
        Rational::new(max_degree as i64, 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub n: usize,
    pub max_degree: usize,
    pub gamma: usize,
    pub ind_dom: usize,
    pub ratio: Rational,
    pub bound: Rational,
    pub meets_bound: bool,
    pub equality: bool,
    pub gamma_witness: VertexSet,
    pub i_witness: VertexSet,
    /// `(γ_j, i_j)` per connected component, ordered by least vertex.
    pub per_component: Vec<(usize, usize)>,
}

/// Computes γ, i and the ratio against the forest bound.
///
/// Forests are solved component by component with the tree DP; other graphs
/// fall back to the subset oracle when `n <= 20`. Witnesses are the
/// lexicographically least optimal sets in both cases.
pub fn ratio_report(g: &Graph) -> Result<RatioReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Domain(
            "domination is undefined on the empty graph".into(),
        ));
    }
    let info = classify_forest(g);
    if !info.is_forest && n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            n,
            cap: BRUTE_FORCE_CAP,
            what: "brute-force solver (non-forest input)",
        });
    }
    type Solver = fn(&Graph) -> Result<(usize, VertexSet)>;
    let (solve_gamma, solve_i): (Solver, Solver) = if info.is_forest {
        (gamma_forest_canonical, i_forest_canonical)
    } else {
        (gamma_brute, i_brute)
    };

    let mut gamma_witness = VertexSet::new(n);
    let mut i_witness = VertexSet::new(n);
    let mut per_component = Vec::with_capacity(info.components.len());
    for comp in &info.components {
        let sub = g.induced(&VertexSet::from_iter_in(n, comp.iter().copied()));
        let (gamma_j, d) = solve_gamma(&sub.graph)?;
        let (i_j, s) = solve_i(&sub.graph)?;
        for v in d.iter() {
            gamma_witness.insert(sub.parent[v]);
        }
        for v in s.iter() {
            i_witness.insert(sub.parent[v]);
        }
        per_component.push((gamma_j, i_j));
    }

    let gamma = gamma_witness.len();
    let ind_dom = i_witness.len();
    let max_degree = g.max_degree();
    let ratio = Rational::new(ind_dom as i64, gamma as i64);
    let bound = ratio_bound(max_degree);
    let meets_bound = ratio <= bound;
    if per_component
        .iter()
        .all(|&(gj, ij)| Rational::new(ij as i64, gj as i64) <= bound)
    {
        let pairs: Vec<(u64, u64)> = per_component
            .iter()
            .map(|&(gj, ij)| (ij as u64, gj as u64))
            .collect();
        debug_assert_eq!(mediant_within_bound(&pairs, bound), Ok(true));
    }
    Ok(RatioReport {
        n,
        max_degree,
        gamma,
        ind_dom,
        ratio,
        bound,
        meets_bound,
        equality: ratio == bound,
        gamma_witness,
        i_witness,
        per_component,
    })
}

/// Checks that the mediant Σr_num / Σr_den of ratios each at most `t` is
/// itself at most `t`.
///
/// Every pair must have positive parts and satisfy `num/den <= t`; the first
/// pair breaking that is reported as a precondition error.
pub fn mediant_within_bound(pairs: &[(u64, u64)], t: Rational) -> Result<bool> {
    if pairs.is_empty() {
        return Err(Error::Precondition("mediant of an empty list".into()));
    }
    let t_wide = Ratio::<i128>::new(*t.numer() as i128, *t.denom() as i128);
    let (mut num_sum, mut den_sum) = (0i128, 0i128);
    for (idx, &(num, den)) in pairs.iter().enumerate() {
        if num == 0 || den == 0 {
            return Err(Error::Precondition(format!(
                "pair {idx} ({num}, {den}) is not a pair of positive integers"
            )));
        }
        if Ratio::new(num as i128, den as i128) > t_wide {
            return Err(Error::Precondition(format!(
                "pair {idx} ({num}/{den}) exceeds the bound {t}"
            )));
        }
        num_sum += num as i128;
        den_sum += den as i128;
    }
    Ok(Ratio::new(num_sum, den_sum) <= t_wide)
}
