//! Constructive upper bound on i(G) for trees.
//!
//! Starting from a minimum dominating set D, repeatedly pick a vertex x of
//! degree 0 or 1 in what remains of G[D] and delete its closed neighborhood.
//! The picked vertices X are independent and their neighborhoods partition D.
//! Extending X greedily to a maximal independent set X ∪ I of G gives
//!
//! ```text
//! |I| <= (|D| - k)·Δ - Σ d_i²
//! i(G) <= k + |I| <= Δ·γ - Σ (Δ - 1 + d_i²) <= Δ·γ / 2      (Δ >= 2)
//! ```
//!
//! where `d_i` is the degree of the i-th pick at the time it was picked.
//! [`certify`] recomputes every quantity and records each inequality as a
//! named check.

use serde::{Deserialize, Serialize};

use crate::domination::{
    gamma_forest_canonical, gamma_forest_dp, i_forest_dp, is_dominating, is_independent,
    ratio_bound, Rational,
};
use crate::error::{Error, Result};
use crate::forest::classify_forest;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingStep {
    /// 1-based step number.
    pub index: usize,
    pub vertex: usize,
    /// Degree of `vertex` in the remaining part of G[D]; 0 or 1.
    pub degree: usize,
    /// Closed neighborhood of `vertex` in the remaining part of G[D].
    pub block: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingTrace {
    pub dominating_set: VertexSet,
    pub steps: Vec<PeelingStep>,
    pub k: usize,
    pub picked: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub delta: usize,
    pub gamma: usize,
    pub k: usize,
    pub degree_sum: usize,
    pub extension: VertexSet,
    /// |X| + |I|.
    pub i_upper: usize,
    /// (|D| - k)·Δ - Σ d_i².
    pub eq1_rhs: i64,
    /// Δ·γ - Σ (Δ - 1 + d_i²).
    pub final_rhs: Rational,
    /// Δ·γ / 2.
    pub half_bound: Rational,
    /// i(G) from the exact forest solver.
    pub i_exact: usize,
    pub ratio: Rational,
    pub bound: Rational,
    pub equality: bool,
    pub trace: PeelingTrace,
    pub checks: Vec<Check>,
}

impl BoundCertificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Peels G[D] down to nothing, recording each pick.
///
/// Among the remaining vertices a degree-0 vertex is preferred over a
/// degree-1 vertex, lowest index first.
pub fn peel(g: &Graph, d: &VertexSet) -> Result<PeelingTrace> {
    if !classify_forest(g).is_tree {
        return Err(Error::Precondition("peeling requires a tree".into()));
    }
    if d.ground_size() != g.n() {
        return Err(Error::Precondition(format!(
            "dominating set is over {} vertices, graph has {}",
            d.ground_size(),
            g.n()
        )));
    }
    if !is_dominating(g, d) {
        return Err(Error::Precondition("set is not dominating".into()));
    }
    let (gamma, _) = gamma_forest_dp(g)?;
    if d.len() != gamma {
        return Err(Error::Precondition(format!(
            "dominating set has size {}, but γ = {gamma}",
            d.len()
        )));
    }

    let sub = g.induced(d);
    let h = &sub.graph;
    let mut alive = vec![true; h.n()];
    let mut live_degree: Vec<usize> = h.degrees().to_vec();
    let mut remaining = h.n();
    let mut steps = Vec::new();
    let mut picked = VertexSet::new(g.n());

    while remaining > 0 {
        let pick = (0..h.n())
            .filter(|&v| alive[v] && live_degree[v] == 0)
            .chain((0..h.n()).filter(|&v| alive[v] && live_degree[v] == 1))
            .next()
            .expect("a nonempty forest has a vertex of degree at most one");
        let degree = live_degree[pick];
        let mut block = VertexSet::new(g.n());
        let members: Vec<usize> = std::iter::once(pick)
            .chain(h.neighbors(pick).iter().copied().filter(|&w| alive[w]))
            .collect();
        for &v in &members {
            alive[v] = false;
            remaining -= 1;
            block.insert(sub.parent[v]);
        }
        for &v in &members {
            for &w in h.neighbors(v) {
                if alive[w] {
                    live_degree[w] -= 1;
                }
            }
        }
        picked.insert(sub.parent[pick]);
        steps.push(PeelingStep {
            index: steps.len() + 1,
            vertex: sub.parent[pick],
            degree,
            block,
        });
    }

    Ok(PeelingTrace {
        dominating_set: d.clone(),
        k: steps.len(),
        steps,
        picked,
    })
}

/// Greedily extends the independent set `x` to a maximal independent set,
/// scanning vertices outside N_G[x] in ascending order. Returns only the
/// added vertices.
pub fn extend_to_independent_dominating(g: &Graph, x: &VertexSet) -> Result<VertexSet> {
    if x.ground_size() != g.n() {
        return Err(Error::Precondition(
            "set is over a different ground set".into(),
        ));
    }
    if !is_independent(g, x) {
        return Err(Error::Precondition(
            "set to extend is not independent".into(),
        ));
    }
    let mut covered = g.closed_neighborhood_of(x);
    let mut added = VertexSet::new(g.n());
    for v in g.vertices() {
        if !covered.contains(v) {
            added.insert(v);
            covered.insert(v);
            for &w in g.neighbors(v) {
                covered.insert(w);
            }
        }
    }
    Ok(added)
}

/// Recomputes every quantity of the bound chain and records each inequality.
/// Failing checks are reported in the certificate, not as errors.
pub fn certify(g: &Graph, trace: &PeelingTrace, extension: &VertexSet) -> Result<BoundCertificate> {
    if g.n() == 0 {
        return Err(Error::Domain(
            "domination is undefined on the empty graph".into(),
        ));
    }
    let d = &trace.dominating_set;
    let delta = g.max_degree();
    let delta_i = delta as i64;
    let gamma = d.len();
    let k = trace.k;
    let degree_sum: usize = trace.steps.iter().map(|s| s.degree).sum();
    let degree_sq_sum: usize = trace.steps.iter().map(|s| s.degree * s.degree).sum();
    let i_upper = trace.picked.len() + extension.len();
    let eq1_rhs = (gamma as i64 - k as i64) * delta_i - degree_sq_sum as i64;
    let final_rhs = Rational::from_integer(
        delta_i * gamma as i64
            - trace
                .steps
                .iter()
                .map(|s| delta_i - 1 + (s.degree * s.degree) as i64)
                .sum::<i64>(),
    );
    let half_bound = Rational::new(delta_i * gamma as i64, 2);
    let (i_exact, _) = i_forest_dp(g)?;
    let gamma_exact = gamma_forest_dp(g)?.0;
    let ratio = Rational::new(i_exact as i64, gamma_exact as i64);
    let bound = ratio_bound(delta);

    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        })
    };

    check(
        "d_minimum_dominating",
        is_dominating(g, d) && gamma == gamma_exact,
        format!("|D| = {gamma}, γ = {gamma_exact}"),
    );
    check(
        "step_degrees_0_or_1",
        trace
            .steps
            .iter()
            .all(|s| s.degree <= 1 && s.block.len() == s.degree + 1 && s.block.contains(s.vertex)),
        format!(
            "degrees {:?}",
            trace.steps.iter().map(|s| s.degree).collect::<Vec<_>>()
        ),
    );
    let mut union = VertexSet::new(g.n());
    let mut disjoint = true;
    for s in &trace.steps {
        disjoint &= union.is_disjoint(&s.block);
        union.union_with(&s.block);
    }
    check(
        "blocks_partition_d",
        disjoint && union == *d && k == trace.steps.len(),
        format!("Σ(d_i + 1) = {}, |D| = {gamma}", degree_sum + k),
    );
    check(
        "block_sizes_sum_to_gamma",
        degree_sum + k == gamma,
        format!("Σ(d_i + 1) = {} vs |D| = {gamma}", degree_sum + k),
    );
    let x_matches =
        trace.picked.len() == k && trace.steps.iter().all(|s| trace.picked.contains(s.vertex));
    check(
        "x_independent",
        x_matches && trace.picked.is_subset(d) && is_independent(g, &trace.picked),
        format!("X = {:?}", trace.picked),
    );
    let x_and_i = trace.picked.union(extension);
    check(
        "extension_outside_d",
        extension.is_disjoint(d),
        format!("I = {:?}", extension),
    );
    check(
        "x_union_i_independent_dominating",
        extension.is_disjoint(&trace.picked)
            && is_independent(g, &x_and_i)
            && is_dominating(g, &x_and_i),
        format!("|X ∪ I| = {}", x_and_i.len()),
    );
    check(
        "extension_size_bound",
        extension.len() as i64 <= eq1_rhs,
        format!("|I| = {} <= (|D| - k)Δ - Σd² = {eq1_rhs}", extension.len()),
    );
    check(
        "upper_bound_chain",
        Rational::from_integer(i_upper as i64) <= final_rhs,
        format!("k + |I| = {i_upper} <= Δγ - Σ(Δ - 1 + d²) = {final_rhs}"),
    );
    if delta >= 2 {
        let sign = (Rational::from_integer(1) - Rational::new(delta_i, 2))
            * Rational::from_integer(degree_sum as i64 - k as i64);
        check(
            "sign_condition",
            sign >= Rational::from_integer(0) && final_rhs <= half_bound,
            format!("(1 - Δ/2)(Σd - k) = {sign}; {final_rhs} <= Δγ/2 = {half_bound}"),
        );
    }
    check(
        "exact_i_within_witness",
        i_exact <= i_upper,
        format!("i(G) = {i_exact} <= |X ∪ I| = {i_upper}"),
    );
    let theorem_ok = if delta >= 3 {
        Rational::from_integer(i_exact as i64) <= half_bound
    } else {
        i_exact <= gamma
    };
    check(
        "theorem_bound",
        theorem_ok,
        format!("i(G) = {i_exact}, γ = {gamma}, Δ = {delta}, bound {bound}"),
    );

    Ok(BoundCertificate {
        delta,
        gamma,
        k,
        degree_sum,
        extension: extension.clone(),
        i_upper,
        eq1_rhs,
        final_rhs,
        half_bound,
        i_exact,
        ratio,
        bound,
        equality: ratio == bound,
        trace: trace.clone(),
        checks,
    })
}

/// Runs peel, extend and certify from the lexicographically least minimum
/// dominating set.
pub fn run_construction(g: &Graph) -> Result<BoundCertificate> {
    if !classify_forest(g).is_tree {
        return Err(Error::Precondition("construction requires a tree".into()));
    }
    let (_, d) = gamma_forest_canonical(g)?;
    run_construction_from(g, &d)
}

/// Same as [`run_construction`], from a caller-supplied minimum dominating set.
pub fn run_construction_from(g: &Graph, d: &VertexSet) -> Result<BoundCertificate> {
    let trace = peel(g, d)?;
    let extension = extend_to_independent_dominating(g, &trace.picked)?;
    certify(g, &trace, &extension)
}
