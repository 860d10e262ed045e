mod common;

use domratio::domination::{gamma_forest_dp, i_forest_dp, is_dominating, ratio_report, Rational};
use domratio::enumeration::count_trees;
use domratio::graph::{balanced_double_star, path, star};
use domratio::proof::run_construction;
use domratio::VertexSet;

#[test]
fn forest_values_agree_with_exhaustive_search() {
    let cases = [
        (path(7), 3, 3),
        (balanced_double_star(4).unwrap(), 2, 5),
        (balanced_double_star(5).unwrap(), 2, 6),
        (star(3), 1, 1),
        (path(5), 2, 2),
    ];
    for (g, gamma, ind) in cases {
        assert_eq!(common::exhaustive_minimum(&g, false), gamma);
        assert_eq!(common::exhaustive_minimum(&g, true), ind);
        assert_eq!(gamma_forest_dp(&g).unwrap().0, gamma);
        assert_eq!(i_forest_dp(&g).unwrap().0, ind);
    }
}

#[test]
fn path7_peeling_set_is_minimum() {
    let g = path(7);
    let d = VertexSet::from_iter_in(7, [1, 4, 6]);
    assert!(is_dominating(&g, &d));
    assert_eq!(d.len(), common::exhaustive_minimum(&g, false));
    let c = domratio::proof::run_construction_from(&g, &d).unwrap();
    assert!(c.passed());
    assert_eq!(c.k, 3);
    assert_eq!(c.degree_sum, 0);
}

#[test]
fn enumeration_counts_from_prufer_oracle() {
    for (n, want) in [(1, 1), (2, 1), (4, 2), (7, 11)] {
        assert_eq!(common::prufer_classes(n).len(), want);
        assert_eq!(count_trees(n).unwrap(), want as u64);
    }
}

#[test]
fn construction_on_star_k13_is_strict() {
    let c = run_construction(&star(3)).unwrap();
    assert!(c.passed());
    assert_eq!(c.ratio, Rational::from_integer(1));
    assert!(c.ratio < Rational::new(3, 2));
}

#[test]
fn double_star_union_reports_equality() {
    let ds = balanced_double_star(3).unwrap();
    let r = ratio_report(&ds.disjoint_union(&ds)).unwrap();
    assert_eq!((r.gamma, r.ind_dom), (4, 8));
    assert_eq!(r.ratio, Rational::from_integer(2));
    assert!(r.equality);
}
