use super::*;
use crate::complexity::hom_complexity;
use crate::graph::{generate, parse_hgf, Family};

fn gen(f: Family) -> Graph {
    generate(&f).unwrap()
}

fn value(r: &CoverResult) -> Option<usize> {
    assert!(r.certificate.as_ref().is_none_or(|c| verify_cover(c).is_empty()));
    r.value
}

#[test]
fn empty_family_is_infinite() {
    assert_eq!(sigma_cover(&gen(Family::Complete(3)), CoverClass::Empty).unwrap().value, None);
}

#[test]
fn triangle_needs_two_bipartite_pieces() {
    let k2 = gen(Family::Complete(2));
    let r = sigma_cover(&gen(Family::Complete(3)), CoverClass::Colourable(&k2)).unwrap();
    assert_eq!(value(&r), Some(2));
}

#[test]
fn single_edge_is_one_clique() {
    let r = sigma_cover(&gen(Family::Path(2)), CoverClass::Clique).unwrap();
    assert_eq!(value(&r), Some(1));
}

#[test]
fn clique_cover_examples() {
    let cases = [
        (Family::Grotzsch, 20),
        (Family::CompleteMultipartite(vec![3, 3]), 9),
        (Family::Cycle(5), 5),
        (Family::Cycle(3), 1),
        (Family::Path(6), 5),
        (Family::Complete(6), 1),
    ];
    for (f, want) in cases {
        let r = clique_cover_number(&gen(f.clone())).unwrap();
        assert_eq!(value(&r), Some(want), "{f:?}");
    }
}

#[test]
fn clique_cover_of_two_triangles_sharing_an_edge() {
    let g = parse_hgf(b"hgf 1 undirected\nv a\nv b\nv c\nv d\ne a b\ne a c\ne b c\ne b d\ne c d\n").unwrap();
    assert_eq!(value(&clique_cover_number(&g).unwrap()), Some(2));
}

#[test]
fn particity_examples() {
    assert_eq!(value(&particity(&gen(Family::Complete(4)), 2).unwrap()), Some(2));
    assert_eq!(value(&particity(&gen(Family::Cycle(5)), 2).unwrap()), Some(2));
    assert_eq!(value(&particity(&gen(Family::Complete(3)), 3).unwrap()), Some(1));
    // Too few vertices to form ℓ parts.
    assert_eq!(particity(&gen(Family::Complete(2)), 3).unwrap().value, None);
    assert_eq!(value(&particity(&gen(Family::Edgeless(3)), 3).unwrap()), Some(1));
}

#[test]
fn particity_pads_small_pieces() {
    // K_4 over 3 parts: a triangle plus a star; a piece with one edge still
    // needs three vertices.
    let r = particity(&gen(Family::Complete(4)), 3).unwrap();
    assert_eq!(value(&r), Some(2));
    for p in &r.certificate.unwrap().pieces {
        assert!(p.sub.vertices().len() >= 3);
    }
}

#[test]
fn bipartite_dimension_examples() {
    assert_eq!(value(&partite_dimension(&gen(Family::Complete(8)), 2).unwrap()), Some(3));
    assert_eq!(value(&partite_dimension(&gen(Family::Path(4)), 2).unwrap()), Some(2));
    assert_eq!(
        hom_complexity(&gen(Family::Path(4)), &gen(Family::Complete(2)), MethodChoice::Auto).unwrap().value,
        Value::Finite(1)
    );
    let k23 = gen(Family::CompleteMultipartite(vec![2, 3]));
    assert_eq!(value(&partite_dimension(&k23, 2).unwrap()), Some(1));
}

#[test]
fn tripartite_dimension() {
    assert_eq!(value(&partite_dimension(&gen(Family::Complete(3)), 3).unwrap()), Some(1));
    // Triangle-free graphs have no complete 3-partite subgraph.
    assert_eq!(partite_dimension(&gen(Family::Cycle(5)), 3).unwrap().value, None);
    let k222 = gen(Family::CompleteMultipartite(vec![2, 2, 2]));
    assert_eq!(value(&partite_dimension(&k222, 3).unwrap()), Some(1));
    assert_eq!(value(&partite_dimension(&gen(Family::Complete(5)), 3).unwrap()), Some(2));
    assert!(partite_dimension(&gen(Family::Complete(10)), 3).unwrap_err().is_budget());
}

#[test]
fn complete_multipartite_recognition() {
    let parts = complete_multipartite_parts(&gen(Family::CompleteMultipartite(vec![1, 2, 3]))).unwrap();
    assert_eq!(parts.len(), 3);
    assert!(complete_multipartite_parts(&gen(Family::Path(4))).is_none());
    assert_eq!(complete_multipartite_parts(&gen(Family::Edgeless(3))).unwrap().len(), 1);
}

#[test]
fn hereditary_predicate_uses_partition_search() {
    let forest = |p: &Graph| p.size() < p.order() || p.size() == 0;
    let class = CoverClass::Predicate { hereditary: true, test: &forest };
    // K_4 splits into two paths.
    let r = sigma_cover(&gen(Family::Complete(4)), class).unwrap();
    assert_eq!(value(&r), Some(2));
}

#[test]
fn non_hereditary_predicate_matches_clique_class() {
    let is_clique = |p: &Graph| p.size() == p.order() * (p.order() - 1) / 2;
    let class = CoverClass::Predicate { hereditary: false, test: &is_clique };
    for f in [Family::Complete(4), Family::Cycle(5), Family::CompleteMultipartite(vec![1, 2, 2])] {
        let g = gen(f);
        assert_eq!(
            sigma_cover(&g, class).unwrap().value,
            clique_cover_number(&g).unwrap().value
        );
    }
}

#[test]
fn cc_bounds_examples() {
    let b = cc_lower_bounds(&gen(Family::Grotzsch)).unwrap();
    assert_eq!((b.injective_bound, b.omega, b.chi), (20, 2, 4));
    assert!(b.literature_bound <= 4.0);
    assert_eq!(b.upper_bound, 30);
    let b = cc_lower_bounds(&gen(Family::Complete(5))).unwrap();
    assert_eq!(b.log_bound, 1);
    let b = cc_lower_bounds(&gen(Family::CompleteMultipartite(vec![3, 3]))).unwrap();
    assert_eq!(b.injective_bound, 9);
    assert!(cc_lower_bounds(&gen(Family::Edgeless(2))).unwrap_err().to_string().contains("isolated"));
}

#[test]
fn tampered_certificate_is_rejected() {
    let r = clique_cover_number(&gen(Family::Cycle(4))).unwrap();
    let mut cert = r.certificate.unwrap();
    cert.pieces.pop();
    assert!(verify_cover(&cert).iter().any(|f| f.contains("in no piece")));
}
