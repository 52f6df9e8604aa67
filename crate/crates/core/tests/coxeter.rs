mod common;

use homcode::analytic::{encoded_qubits, TessellationParams};
use homcode::code::CssCode;
use homcode::coxeter::{
    build_constant_distance_surface, build_orientable_surface_complex, build_surface_complex, catalog, check_fixed_point_free,
    enumerate_quotient, enumerate_reflection_quotient, enumerate_rotation_quotient, parse_relators, surface_from_relators, CosetTable,
    GroupPresentation, Letter, DEFAULT_MAX_COSETS,
};
use homcode::Error;
use proptest::prelude::*;

const ROW_30: &str = "abcba(cb)^2abcb, (bac)^6, (bacba)^4";

fn reflections(r: usize, s: usize, text: &str) -> CosetTable {
    enumerate_reflection_quotient(r, s, &parse_relators(text).unwrap(), DEFAULT_MAX_COSETS).unwrap()
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

#[test]
fn full_collapse() {
    let t = reflections(5, 4, "a, b, c");
    assert_eq!(t.order(), 1);
    assert!(!check_fixed_point_free(&t, 5, 4));
}

#[test]
fn killing_a_reflection_leaves_fixed_points() {
    let t = reflections(5, 4, "a");
    assert!(!check_fixed_point_free(&t, 5, 4));
    assert!(build_surface_complex(&t, 5, 4).is_err());
}

#[test]
fn smallest_five_four_surface() {
    let t = reflections(5, 4, ROW_30);
    assert_eq!(t.order(), 120);
    assert!(check_fixed_point_free(&t, 5, 4));
    let c = build_surface_complex(&t, 5, 4).unwrap();
    assert_eq!(c.sizes(), &[15, 30, 12]);
    assert!(c.boundary_squared_is_zero());
    assert!(c.has_diamond_property());
    // Every face has r sides and every vertex degree s.
    assert!(c.boundary(2).column_weights().iter().all(|&w| w == 5));
    assert!(c.boundary(1).transpose().column_weights().iter().all(|&w| w == 4));
}

#[test]
fn five_five_forty_from_rotations() {
    let words = parse_relators("srrsRSSR").unwrap();
    let rot = enumerate_rotation_quotient(5, 5, &words, DEFAULT_MAX_COSETS).unwrap();
    assert_eq!(rot.order(), 80);
    let c = build_orientable_surface_complex(&rot, 5, 5).unwrap();
    assert_eq!(c.sizes(), &[16, 40, 16]);
    // The same word read over a, b, c: the reflection group is twice as large.
    let refl = enumerate_reflection_quotient(5, 5, &words, DEFAULT_MAX_COSETS).unwrap();
    assert_eq!(refl.order(), 160);
    assert_eq!(build_surface_complex(&refl, 5, 5).unwrap().sizes(), c.sizes());
}

#[test]
fn coset_tables_are_regular_representations() {
    let t = reflections(5, 4, ROW_30);
    let pres = GroupPresentation::triangle(5, 4);
    for g in 0..3 {
        let p = t.permutation(g);
        assert!(is_permutation(&p));
        assert!((0..t.order()).all(|x| p[p[x]] == x), "generator {g} is an involution");
    }
    for rel in &pres.relators {
        assert!(t.is_trivial(rel));
    }
    for w in parse_relators(ROW_30).unwrap() {
        let letters: Vec<Letter> = w.reflection_letters().into_iter().map(|g| (g, false)).collect();
        assert!(t.is_trivial(&letters));
    }
}

#[test]
fn catalogue_rows_have_the_expected_size_and_rate() {
    for q in catalog().iter().filter(|q| q.n != 15 && q.n <= 400) {
        let c = surface_from_relators(q.r, q.s, q.relators, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(c.size(1), q.n, "{{{},{}}} n={}", q.r, q.s, q.n);
        assert_eq!(c.size(2), 2 * q.n / q.r);
        assert_eq!(c.size(0), 2 * q.n / q.s);
        let k = CssCode::from_complex(&c, 1).unwrap().k() as i64;
        assert_eq!(k, encoded_qubits(&TessellationParams::new(q.r, q.s, q.n)));
        assert_eq!(c.meta.parameters["quotient_order"], serde_json::json!(if q.relators.contains(['a', 'b', 'c']) { 4 } else { 2 } * q.n));
    }
}

#[test]
fn large_catalogue_rows() {
    for (r, s, n, k) in [(5, 4, 1800, 182), (5, 5, 900, 182)] {
        let code = common::hyperbolic(r, s, n);
        assert_eq!((code.n(), code.k()), (n, k));
    }
}

/// The listed relators for the {5,5} n=15 row are expected to give a
/// quotient of order 4·15 = 60.
#[test]
fn five_five_fifteen_row_quotient_order() {
    let q = catalog().iter().find(|q| q.n == 15).unwrap();
    let t = reflections(5, 5, q.relators);
    assert_eq!(t.order(), 60, "relators {} enumerate to order {}", q.relators, t.order());
}

#[test]
fn coset_cap_is_reported() {
    let err = enumerate_reflection_quotient(5, 4, &[], 2000).unwrap_err();
    assert!(matches!(err, Error::CosetLimit { limit: 2000 }));
}

#[test]
fn relator_grammar() {
    let w = parse_relators("(ab)^2c, rS, (bc)^-1").unwrap();
    assert_eq!(w.len(), 3);
    assert_eq!(w[0].reflection_letters(), vec![0, 1, 0, 1, 2]);
    assert_eq!(w[1].reflection_letters(), vec![0, 1, 2, 1]);
    assert_eq!(w[2].reflection_letters(), vec![2, 1]);
    assert!(w[0].rotation_letters().is_err());
    assert!(parse_relators("").unwrap().is_empty());
    for bad in ["(ab", "ab)", "x", "a^"] {
        assert!(parse_relators(bad).is_err(), "{bad:?}");
    }
}

#[test]
fn rotation_words_agree_with_their_reflection_rewriting() {
    // ρ = ab, σ = bc: reading "rrS" as reflections gives abab·cb.
    let w = &parse_relators("rrS").unwrap()[0];
    assert_eq!(w.reflection_letters(), vec![0, 1, 0, 1, 2, 1]);
    assert_eq!(w.rotation_letters().unwrap(), vec![(0, false), (0, false), (1, true)]);
}

#[test]
fn constant_distance_family_sizes() {
    for (l, edges) in [(2, 192), (3, 648)] {
        let c = build_constant_distance_surface(6, l, DEFAULT_MAX_COSETS).unwrap();
        assert_eq!(c.size(1), edges);
        assert_eq!(c.size(1), 3 * (2 * l).pow(3));
        assert!(c.has_diamond_property());
    }
    assert!(build_constant_distance_surface(7, 2, DEFAULT_MAX_COSETS).is_err());
    assert!(build_constant_distance_surface(4, 2, DEFAULT_MAX_COSETS).is_err());
}

#[test]
fn presentation_rejects_unknown_generators() {
    let pres = GroupPresentation::rotation(5, 4);
    assert!(enumerate_quotient(&pres, &[vec![(2, false)]], 100).is_err());
    assert!(enumerate_quotient(&pres, &[vec![]], 100).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relators_are_normal(word in proptest::collection::vec(0usize..3, 0..20)) {
        let t = reflections(5, 4, ROW_30);
        let conj: Vec<Letter> = word.iter().rev().map(|&g| (g, false)).collect();
        for w in parse_relators(ROW_30).unwrap() {
            let mut full = conj.clone();
            full.extend(w.reflection_letters().into_iter().map(|g| (g, false)));
            full.extend(word.iter().map(|&g| (g, false)));
            prop_assert!(t.is_trivial(&full));
        }
    }
}
