mod common;

use homcode::code::{CssCode, Pauli};
use homcode::complex::{build_rotated_toric, build_tesseract, build_toric_2d, build_toric_4d, ChainComplex, Meta};
use homcode::gf2::{rank, BitMatrix, BitVector, Echelon};
use homcode::Error;
use proptest::prelude::*;

/// Boundary of a tetrahedron: a sphere with 4 vertices, 6 edges, 4 triangles.
fn tetrahedron() -> ChainComplex {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let faces = [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]];
    let b1 = BitMatrix::from_entries(4, 6, edges.iter().enumerate().flat_map(|(e, &(u, v))| [(u, e), (v, e)]));
    let b2 = BitMatrix::from_entries(6, 4, faces.iter().enumerate().flat_map(|(f, es)| es.iter().map(move |&e| (e, f))));
    ChainComplex::new(vec![4, 6, 4], vec![b1, b2], Meta::new("tetrahedron")).unwrap()
}

fn codes() -> Vec<(String, CssCode)> {
    let mut out = vec![
        ("toric2d 3".to_string(), CssCode::from_complex(&build_toric_2d(3).unwrap(), 1).unwrap()),
        ("rotated 4".into(), CssCode::from_complex(&build_rotated_toric(4).unwrap(), 1).unwrap()),
        ("toric4d 2".into(), CssCode::from_complex(&build_toric_4d(2).unwrap(), 2).unwrap()),
        ("tesseract 2".into(), CssCode::from_complex(&build_tesseract(2).unwrap(), 2).unwrap()),
        ("tesseract 3".into(), CssCode::from_complex(&build_tesseract(3).unwrap(), 2).unwrap()),
        ("toric4d 2 edges".into(), CssCode::from_complex(&build_toric_4d(2).unwrap(), 1).unwrap()),
    ];
    for (r, s, n) in [(5, 4, 30), (5, 5, 40), (7, 7, 28), (5, 4, 160)] {
        out.push((format!("{{{r},{s}}} {n}"), common::hyperbolic(r, s, n)));
    }
    out
}

#[test]
fn css_condition_and_dimension_count() {
    for (name, code) in codes() {
        assert!(code.h_x().mul(&code.h_z().transpose()).is_zero(), "{name}");
        let k = code.n() - rank(code.h_x()) - rank(code.h_z());
        assert_eq!(code.k(), k, "{name}");
        assert_eq!(code.k(), code.complex().betti(code.qubit_level()), "{name}");
    }
}

#[test]
fn known_parameters() {
    let t = CssCode::from_complex(&tetrahedron(), 1).unwrap();
    assert_eq!((t.n(), t.k()), (6, 0));
    assert!(matches!(t.logical_basis(), Err(Error::TrivialCode)));
    let expect = [("toric2d 3", 18, 2), ("toric4d 2", 96, 6), ("tesseract 2", 33, 1), ("{5,4} 30", 30, 5), ("{7,7} 28", 28, 14)];
    let all = codes();
    for (name, n, k) in expect {
        let code = &all.iter().find(|(m, _)| m == name).unwrap().1;
        assert_eq!((code.n(), code.k()), (n, k), "{name}");
    }
}

#[test]
fn qubit_level_must_be_interior() {
    let c = build_toric_2d(3).unwrap();
    assert!(CssCode::from_complex(&c, 0).is_err());
    assert!(CssCode::from_complex(&c, 2).is_err());
}

#[test]
fn logical_bases_are_paired_and_nontrivial() {
    for (name, code) in codes() {
        let lb = code.logical_basis().unwrap();
        assert_eq!(lb.k(), code.k());
        let pairing = lb.pairing();
        for (i, row) in pairing.iter().enumerate() {
            for (j, &odd) in row.iter().enumerate() {
                assert_eq!(odd, i == j, "{name} pairing ({i},{j})");
            }
        }
        for t in [Pauli::X, Pauli::Z] {
            let stabilizers = Echelon::from_matrix(code.stabilizers_of(t));
            for op in lb.of(t) {
                assert!(code.syndrome(op, t).unwrap().is_zero(), "{name}: {t} logical is detected");
                assert!(!stabilizers.contains(op), "{name}: {t} logical is a stabilizer");
                assert!(code.is_logical_failure(op, t).unwrap());
            }
        }
        // Deterministic for a fixed input.
        let again = CssCode::from_complex(code.complex(), code.qubit_level()).unwrap();
        assert_eq!(again.logical_basis().unwrap(), lb);
    }
}

#[test]
fn tesseract_has_one_sheet_logical_of_weight_four() {
    let code = CssCode::from_complex(&build_tesseract(2).unwrap(), 2).unwrap();
    let lb = code.logical_basis().unwrap();
    assert_eq!(lb.k(), 1);
    let min = homcode::distance::brute_force_distance(&code, Pauli::Z, 4).unwrap();
    assert_eq!(min, Some(4));
}

#[test]
fn single_error_syndromes() {
    let toric = CssCode::from_complex(&build_toric_2d(4).unwrap(), 1).unwrap();
    for q in 0..toric.n() {
        let e = BitVector::from_indices(toric.n(), [q]);
        assert_eq!(toric.syndrome(&e, Pauli::Z).unwrap().weight(), 2);
        assert_eq!(toric.syndrome(&e, Pauli::X).unwrap().weight(), 2);
    }
    let four = CssCode::from_complex(&build_toric_4d(3).unwrap(), 2).unwrap();
    for q in 0..four.n() {
        let e = BitVector::from_indices(four.n(), [q]);
        assert_eq!(four.syndrome(&e, Pauli::Z).unwrap().weight(), 4);
    }
    assert!(toric.syndrome(&BitVector::zeros(toric.n()), Pauli::Z).unwrap().is_zero());
    assert!(matches!(toric.syndrome(&BitVector::zeros(5), Pauli::Z), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn failure_check_needs_a_zero_syndrome() {
    let code = CssCode::from_complex(&build_toric_2d(3).unwrap(), 1).unwrap();
    let e = BitVector::from_indices(code.n(), [0]);
    assert!(code.is_logical_failure(&e, Pauli::Z).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Random stabilizer products plus optional logicals are classified the
    /// same way by row reduction, by linear solving and by the pairing.
    #[test]
    fn failure_classification_agrees(seed in any::<u64>(), which in 0usize..4, add_logical in any::<bool>()) {
        use rand::{Rng, SeedableRng};
        let codes = codes();
        let (_, code) = &codes[[0, 1, 6, 8][which]];
        let mut rng = rand_xoshiro::Xoshiro256PlusPlus::seed_from_u64(seed);
        for t in [Pauli::X, Pauli::Z] {
            let stab = code.stabilizers_of(t);
            let mut op = BitVector::zeros(code.n());
            for r in 0..stab.rows() {
                if rng.gen_bool(0.3) {
                    op.xor_assign(&stab.row_vector(r));
                }
            }
            let lb = code.logical_basis().unwrap();
            if add_logical {
                op.xor_assign(&lb.of(t)[rng.gen_range(0..lb.k())]);
            }
            prop_assert!(code.syndrome(&op, t).unwrap().is_zero());
            let a = code.is_logical_failure(&op, t).unwrap();
            prop_assert_eq!(a, code.is_logical_failure_by_solve(&op, t).unwrap());
            prop_assert_eq!(a, lb.anticommutes(&op, t));
            prop_assert_eq!(a, add_logical);
        }
    }
}
