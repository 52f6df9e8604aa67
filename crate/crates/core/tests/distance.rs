mod common;

use std::collections::{HashSet, VecDeque};

use homcode::code::{CssCode, LogicalBasis, Pauli};
use homcode::complex::{build_rotated_toric, build_tesseract, build_toric_2d, build_toric_4d, semi_hyperbolic};
use homcode::coxeter::{build_constant_distance_surface, DEFAULT_MAX_COSETS};
use homcode::distance::{brute_force_distance, count_min_weight_logicals, count_with_cap, distance};
use homcode::gf2::BitVector;
use homcode::Error;

/// Endpoints of every qubit in the graph of the checks detecting type `t`.
fn check_graph(code: &CssCode, t: Pauli) -> (usize, Vec<(usize, usize)>) {
    let h = code.checks_for(t).transpose();
    let ends = (0..code.n())
        .map(|q| match h.row(q) {
            [u, v] => (*u, *v),
            other => panic!("qubit {q} touches {} checks", other.len()),
        })
        .collect();
    (code.checks_for(t).rows(), ends)
}

/// Every simple cycle with exactly `len` edges that is a nontrivial logical
/// of type `t`, as sorted edge lists. Exhaustive DFS from each start vertex,
/// visiting only larger vertices, pruned by BFS distance back to the start.
fn nontrivial_cycles(code: &CssCode, lb: &LogicalBasis, t: Pauli, len: usize) -> HashSet<Vec<usize>> {
    let (nodes, ends) = check_graph(code, t);
    let mut adj = vec![Vec::new(); nodes];
    for (e, &(u, v)) in ends.iter().enumerate() {
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut found = HashSet::new();
    for start in 0..nodes {
        let mut dist = vec![usize::MAX; nodes];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in &adj[x] {
                if y >= start && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let mut on_path = vec![false; nodes];
        let mut edges = Vec::new();
        dfs(start, start, len, &adj, &dist, &mut on_path, &mut edges, &mut |cycle| {
            let mut sorted = cycle.to_vec();
            sorted.sort_unstable();
            if found.contains(&sorted) {
                return;
            }
            let op = BitVector::from_indices(code.n(), sorted.iter().copied());
            if lb.anticommutes(&op, t) {
                found.insert(sorted);
            }
        });
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    start: usize,
    x: usize,
    len: usize,
    adj: &[Vec<(usize, usize)>],
    dist: &[usize],
    on_path: &mut [bool],
    edges: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    for &(y, e) in &adj[x] {
        if edges.last() == Some(&e) || y < start {
            continue;
        }
        if y == start {
            if edges.len() + 1 == len {
                edges.push(e);
                visit(edges);
                edges.pop();
            }
            continue;
        }
        if on_path[y] || dist[y] == usize::MAX || edges.len() + 1 + dist[y] > len {
            continue;
        }
        on_path[y] = true;
        edges.push(e);
        dfs(start, y, len, adj, dist, on_path, edges, visit);
        edges.pop();
        on_path[y] = false;
    }
}

fn both(code: &CssCode) -> [(usize, usize); 2] {
    let lb = code.logical_basis().unwrap();
    [count_min_weight_logicals(code, lb, Pauli::Z).unwrap(), count_min_weight_logicals(code, lb, Pauli::X).unwrap()]
}

#[test]
fn matches_brute_force_on_small_codes() {
    let mut codes = vec![
        CssCode::from_complex(&build_toric_2d(3).unwrap(), 1).unwrap(),
        CssCode::from_complex(&build_rotated_toric(4).unwrap(), 1).unwrap(),
        common::hyperbolic(5, 4, 30),
        common::hyperbolic(7, 7, 28),
        common::hyperbolic(5, 5, 40),
    ];
    codes.push(CssCode::from_complex(&build_toric_2d(4).unwrap(), 1).unwrap());
    for code in &codes {
        let lb = code.logical_basis().unwrap();
        for t in [Pauli::Z, Pauli::X] {
            let (d, witness) = distance(code, lb, t).unwrap();
            assert_eq!(brute_force_distance(code, t, d).unwrap(), Some(d), "n={} {t}", code.n());
            assert_eq!(witness.weight(), d);
            assert!(code.syndrome(&witness, t).unwrap().is_zero());
            assert!(code.is_logical_failure(&witness, t).unwrap());
        }
    }
}

#[test]
fn counts_match_cycle_enumeration() {
    for code in [
        CssCode::from_complex(&build_toric_2d(4).unwrap(), 1).unwrap(),
        common::hyperbolic(5, 4, 30),
        common::hyperbolic(5, 4, 160),
        common::hyperbolic(5, 5, 40),
        common::hyperbolic(5, 5, 80),
        common::hyperbolic(7, 7, 28),
    ] {
        let lb = code.logical_basis().unwrap();
        for (t, (d, count)) in [Pauli::Z, Pauli::X].into_iter().zip(both(&code)) {
            assert_eq!(nontrivial_cycles(&code, lb, t, d).len(), count, "n={} {t}", code.n());
            assert!(nontrivial_cycles(&code, lb, t, d - 1).is_empty());
        }
    }
}

#[test]
fn toric_code_has_two_l_minimum_loops() {
    for l in [3, 4, 5] {
        let code = CssCode::from_complex(&build_toric_2d(l).unwrap(), 1).unwrap();
        assert_eq!(both(&code), [(l, 2 * l), (l, 2 * l)]);
    }
}

#[test]
fn catalogue_counts() {
    let expected = [
        ((5, 4, 30), [(3, 10), (4, 75)]),
        ((5, 4, 160), [(8, 500), (6, 320)]),
        ((5, 4, 360), [(8, 90), (8, 5670)]),
        ((5, 5, 40), [(4, 40), (4, 40)]),
        ((5, 5, 80), [(5, 160), (5, 160)]),
        ((5, 5, 150), [(6, 500), (6, 500)]),
        ((7, 7, 28), [(3, 56), (3, 56)]),
    ];
    for ((r, s, n), counts) in expected {
        assert_eq!(both(&common::hyperbolic(r, s, n)), counts, "{{{r},{s}}} n={n}");
    }
}

/// Largest catalogued {5,4} surface: the count is checked against the
/// independent cycle enumeration rather than a quoted figure.
#[test]
fn largest_five_four_counts_agree_with_enumeration() {
    let code = common::hyperbolic(5, 4, 1800);
    let lb = code.logical_basis().unwrap();
    let [(dz, nz), (dx, nx)] = both(&code);
    assert_eq!((dz, dx), (10, 10));
    assert_eq!(nontrivial_cycles(&code, lb, Pauli::Z, 10).len(), nz);
    assert_eq!(nontrivial_cycles(&code, lb, Pauli::X, 10).len(), nx);
    assert_eq!((nz, nx), (180, 31320));
}

#[test]
fn semi_hyperbolic_distances() {
    let base = common::hyperbolic(5, 4, 160).complex().dual();
    for (l, dz, dx) in [(1, 6, 8), (2, 12, 14), (3, 18, 20)] {
        let code = CssCode::from_complex(&semi_hyperbolic(&base, l).unwrap(), 1).unwrap();
        let lb = code.logical_basis().unwrap();
        assert_eq!(code.k(), 18);
        assert_eq!(distance(&code, lb, Pauli::Z).unwrap().0, dz, "l={l}");
        assert_eq!(distance(&code, lb, Pauli::X).unwrap().0, dx, "l={l}");
    }
}

#[test]
fn constant_distance_family_stays_short() {
    for l in [2, 3] {
        let code = CssCode::from_complex(&build_constant_distance_surface(6, l, DEFAULT_MAX_COSETS).unwrap(), 1).unwrap();
        let lb = code.logical_basis().unwrap();
        let d = distance(&code, lb, Pauli::Z).unwrap().0.min(distance(&code, lb, Pauli::X).unwrap().0);
        assert!(d <= 4, "L={l}: d={d}");
    }
}

#[test]
fn four_dimensional_distance_by_brute_force() {
    for c in [build_toric_4d(2).unwrap(), build_tesseract(2).unwrap()] {
        let code = CssCode::from_complex(&c, 2).unwrap();
        for t in [Pauli::Z, Pauli::X] {
            assert_eq!(brute_force_distance(&code, t, 4).unwrap(), Some(4));
        }
    }
}

#[test]
fn errors() {
    let four = CssCode::from_complex(&build_toric_4d(2).unwrap(), 2).unwrap();
    assert!(distance(&four, four.logical_basis().unwrap(), Pauli::Z).is_err());
    let code = common::hyperbolic(5, 4, 360);
    let lb = code.logical_basis().unwrap();
    assert!(matches!(count_with_cap(&code, lb, Pauli::X, 100), Err(Error::EnumerationCap { cap: 100, .. })));
    assert!(brute_force_distance(&code, Pauli::Z, 8).is_err());
}
