use monodromy_core::group::{self, conjugation_action, DEFAULT_LIMIT};
use monodromy_core::lattice::{phi_generators, span_order, span_order_smith};
use monodromy_core::triple::enumerate_triples;
use monodromy_core::{Dessin, Triple};

fn mat_mul(a: [[u64; 2]; 2], b: [[u64; 2]; 2], n: u64) -> [[u64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % n;
        }
    }
    c
}

#[test]
fn theorem_holds_beyond_the_sweep_range() {
    for (a, b, c) in [
        (1, 2, 28),
        (5, 13, 19),
        (3, 7, 30),
        (4, 9, 27),
        (11, 12, 17),
    ] {
        let t = Triple::reduce(a, b, c).unwrap();
        let r = group::verify_theorem(&t, DEFAULT_LIMIT).unwrap();
        assert!(r.all_pass, "{t}: {r:?}");
        assert_eq!(r.order_g, 3 * t.n() * t.n() / t.alpha());
    }
}

#[test]
fn conjugation_action_cubes_to_identity_when_coordinates_are_unique() {
    for t in enumerate_triples(25).into_iter().filter(|t| t.alpha() == 1) {
        let n = t.n();
        let m = conjugation_action(&t).unwrap();
        let cube = mat_mul(mat_mul(m, m, n), m, n);
        assert_eq!(cube, [[1 % n, 0], [0, 1 % n]], "{t}");
    }
}

#[test]
fn dessin_stats_serialize() {
    let s = Dessin::new(&Triple::reduce(2, 3, 5).unwrap())
        .stats()
        .unwrap();
    let v = serde_json::to_value(&s).unwrap();
    assert_eq!(v["genus"], 2);
    assert_eq!(
        v["passport"]["faces"],
        serde_json::json!([10, 5, 5, 2, 2, 2, 2, 2])
    );
}

#[test]
fn span_routes_agree_and_match_triple_order() {
    for t in enumerate_triples(45) {
        let (v1, v2) = phi_generators(&t);
        let fast = span_order_smith(&v1, &v2).unwrap();
        assert_eq!(fast, span_order(&v1, &v2).unwrap(), "{t}");
        assert_eq!(fast, t.predicted_orders().0);
    }
}

#[test]
fn dessin_of_reordered_triple_has_same_group_order() {
    let base = Triple::reduce(1, 3, 8).unwrap();
    let orders: Vec<u64> = base
        .orderings()
        .iter()
        .map(|t| group::verify_theorem(t, DEFAULT_LIMIT).unwrap().order_g)
        .collect();
    assert!(orders.iter().all(|&o| o == orders[0]));
}
