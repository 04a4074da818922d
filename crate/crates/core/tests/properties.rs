mod support;

use cozero::analysis::{chromatic_number, clique_number, diameter, girth, is_outerplanar, is_planar};
use cozero::expr::parse_ring_expr;
use cozero::graph::{cozero_graph, cozero_graph_ideal, cozero_graph_ideal_direct, Graph};
use cozero::ring::{enumerate_ideals, ideal_generated, quotient_ring, FiniteRing, Ideal};
use proptest::prelude::*;
use support::kuratowski::brute_force_planar;
use support::oracle;

const POOL: &[&str] = &[
    "Z(2)",
    "Z(8)",
    "Z(12)",
    "Z(18)",
    "Z(30)",
    "Z(36)",
    "GF(4)",
    "GF(2,[1,0,1])",
    "GF(3,[0,0,1])",
    "cat(Z2xy)",
    "cat(Z4x)",
    "prod(Z(2),Z(9))",
    "prod(Z(4),GF(4))",
    "prod(Z(2),Z(2),Z(3))",
    "prod(cat(Z2xy),Z(3))",
];

fn ring(i: usize) -> FiniteRing {
    parse_ring_expr(POOL[i % POOL.len()]).unwrap().build().unwrap()
}

fn proper_ideal(r: &FiniteRing, pick: usize) -> Ideal {
    let proper: Vec<Ideal> = enumerate_ideals(r).unwrap().into_iter().filter(Ideal::is_proper).collect();
    proper[pick % proper.len()].clone()
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (0usize..=7).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, all.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(i in 0usize..64, a in 0usize..1024, b in 0usize..1024, c in 0usize..1024) {
        let r = ring(i);
        let n = r.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(r.add(a, b), r.add(b, a));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.add(a, r.zero()), a);
        prop_assert_eq!(r.mul(a, r.one()), a);
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
    }

    #[test]
    fn generated_ideal_is_closed(i in 0usize..64, g in proptest::collection::vec(0usize..1024, 0..3)) {
        let r = ring(i);
        let gens: Vec<usize> = g.iter().map(|x| x % r.order()).collect();
        let id = ideal_generated(&r, &gens);
        for &x in id.members() {
            for &y in id.members() {
                prop_assert!(id.contains(r.sub(x, y)));
            }
            for s in r.elements() {
                prop_assert!(id.contains(r.mul(s, x)));
            }
        }
        prop_assert!(gens.iter().all(|&x| id.contains(x)));
    }

    #[test]
    fn quotient_projection_is_a_homomorphism(i in 0usize..64, pick in 0usize..64, a in 0usize..1024, b in 0usize..1024) {
        let r = ring(i);
        let id = proper_ideal(&r, pick);
        let q = quotient_ring(&r, &id).unwrap();
        let (a, b) = (a % r.order(), b % r.order());
        let p = &q.projection;
        prop_assert_eq!(q.ring.order() * id.len(), r.order());
        prop_assert_eq!(p[r.add(a, b)], q.ring.add(p[a], p[b]));
        prop_assert_eq!(p[r.mul(a, b)], q.ring.mul(p[a], p[b]));
    }

    #[test]
    fn fast_path_matches_definition(i in 0usize..64, pick in 0usize..64) {
        let r = ring(i);
        let id = proper_ideal(&r, pick);
        let fast = cozero_graph_ideal(&r, &id).unwrap();
        prop_assert_eq!(&fast, &cozero_graph_ideal_direct(&r, &id).unwrap());
        prop_assert!(oracle::same_graph(&fast, &oracle::cozero_ideal(&r, &id)));
    }

    #[test]
    fn zero_ideal_gives_cozero_graph(i in 0usize..64) {
        let r = ring(i);
        prop_assert_eq!(cozero_graph(&r).unwrap(), cozero_graph_ideal(&r, &Ideal::zero(&r)).unwrap());
    }

    #[test]
    fn invariants_match_brute_force(g in small_graph()) {
        let n = g.vertex_count();
        let e = g.edges();
        prop_assert_eq!(diameter(&g), oracle::diameter(n, e));
        prop_assert_eq!(girth(&g), oracle::girth(n, e));
        let omega = clique_number(&g).unwrap();
        let chi = chromatic_number(&g).unwrap();
        prop_assert_eq!(omega, oracle::clique_number(n, e));
        prop_assert_eq!(chi, oracle::chromatic_number(n, e));
        prop_assert!(omega <= chi);
        prop_assert_eq!(is_planar(&g).unwrap(), brute_force_planar(n, e));
    }

    #[test]
    fn outerplanar_iff_apex_planar(g in small_graph()) {
        let n = g.vertex_count();
        let mut edges = g.edges().to_vec();
        edges.extend((0..n).map(|v| (v, n)));
        prop_assert_eq!(is_outerplanar(&g).unwrap(), brute_force_planar(n + 1, &edges));
    }

    #[test]
    fn ring_graph_clique_below_chromatic(i in 0usize..64, pick in 0usize..64) {
        let r = ring(i);
        let g = cozero_graph_ideal(&r, &proper_ideal(&r, pick)).unwrap();
        prop_assert!(clique_number(&g).unwrap() <= chromatic_number(&g).unwrap());
    }
}
