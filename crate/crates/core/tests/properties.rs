mod common;

use lplab::connectivity::restricted_edge_connectivity;
use lplab::constructors::{complete_graph, direct_product, emit_graph6, parse_graph6, total_graph, DirectProduct};
use lplab::{Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_order: usize, with_loops: bool) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        (
            prop::collection::vec(any::<bool>(), pairs),
            prop::collection::vec(prop::bool::weighted(if with_loops { 0.3 } else { 0.0 }), n),
        )
            .prop_map(move |(bits, loops)| {
                let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                let loops = loops.into_iter().enumerate().filter(|(_, b)| *b).map(|(v, _)| (v, v));
                Graph::from_edges(n, edges.chain(loops)).unwrap()
            })
    })
}

fn connected(max_order: usize) -> impl Strategy<Value = Graph> {
    graph(max_order, false).prop_filter("connected with an edge", |g| g.order() >= 2 && g.is_connected())
}

proptest! {
    #[test]
    fn handshake(g in graph(10, true)) {
        let total: usize = (0..g.order()).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.size() + g.loop_count());
    }

    #[test]
    fn cut_is_symmetric(g in graph(10, true), mask in any::<u64>()) {
        let n = g.order();
        prop_assume!(n >= 2);
        let side = VertexSet::from_mask(n, mask);
        prop_assume!(!side.is_empty() && side.len() < n);
        prop_assert_eq!(g.cut_size(&side).unwrap(), g.cut_size(&side.complement()).unwrap());
        prop_assert_eq!(g.cut_edges(&side).len(), g.cut_size(&side).unwrap());
    }

    #[test]
    fn product_degree_rule(g in graph(6, false), h in graph(5, true)) {
        let p = DirectProduct::new(&g, &h).unwrap();
        for x in 0..p.graph().order() {
            let pv = p.project(x).unwrap();
            let (u, v) = (pv.u, pv.v);
            prop_assert_eq!(p.graph().degree(x).unwrap(), g.degree(u).unwrap() * h.degree(v).unwrap());
        }
    }

    #[test]
    fn product_commutes_up_to_coordinate_swap(g in graph(5, false), h in graph(5, false)) {
        let gh = direct_product(&g, &h).unwrap();
        let hg = direct_product(&h, &g).unwrap();
        let (a, b) = (g.order(), h.order());
        // (u, v) at u*b + v goes to (v, u) at v*a + u
        let perm: Vec<usize> = (0..a * b).map(|x| (x % b) * a + x / b).collect();
        prop_assert_eq!(gh.relabel(&perm).unwrap(), hg);
    }

    #[test]
    fn graph6_round_trip(g in graph(12, false)) {
        let code = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&code).unwrap(), g);
    }

    #[test]
    fn product_edge_degrees(g in connected(6), n in 3usize..=5) {
        let xi = g.min_edge_degree().unwrap();
        let pk = direct_product(&g, &complete_graph(n).unwrap()).unwrap();
        prop_assert_eq!(pk.min_edge_degree().unwrap(), (n - 1) * xi + 2 * (n - 2));
        let pt = direct_product(&g, &total_graph(n).unwrap()).unwrap();
        prop_assert_eq!(pt.min_edge_degree().unwrap(), n * xi + 2 * (n - 1));
    }

    #[test]
    fn lambda_bounds(g in connected(9)) {
        let l = common::lambda(&g);
        prop_assert!(l <= common::min_degree(&g));
        if let Ok(lp) = restricted_edge_connectivity(&g) {
            if let Some(lp) = lp.finite() {
                prop_assert!(l as u64 <= lp);
                if g.order() >= 4 && !g.is_star() {
                    prop_assert!(lp <= g.min_edge_degree().unwrap() as u64);
                }
            }
        }
    }
}
