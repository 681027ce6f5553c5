//! Fixed values, each computed first by the brute-force reference in
//! `common` and then frozen here.

mod common;

use lplab::connectivity::{
    edge_connectivity, is_lambda_prime_optimal, is_super_lambda, is_super_lambda_prime, lambda_prime_oracle,
    restricted_edge_connectivity, ExtCount, Limits,
};
use lplab::constructors::{
    barbell_graph, complete_bipartite_graph, complete_graph, cycle_graph, direct_product, enumerate_connected_graphs,
    path_graph, petersen_graph, star_graph, total_graph, DirectProduct,
};
use lplab::{Graph, VertexSet};

fn lim() -> Limits {
    Limits::default()
}

fn ext(v: Option<usize>) -> ExtCount {
    v.map_or(ExtCount::Infinite, ExtCount::from)
}

fn k2_k5() -> Graph {
    direct_product(&complete_graph(2).unwrap(), &complete_graph(5).unwrap()).unwrap()
}

#[test]
fn degrees_and_edge_degrees() {
    let t5 = total_graph(5).unwrap();
    assert_eq!(t5.degree(3).unwrap(), 5);
    assert_eq!(common::degree(&t5, 3), 5);

    let p = k2_k5();
    assert_eq!(p.min_edge_degree().unwrap(), 6);
    assert_eq!(common::xi(&p), Some(6));

    let pet = petersen_graph();
    assert_eq!(pet.min_edge_degree().unwrap(), 4);
    assert_eq!(common::xi(&pet), Some(4));
}

#[test]
fn layer_pair_cuts() {
    let p = k2_k5();
    // (0,0) ~ (1,1): an adjacent pair
    let adjacent = VertexSet::from_iter(10, [0, 6]);
    assert_eq!(p.cut_size(&adjacent).unwrap(), 6);
    // (0,0), (0,1): same layer, not adjacent
    let same_side = VertexSet::from_iter(10, [0, 1]);
    assert_eq!(p.cut_size(&same_side).unwrap(), 8);
}

#[test]
fn contraction_of_opposite_cycle_vertices() {
    let c4 = cycle_graph(4).unwrap();
    let (h, map) = c4.contract(&[VertexSet::from_iter(4, [0, 2])]).unwrap();
    assert_eq!(h.order(), 3);
    assert_eq!(map[0], map[2]);
}

#[test]
fn edge_connectivity_values() {
    let p = k2_k5();
    assert_eq!(edge_connectivity(&p).unwrap(), 4);
    assert_eq!(common::lambda(&p), 4);
    assert_eq!(edge_connectivity(&cycle_graph(7).unwrap()).unwrap(), 2);
    let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(edge_connectivity(&split).unwrap(), 0);
}

#[test]
fn restricted_values() {
    let cases: Vec<(Graph, ExtCount)> = vec![
        (k2_k5(), ExtCount::Finite(6)),
        (star_graph(3).unwrap(), ExtCount::Infinite),
        (complete_graph(4).unwrap(), ExtCount::Finite(4)),
        (petersen_graph(), ExtCount::Finite(4)),
        (direct_product(&cycle_graph(4).unwrap(), &complete_graph(5).unwrap()).unwrap(), ExtCount::Finite(14)),
        (barbell_graph(3).unwrap(), ExtCount::Finite(1)),
    ];
    for (g, want) in cases {
        assert_eq!(ext(common::lambda_prime(&g)), want);
        assert_eq!(restricted_edge_connectivity(&g).unwrap(), want);
        assert_eq!(lambda_prime_oracle(&g, &lim()).unwrap(), want);
    }
}

#[test]
fn super_lambda_values() {
    let cases = [(k2_k5(), true), (cycle_graph(5).unwrap(), false), (complete_graph(4).unwrap(), true)];
    for (g, want) in cases {
        assert_eq!(common::super_lambda(&g), want);
        assert_eq!(is_super_lambda(&g, &lim()).unwrap().holds, want);
    }
}

#[test]
fn super_lambda_prime_values() {
    let k2_t3 = direct_product(&complete_graph(2).unwrap(), &total_graph(3).unwrap()).unwrap();
    let cases = [(k2_k5(), true), (k2_t3, true), (cycle_graph(6).unwrap(), false)];
    for (g, want) in cases {
        assert_eq!(common::super_lambda_prime(&g), Some(want));
        let v = is_super_lambda_prime(&g, &lim()).unwrap();
        assert_eq!(v.holds, want);
        if let Some(w) = v.witness {
            assert!(w.validate(&g).is_ok());
        }
    }
}

#[test]
fn lambda_prime_optimality_values() {
    assert!(is_lambda_prime_optimal(&cycle_graph(4).unwrap(), &lim()).unwrap());
    assert!(is_lambda_prime_optimal(&petersen_graph(), &lim()).unwrap());
    assert!(!is_lambda_prime_optimal(&barbell_graph(3).unwrap(), &lim()).unwrap());
    assert!(is_lambda_prime_optimal(&star_graph(3).unwrap(), &lim()).is_err());
}

#[test]
fn product_shapes() {
    let p = k2_k5();
    assert_eq!((p.order(), p.size()), (10, 20));
    assert!((0..10).all(|v| p.degree(v).unwrap() == 4));

    let k2k2 = direct_product(&complete_graph(2).unwrap(), &complete_graph(2).unwrap()).unwrap();
    let comps = k2k2.components();
    assert_eq!(comps.len(), 2);
    assert!(comps.iter().all(|c| c.len() == 2));

    let c4t3 = direct_product(&cycle_graph(4).unwrap(), &total_graph(3).unwrap()).unwrap();
    assert!((0..12).all(|v| c4t3.degree(v).unwrap() == 6));

    let pet = petersen_graph();
    assert_eq!((pet.order(), pet.size()), (10, 15));
    assert!((0..10).all(|v| pet.degree(v).unwrap() == 3));

    let dp = DirectProduct::new(&complete_graph(2).unwrap(), &complete_graph(5).unwrap()).unwrap();
    assert_eq!(dp.layer(0).unwrap().to_vec(), vec![0, 1, 2, 3, 4]);
}

#[test]
fn layers_cross_exactly_along_edges() {
    let c4 = cycle_graph(4).unwrap();
    let dp = DirectProduct::new(&c4, &complete_graph(5).unwrap()).unwrap();
    let g = dp.graph();
    for u1 in 0..4 {
        for u2 in 0..4 {
            if u1 == u2 {
                continue;
            }
            let (l1, l2) = (dp.layer(u1).unwrap(), dp.layer(u2).unwrap());
            let crossing = l1.iter().any(|a| l2.iter().any(|b| g.has_edge(a, b)));
            assert_eq!(crossing, c4.has_edge(u1, u2), "{u1} {u2}");
        }
    }
}

#[test]
fn connected_graph_counts() {
    let frozen = [1usize, 1, 2, 6, 21, 112];
    for (k, &want) in (1..=6).zip(&frozen) {
        assert_eq!(common::brute_connected_classes(k), want, "brute k={k}");
        assert_eq!(enumerate_connected_graphs(k, 7).unwrap().len(), want, "k={k}");
    }
    assert_eq!(enumerate_connected_graphs(7, 7).unwrap().len(), 853);
}

#[test]
fn product_edge_degree_formula() {
    let graphs = [
        cycle_graph(4).unwrap(),
        path_graph(4).unwrap(),
        star_graph(3).unwrap(),
        complete_bipartite_graph(2, 3).unwrap(),
        petersen_graph(),
    ];
    for g in &graphs {
        let xi = g.min_edge_degree().unwrap();
        for n in 3..=5 {
            let pk = direct_product(g, &complete_graph(n).unwrap()).unwrap();
            assert_eq!(common::xi(&pk), Some((n - 1) * xi + 2 * (n - 2)));
            let pt = direct_product(g, &total_graph(n).unwrap()).unwrap();
            assert_eq!(common::xi(&pt), Some(n * xi + 2 * (n - 1)));
        }
    }
}
