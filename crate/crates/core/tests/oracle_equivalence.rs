mod common;

use lplab::connectivity::{
    edge_connectivity, is_super_lambda, is_super_lambda_prime, max_flow_unit, minimum_edge_cut,
    minimum_restricted_edge_cut, restricted_edge_connectivity, ExtCount, Limits,
};
use lplab::constructors::erdos_renyi;
use lplab::{Graph, VertexSet};

fn random_corpus() -> Vec<Graph> {
    (0..1000u64)
        .map(|seed| {
            let n = 2 + (seed % 13) as usize;
            let p = [0.25, 0.4, 0.55, 0.7, 0.85][(seed / 13 % 5) as usize];
            erdos_renyi(n, p, seed).unwrap()
        })
        .collect()
}

#[test]
fn flows_agree_with_brute_force_on_random_graphs() {
    let lim = Limits::default();
    let mut connected = 0;
    for (i, g) in random_corpus().iter().enumerate() {
        assert_eq!(edge_connectivity(g).unwrap(), common::lambda(g), "graph {i}");
        let w = minimum_edge_cut(g, &lim).unwrap();
        assert!(w.validate(g).is_ok(), "graph {i}");
        if !g.is_connected() {
            continue;
        }
        connected += 1;
        let want = common::lambda_prime(g).map_or(ExtCount::Infinite, ExtCount::from);
        assert_eq!(restricted_edge_connectivity(g).unwrap(), want, "graph {i}");
        if let Some(w) = minimum_restricted_edge_cut(g, &lim).unwrap() {
            assert!(w.validate(g).is_ok() && w.is_restricted(g), "graph {i}");
        }
        if g.order() >= 3 {
            assert_eq!(is_super_lambda(g, &lim).unwrap().holds, common::super_lambda(g), "graph {i}");
        }
        if let Some(want) = common::super_lambda_prime(g) {
            assert_eq!(is_super_lambda_prime(g, &lim).unwrap().holds, want, "graph {i}");
        }
    }
    assert!(connected > 400, "corpus too sparse: {connected}");
}

#[test]
fn flow_certified_super_agrees_with_oracle() {
    let oracle = Limits::default();
    let flows = Limits::with_oracle_order(1);
    for seed in 0..200u64 {
        let g = erdos_renyi(6 + (seed % 7) as usize, 0.6, 10_000 + seed).unwrap();
        if !g.is_connected() || restricted_edge_connectivity(&g).unwrap().is_infinite() {
            continue;
        }
        let a = is_super_lambda_prime(&g, &oracle).unwrap();
        let b = is_super_lambda_prime(&g, &flows).unwrap();
        assert_eq!(a.holds, b.holds, "seed {seed}");
    }
}

fn brute_st_cut(g: &Graph, s: usize, t: usize) -> usize {
    let adj = common::masks(g);
    let n = g.order();
    let full = (1u64 << n) - 1;
    (0..=full)
        .filter(|a| a >> s & 1 == 1 && a >> t & 1 == 0)
        .map(|a| (0..n).filter(|&v| a >> v & 1 == 1).map(|v| (adj[v] & full & !a).count_ones() as usize).sum())
        .min()
        .unwrap()
}

#[test]
fn menger_symmetry() {
    for seed in 0..60u64 {
        let n = 4 + (seed % 7) as usize;
        let g = erdos_renyi(n, 0.5, 500 + seed).unwrap();
        let (s, t) = (0, n - 1);
        let one = |v: usize| VertexSet::from_iter(n, [v]);
        let st = max_flow_unit(&g, &one(s), &one(t)).unwrap();
        let ts = max_flow_unit(&g, &one(t), &one(s)).unwrap();
        assert_eq!(st, ts, "seed {seed}");
        assert_eq!(st, brute_st_cut(&g, s, t), "seed {seed}");
    }
}
