//! Brute-force reference computations used only by tests. Nothing here
//! calls into the flow code, the Gray-code oracle or the canonical form.

#![allow(dead_code)]

use lplab::Graph;

/// Plain adjacency masks; loops are dropped.
pub fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.order() <= 63);
    (0..g.order())
        .map(|v| {
            g.edges().iter().fold(0u64, |m, e| {
                if e.u == v {
                    m | 1 << e.v
                } else if e.v == v {
                    m | 1 << e.u
                } else {
                    m
                }
            })
        })
        .collect()
}

fn cut(adj: &[u64], a: u64) -> usize {
    let full = (1u64 << adj.len()) - 1;
    (0..adj.len()).filter(|&v| a >> v & 1 == 1).map(|v| (adj[v] & full & !a).count_ones() as usize).sum()
}

fn no_isolated(adj: &[u64], side: u64) -> bool {
    (0..adj.len()).filter(|&v| side >> v & 1 == 1).all(|v| adj[v] & side != 0)
}

/// `(cut value, side A)` over every bipartition with `0 ∈ A`; `pred`
/// filters `(A, B)` masks.
fn min_over(g: &Graph, pred: impl Fn(&[u64], u64, u64) -> bool) -> Option<usize> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let adj = masks(g);
    let full = (1u64 << n) - 1;
    let mut best: Option<usize> = None;
    let mut a = 1u64;
    while a < full {
        let b = full & !a;
        if pred(&adj, a, b) {
            let c = cut(&adj, a);
            best = Some(best.map_or(c, |x| x.min(c)));
        }
        a += 2;
    }
    best
}

pub fn degree(g: &Graph, v: usize) -> usize {
    masks(g)[v].count_ones() as usize + usize::from(g.has_loop(v))
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.order()).map(|v| degree(g, v)).min().unwrap()
}

pub fn xi(g: &Graph) -> Option<usize> {
    g.edges().iter().map(|e| degree(g, e.u) + degree(g, e.v) - 2).min()
}

pub fn lambda(g: &Graph) -> usize {
    min_over(g, |_, _, _| true).unwrap()
}

/// `None` encodes an infinite value.
pub fn lambda_prime(g: &Graph) -> Option<usize> {
    min_over(g, |adj, a, b| no_isolated(adj, a) && no_isolated(adj, b))
}

pub fn super_lambda(g: &Graph) -> bool {
    let l = lambda(g);
    l == min_degree(g) && min_over(g, |_, a, b| a.count_ones() >= 2 && b.count_ones() >= 2).is_none_or(|c| c > l)
}

pub fn super_lambda_prime(g: &Graph) -> Option<bool> {
    let lp = lambda_prime(g)?;
    let big = min_over(g, |adj, a, b| {
        a.count_ones() >= 3 && b.count_ones() >= 3 && no_isolated(adj, a) && no_isolated(adj, b)
    });
    Some(Some(lp) == xi(g) && big.is_none_or(|c| c > lp))
}

/// Isomorphism-class key: the lexicographically least adjacency bit
/// string over all `n!` relabelings.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let adj = masks(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let code: Vec<bool> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| adj[perm[i]] >> perm[j] & 1 == 1)
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Connected graphs on `n` vertices up to isomorphism, by brute force
/// over all labeled graphs.
pub fn brute_connected_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut seen = std::collections::HashSet::new();
    for bits in 0u64..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if n > 0 && g.is_connected() {
            seen.insert(brute_canonical(&g));
        }
    }
    seen.len()
}
