use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::flow::min_terminal_cut;
use super::witness::{keep_min, CutWitness};
use super::{ExtCount, Limits};

/// A minimum edge cut. Disconnected graphs get the component of vertex 0
/// against the rest (value 0). Flows run from vertex 0 to every other
/// vertex; among minimum cuts found, the least `side_a` wins.
pub fn minimum_edge_cut(g: &Graph, limits: &Limits) -> Result<CutWitness> {
    let n = g.order();
    if n < 2 {
        return Err(Error::Precondition("edge-connectivity needs order >= 2".into()));
    }
    let comps = g.components();
    if comps.len() > 1 {
        return CutWitness::from_side(g, comps[0].clone());
    }
    let root = VertexSet::from_iter(n, [0]);
    let mut best: Option<CutWitness> = None;
    for v in 1..n {
        limits.check()?;
        // best + 1 keeps every minimum-valued cut, independent of visiting order
        let limit = best.as_ref().map_or(usize::MAX, |b| b.value + 1);
        let cut = min_terminal_cut(g, &root, &VertexSet::from_iter(n, [v]), limit)?;
        if let Some(side) = cut.source_side {
            keep_min(&mut best, CutWitness::from_side(g, side)?);
        }
    }
    Ok(best.expect("order >= 2 yields at least one flow"))
}

/// `λ(G)`; 0 for disconnected graphs.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    minimum_edge_cut(g, &Limits::default()).map(|w| w.value)
}

/// Moves every non-protected vertex that has no neighbor on its own side to
/// the other side, until none remain. On a connected graph each move
/// strictly lowers the cut, so the result never exceeds the input.
pub fn repair_restricted_side(g: &Graph, side_a: &VertexSet, keep_a: &VertexSet, keep_b: &VertexSet) -> VertexSet {
    let mut a = side_a.clone();
    loop {
        let moved = (0..g.order()).find(|&v| {
            let in_a = a.contains(v);
            let protected = if in_a { keep_a.contains(v) } else { keep_b.contains(v) };
            !protected
                && !g.simple_neighbors(v).is_empty()
                && g.simple_neighbors(v).iter().all(|&w| a.contains(w) != in_a)
        });
        match moved {
            Some(v) if a.contains(v) => {
                a.remove(v);
            }
            Some(v) => {
                a.insert(v);
            }
            None => return a,
        }
    }
}

fn endpoints(n: usize, e: crate::graph::Edge) -> VertexSet {
    VertexSet::from_iter(n, [e.u, e.v])
}

/// A minimum restricted edge cut, or `None` when `λ′ = ∞` (no two
/// vertex-disjoint edges).
///
/// For every pair of vertex-disjoint edges the endpoint pairs are
/// contracted and a minimum terminal cut is computed; the cut is repaired
/// so that no side keeps an isolated vertex. Any restricted cut separates
/// some such pair, and every repaired cut is restricted, so the minimum
/// over pairs is `λ′`.
pub fn minimum_restricted_edge_cut(g: &Graph, limits: &Limits) -> Result<Option<CutWitness>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let edges = g.edges();
    let mut best: Option<CutWitness> = None;
    for (i, &e1) in edges.iter().enumerate() {
        limits.check()?;
        let s = endpoints(n, e1);
        for &e2 in &edges[i + 1..] {
            if e1.touches(&e2) {
                continue;
            }
            let t = endpoints(n, e2);
            let limit = best.as_ref().map_or(usize::MAX, |b| b.value + 1);
            let cut = min_terminal_cut(g, &s, &t, limit)?;
            let Some(side) = cut.source_side else { continue };
            let repaired = repair_restricted_side(g, &side, &s, &t);
            let after = g.crossing_count(&repaired);
            assert!(after <= cut.value, "cut repair increased the cut from {} to {after}", cut.value);
            let w = CutWitness::from_side(g, repaired)?;
            debug_assert!(w.is_restricted(g));
            keep_min(&mut best, w);
        }
    }
    Ok(best)
}

/// `λ′(G)`.
pub fn restricted_edge_connectivity(g: &Graph) -> Result<ExtCount> {
    Ok(match minimum_restricted_edge_cut(g, &Limits::default())? {
        Some(w) => ExtCount::from(w.value),
        None => ExtCount::Infinite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::CutKind;
    use crate::constructors::{complete_graph, cycle_graph, direct_product, path_graph, star_graph};

    #[test]
    fn lambda_examples() {
        let k2k5 = direct_product(&complete_graph(2).unwrap(), &complete_graph(5).unwrap()).unwrap();
        assert_eq!(edge_connectivity(&k2k5).unwrap(), 4);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(edge_connectivity(&two).unwrap(), 0);
        for k in 3..9 {
            assert_eq!(edge_connectivity(&cycle_graph(k).unwrap()).unwrap(), 2);
        }
        assert!(edge_connectivity(&Graph::empty(1)).is_err());
    }

    #[test]
    fn lambda_prime_examples() {
        let k2k5 = direct_product(&complete_graph(2).unwrap(), &complete_graph(5).unwrap()).unwrap();
        assert_eq!(restricted_edge_connectivity(&k2k5).unwrap(), ExtCount::Finite(6));
        assert_eq!(restricted_edge_connectivity(&star_graph(3).unwrap()).unwrap(), ExtCount::Infinite);
        assert_eq!(restricted_edge_connectivity(&complete_graph(3).unwrap()).unwrap(), ExtCount::Infinite);
        let p4 = path_graph(4).unwrap();
        let w = minimum_restricted_edge_cut(&p4, &Limits::default()).unwrap().unwrap();
        assert_eq!((w.value, w.kind), (1, CutKind::EdgeIsolating));
        assert_eq!(w.side_a().to_vec(), vec![0, 1]);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(restricted_edge_connectivity(&two).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn repair_moves_isolated_vertices() {
        let p5 = path_graph(5).unwrap();
        let a = VertexSet::from_iter(5, [0, 1, 3]);
        let keep_a = VertexSet::from_iter(5, [0, 1]);
        let keep_b = VertexSet::from_iter(5, [4]);
        // 2 is isolated in B and joins A; then 3 and 4 hold each other
        let fixed = repair_restricted_side(&p5, &a, &keep_a, &keep_b);
        assert_eq!(fixed.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!((p5.crossing_count(&a), p5.crossing_count(&fixed)), (3, 1));
    }
}
