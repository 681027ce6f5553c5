use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A vertex `(u, v)` of `G1 x G2`, stored at flat index `u * |V(G2)| + v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertex {
    pub u: Vertex,
    pub v: Vertex,
}

/// The direct product `G1 x G2` together with its coordinate layout.
///
/// `(u1, v1) ~ (u2, v2)` iff `u1 u2 ∈ E(G1)` and `v1 v2 ∈ E(G2)`, where a loop
/// in `G2` makes `v ~ v`. `G1` must be loop-free, so the product is too. The
/// `G2`-layer over `u` is the contiguous range `u*|V(G2)| .. (u+1)*|V(G2)|`.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    graph: Graph,
    left_order: usize,
    right_order: usize,
}

impl DirectProduct {
    pub fn new(left: &Graph, right: &Graph) -> Result<Self> {
        if left.order() == 0 || right.order() == 0 {
            return Err(Error::Precondition("direct product factors must be nonempty".into()));
        }
        if left.has_loops() {
            return Err(Error::LoopNotAllowed("first factor of a direct product".into()));
        }
        let (n1, n2) = (left.order(), right.order());
        let mut edges = Vec::new();
        for e in left.edges() {
            for v1 in 0..n2 {
                for v2 in right.neighbors(v1).iter() {
                    // (e.u, v1) -- (e.v, v2); each unordered product edge arises once
                    edges.push((e.u * n2 + v1, e.v * n2 + v2));
                }
            }
        }
        Ok(DirectProduct { graph: Graph::from_edges(n1 * n2, edges)?, left_order: n1, right_order: n2 })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn left_order(&self) -> usize {
        self.left_order
    }

    pub fn right_order(&self) -> usize {
        self.right_order
    }

    pub fn flat_index(&self, p: ProductVertex) -> Result<Vertex> {
        if p.u >= self.left_order || p.v >= self.right_order {
            return Err(Error::VertexOutOfRange { vertex: p.u.max(p.v), order: self.left_order.max(self.right_order) });
        }
        Ok(p.u * self.right_order + p.v)
    }

    /// Recovers `(p1(x), p2(x))`.
    pub fn project(&self, flat: Vertex) -> Result<ProductVertex> {
        if flat >= self.graph.order() {
            return Err(Error::VertexOutOfRange { vertex: flat, order: self.graph.order() });
        }
        Ok(ProductVertex { u: flat / self.right_order, v: flat % self.right_order })
    }

    /// The `G2`-layer above `u`.
    pub fn layer(&self, u: Vertex) -> Result<VertexSet> {
        if u >= self.left_order {
            return Err(Error::VertexOutOfRange { vertex: u, order: self.left_order });
        }
        let base = u * self.right_order;
        Ok(VertexSet::from_iter(self.graph.order(), base..base + self.right_order))
    }

    /// Union of the layers above every `u` in `s` (a set over `V(G1)`).
    pub fn layers(&self, s: &VertexSet) -> Result<VertexSet> {
        let mut out = VertexSet::new(self.graph.order());
        for u in s.iter() {
            out = out.union(&self.layer(u)?);
        }
        Ok(out)
    }
}

/// `G1 x G2` on flat indices `u * |V(G2)| + v`.
pub fn direct_product(left: &Graph, right: &Graph) -> Result<Graph> {
    DirectProduct::new(left, right).map(DirectProduct::into_graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete_graph, cycle_graph, total_graph};

    #[test]
    fn k2_times_k5() {
        let g = direct_product(&complete_graph(2).unwrap(), &complete_graph(5).unwrap()).unwrap();
        assert_eq!((g.order(), g.size()), (10, 20));
        assert!((0..10).all(|v| g.degree(v).unwrap() == 4));
        assert!(!g.has_loops());
    }

    #[test]
    fn bipartite_factors_disconnect() {
        let k2 = complete_graph(2).unwrap();
        let g = direct_product(&k2, &k2).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn degree_rule_with_loops() {
        let g = direct_product(&cycle_graph(4).unwrap(), &total_graph(3).unwrap()).unwrap();
        assert!((0..12).all(|v| g.degree(v).unwrap() == 6));
        assert!(!g.has_loops());
    }

    #[test]
    fn rejects_looped_left_factor() {
        let t3 = total_graph(3).unwrap();
        assert!(matches!(direct_product(&t3, &t3), Err(Error::LoopNotAllowed(_))));
        assert!(direct_product(&crate::graph::Graph::empty(0), &t3).is_err());
    }

    #[test]
    fn layers_and_projections() {
        let p = DirectProduct::new(&complete_graph(2).unwrap(), &complete_graph(5).unwrap()).unwrap();
        assert_eq!(p.layer(0).unwrap().to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(p.layer(1).unwrap().to_vec(), vec![5, 6, 7, 8, 9]);
        assert!(p.layer(2).is_err());
        for x in 0..10 {
            let pv = p.project(x).unwrap();
            assert_eq!(p.flat_index(pv).unwrap(), x);
        }

        let c4 = cycle_graph(4).unwrap();
        let p = DirectProduct::new(&c4, &complete_graph(5).unwrap()).unwrap();
        let all = (0..4).fold(VertexSet::new(20), |acc, u| acc.union(&p.layer(u).unwrap()));
        assert_eq!(all.len(), 20);
        for u1 in 0..4 {
            for u2 in 0..4 {
                if u1 == u2 {
                    continue;
                }
                let l1 = p.layer(u1).unwrap();
                let l2 = p.layer(u2).unwrap();
                let crossing = l1.iter().any(|x| p.graph().neighbors(x).intersection_len(&l2) > 0);
                assert_eq!(crossing, c4.has_edge(u1, u2), "layers {u1},{u2}");
            }
        }
    }
}
