//! Loop-capable undirected graphs on dense vertex ids `0..n`.
//!
//! A loop at `v` is stored once: it puts `v` in its own neighbor set and
//! adds exactly one to `d(v)`. Loops never cross a cut and never connect
//! anything, so components, cuts and contraction all ignore them.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{Serialize, SerializeStruct, SerializeTuple, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub type Vertex = usize;

/// An unordered edge, normalized so that `u <= v`. `u == v` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Edge { u: a.min(b), v: a.max(b) }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn touches(&self, other: &Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.u)?;
        t.serialize_element(&self.v)?;
        t.end()
    }
}

/// Immutable undirected graph without multi-edges.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    simple: Vec<Vec<Vertex>>,
    loops: VertexSet,
    size: usize,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph {
            adjacency: vec![VertexSet::new(order); order],
            simple: vec![Vec::new(); order],
            loops: VertexSet::new(order),
            size: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; `(v, v)`
    /// adds a loop.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![VertexSet::new(order); order];
        let mut loops = VertexSet::new(order);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
            if a == b {
                loops.insert(a);
            }
        }
        Ok(Self::from_adjacency(adjacency, loops))
    }

    fn from_adjacency(adjacency: Vec<VertexSet>, loops: VertexSet) -> Self {
        let simple: Vec<Vec<Vertex>> =
            adjacency.iter().enumerate().map(|(v, row)| row.iter().filter(|&w| w != v).collect()).collect();
        let size = simple.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adjacency, simple, loops, size }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of non-loop edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn loops(&self) -> &VertexSet {
        &self.loops
    }

    pub fn loop_count(&self) -> usize {
        self.loops.len()
    }

    pub fn has_loops(&self) -> bool {
        !self.loops.is_empty()
    }

    #[inline]
    pub fn has_loop(&self, v: Vertex) -> bool {
        self.loops.contains(v)
    }

    /// `N(v)`, including `v` itself when it carries a loop.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v]
    }

    /// Neighbors of `v` other than `v`, ascending.
    #[inline]
    pub fn simple_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.simple[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adjacency[u].contains(v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// `d(v) = |N(v)|`; a loop counts once.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    #[inline]
    pub(crate) fn deg(&self, v: Vertex) -> usize {
        self.simple[v].len() + usize::from(self.loops.contains(v))
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.deg(v)).min()
    }

    /// Non-loop edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.order() {
            for &v in &self.simple[u] {
                if u < v {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// `d(u) + d(v) - 2` for a non-loop edge of the graph.
    pub fn edge_degree(&self, e: Edge) -> Result<usize> {
        self.check_vertex(e.u)?;
        self.check_vertex(e.v)?;
        if e.is_loop() {
            return Err(Error::LoopNotAllowed(format!("edge-degree of loop {e}")));
        }
        if !self.has_edge(e.u, e.v) {
            return Err(Error::NotAnEdge(e.to_string()));
        }
        Ok(self.deg(e.u) + self.deg(e.v) - 2)
    }

    /// Minimum edge-degree over the non-loop edges.
    pub fn min_edge_degree(&self) -> Result<usize> {
        self.edges().into_iter().map(|e| self.deg(e.u) + self.deg(e.v) - 2).min().ok_or(Error::Edgeless)
    }

    /// Connected components, each as a vertex set, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new(n);
            seen[start] = true;
            stack.push(start);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &y in &self.simple[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.components().len() == 1
    }

    /// 2-colorability; any loop is an odd closed walk and forces `false`.
    pub fn is_bipartite(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut stack = Vec::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            stack.push(start);
            while let Some(x) = stack.pop() {
                let cx = color[x].unwrap();
                for &y in &self.simple[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            stack.push(y);
                        }
                        Some(cy) if cy == cx => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// A connected loop-free tree with a vertex adjacent to all others
    /// (`K_{1,k}`, k >= 1).
    pub fn is_star(&self) -> bool {
        let n = self.order();
        n >= 2 && !self.has_loops() && self.size == n - 1 && (0..n).any(|v| self.simple[v].len() == n - 1)
    }

    fn check_side(&self, side: &VertexSet) -> Result<()> {
        if side.universe() != self.order() {
            return Err(Error::Precondition(format!(
                "vertex set over universe {} used with graph of order {}",
                side.universe(),
                self.order()
            )));
        }
        if side.is_empty() || side.len() == self.order() {
            return Err(Error::TrivialSide);
        }
        Ok(())
    }

    /// `|[A, V \ A]|`.
    pub fn cut_size(&self, side: &VertexSet) -> Result<usize> {
        self.check_side(side)?;
        Ok(self.crossing_count(side))
    }

    pub(crate) fn crossing_count(&self, side: &VertexSet) -> usize {
        let outside = side.complement();
        side.iter().map(|v| self.adjacency[v].intersection_len(&outside)).sum()
    }

    /// The edges of `[A, V \ A]`, sorted.
    pub fn cut_edges(&self, side: &VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for v in side.iter() {
            for &w in &self.simple[v] {
                if !side.contains(w) {
                    out.push(Edge::new(v, w));
                }
            }
        }
        out.sort();
        out
    }

    /// Merges each block into a single vertex. Edges inside a block vanish,
    /// as do loops; parallel edges collapse. New ids follow the order in
    /// which the least member of each class appears, so an empty block list
    /// yields the identity map. Returns the graph and the old-to-new map.
    pub fn contract(&self, blocks: &[VertexSet]) -> Result<(Graph, Vec<Vertex>)> {
        let map = self.contraction_map(blocks)?;
        let new_order = map.iter().map(|&x| x + 1).max().unwrap_or(0);
        let mut adjacency = vec![VertexSet::new(new_order); new_order];
        for e in self.edges() {
            let (a, b) = (map[e.u], map[e.v]);
            if a != b {
                adjacency[a].insert(b);
                adjacency[b].insert(a);
            }
        }
        Ok((Self::from_adjacency(adjacency, VertexSet::new(new_order)), map))
    }

    pub(crate) fn contraction_map(&self, blocks: &[VertexSet]) -> Result<Vec<Vertex>> {
        let n = self.order();
        let mut owner: Vec<Option<usize>> = vec![None; n];
        for (i, block) in blocks.iter().enumerate() {
            for v in block.iter() {
                self.check_vertex(v)?;
                if owner[v].replace(i).is_some() {
                    return Err(Error::Overlap);
                }
            }
        }
        let mut block_id: Vec<Option<usize>> = vec![None; blocks.len()];
        let mut map = vec![0; n];
        let mut next = 0;
        for v in 0..n {
            map[v] = match owner[v] {
                Some(b) => *block_id[b].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                }),
                None => {
                    next += 1;
                    next - 1
                }
            };
        }
        Ok(map)
    }

    /// `G[S]` relabeled to `0..|S|` in ascending order of the original ids.
    /// Returns the subgraph and the new-to-old map.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<Vertex>) {
        let keep: Vec<Vertex> = s.iter().filter(|&v| v < self.order()).collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let k = keep.len();
        let mut adjacency = vec![VertexSet::new(k); k];
        let mut loops = VertexSet::new(k);
        for (i, &v) in keep.iter().enumerate() {
            for w in self.adjacency[v].iter() {
                if index[w] != usize::MAX {
                    adjacency[i].insert(index[w]);
                }
            }
            if self.has_loop(v) {
                loops.insert(i);
            }
        }
        (Self::from_adjacency(adjacency, loops), keep)
    }

    /// Applies a vertex permutation: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.order();
        let distinct: BTreeSet<_> = perm.iter().copied().collect();
        if perm.len() != n || distinct.len() != n || distinct.iter().any(|&x| x >= n) {
            return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
        }
        let edges = self
            .edges()
            .into_iter()
            .map(|e| (perm[e.u], perm[e.v]))
            .chain(self.loops.iter().map(|v| (perm[v], perm[v])));
        Graph::from_edges(n, edges)
    }

    /// Writes the edge-list text format: header `n m`, then one `u v` per
    /// line with loops as `v v` (counted in `m`).
    pub fn to_edge_list(&self) -> String {
        let mut all: Vec<Edge> = self.edges();
        all.extend(self.loops.iter().map(|v| Edge::new(v, v)));
        all.sort();
        let mut out = format!("{} {}\n", self.order(), all.len());
        for e in all {
            out.push_str(&format!("{} {}\n", e.u, e.v));
        }
        out
    }

    /// Parses the edge-list text format. Blank lines and `#` comments are
    /// skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) =
            lines.next().ok_or(Error::EdgeList { line: 0, message: "missing `n m` header".into() })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines {
            let (u, v) = parse_pair(line, text)?;
            if u >= n || v >= n {
                return Err(Error::EdgeList { line, message: format!("vertex out of range for order {n}") });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::EdgeList {
                line: hline,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let bad = |message: String| Error::EdgeList { line, message };
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| bad("expected two integers".into()))?;
        tok.parse().map_err(|_| bad(format!("not an integer: `{tok}`")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(bad("trailing tokens".into()));
    }
    Ok((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges())
            .field("loops", &self.loops)
            .finish()
    }
}

/// A 2-partition of the vertex set together with its crossing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub cut_edges: Vec<Edge>,
}

impl Bipartition {
    pub fn new(g: &Graph, side_a: VertexSet) -> Result<Self> {
        g.check_side(&side_a)?;
        let cut_edges = g.cut_edges(&side_a);
        Ok(Bipartition { side_b: side_a.complement(), side_a, cut_edges })
    }

    /// Orients the partition so that vertex 0 lies in `side_a`.
    pub fn anchored(self) -> Self {
        if self.side_a.contains(0) {
            self
        } else {
            Bipartition { side_a: self.side_b, side_b: self.side_a, cut_edges: self.cut_edges }
        }
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Bipartition", 3)?;
        st.serialize_field("sideA", &self.side_a.to_vec())?;
        st.serialize_field("sideB", &self.side_b.to_vec())?;
        st.serialize_field("cutEdges", &self.cut_edges)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    fn total(n: usize) -> Graph {
        let loops = (0..n).map(|v| (v, v));
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).chain(loops)).unwrap()
    }

    #[test]
    fn degree_examples() {
        assert!((0..5).all(|v| complete(5).degree(v).unwrap() == 4));
        assert!((0..5).all(|v| total(5).degree(v).unwrap() == 5));
        assert_eq!(Graph::empty(1).degree(0).unwrap(), 0);
        assert!(matches!(complete(3).degree(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn edge_degree_examples() {
        assert_eq!(complete(5).edge_degree(Edge::new(1, 3)).unwrap(), 6);
        assert_eq!(path(4).edge_degree(Edge::new(1, 2)).unwrap(), 2);
        assert!(matches!(total(3).edge_degree(Edge::new(1, 1)), Err(Error::LoopNotAllowed(_))));
        assert!(matches!(path(4).edge_degree(Edge::new(0, 3)), Err(Error::NotAnEdge(_))));
    }

    #[test]
    fn min_edge_degree_examples() {
        assert_eq!(cycle(4).min_edge_degree().unwrap(), 2);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.min_edge_degree().unwrap(), 2);
        assert_eq!(Graph::empty(3).min_edge_degree(), Err(Error::Edgeless));
        // loops alone do not make a graph non-edgeless
        assert_eq!(total(1).min_edge_degree(), Err(Error::Edgeless));
    }

    #[test]
    fn components_ignore_loops() {
        assert_eq!(complete(5).components().len(), 1);
        let two = Graph::from_edges(4, [(0, 1), (2, 3), (2, 2)]).unwrap();
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
    }

    #[test]
    fn bipartiteness() {
        assert!(cycle(6).is_bipartite());
        assert!(!complete(3).is_bipartite());
        assert!(!total(3).is_bipartite());
        assert!(!Graph::from_edges(2, [(0, 1), (1, 1)]).unwrap().is_bipartite());
    }

    #[test]
    fn cut_size_examples() {
        let k4 = complete(4);
        assert_eq!(k4.cut_size(&VertexSet::from_iter(4, [2])).unwrap(), 3);
        assert_eq!(k4.cut_size(&VertexSet::new(4)), Err(Error::TrivialSide));
        assert_eq!(k4.cut_size(&VertexSet::full(4)), Err(Error::TrivialSide));
        // loops never cross
        assert_eq!(total(4).cut_size(&VertexSet::from_iter(4, [0, 1])).unwrap(), 4);
    }

    #[test]
    fn contraction() {
        let (p, map) = path(4).contract(&[VertexSet::from_iter(4, [0, 1])]).unwrap();
        assert_eq!(map, vec![0, 0, 1, 2]);
        assert_eq!(p, path(3));

        let (c, map) = cycle(4).contract(&[VertexSet::from_iter(4, [0, 2])]).unwrap();
        assert_eq!(map, vec![0, 1, 0, 2]);
        assert_eq!(c.order(), 3);
        assert_eq!(c.edges(), vec![Edge::new(0, 1), Edge::new(0, 2)]);

        let g = cycle(5);
        let (same, map) = g.contract(&[]).unwrap();
        assert_eq!(same, g);
        assert_eq!(map, (0..5).collect::<Vec<_>>());

        let overlap = [VertexSet::from_iter(5, [0, 1]), VertexSet::from_iter(5, [1, 2])];
        assert_eq!(g.contract(&overlap).unwrap_err(), Error::Overlap);

        let (t, _) = total(3).contract(&[]).unwrap();
        assert!(!t.has_loops());
    }

    #[test]
    fn induced_subgraphs() {
        let (k3, map) = complete(5).induced_subgraph(&VertexSet::from_iter(5, [1, 3, 4]));
        assert_eq!(k3, complete(3));
        assert_eq!(map, vec![1, 3, 4]);
        let (two, _) = total(4).induced_subgraph(&VertexSet::from_iter(4, [0, 2]));
        assert_eq!(two.size(), 1);
        assert_eq!(two.loop_count(), 2);
        let (empty, map) = complete(5).induced_subgraph(&VertexSet::new(5));
        assert_eq!(empty.order(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn edge_list_round_trip_with_loops() {
        let g = total(3);
        let text = g.to_edge_list();
        assert!(text.starts_with("3 6\n"));
        assert!(text.contains("1 1\n"));
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(Graph::parse_edge_list(""), Err(Error::EdgeList { .. })));
        assert!(matches!(Graph::parse_edge_list("3 2\n0 1\n"), Err(Error::EdgeList { .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 5\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(Graph::parse_edge_list("3 1\n0 x\n"), Err(Error::EdgeList { .. })));
    }

    #[test]
    fn star_detection() {
        assert!(Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap().is_star());
        assert!(path(2).is_star());
        assert!(path(3).is_star());
        assert!(!path(4).is_star());
        assert!(!complete(3).is_star());
    }
}
