use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::{Bipartition, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutKind {
    /// One side is a single vertex.
    VertexIsolating,
    /// One side is exactly two adjacent vertices.
    EdgeIsolating,
    LargeBothSides,
}

impl CutKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CutKind::VertexIsolating => "vertex-isolating",
            CutKind::EdgeIsolating => "edge-isolating",
            CutKind::LargeBothSides => "large-both-sides",
        }
    }

    fn classify(g: &Graph, a: &VertexSet, b: &VertexSet) -> CutKind {
        let is_edge = |s: &VertexSet| {
            let v = s.to_vec();
            v.len() == 2 && g.has_edge(v[0], v[1])
        };
        if a.len() == 1 || b.len() == 1 {
            CutKind::VertexIsolating
        } else if is_edge(a) || is_edge(b) {
            CutKind::EdgeIsolating
        } else {
            CutKind::LargeBothSides
        }
    }
}

impl Serialize for CutKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A bipartition certifying a cut value. `side_a` always contains vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub value: usize,
    pub kind: CutKind,
    pub bipartition: Bipartition,
}

impl CutWitness {
    pub fn from_side(g: &Graph, side_a: VertexSet) -> Result<Self> {
        let bipartition = Bipartition::new(g, side_a)?.anchored();
        Ok(CutWitness {
            value: bipartition.cut_edges.len(),
            kind: CutKind::classify(g, &bipartition.side_a, &bipartition.side_b),
            bipartition,
        })
    }

    pub fn side_a(&self) -> &VertexSet {
        &self.bipartition.side_a
    }

    pub fn side_b(&self) -> &VertexSet {
        &self.bipartition.side_b
    }

    /// Total order used to pick among equal-valued witnesses.
    pub(crate) fn rank(&self) -> (usize, &VertexSet) {
        (self.value, &self.bipartition.side_a)
    }

    /// Neither side has a vertex without a neighbor on its own side.
    pub fn is_restricted(&self, g: &Graph) -> bool {
        side_has_no_isolated(g, self.side_a()) && side_has_no_isolated(g, self.side_b())
    }

    pub fn smaller_side(&self) -> usize {
        self.side_a().len().min(self.side_b().len())
    }

    /// Recomputes everything the witness claims against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let a = self.side_a();
        let b = self.side_b();
        if a.universe() != g.order() || b.universe() != g.order() {
            return Err("witness universe differs from graph order".into());
        }
        if a.is_empty() || b.is_empty() {
            return Err("empty side".into());
        }
        if !a.is_disjoint(b) || a.len() + b.len() != g.order() {
            return Err("sides do not partition the vertex set".into());
        }
        let edges = g.cut_edges(a);
        if edges != self.bipartition.cut_edges {
            return Err("cut edge list does not match the graph".into());
        }
        if edges.len() != self.value {
            return Err(format!("claimed value {} but {} edges cross", self.value, edges.len()));
        }
        let kind = CutKind::classify(g, a, b);
        if kind != self.kind {
            return Err(format!("claimed kind {} but recomputed {}", self.kind.as_str(), kind.as_str()));
        }
        Ok(())
    }
}

pub(crate) fn side_has_no_isolated(g: &Graph, side: &VertexSet) -> bool {
    side.iter().all(|v| g.simple_neighbors(v).iter().any(|&w| side.contains(w)))
}

impl Serialize for CutWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CutWitness", 5)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("sideA", &self.side_a().to_vec())?;
        st.serialize_field("sideB", &self.side_b().to_vec())?;
        st.serialize_field("cutEdges", &self.bipartition.cut_edges)?;
        st.end()
    }
}

/// Keeps the lower-ranked of two optional witnesses.
pub(crate) fn keep_min(best: &mut Option<CutWitness>, cand: CutWitness) {
    let replace = match best {
        Some(b) => cand.rank() < b.rank(),
        None => true,
    };
    if replace {
        *best = Some(cand);
    }
}
