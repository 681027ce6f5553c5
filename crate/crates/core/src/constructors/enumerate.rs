//! Exhaustive generation of connected graphs up to isomorphism.
//!
//! Every connected graph on `k` vertices has a non-cut vertex, so it arises
//! from a connected graph on `k - 1` vertices by attaching a new vertex to a
//! nonempty neighbor set. Candidates are deduplicated by a canonical code:
//! the lexicographically least upper-triangle bit string over all labelings
//! compatible with an equitable (degree-refined) ordered partition.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_ENUMERATION_BUDGET: usize = 7;
/// The canonical code packs `k(k-1)/2` bits into a `u64`.
pub const MAX_ENUMERATION_ORDER: usize = 11;

fn rows_of(g: &Graph) -> Result<Vec<u32>> {
    if g.has_loops() {
        return Err(Error::LoopNotAllowed("canonical form of a looped graph".into()));
    }
    if g.order() > MAX_ENUMERATION_ORDER {
        return Err(Error::OverBudget { order: g.order(), budget: MAX_ENUMERATION_ORDER });
    }
    Ok((0..g.order()).map(|v| g.simple_neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect())
}

/// Ordered cells of the coarsest equitable refinement of the degree
/// partition. Cell order depends only on isomorphism invariants.
fn refined_cells(rows: &[u32]) -> Vec<Vec<Vertex>> {
    let n = rows.len();
    let mut cell: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    let mut count = 0;
    loop {
        let mut keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| rows[v] >> w & 1 == 1).map(|w| cell[w]).collect();
                nb.sort_unstable();
                (cell[v], nb)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            cell[v] = distinct.binary_search(&keys[v]).expect("key present");
        }
        keys.clear();
        if distinct.len() == count {
            break;
        }
        count = distinct.len();
    }
    let mut cells = vec![Vec::new(); count];
    for v in 0..n {
        cells[cell[v]].push(v);
    }
    cells
}

struct Search<'a> {
    rows: &'a [u32],
    n: usize,
    /// cell index owning each position
    slot_cell: Vec<usize>,
    cells: Vec<Vec<Vertex>>,
    placed: Vec<Vertex>,
    used: u32,
    best: Option<(u64, Vec<Vertex>)>,
    total_bits: usize,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, prefix: u64, bits: usize) {
        if let Some((best, _)) = &self.best {
            let best_prefix = if bits == 0 { 0 } else { best >> (self.total_bits - bits) };
            if prefix > best_prefix {
                return;
            }
        }
        if depth == self.n {
            let better = self.best.as_ref().is_none_or(|(b, _)| prefix < *b);
            if better {
                self.best = Some((prefix, self.placed.clone()));
            }
            return;
        }
        let cell = self.slot_cell[depth];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut code = prefix;
            for &w in &self.placed {
                code = (code << 1) | u64::from(self.rows[v] >> w & 1);
            }
            self.used |= 1 << v;
            self.placed.push(v);
            self.run(depth + 1, code, bits + depth);
            self.placed.pop();
            self.used &= !(1 << v);
        }
    }
}

fn canonical(rows: &[u32]) -> (u64, Vec<Vertex>) {
    let n = rows.len();
    let cells = refined_cells(rows);
    let slot_cell = cells.iter().enumerate().flat_map(|(i, c)| std::iter::repeat_n(i, c.len())).collect();
    let mut search = Search {
        rows,
        n,
        slot_cell,
        cells,
        placed: Vec::with_capacity(n),
        used: 0,
        best: None,
        total_bits: n * n.saturating_sub(1) / 2,
    };
    search.run(0, 0, 0);
    search.best.expect("at least one labeling")
}

/// The canonical labeling as a map `old vertex -> new vertex`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<Vertex>> {
    let rows = rows_of(g)?;
    let (_, order) = canonical(&rows);
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// A canonical representative: isomorphic graphs map to equal graphs.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    g.relabel(&canonical_labeling(g)?)
}

fn graph_from_rows(rows: &[u32], order: &[Vertex]) -> Graph {
    let n = rows.len();
    let mut pos = vec![0; n];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&w| rows[u] >> w & 1 == 1).map(move |w| (u, w)));
    Graph::from_edges(n, edges.map(|(a, b)| (pos[a], pos[b]))).expect("in range")
}

/// All connected simple graphs on exactly `k` vertices, one canonical
/// representative per isomorphism class, ordered by canonical code.
pub fn enumerate_connected_graphs(k: usize, budget: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected_graphs_up_to(k, budget)?.pop().unwrap_or_default())
}

/// Levels `1..=k`; entry `i` holds the graphs of order `i + 1`.
pub fn enumerate_connected_graphs_up_to(k: usize, budget: usize) -> Result<Vec<Vec<Graph>>> {
    let cap = budget.min(MAX_ENUMERATION_ORDER);
    if k > cap {
        return Err(Error::OverBudget { order: k, budget: cap });
    }
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    let mut current: Vec<Vec<u32>> = vec![vec![0]];
    for order in 1..=k {
        if order > 1 {
            let mut next: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
            let fresh = order - 1;
            for rows in &current {
                for attach in 1u32..(1 << fresh) {
                    let mut cand = rows.clone();
                    cand.push(attach);
                    for (w, row) in cand.iter_mut().enumerate().take(fresh) {
                        if attach >> w & 1 == 1 {
                            *row |= 1 << fresh;
                        }
                    }
                    let (code, labeling) = canonical(&cand);
                    next.entry(code).or_insert_with(|| {
                        let g = graph_from_rows(&cand, &labeling);
                        rows_of(&g).expect("small simple graph")
                    });
                }
            }
            current = next.into_values().collect();
        }
        levels.push(current.iter().map(|rows| graph_from_rows(rows, &(0..rows.len()).collect::<Vec<_>>())).collect());
    }
    Ok(levels)
}
