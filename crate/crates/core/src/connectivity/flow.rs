//! Breadth-first augmenting paths on the graph obtained by contracting the
//! source set and the sink set. Parallel edges created by the contraction
//! become integer capacities.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Outcome of a terminal cut computation.
#[derive(Debug, Clone)]
pub struct TerminalCut {
    pub value: usize,
    /// Vertices reachable from the sources in the final residual graph, or
    /// `None` when the computation stopped at its limit.
    pub source_side: Option<VertexSet>,
}

struct Network {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl Network {
    /// Arcs `2k` and `2k+1` are the two directions of one undirected edge.
    fn build(g: &Graph, map: &[usize], nodes: usize) -> Network {
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); nodes];
        for (v, &x) in map.iter().enumerate() {
            members[x].push(v);
        }
        let mut adj = vec![Vec::new(); nodes];
        let mut to = Vec::new();
        let mut cap = Vec::new();
        let mut acc = vec![0u32; nodes];
        let mut touched = Vec::new();
        for x in 0..nodes {
            for &v in &members[x] {
                for &w in g.simple_neighbors(v) {
                    let y = map[w];
                    if y > x {
                        if acc[y] == 0 {
                            touched.push(y);
                        }
                        acc[y] += 1;
                    }
                }
            }
            for &y in &touched {
                let id = to.len();
                to.push(y);
                cap.push(acc[y]);
                to.push(x);
                cap.push(acc[y]);
                adj[x].push(id);
                adj[y].push(id + 1);
                acc[y] = 0;
            }
            touched.clear();
        }
        Network { adj, to, cap }
    }

    /// Augments until `limit` units flow or no path remains. Returns the
    /// flow value and whether the flow is maximum.
    fn run(&mut self, s: usize, t: usize, limit: usize) -> (usize, bool) {
        let n = self.adj.len();
        let mut flow = 0usize;
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        while flow < limit {
            parent.fill(usize::MAX);
            parent[s] = usize::MAX - 1;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(x) = queue.pop_front() {
                for &arc in &self.adj[x] {
                    let y = self.to[arc];
                    if self.cap[arc] > 0 && parent[y] == usize::MAX {
                        parent[y] = arc;
                        if y == t {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if parent[t] == usize::MAX {
                return (flow, true);
            }
            let mut bottleneck = u32::MAX;
            let mut y = t;
            while y != s {
                let arc = parent[y];
                bottleneck = bottleneck.min(self.cap[arc]);
                y = self.to[arc ^ 1];
            }
            let push = bottleneck.min((limit - flow).min(u32::MAX as usize) as u32);
            let mut y = t;
            while y != s {
                let arc = parent[y];
                self.cap[arc] -= push;
                self.cap[arc ^ 1] += push;
                y = self.to[arc ^ 1];
            }
            flow += push as usize;
        }
        (flow, false)
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &arc in &self.adj[x] {
                let y = self.to[arc];
                if self.cap[arc] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

fn check_terminals(g: &Graph, sources: &VertexSet, sinks: &VertexSet) -> Result<()> {
    for s in [sources, sinks] {
        if s.universe() != g.order() {
            return Err(Error::Precondition("terminal set over a different universe".into()));
        }
        if s.is_empty() {
            return Err(Error::Precondition("terminal sets must be nonempty".into()));
        }
    }
    if !sources.is_disjoint(sinks) {
        return Err(Error::Overlap);
    }
    Ok(())
}

/// Minimum `[A, V \ A]` over `A ⊇ sources`, `A ∩ sinks = ∅`, computed as a
/// max flow that stops early once it reaches `limit`.
pub fn min_terminal_cut(g: &Graph, sources: &VertexSet, sinks: &VertexSet, limit: usize) -> Result<TerminalCut> {
    check_terminals(g, sources, sinks)?;
    let map = g.contraction_map(&[sources.clone(), sinks.clone()])?;
    let nodes = map.iter().max().map_or(0, |&m| m + 1);
    let s = map[sources.first().expect("nonempty")];
    let t = map[sinks.first().expect("nonempty")];
    let mut net = Network::build(g, &map, nodes);
    let (value, complete) = net.run(s, t, limit);
    let source_side = complete.then(|| {
        let seen = net.reachable(s);
        VertexSet::from_iter(g.order(), (0..g.order()).filter(|&v| seen[map[v]]))
    });
    Ok(TerminalCut { value, source_side })
}

/// Maximum number of pairwise edge-disjoint paths from `sources` to
/// `sinks`, which equals the minimum edge cut separating them.
pub fn max_flow_unit(g: &Graph, sources: &VertexSet, sinks: &VertexSet) -> Result<usize> {
    min_terminal_cut(g, sources, sinks, usize::MAX).map(|c| c.value)
}
