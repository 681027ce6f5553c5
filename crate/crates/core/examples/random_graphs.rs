//! Seeded G(n, p) graphs: the same seed gives the same graph.

use lplab::connectivity::{edge_connectivity, restricted_edge_connectivity};
use lplab::constructors::{emit_graph6, erdos_renyi};

fn main() -> lplab::Result<()> {
    for seed in 0..8 {
        let g = erdos_renyi(10, 0.4, seed)?;
        assert_eq!(g, erdos_renyi(10, 0.4, seed)?);
        let lp = if g.is_connected() { restricted_edge_connectivity(&g)?.to_string() } else { "-".into() };
        println!(
            "seed {seed}: {} edges={:>2} lambda={} lambda'={lp}",
            emit_graph6(&g)?,
            g.size(),
            edge_connectivity(&g)?
        );
    }
    Ok(())
}
