//! Connected graphs up to isomorphism, with their λ′ distribution.

use std::collections::BTreeMap;

use lplab::connectivity::restricted_edge_connectivity;
use lplab::constructors::{emit_graph6, enumerate_connected_graphs_up_to, DEFAULT_ENUMERATION_BUDGET};

fn main() -> lplab::Result<()> {
    let levels = enumerate_connected_graphs_up_to(6, DEFAULT_ENUMERATION_BUDGET)?;
    for (i, level) in levels.iter().enumerate() {
        let mut by_value = BTreeMap::new();
        for g in level {
            *by_value.entry(restricted_edge_connectivity(g)?.to_string()).or_insert(0) += 1;
        }
        println!("order {}: {:>3} graphs, lambda' histogram {by_value:?}", i + 1, level.len());
    }
    let fours: Vec<String> = levels[3].iter().map(|g| emit_graph6(g).unwrap()).collect();
    println!("order 4: {}", fours.join(" "));
    Ok(())
}
