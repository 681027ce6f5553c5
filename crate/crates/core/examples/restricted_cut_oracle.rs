//! Compares the flow-based λ′ with the subset-enumeration oracle on a
//! handful of random graphs.

use lplab::connectivity::{lambda_prime_oracle, restricted_edge_connectivity, Limits};
use lplab::constructors::erdos_renyi;

fn main() -> lplab::Result<()> {
    let limits = Limits::default();
    let mut agreed = 0;
    for seed in 0..40 {
        let g = erdos_renyi(12, 0.35, seed)?;
        if !g.is_connected() {
            continue;
        }
        let flow = restricted_edge_connectivity(&g)?;
        let oracle = lambda_prime_oracle(&g, &limits)?;
        println!("seed {seed:>2}: {:>2} edges, lambda' flow {flow:>8} oracle {oracle:>8}", g.size());
        assert_eq!(flow, oracle);
        agreed += 1;
    }
    println!("{agreed} connected graphs, all agree");
    Ok(())
}
