use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)`.
///
/// A `ChaCha8Rng` seeded with `seed_from_u64(seed)` draws one `f64` in
/// `[0, 1)` per vertex pair `(u, v)`, `u < v`, in lexicographic order; the
/// edge is present when the draw is below `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_from_seed() {
        let a = erdos_renyi(12, 0.4, 7).unwrap();
        assert_eq!(a, erdos_renyi(12, 0.4, 7).unwrap());
        assert_ne!(a, erdos_renyi(12, 0.4, 8).unwrap());
        assert_eq!(erdos_renyi(6, 1.0, 1).unwrap().size(), 15);
        assert_eq!(erdos_renyi(6, 0.0, 1).unwrap().size(), 0);
        assert!(erdos_renyi(6, 1.5, 1).is_err());
    }
}
