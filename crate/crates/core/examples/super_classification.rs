//! Super-λ and super-λ′ verdicts, with the offending cut when a graph
//! fails. Large products fall back to flow certification.

use lplab::connectivity::{is_lambda_prime_optimal, is_super_lambda, is_super_lambda_prime, Limits};
use lplab::constructors::{barbell_graph, complete_graph, cycle_graph, direct_product, petersen_graph, total_graph};
use lplab::Graph;

fn main() -> lplab::Result<()> {
    let limits = Limits::default();
    let graphs: Vec<(&str, Graph)> = vec![
        ("C5", cycle_graph(5)?),
        ("C6", cycle_graph(6)?),
        ("K4", complete_graph(4)?),
        ("petersen", petersen_graph()),
        ("barbell3", barbell_graph(3)?),
        ("K2 x K5", direct_product(&complete_graph(2)?, &complete_graph(5)?)?),
        ("K2 x T3", direct_product(&complete_graph(2)?, &total_graph(3)?)?),
        ("petersen x K5", direct_product(&petersen_graph(), &complete_graph(5)?)?),
    ];
    for (name, g) in &graphs {
        let sl = is_super_lambda(g, &limits)?;
        let slp = is_super_lambda_prime(g, &limits)?;
        let opt = is_lambda_prime_optimal(g, &limits)?;
        println!(
            "{name:<14} super-lambda {:<5} lambda'-optimal {opt:<5} super-lambda' {:<5} [{:?}]",
            sl.holds, slp.holds, slp.certification
        );
        if let Some(w) = slp.witness.filter(|_| !slp.holds) {
            println!("{:>16}cut {} with A = {:?}", "", w.value, w.side_a());
        }
    }
    Ok(())
}
