use lplab::constructors::{emit_graph6, parse_graph6, parse_graph6_lines, petersen_graph, star_graph};

fn main() -> lplab::Result<()> {
    for g in [petersen_graph(), star_graph(4)?] {
        let code = emit_graph6(&g)?;
        let back = parse_graph6(&code)?;
        println!("{code:<12} n={} m={} round trip ok: {}", back.order(), back.size(), back == g);
    }

    let file = ">>graph6<<D~{\nD?{\n";
    for g in parse_graph6_lines(file)? {
        println!("{} -> edges {:?}", emit_graph6(&g)?, g.edges().iter().map(ToString::to_string).collect::<Vec<_>>());
    }

    // edge lists keep loops, graph6 does not
    let t3 = lplab::constructors::total_graph(3)?;
    print!("{}", t3.to_edge_list());
    assert!(emit_graph6(&t3).is_err());
    Ok(())
}
