//! Builds C4 x K5 and shows how its layers and minimum cuts line up with
//! the first factor.

use lplab::connectivity::{minimum_restricted_edge_cut, Limits};
use lplab::constructors::{complete_graph, cycle_graph, DirectProduct};

fn main() -> lplab::Result<()> {
    let c4 = cycle_graph(4)?;
    let p = DirectProduct::new(&c4, &complete_graph(5)?)?;
    let g = p.graph();
    println!("C4 x K5: {} vertices, {} edges, min degree {:?}", g.order(), g.size(), g.min_degree());

    for u in 0..c4.order() {
        let layer = p.layer(u)?;
        let mut between = Vec::new();
        for w in (0..c4.order()).filter(|&w| w != u) {
            let other = p.layer(w)?;
            between.push(layer.iter().map(|x| g.neighbors(x).intersection_len(&other)).sum::<usize>());
        }
        println!("layer {u} = {:?}, edges to the other layers {between:?}", layer.to_vec());
    }

    // a layer-aligned cut: two adjacent layers against the other two
    let half = p.layers(&lplab::VertexSet::from_iter(4, [0, 1]))?;
    println!("cut between layers {{0,1}} and {{2,3}}: {}", g.cut_size(&half)?);

    let w = minimum_restricted_edge_cut(g, &Limits::default())?.expect("finite");
    let coords: Vec<_> = w.side_a().iter().map(|x| p.project(x).unwrap()).map(|v| (v.u, v.v)).collect();
    println!("minimum restricted cut {} ({}), side A = {coords:?}", w.value, w.kind.as_str());
    Ok(())
}
