//! Generate each guest family and print its size, plus one JSON and one DOT sample.

use hyperembed::graph;

fn main() -> hyperembed::Result<()> {
    let guests = [
        graph::hypercube(4)?,
        graph::folded_hypercube(4)?,
        graph::complete_multipartite(&[4, 4, 4, 4])?,
        graph::wheel(16)?,
        graph::cartesian_product(&graph::complete_graph(4)?, &graph::complete_graph(4)?)?,
        graph::complete_graph(16)?,
        graph::cycle(16)?,
    ];
    for g in &guests {
        println!(
            "{:<14} order {:>3}  edges {:>4}  max degree {:>2}",
            g.name(),
            g.order(),
            g.edge_count(),
            g.max_degree()
        );
    }

    let c4 = graph::cycle(4)?;
    println!("\n{}", c4.to_json());
    print!("{}", graph::complement(&c4)?.to_dot());
    Ok(())
}
