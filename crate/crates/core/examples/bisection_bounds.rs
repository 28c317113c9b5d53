//! Lower bounds for a guest of order 2^n in Q_n, with the bisection width
//! taken from a closed form, the exhaustive oracle, or the caller.

use hyperembed::bounds::{bound_report, BwSource};
use hyperembed::graph;

fn main() -> hyperembed::Result<()> {
    let guests = [
        (
            graph::complete_multipartite(&[4, 4, 4, 4])?,
            4,
            BwSource::Auto,
        ),
        (graph::wheel(8)?, 3, BwSource::Auto),
        (graph::complete_graph(32)?, 5, BwSource::Auto),
        (graph::cycle(64)?, 6, BwSource::Given(2)),
    ];
    for (g, n, bw) in guests {
        let r = bound_report(&g, n, bw)?;
        println!("{}", serde_json::to_string(&r)?);
    }
    Ok(())
}
