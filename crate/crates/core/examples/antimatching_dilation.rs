//! A perfect anti-matching (a perfect matching of the complement) gives an
//! embedding of dilation at most n - 1. Prints K_{4,4,4,4} -> Q_4 as DOT.
//!
//! `cargo run --example antimatching_dilation > k4444.dot && dot -Tsvg k4444.dot`

use hyperembed::bounds::{dilation_lower_bound, has_perfect_antimatching};
use hyperembed::{constructions, graph, metrics};

fn main() -> hyperembed::Result<()> {
    let g = graph::complete_multipartite(&[4, 4, 4, 4])?;
    let am = has_perfect_antimatching(&g).expect("every part has even size");
    let e = constructions::antimatching_embedding(&g, &am)?;
    let (_, dil) = metrics::dilation(&e);
    let lb = dilation_lower_bound(4, g.max_degree() as u64)?;
    eprintln!("anti-matching pairs: {:?}", am.pairs());
    eprintln!("dilation {dil}, lower bound {lb}");

    // the wheel's hub is adjacent to everything, so no anti-matching exists
    let w = graph::wheel(16)?;
    eprintln!(
        "W_16 has a perfect anti-matching: {}",
        has_perfect_antimatching(&w).is_some()
    );

    print!("{}", e.to_dot());
    Ok(())
}
