//! Exhaustive optima with witnesses, and the effect of symmetry reduction on
//! the search size.

use hyperembed::graph;
use hyperembed::oracle::{self, SearchOptions};

fn main() -> hyperembed::Result<()> {
    let w8 = graph::wheel(8)?;
    let plain = SearchOptions {
        reduce_symmetry: false,
    };
    for (name, full, reduced) in [
        (
            "dilation",
            oracle::oracle_dilation_with(&w8, 3, plain)?,
            oracle::oracle_dilation(&w8, 3)?,
        ),
        (
            "wirelength",
            oracle::oracle_wirelength_with(&w8, 3, plain)?,
            oracle::oracle_wirelength(&w8, 3)?,
        ),
    ] {
        assert!(oracle::witness_reproduces(&w8, 3, &reduced));
        println!(
            "W_8 {name}: {} ({} nodes without symmetry reduction, {} with)  witness {:?}",
            reduced.value, full.search_space, reduced.search_space, reduced.witness
        );
    }
    let k = graph::complete_multipartite(&[4, 4, 4, 4])?;
    let bw = oracle::oracle_bisection_width(&k)?;
    println!("BW(K_{{4,4,4,4}}) = {}  witness {:?}", bw.value, bw.witness);
    Ok(())
}
