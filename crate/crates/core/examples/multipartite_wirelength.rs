//! Wirelength of the balanced complete multipartite construction against
//! n * BW(G), the bisection lower bound.

use hyperembed::bounds::{bw_balanced_multipartite, wl_lower_bound};
use hyperembed::constructions::{multipartite_embedding, multipartite_labels};
use hyperembed::metrics;

fn main() -> hyperembed::Result<()> {
    println!("labels for n = 3, p = 1: {:?}", multipartite_labels(3, 1)?);
    println!(
        "{:>3} {:>3} {:>12} {:>12}",
        "n", "p", "wirelength", "lower bound"
    );
    for n in 2..=8 {
        for p in 1..n {
            let e = multipartite_embedding(n, p)?;
            let bw = bw_balanced_multipartite(1 << p, 1 << (n - p - 1))?;
            println!(
                "{n:>3} {p:>3} {:>12} {:>12}",
                metrics::wirelength(&e),
                wl_lower_bound(n, bw)
            );
        }
    }
    Ok(())
}
