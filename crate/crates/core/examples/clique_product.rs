//! Products of cliques: lexicographic order maximizes induced edges, which
//! fixes the bisection width and makes the natural embedding optimal.

use hyperembed::bounds::{bw_clique_product, lindsey_lex_edge_count, wl_lower_bound};
use hyperembed::constructions::clique_product_embedding;
use hyperembed::{metrics, oracle};

fn main() -> hyperembed::Result<()> {
    let p = [2, 4];
    let best = oracle::oracle_lindsey_profile(&p)?;
    for (m, &max) in best.iter().enumerate().skip(1) {
        println!(
            "K_2 x K_4, m = {m}: lexicographic {} exhaustive {max}",
            lindsey_lex_edge_count(&p, m)?
        );
    }
    for n in [2u32, 4, 6, 8] {
        let e = clique_product_embedding(n)?;
        let h = n / 2;
        let bw = bw_clique_product(&[1 << (h - 1), 1 << h])?;
        let r = metrics::evaluate(&e);
        println!(
            "{:<12} dilation {} wirelength {:>5} lower bound {:>5}",
            e.guest().name(),
            r.dilation,
            r.wirelength,
            wl_lower_bound(n, bw)
        );
    }
    Ok(())
}
