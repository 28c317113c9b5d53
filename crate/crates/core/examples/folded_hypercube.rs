//! Folded hypercubes: the identity embedding reaches n * 2^n wirelength,
//! and a Gray-code relabeling brings dilation down to 2.

use hyperembed::bounds::{bw_folded_hypercube, bw_hypercube, ec_lower_bound};
use hyperembed::constructions::{folded_gray_embedding, folded_identity_embedding};
use hyperembed::metrics;

fn main() -> hyperembed::Result<()> {
    for n in 2..=10 {
        let id = metrics::evaluate(&folded_identity_embedding(n)?);
        let gray = metrics::dilation(&folded_gray_embedding(n)?).1;
        let ec = ec_lower_bound(bw_folded_hypercube(n)?, bw_hypercube(n)?)?;
        println!(
            "FQ_{n:<2} identity: dilation {:>2} wirelength {:>6} congestion {}  gray dilation {gray}  congestion bound {}",
            id.dilation, id.wirelength, id.congestion, ec.ceil
        );
    }
    Ok(())
}
