//! The reflected Gray code places the wheel rim on a Hamiltonian cycle of Q_n;
//! the hub sits at 0, so spokes have lengths 1..n.

use hyperembed::bounds::wheel_wirelength_lower_bound;
use hyperembed::constructions::wheel_gray_embedding;
use hyperembed::cube::gray_code;
use hyperembed::metrics;

fn main() -> hyperembed::Result<()> {
    let codes: Vec<String> = (0..8)
        .map(|i| gray_code(i, 3).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("Gray code, n = 3: {}", codes.join(" "));
    for n in 2..=12 {
        let e = wheel_gray_embedding(n)?;
        let r = metrics::evaluate(&e);
        println!(
            "W_{:<5} dilation {:>2} wirelength {:>6} lower bound {:>6}",
            1u32 << n,
            r.dilation,
            r.wirelength,
            wheel_wirelength_lower_bound(n)?
        );
    }
    Ok(())
}
