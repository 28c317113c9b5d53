//! Recompute the dilation and wirelength summary at a chosen dimension.
//!
//! `cargo run --example summary_table -- 6 3`

use hyperembed::table::table1;

fn main() -> hyperembed::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u32>().expect("integer argument"));
    let n = args.next().unwrap_or(4);
    let p = args.next().unwrap_or(n / 2);
    let t = table1(n, p)?;
    print!("{}", t.to_text());
    if !t.ok {
        std::process::exit(1);
    }
    Ok(())
}
