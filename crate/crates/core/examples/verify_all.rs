//! Run every verification scope and print the report.
//!
//! `cargo run --release --example verify_all -- 8`

use hyperembed::verify::{run, Scope};

fn main() -> hyperembed::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .map_or(4, |a| a.parse().expect("integer max_n"));
    let report = run(Scope::All, max_n, 0)?;
    print!("{}", report.to_text());
    if !report.ok() {
        std::process::exit(1);
    }
    Ok(())
}
