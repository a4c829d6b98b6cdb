//! Random monomial algebras through the theorem suite.

use gsilt::fuzz::{run, FuzzConfig};

fn main() -> anyhow::Result<()> {
    let count = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(30);
    let cfg = FuzzConfig { count, ..FuzzConfig::default() };
    let s = run(&cfg)?;
    println!(
        "{} generated, {} too large, {} inconclusive, {} checked ({} complete sweeps), {} checks",
        s.generated, s.too_large, s.inconclusive, s.checked, s.complete_sweeps, s.checks
    );
    for (name, n) in &s.violations_by_invariant {
        println!("  {name}: {n}");
    }
    Ok(())
}
