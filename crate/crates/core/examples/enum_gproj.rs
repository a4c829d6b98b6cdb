//! Enumerates the indecomposable Gorenstein-projective Λ-modules.

use gsilt::fixtures::lambda;
use gsilt::gorenstein::{enumerate_gproj, gorenstein_check};

fn main() -> anyhow::Result<()> {
    let p = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2);
    let f = lambda(p)?;
    let st = gorenstein_check(&f.algebra, 8)?;
    let gdim = st.gdim.expect("Λ is Gorenstein");
    let t = std::time::Instant::now();
    let cat = enumerate_gproj(&f.algebra, gdim, &[], 20)?;
    println!("F_{p}: Gdim {gdim}, {} classes in {:.3}s, exhaustive {}", cat.len(), t.elapsed().as_secs_f64(), cat.exhaustive);
    for (i, (name, m)) in cat.names.iter().zip(cat.members()).enumerate() {
        let fixture = (1..=9).find(|&j| gsilt::decompose::is_isomorphic(f.g(j), m).unwrap_or(false));
        println!("  {name}: dim {}  = G{}  from {:?}", m.dim(), fixture.unwrap_or(0), cat.provenance[i]);
    }
    Ok(())
}
