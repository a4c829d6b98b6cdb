//! Gorenstein tilting and star checks, and the chain tilting ⇒ silting ⇒ star.

use gsilt::fixtures::lambda;
use gsilt::gorenstein::enumerate_gproj;
use gsilt::silting::{is_gorenstein_star, is_gorenstein_tilting, star_theorem_check, Sweep};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20)?;
    let sweep = Sweep::from_modules(&f.algebra, &f.names(), &f.modules)?;
    let e = cat.class.generator().module.clone();
    let mut cands: Vec<(String, _)> = f.names().into_iter().zip(f.modules.iter().cloned()).collect();
    cands.push(("E".into(), e));
    for (name, t) in &cands {
        let til = is_gorenstein_tilting(t, &cat, &sweep, 2)?;
        let star = is_gorenstein_star(t, &cat, &sweep)?;
        let th = star_theorem_check(t, &cat, &sweep)?;
        println!(
            "{name:<3} Gpd {:?}  tilting {:<5} star {:<5} chain {:<5} equivalence {}",
            til.gpd, til.verdict, star.verdict, th.chain_holds, th.equivalence_holds
        );
    }
    Ok(())
}
