//! Gorenstein silting verdicts: Gen_G(T) against D_θ over the nine modules.

use gsilt::fixtures::lambda;
use gsilt::gorenstein::enumerate_gproj;
use gsilt::module::Module;
use gsilt::silting::{is_gorenstein_silting, Sweep};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20)?;
    let sweep = Sweep::from_modules(&f.algebra, &f.names(), &f.modules)?;
    let mut cands: Vec<(String, Module)> = f.names().into_iter().zip(f.modules.iter().cloned()).collect();
    cands.push(("E".into(), cat.class.generator().module.clone()));
    cands.push(("Λ".into(), Module::regular(&f.algebra)));
    for (name, t) in &cands {
        let r = is_gorenstein_silting(t, &cat, &sweep)?;
        println!("{name:<3} θ dims {:?}  silting {:<5}  Gen_G ≠ D_θ at {:?}", r.theta_dims, r.verdict, r.mismatches);
    }
    let g8 = is_gorenstein_silting(f.g(8), &cat, &sweep)?;
    for row in &g8.rows {
        println!("  G8 row {:<3} in Gen_G {:<5} in D_θ {}", row.module, row.in_gen_g, row.in_d_theta);
    }
    println!("{}", g8.quantification);
    Ok(())
}
