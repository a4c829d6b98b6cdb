//! τ_G-rigidity of the nine Λ-modules by three criteria, and τ_G against
//! the classical translate over Γ.

use gsilt::cm_auslander::cm_auslander_algebra;
use gsilt::fixtures::lambda;
use gsilt::gorenstein::enumerate_gproj;
use gsilt::silting::{is_partial_gorenstein_silting, is_tau_g_rigid, tau_g_tilting_finiteness_probe, Sweep};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20)?;
    let ctx = cm_auslander_algebra(&cat)?;
    let sweep = Sweep::from_modules(&f.algebra, &f.names(), &f.modules)?;
    println!("module  dim τ_G  Hom(M,τ_G M)  θ onto  Hom(eval, τ eval)  rigid  partial");
    for (name, m) in f.names().iter().zip(&f.modules) {
        let r = is_tau_g_rigid(m, &ctx)?;
        let p = is_partial_gorenstein_silting(m, &ctx, &sweep)?;
        assert!(r.agree && r.tau_g_iso_classical);
        println!(
            "{name:<7} {:>9}  {:>12}  {:>6}  {:>17}  {:>5}  {:>7}",
            r.tau_g_dim, r.hom_eval_tau_g, r.restriction_onto, r.hom_eval_tau, r.verdict, p.verdict
        );
    }
    let probe = tau_g_tilting_finiteness_probe(&ctx, &sweep)?;
    println!("rigid over the sweep: {:?}", probe.rigid);
    Ok(())
}
