//! gldim B against Gdim A + 1 for several 2-term complexes.

use gsilt::fixtures::{lambda, semisimple_fixture};
use gsilt::gorenstein::{enumerate_gproj, proper_presentation};
use gsilt::module::Module;
use gsilt::silting::Sweep;
use gsilt::two_term::{endo_algebra_b, from_presentation, gldim_bound_check, TwoTermComplex};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20)?;
    let sweep = Sweep::from_modules(&f.algebra, &f.names(), &f.modules)?;
    let cases = [
        ("θ8", from_presentation(&proper_presentation(f.g(8), &cat)?, &cat)?, 1),
        ("E stalk", TwoTermComplex::stalk(&cat.class.generator().module), 1),
        ("G4 stalk", TwoTermComplex::stalk(f.g(4)), 1),
    ];
    for (name, g, gdim) in cases {
        let r = gldim_bound_check(&endo_algebra_b(&g)?, gdim, 8, Some(&sweep))?;
        println!("{name:<9} gldim B {:?} bound {} holds {} induced pd {:?}", r.gldim_b, r.bound, r.bound_holds, r.induced_pd);
    }
    let (ss, _) = semisimple_fixture(3, 2)?;
    let r = gldim_bound_check(&endo_algebra_b(&TwoTermComplex::stalk(&Module::regular(&ss)))?, 0, 8, None)?;
    println!("semisimple gldim B {:?}", r.gldim_b);
    Ok(())
}
