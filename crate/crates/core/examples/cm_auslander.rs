//! The CM-Auslander algebra Γ = End(E)^op of Λ and the functor Hom(E, -).

use gsilt::cm_auslander::cm_auslander_algebra;
use gsilt::fixtures::lambda;
use gsilt::gorenstein::enumerate_gproj;
use gsilt::homological::{global_dimension, is_projective};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20)?;
    let ctx = cm_auslander_algebra(&cat)?;
    let n = cat.len();
    println!("dim Γ = {}, gldim Γ = {:?}", ctx.gamma.dim(), global_dimension(&ctx.gamma, 6)?);
    println!("block dims Hom(Ei, Ej):");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| ctx.block(i, j).dim.to_string()).collect();
        println!("  {}", row.join(" "));
    }
    for (i, m) in f.modules.iter().enumerate() {
        let e = ctx.eval(m)?;
        println!("Hom(E, G{}) has dim {}, projective {}", i + 1, e.dim(), is_projective(&e)?);
    }
    Ok(())
}
