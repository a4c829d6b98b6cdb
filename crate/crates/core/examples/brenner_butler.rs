//! Induced torsion pair over B = End_K(G)^op, Hom bookkeeping, completion
//! triangles and the transported complexes.

use gsilt::cm_auslander::cm_auslander_algebra;
use gsilt::fixtures::lambda;
use gsilt::gorenstein::{enumerate_gproj, proper_presentation};
use gsilt::silting::Sweep;
use gsilt::two_term::{
    brenner_butler_check, completion_triangle, endo_algebra_b, from_presentation, transported_silting_checks, TwoTermComplex,
};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20)?;
    let ctx = cm_auslander_algebra(&cat)?;
    let sweep = Sweep::from_modules(&f.algebra, &f.names(), &f.modules)?;
    let theta8 = from_presentation(&proper_presentation(f.g(8), &cat)?, &cat)?;
    let stalk_e = TwoTermComplex::stalk(&cat.class.generator().module);
    for (name, g) in [("θ8", theta8), ("E", stalk_e)] {
        let b = endo_algebra_b(&g)?;
        let bb = brenner_butler_check(&b, &cat, &sweep)?;
        let bad = bb.t_hom_dims.iter().chain(&bb.f_hom_dims).filter(|r| r.over_a != r.over_b).count();
        println!("{name}: dim B {}, Y-side {:?}, X-side {:?}", b.algebra.dim(), bb.y_side, bb.x_side);
        println!("  induced pair passes {}, Hom mismatches {bad}, iso failures {:?}, passes {}", bb.induced_torsion.passes, bb.iso_reflection_failures, bb.passes);
        let tri: Vec<bool> = cat.members().iter().map(|e| completion_triangle(e, &g).map(|t| t.1.verified)).collect::<Result<_, _>>()?;
        let tr = transported_silting_checks(&b, &ctx)?;
        println!("  triangles verified {tri:?}; over Γ: {} summands of {} simples", tr.p_summands, tr.gamma_simples);
    }
    Ok(())
}
