//! The 2-term complex of the minimal presentation of G8: Hom in the homotopy
//! category, the classes T(G) and F(G), and the silting conditions.

use gsilt::fixtures::lambda;
use gsilt::gorenstein::{enumerate_gproj, proper_presentation};
use gsilt::silting::Sweep;
use gsilt::two_term::{check_2term_gsilting, classes_t_f, from_presentation, homotopy_hom_dim, torsion_conditions};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20)?;
    let sweep = Sweep::from_modules(&f.algebra, &f.names(), &f.modules)?;
    for i in [8, 4] {
        let g = from_presentation(&proper_presentation(f.g(i), &cat)?, &cat)?;
        println!("G{i}: terms dims ({}, {}), H^-1 dim {}", g.g1().dim(), g.g0().dim(), g.cohomology_minus1().dim());
        println!("  Hom_K(G, G[k]) for k = -1, 0, 1: {:?}", [-1, 0, 1].map(|k| homotopy_hom_dim(&g, &g, k).unwrap()));
        for row in classes_t_f(&g, &sweep)? {
            println!("  {:<3} Hom^0 {} Hom^1 {}  T {:<5} F {}", row.module, row.hom0, row.hom1, row.in_t, row.in_f);
        }
        let c = check_2term_gsilting(&g, &cat, &sweep)?;
        println!("  partial {} full {} summands {}/{} full by count {}", c.partial, c.full, c.summand_count, c.gproj_count, c.full_by_summand_count);
        println!("  {:?}", torsion_conditions(&g, &sweep, &cat)?);
    }
    Ok(())
}
