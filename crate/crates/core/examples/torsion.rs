//! Torsion-pair axioms for (D_θ, T^⊥0) and (Gen_G T, T^⊥0) over the nine modules.

use gsilt::fixtures::lambda;
use gsilt::gorenstein::enumerate_gproj;
use gsilt::module::Module;
use gsilt::silting::{class_membership, torsion_pair_report, Candidate, ClassKind, Exactness, Sweep};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20)?;
    let sweep = Sweep::from_modules(&f.algebra, &f.names(), &f.modules)?;
    for i in [3, 8] {
        let c = Candidate::new(f.g(i), &cat)?;
        for kind in [ClassKind::DTheta, ClassKind::GenG] {
            let t = |x: &Module| Ok(class_membership(kind, &c, x, &cat)?.verdict);
            let fr = |x: &Module| Ok(class_membership(ClassKind::Perp0, &c, x, &cat)?.verdict);
            let r = torsion_pair_report(&t, &fr, &sweep, &cat, Exactness::Relative)?;
            println!("T = G{i}, {kind:?}: torsion {:?} torsion-free {:?}", r.torsion, r.torsion_free);
            println!("  axiom failures {:?} {:?} {:?} {:?} -> passes {}", r.axiom1, r.axiom2, r.axiom3, r.axiom4, r.passes);
        }
    }
    Ok(())
}
