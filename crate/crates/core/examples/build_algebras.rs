//! Builds a few algebras and prints their basic homological data.

use gsilt::algebra::{monomial_quiver, semisimple, triangular, truncated_poly, Arrow};
use gsilt::gorenstein::gorenstein_check;
use gsilt::homological::{homological_dims, num_simples};

fn main() -> anyhow::Result<()> {
    let p = 3;
    let a0 = truncated_poly(p, 2)?;
    let lam = triangular(&a0)?;
    let arrows = vec![
        Arrow { source: 0, target: 1, name: "a".into() },
        Arrow { source: 1, target: 2, name: "b".into() },
    ];
    // A_3 with the path b·a killed
    let a3 = monomial_quiver(p, 3, &arrows, &[vec![0, 1]], 32)?;
    for (name, a) in [("k[x]/x^2", a0), ("T2(k[x]/x^2)", lam), ("F^3", semisimple(p, 3)?), ("A3/rad^2", a3)] {
        let h = homological_dims(&a, 6)?;
        let g = gorenstein_check(&a, 6)?;
        println!(
            "{name:<14} dim {:>2}  simples {}  gldim {:?}  Gorenstein dim {:?}",
            a.dim(),
            num_simples(&a)?,
            h.gldim,
            g.gdim
        );
    }
    Ok(())
}
