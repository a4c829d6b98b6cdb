//! Krull-Schmidt decomposition, isomorphism tests and Hom dimensions over Λ.

use gsilt::decompose::{decompose, is_isomorphic};
use gsilt::fixtures::lambda;
use gsilt::module::{direct_sum, hom_dim, Module};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let names = f.names();
    let reg = Module::regular(&f.algebra);
    print!("Λ =");
    for (m, k) in decompose(&reg)? {
        let i = f.modules.iter().position(|g| is_isomorphic(g, &m).unwrap_or(false));
        print!(" {}^{k}", i.map_or("?".to_string(), |i| names[i].clone()));
    }
    println!();

    let m = direct_sum(&f.algebra, &[f.g(3), f.g(7), f.g(3)])?.module;
    let parts = decompose(&m)?;
    println!("G3 + G7 + G3 splits into {} classes of dims {:?}", parts.len(), parts.iter().map(|(x, k)| (x.dim(), *k)).collect::<Vec<_>>());

    println!("dim Hom(Gi, Gj):");
    for x in &f.modules {
        let row: Vec<String> = f.modules.iter().map(|y| hom_dim(x, y).map(|d| d.to_string())).collect::<Result<_, _>>()?;
        println!("  {}", row.join(" "));
    }
    Ok(())
}
