//! Writes Λ and its nine modules as text files and loads them back.

use gsilt::fixtures::lambda;
use gsilt::io::{emit_algebra, write_catalog, Loader};

fn main() -> anyhow::Result<()> {
    let f = lambda(2)?;
    let dir = tempfile::tempdir()?;
    write_catalog(dir.path(), "Lambda", &f.algebra, &f.names(), &f.modules, None)?;
    print!("{}", emit_algebra(&f.algebra));
    let mut loader = Loader::new();
    let list = loader.catalog(&dir.path().join("Lambda.cat"))?;
    println!("loaded {} modules: {:?}", list.modules.len(), list.names);
    print!("{}", std::fs::read_to_string(dir.path().join("Lambda/G4.mod"))?);
    Ok(())
}
