//! Line-oriented text formats: `.alg`, `.mod`, `.map` and `.cat`.
//!
//! Paths inside files are relative to the directory of the file that names
//! them. Emitters write a canonical form, so `emit(parse(emit(x)))` is
//! byte-identical to `emit(x)`. `#` starts a comment.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::gorenstein::{enumerate_gproj, is_gproj, GprojCatalog};
use crate::matrix::{parse_matrix, Fp, Matrix};
use crate::module::{Module, ModuleMap};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn keyword(l: &str) -> (&str, &str) {
    match l.split_once(char::is_whitespace) {
        Some((k, rest)) => (k, rest.trim()),
        None => (l, ""),
    }
}

fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    s.parse().map_err(|e| perr(line, format!("bad number {s:?}: {e}")))
}

fn matrix_at(line: usize, p: u32, s: &str) -> Result<Matrix> {
    parse_matrix(p, s).map_err(|e| match e {
        Error::Parse { msg, .. } => perr(line, msg),
        other => other,
    })
}

fn dense(line: usize, p: u32, n: usize, s: &str) -> Result<Vec<u32>> {
    let f = Fp::new(p)?;
    let v: Vec<u32> = s
        .split_whitespace()
        .map(|x| num::<i64>(line, x).map(|c| f.reduce(c)))
        .collect::<Result<_>>()?;
    if v.len() != n {
        return Err(perr(line, format!("expected {n} coefficients, found {}", v.len())));
    }
    Ok(v)
}

fn render_dense(v: &[u32]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_algebra(text: &str) -> Result<Arc<Algebra>> {
    let mut p = None;
    let mut n = None;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut unit = None;
    let mut mult: Vec<Vec<u32>> = Vec::new();
    let mut idem = Vec::new();
    let mut last = 0;
    for (ln, l) in lines(text) {
        last = ln;
        let (k, rest) = keyword(l);
        match k {
            "field" => p = Some(Fp::new(num(ln, rest)?)?.p()),
            "dim" => {
                let d: usize = num(ln, rest)?;
                labels = vec![None; d];
                mult = vec![vec![0; d]; d * d];
                n = Some(d);
            }
            "label" | "unit" | "mult" | "idempotent" if n.is_none() || p.is_none() => {
                return Err(perr(ln, "`field` and `dim` must come first"));
            }
            "label" => {
                let (i, name) = keyword(rest);
                let i: usize = num(ln, i)?;
                if i == 0 || i > labels.len() || name.is_empty() {
                    return Err(perr(ln, "label index out of range or empty label"));
                }
                labels[i - 1] = Some(name.to_string());
            }
            "unit" => unit = Some(dense(ln, p.unwrap(), n.unwrap(), rest)?),
            "idempotent" => idem.push(dense(ln, p.unwrap(), n.unwrap(), rest)?),
            "mult" => {
                let d = n.unwrap();
                let f = Fp::new(p.unwrap())?;
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| perr(ln, "expected `mult i j = k:c ...`"))?;
                let ij: Vec<usize> = lhs.split_whitespace().map(|x| num(ln, x)).collect::<Result<_>>()?;
                if ij.len() != 2 || ij.iter().any(|&x| x == 0 || x > d) {
                    return Err(perr(ln, "mult needs two basis indices in range"));
                }
                let mut v = vec![0; d];
                for term in rhs.split_whitespace() {
                    let (kk, c) = term.split_once(':').ok_or_else(|| perr(ln, format!("bad term {term:?}")))?;
                    let kk: usize = num(ln, kk)?;
                    if kk == 0 || kk > d {
                        return Err(perr(ln, format!("basis index {kk} out of range")));
                    }
                    v[kk - 1] = f.add(v[kk - 1], f.reduce(num(ln, c)?));
                }
                mult[(ij[0] - 1) * d + ij[1] - 1] = v;
            }
            _ => return Err(perr(ln, format!("unknown keyword {k:?}"))),
        }
    }
    let p = p.ok_or_else(|| perr(last, "missing `field`"))?;
    n.ok_or_else(|| perr(last, "missing `dim`"))?;
    let unit = unit.ok_or_else(|| perr(last, "missing `unit`"))?;
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or_else(|| format!("e{}", i + 1)))
        .collect();
    if idem.is_empty() {
        Algebra::new(p, labels, unit, mult)
    } else {
        Algebra::with_idempotents(p, labels, unit, mult, idem)
    }
}

pub fn emit_algebra(a: &Algebra) -> String {
    let n = a.dim();
    let mut s = String::new();
    let _ = writeln!(s, "field {}", a.p());
    let _ = writeln!(s, "dim {n}");
    for (i, l) in a.labels().iter().enumerate() {
        let _ = writeln!(s, "label {} {l}", i + 1);
    }
    let _ = writeln!(s, "unit {}", render_dense(a.unit()));
    if let Some(idem) = a.recorded_idempotents() {
        for e in idem {
            let _ = writeln!(s, "idempotent {}", render_dense(e));
        }
    }
    for i in 0..n {
        for j in 0..n {
            let v = a.product_of_basis(i, j);
            if v.iter().all(|&c| c == 0) {
                continue;
            }
            let terms: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, c)| format!("{}:{c}", k + 1))
                .collect();
            let _ = writeln!(s, "mult {} {} = {}", i + 1, j + 1, terms.join(" "));
        }
    }
    s
}

/// Module body without the `algebra` header, over a known algebra.
pub fn parse_module_body(alg: &Arc<Algebra>, text: &str) -> Result<Module> {
    let mut dim = None;
    let mut acts: Vec<Option<Matrix>> = vec![None; alg.dim()];
    let mut last = 0;
    for (ln, l) in lines(text) {
        last = ln;
        let (k, rest) = keyword(l);
        match k {
            "algebra" => {}
            "dim" => dim = Some(num::<usize>(ln, rest)?),
            "act" => {
                let (i, m) = rest.split_once('=').ok_or_else(|| perr(ln, "expected `act i = [...]`"))?;
                let i: usize = num(ln, i.trim())?;
                if i == 0 || i > alg.dim() {
                    return Err(perr(ln, format!("basis index {i} out of range")));
                }
                let d = dim.ok_or_else(|| perr(ln, "`dim` must precede `act`"))?;
                let m = if d == 0 { Matrix::zeros(alg.p(), 0, 0) } else { matrix_at(ln, alg.p(), m)? };
                if m.rows() != d || m.cols() != d {
                    return Err(perr(ln, format!("action of basis element {i} is not {d}x{d}")));
                }
                acts[i - 1] = Some(m);
            }
            _ => return Err(perr(ln, format!("unknown keyword {k:?}"))),
        }
    }
    let d = dim.ok_or_else(|| perr(last, "missing `dim`"))?;
    let acts = acts
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| perr(last, format!("missing action of basis element {}", i + 1))))
        .collect::<Result<Vec<_>>>();
    if d == 0 {
        return Ok(Module::zero(alg));
    }
    Module::new(alg.clone(), acts?)
}

pub fn emit_module(m: &Module, algebra_path: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra {algebra_path}");
    let _ = writeln!(s, "dim {}", m.dim());
    for (i, a) in m.actions().iter().enumerate() {
        let _ = writeln!(s, "act {} = {a}", i + 1);
    }
    s
}

pub fn emit_map(f: &ModuleMap, source_path: &str, target_path: &str) -> String {
    format!("source {source_path}\ntarget {target_path}\nmatrix = {}\n", f.matrix)
}

pub fn emit_catalog(algebra_path: &str, gdim: Option<usize>, entries: &[(String, String)]) -> String {
    let mut s = format!("algebra {algebra_path}\n");
    if let Some(g) = gdim {
        let _ = writeln!(s, "gdim {g}");
    }
    for (name, path) in entries {
        let _ = writeln!(s, "entry {name} {path}");
    }
    s
}

/// A named list of modules loaded from a `.cat` file.
#[derive(Clone, Debug)]
pub struct ModuleList {
    pub algebra: Arc<Algebra>,
    pub names: Vec<String>,
    pub modules: Vec<Module>,
    /// Declared Gorenstein dimension; entries were certified Gorenstein-projective.
    pub gdim: Option<usize>,
}

impl ModuleList {
    /// Certifies the entries as Gorenstein-projective; the catalog is marked
    /// exhaustive when a fresh enumeration finds nothing outside it.
    pub fn into_gproj(self, step_limit: usize) -> Result<GprojCatalog> {
        let gdim = self
            .gdim
            .ok_or_else(|| Error::NotGproj("catalog has no `gdim` line".into()))?;
        let mut cat = GprojCatalog::from_modules(gdim, self.names, self.modules)?;
        let fresh = enumerate_gproj(&self.algebra, gdim, &[], step_limit)?;
        let mut covered = fresh.exhaustive && fresh.len() == cat.len();
        for m in fresh.members() {
            covered = covered && cat.class.position(m)?.is_some();
        }
        cat.exhaustive = covered;
        Ok(cat)
    }
}

/// Reads files, resolving relative paths and sharing algebras by canonical path.
#[derive(Default)]
pub struct Loader {
    algebras: HashMap<PathBuf, Arc<Algebra>>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(rel)
}

fn header<'a>(text: &'a str, key: &str) -> Result<(usize, &'a str)> {
    for (ln, l) in lines(text) {
        let (k, rest) = keyword(l);
        if k == key {
            return Ok((ln, rest));
        }
    }
    Err(perr(0, format!("missing `{key}` line")))
}

impl Loader {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn algebra(&mut self, path: &Path) -> Result<Arc<Algebra>> {
        let key = fs::canonicalize(path).unwrap_or_else(|_| path.to_path_buf());
        if let Some(a) = self.algebras.get(&key) {
            return Ok(a.clone());
        }
        let a = parse_algebra(&read(path)?)?;
        self.algebras.insert(key, a.clone());
        Ok(a)
    }

    /// Registers an in-memory algebra under a path, so later files naming it share it.
    pub fn register(&mut self, path: &Path, a: Arc<Algebra>) {
        let key = fs::canonicalize(path).unwrap_or_else(|_| path.to_path_buf());
        self.algebras.insert(key, a);
    }

    pub fn module(&mut self, path: &Path) -> Result<Module> {
        let text = read(path)?;
        let (_, rel) = header(&text, "algebra")?;
        let alg = self.algebra(&resolve(path, rel))?;
        parse_module_body(&alg, &text)
    }

    pub fn map(&mut self, path: &Path) -> Result<ModuleMap> {
        let text = read(path)?;
        let (_, s) = header(&text, "source")?;
        let (_, t) = header(&text, "target")?;
        let (ln, m) = header(&text, "matrix")?;
        let source = self.module(&resolve(path, s))?;
        let target = self.module(&resolve(path, t))?;
        let m = m.trim_start_matches('=').trim();
        let matrix = if source.dim() == 0 || target.dim() == 0 {
            Matrix::zeros(source.p(), target.dim(), source.dim())
        } else {
            matrix_at(ln, source.p(), m)?
        };
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(perr(ln, format!("map matrix must be {}x{}", target.dim(), source.dim())));
        }
        ModuleMap::new(source, target, matrix)
    }

    /// Loads a catalog; with a `gdim` line every entry is re-certified Gorenstein-projective.
    pub fn catalog(&mut self, path: &Path) -> Result<ModuleList> {
        let text = read(path)?;
        let (_, rel) = header(&text, "algebra")?;
        let algebra = self.algebra(&resolve(path, rel))?;
        let mut names = Vec::new();
        let mut modules = Vec::new();
        let mut gdim = None;
        for (ln, l) in lines(&text) {
            let (k, rest) = keyword(l);
            match k {
                "algebra" => {}
                "gdim" => gdim = Some(num::<usize>(ln, rest)?),
                "entry" => {
                    let (name, file) = keyword(rest);
                    if file.is_empty() {
                        return Err(perr(ln, "expected `entry <name> <path>`"));
                    }
                    let m = self.module(&resolve(path, file))?;
                    if !Algebra::same(m.algebra(), &algebra) {
                        return Err(perr(ln, format!("entry {name} is over a different algebra")));
                    }
                    names.push(name.to_string());
                    modules.push(m);
                }
                _ => return Err(perr(ln, format!("unknown keyword {k:?}"))),
            }
        }
        if let Some(g) = gdim {
            for (name, m) in names.iter().zip(&modules) {
                if !is_gproj(m, g)? {
                    return Err(Error::NotGproj(format!("catalog entry {name}")));
                }
            }
        }
        Ok(ModuleList {
            algebra,
            names,
            modules,
            gdim,
        })
    }
}

/// Writes an algebra and a catalog of modules into `dir` as `<stem>.alg`, `<stem>.cat`
/// and `<stem>/<name>.mod`; returns the catalog path.
pub fn write_catalog(
    dir: &Path,
    stem: &str,
    alg: &Algebra,
    names: &[String],
    modules: &[Module],
    gdim: Option<usize>,
) -> Result<PathBuf> {
    fs::create_dir_all(dir.join(stem))?;
    fs::write(dir.join(format!("{stem}.alg")), emit_algebra(alg))?;
    let mut entries = Vec::new();
    for (name, m) in names.iter().zip(modules) {
        let rel = format!("{stem}/{name}.mod");
        fs::write(dir.join(&rel), emit_module(m, &format!("../{stem}.alg")))?;
        entries.push((name.clone(), rel));
    }
    let cat = dir.join(format!("{stem}.cat"));
    fs::write(&cat, emit_catalog(&format!("{stem}.alg"), gdim, &entries))?;
    Ok(cat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{triangular, truncated_poly};
    use crate::fixtures::lambda;

    #[test]
    fn algebra_round_trip_is_byte_identical() {
        for a in [truncated_poly(3, 3).unwrap(), triangular(&truncated_poly(2, 2).unwrap()).unwrap()] {
            let s = emit_algebra(&a);
            let b = parse_algebra(&s).unwrap();
            assert_eq!(*a, *b);
            assert_eq!(emit_algebra(&b), s);
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "field 2\ndim 2\n# comment\nunit 1 0\nmult 1 3 = 1:1\n";
        match parse_algebra(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_algebra("field 4\n"), Err(Error::NotPrime(4))));
    }

    #[test]
    fn broken_intertwining_names_the_basis_pair() {
        let a = truncated_poly(2, 2).unwrap();
        let text = "algebra a.alg\ndim 1\nact 1 = [1]\nact 2 = [1]\n";
        let err = parse_module_body(&a, text).unwrap_err().to_string();
        assert!(err.contains("(2, 2)"), "{err}");
    }

    #[test]
    fn catalog_files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let f = lambda(2).unwrap();
        let cat = write_catalog(dir.path(), "c9", &f.algebra, &f.names(), &f.modules, None).unwrap();
        let mut ld = Loader::new();
        let list = ld.catalog(&cat).unwrap();
        assert_eq!(list.modules.len(), 9);
        for (a, b) in list.modules.iter().zip(&f.modules) {
            assert_eq!(a.actions(), b.actions());
        }
        let text = fs::read_to_string(dir.path().join("c9/G3.mod")).unwrap();
        assert_eq!(emit_module(&list.modules[2], "../c9.alg"), text);
    }
}
