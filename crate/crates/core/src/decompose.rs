//! Krull-Schmidt decomposition and isomorphism testing.
//!
//! Summands are split off with Fitting's lemma applied to endomorphisms
//! `f - c` (random ones first, seeded). A summand is accepted as indecomposable
//! only with a certificate: `End/rad End` is a field, i.e. commutative with a
//! one-dimensional Frobenius-fixed space.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Quotient, Subspace};
use crate::module::{check_same, end_basis, hom_basis, Module};
use crate::radical::{element, radical_of_span};

static DEFAULT_SEED: AtomicU64 = AtomicU64::new(0x5eed);

/// Seed used by [`decompose`] and everything built on it.
pub fn set_default_seed(seed: u64) {
    DEFAULT_SEED.store(seed, Ordering::Relaxed);
}

pub fn default_seed() -> u64 {
    DEFAULT_SEED.load(Ordering::Relaxed)
}

#[derive(Clone, Copy, Debug)]
pub struct DecompOptions {
    pub seed: u64,
    /// Random endomorphisms tried before giving up on a piece without certificate.
    pub budget: usize,
}

impl Default for DecompOptions {
    fn default() -> Self {
        DecompOptions {
            seed: default_seed(),
            budget: 256,
        }
    }
}

/// An indecomposable summand with `projection * inclusion = id`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

pub fn decompose_summands(m: &Module) -> Result<Vec<Summand>> {
    decompose_summands_with(m, DecompOptions::default())
}

pub fn decompose_summands_with(m: &Module, opts: DecompOptions) -> Result<Vec<Summand>> {
    let p = m.p();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut stack = vec![Summand {
        module: m.clone(),
        inclusion: Matrix::identity(p, m.dim()),
        projection: Matrix::identity(p, m.dim()),
    }];
    let mut done = Vec::new();
    while let Some(s) = stack.pop() {
        if s.module.is_zero() {
            continue;
        }
        match split(&s.module, &mut rng, opts.budget)? {
            None => done.push(s),
            Some((b1, b2)) => {
                let k1 = b1.cols();
                let full = Matrix::hstack(p, s.module.dim(), &[&b1, &b2]);
                let inv = full.inverse().expect("Fitting decomposition is direct");
                let p1 = inv.block(0, 0, k1, inv.cols());
                let p2 = inv.block(k1, 0, inv.rows() - k1, inv.cols());
                let x1 = s.module.submodule(&b1)?.source;
                let x2 = s.module.submodule(&b2)?.source;
                stack.push(Summand {
                    module: x2,
                    inclusion: s.inclusion.mul(&b2),
                    projection: p2.mul(&s.projection),
                });
                stack.push(Summand {
                    module: x1,
                    inclusion: s.inclusion.mul(&b1),
                    projection: p1.mul(&s.projection),
                });
            }
        }
    }
    done.sort_by_key(|s| s.module.dim());
    Ok(done)
}

/// Indecomposable summands grouped into isomorphism classes with multiplicities.
pub fn decompose(m: &Module) -> Result<Vec<(Module, usize)>> {
    let mut classes: Vec<(Module, usize)> = Vec::new();
    for s in decompose_summands(m)? {
        let mut found = false;
        for (x, k) in classes.iter_mut() {
            if iso_indecomposable(x, &s.module)?.is_some() {
                *k += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push((s.module, 1));
        }
    }
    Ok(classes)
}

pub fn is_indecomposable(m: &Module) -> Result<bool> {
    Ok(!m.is_zero() && decompose_summands(m)?.len() == 1)
}

/// Outcome of the locality test on `End(M)`.
#[derive(Clone, Debug)]
pub enum Locality {
    Local,
    /// A non-trivial Fitting splitting of `M`.
    Splits(Matrix, Matrix),
    /// `End/rad` is not a field but no splitting was found deterministically.
    NotLocal,
}

/// Certificate for `End(M)` being local (`M != 0`).
pub fn locality(m: &Module, end: &[Matrix]) -> Locality {
    let p = m.p();
    let d = end.len();
    if d <= 1 {
        return Locality::Local;
    }
    let j = radical_of_span(p, end);
    if d - j.cols() == 1 {
        return Locality::Local;
    }
    let dim = m.dim();
    let vecs: Vec<Vec<u32>> = end.iter().map(|f| f.data().to_vec()).collect();
    let coords = Subspace::from_basis(Matrix::from_columns(p, dim * dim, &vecs));
    let rad = Subspace::span(&j);
    let mut commutative = true;
    'outer: for a in 0..d {
        for b in a + 1..d {
            let c = end[a].mul(&end[b]).sub(&end[b].mul(&end[a]));
            let v = coords.coords(c.data()).expect("End is closed under composition");
            if !rad.contains(&v) {
                commutative = false;
                break 'outer;
            }
        }
    }
    if !commutative {
        return Locality::NotLocal;
    }
    let q = Quotient::new(&j);
    let sec = q.section(p);
    let qd = q.dim();
    let cols: Vec<Vec<u32>> = (0..qd)
        .map(|t| {
            let x = element(p, end, &sec.column(t));
            let xp = x.pow(p as u64);
            q.project(&coords.coords(xp.data()).expect("closed under composition"))
        })
        .collect();
    let frob = Matrix::from_columns(p, qd, &cols);
    let fixed = frob.sub(&Matrix::identity(p, qd)).kernel();
    if fixed.cols() == 1 {
        return Locality::Local;
    }
    for t in 0..fixed.cols() {
        let lift = element(p, end, &sec.mul_vec(&fixed.column(t)));
        if let Some((a, b)) = fitting_any_shift(&lift, dim) {
            return Locality::Splits(a, b);
        }
    }
    Locality::NotLocal
}

fn fitting_any_shift(f: &Matrix, dim: usize) -> Option<(Matrix, Matrix)> {
    let p = f.p();
    let id = Matrix::identity(p, dim);
    for c in 0..p.min(64) {
        let g = f.sub(&id.scale(c));
        let h = g.pow(dim as u64);
        let r = h.rank();
        if r > 0 && r < dim {
            return Some((h.kernel(), h.column_space()));
        }
    }
    None
}

fn split(m: &Module, rng: &mut ChaCha8Rng, budget: usize) -> Result<Option<(Matrix, Matrix)>> {
    let dim = m.dim();
    if dim <= 1 {
        return Ok(None);
    }
    let end = end_basis(m);
    if end.len() <= 1 {
        return Ok(None);
    }
    let p = m.p();
    let random_try = |rng: &mut ChaCha8Rng| {
        let coeffs: Vec<u32> = (0..end.len()).map(|_| rng.gen_range(0..p)).collect();
        fitting_any_shift(&element(p, &end, &coeffs), dim)
    };
    let quick = 6.min(budget);
    for _ in 0..quick {
        if let Some(s) = random_try(rng) {
            return Ok(Some(s));
        }
    }
    match locality(m, &end) {
        Locality::Local => return Ok(None),
        Locality::Splits(a, b) => return Ok(Some((a, b))),
        Locality::NotLocal => {}
    }
    for _ in quick..budget {
        if let Some(s) = random_try(rng) {
            return Ok(Some(s));
        }
    }
    Err(Error::DecompositionInconclusive { attempts: budget, dim })
}

/// Cheap invariant: ranks of the block idempotents.
fn block_profile(m: &Module) -> Vec<usize> {
    match m.algebra().block_idempotents() {
        Some(es) => es.iter().map(|e| m.action_of(e).rank()).collect(),
        None => Vec::new(),
    }
}

/// Isomorphism of indecomposables: some Hom basis element is invertible iff they are isomorphic.
pub fn iso_indecomposable(x: &Module, y: &Module) -> Result<Option<Matrix>> {
    check_same(x.algebra(), y.algebra())?;
    if x.dim() != y.dim() {
        return Ok(None);
    }
    if x.dim() == 0 {
        return Ok(Some(Matrix::zeros(x.p(), 0, 0)));
    }
    if block_profile(x) != block_profile(y) {
        return Ok(None);
    }
    for h in hom_basis(x, y)? {
        if h.inverse().is_some() {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// An isomorphism `m -> n` when one exists.
pub fn iso_witness(m: &Module, n: &Module) -> Result<Option<Matrix>> {
    check_same(m.algebra(), n.algebra())?;
    if m.dim() != n.dim() || block_profile(m) != block_profile(n) {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(Matrix::zeros(m.p(), 0, 0)));
    }
    let sm = decompose_summands(m)?;
    let sn = decompose_summands(n)?;
    if sm.len() != sn.len() {
        return Ok(None);
    }
    let mut used = vec![false; sn.len()];
    let mut w = Matrix::zeros(m.p(), n.dim(), m.dim());
    for a in &sm {
        let mut hit = None;
        for (j, b) in sn.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(h) = iso_indecomposable(&a.module, &b.module)? {
                hit = Some((j, h));
                break;
            }
        }
        let Some((j, h)) = hit else { return Ok(None) };
        used[j] = true;
        w.add_assign(&sn[j].inclusion.mul(&h).mul(&a.projection));
    }
    debug_assert!(w.inverse().is_some());
    Ok(Some(w))
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    Ok(iso_witness(m, n)?.is_some())
}

/// Index of the first entry of `list` isomorphic to the indecomposable `x`.
pub fn find_iso(list: &[Module], x: &Module) -> Result<Option<usize>> {
    for (i, y) in list.iter().enumerate() {
        if iso_indecomposable(y, x)?.is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{semisimple, truncated_poly};
    use crate::module::{direct_sum, ModuleMap};

    #[test]
    fn regular_a0_is_indecomposable() {
        let a0 = truncated_poly(2, 2).unwrap();
        assert!(is_indecomposable(&Module::regular(&a0)).unwrap());
    }

    #[test]
    fn semisimple_regular_splits() {
        let s = semisimple(3, 3).unwrap();
        let parts = decompose_summands(&Module::regular(&s)).unwrap();
        assert_eq!(parts.len(), 3);
        let mut sum = Matrix::zeros(3, 3, 3);
        for x in &parts {
            assert!(x.projection.mul(&x.inclusion).is_identity());
            sum.add_assign(&x.inclusion.mul(&x.projection));
        }
        assert!(sum.is_identity());
    }

    #[test]
    fn iso_tests() {
        let a0 = truncated_poly(2, 2).unwrap();
        let reg = Module::regular(&a0);
        let s = Module::new(a0.clone(), vec![Matrix::identity(2, 1), Matrix::zeros(2, 1, 1)]).unwrap();
        let ss = direct_sum(&a0, &[&s, &s]).unwrap().module;
        assert!(!is_isomorphic(&reg, &ss).unwrap());
        let w = iso_witness(&reg, &reg).unwrap().unwrap();
        assert!(ModuleMap::new(reg.clone(), reg.clone(), w).is_ok());
        let grouped = decompose(&ss).unwrap();
        assert_eq!(grouped.len(), 1);
        assert_eq!(grouped[0].1, 2);
    }

    #[test]
    fn field_extension_endomorphisms_are_local() {
        // F_4 = F_2[t]/(t^2 + t + 1) over itself: End is F_4, a field of dimension 2
        let f4 = crate::algebra::Algebra::new(
            2,
            vec!["1".into(), "t".into()],
            vec![1, 0],
            vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![1, 1]],
        )
        .unwrap();
        let m = Module::regular(&f4);
        let end = end_basis(&m);
        assert_eq!(end.len(), 2);
        assert!(matches!(locality(&m, &end), Locality::Local));
        assert!(is_indecomposable(&m).unwrap());
        let f2xf2 = semisimple(2, 2).unwrap();
        let r = Module::regular(&f2xf2);
        assert!(matches!(locality(&r, &end_basis(&r)), Locality::Splits(..)));
    }
}
