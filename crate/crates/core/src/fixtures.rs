//! Worked instances: `Λ = T₂(k[x]/x²)` with its nine indecomposables, the
//! local algebra `k[x]/x²`, and semisimple algebras.
//!
//! A `Λ`-module is a triple `(M1, M2, φ: M2 -> M1)` of `k[x]/x²`-modules; the
//! element `[[a, b], [0, c]]` acts on `(m1; m2)` as `(a m1 + b φ(m2); c m2)`.

use std::sync::Arc;

use crate::algebra::{semisimple, triangular, truncated_poly, Algebra};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::module::Module;

/// Builds the `T₂(B)`-module `(m1, m2, φ)`; `lam` must be `triangular(B)`.
pub fn triangular_module(lam: &Arc<Algebra>, m1: &Module, m2: &Module, phi: &Matrix) -> Result<Module> {
    let b = m1.algebra();
    let k = b.dim();
    let p = b.p();
    let (d1, d2) = (m1.dim(), m2.dim());
    let d = d1 + d2;
    let mut acts = Vec::with_capacity(3 * k);
    for i in 0..k {
        let mut m = Matrix::zeros(p, d, d);
        m.set_block(0, 0, m1.action(i));
        acts.push(m);
    }
    for i in 0..k {
        let mut m = Matrix::zeros(p, d, d);
        m.set_block(0, d1, &m1.action(i).mul(phi));
        acts.push(m);
    }
    for i in 0..k {
        let mut m = Matrix::zeros(p, d, d);
        m.set_block(d1, d1, m2.action(i));
        acts.push(m);
    }
    Module::new(lam.clone(), acts)
}

/// `k[x]/x²` with its simple and regular modules.
#[derive(Clone, Debug)]
pub struct LocalFixture {
    pub algebra: Arc<Algebra>,
    pub simple: Module,
    pub regular: Module,
}

pub fn local_a0(p: u32) -> Result<LocalFixture> {
    let a0 = truncated_poly(p, 2)?;
    let simple = Module::new(a0.clone(), vec![Matrix::identity(p, 1), Matrix::zeros(p, 1, 1)])?;
    let regular = Module::regular(&a0);
    Ok(LocalFixture {
        algebra: a0,
        simple,
        regular,
    })
}

/// `Λ = T₂(k[x]/x²)` and its nine indecomposables `G1, ..., G9`.
#[derive(Clone, Debug)]
pub struct LambdaFixture {
    pub base: LocalFixture,
    pub algebra: Arc<Algebra>,
    /// `G1 .. G9` at indices `0 .. 8`.
    pub modules: Vec<Module>,
}

impl LambdaFixture {
    pub fn g(&self, i: usize) -> &Module {
        &self.modules[i - 1]
    }

    pub fn names(&self) -> Vec<String> {
        (1..=9).map(|i| format!("G{i}")).collect()
    }
}

pub fn lambda(p: u32) -> Result<LambdaFixture> {
    let base = local_a0(p)?;
    let lam = triangular(&base.algebra)?;
    let s = &base.simple;
    let a = &base.regular;
    let zero = Module::zero(&base.algebra);
    let m = |x: &[Vec<i64>]| Matrix::from_rows(p, x);
    let z = |r: usize, c: usize| Matrix::zeros(p, r, c);
    let specs: Vec<(&Module, &Module, Matrix)> = vec![
        (s, &zero, z(1, 0)),
        (a, &zero, z(2, 0)),
        (s, s, m(&[vec![1]])),
        // socle inclusion S -> A
        (a, s, m(&[vec![0], vec![1]])),
        (a, a, Matrix::identity(p, 2)),
        (&zero, a, z(0, 2)),
        // top projection A -> S
        (s, a, m(&[vec![1, 0]])),
        (&zero, s, z(0, 1)),
        // multiplication by x on A
        (a, a, m(&[vec![0, 0], vec![1, 0]])),
    ];
    let modules = specs
        .into_iter()
        .map(|(m1, m2, phi)| triangular_module(&lam, m1, m2, &phi))
        .collect::<Result<Vec<_>>>()?;
    Ok(LambdaFixture {
        base,
        algebra: lam,
        modules,
    })
}

/// Semisimple `F_p^k` with its simples.
pub fn semisimple_fixture(p: u32, k: usize) -> Result<(Arc<Algebra>, Vec<Module>)> {
    let a = semisimple(p, k)?;
    let simples = crate::homological::simples(&a)?;
    Ok((a, simples))
}
