//! The CM-Auslander algebra `Γ = End_A(E)^op` of a Gorenstein-projective
//! catalog, the functors `Hom_A(E, -)` and `Hom_A(-, E)`, the relative
//! transpose and translate, and the classical AR-translate over `Γ`.
//!
//! Left `Γ`-modules carry the action `φ · f = f ∘ φ`; right `Γ`-modules are
//! left modules over `Γ^op` with `φ · f = φ ∘ f`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::gorenstein::{GprojCatalog, PresentationPair};
use crate::homological::projective_cover;
use crate::matrix::{Matrix, Subspace};
use crate::module::{check_same, hom_basis, hom_to_regular, postcompose_matrix, precompose_matrix, HomSpace, Module, ModuleMap};

/// Position of `Hom_A(E_i, E_j)` inside the basis of `Γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomBlock {
    pub source: usize,
    pub target: usize,
    pub offset: usize,
    pub dim: usize,
}

#[derive(Clone, Debug)]
pub struct CmContext {
    pub catalog: GprojCatalog,
    pub gamma: Arc<Algebra>,
    /// Indexed by `i * n + j`.
    pub blocks: Vec<HomBlock>,
}

impl CmContext {
    pub fn algebra(&self) -> &Arc<Algebra> {
        self.catalog.algebra()
    }

    pub fn block(&self, i: usize, j: usize) -> HomBlock {
        self.blocks[i * self.catalog.len() + j]
    }

    /// The map `E_i -> E_j` named by a basis element of `Γ`.
    pub fn basis_map(&self, b: usize) -> (usize, usize, &Matrix) {
        let blk = self
            .blocks
            .iter()
            .find(|blk| b >= blk.offset && b < blk.offset + blk.dim)
            .expect("basis index in range");
        (blk.source, blk.target, &self.catalog.class.hom(blk.source, blk.target)[b - blk.offset])
    }

    /// `id_{E_i}` as an element of `Γ`.
    pub fn idempotent(&self, i: usize) -> Vec<u32> {
        let p = self.gamma.p();
        let blk = self.block(i, i);
        let ids = &self.catalog.class.hom(i, i);
        let d = self.catalog.members()[i].dim();
        let span = hom_span(p, d, d, ids);
        let c = span.coords(Matrix::identity(p, d).data()).expect("identity is an endomorphism");
        let mut v = vec![0; self.gamma.dim()];
        v[blk.offset..blk.offset + blk.dim].copy_from_slice(&c);
        v
    }

    /// `Hom_A(E, M)` as a left `Γ`-module.
    pub fn eval(&self, m: &Module) -> Result<Module> {
        check_same(self.algebra(), m.algebra())?;
        let spaces = self.covariant_spaces(m)?;
        let offs = offsets(&spaces);
        let total = *offs.last().unwrap_or(&0);
        let p = self.gamma.p();
        let acts = (0..self.gamma.dim())
            .map(|b| {
                let (i, j, phi) = self.basis_map(b);
                let mut a = Matrix::zeros(p, total, total);
                a.set_block(offs[i], offs[j], &precompose_matrix(phi, &spaces[j], &spaces[i]));
                a
            })
            .collect();
        Module::new(self.gamma.clone(), acts)
    }

    /// `Hom_A(E, g)`: post-composition, block diagonal.
    pub fn eval_map(&self, g: &ModuleMap) -> Result<ModuleMap> {
        let src = self.covariant_spaces(&g.source)?;
        let tgt = self.covariant_spaces(&g.target)?;
        let blocks: Vec<Matrix> = src
            .iter()
            .zip(&tgt)
            .map(|(s, t)| postcompose_matrix(&g.matrix, s, t))
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let matrix = Matrix::block_diagonal(self.gamma.p(), &refs);
        ModuleMap::new(self.eval(&g.source)?, self.eval(&g.target)?, matrix)
    }

    /// `Hom_A(M, E)` as a left `Γ^op`-module.
    pub fn coeval(&self, m: &Module) -> Result<Module> {
        check_same(self.algebra(), m.algebra())?;
        let spaces = self.contravariant_spaces(m)?;
        let offs = offsets(&spaces);
        let total = *offs.last().unwrap_or(&0);
        let p = self.gamma.p();
        let acts = (0..self.gamma.dim())
            .map(|b| {
                let (i, j, phi) = self.basis_map(b);
                let mut a = Matrix::zeros(p, total, total);
                a.set_block(offs[j], offs[i], &postcompose_matrix(phi, &spaces[i], &spaces[j]));
                a
            })
            .collect();
        Module::new(self.gamma.opposite(), acts)
    }

    /// `Hom_A(g, E)`: pre-composition, from `(Y, E)` to `(X, E)` for `g: X -> Y`.
    pub fn coeval_map(&self, g: &ModuleMap) -> Result<ModuleMap> {
        let src = self.contravariant_spaces(&g.target)?;
        let tgt = self.contravariant_spaces(&g.source)?;
        let blocks: Vec<Matrix> = src
            .iter()
            .zip(&tgt)
            .map(|(s, t)| precompose_matrix(&g.matrix, s, t))
            .collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let matrix = Matrix::block_diagonal(self.gamma.p(), &refs);
        ModuleMap::new(self.coeval(&g.target)?, self.coeval(&g.source)?, matrix)
    }

    fn covariant_spaces(&self, m: &Module) -> Result<Vec<HomSpace>> {
        self.catalog.members().iter().map(|e| HomSpace::new(e, m)).collect()
    }

    fn contravariant_spaces(&self, m: &Module) -> Result<Vec<HomSpace>> {
        self.catalog.members().iter().map(|e| HomSpace::new(m, e)).collect()
    }
}

fn offsets(spaces: &[HomSpace]) -> Vec<usize> {
    let mut offs = vec![0];
    for s in spaces {
        offs.push(offs.last().unwrap() + s.dim());
    }
    offs
}

fn hom_span(p: u32, rows: usize, cols: usize, basis: &[Matrix]) -> Subspace {
    let vecs: Vec<Vec<u32>> = basis.iter().map(|f| f.data().to_vec()).collect();
    Subspace::from_basis(Matrix::from_columns(p, rows * cols, &vecs))
}

/// Assembles `Γ = End_A(E)^op` in catalog-order blocks; `φ ·_Γ ψ = ψ ∘ φ`.
pub fn cm_auslander_algebra(cat: &GprojCatalog) -> Result<CmContext> {
    if !cat.exhaustive {
        return Err(Error::NonExhaustive("the CM-Auslander algebra needs an exhaustive catalog".into()));
    }
    let p = cat.algebra().p();
    let n = cat.len();
    let dims: Vec<usize> = cat.dims();
    let mut blocks = Vec::with_capacity(n * n);
    let mut offset = 0;
    for i in 0..n {
        for j in 0..n {
            let dim = cat.class.hom(i, j).len();
            blocks.push(HomBlock {
                source: i,
                target: j,
                offset,
                dim,
            });
            offset += dim;
        }
    }
    let total = offset;
    let spans: Vec<Subspace> = (0..n * n)
        .map(|k| hom_span(p, dims[k % n], dims[k / n], cat.class.hom(k / n, k % n)))
        .collect();
    let mut labels = Vec::with_capacity(total);
    let mut owner = Vec::with_capacity(total);
    for blk in &blocks {
        for k in 0..blk.dim {
            labels.push(format!("h{}.{}.{}", blk.source + 1, blk.target + 1, k + 1));
            owner.push((blk.source, blk.target, k));
        }
    }
    let mut mult = vec![vec![0u32; total]; total * total];
    for (x, &(i, j, a)) in owner.iter().enumerate() {
        for (y, &(j2, k, b)) in owner.iter().enumerate() {
            if j != j2 {
                continue;
            }
            let comp = cat.class.hom(j, k)[b].mul(&cat.class.hom(i, j)[a]);
            let c = spans[i * n + k].coords(comp.data()).expect("composite of module maps");
            let off = blocks[i * n + k].offset;
            mult[x * total + y][off..off + c.len()].copy_from_slice(&c);
        }
    }
    let mut idems = Vec::with_capacity(n);
    let mut unit = vec![0u32; total];
    for i in 0..n {
        let blk = blocks[i * n + i];
        let c = spans[i * n + i]
            .coords(Matrix::identity(p, dims[i]).data())
            .expect("identity is an endomorphism");
        let mut e = vec![0u32; total];
        e[blk.offset..blk.offset + blk.dim].copy_from_slice(&c);
        for (u, v) in unit.iter_mut().zip(&e) {
            *u = (*u + v) % p;
        }
        idems.push(e);
    }
    let gamma = Algebra::with_idempotents(p, labels, unit, mult, idems)?;
    Ok(CmContext {
        catalog: cat.clone(),
        gamma,
        blocks,
    })
}

/// `Tr_G M = Coker((G0, E) -> (G1, E))` as a `Γ^op`-module.
pub fn relative_transpose(ctx: &CmContext, pres: &PresentationPair) -> Result<Module> {
    let h = ctx.coeval_map(&pres.theta)?;
    Ok(h.cokernel().target)
}

/// `τ_G M = Ker(D(G1, E) -> D(G0, E))` as a `Γ`-module.
pub fn tau_g(ctx: &CmContext, pres: &PresentationPair) -> Result<Module> {
    let h = ctx.coeval_map(&pres.theta)?.dual();
    Ok(h.kernel().source.rebase(&ctx.gamma)?)
}

/// `(P1 -> P0)` minimal projective presentation of `n`.
pub fn minimal_projective_presentation(n: &Module) -> Result<(ModuleMap, ModuleMap)> {
    let c0 = projective_cover(n)?;
    let k = c0.map.kernel();
    let c1 = projective_cover(&k.source)?;
    Ok((k.after(&c1.map), c0.map))
}

/// Transpose from a minimal projective presentation: `Coker(Hom(P0, A) -> Hom(P1, A))`.
pub fn classical_transpose(n: &Module) -> Result<Module> {
    let (d, _) = minimal_projective_presentation(n)?;
    let (h0, b0) = hom_to_regular(&d.target)?;
    let (h1, b1) = hom_to_regular(&d.source)?;
    let a = n.algebra();
    let s1 = HomSpace::from_basis(&d.source, &Module::regular(a), b1);
    let cols: Vec<Vec<u32>> = b0
        .iter()
        .map(|f| s1.coords(&f.mul(&d.matrix)).expect("composite is a module map"))
        .collect();
    let m = Matrix::from_columns(a.p(), h1.dim(), &cols);
    Ok(ModuleMap::unchecked(h0, h1, m).cokernel().target)
}

/// Auslander-Reiten translate `τ N = D Tr N`.
pub fn classical_tau(n: &Module) -> Result<Module> {
    let tr = classical_transpose(n)?;
    tr.dual().rebase(n.algebra())
}

/// Inverse translate `τ^{-1} N = Tr D N`.
pub fn classical_tau_inverse(n: &Module) -> Result<Module> {
    classical_transpose(&n.dual())?.rebase(n.algebra())
}

/// Injective envelope `N -> D P`, where `P -> D N` is a projective cover over the opposite algebra.
pub fn injective_envelope(n: &Module) -> Result<ModuleMap> {
    let cover = projective_cover(&n.dual())?;
    let d = cover.map.dual();
    let alg = n.algebra();
    Ok(ModuleMap::unchecked(
        n.clone(),
        d.target.rebase(alg)?,
        d.matrix,
    ))
}

/// `dim Hom(X, Y)` modulo maps factoring through an injective module.
pub fn injectively_stable_hom_dim(x: &Module, y: &Module) -> Result<usize> {
    let all = hom_basis(x, y)?.len();
    if all == 0 {
        return Ok(0);
    }
    let env = injective_envelope(x)?;
    let through: Vec<Vec<u32>> = hom_basis(&env.target, y)?
        .iter()
        .map(|g| g.mul(&env.matrix).into_data())
        .collect();
    let r = Matrix::from_columns(x.p(), x.dim() * y.dim(), &through).rank();
    Ok(all - r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{is_indecomposable, iso_witness};
    use crate::fixtures::{lambda, local_a0};
    use crate::gorenstein::{enumerate_gproj, proper_presentation};
    use crate::homological::{indecomposable_projectives, is_projective};
    use crate::module::hom_dim;

    #[test]
    fn gamma_over_a0() {
        let f = local_a0(2).unwrap();
        let cat = enumerate_gproj(&f.algebra, 0, &[], 16).unwrap();
        let ctx = cm_auslander_algebra(&cat).unwrap();
        assert_eq!(ctx.gamma.dim(), 5);
        let s = ctx.eval(&f.simple).unwrap();
        assert_eq!(s.dim(), 2);
        for (i, e) in cat.members().iter().enumerate() {
            let pe = ctx.eval(e).unwrap();
            assert!(is_projective(&pe).unwrap());
            assert!(is_indecomposable(&pe).unwrap());
            assert_eq!(pe.dim(), (0..cat.len()).map(|k| ctx.block(k, i).dim).sum::<usize>());
        }
        assert_eq!(indecomposable_projectives(&ctx.gamma).unwrap().len(), 2);
    }

    #[test]
    fn eval_is_functorial() {
        let f = lambda(2).unwrap();
        let cat = enumerate_gproj(&f.algebra, 1, &[], 16).unwrap();
        let ctx = cm_auslander_algebra(&cat).unwrap();
        let (g8, g7) = (f.g(8), f.g(7));
        let pres = proper_presentation(g8, &cat).unwrap();
        let a = ctx.eval_map(&pres.cover).unwrap();
        let b = ctx.eval_map(&pres.theta).unwrap();
        let comp = ctx.eval_map(&pres.cover.after(&pres.theta)).unwrap();
        assert_eq!(comp.matrix, a.after(&b).matrix);
        assert!(comp.matrix.is_zero());
        assert_eq!(ctx.eval(g7).unwrap().dim(), cat.members().iter().map(|e| hom_dim(e, g7).unwrap()).sum::<usize>());
    }

    #[test]
    fn tau_g_matches_classical_tau() {
        let f = lambda(2).unwrap();
        let cat = enumerate_gproj(&f.algebra, 1, &[], 16).unwrap();
        let ctx = cm_auslander_algebra(&cat).unwrap();
        for m in &f.modules {
            let pres = proper_presentation(m, &cat).unwrap();
            let t = tau_g(&ctx, &pres).unwrap();
            let d_tr = relative_transpose(&ctx, &pres).unwrap().dual().rebase(&ctx.gamma).unwrap();
            assert!(iso_witness(&t, &d_tr).unwrap().is_some());
            let c = classical_tau(&ctx.eval(m).unwrap()).unwrap();
            assert!(iso_witness(&t, &c).unwrap().is_some(), "dims {} vs {}", t.dim(), c.dim());
        }
    }
}
