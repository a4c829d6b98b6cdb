//! Projectives, simples, minimal projective resolutions and classical
//! homological dimensions.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, IdempotentSet, ProjClass, Structure};
use crate::decompose::{decompose_summands, iso_indecomposable, locality, Locality};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Subspace};
use crate::module::{direct_sum, end_basis, hom_dim, Module, ModuleMap};

/// A dimension that is either known or only bounded below by a cutoff.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bounded {
    Exactly(usize),
    AtLeast(usize),
}

impl Bounded {
    pub fn exact(self) -> Option<usize> {
        match self {
            Bounded::Exactly(n) => Some(n),
            Bounded::AtLeast(_) => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Bounded::Exactly(_))
    }

    /// Maximum, where an unknown value dominates.
    pub fn max(self, other: Bounded) -> Bounded {
        match (self, other) {
            (Bounded::Exactly(a), Bounded::Exactly(b)) => Bounded::Exactly(a.max(b)),
            (Bounded::AtLeast(a), Bounded::AtLeast(b)) => Bounded::AtLeast(a.max(b)),
            (Bounded::AtLeast(a), Bounded::Exactly(b)) | (Bounded::Exactly(b), Bounded::AtLeast(a)) => {
                Bounded::AtLeast(a.max(b))
            }
        }
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exactly(n) => write!(f, "{n}"),
            Bounded::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

/// Decomposes `A` as a left module and caches the projective classes.
pub fn structure(a: &Arc<Algebra>) -> Result<Arc<Structure>> {
    if let Some(s) = a.structure.get() {
        return Ok(s.clone());
    }
    let parts = match recorded_parts(a)? {
        Some(parts) => parts,
        None => {
            let reg = Module::regular(a);
            decompose_summands(&reg)?
                .into_iter()
                .map(|s| {
                    let e = s.inclusion.mul(&s.projection).mul_vec(a.unit());
                    (e, s.module, s.inclusion)
                })
                .collect()
        }
    };
    let mut idempotents = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = Vec::new();
    for (k, (e, module, _)) in parts.iter().enumerate() {
        idempotents.push(e.clone());
        let mut hit = None;
        for (c, &r) in reps.iter().enumerate() {
            if iso_indecomposable(&parts[r].1, module)?.is_some() {
                hit = Some(c);
                break;
            }
        }
        match hit {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(reps.len());
                reps.push(k);
            }
        }
    }
    // deterministic class order: first basis index touched by the idempotent, then dimension
    let key = |k: usize| {
        let e = &idempotents[k];
        (e.iter().position(|&x| x != 0).unwrap_or(usize::MAX), parts[k].1.dim())
    };
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by_key(|&c| key(reps[c]));
    let mut rank = vec![0; reps.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let class_of: Vec<usize> = class_of.into_iter().map(|c| rank[c]).collect();
    let mut classes = Vec::new();
    for &old in &order {
        let k = reps[old];
        let (_, module, inclusion) = &parts[k];
        let top = module.top();
        classes.push(ProjClass {
            idempotent: idempotents[k].clone(),
            basis: inclusion.clone(),
            projective_actions: module.shared_actions(),
            simple_actions: top.target.shared_actions(),
            simple_dim: top.target.dim(),
            multiplicity: class_of.iter().filter(|&&c| c == rank[old]).count(),
        });
    }
    let st = Arc::new(Structure {
        idempotents,
        class_of,
        classes,
    });
    let _ = a.structure.set(st.clone());
    Ok(a.structure.get().cloned().unwrap_or(st))
}

/// `A e` for recorded idempotents, when each of them is certified primitive.
fn recorded_parts(a: &Arc<Algebra>) -> Result<Option<Vec<(Vec<u32>, Module, Matrix)>>> {
    let Some(rec) = a.recorded_idempotents() else {
        return Ok(None);
    };
    let reg = Module::regular(a);
    let mut out = Vec::with_capacity(rec.len());
    for e in rec {
        let basis = a.element_right(e).column_space();
        let sub = reg.submodule(&basis)?.source;
        if sub.is_zero() || !matches!(locality(&sub, &end_basis(&sub)), Locality::Local) {
            return Ok(None);
        }
        out.push((e.clone(), sub, basis));
    }
    Ok(Some(out))
}

pub fn primitive_idempotents(a: &Arc<Algebra>) -> Result<IdempotentSet> {
    let s = structure(a)?;
    Ok(IdempotentSet {
        elements: s.idempotents.clone(),
        primitive: true,
        orthogonal: true,
        complete: true,
    })
}

/// One indecomposable projective per isomorphism class, in class order.
pub fn indecomposable_projectives(a: &Arc<Algebra>) -> Result<Vec<Module>> {
    let s = structure(a)?;
    Ok(s.classes
        .iter()
        .map(|c| Module::from_shared(a.clone(), c.basis.cols(), c.projective_actions.clone()))
        .collect())
}

/// The simple tops of the indecomposable projectives, in class order.
pub fn simples(a: &Arc<Algebra>) -> Result<Vec<Module>> {
    let s = structure(a)?;
    Ok(s.classes
        .iter()
        .map(|c| Module::from_shared(a.clone(), c.simple_dim, c.simple_actions.clone()))
        .collect())
}

pub fn num_simples(a: &Arc<Algebra>) -> Result<usize> {
    Ok(structure(a)?.classes.len())
}

/// Minimal projective cover `P -> M`; `summands[k]` is the class of the k-th summand of `P`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub map: ModuleMap,
    pub summands: Vec<usize>,
}

pub fn projective_cover(m: &Module) -> Result<Cover> {
    let a = m.algebra().clone();
    let st = structure(&a)?;
    let p = a.p();
    let dim = m.dim();
    let mut w = Subspace::span(&m.radical_basis());
    let mut chosen: Vec<(usize, Vec<u32>)> = Vec::new();
    for (ci, class) in st.classes.iter().enumerate() {
        if w.dim() == dim {
            break;
        }
        let em = m.action_of(&class.idempotent).column_space();
        for c in 0..em.cols() {
            let v = em.column(c);
            if w.contains(&v) {
                continue;
            }
            let gen = m.closure(&Matrix::column_vector(p, &v));
            let both = Matrix::hstack(p, dim, &[w.basis(), gen.basis()]);
            w = Subspace::span(&both);
            chosen.push((ci, v));
        }
    }
    debug_assert_eq!(w.dim(), dim);
    let projs: Vec<Module> = chosen
        .iter()
        .map(|(ci, _)| {
            let c = &st.classes[*ci];
            Module::from_shared(a.clone(), c.basis.cols(), c.projective_actions.clone())
        })
        .collect();
    let refs: Vec<&Module> = projs.iter().collect();
    let sum = direct_sum(&a, &refs)?;
    let blocks: Vec<Matrix> = chosen
        .iter()
        .map(|(ci, v)| {
            let basis = &st.classes[*ci].basis;
            let cols: Vec<Vec<u32>> = (0..basis.cols()).map(|b| m.action_of(&basis.column(b)).mul_vec(v)).collect();
            Matrix::from_columns(p, dim, &cols)
        })
        .collect();
    let brefs: Vec<&Matrix> = blocks.iter().collect();
    let matrix = Matrix::hstack(p, dim, &brefs);
    Ok(Cover {
        map: ModuleMap::unchecked(sum.module, m.clone(), matrix),
        summands: chosen.iter().map(|(c, _)| *c).collect(),
    })
}

/// `Ω M` with its inclusion into the projective cover.
pub fn syzygy(m: &Module) -> Result<ModuleMap> {
    Ok(projective_cover(m)?.map.kernel())
}

pub fn is_projective(m: &Module) -> Result<bool> {
    Ok(syzygy(m)?.source.is_zero())
}

/// Syzygies larger than this multiple of `dim A` stop a resolution early.
pub const SYZYGY_GROWTH_LIMIT: usize = 32;

/// Projective dimension, with `AtLeast(k)` when no resolution of length `< k` ends,
/// where `k` is the cutoff or the step at which a syzygy outgrew the size limit.
pub fn projective_dimension(m: &Module, cutoff: usize) -> Result<Bounded> {
    let mut x = m.clone();
    if x.is_zero() {
        return Ok(Bounded::Exactly(0));
    }
    let limit = SYZYGY_GROWTH_LIMIT * m.algebra().dim().max(m.dim());
    for k in 0..cutoff {
        let y = syzygy(&x)?.source;
        if y.is_zero() {
            return Ok(Bounded::Exactly(k));
        }
        if y.dim() > limit {
            return Ok(Bounded::AtLeast(k + 1));
        }
        x = y;
    }
    Ok(Bounded::AtLeast(cutoff))
}

/// `dim Ext^1(M, N) = dim Hom(ΩM, N) - dim Hom(P, N) + dim Hom(M, N)`.
pub fn ext1_dim(m: &Module, n: &Module) -> Result<usize> {
    let cover = projective_cover(m)?;
    let omega = cover.map.kernel().source;
    Ok(hom_dim(&omega, n)? + hom_dim(m, n)? - hom_dim(&cover.map.source, n)?)
}

pub fn ext_dim(m: &Module, n: &Module, i: usize, cutoff: usize) -> Result<usize> {
    if i == 0 {
        return hom_dim(m, n);
    }
    if i > cutoff.max(1) {
        return Err(Error::CutoffExceeded {
            cutoff,
            what: format!("Ext^{i}"),
        });
    }
    let mut x = m.clone();
    for _ in 1..i {
        x = syzygy(&x)?.source;
        if x.is_zero() {
            return Ok(0);
        }
    }
    ext1_dim(&x, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomologicalDims {
    pub injdim_left: Bounded,
    pub injdim_right: Bounded,
    pub gldim: Bounded,
}

/// Injective dimension of `_A A`, computed as `pd` over `A^op` of `D(_A A)`.
pub fn injdim_left(a: &Arc<Algebra>, cutoff: usize) -> Result<Bounded> {
    projective_dimension(&Module::regular(a).dual(), cutoff)
}

/// Injective dimension of `A_A`, computed as `pd` over `A` of `D(A_A)`.
pub fn injdim_right(a: &Arc<Algebra>, cutoff: usize) -> Result<Bounded> {
    projective_dimension(&Module::regular(&a.opposite()).dual(), cutoff)
}

pub fn global_dimension(a: &Arc<Algebra>, cutoff: usize) -> Result<Bounded> {
    let mut g = Bounded::Exactly(0);
    for s in simples(a)? {
        g = g.max(projective_dimension(&s, cutoff)?);
    }
    Ok(g)
}

pub fn homological_dims(a: &Arc<Algebra>, cutoff: usize) -> Result<HomologicalDims> {
    if cutoff == 0 {
        return Err(Error::CutoffExceeded {
            cutoff,
            what: "homological dimensions (cutoff must be at least 1)".into(),
        });
    }
    Ok(HomologicalDims {
        injdim_left: injdim_left(a, cutoff)?,
        injdim_right: injdim_right(a, cutoff)?,
        gldim: global_dimension(a, cutoff)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{product, semisimple, truncated_poly};
    use crate::decompose::is_isomorphic;

    #[test]
    fn a0_structure() {
        let a0 = truncated_poly(2, 2).unwrap();
        assert_eq!(primitive_idempotents(&a0).unwrap().elements.len(), 1);
        let s = &simples(&a0).unwrap()[0];
        assert_eq!(s.dim(), 1);
        // Ω S = S and Ext^1(S, S) = 1
        let om = syzygy(s).unwrap().source;
        assert!(is_isomorphic(&om, s).unwrap());
        assert_eq!(ext_dim(s, s, 1, 4).unwrap(), 1);
        assert_eq!(projective_dimension(s, 5).unwrap(), Bounded::AtLeast(5));
    }

    #[test]
    fn field_products() {
        let f = truncated_poly(2, 1).unwrap();
        let ff = product(&[&f, &f]).unwrap();
        assert_eq!(primitive_idempotents(&ff).unwrap().elements.len(), 2);
        let ss = semisimple(2, 3).unwrap();
        assert_eq!(global_dimension(&ss, 3).unwrap(), Bounded::Exactly(0));
    }

    #[test]
    fn self_injective_a0() {
        let a0 = truncated_poly(3, 2).unwrap();
        let d = homological_dims(&a0, 4).unwrap();
        assert_eq!(d.injdim_left, Bounded::Exactly(0));
        assert_eq!(d.injdim_right, Bounded::Exactly(0));
        assert_eq!(d.gldim, Bounded::AtLeast(4));
    }

    #[test]
    fn projective_has_iso_cover() {
        let a0 = truncated_poly(2, 2).unwrap();
        let reg = Module::regular(&a0);
        let c = projective_cover(&reg).unwrap();
        assert!(c.map.is_iso());
        assert!(c.map.is_valid());
        assert_eq!(ext_dim(&reg, &simples(&a0).unwrap()[0], 1, 3).unwrap(), 0);
    }
}
