//! Finite-dimensional left modules given by action matrices, and module maps.
//!
//! Actions use the column convention: `act(i)` is the matrix of `e_i` acting on
//! column vectors, so `act(ab) = act(a) act(b)`. A map `M -> N` is a
//! `dim N x dim M` matrix commuting with the actions.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Quotient, Subspace};

#[derive(Clone)]
pub struct Module {
    alg: Arc<Algebra>,
    dim: usize,
    actions: Arc<Vec<Matrix>>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over dim-{} algebra)", self.dim, self.alg.dim())
    }
}

pub(crate) fn check_same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<()> {
    if Algebra::same(a, b) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch("modules live over different algebras".into()))
    }
}

impl Module {
    /// Builds a module and checks the module axioms exhaustively.
    pub fn new(alg: Arc<Algebra>, actions: Vec<Matrix>) -> Result<Self> {
        if actions.len() != alg.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                actions.len(),
                alg.dim()
            )));
        }
        let dim = actions.first().map_or(0, |m| m.rows());
        for (i, a) in actions.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim || a.p() != alg.p() {
                return Err(Error::InvalidModule(format!("action of basis element {} has the wrong shape", i + 1)));
            }
        }
        let m = Module {
            alg,
            dim,
            actions: Arc::new(actions),
        };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn unchecked(alg: Arc<Algebra>, dim: usize, actions: Vec<Matrix>) -> Self {
        debug_assert_eq!(actions.len(), alg.dim());
        Module {
            alg,
            dim,
            actions: Arc::new(actions),
        }
    }

    pub(crate) fn from_shared(alg: Arc<Algebra>, dim: usize, actions: Arc<Vec<Matrix>>) -> Self {
        Module { alg, dim, actions }
    }

    /// Re-checks `act(1) = id` and `act(e_i) act(e_j) = act(e_i e_j)`, naming the failing pair.
    pub fn validate(&self) -> Result<()> {
        let a = &self.alg;
        if !self.action_of(a.unit()).is_identity() {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.actions[i].mul(&self.actions[j]);
                if lhs != self.action_of(a.product_of_basis(i, j)) {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative at basis pair ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        let acts = (0..alg.dim()).map(|_| Matrix::zeros(alg.p(), 0, 0)).collect();
        Module::unchecked(alg.clone(), 0, acts)
    }

    /// `A` as a left module over itself.
    pub fn regular(alg: &Arc<Algebra>) -> Self {
        Module::unchecked(alg.clone(), alg.dim(), alg.lefts().to_vec())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn p(&self) -> u32 {
        self.alg.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.actions[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub(crate) fn shared_actions(&self) -> Arc<Vec<Matrix>> {
        self.actions.clone()
    }

    /// Action of an arbitrary algebra element given by coefficients.
    pub fn action_of(&self, x: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.p(), self.dim, self.dim);
        for (c, a) in x.iter().zip(self.actions.iter()) {
            m.add_scaled(*c, a);
        }
        m
    }

    pub fn identity(&self) -> ModuleMap {
        ModuleMap::unchecked(self.clone(), self.clone(), Matrix::identity(self.p(), self.dim))
    }

    /// Submodule spanned by the columns of `basis` (must be independent and invariant).
    pub fn submodule(&self, basis: &Matrix) -> Result<ModuleMap> {
        let sub = Subspace::from_basis(basis.clone());
        let mut acts = Vec::with_capacity(self.actions.len());
        for (i, a) in self.actions.iter().enumerate() {
            let img = a.mul(basis);
            let c = sub
                .coords_matrix(&img)
                .ok_or_else(|| Error::InvalidModule(format!("subspace not invariant under basis element {}", i + 1)))?;
            acts.push(c);
        }
        let m = Module::unchecked(self.alg.clone(), basis.cols(), acts);
        Ok(ModuleMap::unchecked(m, self.clone(), basis.clone()))
    }

    /// Submodule generated by the columns of `gens`.
    pub fn generated_submodule(&self, gens: &Matrix) -> ModuleMap {
        let span = self.closure(gens);
        self.submodule(span.basis()).expect("closure is invariant")
    }

    pub(crate) fn closure(&self, gens: &Matrix) -> Subspace {
        let mut span = Subspace::span(gens);
        let g = self.alg.generators().to_vec();
        loop {
            let before = span.dim();
            let b = span.basis().clone();
            let mut parts = vec![b.clone()];
            let imgs: Vec<Matrix> = g.iter().map(|&k| self.actions[k].mul(&b)).collect();
            parts.extend(imgs);
            let refs: Vec<&Matrix> = parts.iter().collect();
            span = Subspace::span(&Matrix::hstack(self.p(), self.dim, &refs));
            if span.dim() == before {
                return span;
            }
        }
    }

    /// Quotient by the submodule spanned by the columns of `w` (assumed invariant).
    pub fn quotient(&self, w: &Matrix) -> ModuleMap {
        let q = Quotient::new(w);
        let p = self.p();
        let pr = q.projection(p);
        let sec = q.section(p);
        let acts = self.actions.iter().map(|a| pr.mul(a).mul(&sec)).collect();
        let m = Module::unchecked(self.alg.clone(), q.dim(), acts);
        ModuleMap::unchecked(self.clone(), m, pr)
    }

    /// `rad M = J M` as a basis matrix.
    pub fn radical_basis(&self) -> Matrix {
        let j = self.alg.radical();
        let mut cols = Vec::new();
        for c in 0..j.cols() {
            let a = self.action_of(&j.column(c));
            cols.push(a);
        }
        let refs: Vec<&Matrix> = cols.iter().collect();
        Matrix::hstack(self.p(), self.dim, &refs).column_space()
    }

    /// Projection `M -> M / rad M`.
    pub fn top(&self) -> ModuleMap {
        self.quotient(&self.radical_basis())
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical_basis().cols() == 0
    }

    /// `D M = Hom_k(M, k)` as a module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let acts = self.actions.iter().map(Matrix::transpose).collect();
        Module::unchecked(self.alg.opposite(), self.dim, acts)
    }

    /// Restriction to the same vector space viewed over an equal algebra handle.
    pub fn rebase(&self, alg: &Arc<Algebra>) -> Result<Module> {
        check_same(&self.alg, alg)?;
        Ok(Module::from_shared(alg.clone(), self.dim, self.actions.clone()))
    }
}

/// Direct sum with canonical inclusions and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub inclusions: Vec<Matrix>,
    pub projections: Vec<Matrix>,
}

pub fn direct_sum(alg: &Arc<Algebra>, parts: &[&Module]) -> Result<DirectSum> {
    for m in parts {
        check_same(alg, &m.alg)?;
    }
    let p = alg.p();
    let dim: usize = parts.iter().map(|m| m.dim).sum();
    let acts = (0..alg.dim())
        .map(|i| {
            let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.actions[i]).collect();
            Matrix::block_diagonal(p, &blocks)
        })
        .collect();
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut off = 0;
    for m in parts {
        let mut inc = Matrix::zeros(p, dim, m.dim);
        let mut pr = Matrix::zeros(p, m.dim, dim);
        for k in 0..m.dim {
            inc.set(off + k, k, 1);
            pr.set(k, off + k, 1);
        }
        inclusions.push(inc);
        projections.push(pr);
        off += m.dim;
    }
    Ok(DirectSum {
        module: Module::unchecked(alg.clone(), dim, acts),
        inclusions,
        projections,
    })
}

/// `M^k`.
pub fn power(m: &Module, k: usize) -> Module {
    let parts: Vec<&Module> = std::iter::repeat(m).take(k).collect();
    direct_sum(&m.alg, &parts).expect("same algebra").module
}

#[derive(Clone)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub matrix: Matrix,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({} -> {}: {})", self.source.dim, self.target.dim, self.matrix)
    }
}

impl ModuleMap {
    pub fn new(source: Module, target: Module, matrix: Matrix) -> Result<Self> {
        check_same(&source.alg, &target.alg)?;
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::InvalidMap(format!(
                "matrix is {}x{} but the map goes from dimension {} to {}",
                matrix.rows(),
                matrix.cols(),
                source.dim,
                target.dim
            )));
        }
        let f = ModuleMap { source, target, matrix };
        if let Some(i) = f.failing_index() {
            return Err(Error::InvalidMap(format!("map does not commute with basis element {}", i + 1)));
        }
        Ok(f)
    }

    pub(crate) fn unchecked(source: Module, target: Module, matrix: Matrix) -> Self {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (target.dim, source.dim));
        ModuleMap { source, target, matrix }
    }

    fn failing_index(&self) -> Option<usize> {
        (0..self.source.alg.dim()).find(|&i| {
            self.matrix.mul(&self.source.actions[i]) != self.target.actions[i].mul(&self.matrix)
        })
    }

    pub fn is_valid(&self) -> bool {
        self.failing_index().is_none()
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        ModuleMap::unchecked(
            source.clone(),
            target.clone(),
            Matrix::zeros(source.p(), target.dim, source.dim),
        )
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap::unchecked(first.source.clone(), self.target.clone(), self.matrix.mul(&first.matrix))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim == self.target.dim && self.is_injective()
    }

    /// Inclusion of the kernel.
    pub fn kernel(&self) -> ModuleMap {
        let k = self.matrix.kernel();
        self.source.submodule(&k).expect("kernel is invariant")
    }

    /// Inclusion of the image into the target.
    pub fn image(&self) -> ModuleMap {
        let b = self.matrix.column_space();
        self.target.submodule(&b).expect("image is invariant")
    }

    /// Corestriction `source -> Im`.
    pub fn onto_image(&self) -> (ModuleMap, ModuleMap) {
        let inc = self.image();
        let sub = Subspace::from_basis(inc.matrix.clone());
        let m = sub.coords_matrix(&self.matrix).expect("columns lie in the image");
        (ModuleMap::unchecked(self.source.clone(), inc.source.clone(), m), inc)
    }

    /// Projection of the target onto the cokernel.
    pub fn cokernel(&self) -> ModuleMap {
        self.target.quotient(&self.matrix.column_space())
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap::unchecked(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    /// `D f: D N -> D M` over the opposite algebra.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap::unchecked(self.target.dual(), self.source.dual(), self.matrix.transpose())
    }
}

/// Basis of `Hom_A(M, N)` as `dim N x dim M` matrices, in reduced echelon order.
pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<Matrix>> {
    check_same(&m.alg, &n.alg)?;
    let (dm, dn) = (m.dim, n.dim);
    let p = m.p();
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let mut cands = match m.alg.block_idempotents() {
        Some(es) => block_candidates(m, n, &es),
        None => (0..dn * dm)
            .map(|k| {
                let mut f = Matrix::zeros(p, dn, dm);
                f.set(k / dm, k % dm, 1);
                f
            })
            .collect(),
    };
    for &g in m.alg.generators() {
        if cands.is_empty() {
            break;
        }
        let (am, an) = (&m.actions[g], &n.actions[g]);
        let cols: Vec<Vec<u32>> = cands.iter().map(|f| f.mul(am).sub(&an.mul(f)).into_data()).collect();
        let k = Matrix::from_columns(p, dn * dm, &cols).kernel();
        cands = (0..k.cols()).map(|c| combination(p, dn, dm, &cands, &k.column(c))).collect();
    }
    if cands.is_empty() {
        return Ok(cands);
    }
    let rows: Vec<Vec<u32>> = cands.into_iter().map(Matrix::into_data).collect();
    let stacked = Matrix::from_columns(p, dn * dm, &rows).transpose();
    let rr = stacked.row_reduce();
    Ok((0..rr.rank)
        .map(|r| Matrix::from_vec(p, dn, dm, rr.rref.row(r).to_vec()).expect("reduced entries"))
        .collect())
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

pub fn end_basis(m: &Module) -> Vec<Matrix> {
    hom_basis(m, m).expect("same algebra")
}

pub(crate) fn combination(p: u32, rows: usize, cols: usize, mats: &[Matrix], coeffs: &[u32]) -> Matrix {
    let mut f = Matrix::zeros(p, rows, cols);
    for (c, m) in coeffs.iter().zip(mats) {
        f.add_scaled(*c, m);
    }
    f
}

/// Rank-one candidates `F` with `F e = e F` for the given complete orthogonal idempotents.
fn block_candidates(m: &Module, n: &Module, idems: &[Vec<u32>]) -> Vec<Matrix> {
    let mut out = Vec::new();
    for e in idems {
        let em = m.action_of(e);
        let en = n.action_of(e);
        let um = em.column_space();
        let un = en.column_space();
        if um.cols() == 0 || un.cols() == 0 {
            continue;
        }
        let pm = Subspace::from_basis(um).coords_matrix(&em).expect("image of e");
        for s in 0..un.cols() {
            let col = Matrix::column_vector(m.p(), &un.column(s));
            for t in 0..pm.rows() {
                let row = pm.select_rows(&[t]);
                out.push(col.mul(&row));
            }
        }
    }
    out
}

/// `Hom_A(M, A)` as a left module over the opposite algebra, acting by right
/// multiplication on values, together with the chosen basis of maps.
pub fn hom_to_regular(m: &Module) -> Result<(Module, Vec<Matrix>)> {
    let a = m.alg.clone();
    let reg = Module::regular(&a);
    let basis = hom_basis(m, &reg)?;
    let p = a.p();
    let n = a.dim();
    let dm = m.dim;
    let k = basis.len();
    let vecs: Vec<Vec<u32>> = basis.iter().map(|f| f.data().to_vec()).collect();
    let span = Subspace::from_basis(Matrix::from_columns(p, n * dm, &vecs));
    let acts = (0..n)
        .map(|i| {
            let cols: Vec<Vec<u32>> = basis
                .iter()
                .map(|f| span.coords(a.right(i).mul(f).data()).expect("right multiplication is A-linear"))
                .collect();
            Matrix::from_columns(p, k, &cols)
        })
        .collect();
    Ok((Module::unchecked(a.opposite(), k, acts), basis))
}

/// A Hom space with a fixed basis and coordinate extraction.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<Matrix>,
    span: Subspace,
}

impl HomSpace {
    pub fn new(source: &Module, target: &Module) -> Result<Self> {
        let basis = hom_basis(source, target)?;
        Ok(Self::from_basis(source, target, basis))
    }

    pub fn from_basis(source: &Module, target: &Module, basis: Vec<Matrix>) -> Self {
        let vecs: Vec<Vec<u32>> = basis.iter().map(|f| f.data().to_vec()).collect();
        let span = Subspace::from_basis(Matrix::from_columns(source.p(), source.dim * target.dim, &vecs));
        HomSpace {
            source: source.clone(),
            target: target.clone(),
            basis,
            span,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, f: &Matrix) -> Option<Vec<u32>> {
        self.span.coords(f.data())
    }

    pub fn element(&self, c: &[u32]) -> Matrix {
        combination(self.source.p(), self.target.dim, self.source.dim, &self.basis, c)
    }
}

/// Matrix of `g -> g f` from `Hom(Y, X)` to `Hom(S, X)` for `f: S -> Y`.
pub fn precompose_matrix(f: &Matrix, from: &HomSpace, to: &HomSpace) -> Matrix {
    let cols: Vec<Vec<u32>> = from
        .basis
        .iter()
        .map(|g| to.coords(&g.mul(f)).expect("composite is a module map"))
        .collect();
    Matrix::from_columns(f.p(), to.dim(), &cols)
}

/// Matrix of `g -> f g` from `Hom(X, S)` to `Hom(X, Y)` for `f: S -> Y`.
pub fn postcompose_matrix(f: &Matrix, from: &HomSpace, to: &HomSpace) -> Matrix {
    let cols: Vec<Vec<u32>> = from
        .basis
        .iter()
        .map(|g| to.coords(&f.mul(g)).expect("composite is a module map"))
        .collect();
    Matrix::from_columns(f.p(), to.dim(), &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::truncated_poly;

    fn simple_a0() -> (Arc<Algebra>, Module) {
        let a0 = truncated_poly(2, 2).unwrap();
        let s = Module::new(a0.clone(), vec![Matrix::identity(2, 1), Matrix::zeros(2, 1, 1)]).unwrap();
        (a0, s)
    }

    #[test]
    fn hom_examples_over_a0() {
        let (a0, s) = simple_a0();
        let reg = Module::regular(&a0);
        assert_eq!(hom_dim(&reg, &reg).unwrap(), 2);
        assert_eq!(hom_dim(&s, &Module::zero(&a0)).unwrap(), 0);
        // maps S -> A0 land in the socle span{x}
        let h = hom_basis(&s, &reg).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].column(0), vec![0, 1]);
    }

    #[test]
    fn sum_of_simples_has_four_dim_end() {
        let (a0, s) = simple_a0();
        let ss = direct_sum(&a0, &[&s, &s]).unwrap().module;
        assert_eq!(ss.dim(), 2);
        assert_eq!(end_basis(&ss).len(), 4);
    }

    #[test]
    fn kernel_image_cokernel_rank_nullity() {
        let (a0, s) = simple_a0();
        let reg = Module::regular(&a0);
        let f = ModuleMap::new(reg.clone(), s.clone(), Matrix::from_rows(2, &[vec![1, 0]])).unwrap();
        assert_eq!(f.kernel().source.dim(), 1);
        assert_eq!(f.image().source.dim(), 1);
        assert_eq!(f.cokernel().target.dim(), 0);
        let z = ModuleMap::zero(&reg, &s);
        assert_eq!(z.kernel().source.dim(), 2);
        assert_eq!(z.cokernel().target.dim(), 1);
        assert!(reg.identity().kernel().source.is_zero());
    }

    #[test]
    fn broken_intertwining_is_rejected() {
        let (a0, s) = simple_a0();
        let reg = Module::regular(&a0);
        let err = ModuleMap::new(s, reg, Matrix::from_rows(2, &[vec![1], vec![0]])).unwrap_err();
        assert!(err.to_string().contains("basis element 2"));
    }

    #[test]
    fn broken_module_is_rejected() {
        let a0 = truncated_poly(2, 2).unwrap();
        // x acting invertibly violates x*x = 0
        let err = Module::new(a0, vec![Matrix::identity(2, 1), Matrix::identity(2, 1)]).unwrap_err();
        assert!(matches!(err, Error::InvalidModule(_)));
    }

    #[test]
    fn hom_to_regular_of_regular_is_regular_over_opposite() {
        let (a0, _) = simple_a0();
        let (h, basis) = hom_to_regular(&Module::regular(&a0)).unwrap();
        assert_eq!(h.dim(), 2);
        assert_eq!(basis.len(), 2);
        assert!(h.validate().is_ok());
    }
}
