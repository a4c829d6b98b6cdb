//! Finite-dimensional unital algebras over `F_p`, given by structure constants.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::matrix::{Fp, Matrix, Subspace};
use crate::radical::radical_of_span;

/// Bookkeeping produced by decomposing the regular module, cached per algebra.
#[derive(Clone, Debug)]
pub struct Structure {
    /// Complete set of primitive orthogonal idempotents, one per summand of `A`.
    pub idempotents: Vec<Vec<u32>>,
    /// Index into `classes` for each idempotent.
    pub class_of: Vec<usize>,
    pub classes: Vec<ProjClass>,
}

/// One isomorphism class of indecomposable projective modules `Ae`.
#[derive(Clone, Debug)]
pub struct ProjClass {
    pub idempotent: Vec<u32>,
    /// Columns: a basis of `Ae` inside `A`.
    pub basis: Matrix,
    pub projective_actions: Arc<Vec<Matrix>>,
    pub simple_actions: Arc<Vec<Matrix>>,
    pub simple_dim: usize,
    pub multiplicity: usize,
}

pub struct Algebra {
    p: u32,
    labels: Vec<String>,
    unit: Vec<u32>,
    mult: Vec<Vec<u32>>,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    recorded: Option<Vec<Vec<u32>>>,
    opposite: Mutex<Option<Arc<Algebra>>>,
    opposite_of: OnceLock<Weak<Algebra>>,
    generators: OnceLock<Vec<usize>>,
    radical: OnceLock<Matrix>,
    pub(crate) structure: OnceLock<Arc<Structure>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.p)
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.p == other.p && self.unit == other.unit && self.mult == other.mult)
    }
}

impl Eq for Algebra {}

fn left_right(p: u32, n: usize, mult: &[Vec<u32>]) -> (Vec<Matrix>, Vec<Matrix>) {
    let left = (0..n)
        .map(|i| Matrix::from_fn(p, n, n, |r, c| mult[i * n + c][r]))
        .collect();
    let right = (0..n)
        .map(|i| Matrix::from_fn(p, n, n, |r, c| mult[c * n + i][r]))
        .collect();
    (left, right)
}

impl Algebra {
    /// Validates and builds an algebra. `mult[i * n + j]` holds the coefficients of `e_i e_j`.
    pub fn new(p: u32, labels: Vec<String>, unit: Vec<u32>, mult: Vec<Vec<u32>>) -> Result<Arc<Self>> {
        Fp::new(p)?;
        let n = labels.len();
        if unit.len() != n {
            return Err(Error::InvalidAlgebra(format!("unit has {} coefficients, expected {n}", unit.len())));
        }
        if mult.len() != n * n || mult.iter().any(|v| v.len() != n) {
            return Err(Error::InvalidAlgebra("structure constants have the wrong shape".into()));
        }
        if unit.iter().chain(mult.iter().flatten()).any(|&x| x >= p) {
            return Err(Error::InvalidAlgebra(format!("coefficient not reduced mod {p}")));
        }
        let a = Self::unchecked(p, labels, unit, mult, None);
        a.validate()?;
        Ok(Arc::new(a))
    }

    /// As [`Algebra::new`], also recording a complete set of orthogonal idempotents.
    pub fn with_idempotents(
        p: u32,
        labels: Vec<String>,
        unit: Vec<u32>,
        mult: Vec<Vec<u32>>,
        idempotents: Vec<Vec<u32>>,
    ) -> Result<Arc<Self>> {
        let a = Self::new(p, labels, unit, mult)?;
        let a = Self::unchecked(a.p, a.labels.clone(), a.unit.clone(), a.mult.clone(), Some(idempotents));
        a.validate()?;
        Ok(Arc::new(a))
    }

    pub(crate) fn unchecked(
        p: u32,
        labels: Vec<String>,
        unit: Vec<u32>,
        mult: Vec<Vec<u32>>,
        recorded: Option<Vec<Vec<u32>>>,
    ) -> Self {
        let n = labels.len();
        let (left, right) = left_right(p, n, &mult);
        Algebra {
            p,
            labels,
            unit,
            mult,
            left,
            right,
            recorded,
            opposite: Mutex::new(None),
            opposite_of: OnceLock::new(),
            generators: OnceLock::new(),
            radical: OnceLock::new(),
            structure: OnceLock::new(),
        }
    }

    /// Exhaustive associativity and unit check.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let lu = self.element_left(&self.unit);
        let ru = self.element_right(&self.unit);
        if !lu.is_identity() || !ru.is_identity() {
            return Err(Error::InvalidAlgebra("unit is not a two-sided identity".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lij = self.element_left(&self.mult[i * n + j]);
                if lij != self.left[i].mul(&self.left[j]) {
                    let k = (0..n)
                        .find(|&k| lij.column(k) != self.left[i].mul_vec(&self.left[j].column(k)))
                        .unwrap_or(0);
                    return Err(Error::InvalidAlgebra(format!(
                        "associativity fails for (e{} e{}) e{}",
                        i + 1,
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
        if let Some(rec) = &self.recorded {
            let set = IdempotentSet {
                elements: rec.clone(),
                primitive: false,
                orthogonal: true,
                complete: true,
            };
            if !set.verify(self) {
                return Err(Error::InvalidAlgebra("recorded idempotents are not complete and orthogonal".into()));
            }
        }
        Ok(())
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> Fp {
        Fp::unchecked(self.p)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    /// Coefficients of `e_i e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[u32] {
        &self.mult[i * self.dim() + j]
    }

    /// Left multiplication by basis element `i`, as a matrix on coefficient vectors.
    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn lefts(&self) -> &[Matrix] {
        &self.left
    }

    /// Right multiplication by basis element `i`.
    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn element_left(&self, x: &[u32]) -> Matrix {
        combine(self.p, self.dim(), &self.left, x)
    }

    pub fn element_right(&self, x: &[u32]) -> Matrix {
        combine(self.p, self.dim(), &self.right, x)
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.element_left(x).mul_vec(y)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult[i * n + j] == self.mult[j * n + i]))
    }

    /// Idempotents recorded by a builder (complete and orthogonal, not necessarily primitive).
    pub fn recorded_idempotents(&self) -> Option<&[Vec<u32>]> {
        self.recorded.as_deref()
    }

    /// Pointer or value equality of presentations.
    pub fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    /// The opposite algebra; `a.opposite().opposite()` is `a` itself while `a` is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(back) = self.opposite_of.get().and_then(Weak::upgrade) {
            return back;
        }
        let mut slot = self.opposite.lock().expect("opposite cache poisoned");
        if let Some(op) = slot.as_ref() {
            return op.clone();
        }
        let n = self.dim();
        let mult = (0..n * n).map(|k| self.mult[(k % n) * n + k / n].clone()).collect();
        let op = Arc::new(Algebra::unchecked(
            self.p,
            self.labels.clone(),
            self.unit.clone(),
            mult,
            self.recorded.clone(),
        ));
        let _ = op.opposite_of.set(Arc::downgrade(self));
        *slot = Some(op.clone());
        op
    }

    /// A generating set of basis indices (as a unital algebra), found greedily.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let n = self.dim();
            let mut gens: Vec<usize> = Vec::new();
            let mut closure = self.subalgebra_closure(&gens);
            for i in 0..n {
                if closure.dim() == n {
                    break;
                }
                if !closure.contains(&self.basis_vector(i)) {
                    gens.push(i);
                    closure = self.subalgebra_closure(&gens);
                }
            }
            gens
        })
    }

    fn subalgebra_closure(&self, gens: &[usize]) -> Subspace {
        let n = self.dim();
        let mut vecs = vec![self.unit.clone()];
        for &g in gens {
            vecs.push(self.basis_vector(g));
        }
        let mut span = Subspace::span(&Matrix::from_columns(self.p, n, &vecs));
        loop {
            let mut new = span.basis().columns();
            let before = span.dim();
            for &g in gens {
                for v in span.basis().columns() {
                    new.push(self.left[g].mul_vec(&v));
                }
            }
            span = Subspace::span(&Matrix::from_columns(self.p, n, &new));
            if span.dim() == before {
                return span;
            }
        }
    }

    /// Basis of the Jacobson radical as columns of coefficient vectors.
    pub fn radical(&self) -> &Matrix {
        self.radical.get_or_init(|| radical_of_span(self.p, &self.left))
    }

    /// Idempotents used to split Hom equations into blocks: recorded ones, or
    /// the primitive set once it is known.
    pub(crate) fn block_idempotents(&self) -> Option<Vec<Vec<u32>>> {
        if let Some(s) = self.structure.get() {
            return Some(s.idempotents.clone());
        }
        self.recorded.clone()
    }
}

fn combine(p: u32, n: usize, mats: &[Matrix], x: &[u32]) -> Matrix {
    let mut m = Matrix::zeros(p, n, n);
    for (c, mat) in x.iter().zip(mats) {
        m.add_scaled(*c, mat);
    }
    m
}

/// A family of idempotents with the properties it claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet {
    pub elements: Vec<Vec<u32>>,
    pub primitive: bool,
    pub orthogonal: bool,
    pub complete: bool,
}

impl IdempotentSet {
    /// Re-checks idempotency, orthogonality and completeness (primitivity is not re-checked here).
    pub fn verify(&self, a: &Algebra) -> bool {
        let f = a.field();
        for (i, e) in self.elements.iter().enumerate() {
            if a.mul(e, e) != *e {
                return false;
            }
            if self.orthogonal {
                for (j, g) in self.elements.iter().enumerate() {
                    if i != j && a.mul(e, g).iter().any(|&x| x != 0) {
                        return false;
                    }
                }
            }
        }
        if self.complete {
            let mut s = vec![0u32; a.dim()];
            for e in &self.elements {
                for (x, &y) in s.iter_mut().zip(e) {
                    *x = f.add(*x, y);
                }
            }
            if s != a.unit {
                return false;
            }
        }
        true
    }
}

/// `k[x]/(x^n)` with basis `1, x, ..., x^(n-1)`.
pub fn truncated_poly(p: u32, n: usize) -> Result<Arc<Algebra>> {
    if n == 0 {
        return Err(Error::InvalidAlgebra("truncated polynomial ring needs n >= 1".into()));
    }
    Fp::new(p)?;
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut mult = vec![vec![0u32; n]; n * n];
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mult[i * n + j][i + j] = 1;
            }
        }
    }
    let mut unit = vec![0; n];
    unit[0] = 1;
    let a = Algebra::unchecked(p, labels, unit, mult, None);
    a.validate()?;
    Ok(Arc::new(a))
}

/// Upper triangular 2x2 matrices over `base`. Basis: the `11`, `12`, `22` blocks in
/// that order, each spanned by the base basis.
pub fn triangular(base: &Algebra) -> Result<Arc<Algebra>> {
    let p = base.p;
    let m = base.dim();
    let n = 3 * m;
    let mut labels = Vec::with_capacity(n);
    for blk in ["11", "12", "22"] {
        for l in &base.labels {
            labels.push(format!("{l}@{blk}"));
        }
    }
    let mut mult = vec![vec![0u32; n]; n * n];
    // block(i) * block(j): 11*11 -> 11, 11*12 -> 12, 12*22 -> 12, 22*22 -> 22
    let rule = |bi: usize, bj: usize| -> Option<usize> {
        match (bi, bj) {
            (0, 0) => Some(0),
            (0, 1) => Some(1),
            (1, 2) => Some(1),
            (2, 2) => Some(2),
            _ => None,
        }
    };
    for bi in 0..3 {
        for bj in 0..3 {
            let Some(bk) = rule(bi, bj) else { continue };
            for i in 0..m {
                for j in 0..m {
                    let prod = &base.mult[i * m + j];
                    let out = &mut mult[(bi * m + i) * n + bj * m + j];
                    for (k, &c) in prod.iter().enumerate() {
                        out[bk * m + k] = c;
                    }
                }
            }
        }
    }
    let mut e11 = vec![0u32; n];
    let mut e22 = vec![0u32; n];
    for k in 0..m {
        e11[k] = base.unit[k];
        e22[2 * m + k] = base.unit[k];
    }
    let unit: Vec<u32> = e11.iter().zip(&e22).map(|(a, b)| (a + b) % p).collect();
    let a = Algebra::unchecked(p, labels, unit, mult, Some(vec![e11, e22]));
    a.validate()?;
    Ok(Arc::new(a))
}

/// Direct product of algebras over the same field.
pub fn product(parts: &[&Algebra]) -> Result<Arc<Algebra>> {
    let p = parts.first().map_or(2, |a| a.p);
    if parts.iter().any(|a| a.p != p) {
        return Err(Error::AlgebraMismatch("product of algebras over different fields".into()));
    }
    let n: usize = parts.iter().map(|a| a.dim()).sum();
    let mut labels = Vec::with_capacity(n);
    let mut unit = vec![0u32; n];
    let mut mult = vec![vec![0u32; n]; n * n];
    let mut recorded = Vec::new();
    let mut off = 0;
    for (t, a) in parts.iter().enumerate() {
        let m = a.dim();
        for l in &a.labels {
            labels.push(format!("{l}#{}", t + 1));
        }
        for i in 0..m {
            unit[off + i] = a.unit[i];
            for j in 0..m {
                for (k, &c) in a.mult[i * m + j].iter().enumerate() {
                    mult[(off + i) * n + off + j][off + k] = c;
                }
            }
        }
        let own: Vec<Vec<u32>> = a.recorded.clone().unwrap_or_else(|| vec![a.unit.clone()]);
        for e in own {
            let mut v = vec![0u32; n];
            v[off..off + m].copy_from_slice(&e);
            recorded.push(v);
        }
        off += m;
    }
    let a = Algebra::unchecked(p, labels, unit, mult, Some(recorded));
    a.validate()?;
    Ok(Arc::new(a))
}

/// `F_p^k`, the product of `k` copies of the ground field.
pub fn semisimple(p: u32, k: usize) -> Result<Arc<Algebra>> {
    Fp::new(p)?;
    monomial_quiver(p, k, &[], &[], usize::MAX)
}

/// An arrow of a quiver; vertices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

/// Path algebra of a quiver modulo monomial relations.
///
/// Relations are arrow sequences in traversal order (first arrow first). The basis
/// is the trivial paths followed by the nonzero paths in order of length, and the
/// product `u * v` is "`v` then `u`". Fails when more than `bound` paths survive.
pub fn monomial_quiver(
    p: u32,
    vertices: usize,
    arrows: &[Arrow],
    relations: &[Vec<usize>],
    bound: usize,
) -> Result<Arc<Algebra>> {
    Fp::new(p)?;
    if vertices == 0 {
        return Err(Error::InvalidAlgebra("quiver needs at least one vertex".into()));
    }
    for a in arrows {
        if a.source >= vertices || a.target >= vertices {
            return Err(Error::InvalidAlgebra(format!("arrow {} leaves the vertex set", a.name)));
        }
    }
    for r in relations {
        if r.len() < 2 {
            return Err(Error::InvalidAlgebra("monomial relations must have length at least 2".into()));
        }
        if r.iter().any(|&x| x >= arrows.len()) {
            return Err(Error::InvalidAlgebra("relation mentions an unknown arrow".into()));
        }
        if r.windows(2).any(|w| arrows[w[0]].target != arrows[w[1]].source) {
            return Err(Error::InvalidAlgebra("relation is not a path".into()));
        }
    }
    let forbidden = |path: &[usize]| relations.iter().any(|r| path.ends_with(r));
    let mut paths: Vec<Path> = (0..vertices)
        .map(|v| Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        })
        .collect();
    let mut frontier: Vec<Path> = Vec::new();
    for (i, a) in arrows.iter().enumerate() {
        frontier.push(Path {
            source: a.source,
            target: a.target,
            arrows: vec![i],
        });
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for q in frontier {
            if paths.len() >= bound {
                return Err(Error::InvalidAlgebra(format!(
                    "more than {bound} paths survive the relations (algebra too large or infinite)"
                )));
            }
            for (i, a) in arrows.iter().enumerate() {
                if a.source != q.target {
                    continue;
                }
                let mut seq = q.arrows.clone();
                seq.push(i);
                if !forbidden(&seq) {
                    next.push(Path {
                        source: q.source,
                        target: a.target,
                        arrows: seq,
                    });
                }
            }
            paths.push(q);
        }
        frontier = next;
    }
    let n = paths.len();
    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
    let mut mult = vec![vec![0u32; n]; n * n];
    for (i, u) in paths.iter().enumerate() {
        for (j, v) in paths.iter().enumerate() {
            if v.target != u.source {
                continue;
            }
            let mut seq = v.arrows.clone();
            seq.extend_from_slice(&u.arrows);
            let has_forbidden = (1..=seq.len()).any(|k| forbidden(&seq[..k]));
            if has_forbidden {
                continue;
            }
            let w = Path {
                source: v.source,
                target: u.target,
                arrows: seq,
            };
            let k = index[&w];
            mult[i * n + j][k] = 1;
        }
    }
    let labels = paths
        .iter()
        .map(|q| {
            if q.arrows.is_empty() {
                format!("e{}", q.source + 1)
            } else {
                q.arrows.iter().rev().map(|&a| arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
            }
        })
        .collect();
    let mut unit = vec![0u32; n];
    for u in unit.iter_mut().take(vertices) {
        *u = 1;
    }
    let recorded = (0..vertices)
        .map(|v| {
            let mut e = vec![0u32; n];
            e[v] = 1;
            e
        })
        .collect();
    let a = Algebra::unchecked(p, labels, unit, mult, Some(recorded));
    a.validate()?;
    Ok(Arc::new(a))
}

/// Looks for a relabelling of bases taking `a` to `b`, trying permutations only
/// when the algebras have at most eight basis elements.
pub fn basis_permutation_iso(a: &Algebra, b: &Algebra) -> Option<Vec<usize>> {
    let n = a.dim();
    if n != b.dim() || a.p != b.p || n > 8 {
        return None;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let maps = |v: &[u32]| -> Vec<u32> {
            let mut w = vec![0; n];
            for (i, &c) in v.iter().enumerate() {
                w[perm[i]] = c;
            }
            w
        };
        let ok = maps(&a.unit) == b.unit
            && (0..n).all(|i| (0..n).all(|j| maps(&a.mult[i * n + j]) == b.mult[perm[i] * n + perm[j]]));
        if ok {
            return Some(perm);
        }
        // next lexicographic permutation
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| perm[k] < perm[k + 1]) else {
            return None;
        };
        let l = (k + 1..n).rev().find(|&l| perm[k] < perm[l]).unwrap();
        perm.swap(k, l);
        perm[k + 1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_poly_examples() {
        let a0 = truncated_poly(2, 2).unwrap();
        assert_eq!(a0.dim(), 2);
        assert_eq!(a0.product_of_basis(1, 1), &[0, 0]);
        assert_eq!(truncated_poly(2, 1).unwrap().dim(), 1);
        let a = truncated_poly(3, 3).unwrap();
        // x^2 * x = x^3 = 0, x * x = x^2
        assert_eq!(a.product_of_basis(2, 1), &[0, 0, 0]);
        assert_eq!(a.product_of_basis(1, 1), &[0, 0, 1]);
        assert!(truncated_poly(2, 0).is_err());
    }

    #[test]
    fn triangular_dims() {
        let a0 = truncated_poly(2, 2).unwrap();
        let lam = triangular(&a0).unwrap();
        assert_eq!(lam.dim(), 6);
        let set = IdempotentSet {
            elements: lam.recorded_idempotents().unwrap().to_vec(),
            primitive: false,
            orthogonal: true,
            complete: true,
        };
        assert!(set.verify(&lam));
        let field = truncated_poly(2, 1).unwrap();
        assert_eq!(triangular(&field).unwrap().dim(), 3);
        assert_eq!(triangular(&truncated_poly(2, 3).unwrap()).unwrap().dim(), 9);
    }

    #[test]
    fn quiver_examples() {
        let loop_a = vec![Arrow {
            source: 0,
            target: 0,
            name: "a".into(),
        }];
        let q = monomial_quiver(2, 1, &loop_a, &[vec![0, 0]], 100).unwrap();
        let a0 = truncated_poly(2, 2).unwrap();
        assert!(basis_permutation_iso(&q, &a0).is_some());
        let q3 = monomial_quiver(2, 1, &loop_a, &[vec![0, 0, 0]], 100).unwrap();
        assert_eq!(q3.dim(), 3);
        let a2 = monomial_quiver(
            2,
            2,
            &[Arrow {
                source: 0,
                target: 1,
                name: "a".into(),
            }],
            &[],
            100,
        )
        .unwrap();
        assert_eq!(a2.dim(), 3);
        assert!(monomial_quiver(2, 1, &loop_a, &[], 20).is_err());
    }

    #[test]
    fn opposite_is_an_involution() {
        let a0 = truncated_poly(2, 2).unwrap();
        let lam = triangular(&a0).unwrap();
        let op = lam.opposite();
        assert!(Arc::ptr_eq(&op.opposite(), &lam));
        assert!(op.validate().is_ok());
        assert_eq!(*a0.opposite(), *a0);
        assert_ne!(*op, *lam);
    }

    #[test]
    fn generators_generate() {
        let a0 = truncated_poly(3, 4).unwrap();
        assert_eq!(a0.generators(), &[1]);
        let lam = triangular(&truncated_poly(2, 2).unwrap()).unwrap();
        let gens = lam.generators().to_vec();
        assert_eq!(lam.subalgebra_closure(&gens).dim(), 6);
    }

    #[test]
    fn broken_structure_constants_are_rejected() {
        // x*x = 1 and 1 acting as zero on x: not unital
        let r = Algebra::new(
            2,
            vec!["1".into(), "x".into()],
            vec![1, 0],
            vec![vec![1, 0], vec![0, 0], vec![0, 1], vec![1, 0]],
        );
        assert!(r.is_err());
    }
}
