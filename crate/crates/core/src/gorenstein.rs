//! Gorenstein-projective modules: detection, enumeration of a finite catalog,
//! minimal right approximations, proper presentations, Gpd and Gext.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::algebra::Algebra;
use crate::decompose::{decompose_summands, find_iso};
use crate::error::{Error, Result};
use crate::homological::{ext_dim, injdim_left, injdim_right, syzygy, Bounded};
use crate::matrix::{Matrix, Subspace};
use crate::module::{check_same, direct_sum, hom_basis, hom_to_regular, DirectSum, Module, ModuleMap};
use crate::radical::radical_of_span;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinStatus {
    pub is_gorenstein: bool,
    /// Common self-injective dimension when both sides are finite within the cutoff.
    pub gdim: Option<usize>,
    pub injdim_left: Bounded,
    pub injdim_right: Bounded,
}

impl GorensteinStatus {
    pub fn inconclusive(&self) -> bool {
        !self.is_gorenstein
    }
}

/// Both self-injective dimensions, and their common value when finite.
pub fn gorenstein_check(a: &Arc<Algebra>, cutoff: usize) -> Result<GorensteinStatus> {
    let l = injdim_left(a, cutoff)?;
    let r = injdim_right(a, cutoff)?;
    let gdim = match (l, r) {
        (Bounded::Exactly(x), Bounded::Exactly(y)) if x == y => Some(x),
        (Bounded::Exactly(x), Bounded::Exactly(y)) => {
            return Err(Error::TheoremViolation(format!(
                "finite self-injective dimensions differ on the two sides ({x} vs {y})"
            )))
        }
        _ => None,
    };
    Ok(GorensteinStatus {
        is_gorenstein: gdim.is_some(),
        gdim,
        injdim_left: l,
        injdim_right: r,
    })
}

/// Exact test over a `d`-Gorenstein algebra: `Ext^i(M, A) = 0` for `1 <= i <= d`.
pub fn is_gproj(m: &Module, gdim: usize) -> Result<bool> {
    let reg = Module::regular(m.algebra());
    let mut x = m.clone();
    for _ in 1..=gdim {
        if x.is_zero() {
            return Ok(true);
        }
        if ext_dim(&x, &reg, 1, 1)? != 0 {
            return Ok(false);
        }
        x = syzygy(&x)?.source;
    }
    Ok(true)
}

/// Verdict of the heuristic test used when the algebra is not known to be Gorenstein.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeuristicGproj {
    pub passes: bool,
    pub cutoff: usize,
    pub unverified_beyond_cutoff: bool,
}

/// `Ext^i(M, A) = 0` and `Ext^i(Tr M, A^op) = 0` for `1 <= i <= cutoff`.
pub fn is_gproj_heuristic(m: &Module, cutoff: Option<usize>) -> Result<HeuristicGproj> {
    let cutoff = cutoff.ok_or_else(|| Error::CutoffExceeded {
        cutoff: 0,
        what: "heuristic Gorenstein-projectivity needs an explicit cutoff".into(),
    })?;
    let a = m.algebra();
    let reg = Module::regular(a);
    let reg_op = Module::regular(&a.opposite());
    let tr = transpose(m)?;
    let mut passes = true;
    let (mut x, mut y) = (m.clone(), tr);
    for _ in 1..=cutoff {
        if !x.is_zero() && ext_dim(&x, &reg, 1, 1)? != 0 {
            passes = false;
            break;
        }
        if !y.is_zero() && ext_dim(&y, &reg_op, 1, 1)? != 0 {
            passes = false;
            break;
        }
        x = syzygy(&x)?.source;
        y = syzygy(&y)?.source;
    }
    Ok(HeuristicGproj {
        passes,
        cutoff,
        unverified_beyond_cutoff: passes,
    })
}

/// Auslander transpose `Tr M = coker(Hom(P0, A) -> Hom(P1, A))` over `A^op`.
pub fn transpose(m: &Module) -> Result<Module> {
    let c0 = crate::homological::projective_cover(m)?;
    let k = c0.map.kernel();
    let c1 = crate::homological::projective_cover(&k.source)?;
    let d = k.after(&c1.map);
    let (h0, b0) = hom_to_regular(&d.target)?;
    let (h1, b1) = hom_to_regular(&d.source)?;
    let vecs: Vec<Vec<u32>> = b1.iter().map(|f| f.data().to_vec()).collect();
    let span = Subspace::from_basis(Matrix::from_columns(m.p(), m.algebra().dim() * d.source.dim(), &vecs));
    let cols: Vec<Vec<u32>> = b0
        .iter()
        .map(|g| span.coords(g.mul(&d.matrix).data()).expect("composite is A-linear"))
        .collect();
    let map = ModuleMap::unchecked(h0, h1.clone(), Matrix::from_columns(m.p(), h1.dim(), &cols));
    Ok(map.cokernel().target)
}

/// Pairwise non-isomorphic indecomposables with cached Hom data between them.
pub struct AddClass {
    alg: Arc<Algebra>,
    members: Vec<Module>,
    homs: Vec<OnceLock<Vec<Matrix>>>,
    radicals: Vec<OnceLock<Vec<Matrix>>>,
    sum: OnceLock<DirectSum>,
}

impl fmt::Debug for AddClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<usize> = self.members.iter().map(Module::dim).collect();
        write!(f, "AddClass({dims:?})")
    }
}

impl Clone for AddClass {
    fn clone(&self) -> Self {
        AddClass::new(self.alg.clone(), self.members.clone())
    }
}

/// Minimal right approximation `G -> M` by an additive class.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: ModuleMap,
    /// Class index of each summand of the source, in order.
    pub summands: Vec<usize>,
    pub sum: DirectSum,
}

/// Failure of `Hom(E_i, f)` to be onto for some class member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EpiFailure {
    pub member: usize,
    pub missing: usize,
}

impl AddClass {
    pub fn new(alg: Arc<Algebra>, members: Vec<Module>) -> Self {
        let n = members.len();
        AddClass {
            alg,
            members,
            homs: (0..n * n).map(|_| OnceLock::new()).collect(),
            radicals: (0..n).map(|_| OnceLock::new()).collect(),
            sum: OnceLock::new(),
        }
    }

    /// Distinct indecomposable summands of the given modules, in order of appearance.
    pub fn from_modules(alg: &Arc<Algebra>, modules: &[Module]) -> Result<Self> {
        let mut members: Vec<Module> = Vec::new();
        for m in modules {
            check_same(alg, m.algebra())?;
            for s in decompose_summands(m)? {
                if find_iso(&members, &s.module)?.is_none() {
                    members.push(s.module);
                }
            }
        }
        Ok(AddClass::new(alg.clone(), members))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn members(&self) -> &[Module] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Basis of `Hom(E_i, E_j)`.
    pub fn hom(&self, i: usize, j: usize) -> &[Matrix] {
        let n = self.members.len();
        self.homs[i * n + j]
            .get_or_init(|| hom_basis(&self.members[i], &self.members[j]).expect("same algebra"))
    }

    /// Basis of `rad End(E_i)` as matrices.
    pub fn end_radical(&self, i: usize) -> &[Matrix] {
        self.radicals[i].get_or_init(|| {
            let end = self.hom(i, i);
            let j = radical_of_span(self.alg.p(), end);
            let d = self.members[i].dim();
            (0..j.cols())
                .map(|c| crate::module::combination(self.alg.p(), d, d, end, &j.column(c)))
                .collect()
        })
    }

    /// Radical maps `E_t -> E_s`.
    pub fn rad_hom(&self, t: usize, s: usize) -> &[Matrix] {
        if t == s {
            self.end_radical(t)
        } else {
            self.hom(t, s)
        }
    }

    pub fn position(&self, x: &Module) -> Result<Option<usize>> {
        find_iso(&self.members, x)
    }

    /// `E = ⊕ E_i`.
    pub fn generator(&self) -> &DirectSum {
        self.sum.get_or_init(|| {
            let refs: Vec<&Module> = self.members.iter().collect();
            direct_sum(&self.alg, &refs).expect("same algebra")
        })
    }

    /// Minimal right approximation of `m`: chooses maps `E_t -> M` spanning
    /// `Hom(E_t, M)` modulo maps factoring through radical maps into the class.
    pub fn right_approximation(&self, m: &Module) -> Result<Approximation> {
        check_same(&self.alg, m.algebra())?;
        let p = self.alg.p();
        let n = self.members.len();
        let to_m: Vec<Vec<Matrix>> = self.members.iter().map(|e| hom_basis(e, m)).collect::<Result<_>>()?;
        let mut chosen: Vec<(usize, Matrix)> = Vec::new();
        for t in 0..n {
            if to_m[t].is_empty() {
                continue;
            }
            let et = self.members[t].dim();
            let amb = m.dim() * et;
            let mut gens: Vec<Vec<u32>> = Vec::new();
            for s in 0..n {
                for g in &to_m[s] {
                    for phi in self.rad_hom(t, s) {
                        gens.push(g.mul(phi).into_data());
                    }
                }
            }
            let mut w = Subspace::span(&Matrix::from_columns(p, amb, &gens));
            for h in &to_m[t] {
                if w.contains(h.data()) {
                    continue;
                }
                for d in self.hom(t, t) {
                    gens.push(h.mul(d).into_data());
                }
                w = Subspace::span(&Matrix::from_columns(p, amb, &gens));
                chosen.push((t, h.clone()));
            }
        }
        let mods: Vec<&Module> = chosen.iter().map(|(t, _)| &self.members[*t]).collect();
        let sum = direct_sum(&self.alg, &mods)?;
        let blocks: Vec<&Matrix> = chosen.iter().map(|(_, h)| h).collect();
        let matrix = Matrix::hstack(p, m.dim(), &blocks);
        Ok(Approximation {
            map: ModuleMap::unchecked(sum.module.clone(), m.clone(), matrix),
            summands: chosen.iter().map(|(t, _)| *t).collect(),
            sum,
        })
    }

    /// Universal map `⊕_t E_t^{dim Hom(E_t, M)} -> M` built from Hom bases.
    pub fn universal_map(&self, m: &Module) -> Result<Approximation> {
        let p = self.alg.p();
        let mut chosen: Vec<(usize, Matrix)> = Vec::new();
        for (t, e) in self.members.iter().enumerate() {
            for h in hom_basis(e, m)? {
                chosen.push((t, h));
            }
        }
        let mods: Vec<&Module> = chosen.iter().map(|(t, _)| &self.members[*t]).collect();
        let sum = direct_sum(&self.alg, &mods)?;
        let blocks: Vec<&Matrix> = chosen.iter().map(|(_, h)| h).collect();
        Ok(Approximation {
            map: ModuleMap::unchecked(sum.module.clone(), m.clone(), Matrix::hstack(p, m.dim(), &blocks)),
            summands: chosen.iter().map(|(t, _)| *t).collect(),
            sum,
        })
    }

    /// Members `E_i` for which `Hom(E_i, f)` is not onto.
    pub fn epi_failures(&self, f: &ModuleMap) -> Result<Vec<EpiFailure>> {
        let p = self.alg.p();
        let mut out = Vec::new();
        for (i, e) in self.members.iter().enumerate() {
            let to_y = hom_basis(e, &f.target)?;
            if to_y.is_empty() {
                continue;
            }
            let imgs: Vec<Vec<u32>> = hom_basis(e, &f.source)?
                .iter()
                .map(|g| f.matrix.mul(g).into_data())
                .collect();
            let rank = Matrix::from_columns(p, f.target.dim() * e.dim(), &imgs).rank();
            if rank < to_y.len() {
                out.push(EpiFailure {
                    member: i,
                    missing: to_y.len() - rank,
                });
            }
        }
        Ok(out)
    }

    pub fn is_epi(&self, f: &ModuleMap) -> Result<bool> {
        Ok(self.epi_failures(f)?.is_empty())
    }

    /// `0 -> K -> G -> M -> 0` stays exact under every `Hom(E_i, -)`: checked as
    /// epi-ness of the last map (left exactness is automatic).
    pub fn is_exact_sequence(&self, k_to_g: &ModuleMap, g_to_m: &ModuleMap) -> Result<bool> {
        if !g_to_m.is_surjective() || !k_to_g.is_injective() {
            return Ok(false);
        }
        if g_to_m.matrix.mul(&k_to_g.matrix).rank() != 0 || k_to_g.rank() + g_to_m.rank() != g_to_m.source.dim() {
            return Ok(false);
        }
        self.is_epi(g_to_m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Provenance {
    Projective,
    SyzygyOfSimple { simple: usize, steps: usize },
    SyzygyOfSeed { seed: usize, steps: usize },
    /// `Ω^steps(A y)` for `y = j e`, `j` a radical basis vector and `e` a primitive idempotent.
    SyzygyOfCyclicIdeal { radical_vector: usize, idempotent: usize, steps: usize },
    Syzygy { of: usize },
    Cosyzygy { of: usize },
    User,
}

/// Finite list of indecomposable Gorenstein-projectives with the generator `E`.
#[derive(Clone, Debug)]
pub struct GprojCatalog {
    pub class: AddClass,
    pub names: Vec<String>,
    pub provenance: Vec<Provenance>,
    pub gdim: usize,
    pub exhaustive: bool,
}

impl GprojCatalog {
    pub fn algebra(&self) -> &Arc<Algebra> {
        self.class.algebra()
    }

    pub fn members(&self) -> &[Module] {
        self.class.members()
    }

    pub fn len(&self) -> usize {
        self.class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.members().iter().map(Module::dim).collect()
    }

    /// A catalog from user-supplied modules; each must pass the exact Gproj test.
    pub fn from_modules(gdim: usize, names: Vec<String>, modules: Vec<Module>) -> Result<Self> {
        let alg = modules
            .first()
            .map(|m| m.algebra().clone())
            .ok_or_else(|| Error::NonExhaustive("empty catalog".into()))?;
        for (n, m) in names.iter().zip(&modules) {
            check_same(&alg, m.algebra())?;
            if !is_gproj(m, gdim)? {
                return Err(Error::NotGproj(format!("catalog entry {n}")));
            }
        }
        let provenance = vec![Provenance::User; modules.len()];
        Ok(GprojCatalog {
            class: AddClass::new(alg, modules),
            names,
            provenance,
            gdim,
            exhaustive: false,
        })
    }

    /// Every Gproj summand of every given module must already be in the catalog.
    /// Returns the (module index, summand dimension) pairs that are missing.
    pub fn cross_check(&self, modules: &[Module]) -> Result<Vec<(usize, usize)>> {
        let mut missing = Vec::new();
        for (i, m) in modules.iter().enumerate() {
            for s in decompose_summands(m)? {
                if is_gproj(&s.module, self.gdim)? && self.class.position(&s.module)?.is_none() {
                    missing.push((i, s.module.dim()));
                }
            }
        }
        Ok(missing)
    }

    /// `Ω^{-1} G` for Gorenstein-projective `G`: `(Ω_{A^op}(G*))*`.
    pub fn cosyzygy(g: &Module) -> Result<Module> {
        let (gstar, _) = hom_to_regular(g)?;
        let om = syzygy(&gstar)?.source;
        Ok(hom_to_regular(&om)?.0)
    }
}

/// Closure of projectives and `Ω^d` of simples (and of extra seeds) under `Ω`
/// and `Ω^{-1}`, with decomposition and deduplication at each step.
pub fn enumerate_gproj(
    a: &Arc<Algebra>,
    gdim: usize,
    extra_seeds: &[Module],
    step_limit: usize,
) -> Result<GprojCatalog> {
    let mut members: Vec<Module> = Vec::new();
    let mut provenance: Vec<Provenance> = Vec::new();
    let add = |x: Module, prov: Provenance, members: &mut Vec<Module>, provenance: &mut Vec<Provenance>| -> Result<()> {
        for s in decompose_summands(&x)? {
            if find_iso(members, &s.module)?.is_none() {
                if !is_gproj(&s.module, gdim)? {
                    return Err(Error::TheoremViolation(format!(
                        "a summand of dimension {} produced by the closure is not Gorenstein-projective",
                        s.module.dim()
                    )));
                }
                members.push(s.module);
                provenance.push(prov.clone());
            }
        }
        Ok(())
    };
    for pr in crate::homological::indecomposable_projectives(a)? {
        add(pr, Provenance::Projective, &mut members, &mut provenance)?;
    }
    for (i, s) in crate::homological::simples(a)?.into_iter().enumerate() {
        let mut x = s;
        for _ in 0..gdim {
            x = syzygy(&x)?.source;
        }
        add(
            x,
            Provenance::SyzygyOfSimple { simple: i, steps: gdim },
            &mut members,
            &mut provenance,
        )?;
    }
    let st = crate::homological::structure(a)?;
    let rad = a.radical().clone();
    let reg = Module::regular(a);
    for r in 0..rad.cols() {
        for (k, e) in st.idempotents.iter().enumerate() {
            let y = a.mul(&rad.column(r), e);
            if y.iter().all(|&c| c == 0) {
                continue;
            }
            let mut x = reg.generated_submodule(&Matrix::column_vector(a.p(), &y)).source;
            let steps = gdim.saturating_sub(1);
            for _ in 0..steps {
                x = syzygy(&x)?.source;
            }
            add(
                x,
                Provenance::SyzygyOfCyclicIdeal {
                    radical_vector: r,
                    idempotent: k,
                    steps,
                },
                &mut members,
                &mut provenance,
            )?;
        }
    }
    for (i, seed) in extra_seeds.iter().enumerate() {
        check_same(a, seed.algebra())?;
        let mut x = seed.clone();
        for _ in 0..gdim {
            x = syzygy(&x)?.source;
        }
        add(
            x,
            Provenance::SyzygyOfSeed { seed: i, steps: gdim },
            &mut members,
            &mut provenance,
        )?;
    }
    let mut next = 0;
    let mut steps = 0;
    while next < members.len() {
        if steps >= step_limit {
            break;
        }
        let g = members[next].clone();
        add(syzygy(&g)?.source, Provenance::Syzygy { of: next }, &mut members, &mut provenance)?;
        add(
            GprojCatalog::cosyzygy(&g)?,
            Provenance::Cosyzygy { of: next },
            &mut members,
            &mut provenance,
        )?;
        next += 1;
        steps += 1;
    }
    let exhaustive = next == members.len();
    let names = (1..=members.len()).map(|i| format!("E{i}")).collect();
    Ok(GprojCatalog {
        class: AddClass::new(a.clone(), members),
        names,
        provenance,
        gdim,
        exhaustive,
    })
}

/// Gorenstein-injectives as duals of the opposite algebra's catalog.
pub fn gorenstein_injectives(a: &Arc<Algebra>, gdim: usize, step_limit: usize) -> Result<Vec<Module>> {
    let op = a.opposite();
    let cat = enumerate_gproj(&op, gdim, &[], step_limit)?;
    if !cat.exhaustive {
        return Err(Error::NonExhaustive("opposite-side Gproj enumeration did not stabilise".into()));
    }
    Ok(cat.members().iter().map(Module::dual).collect())
}

/// `G1 --θ--> G0 --π--> M -> 0` with both maps right Gproj-approximations onto their images.
#[derive(Clone, Debug)]
pub struct PresentationPair {
    pub theta: ModuleMap,
    pub cover: ModuleMap,
    pub presented: Module,
    pub g1_summands: Vec<usize>,
    pub g0_summands: Vec<usize>,
    pub minimal: bool,
}

impl PresentationPair {
    /// Wraps an arbitrary map between Gorenstein-projectives; the presented module is its cokernel.
    pub fn from_theta(theta: ModuleMap, cat: &GprojCatalog) -> Result<Self> {
        for m in [&theta.source, &theta.target] {
            for s in decompose_summands(m)? {
                if cat.class.position(&s.module)?.is_none() && !is_gproj(&s.module, cat.gdim)? {
                    return Err(Error::NotGproj("an end of the presentation map".into()));
                }
            }
        }
        let cover = theta.cokernel();
        Ok(PresentationPair {
            presented: cover.target.clone(),
            cover,
            theta,
            g1_summands: Vec::new(),
            g0_summands: Vec::new(),
            minimal: false,
        })
    }

    /// `Hom(E_i, G1) -> Hom(E_i, G0) -> Hom(E_i, M) -> 0` exact for every catalog member.
    pub fn is_proper(&self, cat: &GprojCatalog) -> Result<bool> {
        if !cat.class.is_epi(&self.cover)? {
            return Ok(false);
        }
        let p = cat.algebra().p();
        for e in cat.members() {
            let to_g0 = hom_basis(e, &self.theta.target)?;
            let kernel_dim = {
                let imgs: Vec<Vec<u32>> = to_g0.iter().map(|g| self.cover.matrix.mul(g).into_data()).collect();
                let r = Matrix::from_columns(p, self.presented.dim() * e.dim(), &imgs).rank();
                to_g0.len() - r
            };
            let imgs: Vec<Vec<u32>> = hom_basis(e, &self.theta.source)?
                .iter()
                .map(|g| self.theta.matrix.mul(g).into_data())
                .collect();
            let r = Matrix::from_columns(p, self.theta.target.dim() * e.dim(), &imgs).rank();
            if r != kernel_dim {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn right_gproj_approximation(m: &Module, cat: &GprojCatalog) -> Result<Approximation> {
    cat.class.right_approximation(m)
}

/// Minimal proper Gorenstein-projective presentation.
pub fn proper_presentation(m: &Module, cat: &GprojCatalog) -> Result<PresentationPair> {
    let a0 = cat.class.right_approximation(m)?;
    let k = a0.map.kernel();
    let a1 = cat.class.right_approximation(&k.source)?;
    let theta = k.after(&a1.map);
    let pair = PresentationPair {
        theta,
        cover: a0.map,
        presented: m.clone(),
        g1_summands: a1.summands,
        g0_summands: a0.summands,
        minimal: true,
    };
    if !pair.is_proper(cat)? {
        return Err(Error::NonExhaustive(
            "minimal presentation failed the properness check against the catalog".into(),
        ));
    }
    Ok(pair)
}

/// Gorenstein-projective dimension via iterated minimal approximations.
pub fn gpd(m: &Module, cat: &GprojCatalog, cutoff: usize) -> Result<Bounded> {
    let mut x = m.clone();
    for k in 0..=cutoff {
        if is_gproj(&x, cat.gdim)? {
            return Ok(Bounded::Exactly(k));
        }
        x = cat.class.right_approximation(&x)?.map.kernel().source;
    }
    Ok(Bounded::AtLeast(cutoff + 1))
}

/// `Gext^i(M, N)` from the proper Gproj resolution of `M`.
pub fn gext_dim(m: &Module, n: &Module, i: usize, cat: &GprojCatalog) -> Result<usize> {
    use crate::module::hom_dim;
    if i == 0 {
        return hom_dim(m, n);
    }
    let mut x = m.clone();
    for _ in 1..i {
        x = cat.class.right_approximation(&x)?.map.kernel().source;
        if x.is_zero() {
            return Ok(0);
        }
    }
    let ap = cat.class.right_approximation(&x)?;
    let k = ap.map.kernel().source;
    Ok(hom_dim(&k, n)? + hom_dim(&x, n)? - hom_dim(&ap.map.source, n)?)
}

/// G-epimorphism test with the catalog members witnessing failure.
pub fn g_exactness_probe(f: &ModuleMap, cat: &GprojCatalog) -> Result<(bool, Vec<EpiFailure>)> {
    let fails = cat.class.epi_failures(f)?;
    Ok((fails.is_empty(), fails))
}
