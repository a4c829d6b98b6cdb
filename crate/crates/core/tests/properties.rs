//! Randomized properties over the nine Λ-modules, random monomial algebras
//! and random file contents.

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gsilt::cm_auslander::{cm_auslander_algebra, CmContext};
use gsilt::decompose::{decompose_summands_with, is_isomorphic, DecompOptions};
use gsilt::fixtures::{lambda, LambdaFixture};
use gsilt::fuzz::QuiverSpec;
use gsilt::gorenstein::{enumerate_gproj, proper_presentation, GprojCatalog};
use gsilt::homological::{ext_dim, indecomposable_projectives};
use gsilt::io::{emit_algebra, emit_module, parse_algebra, parse_module_body};
use gsilt::matrix::Matrix;
use gsilt::module::{direct_sum, hom_basis, hom_dim, Module, ModuleMap};
use gsilt::silting::{in_d_theta, is_tau_g_rigid};
use gsilt::two_term::{derived_hom, from_presentation};

struct Ctx {
    f: LambdaFixture,
    cat: GprojCatalog,
    cm: CmContext,
}

fn ctx() -> &'static Ctx {
    static C: OnceLock<Ctx> = OnceLock::new();
    C.get_or_init(|| {
        let f = lambda(2).unwrap();
        let cat = enumerate_gproj(&f.algebra, 1, &[], 20).unwrap();
        let cm = cm_auslander_algebra(&cat).unwrap();
        Ctx { f, cat, cm }
    })
}

fn sum_of(idx: &[usize]) -> Module {
    let c = ctx();
    let parts: Vec<&Module> = idx.iter().map(|&i| &c.f.modules[i]).collect();
    direct_sum(&c.f.algebra, &parts).unwrap().module
}

/// Invertible matrix from a seed: a product of elementary operations over F_2.
fn random_invertible(n: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::identity(2, n);
    if n < 2 {
        return m;
    }
    for _ in 0..4 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let mut e = Matrix::identity(2, n);
            e.set(i, j, 1);
            m = m.mul(&e);
        }
    }
    m
}

fn change_basis(m: &Module, seed: u64) -> Module {
    let p = random_invertible(m.dim(), seed);
    let pi = p.inverse().unwrap();
    let acts = m.actions().iter().map(|a| pi.mul(a).mul(&p)).collect();
    Module::new(m.algebra().clone(), acts).unwrap()
}

fn indices() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..9, 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, .. ProptestConfig::default() })]

    #[test]
    fn hom_is_additive(m in 0usize..9, n1 in 0usize..9, n2 in 0usize..9) {
        let c = ctx();
        let sum = sum_of(&[n1, n2]);
        let g = &c.f.modules;
        prop_assert_eq!(
            hom_dim(&g[m], &sum).unwrap(),
            hom_dim(&g[m], &g[n1]).unwrap() + hom_dim(&g[m], &g[n2]).unwrap()
        );
        prop_assert_eq!(
            hom_dim(&sum, &g[m]).unwrap(),
            hom_dim(&g[n1], &g[m]).unwrap() + hom_dim(&g[n2], &g[m]).unwrap()
        );
    }

    #[test]
    fn krull_schmidt_after_basis_change(idx in indices(), seed in 0u64..1000, dseed in 0u64..1000) {
        let m = change_basis(&sum_of(&idx), seed);
        let parts = decompose_summands_with(&m, DecompOptions { seed: dseed, budget: 256 }).unwrap();
        prop_assert_eq!(parts.len(), idx.len());
        let mut unused: Vec<usize> = idx.clone();
        for s in &parts {
            let pos = unused
                .iter()
                .position(|&i| is_isomorphic(&s.module, &ctx().f.modules[i]).unwrap());
            prop_assert!(pos.is_some());
            unused.remove(pos.unwrap());
        }
    }

    #[test]
    fn module_maps_satisfy_rank_nullity(a in indices(), b in indices(), coeffs in prop::collection::vec(0u32..2, 0..64)) {
        let (m, n) = (sum_of(&a), sum_of(&b));
        let basis = hom_basis(&m, &n).unwrap();
        let mut f = Matrix::zeros(2, n.dim(), m.dim());
        for (h, c) in basis.iter().zip(coeffs.iter().cycle()) {
            f.add_scaled(*c, h);
        }
        let f = ModuleMap::new(m.clone(), n.clone(), f).unwrap();
        let k = f.kernel();
        let co = f.cokernel();
        prop_assert_eq!(k.source.dim() + f.rank(), m.dim());
        prop_assert_eq!(f.rank() + co.target.dim(), n.dim());
        prop_assert!(f.matrix.mul(&k.matrix).is_zero());
        prop_assert!(co.matrix.mul(&f.matrix).is_zero());
    }

    #[test]
    fn ext_by_resolution_matches_ext_over_the_opposite(m in 0usize..9, n in 0usize..9, i in 1usize..3) {
        let g = &ctx().f.modules;
        let op = ctx().f.algebra.opposite();
        let dn = g[n].dual().rebase(&op).unwrap();
        let dm = g[m].dual().rebase(&op).unwrap();
        prop_assert_eq!(ext_dim(&g[m], &g[n], i, 8).unwrap(), ext_dim(&dn, &dm, i, 8).unwrap());
    }

    #[test]
    fn shifted_derived_hom_detects_d_theta(t in indices(), x in indices()) {
        let c = ctx();
        let tm = sum_of(&t);
        let pres = proper_presentation(&tm, &c.cat).unwrap();
        let g = from_presentation(&pres, &c.cat).unwrap();
        let xm = sum_of(&x);
        prop_assert_eq!(derived_hom(&g, &xm, 1).unwrap() == 0, in_d_theta(&pres.theta, &xm).unwrap());
        prop_assert_eq!(derived_hom(&g, &xm, 0).unwrap(), hom_dim(&tm, &xm).unwrap());
        prop_assert_eq!(derived_hom(&g, &xm, 2).unwrap(), 0);
    }

    #[test]
    fn rigidity_criteria_agree_on_sums(t in indices()) {
        let r = is_tau_g_rigid(&sum_of(&t), &ctx().cm).unwrap();
        prop_assert!(r.agree);
        prop_assert!(r.tau_g_iso_classical);
    }

    #[test]
    fn modules_round_trip_through_text(idx in indices(), seed in 0u64..1000) {
        let m = change_basis(&sum_of(&idx), seed);
        let text = emit_module(&m, "Lambda.alg");
        let body: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
        let back = parse_module_body(&ctx().f.algebra, &body).unwrap();
        prop_assert_eq!(emit_module(&back, "Lambda.alg"), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, .. ProptestConfig::default() })]

    #[test]
    fn random_monomial_algebras_are_associative_and_round_trip(seed in 0u64..10_000, p in prop::sample::select(vec![2u32, 3])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = QuiverSpec::random(&mut rng, 3, 4);
        let Ok(a) = q.build(p, 12) else { return Ok(()) };
        prop_assert!(a.validate().is_ok());
        let proj: usize = indecomposable_projectives(&a).unwrap().iter().map(Module::dim).sum();
        prop_assert_eq!(proj, a.dim());
        let text = emit_algebra(&a);
        let back: Arc<_> = parse_algebra(&text).unwrap();
        prop_assert_eq!(emit_algebra(&back), text);
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (a.basis_vector(i), a.basis_vector(j), a.basis_vector(k));
                    prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
                }
            }
        }
    }
}
