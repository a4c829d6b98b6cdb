//! Random monomial bound-quiver algebras run through the theorem suite.
//!
//! Each instance is filtered to Gorenstein algebras with an exhaustive Gproj
//! catalog; cutoffs make an instance inconclusive, never a violation.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{monomial_quiver, Algebra, Arrow};
use crate::cm_auslander::{classical_tau, classical_tau_inverse, cm_auslander_algebra};
use crate::decompose::find_iso;
use crate::error::{Error, Result};
use crate::gorenstein::{enumerate_gproj, gorenstein_check, proper_presentation};
use crate::homological::{indecomposable_projectives, simples};
use crate::module::Module;
use crate::silting::{
    closure_failures, in_d_theta, is_gorenstein_silting, is_gorenstein_tilting, is_tau_g_rigid, star_theorem_check,
    tau_g_tilting_finiteness_probe, Sweep,
};
use crate::two_term::{
    check_2term_gsilting, derived_hom, endo_algebra_b, from_presentation, gldim_bound_check, torsion_conditions,
    torsion_report, TwoTermComplex,
};

#[derive(Clone, Debug, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub prime: u32,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_dim: usize,
    pub cutoff: usize,
    pub step_limit: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 1,
            count: 200,
            prime: 2,
            max_vertices: 3,
            max_arrows: 4,
            max_dim: 12,
            cutoff: 8,
            step_limit: 24,
        }
    }
}

/// A quiver with monomial relations, vertices and arrow endpoints 0-based.
#[derive(Clone, Debug, Serialize)]
pub struct QuiverSpec {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
    pub relations: Vec<Vec<usize>>,
}

impl QuiverSpec {
    pub fn random(rng: &mut ChaCha8Rng, max_vertices: usize, max_arrows: usize) -> Self {
        let vertices = rng.gen_range(1..=max_vertices);
        let n_arrows = rng.gen_range(0..=max_arrows);
        let arrows: Vec<(usize, usize)> = (0..n_arrows)
            .map(|_| (rng.gen_range(0..vertices), rng.gen_range(0..vertices)))
            .collect();
        let mut relations = Vec::new();
        for (a, &(_, t)) in arrows.iter().enumerate() {
            for (b, &(s, _)) in arrows.iter().enumerate() {
                if t == s && rng.gen_bool(0.5) {
                    relations.push(vec![a, b]);
                }
            }
        }
        QuiverSpec {
            vertices,
            arrows,
            relations,
        }
    }

    pub fn build(&self, p: u32, bound: usize) -> Result<Arc<Algebra>> {
        let arrows: Vec<Arrow> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(i, &(source, target))| Arrow {
                source,
                target,
                name: format!("a{}", i + 1),
            })
            .collect();
        monomial_quiver(p, self.vertices, &arrows, &self.relations, bound)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub invariant: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Outcome {
    /// More than `max_dim` surviving paths.
    TooLarge,
    /// A cutoff was reached; `stage` names where.
    Inconclusive { stage: String },
    Checked {
        gdim: usize,
        dim: usize,
        catalog: usize,
        sweep: usize,
        /// The sweep lists every indecomposable; otherwise sweep-quantified checks are skipped.
        complete_sweep: bool,
        checks: usize,
        violations: Vec<Violation>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub quiver: QuiverSpec,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub generated: usize,
    pub too_large: usize,
    pub inconclusive: usize,
    pub checked: usize,
    /// Checked instances whose sweep lists every indecomposable.
    pub complete_sweeps: usize,
    pub checks: usize,
    pub violations_by_invariant: BTreeMap<String, usize>,
    pub instances: Vec<InstanceRecord>,
}

impl FuzzSummary {
    pub fn violations(&self) -> usize {
        self.violations_by_invariant.values().sum()
    }
}

fn is_cutoff(e: &Error) -> bool {
    matches!(e, Error::CutoffExceeded { .. } | Error::DecompositionInconclusive { .. } | Error::NonExhaustive(_))
}

/// Simples, indecomposable projectives and injectives, Gproj members and radicals of projectives.
pub fn standard_sweep(a: &Arc<Algebra>, gproj: &[Module]) -> Result<Sweep> {
    let mut names = Vec::new();
    let mut mods = Vec::new();
    for (k, s) in simples(a)?.into_iter().enumerate() {
        names.push(format!("S{}", k + 1));
        mods.push(s);
    }
    let projs = indecomposable_projectives(a)?;
    for (k, p) in projs.iter().enumerate() {
        names.push(format!("P{}", k + 1));
        mods.push(p.clone());
    }
    for (k, i) in indecomposable_projectives(&a.opposite())?.iter().enumerate() {
        names.push(format!("I{}", k + 1));
        mods.push(i.dual().rebase(a)?);
    }
    for (k, g) in gproj.iter().enumerate() {
        names.push(format!("G{}", k + 1));
        mods.push(g.clone());
    }
    for (k, p) in projs.iter().enumerate() {
        let r = p.submodule(&p.radical_basis())?.source;
        if !r.is_zero() {
            names.push(format!("R{}", k + 1));
            mods.push(r);
        }
    }
    Sweep::from_modules(a, &names, &mods)
}

/// Closes a sweep under `τ` and `τ^{-1}`. Returns `None` when a module above `max_dim`
/// or more than `max_len` modules appear.
///
/// Over a representation-finite algebra every indecomposable is `τ^{-k}` of a projective,
/// so a closure that terminates from a sweep containing the projectives lists all of them.
pub fn orbit_closure(a: &Arc<Algebra>, base: Sweep, max_dim: usize, max_len: usize) -> Result<Option<Sweep>> {
    let mut names = base.names.clone();
    let mut mods = base.modules.clone();
    let mut frontier: Vec<(String, Module)> = base.names.into_iter().zip(base.modules).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (name, m) in &frontier {
            for (tag, image) in [("t", classical_tau(m)?), ("ti", classical_tau_inverse(m)?)] {
                if image.is_zero() {
                    continue;
                }
                if image.dim() > max_dim {
                    return Ok(None);
                }
                next.push((format!("{tag}({name})"), image));
            }
        }
        let fresh = Sweep::from_modules(
            a,
            &next.iter().map(|x| x.0.clone()).collect::<Vec<_>>(),
            &next.iter().map(|x| x.1.clone()).collect::<Vec<_>>(),
        )?;
        frontier.clear();
        for (n, m) in fresh.names.into_iter().zip(fresh.modules) {
            if find_iso(&mods, &m)?.is_none() {
                if mods.len() == max_len {
                    return Ok(None);
                }
                names.push(n.clone());
                mods.push(m.clone());
                frontier.push((n, m));
            }
        }
    }
    Ok(Some(Sweep { names, modules: mods }))
}

struct Tally {
    checks: usize,
    violations: Vec<Violation>,
}

impl Tally {
    fn expect(&mut self, invariant: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                invariant: invariant.to_string(),
                detail: detail(),
            });
        }
    }
}

/// Runs the silting and 2-term invariant suites on one algebra.
pub fn check_algebra(a: &Arc<Algebra>, cutoff: usize, step_limit: usize) -> Result<Outcome> {
    let st = gorenstein_check(a, cutoff)?;
    let Some(gdim) = st.gdim else {
        return Ok(Outcome::Inconclusive {
            stage: "gorenstein_check".into(),
        });
    };
    let cat = enumerate_gproj(a, gdim, &[], step_limit)?;
    if !cat.exhaustive {
        return Ok(Outcome::Inconclusive {
            stage: "enumerate_gproj".into(),
        });
    }
    let ctx = cm_auslander_algebra(&cat)?;
    let base = standard_sweep(a, cat.members())?;
    let closed = orbit_closure(a, base.clone(), 2 * a.dim(), 24)?;
    let complete = closed.is_some();
    let sweep = closed.unwrap_or(base);
    let mut t = Tally {
        checks: 0,
        violations: Vec::new(),
    };

    for (name, m) in sweep.names.iter().zip(&sweep.modules) {
        let r = is_tau_g_rigid(m, &ctx)?;
        t.expect("tau_g_rigidity_criteria_agree", r.agree, || name.clone());
        t.expect("tau_g_matches_classical_tau", r.tau_g_iso_classical, || name.clone());
    }
    match tau_g_tilting_finiteness_probe(&ctx, &sweep) {
        Ok(p) => t.expect("tau_g_tilting_finiteness", p.implication_holds, String::new),
        Err(Error::TheoremViolation(d)) => t.expect("tau_g_tilting_finiteness", false, || d),
        Err(e) => return Err(e),
    }

    let e = cat.class.generator().module.clone();
    let e_silting = is_gorenstein_silting(&e, &cat, &sweep)?;
    t.expect("generator_is_silting", e_silting.verdict, || format!("{:?}", e_silting.mismatches));
    let e_tilting = is_gorenstein_tilting(&e, &cat, &sweep, 3)?;
    t.expect("generator_is_tilting", e_tilting.verdict, String::new);
    t.expect("tilting_definitions_agree", e_tilting.definitions_agree, String::new);

    let stalk = TwoTermComplex::stalk(&e);
    let stalk_tp = torsion_report(&stalk, &sweep, &cat)?;
    t.expect("generator_torsion_pair", stalk_tp.passes, String::new);
    if gdim >= 1 {
        let b = endo_algebra_b(&stalk)?;
        let g = gldim_bound_check(&b, gdim, cutoff, None)?;
        if !g.inconclusive {
            t.expect("gldim_bound", g.bound_holds, || format!("gldim B = {:?}, Gdim A = {gdim}", g.gldim_b));
        }
    }

    for (tn, tm) in sweep.names.iter().zip(&sweep.modules) {
        let pres = proper_presentation(tm, &cat)?;
        let theta = pres.theta.clone();
        let g = from_presentation(&pres, &cat)?;
        for (xn, x) in sweep.names.iter().zip(&sweep.modules) {
            let lhs = derived_hom(&g, x, 1)? == 0;
            let rhs = in_d_theta(&theta, x)?;
            t.expect("derived_hom_shift1_is_d_theta", lhs == rhs, || format!("T = {tn}, X = {xn}"));
        }
        let pred = move |x: &Module| in_d_theta(&theta, x);
        let closure = closure_failures(&pred, &sweep, &cat)?;
        t.expect("d_theta_closed", closure.is_empty(), || format!("T = {tn}"));

        // verdicts quantified over the sweep are only compared when it lists every indecomposable
        if !complete {
            continue;
        }
        let silting = is_gorenstein_silting(tm, &cat, &sweep)?.verdict;
        let cond = check_2term_gsilting(&g, &cat, &sweep)?;
        t.expect("module_complex_bridge", silting == cond.full, || {
            format!("T = {tn}: module silting {silting}, complex full {}", cond.full)
        });
        t.expect("module_complex_bridge_by_summand_count", silting == cond.full_by_summand_count, || {
            format!("T = {tn}: module silting {silting}, summand count {}", cond.summand_count)
        });
        if cond.partial {
            let tc = torsion_conditions(&g, &sweep, &cat)?;
            t.expect("torsion_conditions_agree", tc.agree, || format!("T = {tn}: {tc:?}"));
            if cond.full {
                t.expect("full_complex_gives_torsion_pair", tc.torsion_pair, || format!("T = {tn}"));
            }
        }
        if gdim <= 1 {
            let s = star_theorem_check(tm, &cat, &sweep)?;
            t.expect("star_theorem", s.chain_holds && s.equivalence_holds, || format!("T = {tn}: {s:?}"));
        }
    }

    Ok(Outcome::Checked {
        gdim,
        dim: a.dim(),
        catalog: cat.len(),
        sweep: sweep.len(),
        complete_sweep: complete,
        checks: t.checks,
        violations: t.violations,
    })
}

pub fn run(config: &FuzzConfig) -> Result<FuzzSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut summary = FuzzSummary {
        config: config.clone(),
        generated: 0,
        too_large: 0,
        inconclusive: 0,
        checked: 0,
        complete_sweeps: 0,
        checks: 0,
        violations_by_invariant: BTreeMap::new(),
        instances: Vec::new(),
    };
    for index in 0..config.count {
        let quiver = QuiverSpec::random(&mut rng, config.max_vertices, config.max_arrows);
        summary.generated += 1;
        let outcome = match quiver.build(config.prime, config.max_dim) {
            Err(Error::InvalidAlgebra(_)) => Outcome::TooLarge,
            Err(e) => return Err(e),
            Ok(a) => match check_algebra(&a, config.cutoff, config.step_limit) {
                Ok(o) => o,
                Err(e) if is_cutoff(&e) => Outcome::Inconclusive { stage: e.to_string() },
                Err(Error::TheoremViolation(d)) => Outcome::Checked {
                    gdim: 0,
                    dim: a.dim(),
                    catalog: 0,
                    sweep: 0,
                    complete_sweep: false,
                    checks: 1,
                    violations: vec![Violation {
                        invariant: "engine".into(),
                        detail: d,
                    }],
                },
                Err(e) => return Err(e),
            },
        };
        match &outcome {
            Outcome::TooLarge => summary.too_large += 1,
            Outcome::Inconclusive { .. } => summary.inconclusive += 1,
            Outcome::Checked {
                checks,
                violations,
                complete_sweep,
                ..
            } => {
                summary.checked += 1;
                summary.complete_sweeps += usize::from(*complete_sweep);
                summary.checks += checks;
                for v in violations {
                    *summary.violations_by_invariant.entry(v.invariant.clone()).or_default() += 1;
                }
            }
        }
        summary.instances.push(InstanceRecord { index, quiver, outcome });
    }
    Ok(summary)
}
