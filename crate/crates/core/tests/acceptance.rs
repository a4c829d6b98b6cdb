//! Acceptance run: one line per criterion, then a check that the outcome
//! vector is the one recorded in the README. Failing criteria print FAIL with
//! the computed reason; the assertions below pin the computed facts.

use std::time::{Duration, Instant};

use gsilt::cm_auslander::{cm_auslander_algebra, CmContext};
use gsilt::decompose::set_default_seed;
use gsilt::fixtures::{lambda, local_a0, semisimple_fixture, LambdaFixture};
use gsilt::fuzz::{self, FuzzConfig};
use gsilt::gorenstein::{enumerate_gproj, gorenstein_check, proper_presentation, GprojCatalog};
use gsilt::homological::Bounded;
use gsilt::module::{direct_sum, Module};
use gsilt::silting::{is_gorenstein_silting, is_tau_g_rigid, Sweep, QUANTIFICATION};
use gsilt::two_term::{
    brenner_butler_check, check_2term_gsilting, endo_algebra_b, from_presentation, gldim_bound_check, torsion_report,
    TwoTermComplex,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn line(n: usize, title: &str, o: &Outcome) {
    println!("criterion {n} [{}] {title}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
}

fn setup(p: u32) -> (LambdaFixture, GprojCatalog, Sweep) {
    let f = lambda(p).unwrap();
    let cat = enumerate_gproj(&f.algebra, 1, &[], 20).unwrap();
    let sweep = Sweep::from_modules(&f.algebra, &f.names(), &f.modules).unwrap();
    (f, cat, sweep)
}

fn theta8(f: &LambdaFixture, cat: &GprojCatalog) -> TwoTermComplex {
    from_presentation(&proper_presentation(f.g(8), cat).unwrap(), cat).unwrap()
}

fn criterion1() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for p in [2, 3] {
        let f = lambda(p).unwrap();
        let t = Instant::now();
        let cat = enumerate_gproj(&f.algebra, 1, &[], 20).unwrap();
        let el = t.elapsed();
        let mut dims = cat.dims();
        dims.sort();
        let ok = cat.exhaustive && dims == vec![1, 2, 2, 3, 4] && el < Duration::from_secs(10);
        let matched = (1..=5).all(|i| cat.class.position(f.g(i)).unwrap().is_some());
        pass &= ok && matched;
        detail.push(format!("p={p} dims {dims:?} G1..G5 matched {matched} in {:.2}s", el.as_secs_f64()));
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

fn criterion2() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    for p in [2, 3] {
        let st = gorenstein_check(&lambda(p).unwrap().algebra, 8).unwrap();
        pass &= st.is_gorenstein && st.gdim == Some(1);
        detail.push(format!("p={p} ({}, {:?})", st.is_gorenstein, st.gdim));
    }
    Outcome {
        pass,
        detail: detail.join("; "),
    }
}

/// Verdicts for G1..G9 under one seed.
fn silting_verdicts(seed: u64) -> (Vec<bool>, Vec<String>) {
    set_default_seed(seed);
    let (f, cat, sweep) = setup(2);
    let mut verdicts = Vec::new();
    let mut g8_mismatches = Vec::new();
    for i in 1..=9 {
        let r = is_gorenstein_silting(f.g(i), &cat, &sweep).unwrap();
        if i == 8 {
            g8_mismatches = r.mismatches.clone();
        }
        verdicts.push(r.verdict);
    }
    (verdicts, g8_mismatches)
}

fn criterion3() -> Outcome {
    let (golden, g8_mismatches) = silting_verdicts(1);
    let stable = [2, 3, 0x5eed].into_iter().all(|s| silting_verdicts(s).0 == golden);
    set_default_seed(0x5eed);
    Outcome {
        pass: golden[7] && stable,
        detail: format!(
            "G8 verdict {} (Gen_G and D_θ differ at {g8_mismatches:?}); verdicts G1..G9 {golden:?}; stable across seeds {stable}",
            golden[7]
        ),
    }
}

fn rigidity_disagreements(ctx: &CmContext, modules: &[Module]) -> (usize, usize) {
    let mut agree_fail = 0;
    let mut iso_fail = 0;
    for m in modules {
        let r = is_tau_g_rigid(m, ctx).unwrap();
        agree_fail += usize::from(!r.agree);
        iso_fail += usize::from(!r.tau_g_iso_classical);
    }
    (agree_fail, iso_fail)
}

fn criterion4() -> Outcome {
    let (f, cat, _) = setup(2);
    let ctx = cm_auslander_algebra(&cat).unwrap();
    let (a1, i1) = rigidity_disagreements(&ctx, &f.modules);
    let a0 = local_a0(2).unwrap();
    let cat0 = enumerate_gproj(&a0.algebra, 0, &[], 20).unwrap();
    let ctx0 = cm_auslander_algebra(&cat0).unwrap();
    let (a2, i2) = rigidity_disagreements(&ctx0, &[a0.simple.clone(), a0.regular.clone()]);
    Outcome {
        pass: a1 + i1 + a2 + i2 == 0,
        detail: format!("Λ: {a1} criterion disagreements, {i1} τ_G iso failures; A0: {a2}, {i2}"),
    }
}

fn criterion5() -> Outcome {
    let (f, cat, sweep) = setup(2);
    let mut bad = Vec::new();
    let mut by_count = Vec::new();
    for (i, name) in f.names().iter().enumerate() {
        let m = &f.modules[i];
        let module_verdict = is_gorenstein_silting(m, &cat, &sweep).unwrap().verdict;
        let g = from_presentation(&proper_presentation(m, &cat).unwrap(), &cat).unwrap();
        let c = check_2term_gsilting(&g, &cat, &sweep).unwrap();
        if module_verdict != c.full {
            bad.push(name.clone());
        }
        if module_verdict != (c.partial && c.full_by_summand_count) {
            by_count.push(name.clone());
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "disagreements with the torsion-pair fullness test {bad:?}; with the summand-count test {by_count:?}"
        ),
    }
}

fn criterion6() -> Outcome {
    let (f, cat, sweep) = setup(2);
    let g = theta8(&f, &cat);
    let tp = torsion_report(&g, &sweep, &cat).unwrap();
    let b = endo_algebra_b(&g).unwrap();
    let bb = brenner_butler_check(&b, &cat, &sweep).unwrap();
    let hom_mismatch = bb
        .t_hom_dims
        .iter()
        .chain(&bb.f_hom_dims)
        .filter(|r| r.over_a != r.over_b)
        .count();
    Outcome {
        pass: tp.passes && bb.induced_torsion.passes && hom_mismatch == 0 && bb.passes,
        detail: format!(
            "(T,F) axiom 1 fails at {:?}; induced pair passes {}; {} Hom-dim mismatches; iso reflection failures {:?}",
            tp.axiom1,
            bb.induced_torsion.passes,
            hom_mismatch,
            bb.iso_reflection_failures
        ),
    }
}

fn criterion7() -> Outcome {
    let (f, cat, sweep) = setup(2);
    let g = theta8(&f, &cat);
    let b = endo_algebra_b(&g).unwrap();
    let r = gldim_bound_check(&b, 1, 8, Some(&sweep)).unwrap();
    let theta_ok = r.gldim_b.exact().is_some() && r.bound_holds;
    let (ss, simples) = semisimple_fixture(2, 3).unwrap();
    let reg = Module::regular(&ss);
    let stalk = |m: &Module| {
        let b = endo_algebra_b(&TwoTermComplex::stalk(m)).unwrap();
        gldim_bound_check(&b, 0, 8, None).unwrap()
    };
    let semi = stalk(&reg);
    let progen = stalk(&direct_sum(&ss, &[&reg, &reg, &simples[0]]).unwrap().module);
    let zero = |x: &gsilt::two_term::GldimBound| x.gldim_b == Bounded::Exactly(0) && x.bound_holds;
    Outcome {
        pass: theta_ok && zero(&semi) && zero(&progen),
        detail: format!(
            "θ8: gldim B {:?} ≤ {}; semisimple {:?}; progenerator {:?}",
            r.gldim_b, r.bound, semi.gldim_b, progen.gldim_b
        ),
    }
}

fn criterion8() -> (Outcome, fuzz::FuzzSummary) {
    let t = Instant::now();
    let s = fuzz::run(&FuzzConfig::default()).unwrap();
    let el = t.elapsed();
    let o = Outcome {
        pass: s.violations() == 0 && s.generated == 200 && el < Duration::from_secs(600),
        detail: format!(
            "{} generated, {} too large, {} inconclusive, {} checked ({} with complete sweeps), {} checks, violations {:?}, {:.1}s",
            s.generated,
            s.too_large,
            s.inconclusive,
            s.checked,
            s.complete_sweeps,
            s.checks,
            s.violations_by_invariant,
            el.as_secs_f64()
        ),
    };
    (o, s)
}

fn criterion9() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let run = |args: &[&str]| {
        let mut v = vec!["gsilt".to_string()];
        v.extend(args.iter().map(|s| s.to_string()));
        gsilt::cli::main_with(v)
    };
    let p = |s: &str| d.join(s).display().to_string();
    assert_eq!(run(&["build", "lambda", "--out", &p("")]), 0);
    let mut missing = Vec::new();
    let commands: Vec<(&str, Vec<String>)> = vec![
        ("silting", vec![p("Lambda.alg"), p("C9/G8.mod"), "--catalog".into(), p("C9.cat")]),
        ("torsion", vec![p("Lambda.alg"), p("C9/G8.mod"), "--catalog".into(), p("C9.cat")]),
        ("complex", vec![p("Lambda.alg"), "--theta".into(), p("theta8.map"), "--catalog".into(), p("C9.cat")]),
    ];
    for (cmd, rest) in &commands {
        let report = p(&format!("{cmd}.json"));
        let mut args = vec![*cmd];
        args.extend(rest.iter().map(String::as_str));
        args.extend(["--report", report.as_str()]);
        run(&args);
        let text = std::fs::read_to_string(&report).unwrap_or_default();
        if !text.contains(QUANTIFICATION) {
            missing.push(cmd.to_string());
        }
    }
    Outcome {
        pass: missing.is_empty(),
        detail: format!("reports without the quantification disclaimer: {missing:?}"),
    }
}

fn main() {
    let titles = [
        "Gproj enumeration of Λ",
        "Λ is 1-Gorenstein",
        "G8 is Gorenstein silting over C9",
        "τ_G-rigidity criteria agree",
        "module/complex silting bridge",
        "torsion pairs and Brenner-Butler for θ8",
        "gldim B ≤ Gdim Λ + 1",
        "fuzz invariant suite",
        "quantification disclaimer",
    ];
    let (c8, summary) = criterion8();
    let outcomes = [
        criterion1(),
        criterion2(),
        criterion3(),
        criterion4(),
        criterion5(),
        criterion6(),
        criterion7(),
        c8,
        criterion9(),
    ];
    for (i, (t, o)) in titles.iter().zip(&outcomes).enumerate() {
        line(i + 1, t, o);
    }
    let got: Vec<bool> = outcomes.iter().map(|o| o.pass).collect();
    // Criteria 3, 5, 6 and 8 fail on computed counterexamples; see README.
    assert_eq!(got, vec![true, true, false, true, false, false, true, false, true]);
    // The fuzz violations are exactly the bridge cases where the torsion-pair
    // fullness test accepts a complex that is not silting.
    assert_eq!(
        summary.violations_by_invariant.keys().collect::<Vec<_>>(),
        vec!["module_complex_bridge"]
    );
}
