//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs without the libtest harness; exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use binoid_hk::hk::{hkf, maximal_ideal, verify_counting_identity, verify_smash_multiplicativity, IdealSpec, NSetSpec};
use binoid_hk::presentation::stanley_reisner;
use binoid_hk::spectrum::spectrum;
use binoid_hk::structure::{
    difference_group, ehk, ehk_estimate, torsion_freefication, EhkOptions, EhkValue, TraceStep,
    DEFAULT_SCHEDULE,
};
use binoid_hk::{free_binoid, frobenius_sum, parse_presentation, smash, Binoid, Presentation, SimplicialComplex, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Relative tolerance of the numerical estimate against the exact value.
const ESTIMATE_TOLERANCE: f64 = 0.05;
/// Largest relative error of `hkf(64)/64^d` against the exact value.
const CONVERGENCE_TOLERANCE: f64 = 0.10;
const SEED: u64 = 0x5eed_b170;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn exact_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An input with a known exact multiplicity.
struct ExactCase {
    name: String,
    presentation: Presentation,
    expected: BigRational,
}

fn ehk_exact(p: &Presentation) -> Result<(BigRational, Vec<TraceStep>, usize), String> {
    let b = Binoid::new(p.clone()).map_err(|e| e.to_string())?;
    let m = maximal_ideal(&b).map_err(|e| e.to_string())?;
    let r = ehk(&b, &m, &EhkOptions::default()).map_err(|e| e.to_string())?;
    match r.value {
        EhkValue::Exact(v) => Ok((v, r.trace, r.dimension)),
        other => Err(format!("expected an exact value, got {other}")),
    }
}

fn check_exact(case: &ExactCase) -> Result<(), String> {
    let (v, _, _) = ehk_exact(&case.presentation)?;
    if v != case.expected {
        return Err(format!("{}: e_HK = {v}, expected {}", case.name, case.expected));
    }
    Ok(())
}

fn complexes() -> Vec<(&'static str, SimplicialComplex, i64)> {
    let c = |v: &[&str], f: &[&[&str]]| SimplicialComplex::from_names(v, f).unwrap();
    vec![
        ("path", c(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]), 2),
        ("two triangles on an edge", c(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["b", "c", "d"]]), 2),
        ("triangle and disjoint edge", c(&["a", "b", "c", "d", "e"], &[&["a", "b", "c"], &["d", "e"]]), 1),
        ("edge and two points", c(&["a", "b", "c", "d"], &[&["a", "b"], &["c"], &["d"]]), 1),
        ("hollow triangle", c(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]), 3),
        ("square cycle", c(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]), 4),
        ("two disjoint edges", c(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]]), 2),
    ]
}

fn exact_cases() -> Vec<ExactCase> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(ExactCase {
            name: format!("free {n}"),
            presentation: free_binoid(n),
            expected: exact_int(1),
        });
    }
    for (name, c, k) in complexes() {
        out.push(ExactCase {
            name: format!("sr {name}"),
            presentation: stanley_reisner(&c),
            expected: exact_int(k),
        });
    }
    for a in [2, 3, 5] {
        out.push(ExactCase {
            name: format!("{a}x = {a}y"),
            presentation: parse_presentation(&format!("binoid x,y | {a}x = {a}y")).unwrap(),
            expected: exact_int(a),
        });
    }
    out.push(ExactCase {
        name: "(2;1), (3;0) mod 2".into(),
        presentation: parse_presentation("affine (2;1) (3;0) mod 2").unwrap(),
        expected: exact_int(4),
    });
    out.push(ExactCase {
        name: "4X + 12Y = 16Z".into(),
        presentation: parse_presentation("binoid X,Y,Z | 4X + 12Y = 16Z").unwrap(),
        expected: exact_int(13),
    });
    out
}

fn free_binoid_criterion() -> Outcome {
    for n in 1..=4usize {
        let b = Binoid::new(free_binoid(n)).map_err(|e| e.to_string())?;
        let m = maximal_ideal(&b).map_err(|e| e.to_string())?;
        for q in 1..=20u64 {
            let c = hkf(&b, &m, &NSetSpec::Whole, q).map_err(|e| e.to_string())?.count;
            if c != (q as u128).pow(n as u32) {
                return Err(format!("hkf(free {n}, {q}) = {c}"));
            }
        }
        let (v, _, _) = ehk_exact(&free_binoid(n))?;
        if v != exact_int(1) {
            return Err(format!("e_HK(free {n}) = {v}"));
        }
    }
    Ok("hkf = q^n for n ≤ 4, q ≤ 20; e_HK = 1".into())
}

fn stanley_reisner_criterion() -> Outcome {
    let all = complexes();
    for (name, c, k) in &all {
        let p = stanley_reisner(c);
        let (v, _, _) = ehk_exact(&p)?;
        if v != exact_int(*k) {
            return Err(format!("{name}: e_HK = {v}, expected {k}"));
        }
        let b = Binoid::new(p).map_err(|e| e.to_string())?;
        let m = maximal_ideal(&b).map_err(|e| e.to_string())?;
        for q in 1..=10u32 {
            let got = hkf(&b, &m, &NSetSpec::Whole, q as u64).map_err(|e| e.to_string())?.count;
            let want = common::brute_sr_count(c, q);
            if got != want {
                return Err(format!("{name}: hkf({q}) = {got}, monomial count {want}"));
            }
        }
    }
    Ok(format!("{} complexes, e_HK = #top facets, hkf agrees for q ≤ 10", all.len()))
}

fn torsion_one() -> Outcome {
    for a in [2, 3, 5] {
        check_exact(&ExactCase {
            name: format!("{a}x = {a}y"),
            presentation: parse_presentation(&format!("binoid x,y | {a}x = {a}y")).unwrap(),
            expected: exact_int(a),
        })?;
    }
    Ok("e_HK = a for a ∈ {2, 3, 5}".into())
}

fn torsion_two() -> Outcome {
    let p = parse_presentation("affine (2;1) (3;0) mod 2").unwrap();
    let (v, trace, _) = ehk_exact(&p)?;
    if v != exact_int(4) {
        return Err(format!("e_HK = {v}"));
    }
    if !trace.iter().any(|s| matches!(s, TraceStep::Torsion { order: 2, .. })) {
        return Err("trace lacks |T| = 2".into());
    }
    if !trace.iter().any(|s| matches!(s, TraceStep::ToricVolume { value, .. } if value == "2/1")) {
        return Err("trace lacks toric factor 2".into());
    }
    Ok("e_HK = 4 = 2 · 2".into())
}

fn torsion_three() -> Outcome {
    let p = parse_presentation("binoid X,Y,Z | 4X + 12Y = 16Z").unwrap();
    let lat = difference_group(&p).map_err(|e| e.to_string())?;
    if lat.rank != 2 || lat.torsion_invariants != vec![4] {
        return Err(format!("diff N has rank {} and torsion {:?}", lat.rank, lat.torsion_invariants));
    }
    let tf = torsion_freefication(&p).map_err(|e| e.to_string())?;
    let f = tf.presentation(p.generators()).map_err(|e| e.to_string())?;
    let want = (Word::from_slice(&[1, 3, 0]), Word::from_slice(&[0, 0, 4]));
    let matches = f.congruences().len() == 1
        && (f.congruences()[0] == want || f.congruences()[0] == (want.1.clone(), want.0.clone()));
    if !matches {
        return Err(format!("torsion-freefication is {f}"));
    }
    let (v, trace, _) = ehk_exact(&p)?;
    if !trace.iter().any(|s| matches!(s, TraceStep::ToricVolume { value, .. } if value == "13/4")) {
        return Err("trace lacks toric factor 13/4".into());
    }
    if v != exact_int(13) {
        return Err(format!("e_HK = {v}"));
    }
    Ok(format!("diff N ≅ ℤ² × ℤ/4, F = {f}, 4 · 13/4 = 13"))
}

fn random_presentation(rng: &mut StdRng) -> Presentation {
    parse_presentation(&common::random_spec(rng)).unwrap()
}

fn smash_criterion() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..20 {
        let (a, b) = (random_presentation(&mut rng), random_presentation(&mut rng));
        for q in [2, 3, 5, 8] {
            let c = verify_smash_multiplicativity(&a, &b, q).map_err(|e| e.to_string())?;
            if !c.holds() {
                return Err(format!("{a} ∧ {b} at q = {q}: {} · {} ≠ {}", c.left, c.right, c.smash));
            }
        }
    }
    Ok("20 pairs, q ∈ {2, 3, 5, 8}".into())
}

fn counting_identity_criterion() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let mut nontrivial = 0;
    for _ in 0..20 {
        let p = random_presentation(&mut rng);
        let b = Binoid::new(p.clone()).map_err(|e| e.to_string())?;
        let n = p.rank();
        let words: Vec<Word> = (0..rng.gen_range(1..=2))
            .map(|_| Word((0..n).map(|_| rng.gen_range(0..=2)).collect()))
            .collect();
        let i = IdealSpec::from_words(words);
        let m = maximal_ideal(&b).map_err(|e| e.to_string())?;
        let j = frobenius_sum(&m, rng.gen_range(1..=4)).map_err(|e| e.to_string())?;
        let c = verify_counting_identity(&b, &i, &j).map_err(|e| format!("{p}: {e}"))?;
        if !c.holds() {
            return Err(format!("{p}: {c:?}"));
        }
        if c.intersection_mod_sum > 0 {
            nontrivial += 1;
        }
    }
    Ok(format!("20 triples, {nontrivial} with a nonempty (I∩J)/(I+J)"))
}

fn dimension_criterion() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let dim = |p: &Presentation| -> Result<usize, String> {
        let b = Binoid::new(p.clone()).map_err(|e| e.to_string())?;
        Ok(spectrum(&b).map_err(|e| e.to_string())?.dimension)
    };
    for _ in 0..10 {
        let (a, b) = (random_presentation(&mut rng), random_presentation(&mut rng));
        let (da, db, ds) = (dim(&a)?, dim(&b)?, dim(&smash(&a, &b))?);
        if ds != da + db {
            return Err(format!("dim({a} ∧ {b}) = {ds} ≠ {da} + {db}"));
        }
    }
    Ok("10 pairs".into())
}

fn convergence_criterion() -> Outcome {
    let qs = [8u64, 16, 32, 64];
    let mut worst: f64 = 0.0;
    for case in exact_cases() {
        let b = Binoid::new(case.presentation.clone()).map_err(|e| e.to_string())?;
        let m = maximal_ideal(&b).map_err(|e| e.to_string())?;
        let d = spectrum(&b).map_err(|e| e.to_string())?.dimension;
        let target = case.expected.to_f64().unwrap();
        let errs: Vec<f64> = qs
            .iter()
            .map(|&q| {
                let c = hkf(&b, &m, &NSetSpec::Whole, q).map_err(|e| e.to_string())?.count;
                Ok((c as f64 / (q as f64).powi(d as i32) - target).abs())
            })
            .collect::<Result<_, String>>()?;
        // decreasing in trend: the last error is the smallest up to rounding
        // and at most one step goes up
        let ups = errs.windows(2).filter(|w| w[1] > w[0] + 1e-12).count();
        if ups > 1 || errs[3] > errs[0] + 1e-12 {
            return Err(format!("{}: errors {errs:?} do not decrease", case.name));
        }
        let rel = errs[3] / target;
        worst = worst.max(rel);
        if rel >= CONVERGENCE_TOLERANCE {
            return Err(format!("{}: relative error {rel:.4} at q = 64", case.name));
        }
    }
    Ok(format!("{} cases, worst relative error at q = 64: {worst:.4}", exact_cases().len()))
}

fn estimate_criterion() -> Outcome {
    let mut worst: f64 = 0.0;
    for case in exact_cases() {
        let b = Binoid::new(case.presentation.clone()).map_err(|e| e.to_string())?;
        let m = maximal_ideal(&b).map_err(|e| e.to_string())?;
        let est = ehk_estimate(&b, &m, &DEFAULT_SCHEDULE).map_err(|e| e.to_string())?;
        let target = case.expected.to_f64().unwrap();
        let rel = (est.value.as_f64() - target).abs() / target;
        worst = worst.max(rel);
        if rel > ESTIMATE_TOLERANCE {
            return Err(format!("{}: estimate {} against {target}", case.name, est.value));
        }
    }
    Ok(format!("{} cases, worst relative deviation {worst:.2e}", exact_cases().len()))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("free binoid", Duration::from_secs(1), free_binoid_criterion),
        ("stanley-reisner", Duration::from_secs(5), stanley_reisner_criterion),
        ("torsion example 1", Duration::from_secs(1), torsion_one),
        ("torsion example 2", Duration::from_secs(1), torsion_two),
        ("torsion example 3", Duration::from_secs(5), torsion_three),
        ("smash multiplicativity", Duration::from_secs(30), smash_criterion),
        ("counting identity", Duration::from_secs(30), counting_identity_criterion),
        ("dimension additivity", Duration::from_secs(10), dimension_criterion),
        ("convergence", Duration::from_secs(60), convergence_criterion),
        ("estimate mode", Duration::from_secs(60), estimate_criterion),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= *limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} [{:>2}] {name:<24} {elapsed:>10.2?}  {detail}", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
