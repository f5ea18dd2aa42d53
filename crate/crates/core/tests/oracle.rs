//! The library against the brute-force closure in `common`.

mod common;

use binoid_hk::hk::{hkf, maximal_ideal, IdealSpec, NSetSpec};
use binoid_hk::presentation::stanley_reisner;
use binoid_hk::spectrum::spectrum;
use binoid_hk::{parse_presentation, Binoid, Element, SimplicialComplex, Word};
use common::{brute_classes, brute_residue_count, brute_sr_count, graded_cases};

#[test]
fn hkf_matches_the_closure_counter() {
    for (src, weights) in graded_cases() {
        let p = parse_presentation(src).unwrap();
        let b = Binoid::new(p.clone()).unwrap();
        let m = maximal_ideal(&b).unwrap();
        for q in 1..=7u32 {
            let got = hkf(&b, &m, &NSetSpec::Whole, q as u64).unwrap().count;
            assert_eq!(got, brute_residue_count(&p, &weights, q, &[]), "{src} at q = {q}");
        }
    }
}

#[test]
fn quotient_sets_match_the_closure_counter() {
    let p = parse_presentation("binoid x,y,z | x + y = 2z").unwrap();
    let b = Binoid::new(p.clone()).unwrap();
    let m = maximal_ideal(&b).unwrap();
    let extra = vec![vec![1, 0, 1]];
    let i = IdealSpec::from_words(vec![Word(extra[0].clone())]);
    for q in 1..=6u32 {
        let got = hkf(&b, &m, &NSetSpec::Quotient(i.clone()), q as u64).unwrap().count;
        assert_eq!(got, brute_residue_count(&p, &[1, 1, 1], q, &extra));
    }
}

#[test]
fn normal_forms_separate_exactly_the_closure_classes() {
    for (src, weights) in graded_cases() {
        let p = parse_presentation(src).unwrap();
        let b = Binoid::new(p.clone()).unwrap();
        let bound = 2 * weights.iter().max().unwrap() + 6;
        let classes = brute_classes(&p, &weights, bound, &[]);
        let mut reps: std::collections::HashMap<Element, Option<usize>> = Default::default();
        for (w, class) in &classes {
            let nf = b.normal_form(&Word(w.clone()));
            assert_eq!(nf.is_infinity(), class.is_none(), "{src}: {w:?}");
            if let Some(prev) = reps.insert(nf.clone(), *class) {
                assert_eq!(prev, *class, "{src}: {w:?} merges two classes");
            }
        }
        // distinct classes get distinct normal forms
        let distinct: std::collections::HashSet<_> = classes.iter().map(|c| c.1).collect();
        assert_eq!(reps.len(), distinct.len(), "{src}");
    }
}

fn complexes() -> Vec<(SimplicialComplex, usize)> {
    let c = |v: &[&str], f: &[&[&str]]| SimplicialComplex::from_names(v, f).unwrap();
    vec![
        (c(&["a", "b", "c"], &[&["a", "b"], &["b", "c"]]), 2),
        (c(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["b", "c", "d"]]), 2),
        (c(&["a", "b", "c", "d", "e"], &[&["a", "b", "c"], &["d", "e"]]), 1),
        (c(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]), 3),
        (c(&["a", "b", "c", "d"], &[&["a", "b"], &["c", "d"]]), 2),
        (c(&["a", "b", "c", "d"], &[&["a", "b"], &["b", "c"], &["c", "d"], &["a", "d"]]), 4),
    ]
}

#[test]
fn stanley_reisner_counts_match_monomial_counter() {
    for (c, _) in complexes() {
        let b = Binoid::new(stanley_reisner(&c)).unwrap();
        let m = maximal_ideal(&b).unwrap();
        for q in 1..=10u32 {
            let got = hkf(&b, &m, &NSetSpec::Whole, q as u64).unwrap().count;
            assert_eq!(got, brute_sr_count(&c, q));
        }
    }
}

#[test]
fn stanley_reisner_primes_are_complements_of_faces() {
    for (c, _) in complexes() {
        let n = c.vertices().len();
        let b = Binoid::new(stanley_reisner(&c)).unwrap();
        let report = spectrum(&b).unwrap();
        let faces = (0u32..(1 << n))
            .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>())
            .filter(|f| c.is_face(f))
            .count();
        assert_eq!(report.primes.len(), faces);
        for p in &report.primes {
            let face: Vec<usize> = (0..n).filter(|i| !p.closure.contains(i)).collect();
            assert!(c.is_face(&face));
        }
        assert_eq!(report.dimension as isize, c.dimension() + 1);
    }
}
