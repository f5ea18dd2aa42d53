//! Prime ideals, combinatorial dimension and the structural predicates the
//! reduction theorems need.
//!
//! Every prime ideal of a finitely generated binoid is generated by the
//! generators it contains, so the spectrum is found by closing each
//! generator subset and testing whether the quotient is integral.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::binoid::Binoid;
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};
use crate::rewrite::{Element, RewriteSystem};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PrimeIdeal {
    /// A smallest generator subset generating the ideal.
    pub generator_subset: Vec<usize>,
    /// All generators lying in the ideal.
    pub closure: Vec<usize>,
}

impl PrimeIdeal {
    pub fn contains(&self, other: &PrimeIdeal) -> bool {
        other.closure.iter().all(|g| self.closure.contains(g))
    }

    pub fn words(&self, rank: usize) -> Vec<Word> {
        self.closure.iter().map(|&i| Word::unit(rank, i)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub primes: Vec<PrimeIdeal>,
    pub minimal_primes: Vec<PrimeIdeal>,
    pub dimension: usize,
    /// `dim N/𝔭` for each entry of `primes`.
    pub quotient_dimensions: Vec<usize>,
}

impl SpectrumReport {
    /// Minimal primes whose quotient has the full dimension.
    pub fn top_dimensional_minimal_primes(&self) -> Vec<&PrimeIdeal> {
        self.minimal_primes
            .iter()
            .filter(|p| self.quotient_dimension(p) == Some(self.dimension))
            .collect()
    }

    pub fn quotient_dimension(&self, p: &PrimeIdeal) -> Option<usize> {
        self.primes
            .iter()
            .position(|q| q.closure == p.closure)
            .map(|i| self.quotient_dimensions[i])
    }
}

/// Generators lying in the ideal generated by `subset`.
pub fn candidate_ideal_closure(rs: &RewriteSystem, subset: &[usize]) -> Result<Vec<usize>> {
    let n = rs.generator_count();
    let gens: Vec<Word> = subset.iter().map(|&i| Word::unit(n, i)).collect();
    let q = rs.with_infinity(&gens)?;
    Ok(closure_in(&q))
}

fn closure_in(quotient: &RewriteSystem) -> Vec<usize> {
    let n = quotient.generator_count();
    (0..n)
        .filter(|&i| quotient.normal_form(&Word::unit(n, i)).is_infinity())
        .collect()
}

/// Integrality of a completed system: no two non-`∞` elements sum to `∞`.
///
/// For a reduced complete system this holds exactly when every left-hand
/// side rewriting to `∞` is a single generator with exponent one. The zero
/// binoid is not integral.
pub fn is_integral_quotient(rs: &RewriteSystem) -> bool {
    !rs.is_collapsed() && rs.infinity_generators().all(|w| w.degree() == 1)
}

pub fn spectrum(b: &Binoid) -> Result<SpectrumReport> {
    let n = b.rank();
    let cap = b.limits().subset_cap;
    if n > cap {
        return Err(Error::SubsetCap { generators: n, cap });
    }
    let rs = b.system();
    if rs.is_collapsed() {
        return Ok(SpectrumReport {
            primes: Vec::new(),
            minimal_primes: Vec::new(),
            dimension: 0,
            quotient_dimensions: Vec::new(),
        });
    }
    let mut masks: Vec<u32> = (0..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let tested: Vec<(u32, Vec<usize>, bool)> = masks
        .par_iter()
        .map(|&mask| {
            let subset = bits(mask, n);
            let gens: Vec<Word> = subset.iter().map(|&i| Word::unit(n, i)).collect();
            let q = rs.with_infinity(&gens)?;
            Ok((mask, closure_in(&q), is_integral_quotient(&q)))
        })
        .collect::<Result<_>>()?;

    let mut seen = HashSet::new();
    let mut primes = Vec::new();
    for (mask, closure, integral) in tested {
        if !seen.insert(closure.clone()) {
            continue;
        }
        if integral {
            primes.push(PrimeIdeal {
                generator_subset: bits(mask, n),
                closure,
            });
        }
    }
    primes.sort_by(|a, b| (a.closure.len(), &a.closure).cmp(&(b.closure.len(), &b.closure)));

    // longest chain of strictly larger primes above each prime
    let mut heights = vec![0usize; primes.len()];
    for i in (0..primes.len()).rev() {
        for j in i + 1..primes.len() {
            if primes[j].closure.len() > primes[i].closure.len() && primes[j].contains(&primes[i]) {
                heights[i] = heights[i].max(heights[j] + 1);
            }
        }
    }
    let minimal_primes: Vec<PrimeIdeal> = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && p.contains(q)))
        .cloned()
        .collect();
    let dimension = heights.iter().copied().max().unwrap_or(0);
    Ok(SpectrumReport {
        primes,
        minimal_primes,
        dimension,
        quotient_dimensions: heights,
    })
}

fn bits(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reducedness {
    Reduced,
    NotReduced,
    Unknown,
}

/// Decides whether `nil(N) = {∞}`.
///
/// Cheap witnesses come first: a generator with a multiple `k·g = ∞`
/// (`k ≤ cap`), or an `∞`-generator of the form `k·v` with `k ≥ 2`. When the
/// generator count allows subset enumeration the answer is exact: the
/// nilradical is the intersection of the minimal primes, and a non-`∞`
/// nilpotent exists iff the sum of some generator set meeting every minimal
/// prime is not `∞`.
pub fn is_reduced(b: &Binoid, cap: u32) -> Result<Reducedness> {
    let rs = b.system();
    if rs.is_collapsed() {
        return Ok(Reducedness::Reduced);
    }
    let n = b.rank();
    for i in 0..n {
        let g = Word::unit(n, i);
        if rs.normal_form(&g).is_infinity() {
            continue;
        }
        for k in 2..=cap {
            if rs.normal_form(&g.scale(k)).is_infinity() {
                return Ok(Reducedness::NotReduced);
            }
        }
    }
    for m in rs.infinity_generators() {
        let g = m.iter().fold(0u32, |acc, &e| num_integer::gcd(acc, e));
        if g >= 2 {
            return Ok(Reducedness::NotReduced);
        }
    }
    if n > b.limits().subset_cap {
        return Ok(Reducedness::Unknown);
    }
    let report = spectrum(b)?;
    let minimal: Vec<BTreeSet<usize>> = report
        .minimal_primes
        .iter()
        .map(|p| p.closure.iter().copied().collect())
        .collect();
    for mask in 0..(1u32 << n) {
        let set = bits(mask, n);
        if !minimal.iter().all(|p| set.iter().any(|i| p.contains(i))) {
            continue;
        }
        let mut w = Word::zero(n);
        for &i in &set {
            w[i] = 1;
        }
        if !rs.normal_form(&w).is_infinity() {
            return Ok(Reducedness::NotReduced);
        }
    }
    Ok(Reducedness::Reduced)
}

/// Order of the unit group, or `None` when the subgroup generated by the
/// unit generators exceeds `cap` elements (possibly infinite).
pub fn unit_group_order(b: &Binoid, cap: usize) -> Result<Option<u64>> {
    let units = b.unit_generators()?;
    let rs = b.system();
    if rs.is_collapsed() {
        return Ok(Some(1));
    }
    let n = b.rank();
    let unit_idx: Vec<usize> = (0..n).filter(|&i| units[i]).collect();
    let start = match rs.normal_form(&Word::zero(n)) {
        Element::Finite(w) => w,
        Element::Infinity => return Ok(Some(1)),
    };
    let mut seen = HashSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while let Some(w) = frontier.pop() {
        for &i in &unit_idx {
            if let Element::Finite(next) = rs.normal_form(&w.plus(&Word::unit(n, i))) {
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Ok(None);
                    }
                    frontier.push(next);
                }
            }
        }
    }
    Ok(Some(seen.len() as u64))
}

/// The integral quotient `N/𝔭` as a presentation without `∞`: the
/// generators outside the prime together with the word rules of the
/// completed quotient system. Returns the presentation and, for each of its
/// generators, the index in `N`.
pub fn integral_presentation(b: &Binoid, prime: &PrimeIdeal) -> Result<(Presentation, Vec<usize>)> {
    let n = b.rank();
    let q = b.quotient(&prime.words(n))?;
    if !is_integral_quotient(&q) {
        return Err(Error::UnmetHypothesis(format!(
            "quotient by {:?} is not integral",
            prime.closure
        )));
    }
    let keep: Vec<usize> = (0..n).filter(|i| !prime.closure.contains(i)).collect();
    let project = |w: &Word| Word(keep.iter().map(|&i| w[i]).collect());
    let congruences = q
        .word_rules()
        .map(|(l, r)| (project(l), project(r)))
        .collect();
    let names = keep.iter().map(|&i| b.generator_names()[i].clone()).collect();
    Ok((Presentation::new(names, congruences, Vec::new())?, keep))
}

/// Generator names of a prime, for reports.
pub fn prime_names(b: &Binoid, p: &PrimeIdeal) -> Vec<String> {
    p.closure
        .iter()
        .map(|&i| b.generator_names()[i].clone())
        .collect()
}

/// Prime closures keyed by their generator names.
pub fn named_primes(b: &Binoid, primes: &[PrimeIdeal]) -> BTreeMap<Vec<String>, usize> {
    primes
        .iter()
        .enumerate()
        .map(|(i, p)| (prime_names(b, p), i))
        .collect()
}
