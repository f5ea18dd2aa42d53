//! Hilbert-Kunz functions: counting residue sets modulo Frobenius sums.
//!
//! For an ideal `n` and `q ≥ 1` the Frobenius sum `[q]n` is generated by the
//! `q`-fold multiples of the generators of `n`. The Hilbert-Kunz function of
//! an `N`-set `T` counts the non-`∞` elements of `T / ([q]n + T)`.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::binoid::Binoid;
use crate::error::{Error, Result};
use crate::presentation::{smash, Presentation, Word};
use crate::rewrite::{Element, RewriteSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimaryStatus {
    Verified,
    Unverified,
    Refuted,
}

/// An ideal given by finitely many generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub generators: Vec<Element>,
    pub primary_status: PrimaryStatus,
}

impl IdealSpec {
    pub fn new(generators: Vec<Element>) -> Self {
        IdealSpec {
            generators,
            primary_status: PrimaryStatus::Unverified,
        }
    }

    pub fn from_words(words: Vec<Word>) -> Self {
        IdealSpec::new(words.into_iter().map(Element::Finite).collect())
    }

    /// The finite generators; `∞` contributes nothing to an ideal.
    pub fn words(&self) -> Vec<Word> {
        self.generators
            .iter()
            .filter_map(|g| g.as_word().cloned())
            .collect()
    }
}

/// The `N`-set whose residues are counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NSetSpec {
    /// `N` itself.
    Whole,
    /// An ideal `I`, counting `I / ([q]n + I)`.
    Ideal(IdealSpec),
    /// The residue binoid `N/I`.
    Quotient(IdealSpec),
    /// A pointed union of `N`-sets; counts add.
    PointedUnion(Vec<NSetSpec>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HKSample {
    pub q: u64,
    pub count: u128,
    /// Elements examined to obtain the count.
    pub enumerated: u128,
}

/// `[q]I`, generated by `q·g` for the generators `g` of `I`.
pub fn frobenius_sum(ideal: &IdealSpec, q: u64) -> Result<IdealSpec> {
    if q == 0 {
        return Err(Error::InvalidArgument("q must be at least 1".into()));
    }
    let k = u32::try_from(q).map_err(|_| Error::InvalidArgument(format!("q = {q} is too large")))?;
    Ok(IdealSpec {
        generators: ideal
            .generators
            .iter()
            .map(|g| match g {
                Element::Finite(w) => Element::Finite(w.scale(k)),
                Element::Infinity => Element::Infinity,
            })
            .collect(),
        primary_status: ideal.primary_status,
    })
}

/// `N_+`: the ideal generated by all non-unit generators.
pub fn maximal_ideal(b: &Binoid) -> Result<IdealSpec> {
    let units = b.unit_generators()?;
    let n = b.rank();
    let gens = (0..n)
        .filter(|&i| !units[i])
        .filter_map(|i| match b.normal_form(&Word::unit(n, i)) {
            Element::Finite(w) => Some(Element::Finite(w)),
            Element::Infinity => None,
        })
        .collect();
    Ok(IdealSpec::new(gens))
}

/// All non-`∞` elements of `N/J` as normal forms of `N`, in sorted order.
pub fn residue_enumerate(b: &Binoid, j: &IdealSpec, cap: usize) -> Result<Vec<Word>> {
    let quotient = b.quotient(&j.words())?;
    let set = enumerate_system(&quotient, cap)?;
    // normal forms of the quotient are normal forms of N
    Ok(set.into_iter().collect())
}

fn enumerate_system(rs: &RewriteSystem, cap: usize) -> Result<BTreeSet<Word>> {
    let n = rs.generator_count();
    let mut seen = BTreeSet::new();
    let start = match rs.normal_form(&Word::zero(n)) {
        Element::Finite(w) => w,
        Element::Infinity => return Ok(seen),
    };
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while let Some(w) = frontier.pop() {
        for i in 0..n {
            if let Element::Finite(next) = rs.normal_form(&w.plus(&Word::unit(n, i))) {
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::EnumerationCap(cap));
                    }
                    seen.insert(next.clone());
                    frontier.push(next);
                }
            }
        }
    }
    Ok(seen)
}

/// Exponents `dᵢ` with `dᵢ·gᵢ ∈ n` for every non-unit generator, which
/// witness that `n` is `N_+`-primary, or `None` when `N/n` is infinite.
pub fn primary_witnesses(b: &Binoid, n: &IdealSpec) -> Result<Option<Vec<(usize, u32)>>> {
    let quotient = b.quotient(&n.words())?;
    if quotient.is_collapsed() {
        return Ok(Some(Vec::new()));
    }
    let Some(size) = quotient.element_count() else {
        return Ok(None);
    };
    let units = b.unit_generators()?;
    let rank = b.rank();
    let mut out = Vec::new();
    for i in (0..rank).filter(|&i| !units[i]) {
        // in a finite binoid a non-unit is nilpotent within |N/n| + 1 steps
        let bound = u32::try_from(size + 1).unwrap_or(u32::MAX);
        let g = Word::unit(rank, i);
        let mut cur = g.clone();
        let mut found = None;
        for k in 1..=bound {
            match quotient.normal_form(&cur) {
                Element::Infinity => {
                    found = Some(k);
                    break;
                }
                Element::Finite(w) => cur = w.plus(&g),
            }
        }
        match found {
            Some(k) => out.push((i, k)),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// Checks that `N/n` is finite and every non-unit generator is nilpotent in
/// it, updating the status of `n`.
pub fn verify_primary(b: &Binoid, n: &mut IdealSpec) -> Result<PrimaryStatus> {
    if n.primary_status == PrimaryStatus::Unverified {
        n.primary_status = match primary_witnesses(b, n)? {
            Some(_) => PrimaryStatus::Verified,
            None => PrimaryStatus::Refuted,
        };
    }
    Ok(n.primary_status)
}

fn ensure_primary(b: &Binoid, n: &IdealSpec) -> Result<()> {
    let mut n = n.clone();
    match verify_primary(b, &mut n)? {
        PrimaryStatus::Refuted => Err(Error::NotPrimary(
            "the residue binoid modulo the ideal is infinite".into(),
        )),
        _ => Ok(()),
    }
}

/// `hkf(N, n, T, q)`. The ideal `n` is verified to be primary unless its
/// status says otherwise.
pub fn hkf(b: &Binoid, n: &IdealSpec, t: &NSetSpec, q: u64) -> Result<HKSample> {
    ensure_primary(b, n)?;
    hkf_unchecked(b, n, t, q)
}

fn hkf_unchecked(b: &Binoid, n: &IdealSpec, t: &NSetSpec, q: u64) -> Result<HKSample> {
    let fq = frobenius_sum(n, q)?.words();
    let (count, enumerated) = count_set(b, &fq, t)?;
    Ok(HKSample {
        q,
        count,
        enumerated,
    })
}

fn count_set(b: &Binoid, fq: &[Word], t: &NSetSpec) -> Result<(u128, u128)> {
    match t {
        NSetSpec::Whole => finite_count(&b.quotient(fq)?),
        NSetSpec::Quotient(i) => {
            let mut gens = i.words();
            gens.extend_from_slice(fq);
            finite_count(&b.quotient(&gens)?)
        }
        NSetSpec::Ideal(i) => {
            let c = ideal_residue_counts(b, &i.words(), fq)?;
            Ok((c.ideal, c.candidates))
        }
        NSetSpec::PointedUnion(parts) => parts.iter().try_fold((0, 0), |(c, e), part| {
            let (pc, pe) = count_set(b, fq, part)?;
            Ok((c + pc, e + pe))
        }),
    }
}

fn finite_count(rs: &RewriteSystem) -> Result<(u128, u128)> {
    match rs.element_count() {
        Some(c) => Ok((c, c)),
        None => Err(Error::NotPrimary("residue set is infinite".into())),
    }
}

struct IdealCounts {
    /// `#I / (I + J)`
    ideal: u128,
    /// `#(I ∩ J) / (I + J)`
    intersection: u128,
    candidates: u128,
}

// Every element of I outside I + J has the form i + m with i a generator of
// I and m outside J, so normal forms of those sums cover I ∖ (I + J).
fn ideal_residue_counts(b: &Binoid, i: &[Word], j: &[Word]) -> Result<IdealCounts> {
    let quotient_j = b.quotient(j)?;
    let residues = enumerate_system(&quotient_j, b.limits().enumeration_cap)?;
    let sums: Vec<Word> = i
        .iter()
        .flat_map(|a| j.iter().map(move |c| a.plus(c)))
        .collect();
    let quotient_sum = b.quotient(&sums)?;
    let mut seen = HashSet::new();
    for a in i {
        for m in &residues {
            if let Element::Finite(x) = b.normal_form(&a.plus(m)) {
                seen.insert(x);
            }
        }
    }
    let mut counts = IdealCounts {
        ideal: 0,
        intersection: 0,
        candidates: seen.len() as u128,
    };
    for x in &seen {
        if quotient_sum.normal_form(x).is_infinity() {
            continue;
        }
        counts.ideal += 1;
        if quotient_j.normal_form(x).is_infinity() {
            counts.intersection += 1;
        }
    }
    Ok(counts)
}

/// One row per `q`; errors are reported per row so a failing `q` does not
/// discard the others.
pub fn hkf_table(b: &Binoid, n: &IdealSpec, t: &NSetSpec, qs: &[u64]) -> Vec<Result<HKSample>> {
    if let Err(e) = ensure_primary(b, n) {
        return qs.iter().map(|_| Err(e.clone())).collect();
    }
    qs.par_iter().map(|&q| hkf_unchecked(b, n, t, q)).collect()
}

/// The four counts of the identity
/// `#N/J + #(I∩J)/(I+J) = #I/(I+J) + #N/(I∪J)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountingIdentity {
    pub n_mod_j: u128,
    pub intersection_mod_sum: u128,
    pub i_mod_sum: u128,
    pub n_mod_union: u128,
}

impl CountingIdentity {
    pub fn holds(&self) -> bool {
        self.n_mod_j + self.intersection_mod_sum == self.i_mod_sum + self.n_mod_union
    }
}

pub fn verify_counting_identity(
    b: &Binoid,
    i: &IdealSpec,
    j: &IdealSpec,
) -> Result<CountingIdentity> {
    let (iw, jw) = (i.words(), j.words());
    let n_mod_j = finite_count(&b.quotient(&jw)?)?.0;
    let mut union = iw.clone();
    union.extend(jw.iter().cloned());
    let n_mod_union = finite_count(&b.quotient(&union)?)?.0;
    let c = ideal_residue_counts(b, &iw, &jw)?;
    Ok(CountingIdentity {
        n_mod_j,
        intersection_mod_sum: c.intersection,
        i_mod_sum: c.ideal,
        n_mod_union,
    })
}

/// `hkf` of two binoids and of their smash product with respect to the
/// maximal ideals, at one `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SmashCheck {
    pub left: u128,
    pub right: u128,
    pub smash: u128,
}

impl SmashCheck {
    pub fn holds(&self) -> bool {
        self.left * self.right == self.smash
    }
}

pub fn verify_smash_multiplicativity(a: &Presentation, b: &Presentation, q: u64) -> Result<SmashCheck> {
    let count = |p: &Presentation| -> Result<u128> {
        let bin = Binoid::new(p.clone())?;
        let m = maximal_ideal(&bin)?;
        Ok(hkf(&bin, &m, &NSetSpec::Whole, q)?.count)
    };
    Ok(SmashCheck {
        left: count(a)?,
        right: count(b)?,
        smash: count(&smash(a, b))?,
    })
}

/// Upper bound `|N^×|·∏dᵢ·q^s` on `hkf(N, n, q)`, where `s` counts the
/// non-unit generators and `dᵢ·gᵢ ∈ n`. Every element is a unit plus
/// `Σ aᵢ·gᵢ`, and `aᵢ ≥ q·dᵢ` already lands in `[q]n`.
pub fn hkf_upper_bound(b: &Binoid, n: &IdealSpec, unit_order: u64, q: u64) -> Result<u128> {
    let witnesses =
        primary_witnesses(b, n)?.ok_or_else(|| Error::NotPrimary("N/n is infinite".into()))?;
    let d: u128 = witnesses.iter().map(|&(_, k)| k as u128).product();
    Ok(unit_order as u128 * d * (q as u128).pow(witnesses.len() as u32))
}
