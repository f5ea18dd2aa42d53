//! Word problem for binoid presentations.
//!
//! A presentation's congruences and `∞`-relations are completed into a
//! terminating, confluent rewriting system on exponent vectors. Critical
//! pairs are formed at the componentwise maximum of two left-hand sides, so
//! the procedure is Knuth-Bendix completion specialised to commutative
//! words; termination of completion follows from Dickson's lemma.

mod order;
pub mod staircase;

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{word_mismatch, Error, Result};
use crate::presentation::{Presentation, Word};

pub use order::TermOrder;

/// Default cap on processed critical pairs.
pub const DEFAULT_COMPLETION_BUDGET: usize = 100_000;

/// An element of a binoid: a normal-form word or the absorbing `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Element {
    Finite(Word),
    Infinity,
}

impl Element {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Element::Infinity)
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Element::Finite(w) => Some(w),
            Element::Infinity => None,
        }
    }

    fn shifted(&self, by: &Word) -> Element {
        match self {
            Element::Finite(w) => Element::Finite(w.plus(by)),
            Element::Infinity => Element::Infinity,
        }
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Self {
        Element::Finite(w)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Finite(w) => write!(f, "{w}"),
            Element::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Element,
}

/// A complete rewriting system for one binoid.
///
/// `collapsed` marks the zero binoid, where `0 = ∞` and every word reduces
/// to `∞`.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    len: usize,
    rules: Vec<RewriteRule>,
    order: TermOrder,
    collapsed: bool,
    pairs_processed: usize,
    budget: usize,
}

impl RewriteSystem {
    pub fn generator_count(&self) -> usize {
        self.len
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn is_collapsed(&self) -> bool {
        self.collapsed
    }

    /// Critical pairs processed by the completion that built this system.
    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Left-hand sides of the rules rewriting to `∞`: the minimal generators
    /// of the `∞`-ideal in normal-form coordinates.
    pub fn infinity_generators(&self) -> impl Iterator<Item = &Word> {
        self.rules
            .iter()
            .filter(|r| r.rhs.is_infinity())
            .map(|r| &r.lhs)
    }

    /// Rules between two finite words.
    pub fn word_rules(&self) -> impl Iterator<Item = (&Word, &Word)> {
        self.rules.iter().filter_map(|r| match &r.rhs {
            Element::Finite(w) => Some((&r.lhs, w)),
            Element::Infinity => None,
        })
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        !self.collapsed && !self.rules.iter().any(|r| r.lhs.divides(w))
    }

    pub fn normal_form(&self, w: &Word) -> Element {
        if self.collapsed {
            return Element::Infinity;
        }
        reduce_with(&self.rules, w.clone())
    }

    pub fn normal_form_of(&self, e: &Element) -> Element {
        match e {
            Element::Finite(w) => self.normal_form(w),
            Element::Infinity => Element::Infinity,
        }
    }

    /// `NF(a + b)`; `∞` absorbs.
    pub fn add(&self, a: &Element, b: &Element) -> Element {
        match (a, b) {
            (Element::Finite(x), Element::Finite(y)) => self.normal_form(&x.plus(y)),
            _ => Element::Infinity,
        }
    }

    /// Number of non-`∞` elements, `None` when the binoid is infinite.
    pub fn element_count(&self) -> Option<u128> {
        if self.collapsed {
            return Some(0);
        }
        let lhs: Vec<Word> = self.rules.iter().map(|r| r.lhs.clone()).collect();
        staircase::count_standard_words(self.len, &lhs)
    }

    /// Completes this system with additional `∞`-relations.
    pub fn with_infinity(&self, gens: &[Word]) -> Result<RewriteSystem> {
        for g in gens {
            if g.len() != self.len {
                return Err(word_mismatch(self.len, g));
            }
        }
        if self.collapsed {
            return Ok(self.clone());
        }
        let eqs = gens
            .iter()
            .map(|g| (Element::Finite(g.clone()), Element::Infinity))
            .collect();
        Completion::resume(self, eqs, self.budget).run()
    }

    /// `x ∈ ⟨gens⟩`: recompletes with the generators sent to `∞` and tests
    /// whether `x` reduces to `∞`. `∞` generators are ignored.
    pub fn ideal_membership(&self, gens: &[Element], x: &Element) -> Result<bool> {
        let words: Vec<Word> = gens.iter().filter_map(|g| g.as_word().cloned()).collect();
        let Element::Finite(x) = x else {
            return Ok(true);
        };
        let quotient = self.with_infinity(&words)?;
        Ok(quotient.normal_form(x).is_infinity())
    }
}

fn reduce_with(rules: &[RewriteRule], mut w: Word) -> Element {
    'outer: loop {
        for r in rules {
            if r.lhs.divides(&w) {
                match &r.rhs {
                    Element::Infinity => return Element::Infinity,
                    Element::Finite(rhs) => {
                        w = w.minus(&r.lhs).expect("divides").plus(rhs);
                        continue 'outer;
                    }
                }
            }
        }
        return Element::Finite(w);
    }
}

/// Completes a presentation under the fixed graded reverse-lexicographic
/// order.
pub fn complete(p: &Presentation, budget: usize) -> Result<RewriteSystem> {
    complete_with_order(p, TermOrder::graded_reverse_lex(), budget)
}

pub fn complete_with_order(
    p: &Presentation,
    order: TermOrder,
    budget: usize,
) -> Result<RewriteSystem> {
    let eqs = p
        .congruences()
        .iter()
        .map(|(l, r)| (Element::Finite(l.clone()), Element::Finite(r.clone())))
        .chain(
            p.infinity_relations()
                .iter()
                .map(|w| (Element::Finite(w.clone()), Element::Infinity)),
        )
        .collect();
    Completion::fresh(p.rank(), order, eqs, budget).run()
}

struct Completion {
    len: usize,
    order: TermOrder,
    rules: Vec<RewriteRule>,
    queue: BinaryHeap<Reverse<(u64, u64)>>,
    pending: Vec<Option<(Element, Element)>>,
    seq: u64,
    processed: usize,
    budget: usize,
}

impl Completion {
    fn fresh(len: usize, order: TermOrder, eqs: Vec<(Element, Element)>, budget: usize) -> Self {
        let mut c = Completion {
            len,
            order,
            rules: Vec::new(),
            queue: BinaryHeap::new(),
            pending: Vec::new(),
            seq: 0,
            processed: 0,
            budget,
        };
        for (a, b) in eqs {
            c.push(a, b);
        }
        c
    }

    fn resume(rs: &RewriteSystem, eqs: Vec<(Element, Element)>, budget: usize) -> Self {
        let mut c = Completion::fresh(rs.len, rs.order.clone(), eqs, budget);
        c.rules = rs.rules.clone();
        c
    }

    fn sugar(&self, e: &Element) -> u64 {
        match e {
            Element::Finite(w) => self.order.degree(w),
            Element::Infinity => 0,
        }
    }

    fn push(&mut self, a: Element, b: Element) {
        let key = self.sugar(&a).max(self.sugar(&b));
        let idx = self.pending.len();
        self.pending.push(Some((a, b)));
        self.queue.push(Reverse((key, self.seq)));
        self.seq += 1;
        debug_assert_eq!(self.seq as usize, idx + 1);
    }

    fn reduce(&self, e: Element) -> Element {
        match e {
            Element::Finite(w) => reduce_with(&self.rules, w),
            Element::Infinity => Element::Infinity,
        }
    }

    fn run(mut self) -> Result<RewriteSystem> {
        while let Some(Reverse((_, seq))) = self.queue.pop() {
            let (a, b) = self.pending[seq as usize].take().expect("queued once");
            self.processed += 1;
            if self.processed > self.budget {
                return Err(Error::CompletionBudget {
                    budget: self.budget,
                    left: a.to_string(),
                    right: b.to_string(),
                });
            }
            let (a, b) = (self.reduce(a), self.reduce(b));
            if a == b {
                continue;
            }
            let rule = match (a, b) {
                (Element::Finite(u), Element::Infinity) | (Element::Infinity, Element::Finite(u)) => {
                    RewriteRule {
                        lhs: u,
                        rhs: Element::Infinity,
                    }
                }
                (Element::Finite(u), Element::Finite(v)) => match self.order.cmp(&u, &v) {
                    Ordering::Greater => RewriteRule {
                        lhs: u,
                        rhs: Element::Finite(v),
                    },
                    Ordering::Less => RewriteRule {
                        lhs: v,
                        rhs: Element::Finite(u),
                    },
                    Ordering::Equal => unreachable!("distinct words compare unequal"),
                },
                (Element::Infinity, Element::Infinity) => unreachable!(),
            };
            if rule.lhs.is_zero() {
                return Ok(self.finish(true));
            }
            self.add_rule(rule);
        }
        Ok(self.finish(false))
    }

    fn add_rule(&mut self, rule: RewriteRule) {
        let mut kept = Vec::with_capacity(self.rules.len() + 1);
        let old = std::mem::take(&mut self.rules);
        let mut requeue = Vec::new();
        for r in old {
            if rule.lhs.divides(&r.lhs) {
                requeue.push((Element::Finite(r.lhs), r.rhs));
            } else {
                kept.push(r);
            }
        }
        self.rules = kept;
        for (a, b) in requeue {
            self.push(a, b);
        }
        let mut pairs = Vec::new();
        for r in &self.rules {
            if !rule.lhs.shares_support(&r.lhs) {
                continue;
            }
            if rule.rhs.is_infinity() && r.rhs.is_infinity() {
                continue;
            }
            let top = rule.lhs.join(&r.lhs);
            let s1 = rule.rhs.shifted(&top.minus(&rule.lhs).expect("join"));
            let s2 = r.rhs.shifted(&top.minus(&r.lhs).expect("join"));
            pairs.push((s1, s2));
        }
        for (a, b) in pairs {
            self.push(a, b);
        }
        self.rules.push(rule);
    }

    fn finish(self, collapsed: bool) -> RewriteSystem {
        let order = self.order;
        let mut rules = if collapsed { Vec::new() } else { self.rules };
        let snapshot = rules.clone();
        for r in &mut rules {
            if let Element::Finite(w) = &r.rhs {
                r.rhs = reduce_with(&snapshot, w.clone());
            }
        }
        rules.sort_by(|a, b| order.cmp(&a.lhs, &b.lhs));
        RewriteSystem {
            len: self.len,
            rules,
            order,
            collapsed,
            pairs_processed: self.processed,
            budget: self.budget,
        }
    }
}
