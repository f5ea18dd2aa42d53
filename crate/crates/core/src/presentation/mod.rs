//! Binoid presentations and the constructions that build them.
//!
//! A [`Presentation`] lists named generators, congruences `u = v` between
//! words and words declared equal to `∞`. Words are exponent vectors, so
//! commutativity is part of the data model.

mod parse;
mod word;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{word_mismatch, Error, Result};

pub use parse::parse_presentation;
pub use word::{Word, WordDisplay};

/// A declared finite cyclic unit factor: `order · generator = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitFactor {
    pub generator: usize,
    pub order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    congruences: Vec<(Word, Word)>,
    infinity_relations: Vec<Word>,
    unit_factors: Vec<UnitFactor>,
}

impl Presentation {
    /// Builds a presentation after checking its invariants.
    ///
    /// Congruences of the form `k·g = 0` with `k ≥ 2` are recorded as unit
    /// factors.
    pub fn new(
        generators: Vec<String>,
        congruences: Vec<(Word, Word)>,
        infinity_relations: Vec<Word>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        let n = generators.len();
        for (l, r) in &congruences {
            for w in [l, r] {
                if w.len() != n {
                    return Err(word_mismatch(n, w));
                }
            }
        }
        for w in &infinity_relations {
            if w.len() != n {
                return Err(word_mismatch(n, w));
            }
        }
        let unit_factors = congruences
            .iter()
            .filter_map(|(l, r)| {
                let (w, z) = if r.is_zero() { (l, r) } else { (r, l) };
                if !z.is_zero() {
                    return None;
                }
                let mut support = w.support();
                let g = support.next()?;
                if support.next().is_some() || w[g] < 2 {
                    return None;
                }
                Some(UnitFactor {
                    generator: g,
                    order: w[g],
                })
            })
            .collect();
        Ok(Presentation {
            generators,
            congruences,
            infinity_relations,
            unit_factors,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn congruences(&self) -> &[(Word, Word)] {
        &self.congruences
    }

    pub fn infinity_relations(&self) -> &[Word] {
        &self.infinity_relations
    }

    pub fn unit_factors(&self) -> &[UnitFactor] {
        &self.unit_factors
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a single word such as `2x + y` over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse::parse_word(text, &self.generators)
    }

    /// Builds a word from `(generator, coefficient)` pairs.
    pub fn word(&self, terms: &[(&str, u32)]) -> Result<Word> {
        let mut w = Word::zero(self.rank());
        for &(name, k) in terms {
            let i = self
                .generator_index(name)
                .ok_or_else(|| Error::UndeclaredGenerator(name.to_string()))?;
            w[i] += k;
        }
        Ok(w)
    }

    /// Reorders generators: generator `perm[i]` of `self` becomes generator `i`.
    pub fn permute(&self, perm: &[usize]) -> Result<Presentation> {
        if perm.len() != self.rank() {
            return Err(Error::InvalidArgument("permutation length".into()));
        }
        let apply = |w: &Word| Word(perm.iter().map(|&j| w[j]).collect());
        Presentation::new(
            perm.iter().map(|&j| self.generators[j].clone()).collect(),
            self.congruences
                .iter()
                .map(|(l, r)| (apply(l), apply(r)))
                .collect(),
            self.infinity_relations.iter().map(apply).collect(),
        )
    }

    /// Splits the generators into classes linked by relations.
    ///
    /// Each class together with the relations supported on it presents one
    /// smash factor; a presentation with several classes is their smash
    /// product. Returns the generator indices of every class in order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let supports = self
            .congruences
            .iter()
            .map(|(l, r)| l.plus(r))
            .chain(self.infinity_relations.iter().cloned());
        for w in supports {
            let mut it = w.support();
            if let Some(first) = it.next() {
                for other in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut root_of_class: Vec<usize> = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            match root_of_class.iter().position(|&x| x == r) {
                Some(c) => classes[c].push(i),
                None => {
                    root_of_class.push(r);
                    classes.push(vec![i]);
                }
            }
        }
        classes
    }

    /// The sub-presentation on the given generators with every relation
    /// supported inside them. Relations with empty support (such as `0 = ∞`)
    /// are kept.
    pub fn restrict(&self, indices: &[usize]) -> Presentation {
        let inside = |w: &Word| w.support().all(|i| indices.contains(&i));
        let project = |w: &Word| Word(indices.iter().map(|&i| w[i]).collect());
        Presentation::new(
            indices.iter().map(|&i| self.generators[i].clone()).collect(),
            self.congruences
                .iter()
                .filter(|(l, r)| inside(l) && inside(r))
                .map(|(l, r)| (project(l), project(r)))
                .collect(),
            self.infinity_relations
                .iter()
                .filter(|w| inside(w))
                .map(project)
                .collect(),
        )
        .expect("restriction of a valid presentation is valid")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty()
            && self.congruences.is_empty()
            && self.infinity_relations.is_empty()
        {
            return write!(f, "free 0");
        }
        write!(f, "binoid {}", self.generators.join(","))?;
        let names = &self.generators;
        let rels: Vec<String> = self
            .congruences
            .iter()
            .map(|(l, r)| format!("{} = {}", l.display(names), r.display(names)))
            .chain(
                self.infinity_relations
                    .iter()
                    .map(|w| format!("{} = inf", w.display(names))),
            )
            .collect();
        if !rels.is_empty() {
            write!(f, " | {}", rels.join("; "))?;
        }
        Ok(())
    }
}

fn default_names(n: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if n <= SHORT.len() {
        SHORT[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// The free binoid `(ℕⁿ)^∞`. `n = 0` gives the trivial binoid `{0, ∞}`.
pub fn free_binoid(n: usize) -> Presentation {
    Presentation::new(default_names(n), Vec::new(), Vec::new()).expect("free presentation")
}

/// The group binoid `(ℤ/k)^∞` on one generator `t` with `k·t = 0`.
pub fn group_binoid(k: u32) -> Result<Presentation> {
    if k < 2 {
        return Err(Error::GroupOrder(k as u64));
    }
    Presentation::new(
        vec!["t".to_string()],
        vec![(Word(vec![k]), Word(vec![0]))],
        Vec::new(),
    )
}

/// Smash product over the trivial binoid: disjoint union of generators and
/// relations. Generator names of `b` that clash with `a` get primes appended.
pub fn smash(a: &Presentation, b: &Presentation) -> Presentation {
    let mut names = a.generators.clone();
    for g in &b.generators {
        let mut name = g.clone();
        while names.contains(&name) || b.generators.iter().any(|h| h == &name && h != g) {
            name.push('\'');
        }
        names.push(name);
    }
    let (na, nb) = (a.rank(), b.rank());
    let left = |w: &Word| {
        let mut v = w.0.clone();
        v.resize(na + nb, 0);
        Word(v)
    };
    let right = |w: &Word| {
        let mut v = vec![0; na];
        v.extend_from_slice(w);
        Word(v)
    };
    let congruences = a
        .congruences
        .iter()
        .map(|(l, r)| (left(l), left(r)))
        .chain(b.congruences.iter().map(|(l, r)| (right(l), right(r))))
        .collect();
    let infinity = a
        .infinity_relations
        .iter()
        .map(left)
        .chain(b.infinity_relations.iter().map(right))
        .collect();
    Presentation::new(names, congruences, infinity).expect("smash of valid presentations")
}

/// The residue class binoid `p / ⟨gens⟩`, sending the ideal to `∞`.
pub fn quotient_by_ideal(p: &Presentation, gens: &[Word]) -> Result<Presentation> {
    let mut infinity = p.infinity_relations.clone();
    for g in gens {
        if g.len() != p.rank() {
            return Err(word_mismatch(p.rank(), g));
        }
        infinity.push(g.clone());
    }
    Presentation::new(p.generators.clone(), p.congruences.clone(), infinity)
}

/// A finite simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Facets are vertex index lists; they are sorted and deduplicated.
    pub fn new(vertices: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateGenerator(v.clone()));
            }
        }
        let facets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|f| {
                let set: BTreeSet<usize> = f.into_iter().collect();
                set.into_iter().collect()
            })
            .collect();
        for f in &facets {
            if let Some(&v) = f.iter().find(|&&v| v >= vertices.len()) {
                return Err(Error::InvalidComplex(format!("vertex index {v} out of range")));
            }
        }
        for (i, f) in facets.iter().enumerate() {
            for (j, g) in facets.iter().enumerate() {
                if i != j && f.iter().all(|v| g.contains(v)) {
                    return Err(Error::InvalidComplex(format!(
                        "facet {i} is contained in facet {j}"
                    )));
                }
            }
        }
        for (v, name) in vertices.iter().enumerate() {
            if !facets.iter().any(|f| f.contains(&v)) {
                return Err(Error::InvalidComplex(format!(
                    "vertex `{name}` lies in no facet"
                )));
            }
        }
        Ok(SimplicialComplex { vertices, facets })
    }

    pub fn from_names(vertices: &[&str], facets: &[&[&str]]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let facets = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|name| {
                        vertices
                            .iter()
                            .position(|v| v == name)
                            .ok_or_else(|| Error::UndeclaredGenerator(name.to_string()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(vertices, facets)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_face(&self, set: &[usize]) -> bool {
        self.facets
            .iter()
            .any(|f| set.iter().all(|v| f.contains(v)))
    }

    /// Dimension as a complex: largest facet size minus one.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// All minimal nonfaces, each as a sorted vertex list.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let max_size = self.facets.iter().map(Vec::len).max().unwrap_or(0) + 1;
        let mut out = Vec::new();
        for k in 1..=max_size.min(n) {
            for_each_combination(n, k, &mut |set| {
                if self.is_face(set) {
                    return;
                }
                let minimal = (0..set.len()).all(|skip| {
                    let smaller: Vec<usize> = set
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    self.is_face(&smaller)
                });
                if minimal {
                    out.push(set.to_vec());
                }
            });
        }
        out
    }
}

fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// The Stanley-Reisner binoid: the free binoid on the vertices modulo one
/// squarefree `∞`-relation per minimal nonface.
pub fn stanley_reisner(c: &SimplicialComplex) -> Presentation {
    let n = c.vertices.len();
    let infinity = c
        .minimal_nonfaces()
        .into_iter()
        .map(|set| {
            let mut w = Word::zero(n);
            for v in set {
                w[v] = 1;
            }
            w
        })
        .collect();
    Presentation::new(c.vertices.clone(), Vec::new(), infinity).expect("valid complex")
}
