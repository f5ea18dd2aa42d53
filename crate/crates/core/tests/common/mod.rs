//! Independent reference computations shared by the integration tests.
//!
//! Nothing here uses the rewriting engine: residue classes are found by a
//! union-find closure of the defining relations over all words up to a
//! degree bound.

#![allow(dead_code)]

use std::collections::HashMap;

use binoid_hk::{Presentation, SimplicialComplex};
use rand::rngs::StdRng;
use rand::Rng;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn all_words(weights: &[u64], bound: u64) -> Vec<Vec<u32>> {
    fn rec(i: usize, weights: &[u64], left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            out.push(cur.clone());
            return;
        }
        let mut e = 0;
        loop {
            cur.push(e);
            rec(i + 1, weights, left - e as u64 * weights[i], cur, out);
            cur.pop();
            if (e as u64 + 1) * weights[i] > left {
                break;
            }
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(0, weights, bound, &mut Vec::new(), &mut out);
    out
}

fn wdeg(w: &[u32], weights: &[u64]) -> u64 {
    w.iter().zip(weights).map(|(&e, &k)| e as u64 * k).sum()
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Congruence classes of all words of weighted degree at most `bound`
/// under the relations of `p` plus the extra `∞`-relations; `None` marks
/// the class of `∞`. Congruences must be homogeneous for `weights`, which
/// makes the truncated closure exact.
pub fn brute_classes(
    p: &Presentation,
    weights: &[u64],
    bound: u64,
    extra_infinity: &[Vec<u32>],
) -> Vec<(Vec<u32>, Option<usize>)> {
    for (l, r) in p.congruences() {
        assert_eq!(wdeg(l, weights), wdeg(r, weights), "congruence is not homogeneous");
    }
    let words = all_words(weights, bound);
    let index: HashMap<Vec<u32>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let inf = words.len();
    let mut uf = UnionFind::new(words.len() + 1);
    let mut infinity: Vec<Vec<u32>> = p.infinity_relations().iter().map(|w| w.0.clone()).collect();
    infinity.extend(extra_infinity.iter().cloned());
    for c in &words {
        for (l, r) in p.congruences() {
            if let (Some(&x), Some(&y)) = (index.get(&add(c, l)), index.get(&add(c, r))) {
                uf.union(x, y);
            }
        }
        for m in &infinity {
            if let Some(&x) = index.get(&add(c, m)) {
                uf.union(x, inf);
            }
        }
    }
    let root_inf = uf.find(inf);
    words
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            let r = uf.find(i);
            (w, if r == root_inf { None } else { Some(r) })
        })
        .collect()
}

/// `#N / ([q]N_+ ∪ extra)` for a positively graded presentation without
/// units. Every generator is nilpotent modulo `[q]N_+`, so all non-`∞`
/// classes live below weighted degree `Σ wᵢ(q − 1)`.
pub fn brute_residue_count(p: &Presentation, weights: &[u64], q: u32, extra_infinity: &[Vec<u32>]) -> u128 {
    let n = p.rank();
    let bound: u64 = weights.iter().map(|w| w * (q as u64 - 1)).sum();
    let mut infinity = extra_infinity.to_vec();
    for i in 0..n {
        let mut w = vec![0; n];
        w[i] = q;
        infinity.push(w);
    }
    let classes = brute_classes(p, weights, bound, &infinity);
    let roots: std::collections::HashSet<usize> = classes.iter().filter_map(|c| c.1).collect();
    roots.len() as u128
}

/// `hkf` of a Stanley-Reisner binoid: exponent vectors with entries below
/// `q` whose support is a face.
pub fn brute_sr_count(c: &SimplicialComplex, q: u32) -> u128 {
    let n = c.vertices().len();
    let mut count = 0u128;
    let mut v = vec![0u32; n];
    loop {
        let support: Vec<usize> = (0..n).filter(|&i| v[i] > 0).collect();
        if c.is_face(&support) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            v[i] += 1;
            if v[i] < q {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// Small semipositive presentation sources in the DSL, with at most three
/// generators.
pub fn random_spec(rng: &mut StdRng) -> String {
    match rng.gen_range(0..6) {
        0 => format!("free {}", rng.gen_range(1..=3)),
        1 => format!("group {}", rng.gen_range(2..=4)),
        2 => {
            let (a, b) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            format!("binoid x,y | {a}x = {b}y")
        }
        3 => {
            let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            format!("binoid x,y | {a}x + {b}y = inf")
        }
        4 => {
            let facets = [
                "sr a,b,c ; facet a,b ; facet b,c",
                "sr a,b,c ; facet a,b ; facet c",
                "sr a,b,c ; facet a,b ; facet a,c ; facet b,c",
                "sr a,b ; facet a ; facet b",
            ];
            facets[rng.gen_range(0..facets.len())].to_string()
        }
        _ => {
            let a = rng.gen_range(2..=3);
            format!("binoid x,y,z | {a}x = {a}y")
        }
    }
}

/// Homogeneous presentations with a positive grading and no units, for
/// comparison with the brute-force counter.
pub fn graded_cases() -> Vec<(&'static str, Vec<u64>)> {
    vec![
        ("free 2", vec![1, 1]),
        ("binoid x,y | 2x = 2y", vec![1, 1]),
        ("binoid x,y | 3x = 2y", vec![2, 3]),
        ("binoid x,y,z | x + y = 2z", vec![1, 1, 1]),
        ("binoid x,y,z | 2x = y + z; x + y = inf", vec![1, 1, 1]),
        ("binoid X,Y,Z | 4X + 12Y = 16Z", vec![1, 1, 1]),
        ("binoid a,b,c | a + c = inf", vec![1, 1, 1]),
        ("binoid x,y,z | 2x = 3y; x + z = inf", vec![3, 2, 1]),
        ("affine (2;1) (3;0) mod 2", vec![2, 3]),
    ]
}
