//! Difference groups, torsion and affine binoids given by lattice points.

use serde::Serialize;

use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Word};
use crate::rewrite::{complete_with_order, TermOrder, DEFAULT_COMPLETION_BUDGET};

/// The difference group `ℤ^rank ⊕ ⨁ ℤ/dᵢ` of an integral binoid together
/// with the images of its generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeData {
    pub rank: usize,
    /// Invariant factors `dᵢ ≥ 2`, each dividing the next.
    pub torsion_invariants: Vec<u64>,
    /// Free coordinates of each generator.
    pub free: Vec<Vec<i64>>,
    /// Torsion coordinates of each generator, reduced modulo the invariants.
    pub torsion: Vec<Vec<i64>>,
    pub relation_matrix: Vec<Vec<i64>>,
}

impl LatticeData {
    pub fn torsion_order(&self) -> u64 {
        self.torsion_invariants.iter().product()
    }

    pub fn embed(&self, w: &Word) -> LatticePoint {
        let mut free = vec![0i64; self.rank];
        let mut torsion = vec![0i64; self.torsion_invariants.len()];
        for (j, &e) in w.iter().enumerate() {
            for (x, y) in free.iter_mut().zip(&self.free[j]) {
                *x += e as i64 * y;
            }
            for (x, y) in torsion.iter_mut().zip(&self.torsion[j]) {
                *x += e as i64 * y;
            }
        }
        for (x, &d) in torsion.iter_mut().zip(&self.torsion_invariants) {
            *x = x.rem_euclid(d as i64);
        }
        LatticePoint { free, torsion }
    }

    /// Free projections of the generators: the generators of the
    /// torsion-freefication.
    pub fn torsion_free_generators(&self) -> &[Vec<i64>] {
        &self.free
    }
}

/// A point of `ℤ^m ⊕ ⨁ ℤ/kᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl LatticePoint {
    pub fn free(free: Vec<i64>) -> Self {
        LatticePoint {
            free,
            torsion: Vec::new(),
        }
    }
}

/// Difference group of a presentation without `∞`-relations, computed from
/// the Smith normal form of the relation matrix.
pub fn difference_group(p: &Presentation) -> Result<LatticeData> {
    if !p.infinity_relations().is_empty() {
        return Err(Error::UnmetHypothesis(
            "difference groups need a presentation without ∞-relations".into(),
        ));
    }
    let n = p.rank();
    let relation_matrix: Vec<Vec<i64>> = p
        .congruences()
        .iter()
        .map(|(l, r)| l.iter().zip(r.iter()).map(|(&a, &b)| a as i64 - b as i64).collect())
        .collect();
    let wide: Vec<Vec<i128>> = relation_matrix
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let s = smith_normal_form(&wide, n);
    let r = s.rank();
    let torsion_cols: Vec<usize> = (0..r).filter(|&i| s.diagonal[i] >= 2).collect();
    let torsion_invariants = torsion_cols.iter().map(|&i| s.diagonal[i] as u64).collect();
    let free = (0..n)
        .map(|j| (r..n).map(|c| s.v[j][c] as i64).collect())
        .collect();
    let torsion = (0..n)
        .map(|j| {
            torsion_cols
                .iter()
                .map(|&c| s.v[j][c].rem_euclid(s.diagonal[c]) as i64)
                .collect()
        })
        .collect();
    Ok(LatticeData {
        rank: n - r,
        torsion_invariants,
        free,
        torsion,
        relation_matrix,
    })
}

/// An integral linear form positive on every vector, found by the
/// perceptron iteration; `None` when the vectors do not span a pointed cone
/// or include zero.
pub fn positive_form(vectors: &[Vec<i64>]) -> Option<Vec<i64>> {
    let dim = vectors.first()?.len();
    let mut h = vec![0i64; dim];
    for v in vectors {
        for (x, y) in h.iter_mut().zip(v) {
            *x += y;
        }
    }
    for _ in 0..100_000 {
        let bad = vectors.iter().find(|v| dot(&h, v) <= 0);
        match bad {
            None => return Some(h),
            Some(v) => {
                for (x, y) in h.iter_mut().zip(v) {
                    *x += y;
                }
            }
        }
    }
    None
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=n).map(|i| format!("g{i}")).collect()
    }
}

/// The binoid generated by lattice points of `ℤ^m ⊕ ⨁ ℤ/kᵢ` (with `∞`
/// adjoined), presented by the saturated lattice ideal of its generator map.
///
/// Every point needs a nonzero free part and the free parts must span a
/// pointed cone, so that a positive grading exists.
pub fn affine_binoid(points: &[LatticePoint], orders: &[u64]) -> Result<Presentation> {
    affine_binoid_named(points, orders, default_names(points.len()))
}

pub fn affine_binoid_named(
    points: &[LatticePoint],
    orders: &[u64],
    names: Vec<String>,
) -> Result<Presentation> {
    let n = points.len();
    if n == 0 {
        return Presentation::new(names, Vec::new(), Vec::new());
    }
    let m = points[0].free.len();
    let l = orders.len();
    for p in points {
        if p.free.len() != m || p.torsion.len() != l {
            return Err(Error::InvalidArgument(
                "lattice points have inconsistent coordinate counts".into(),
            ));
        }
    }
    if orders.contains(&0) {
        return Err(Error::InvalidArgument("torsion orders must be positive".into()));
    }
    let frees: Vec<Vec<i64>> = points.iter().map(|p| p.free.clone()).collect();
    if frees.iter().any(|f| f.iter().all(|&x| x == 0)) {
        return Err(Error::InvalidArgument(
            "every lattice point needs a nonzero free part".into(),
        ));
    }
    let h = positive_form(&frees).ok_or(Error::NotPointed)?;
    let weights: Vec<u64> = frees.iter().map(|f| dot(&h, f) as u64).collect();

    // kernel of x ↦ x·[F | T ; 0 | diag(k)]
    let mut a: Vec<Vec<i128>> = points
        .iter()
        .map(|p| p.free.iter().chain(&p.torsion).map(|&x| x as i128).collect())
        .collect();
    for (i, &k) in orders.iter().enumerate() {
        let mut row = vec![0i128; m + l];
        row[m + i] = k as i128;
        a.push(row);
    }
    let s = smith_normal_form(&a, m + l);
    let kernel: Vec<Vec<i128>> = s.u[s.rank()..]
        .iter()
        .map(|row| row[..n].to_vec())
        .filter(|row| row.iter().any(|&x| x != 0))
        .collect();
    let mut eqs: Vec<(Word, Word)> = kernel.iter().map(|u| split(u)).collect();
    for i in 0..n {
        eqs = saturate_at(n, &eqs, &weights, i)?;
    }
    eqs.sort();
    eqs.dedup();
    Presentation::new(names, eqs, Vec::new())
}

fn split(u: &[i128]) -> (Word, Word) {
    let pos = u.iter().map(|&x| x.max(0) as u32).collect();
    let neg = u.iter().map(|&x| (-x).max(0) as u32).collect();
    (Word(pos), Word(neg))
}

// Completes with generator `i` smallest, so that a Gröbner basis divided by
// the largest common power of `i` generates the saturation at `i`.
fn saturate_at(n: usize, eqs: &[(Word, Word)], weights: &[u64], i: usize) -> Result<Vec<(Word, Word)>> {
    let perm: Vec<usize> = (0..n).filter(|&j| j != i).chain([i]).collect();
    let forward = |w: &Word| Word(perm.iter().map(|&j| w[j]).collect());
    let back = |w: &Word| {
        let mut out = vec![0u32; n];
        for (k, &j) in perm.iter().enumerate() {
            out[j] = w[k];
        }
        Word(out)
    };
    let congruences = eqs.iter().map(|(a, b)| (forward(a), forward(b))).collect();
    let p = Presentation::new(default_names(n), congruences, Vec::new())?;
    let order = TermOrder::weighted(perm.iter().map(|&j| weights[j]).collect());
    let rs = complete_with_order(&p, order, DEFAULT_COMPLETION_BUDGET)?;
    let mut out = Vec::new();
    for (l, r) in rs.word_rules() {
        let (mut l, mut r) = (back(l), back(r));
        let c = l[i].min(r[i]);
        l[i] -= c;
        r[i] -= c;
        if l != r {
            out.push((l, r));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;
    use crate::rewrite::complete;

    #[test]
    fn cyclic_torsion() {
        let p = parse_presentation("binoid x,y | 2x = 2y").unwrap();
        let lat = difference_group(&p).unwrap();
        assert_eq!(lat.rank, 1);
        assert_eq!(lat.torsion_invariants, vec![2]);
        assert_eq!(lat.torsion_order(), 2);
        // x and y differ by the torsion element
        let ex = lat.embed(&Word::from_slice(&[1, 0]));
        let ey = lat.embed(&Word::from_slice(&[0, 1]));
        assert_eq!(ex.free.iter().map(|x| x.abs()).collect::<Vec<_>>(), ey.free.iter().map(|x| x.abs()).collect::<Vec<_>>());
        assert_ne!(ex.torsion, ey.torsion);
    }

    #[test]
    fn free_has_no_torsion() {
        let p = parse_presentation("free 3").unwrap();
        let lat = difference_group(&p).unwrap();
        assert_eq!((lat.rank, lat.torsion_order()), (3, 1));
    }

    #[test]
    fn affine_points_give_the_expected_relation() {
        let pts = [
            LatticePoint { free: vec![16, 0], torsion: vec![0] },
            LatticePoint { free: vec![0, 16], torsion: vec![0] },
            LatticePoint { free: vec![4, 12], torsion: vec![1] },
        ];
        let p = affine_binoid(&pts, &[16]).unwrap();
        assert_eq!(p.congruences().len(), 1);
        let (l, r) = &p.congruences()[0];
        let mut pair = [l.0.clone(), r.0.clone()];
        pair.sort();
        assert_eq!(pair, [vec![0, 0, 16], vec![4, 12, 0]]);
    }

    #[test]
    fn saturation_recovers_the_numerical_semigroup() {
        // ⟨2, 3⟩ ⊂ ℕ: the lattice ideal is generated by 3a = 2b already
        let p = affine_binoid(&[LatticePoint::free(vec![2]), LatticePoint::free(vec![3])], &[]).unwrap();
        assert_eq!(p.congruences().len(), 1);
        // twisted cubic needs three binomials; a naive kernel basis has two
        let pts: Vec<LatticePoint> = [[3, 0], [2, 1], [1, 2], [0, 3]]
            .iter()
            .map(|v| LatticePoint::free(v.to_vec()))
            .collect();
        let p = affine_binoid(&pts, &[]).unwrap();
        let rs = complete(&p, 1000).unwrap();
        let x = |v: &[u32]| Word::from_slice(v);
        assert_eq!(rs.normal_form(&x(&[1, 0, 1, 0])), rs.normal_form(&x(&[0, 2, 0, 0])));
        assert_eq!(rs.normal_form(&x(&[0, 1, 0, 1])), rs.normal_form(&x(&[0, 0, 2, 0])));
        assert_eq!(rs.normal_form(&x(&[1, 0, 0, 1])), rs.normal_form(&x(&[0, 1, 1, 0])));
    }

    #[test]
    fn rejects_bad_points() {
        assert_eq!(
            affine_binoid(&[LatticePoint::free(vec![1]), LatticePoint::free(vec![-1])], &[]),
            Err(Error::NotPointed)
        );
        assert!(affine_binoid(&[LatticePoint::free(vec![0])], &[]).is_err());
    }

    #[test]
    fn positive_forms() {
        let h = positive_form(&[vec![1, 0], vec![1, 5], vec![3, -2]]).unwrap();
        assert!([[1, 0], [1, 5], [3, -2]].iter().all(|v| dot(&h, v) > 0));
        assert_eq!(positive_form(&[vec![1, 0], vec![-1, 0]]), None);
    }
}
