//! Smith normal form over the integers.

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, its nonzero
/// entries positive and each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    pub diagonal: Vec<i128>,
    pub rows: usize,
    pub cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

pub fn smith_normal_form(a: &[Vec<i128>], cols: usize) -> SmithForm {
    let m = a.len();
    let n = cols;
    let mut d: Vec<Vec<i128>> = a.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);
    let mut diagonal = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&d, t, n) else {
            break;
        };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d[i][t] != 0 {
                    let q = d[i][t].div_euclid(d[t][t]);
                    row_axpy(&mut d, i, t, -q);
                    row_axpy(&mut u, i, t, -q);
                    if d[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if d[t][j] != 0 {
                    let q = d[t][j].div_euclid(d[t][t]);
                    col_axpy(&mut d, j, t, -q);
                    col_axpy(&mut v, j, t, -q);
                    if d[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                // a nonzero remainder is smaller than the pivot
                let (pi, pj) = min_in_cross(&d, t, n);
                d.swap(t, pi);
                u.swap(t, pi);
                swap_cols(&mut d, t, pj);
                swap_cols(&mut v, t, pj);
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[i][j] % d[t][t] != 0));
            match bad {
                Some(i) => {
                    row_axpy(&mut d, t, i, 1);
                    row_axpy(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if d[t][t] < 0 {
            for x in d[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
        diagonal.push(d[t][t]);
    }
    SmithForm {
        u,
        v,
        diagonal,
        rows: m,
        cols: n,
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

fn min_entry(d: &[Vec<i128>], t: usize, n: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in d.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().take(n).skip(t) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < d[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(d: &[Vec<i128>], t: usize, n: usize) -> (usize, usize) {
    let mut best = (t, t);
    for (i, row) in d.iter().enumerate().skip(t) {
        if row[t] != 0 && (d[best.0][best.1] == 0 || row[t].abs() < d[best.0][best.1].abs()) {
            best = (i, t);
        }
    }
    for j in t..n {
        if d[t][j] != 0 && d[t][j].abs() < d[best.0][best.1].abs() {
            best = (t, j);
        }
    }
    best
}

fn swap_cols(d: &mut [Vec<i128>], a: usize, b: usize) {
    if a != b {
        for row in d.iter_mut() {
            row.swap(a, b);
        }
    }
}

// row[dst] += k * row[src]
fn row_axpy(d: &mut [Vec<i128>], dst: usize, src: usize, k: i128) {
    let src_row = d[src].clone();
    for (x, s) in d[dst].iter_mut().zip(src_row) {
        *x += k * s;
    }
}

fn col_axpy(d: &mut [Vec<i128>], dst: usize, src: usize, k: i128) {
    for row in d.iter_mut() {
        row[dst] += k * row[src];
    }
}

#[cfg(test)]
fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>], inner: usize, cols: usize) -> Vec<Vec<i128>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(a: &[Vec<i128>], cols: usize) -> SmithForm {
        let s = smith_normal_form(a, cols);
        let uav = mat_mul(&mat_mul(&s.u, a, a.len(), cols), &s.v, cols, cols);
        for (i, row) in uav.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let want = if i == j && i < s.rank() { s.diagonal[i] } else { 0 };
                assert_eq!(x, want, "entry ({i},{j}) of {uav:?}");
            }
        }
        for w in s.diagonal.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        assert!(s.diagonal.iter().all(|&x| x > 0));
        assert_eq!(det(&s.u).abs(), 1);
        assert_eq!(det(&s.v).abs(), 1);
        s
    }

    // fraction-free elimination
    fn det(m: &[Vec<i128>]) -> i128 {
        let n = m.len();
        let mut a = m.to_vec();
        let mut sign = 1;
        let mut prev = 1;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        if n == 0 { 1 } else { sign * a[n - 1][n - 1] }
    }

    #[test]
    fn known_forms() {
        let s = check(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        assert_eq!(s.diagonal, vec![2, 6, 12]);
        let s = check(&[vec![-4, -12, 16]], 3);
        assert_eq!(s.diagonal, vec![4]);
        let s = check(&[vec![0, 0], vec![0, 0]], 2);
        assert!(s.diagonal.is_empty());
        let s = check(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!(s.diagonal, vec![1, 6]);
    }

    proptest! {
        #[test]
        fn random_matrices(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-9i128..10, 16)) {
            let a: Vec<Vec<i128>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
            check(&a, cols);
        }
    }
}
