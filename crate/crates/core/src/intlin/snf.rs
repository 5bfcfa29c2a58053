use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::arith::Int;

/// `P·A·Q = D` with `P`, `Q` unimodular and `D` diagonal, `d1 | d2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub d: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`, zeros included.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// The nonzero diagonal entries.
    pub fn elementary_divisors(&self) -> Vec<Int> {
        self.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut p = IntMatrix::identity(m);
    let mut q = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&d, t) else {
                return SnfResult { p, q, d };
            };
            d.swap_rows(t, pi);
            p.swap_rows(t, pi);
            d.swap_cols(t, pj);
            q.swap_cols(t, pj);

            let mut cleared = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let k = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row_multiple(i, t, &k);
                p.add_row_multiple(i, t, &k);
                cleared &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let k = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col_multiple(j, t, &k);
                q.add_col_multiple(j, t, &k);
                cleared &= d[(t, j)].is_zero();
            }
            if !cleared {
                continue;
            }

            // divisibility: fold an offending row into the pivot row and retry
            let pivot = d[(t, t)].clone();
            let offending = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&d[(i, j)] % &pivot).is_zero()));
            match offending {
                Some(i) => {
                    let one = Int::from(1);
                    d.add_row_multiple(t, i, &one);
                    p.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            p.negate_row(t);
        }
    }
    SnfResult { p, q, d }
}

fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        assert_eq!(s.p.mul(a).unwrap().mul(&s.q).unwrap(), s.d);
        assert!(s.p.det().unwrap().abs().is_one());
        assert!(s.q.det().unwrap().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let divs = s.elementary_divisors();
        assert!(divs.iter().all(|x| x.is_positive()));
        for w in divs.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        // zeros trail
        let diag = s.diagonal();
        assert!(diag[s.rank()..].iter().all(Zero::is_zero));
        s
    }

    #[test]
    fn move_matrix_example() {
        let a = IntMatrix::from_i64(&[
            &[0, 0, 0, 2, 2, -2, -1, 0],
            &[0, 2, 0, 0, -4, 0, 2, -2],
            &[2, -2, -4, 0, 0, 0, 0, 2],
            &[-1, 0, 2, -2, 0, 2, 0, 0],
        ]);
        let s = check(&a);
        assert_eq!(s.elementary_divisors(), vec![Int::from(1), Int::from(1), Int::from(2)]);
        assert!(s.d.row(3).iter().all(Zero::is_zero));
    }

    #[test]
    fn trivial_cases() {
        let s = check(&IntMatrix::zeros(3, 4));
        assert!(s.d.is_zero());
        let s = check(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        check(&IntMatrix::zeros(0, 0));
    }

    #[test]
    fn needs_divisibility_fix() {
        let s = check(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.elementary_divisors(), vec![Int::from(1), Int::from(6)]);
        let s = check(&IntMatrix::from_i64(&[&[4, 0, 0], &[0, 6, 0], &[0, 0, 10]]));
        assert_eq!(s.elementary_divisors(), vec![Int::from(2), Int::from(2), Int::from(60)]);
    }

    proptest::proptest! {
        #[test]
        fn invariants_hold(rows in 1usize..5, cols in 1usize..6, seed in proptest::collection::vec(-9i64..10, 30)) {
            let data: Vec<Vec<Int>> = (0..rows).map(|i| (0..cols).map(|j| Int::from(seed[i * cols + j])).collect()).collect();
            check(&IntMatrix::from_rows(data).unwrap());
        }
    }
}
