use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Column-style Hermite form `A·U = H`.
///
/// The nonzero columns of `H` come first and form an echelon basis of the
/// column lattice of `A`: column `k` has its first nonzero entry (positive)
/// at row `pivots[k]`, the pivot rows strictly increase, and every entry to
/// the left of a pivot lies in `[0, pivot)`. The form depends only on the
/// lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot row of each nonzero column of `h`.
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The lattice basis: the nonzero columns of `h`.
    pub fn basis(&self) -> Vec<Vec<crate::arith::Int>> {
        (0..self.rank()).map(|j| self.h.column(j)).collect()
    }
}

pub fn hermite_normal_form(a: &IntMatrix) -> Hnf {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut pivots = Vec::new();
    let mut k = 0;

    for r in 0..m {
        if k == n {
            break;
        }
        // gcd the row tail h[r][k..] into column k
        loop {
            let best = (k..n)
                .filter(|&j| !h[(r, j)].is_zero())
                .min_by(|&x, &y| h[(r, x)].abs().cmp(&h[(r, y)].abs()));
            let Some(j) = best else { break };
            h.swap_cols(k, j);
            u.swap_cols(k, j);
            let mut done = true;
            for j in k + 1..n {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = -(&h[(r, j)] / &h[(r, k)]);
                h.add_col_multiple(j, k, &q);
                u.add_col_multiple(j, k, &q);
                done &= h[(r, j)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, k)].is_zero() {
            continue;
        }
        if h[(r, k)].is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        let pivot = h[(r, k)].clone();
        for j in 0..k {
            let q = -h[(r, j)].div_floor(&pivot);
            h.add_col_multiple(j, k, &q);
            u.add_col_multiple(j, k, &q);
        }
        pivots.push(r);
        k += 1;
    }
    Hnf { h, u, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Int;
    use num_traits::One;

    fn check(a: &IntMatrix) -> Hnf {
        let hnf = hermite_normal_form(a);
        assert_eq!(a.mul(&hnf.u).unwrap(), hnf.h);
        assert!(hnf.u.det().unwrap().abs().is_one());
        for (k, &r) in hnf.pivots.iter().enumerate() {
            assert!(hnf.h[(r, k)].is_positive());
            for i in 0..r {
                assert!(hnf.h[(i, k)].is_zero());
            }
            for j in 0..k {
                assert!(!hnf.h[(r, j)].is_negative() && hnf.h[(r, j)] < hnf.h[(r, k)]);
            }
        }
        for j in hnf.rank()..a.cols() {
            assert!(hnf.h.column(j).iter().all(Zero::is_zero));
        }
        hnf
    }

    #[test]
    fn diagonal_is_fixed() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(check(&a).h, a);
    }

    #[test]
    fn dependent_column_vanishes() {
        let hnf = check(&IntMatrix::from_i64(&[&[2, 4], &[0, 0]]));
        assert_eq!(hnf.h.column(0), vec![Int::from(2), Int::zero()]);
        assert!(hnf.h.column(1).iter().all(Zero::is_zero));
    }

    #[test]
    fn same_lattice_same_form() {
        let a = IntMatrix::from_i64(&[&[1, 3, 0], &[2, 1, 5]]);
        // a with columns recombined unimodularly
        let b = IntMatrix::from_i64(&[&[4, 3, 1], &[3, 1, 7]]);
        assert_eq!(check(&a).h, check(&b).h);
    }
}
