use num_integer::Integer;
use num_traits::Zero;

use super::{hermite_normal_form, smith_normal_form, IntMatrix};
use crate::arith::Int;
use crate::error::{Error, Result};

/// All integer solutions of `A·x = b`: `particular + span(kernel_basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DioSolution {
    pub particular: Vec<Int>,
    /// A lattice basis of `{x ∈ ℤⁿ : A·x = 0}`.
    pub kernel_basis: Vec<Vec<Int>>,
}

/// Solve `A·x = b` over the integers through the Smith form `P·A·Q = D`:
/// the system becomes `D·y = P·b` with `x = Q·y`. Returns `None` when no
/// integer solution exists.
pub fn solve_diophantine(a: &IntMatrix, b: &[Int]) -> Result<Option<DioSolution>> {
    if b.len() != a.rows() {
        return Err(Error::usage(format!("right-hand side has length {}, matrix has {} rows", b.len(), a.rows())));
    }
    let snf = smith_normal_form(a);
    let pb = snf.p.mul_vec(b)?;
    let rank = snf.rank();

    let mut y = vec![Int::zero(); a.cols()];
    for (i, rhs) in pb.iter().enumerate() {
        if i < rank {
            let (q, r) = rhs.div_rem(&snf.d[(i, i)]);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
        } else if !rhs.is_zero() {
            return Ok(None);
        }
    }
    let particular = snf.q.mul_vec(&y)?;
    let kernel_basis = (rank..a.cols()).map(|j| snf.q.column(j)).collect();
    Ok(Some(DioSolution { particular, kernel_basis }))
}

impl DioSolution {
    /// A short solution: the kernel basis is size-reduced first, then the
    /// particular solution is reduced against it. Both passes only accept
    /// strictly shorter vectors, so they terminate.
    pub fn shortened(&self) -> DioSolution {
        let mut basis: Vec<Vec<Int>> = self.kernel_basis.clone();
        loop {
            let mut changed = false;
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    if i == j {
                        continue;
                    }
                    let bj = basis[j].clone();
                    changed |= reduce_against(&mut basis[i], &bj).is_some();
                }
            }
            if !changed {
                break;
            }
        }
        basis.retain(|b| b.iter().any(|x| !x.is_zero()));
        let mut x = self.particular.clone();
        loop {
            let mut changed = false;
            for b in &basis {
                changed |= reduce_against(&mut x, b).is_some();
            }
            if !changed {
                break;
            }
        }
        DioSolution { particular: x, kernel_basis: basis }
    }
}

/// Subtract the nearest integer multiple of `b` from `v` when that makes
/// `v` strictly shorter. Returns the multiple used.
fn reduce_against(v: &mut [Int], b: &[Int]) -> Option<Int> {
    let bb: Int = b.iter().map(|x| x * x).sum();
    if bb.is_zero() {
        return None;
    }
    let dot: Int = v.iter().zip(b).map(|(x, y)| x * y).sum();
    let two = Int::from(2);
    let m = (&two * &dot + &bb).div_floor(&(&two * &bb));
    // |v - m b|^2 = |v|^2 - 2 m dot + m^2 bb
    if m.is_zero() || &m * &m * &bb >= &two * &m * &dot {
        return None;
    }
    for (x, y) in v.iter_mut().zip(b) {
        *x -= &m * y;
    }
    Some(m)
}

/// Canonical coset representative of a vector modulo a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeReduction {
    pub representative: Vec<Int>,
    pub in_lattice: bool,
}

/// Reduce `v` against the Hermite basis of the lattice spanned by `gens`:
/// each pivot coordinate is brought into `[0, pivot)`. Vectors in the same
/// coset get the same representative.
pub fn lattice_reduce(v: &[Int], gens: &[Vec<Int>]) -> Result<LatticeReduction> {
    let mut rep = v.to_vec();
    if !gens.is_empty() {
        let hnf = hermite_normal_form(&IntMatrix::from_columns(v.len(), gens)?);
        for (k, &r) in hnf.pivots.iter().enumerate() {
            let q = rep[r].div_floor(&hnf.h[(r, k)]);
            if q.is_zero() {
                continue;
            }
            for (i, x) in rep.iter_mut().enumerate().skip(r) {
                *x -= &q * &hnf.h[(i, k)];
            }
        }
    }
    let in_lattice = rep.iter().all(Zero::is_zero);
    Ok(LatticeReduction { representative: rep, in_lattice })
}
