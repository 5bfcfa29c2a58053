//! Exact integer helpers: the two gcd conventions and residue classes.
//!
//! All values are [`Int`] (arbitrary precision), so products of several
//! tuple entries never wrap.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The integer type used throughout the crate.
pub type Int = BigInt;

/// A positive integer or the distinguished value `Infinite`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PositiveOrInfinite {
    Finite(Int),
    Infinite,
}

impl PositiveOrInfinite {
    pub fn is_infinite(&self) -> bool {
        matches!(self, PositiveOrInfinite::Infinite)
    }

    /// The value used as a modulus: `Infinite` means "no reduction", encoded as 0.
    pub fn as_modulus(&self) -> Int {
        match self {
            PositiveOrInfinite::Finite(g) => g.clone(),
            PositiveOrInfinite::Infinite => Int::zero(),
        }
    }
}

impl fmt::Display for PositiveOrInfinite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositiveOrInfinite::Finite(g) => write!(f, "{g}"),
            PositiveOrInfinite::Infinite => f.write_str("inf"),
        }
    }
}

/// A residue class `value mod modulus`.
///
/// Modulus 0 means the value lives in ℤ. For positive moduli the value is the
/// canonical representative in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: Int,
    modulus: Int,
}

impl Residue {
    pub fn value(&self) -> &Int {
        &self.value
    }

    pub fn modulus(&self) -> &Int {
        &self.modulus
    }

    /// gcd over all representatives of the class, i.e. `gcd(value, modulus)`;
    /// for modulus 0 this is `|value|`.
    pub fn content(&self) -> Int {
        self.value.gcd(&self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus.is_zero() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} mod {}", self.value, self.modulus)
        }
    }
}

/// Non-negative gcd of two integers; `gcd(0, 0) = 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// gcd of a slice under the convention that the all-zero input has gcd 0.
pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a Int>) -> Int {
    xs.into_iter().fold(Int::zero(), |acc, x| acc.gcd(x))
}

/// gcd*: `Infinite` when every entry is zero.
pub fn gcd_star(xs: &[Int]) -> Result<PositiveOrInfinite> {
    if xs.is_empty() {
        return Err(Error::usage("gcd* of an empty sequence"));
    }
    let g = gcd_all(xs);
    Ok(if g.is_zero() { PositiveOrInfinite::Infinite } else { PositiveOrInfinite::Finite(g) })
}

/// gcd_*: 0 when every entry is zero.
pub fn gcd_sub(xs: &[Int]) -> Result<Int> {
    if xs.is_empty() {
        return Err(Error::usage("gcd_* of an empty sequence"));
    }
    Ok(gcd_all(xs))
}

/// Reduce `v` modulo `m`. Only `|m|` matters; `m = 0` leaves `v` unchanged.
pub fn reduce_residue(v: &Int, m: &Int) -> Residue {
    let modulus = m.abs();
    let value = if modulus.is_zero() { v.clone() } else { v.mod_floor(&modulus) };
    Residue { value, modulus }
}

/// Bezout coefficients: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub fn bezout(a: &Int, b: &Int) -> (Int, Int, Int) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Int::one(), Int::zero());
    let (mut old_t, mut t) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Coefficients `x` with `Σ xs[i]*x[i] = gcd(xs)`.
pub fn bezout_all(xs: &[Int]) -> (Int, Vec<Int>) {
    let mut g = Int::zero();
    let mut coeffs: Vec<Int> = Vec::with_capacity(xs.len());
    for x in xs {
        let (ng, u, v) = bezout(&g, x);
        for c in coeffs.iter_mut() {
            *c *= &u;
        }
        coeffs.push(v);
        g = ng;
    }
    (g, coeffs)
}

/// `a ≡ 0 (mod m)`, with `m = 0` meaning `a = 0`.
pub fn divides(m: &Int, a: &Int) -> bool {
    if m.is_zero() {
        a.is_zero()
    } else {
        (a % m).is_zero()
    }
}

pub(crate) fn ints<const N: usize>(xs: [i64; N]) -> [Int; N] {
    xs.map(Int::from)
}
