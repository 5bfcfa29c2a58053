//! The two 12-tuple encodings of a 4-component link-homotopy class.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{gcd_all, ints, Int};

/// Clasper counts `(c1..c6 | f1..f4 | t1, t2)` of a standard form.
///
/// Edges of the tetrahedron: `c3 ↔ {1,2}`, `c2 ↔ {1,3}`, `c1 ↔ {2,3}`,
/// `c4 ↔ {1,4}`, `c5 ↔ {2,4}`, `c6 ↔ {3,4}`. Faces: `f4 ↔ {1,2,3}`,
/// `f3 ↔ {1,2,4}`, `f2 ↔ {1,3,4}`, `f1 ↔ {2,3,4}`. Negative counts stand
/// for twisted claspers. Arrays are 0-based, so `c[0]` is `c1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ClasperForm {
    pub c: [Int; 6],
    pub f: [Int; 4],
    pub t: [Int; 2],
}

impl ClasperForm {
    pub fn new(c: [Int; 6], f: [Int; 4], t: [Int; 2]) -> Self {
        ClasperForm { c, f, t }
    }

    pub fn from_i64(c: [i64; 6], f: [i64; 4], t: [i64; 2]) -> Self {
        ClasperForm { c: ints(c), f: ints(f), t: ints(t) }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// All twelve entries in order.
    pub fn entries(&self) -> impl Iterator<Item = &Int> {
        self.c.iter().chain(&self.f).chain(&self.t)
    }
}

impl fmt::Display for ClasperForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[Int]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{} | {} | {}", join(&self.c), join(&self.f), join(&self.t))
    }
}

/// Levine's parameters `(k, l, r, d, e1..e8)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LevineForm {
    pub k: Int,
    pub l: Int,
    pub r: Int,
    pub d: Int,
    /// `e[0]` is `e1`.
    pub e: [Int; 8],
}

impl LevineForm {
    pub fn from_i64(k: i64, l: i64, r: i64, d: i64, e: [i64; 8]) -> Self {
        LevineForm { k: k.into(), l: l.into(), r: r.into(), d: d.into(), e: ints(e) }
    }

    /// `0 <= d < gcd*(k, l, r)` when the gcd is finite; any `d` otherwise.
    pub fn is_normalized(&self) -> bool {
        let g = gcd_all([&self.k, &self.l, &self.r]);
        g.is_zero() || (!self.d.is_negative() && self.d < g)
    }
}

impl fmt::Display for LevineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "k={} l={} r={} d={} e=({})", self.k, self.l, self.r, self.d, e)
    }
}
