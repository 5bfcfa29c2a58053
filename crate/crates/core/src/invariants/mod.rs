//! Milnor invariants of a clasper form, classification of its 2- and
//! 3-component sublinks, and the complete invariant families available under
//! extra hypotheses on `c` and `f`.

mod families;

use std::fmt;

use crate::arith::{gcd_all, gcd_sub, reduce_residue, Int, Residue};
use crate::error::{Error, Result};
use crate::form::ClasperForm;

pub use families::{applicability, case_invariants, Family, InvariantReport, InvariantValue};

/// Index sequences of the six linking numbers, in storage order.
pub const LINKING_LABELS: [&str; 6] = ["12", "13", "23", "14", "24", "34"];
/// Index sequences of the four triple invariants, in storage order.
pub const TRIPLE_LABELS: [&str; 4] = ["123", "124", "134", "234"];
/// Index sequences of the two length-4 invariants, in storage order.
pub const QUADRUPLE_LABELS: [&str; 2] = ["3124", "2134"];

/// The twelve Milnor homotopy invariants read off a clasper form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MilnorProfile {
    /// Ordered as [`LINKING_LABELS`].
    pub linking: [Int; 6],
    /// Ordered as [`TRIPLE_LABELS`]; each modulus is the gcd of the three
    /// linking numbers among the indices.
    pub triple: [Residue; 4],
    /// Ordered as [`QUADRUPLE_LABELS`]; both share the modulus `Δ₄`.
    pub quadruple: [Residue; 2],
}

impl MilnorProfile {
    /// The common modulus of the length-4 invariants.
    pub fn delta4(&self) -> &Int {
        self.quadruple[0].modulus()
    }
}

impl fmt::Display for MilnorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, v) in LINKING_LABELS.iter().zip(&self.linking) {
            write!(f, "μ({label})={v} ")?;
        }
        for (label, v) in TRIPLE_LABELS.iter().zip(&self.triple) {
            write!(f, "μ({label})={v} ")?;
        }
        let [a, b] = &self.quadruple;
        write!(f, "μ(3124)={a} μ(2134)={b}")
    }
}

pub fn milnor_profile(l: &ClasperForm) -> MilnorProfile {
    let [c1, c2, c3, c4, c5, c6] = &l.c;
    let [f1, f2, f3, f4] = &l.f;
    let [t1, t2] = &l.t;
    let g3 = |a: &Int, b: &Int, c: &Int| gcd_all([a, b, c]);

    let linking = [-c3, -c2, -c1, -c4, -c5, -c6];
    let triple = [
        reduce_residue(f4, &g3(c1, c2, c3)),
        reduce_residue(&-f3, &g3(c3, c4, c5)),
        reduce_residue(f2, &g3(c2, c4, c6)),
        reduce_residue(&-f1, &g3(c1, c5, c6)),
    ];
    let contents: Vec<Int> = triple.iter().map(Residue::content).collect();
    let delta4 = gcd_all(linking.iter().chain(&contents));
    let quadruple = [reduce_residue(&-t2, &delta4), reduce_residue(&(t1 + t2), &delta4)];
    MilnorProfile { linking, triple, quadruple }
}

/// A 3-component link-homotopy class: three linking numbers and the triple
/// invariant modulo their gcd.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleForm {
    /// Labels of the three components, increasing.
    pub components: [u8; 3],
    /// Linking numbers of the pairs `(a,b)`, `(a,c)`, `(b,c)` for components `[a,b,c]`.
    pub linking: [Int; 3],
    pub triple: Residue,
}

impl fmt::Display for TripleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.components;
        let [x, y, z] = &self.linking;
        write!(f, "μ({a}{b})={x} μ({a}{c})={y} μ({b}{c})={z} μ({a}{b}{c})={}", self.triple)
    }
}

/// The 3-component sublink obtained by deleting component `drop`.
pub fn sublink3(l: &ClasperForm, drop: u8) -> Result<TripleForm> {
    let p = milnor_profile(l);
    let [m12, m13, m23, m14, m24, m34] = p.linking;
    let [t123, t124, t134, t234] = p.triple;
    let (components, linking, triple) = match drop {
        4 => ([1, 2, 3], [m12, m13, m23], t123),
        3 => ([1, 2, 4], [m12, m14, m24], t124),
        2 => ([1, 3, 4], [m13, m14, m34], t134),
        1 => ([2, 3, 4], [m23, m24, m34], t234),
        _ => return Err(Error::usage(format!("component to drop must be 1..4, got {drop}"))),
    };
    Ok(TripleForm { components, linking, triple })
}

/// Canonical form of a 3-component standard form with edge counts
/// `c12, c13, c23` and one Borromean clasper count `f`.
pub fn classify3(c12: &Int, c13: &Int, c23: &Int, f: &Int) -> TripleForm {
    let modulus = gcd_sub(&[c12.clone(), c13.clone(), c23.clone()]).expect("three entries");
    TripleForm { components: [1, 2, 3], linking: [-c12, -c13, -c23], triple: reduce_residue(f, &modulus) }
}

/// A 2-component standard form is determined by its single clasper count;
/// the class is recorded by the linking number `-c`.
pub fn classify2(c: &Int) -> Int {
    -c
}
