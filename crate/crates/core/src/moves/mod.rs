//! The move group acting on clasper forms.
//!
//! A generator `ψij` pushes an arc of component `j` over the disc spanned by
//! component `i`. It translates `f` by a vector depending only on `c`, and
//! adds `±f[r]` to one `t` slot, where `f[r]` is the face coordinate the
//! generator never touches. Only eight `(i, j)` pairs carry primitive rows;
//! the other four are words (see [`derived_generator_word`]).

mod levine;

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::form::ClasperForm;

pub use levine::{clasper_to_levine, levine_to_clasper, phi_move, Phi};

/// A primitive move `ψij`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    disc: u8,
    pushed: u8,
}

impl Generator {
    pub const PSI21: Generator = Generator { disc: 2, pushed: 1 };
    pub const PSI41: Generator = Generator { disc: 4, pushed: 1 };
    pub const PSI12: Generator = Generator { disc: 1, pushed: 2 };
    pub const PSI32: Generator = Generator { disc: 3, pushed: 2 };
    pub const PSI43: Generator = Generator { disc: 4, pushed: 3 };
    pub const PSI23: Generator = Generator { disc: 2, pushed: 3 };
    pub const PSI34: Generator = Generator { disc: 3, pushed: 4 };
    pub const PSI14: Generator = Generator { disc: 1, pushed: 4 };

    /// The eight primitive generators, in move-matrix column order.
    pub const ALL: [Generator; 8] = [
        Self::PSI21,
        Self::PSI41,
        Self::PSI12,
        Self::PSI32,
        Self::PSI43,
        Self::PSI23,
        Self::PSI34,
        Self::PSI14,
    ];

    /// `ψij` for a primitive pair; the four derived pairs are rejected.
    pub fn new(i: u8, j: u8) -> Result<Self> {
        let g = Generator { disc: i, pushed: j };
        if Self::ALL.contains(&g) {
            Ok(g)
        } else if is_derived_pair(i, j) {
            Err(Error::usage(format!("ψ{i}{j} is not primitive; use derived_generator_word")))
        } else {
            Err(Error::usage(format!("ψ{i}{j} is not a move")))
        }
    }

    pub fn disc(self) -> u8 {
        self.disc
    }

    pub fn pushed(self) -> u8 {
        self.pushed
    }

    /// Position in [`Generator::ALL`].
    pub fn column(self) -> usize {
        Self::ALL.iter().position(|&g| g == self).expect("primitive generator")
    }

    /// Index of the `t` slot this generator changes (0 for `t1`, 1 for `t2`).
    pub fn t_slot(self) -> usize {
        self.column() % 2
    }

    /// Sign of the `t` increment.
    pub fn t_sign(self) -> i8 {
        if self.t_slot() == 0 {
            1
        } else {
            -1
        }
    }

    /// Index of the face coordinate read by the `t` increment: the face
    /// opposite the pushed component, `f[j-1]`.
    pub fn f_read_index(self) -> usize {
        usize::from(self.pushed) - 1
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ψ{}{}", self.disc, self.pushed)
    }
}

fn is_derived_pair(i: u8, j: u8) -> bool {
    matches!((i, j), (3, 1) | (1, 3) | (4, 2) | (2, 4))
}

/// One row of the generator table evaluated at a given `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDelta {
    pub f_delta: [Int; 4],
    /// 0-based `t` slot.
    pub t_slot: usize,
    pub t_sign: i8,
    /// 0-based index of the `f` coordinate the `t` increment reads.
    pub f_read_index: usize,
}

/// The table row of `g` at `c`.
pub fn generator_delta(c: &[Int; 6], g: Generator) -> GeneratorDelta {
    let [c1, c2, c3, c4, c5, c6] = c;
    let z = Int::zero();
    let f_delta = match (g.disc, g.pushed) {
        (2, 1) => [z.clone(), z.clone(), c5.clone(), -c1],
        (4, 1) => [z.clone(), c6.clone(), -c5, z.clone()],
        (1, 2) => [z.clone(), z.clone(), -c4, c2.clone()],
        (3, 2) => [c6.clone(), z.clone(), z.clone(), -c2],
        (4, 3) => [c5.clone(), -c4, z.clone(), z.clone()],
        (2, 3) => [-c5, z.clone(), z.clone(), c3.clone()],
        (3, 4) => [-c1, c2.clone(), z.clone(), z.clone()],
        (1, 4) => [z.clone(), -c2, c3.clone(), z.clone()],
        _ => unreachable!("generators are always table pairs"),
    };
    GeneratorDelta { f_delta, t_slot: g.t_slot(), t_sign: g.t_sign(), f_read_index: g.f_read_index() }
}

/// Apply `g^power`. The `t` increment reads a coordinate `g` leaves fixed,
/// so powers act as `power` repeated steps and `-1` inverts `+1` exactly.
pub fn apply_generator(l: &ClasperForm, g: Generator, power: &Int) -> ClasperForm {
    let mut out = l.clone();
    apply_in_place(&mut out, g, power);
    out
}

pub(crate) fn apply_in_place(l: &mut ClasperForm, g: Generator, power: &Int) {
    if power.is_zero() {
        return;
    }
    let delta = generator_delta(&l.c, g);
    debug_assert!(delta.f_delta[delta.f_read_index].is_zero());
    let inc = power * &l.f[delta.f_read_index];
    if delta.t_sign > 0 {
        l.t[delta.t_slot] += inc;
    } else {
        l.t[delta.t_slot] -= inc;
    }
    for (fi, di) in l.f.iter_mut().zip(&delta.f_delta) {
        if !di.is_zero() {
            *fi += power * di;
        }
    }
}

/// A signed power of a generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub generator: Generator,
    pub power: Int,
}

/// A finite product of generator powers, applied first step first.
///
/// The product `ψb ψa` (rightmost applied first) is the word `[ψa, ψb]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MoveWord {
    steps: Vec<Step>,
}

impl MoveWord {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build a word, dropping zero powers.
    pub fn from_steps(steps: impl IntoIterator<Item = (Generator, Int)>) -> Self {
        let mut w = MoveWord::new();
        for (g, p) in steps {
            w.push(g, p);
        }
        w
    }

    pub fn from_i64(steps: &[(Generator, i64)]) -> Self {
        Self::from_steps(steps.iter().map(|&(g, p)| (g, Int::from(p))))
    }

    /// Append `g^power`; zero powers are skipped.
    pub fn push(&mut self, g: Generator, power: Int) {
        if !power.is_zero() {
            self.steps.push(Step { generator: g, power });
        }
    }

    pub fn extend(&mut self, other: &MoveWord) {
        self.steps.extend(other.steps.iter().cloned());
    }

    /// `self` followed by `other`.
    pub fn then(mut self, other: &MoveWord) -> MoveWord {
        self.extend(other);
        self
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Total exponent of each primitive generator, in column order.
    pub fn exponent_sums(&self) -> [Int; 8] {
        let mut sums: [Int; 8] = Default::default();
        for s in &self.steps {
            sums[s.generator.column()] += &s.power;
        }
        sums
    }

    /// The word `w^n` spelled out; negative `n` repeats the inverse.
    pub fn repeat(&self, n: i64) -> MoveWord {
        let base = if n < 0 { invert_word(self) } else { self.clone() };
        let mut out = MoveWord::new();
        for _ in 0..n.unsigned_abs() {
            out.extend(&base);
        }
        out
    }

    /// Right-to-left product notation, e.g. `ψ23 ψ21` for `[ψ21, ψ23]`.
    pub fn pretty(&self) -> String {
        if self.steps.is_empty() {
            return "1".to_string();
        }
        self.steps
            .iter()
            .rev()
            .map(|s| {
                if s.power.is_one() {
                    s.generator.to_string()
                } else {
                    format!("{}^{}", s.generator, s.power)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for MoveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

pub fn apply_word(l: &ClasperForm, w: &MoveWord) -> ClasperForm {
    let mut out = l.clone();
    for s in &w.steps {
        apply_in_place(&mut out, s.generator, &s.power);
    }
    out
}

pub fn invert_word(w: &MoveWord) -> MoveWord {
    MoveWord { steps: w.steps.iter().rev().map(|s| Step { generator: s.generator, power: -&s.power }).collect() }
}

/// `[g, h] = g h g⁻¹ h⁻¹`, read right to left: the word `[h⁻¹, g⁻¹, h, g]`.
pub fn commutator_word(g: Generator, h: Generator) -> Result<MoveWord> {
    commutator_power_word(g, h, &Int::one())
}

/// `[g^n, h]`, which acts as `[g, h]^n` because commutators are central.
pub fn commutator_power_word(g: Generator, h: Generator, n: &Int) -> Result<MoveWord> {
    if g == h {
        return Err(Error::usage(format!("commutator of {g} with itself")));
    }
    let one = Int::one();
    Ok(MoveWord::from_steps([(h, -&one), (g, -n), (h, one), (g, n.clone())]))
}

/// The six commutators whose `t` effects generate every commutator effect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommutatorPair {
    /// `[ψ14, ψ21]`
    P14_21,
    /// `[ψ14, ψ12]`
    P14_12,
    /// `[ψ43, ψ14]`
    P43_14,
    /// `[ψ32, ψ43]`
    P32_43,
    /// `[ψ21, ψ23]`
    P21_23,
    /// `[ψ12, ψ41]`
    P12_41,
}

impl CommutatorPair {
    pub const ALL: [CommutatorPair; 6] = [
        CommutatorPair::P14_21,
        CommutatorPair::P14_12,
        CommutatorPair::P43_14,
        CommutatorPair::P32_43,
        CommutatorPair::P21_23,
        CommutatorPair::P12_41,
    ];

    pub fn generators(self) -> (Generator, Generator) {
        use Generator as G;
        match self {
            CommutatorPair::P14_21 => (G::PSI14, G::PSI21),
            CommutatorPair::P14_12 => (G::PSI14, G::PSI12),
            CommutatorPair::P43_14 => (G::PSI43, G::PSI14),
            CommutatorPair::P32_43 => (G::PSI32, G::PSI43),
            CommutatorPair::P21_23 => (G::PSI21, G::PSI23),
            CommutatorPair::P12_41 => (G::PSI12, G::PSI41),
        }
    }

    pub fn from_generators(g: Generator, h: Generator) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.generators() == (g, h))
            .ok_or_else(|| Error::usage(format!("[{g}, {h}] is not a tabulated commutator")))
    }

    pub fn word(self) -> MoveWord {
        let (g, h) = self.generators();
        commutator_word(g, h).expect("distinct generators")
    }
}

impl fmt::Display for CommutatorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (g, h) = self.generators();
        write!(f, "[{g}, {h}]")
    }
}

/// Closed-form `(Δt1, Δt2)` of a tabulated commutator; independent of `f`, `t`.
pub fn commutator_t_effect(c: &[Int; 6], pair: CommutatorPair) -> [Int; 2] {
    let [c1, c2, c3, c4, c5, c6] = c;
    let z = Int::zero();
    match pair {
        CommutatorPair::P14_21 => [z, c1.clone()],
        CommutatorPair::P14_12 => [c2.clone(), -c2],
        CommutatorPair::P43_14 => [c3.clone(), z],
        CommutatorPair::P32_43 => [z, c4.clone()],
        CommutatorPair::P21_23 => [-c5, c5.clone()],
        CommutatorPair::P12_41 => [c6.clone(), z],
    }
}

/// `ψij` for one of the four non-primitive pairs, from `ψil⁻¹ = ψjl ψkl`.
pub fn derived_generator_word(i: u8, j: u8) -> Result<MoveWord> {
    if !is_derived_pair(i, j) {
        return Err(match Generator::new(i, j) {
            Ok(g) => Error::usage(format!("{g} is already a primitive generator")),
            Err(e) => e,
        });
    }
    let minus_one = -Int::one();
    Ok(MoveWord::from_steps(
        Generator::ALL.into_iter().filter(|g| g.pushed == j && g.disc != i).map(|g| (g, minus_one.clone())),
    ))
}

/// Any ordered pair of distinct components as a word: a single step for
/// primitive pairs, the derived word otherwise.
pub fn pair_word(i: u8, j: u8, power: &Int) -> Result<MoveWord> {
    match Generator::new(i, j) {
        Ok(g) => Ok(MoveWord::from_steps([(g, power.clone())])),
        Err(_) if is_derived_pair(i, j) => {
            let base = derived_generator_word(i, j)?;
            // same-target generators commute, so (ψjl ψkl)^n = ψjl^n ψkl^n
            Ok(MoveWord::from_steps(base.steps.iter().map(|s| (s.generator, &s.power * power))))
        }
        Err(e) => Err(e),
    }
}
