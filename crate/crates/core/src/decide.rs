//! Deciding whether two clasper forms lie in the same orbit of the move group.
//!
//! For fixed `c` every word acts as `f ↦ f + A·a` and
//! `t ↦ t + N(a)·f + q`, where `a` is the exponent-sum vector, `A` the move
//! matrix and `q` a constant that depends on the order of the factors only
//! through commutators. Commutators are pure `t` translations and central.
//! The decision therefore splits into three exact steps:
//!
//! 1. the `c` parts must agree;
//! 2. `A·a = f₂ - f₁` must have an integer solution;
//! 3. the remaining `t` difference must lie in the lattice spanned by the
//!    commutator effects and the effects of the kernel words of `A`,
//!    evaluated at the target `f`.

use std::fmt;

use num_traits::Zero;

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::form::ClasperForm;
use crate::intlin::{lattice_reduce, solve_diophantine, IntMatrix};
use crate::moves::{apply_word, commutator_power_word, commutator_t_effect, CommutatorPair, Generator, MoveWord};

/// The 4×8 matrix whose columns are the `f` translations of
/// `ψ21, ψ41, ψ12, ψ32, ψ43, ψ23, ψ34, ψ14`.
pub fn build_move_matrix(c: &[Int; 6]) -> IntMatrix {
    let [c1, c2, c3, c4, c5, c6] = c;
    let z = Int::zero;
    IntMatrix::from_rows(vec![
        vec![z(), z(), z(), c6.clone(), c5.clone(), -c5, -c1, z()],
        vec![z(), c6.clone(), z(), z(), -c4, z(), c2.clone(), -c2],
        vec![c5.clone(), -c5, -c4, z(), z(), z(), z(), c3.clone()],
        vec![-c1, z(), c2.clone(), -c2, z(), c3.clone(), z(), z()],
    ])
    .expect("4x8")
}

/// `ψ21^a1` then `ψ41^a2` ... then `ψ14^a8`.
pub fn word_from_exponents(a: &[Int]) -> MoveWord {
    assert_eq!(a.len(), 8, "one exponent per primitive generator");
    MoveWord::from_steps(Generator::ALL.into_iter().zip(a.iter().cloned()))
}

fn require_same_c(l1: &ClasperForm, l2: &ClasperForm) -> Result<()> {
    if l1.c != l2.c {
        return Err(Error::usage("c parts differ"));
    }
    Ok(())
}

/// A word taking the `f` part of `l1` to that of `l2`, if one exists.
pub fn step2_word(l1: &ClasperForm, l2: &ClasperForm) -> Result<Option<MoveWord>> {
    require_same_c(l1, l2)?;
    let a = build_move_matrix(&l1.c);
    let df: Vec<Int> = l2.f.iter().zip(&l1.f).map(|(x, y)| x - y).collect();
    Ok(solve_diophantine(&a, &df)?.map(|sol| word_from_exponents(&sol.shortened().particular)))
}

/// One `f`-fixing word per kernel basis vector of the move matrix.
pub fn kernel_words(c: &[Int; 6]) -> Vec<MoveWord> {
    let a = build_move_matrix(c);
    let sol = solve_diophantine(&a, &[Int::zero(), Int::zero(), Int::zero(), Int::zero()])
        .expect("dimensions match")
        .expect("homogeneous systems are solvable")
        .shortened();
    sol.kernel_basis.iter().map(|b| word_from_exponents(b)).collect()
}

/// The change in `t` from applying `w` at `(c, f, t = 0)`.
pub fn word_t_effect(c: &[Int; 6], f: &[Int; 4], w: &MoveWord) -> [Int; 2] {
    let start = ClasperForm::new(c.clone(), f.clone(), Default::default());
    apply_word(&start, w).t
}

/// Generators of the lattice of `t` changes achievable without changing `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerBasis {
    /// Effects of the six tabulated commutators, in [`CommutatorPair::ALL`] order.
    pub commutator_columns: [[Int; 2]; 6],
    /// Effects of `kernel_words` at the given `f`.
    pub kernel_word_columns: Vec<[Int; 2]>,
    pub kernel_words: Vec<MoveWord>,
}

impl StabilizerBasis {
    /// Commutator columns followed by kernel-word columns.
    pub fn columns(&self) -> Vec<Vec<Int>> {
        self.commutator_columns.iter().chain(&self.kernel_word_columns).map(|c| c.to_vec()).collect()
    }

    /// The 2×(6+s) matrix of all columns.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(2, &self.columns()).expect("2-vectors")
    }

    pub fn commutator_matrix(&self) -> IntMatrix {
        let cols: Vec<Vec<Int>> = self.commutator_columns.iter().map(|c| c.to_vec()).collect();
        IntMatrix::from_columns(2, &cols).expect("2-vectors")
    }

    /// Whether a `t` change is achievable by an `f`-fixing word.
    pub fn contains(&self, dt: &[Int; 2]) -> bool {
        lattice_reduce(dt, &self.columns()).expect("2-vectors").in_lattice
    }
}

pub fn stabilizer_t_basis(c: &[Int; 6], f: &[Int; 4]) -> StabilizerBasis {
    stabilizer_from_kernel_words(c, f, kernel_words(c))
}

fn stabilizer_from_kernel_words(c: &[Int; 6], f: &[Int; 4], kernel_words: Vec<MoveWord>) -> StabilizerBasis {
    let commutator_columns = CommutatorPair::ALL.map(|p| commutator_t_effect(c, p));
    let kernel_word_columns = kernel_words.iter().map(|w| word_t_effect(c, f, w)).collect();
    StabilizerBasis { commutator_columns, kernel_word_columns, kernel_words }
}

/// Where the decision procedure stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureStage {
    CMismatch,
    FUnreachable,
    TUnreachable,
}

impl FailureStage {
    pub fn as_str(self) -> &'static str {
        match self {
            FailureStage::CMismatch => "C_MISMATCH",
            FailureStage::FUnreachable => "F_UNREACHABLE",
            FailureStage::TUnreachable => "T_UNREACHABLE",
        }
    }
}

impl fmt::Display for FailureStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `apply_word(l1, certificate) == l2` exactly.
    Equivalent { certificate: MoveWord },
    NotEquivalent { stage: FailureStage },
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent { .. })
    }

    pub fn certificate(&self) -> Option<&MoveWord> {
        match self {
            Verdict::Equivalent { certificate } => Some(certificate),
            Verdict::NotEquivalent { .. } => None,
        }
    }

    pub fn stage(&self) -> Option<FailureStage> {
        match self {
            Verdict::Equivalent { .. } => None,
            Verdict::NotEquivalent { stage } => Some(*stage),
        }
    }
}

/// Decide whether `l1` and `l2` are related by the move group.
///
/// Every positive verdict carries a certificate that has been checked by
/// application; a certificate that fails to verify is a bug and panics.
pub fn decide_equiv(l1: &ClasperForm, l2: &ClasperForm) -> Verdict {
    if l1.c != l2.c {
        return Verdict::NotEquivalent { stage: FailureStage::CMismatch };
    }
    let df: Vec<Int> = l2.f.iter().zip(&l1.f).map(|(x, y)| x - y).collect();
    let Some(f_solution) = solve_diophantine(&build_move_matrix(&l1.c), &df).expect("4 rows") else {
        return Verdict::NotEquivalent { stage: FailureStage::FUnreachable };
    };
    let f_solution = f_solution.shortened();
    let step2 = word_from_exponents(&f_solution.particular);
    let moved = apply_word(l1, &step2);
    debug_assert_eq!(moved.f, l2.f);

    let kernel = f_solution.kernel_basis.iter().map(|b| word_from_exponents(b)).collect();
    let basis = stabilizer_from_kernel_words(&l2.c, &l2.f, kernel);
    let dt: Vec<Int> = l2.t.iter().zip(&moved.t).map(|(x, y)| x - y).collect();
    let Some(sol) = solve_diophantine(&basis.matrix(), &dt).expect("2 rows") else {
        return Verdict::NotEquivalent { stage: FailureStage::TUnreachable };
    };

    let certificate = assemble_certificate(l1, l2, step2, &basis, &sol.particular[6..]);
    assert_eq!(apply_word(l1, &certificate), *l2, "certificate for {l1} -> {l2} failed to verify");
    Verdict::Equivalent { certificate }
}

/// Step-2 word, then each kernel word to its coefficient, then commutators.
///
/// A kernel word raised to `d` is written as the single word with exponents
/// `d·b`; that differs from the literal `d`-fold repetition by a commutator
/// translation, which the trailing commutator powers absorb.
fn assemble_certificate(
    l1: &ClasperForm,
    l2: &ClasperForm,
    step2: MoveWord,
    basis: &StabilizerBasis,
    kernel_coeffs: &[Int],
) -> MoveWord {
    let mut word = step2;
    for (w, d) in basis.kernel_words.iter().zip(kernel_coeffs) {
        if d.is_zero() {
            continue;
        }
        let scaled: Vec<Int> = w.exponent_sums().iter().map(|b| b * d).collect();
        word.extend(&word_from_exponents(&scaled));
    }
    let current = apply_word(l1, &word);
    let residual: Vec<Int> = l2.t.iter().zip(&current.t).map(|(x, y)| x - y).collect();
    let ks = solve_diophantine(&basis.commutator_matrix(), &residual)
        .expect("2 rows")
        .expect("residual of kernel-word powers lies in the commutator lattice")
        .shortened()
        .particular;
    for (pair, k) in CommutatorPair::ALL.iter().zip(&ks) {
        if !k.is_zero() {
            let (g, h) = pair.generators();
            word.extend(&commutator_power_word(g, h, k).expect("distinct generators"));
        }
    }
    word
}

/// A representative that is constant on orbits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub c: [Int; 6],
    /// Coset representative of `f` modulo the column lattice of the move matrix.
    pub f_star: [Int; 4],
    /// Coset representative of the transported `t` modulo the stabilizer lattice at `f_star`.
    pub t_star: [Int; 2],
}

pub fn canonical_form(l: &ClasperForm) -> CanonicalForm {
    let a = build_move_matrix(&l.c);
    let reduced = lattice_reduce(&l.f, &a.columns()).expect("4-vectors");
    let f_star: [Int; 4] = reduced.representative.try_into().expect("4 entries");

    let target = ClasperForm::new(l.c.clone(), f_star.clone(), l.t.clone());
    let transport = step2_word(l, &target).expect("same c").expect("f_star lies in the coset of f");
    let moved = apply_word(l, &transport);
    debug_assert_eq!(moved.f, f_star);

    let basis = stabilizer_t_basis(&l.c, &f_star);
    let t_star = lattice_reduce(&moved.t, &basis.columns()).expect("2-vectors").representative;
    CanonicalForm { c: l.c.clone(), f_star, t_star: t_star.try_into().expect("2 entries") }
}
