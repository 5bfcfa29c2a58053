//! Independent checks for the decision procedure: seeded random instances,
//! exhaustive bounded search over generator steps, and certificate checking.

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Int;
use crate::form::{ClasperForm, LevineForm};
use crate::invariants::Family;
use crate::moves::{apply_word, Generator, MoveWord};

/// Parameters for bounded search and random generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_depth: usize,
    /// States with some `|f_i|` or `|t_j|` above this are not expanded.
    pub coord_bound: u64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_depth: 6, coord_bound: 32, seed: 0 }
    }
}

/// Inclusive absolute bounds for the fields of a random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldBounds {
    pub c: i64,
    pub f: i64,
    pub t: i64,
    /// Longest random word.
    pub word_len: usize,
    /// Largest absolute exponent of a word step.
    pub power: i64,
}

impl Default for FieldBounds {
    fn default() -> Self {
        FieldBounds { c: 10, f: 20, t: 20, word_len: 30, power: 3 }
    }
}

/// A deterministic stream of random tuples, words and Levine forms.
#[derive(Debug, Clone)]
pub struct InstanceGenerator {
    rng: ChaCha8Rng,
}

impl InstanceGenerator {
    pub fn new(seed: u64) -> Self {
        InstanceGenerator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int(&mut self, bound: i64) -> Int {
        Int::from(self.rng.gen_range(-bound..=bound))
    }

    fn ints<const N: usize>(&mut self, bound: i64) -> [Int; N] {
        std::array::from_fn(|_| self.int(bound))
    }

    pub fn form(&mut self, b: &FieldBounds) -> ClasperForm {
        ClasperForm::new(self.ints(b.c), self.ints(b.f), self.ints(b.t))
    }

    /// A tuple with the given `c` and random `f`, `t`.
    pub fn form_with_c(&mut self, c: &[Int; 6], b: &FieldBounds) -> ClasperForm {
        ClasperForm::new(c.clone(), self.ints(b.f), self.ints(b.t))
    }

    pub fn generator(&mut self) -> Generator {
        Generator::ALL[self.rng.gen_range(0..8)]
    }

    /// A word of length `0..=b.word_len` with nonzero powers in `[-b.power, b.power]`.
    pub fn word(&mut self, b: &FieldBounds) -> MoveWord {
        let len = self.rng.gen_range(0..=b.word_len);
        self.word_of_len(len, b.power)
    }

    pub fn word_of_len(&mut self, len: usize, power: i64) -> MoveWord {
        let mut w = MoveWord::new();
        for _ in 0..len {
            let g = self.generator();
            let mut p = self.rng.gen_range(1..=power.max(1));
            if self.rng.gen_bool(0.5) {
                p = -p;
            }
            w.push(g, Int::from(p));
        }
        w
    }

    pub fn levine(&mut self, b: &FieldBounds) -> LevineForm {
        let [k, l, r] = self.ints(b.c);
        let g = crate::arith::gcd_all([&k, &l, &r]);
        let d = if g.is_zero() { self.int(b.f) } else { self.int(b.f).mod_floor(&g) };
        let e: [Int; 8] = std::array::from_fn(|i| self.int(if i < 3 { b.c } else { b.f }));
        LevineForm { k, l, r, d, e }
    }

    /// A random tuple satisfying the hypotheses of `family`: the required
    /// zeros of `c` are forced and everything else is drawn and rejected
    /// until the hypotheses hold.
    pub fn family_form(&mut self, family: Family, b: &FieldBounds) -> ClasperForm {
        loop {
            let mut c: [Int; 6] = self.ints(b.c);
            let zeros: &[usize] = match family {
                Family::T41_1 => &[0, 1, 2, 3, 4, 5],
                Family::T41_2 => &[0, 1, 2, 3, 4],
                Family::T41_3 => &[0, 1, 3, 4],
                Family::P43_1 | Family::P43_2 => &[1, 3, 4, 5],
                Family::P43_3 => &[1, 4, 5],
                Family::P43_4 => &[2, 5],
                Family::P43_5 => &[4, 5],
                Family::T41_4 | Family::T41_5 => &[],
            };
            for &i in zeros {
                c[i] = Int::zero();
            }
            if family == Family::P43_2 {
                c[2] = c[0].clone();
            }
            if let Some(l) = self.family_form_with_c(family, &c, b, 20) {
                return l;
            }
        }
    }

    /// A tuple with the given `c` satisfying the hypotheses of `family`, or
    /// `None` after `attempts` rejected draws of `f` and `t`.
    pub fn family_form_with_c(&mut self, family: Family, c: &[Int; 6], b: &FieldBounds, attempts: usize) -> Option<ClasperForm> {
        for _ in 0..attempts {
            let mut l = self.form_with_c(c, b);
            if family == Family::P43_1 {
                l.f[0] = &l.c[0] * self.int(b.f / 4 + 1);
                l.f[2] = &l.c[2] * self.int(b.f / 4 + 1);
            }
            if family.applies(&l) {
                return Some(l);
            }
        }
        None
    }

    /// Uniform choice in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}

/// A tuple and an independently drawn word, reproducible from `cfg.seed`.
pub fn random_instance(cfg: &SearchConfig, profile: &FieldBounds) -> (ClasperForm, MoveWord) {
    let mut g = InstanceGenerator::new(cfg.seed);
    let l = g.form(profile);
    let w = g.word(profile);
    (l, w)
}

/// Whether `w` takes `l1` exactly to `l2`.
pub fn verify_certificate(l1: &ClasperForm, w: &MoveWord, l2: &ClasperForm) -> bool {
    apply_word(l1, w) == *l2
}

type State = [i128; 12];

fn to_state(l: &ClasperForm) -> Option<State> {
    let mut s = [0i128; 12];
    for (slot, x) in s.iter_mut().zip(l.entries()) {
        *slot = x.to_i128()?;
    }
    Some(s)
}

fn step(s: &State, g: Generator, sign: i128) -> Option<State> {
    let c = |i: usize| s[i - 1];
    let df: [i128; 4] = match (g.disc(), g.pushed()) {
        (2, 1) => [0, 0, c(5), -c(1)],
        (4, 1) => [0, c(6), -c(5), 0],
        (1, 2) => [0, 0, -c(4), c(2)],
        (3, 2) => [c(6), 0, 0, -c(2)],
        (4, 3) => [c(5), -c(4), 0, 0],
        (2, 3) => [-c(5), 0, 0, c(3)],
        (3, 4) => [-c(1), c(2), 0, 0],
        (1, 4) => [0, -c(2), c(3), 0],
        _ => unreachable!(),
    };
    let mut out = *s;
    let read = s[6 + g.f_read_index()];
    let slot = 10 + g.t_slot();
    out[slot] = out[slot].checked_add(sign.checked_mul(read)?.checked_mul(i128::from(g.t_sign()))?)?;
    for (i, d) in df.iter().enumerate() {
        out[6 + i] = out[6 + i].checked_add(sign.checked_mul(*d)?)?;
    }
    Some(out)
}

fn in_bounds(s: &State, bound: i128) -> bool {
    s[6..].iter().all(|x| x.abs() <= bound)
}

/// Breadth-first search from `l1` over the sixteen steps `ψ^±1`, skipping
/// states whose `f` or `t` leave `[-coord_bound, coord_bound]`.
///
/// Returns a shortest witness within the bounds (ties broken by the step
/// order `ψ21, ψ21⁻¹, ψ41, ...`) or `None`. `None` proves nothing.
pub fn bounded_bfs(l1: &ClasperForm, l2: &ClasperForm, cfg: &SearchConfig) -> Option<MoveWord> {
    if l1.c != l2.c {
        return None;
    }
    let (start, goal) = (to_state(l1)?, to_state(l2)?);
    if start == goal {
        return Some(MoveWord::new());
    }
    let bound = i128::from(cfg.coord_bound);
    let moves: Vec<(Generator, i128)> = Generator::ALL.iter().flat_map(|&g| [(g, 1), (g, -1)]).collect();

    // parent index and move index per discovered state
    let mut nodes: Vec<(State, usize, usize)> = vec![(start, usize::MAX, usize::MAX)];
    let mut seen: HashSet<State> = HashSet::from([start]);
    let mut frontier = VecDeque::from([(0usize, 0usize)]);

    while let Some((idx, depth)) = frontier.pop_front() {
        if depth == cfg.max_depth {
            continue;
        }
        let current = nodes[idx].0;
        for (m, &(g, sign)) in moves.iter().enumerate() {
            let Some(next) = step(&current, g, sign) else { continue };
            if !in_bounds(&next, bound) || seen.contains(&next) {
                continue;
            }
            seen.insert(next);
            nodes.push((next, idx, m));
            if next == goal {
                return Some(trace(&nodes, nodes.len() - 1, &moves));
            }
            frontier.push_back((nodes.len() - 1, depth + 1));
        }
    }
    None
}

fn trace(nodes: &[(State, usize, usize)], mut idx: usize, moves: &[(Generator, i128)]) -> MoveWord {
    let mut rev = Vec::new();
    while nodes[idx].1 != usize::MAX {
        let (g, sign) = moves[nodes[idx].2];
        rev.push((g, if sign > 0 { Int::one() } else { -Int::one() }));
        idx = nodes[idx].1;
    }
    rev.reverse();
    MoveWord::from_steps(rev)
}
