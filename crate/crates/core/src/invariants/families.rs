//! The ten families of clasper forms that are classified by explicit
//! invariants: five inherited from Levine's work (ids `T41-*`) and five
//! further ones (ids `P43-*`).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{bezout_all, divides, gcd_all, reduce_residue, Int, Residue};
use crate::error::{Error, Result};
use crate::form::ClasperForm;
use crate::intlin::{solve_diophantine, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// No linking at all.
    T41_1,
    /// Only `c6` nonzero.
    T41_2,
    /// Only the opposite edges `c3` and `c6` nonzero.
    T41_3,
    /// `c4, c5, c6` pairwise coprime.
    T41_4,
    /// `c1, c2, c3` pairwise coprime.
    T41_5,
    P43_1,
    P43_2,
    P43_3,
    P43_4,
    P43_5,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::T41_1,
        Family::T41_2,
        Family::T41_3,
        Family::T41_4,
        Family::T41_5,
        Family::P43_1,
        Family::P43_2,
        Family::P43_3,
        Family::P43_4,
        Family::P43_5,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Family::T41_1 => "T41-1",
            Family::T41_2 => "T41-2",
            Family::T41_3 => "T41-3",
            Family::T41_4 => "T41-4",
            Family::T41_5 => "T41-5",
            Family::P43_1 => "P43-1",
            Family::P43_2 => "P43-2",
            Family::P43_3 => "P43-3",
            Family::P43_4 => "P43-4",
            Family::P43_5 => "P43-5",
        }
    }

    /// `Ok(())` when `l` satisfies the hypotheses, otherwise the first one that fails.
    pub fn check(self, l: &ClasperForm) -> std::result::Result<(), String> {
        let h = Hyp(l);
        match self {
            Family::T41_1 => h.zero(&[1, 2, 3, 4, 5, 6]),
            Family::T41_2 => {
                h.zero(&[1, 2, 3, 4, 5])?;
                h.nonzero(&[6])
            }
            Family::T41_3 => {
                h.zero(&[1, 2, 4, 5])?;
                h.nonzero(&[3, 6])
            }
            Family::T41_4 => h.coprime(&[(4, 5), (4, 6), (5, 6)]),
            Family::T41_5 => h.coprime(&[(1, 2), (1, 3), (2, 3)]),
            Family::P43_1 => {
                h.zero(&[2, 4, 5, 6])?;
                h.nonzero(&[1, 3])?;
                h.f_divisible(1, &h.c(1), "c1")?;
                h.f_divisible(3, &h.c(3), "c3")
            }
            Family::P43_2 => {
                h.zero(&[2, 4, 5, 6])?;
                h.nonzero(&[1])?;
                if h.c(1) != h.c(3) {
                    return Err("c1 = c3".into());
                }
                h.f_divisible(1, &gcd_all([&h.c(1), &h.f(2), &h.f(3)]), "gcd(c1, f2, f3)")?;
                h.f_divisible(3, &gcd_all([&h.c(1), &h.f(1), &h.f(2)]), "gcd(c1, f1, f2)")
            }
            Family::P43_3 => {
                h.zero(&[2, 5, 6])?;
                h.nonzero(&[1, 3, 4])?;
                h.coprime(&[(1, 3), (3, 4)])
            }
            Family::P43_4 => {
                h.zero(&[3, 6])?;
                h.nonzero(&[1, 2, 4, 5])?;
                h.coprime(&[(1, 4), (2, 5)])
            }
            Family::P43_5 => {
                h.zero(&[5, 6])?;
                h.nonzero(&[1, 2, 3, 4])?;
                h.coprime(&[(2, 3), (2, 4)])?;
                h.coprime(&[(1, 4)]).or_else(|_| h.coprime(&[(1, 3)])).map_err(|_| "gcd(c1, c4) = 1 or gcd(c1, c3) = 1".into())
            }
        }
    }

    pub fn applies(self, l: &ClasperForm) -> bool {
        self.check(l).is_ok()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::usage(format!("unknown family {s:?}; expected one of T41-1..T41-5, P43-1..P43-5")))
    }
}

/// Hypothesis checks phrased with 1-based indices.
struct Hyp<'a>(&'a ClasperForm);

impl Hyp<'_> {
    fn c(&self, i: usize) -> Int {
        self.0.c[i - 1].clone()
    }

    fn f(&self, i: usize) -> Int {
        self.0.f[i - 1].clone()
    }

    fn zero(&self, idx: &[usize]) -> std::result::Result<(), String> {
        match idx.iter().find(|&&i| !self.0.c[i - 1].is_zero()) {
            Some(i) => Err(format!("c{i} = 0")),
            None => Ok(()),
        }
    }

    fn nonzero(&self, idx: &[usize]) -> std::result::Result<(), String> {
        match idx.iter().find(|&&i| self.0.c[i - 1].is_zero()) {
            Some(i) => Err(format!("c{i} != 0")),
            None => Ok(()),
        }
    }

    fn coprime(&self, pairs: &[(usize, usize)]) -> std::result::Result<(), String> {
        match pairs.iter().find(|(i, j)| !self.c(*i).gcd(&self.c(*j)).is_one()) {
            Some((i, j)) => Err(format!("gcd(c{i}, c{j}) = 1")),
            None => Ok(()),
        }
    }

    fn f_divisible(&self, i: usize, m: &Int, m_name: &str) -> std::result::Result<(), String> {
        if divides(m, &self.f(i)) {
            Ok(())
        } else {
            Err(format!("f{i} ≡ 0 mod {m_name}"))
        }
    }
}

/// Every family whose hypotheses hold for `l`, in [`Family::ALL`] order.
pub fn applicability(l: &ClasperForm) -> Vec<Family> {
    Family::ALL.into_iter().filter(|f| f.applies(l)).collect()
}

/// One named entry of an invariant report.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InvariantValue {
    Integer(Int),
    Residue(Residue),
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Integer(x) => write!(f, "{x}"),
            InvariantValue::Residue(r) => write!(f, "{r}"),
        }
    }
}

/// The complete invariants of one family, in a fixed order per family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantReport {
    pub family: Family,
    pub values: Vec<(&'static str, InvariantValue)>,
}

impl InvariantReport {
    pub fn get(&self, name: &str) -> Option<&InvariantValue> {
        self.values.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family)?;
        for (name, v) in &self.values {
            write!(f, " {name}={v}")?;
        }
        Ok(())
    }
}

struct Builder(Vec<(&'static str, InvariantValue)>);

impl Builder {
    fn int(&mut self, name: &'static str, v: &Int) -> &mut Self {
        self.0.push((name, InvariantValue::Integer(v.clone())));
        self
    }

    fn res(&mut self, name: &'static str, v: &Int, m: &Int) -> &mut Self {
        self.0.push((name, InvariantValue::Residue(reduce_residue(v, m))));
        self
    }
}

/// Evaluate the invariants of `family` on `l`.
pub fn case_invariants(l: &ClasperForm, family: Family) -> Result<InvariantReport> {
    family.check(l).map_err(|hypothesis| Error::NotApplicable { family, hypothesis })?;
    let [c1, c2, c3, c4, c5, c6] = &l.c;
    let [f1, f2, f3, f4] = &l.f;
    let [t1, t2] = &l.t;
    let g = |xs: &[&Int]| gcd_all(xs.iter().copied());
    let mut b = Builder(Vec::new());

    match family {
        Family::T41_1 => {
            let m = g(&[f1, f2, f3, f4]);
            b.int("f1", f1).int("f2", f2).int("f3", f3).int("f4", f4).res("t1", t1, &m).res("t2", t2, &m);
        }
        Family::T41_2 => {
            b.int("c6", c6).res("f1", f1, c6).res("f2", f2, c6).int("f3", f3).int("f4", f4);
            b.res("t1", t1, &g(&[c6, f1, f2, f3, f4]));
            b.res("delta", &(f1 * f2 + c6 * t2), &(c6 * g(&[f3, f4])));
        }
        Family::T41_3 => {
            b.int("c3", c3).int("c6", c6).res("f1", f1, c6).res("f2", f2, c6).res("f3", f3, c3).res("f4", f4, c3);
            b.res("t1", t1, &g(&[c3, c6, f1, f2, f3, f4]));
            b.int("delta_prime", &(c3 * c6 * t2 + c3 * f1 * f2 + c6 * f3 * f4));
        }
        Family::T41_4 => {
            for (name, c) in ["c1", "c2", "c3", "c4", "c5", "c6"].into_iter().zip(&l.c) {
                b.int(name, c);
            }
            let g123 = g(&[c1, c2, c3]);
            b.res("f4", f4, &g123);
            let [alpha, beta, gamma] = f4_offset_coefficients(&l.c, f4);
            let theta = c4 * f1 + c5 * f2 + c6 * f3 + alpha * c5 * c6 + beta * c4 * c6 + gamma * c4 * c5;
            b.res("theta", &theta, &theta_modulus(&l.c));
        }
        Family::T41_5 => {
            for (name, c) in ["c1", "c2", "c3", "c4", "c5", "c6"].into_iter().zip(&l.c) {
                b.int(name, c);
            }
            let theta = c1 * c2 * f3 + c1 * c3 * f2 + c2 * c3 * f1 + c2 * c5 * f4;
            b.res("theta_prime", &theta, &g(&[&(c1 * c4 - c2 * c5), &(c1 * c4 - c3 * c6)]));
        }
        Family::P43_1 => {
            b.int("c1", c1).int("c3", c3).int("f2", f2).res("f4", f4, &g(&[c1, c3]));
            b.res("delta1", &(c1 * t1 + f1 * f4), &(c1 * g(&[c3, f2])));
            b.res("delta2", &(c3 * t2 + f3 * f4), &(c3 * g(&[c1, f2])));
        }
        Family::P43_2 => {
            b.int("c1", c1).res("f1", f1, c1).res("f3", f3, c1).int("f2", f2).res("f4", f4, c1);
            let m = c1 * g(&[c1, f1, f2, f3]);
            b.res("delta1", &(c1 * t1 + f1 * f4), &m);
            b.res("delta2", &(c1 * t2 + f3 * f4), &m);
        }
        Family::P43_3 => {
            b.int("c1", c1).int("c3", c3).int("c4", c4).res("f1", f1, c1).res("f2", f2, c4);
            b.res("delta2", &(c3 * t2 + f3 * f4), &g(&[c1, c4, &(c3 * f1), &(c3 * f2)]));
            b.res("delta3", &(c1 * c4 * t1 + c4 * f1 * f4 + c1 * f2 * f3), c3);
        }
        Family::P43_4 => {
            b.int("c1", c1).int("c2", c2).int("c4", c4).int("c5", c5);
            b.res("f1", f1, &g(&[c1, c5])).res("f2", f2, &g(&[c2, c4]));
            b.res("f3", f3, &g(&[c4, c5])).res("f4", f4, &g(&[c1, c2]));
        }
        Family::P43_5 => {
            b.int("c1", c1).int("c2", c2).int("c3", c3).int("c4", c4).res("f1", f1, c1);
            b.res("delta4", &(c1 * c2 * f3 + c1 * c3 * f2 + c2 * c3 * f1), &(c1 * c4));
        }
    }
    Ok(InvariantReport { family, values: b.0 })
}

/// `(α, β, γ)` with `α·c1 + β·c2 + γ·c3 = f4 - (f4 mod gcd(c1, c2, c3))`;
/// zeros when `c1 = c2 = c3 = 0`.
pub(crate) fn f4_offset_coefficients(c: &[Int; 6], f4: &Int) -> [Int; 3] {
    let (g, coeffs) = bezout_all(&c[..3]);
    if g.is_zero() {
        return [Int::zero(), Int::zero(), Int::zero()];
    }
    let q = (f4 - f4.mod_floor(&g)) / &g;
    let [a, b, c]: [Int; 3] = coeffs.try_into().expect("three coefficients");
    [a * &q, b * &q, c * &q]
}

/// `gcd(c1c4 - c2c5, c1c4 - c3c6, a·c5c6 + b·c4c6 + c·c4c5)` over a basis of
/// the solutions of `a·c1 + b·c2 + c·c3 = 0`.
fn theta_modulus(c: &[Int; 6]) -> Int {
    let [c1, c2, c3, c4, c5, c6] = c;
    let row = IntMatrix::from_rows(vec![vec![c1.clone(), c2.clone(), c3.clone()]]).expect("1x3");
    let kernel = solve_diophantine(&row, &[Int::zero()]).expect("1 row").expect("homogeneous").kernel_basis;
    let mut parts = vec![c1 * c4 - c2 * c5, c1 * c4 - c3 * c6];
    parts.extend(kernel.iter().map(|v| &v[0] * c5 * c6 + &v[1] * c4 * c6 + &v[2] * c4 * c5));
    gcd_all(&parts)
}
