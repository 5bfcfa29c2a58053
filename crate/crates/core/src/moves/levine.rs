use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{bezout_all, gcd_all, Int};
use crate::error::{Error, Result};
use crate::form::{ClasperForm, LevineForm};

use super::{apply_word, Generator, MoveWord};

/// Clasper form of a Levine tuple.
pub fn levine_to_clasper(t: &LevineForm) -> ClasperForm {
    let e = &t.e;
    ClasperForm {
        c: [-&t.l, -&t.r, -&t.k, -&e[0], -&e[1], -&e[2]],
        f: [-&e[5], e[4].clone(), -&e[3], t.d.clone()],
        t: [&e[6] + &e[7], -&e[6]],
    }
}

/// Levine tuple of a clasper form, together with the word that first moves
/// `f4` into `[0, gcd*(c1, c2, c3))`. Reading off the moved form inverts
/// [`levine_to_clasper`] exactly.
pub fn clasper_to_levine(l: &ClasperForm) -> (LevineForm, MoveWord) {
    let [c1, c2, c3, ..] = &l.c;
    let g = gcd_all([c1, c2, c3]);
    let mut word = MoveWord::new();
    if !g.is_zero() {
        let f4 = &l.f[3];
        let shift = f4.mod_floor(&g) - f4;
        let q = shift / &g;
        // ψ21 moves f4 by -c1, ψ12 by +c2, ψ23 by +c3
        let (_, coeffs) = bezout_all(&[-c1, c2.clone(), c3.clone()]);
        word.push(Generator::PSI21, &coeffs[0] * &q);
        word.push(Generator::PSI12, &coeffs[1] * &q);
        word.push(Generator::PSI23, &coeffs[2] * &q);
    }
    let m = apply_word(l, &word);
    let [c1, c2, c3, c4, c5, c6] = &m.c;
    let [f1, f2, f3, f4] = &m.f;
    let [t1, t2] = &m.t;
    let levine = LevineForm {
        k: -c3,
        l: -c1,
        r: -c2,
        d: f4.clone(),
        e: [-c4, -c5, -c6, -f3, f2.clone(), -f1, -t2, t1 + t2],
    };
    (levine, word)
}

/// One of Levine's relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Phi {
    Phi1,
    Phi2,
    Phi3,
    Phi4,
    Phi5,
    /// Requires `a*k - b*r + c*l = 0`.
    Phi6 { a: Int, b: Int, c: Int },
}

impl fmt::Display for Phi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phi::Phi1 => f.write_str("Φ1"),
            Phi::Phi2 => f.write_str("Φ2"),
            Phi::Phi3 => f.write_str("Φ3"),
            Phi::Phi4 => f.write_str("Φ4"),
            Phi::Phi5 => f.write_str("Φ5"),
            Phi::Phi6 { a, b, c } => write!(f, "Φ6({a},{b},{c})"),
        }
    }
}

/// Add the relation's row to `(e4, .., e8)`. Row entries are evaluated on
/// the input tuple.
pub fn phi_move(t: &LevineForm, which: &Phi) -> Result<LevineForm> {
    let LevineForm { k, l, r, d, e } = t;
    let z = Int::zero();
    let row: [Int; 5] = match which {
        Phi::Phi1 => [k.clone(), r.clone(), z.clone(), d.clone(), -d],
        Phi::Phi2 => [-k, z.clone(), l.clone(), -d, z.clone()],
        Phi::Phi3 => [-&e[0], z.clone(), e[2].clone(), e[4].clone(), z.clone()],
        Phi::Phi4 => [e[1].clone(), e[2].clone(), z.clone(), e[5].clone(), -&e[5]],
        Phi::Phi5 => [z.clone(), -&e[0], -&e[1], z.clone(), e[3].clone()],
        Phi::Phi6 { a, b, c } => {
            if !(a * k - b * r + c * l).is_zero() {
                return Err(Error::Constraint(format!("{which}: a*k - b*r + c*l must vanish for k={k}, l={l}, r={r}")));
            }
            [c * &e[1] - b * &e[0], -(a * &e[0]), z.clone(), a * &e[3], -(a * b * &e[0]) - c * &e[5] + b * &e[4]]
        }
    };
    let mut out = t.clone();
    for (slot, add) in out.e[3..].iter_mut().zip(row) {
        *slot += add;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ints;

    #[test]
    fn zero_maps_to_zero() {
        assert_eq!(levine_to_clasper(&LevineForm::default()), ClasperForm::zero());
        let (lv, w) = clasper_to_levine(&ClasperForm::zero());
        assert_eq!(lv, LevineForm::default());
        assert!(w.is_empty());
    }

    #[test]
    fn displayed_map() {
        let t = LevineForm::from_i64(1, 2, 3, 0, [4, 5, 6, 7, 8, 9, 10, 11]);
        assert_eq!(
            levine_to_clasper(&t),
            ClasperForm::from_i64([-2, -3, -1, -4, -5, -6], [-9, 8, -7, 0], [21, -10])
        );
    }

    #[test]
    fn normalizes_f4() {
        let l = ClasperForm::from_i64([2, 4, 6, 0, 0, 0], [0, 0, 0, 7], [0, 0]);
        let (lv, w) = clasper_to_levine(&l);
        assert_eq!(lv.d, Int::from(1));
        assert!(!w.is_empty());
        assert!(lv.is_normalized());
        assert_eq!(levine_to_clasper(&lv), apply_word(&l, &w));
    }

    #[test]
    fn infinite_gcd_keeps_f4() {
        let l = ClasperForm::from_i64([0, 0, 0, 1, 1, 1], [0, 0, 0, -5], [0, 0]);
        let (lv, w) = clasper_to_levine(&l);
        assert_eq!(lv.d, Int::from(-5));
        assert!(w.is_empty());
    }

    #[test]
    fn phi_rows() {
        let mut t = LevineForm::from_i64(0, 0, 0, 0, [0, 1, 2, 0, 0, 5, 0, 0]);
        let out = phi_move(&t, &Phi::Phi4).unwrap();
        assert_eq!(out.e, ints([0, 1, 2, 1, 2, 5, 5, -5]));

        t = LevineForm::from_i64(2, 0, 3, 1, [0; 8]);
        let out = phi_move(&t, &Phi::Phi1).unwrap();
        assert_eq!(out.e, ints([0, 0, 0, 2, 3, 0, 1, -1]));

        let t = LevineForm::from_i64(3, 1, 4, 1, [1, 5, 9, 2, 6, 5, 3, 5]);
        let zero = Phi::Phi6 { a: 0.into(), b: 0.into(), c: 0.into() };
        assert_eq!(phi_move(&t, &zero).unwrap(), t);
    }

    #[test]
    fn phi6_constraint() {
        let t = LevineForm::from_i64(1, 1, 1, 0, [0; 8]);
        let bad = Phi::Phi6 { a: 1.into(), b: 0.into(), c: 0.into() };
        assert!(matches!(phi_move(&t, &bad), Err(Error::Constraint(_))));
        let ok = Phi::Phi6 { a: 1.into(), b: 1.into(), c: 0.into() };
        assert!(phi_move(&t, &ok).is_ok());
    }
}
