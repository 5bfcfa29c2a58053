//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use linkhom::decide::{build_move_matrix, decide_equiv, stabilizer_t_basis, word_t_effect, FailureStage};
use linkhom::intlin::{lattice_reduce, smith_normal_form, solve_diophantine, IntMatrix};
use linkhom::invariants::{applicability, case_invariants, milnor_profile, sublink3, Family, InvariantValue};
use linkhom::moves::{
    apply_word, commutator_t_effect, commutator_word, levine_to_clasper, phi_move, CommutatorPair,
    Generator, MoveWord, Phi,
};
use linkhom::oracle::{bounded_bfs, verify_certificate, FieldBounds, InstanceGenerator, SearchConfig};
use linkhom::{canonical_form, ClasperForm, Int};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const G21: Generator = Generator::PSI21;
const G41: Generator = Generator::PSI41;
const G12: Generator = Generator::PSI12;
const G32: Generator = Generator::PSI32;
const G43: Generator = Generator::PSI43;
const G23: Generator = Generator::PSI23;
const G34: Generator = Generator::PSI34;
const G14: Generator = Generator::PSI14;

fn l1() -> ClasperForm {
    ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [0, 0, 0, 0], [0, 0])
}

fn l2() -> ClasperForm {
    ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [-2, 0, 2, 1], [1, 1])
}

fn l3() -> ClasperForm {
    ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [-2, 0, 2, 1], [2, 0])
}

fn milnor_blind(f2: i64) -> ClasperForm {
    ClasperForm::from_i64([-1, -4, -4, -1, -1, -1], [1, f2, 4, 16], [0, 0])
}

fn v(xs: &[i64]) -> Vec<Int> {
    xs.iter().map(|&x| Int::from(x)).collect()
}

fn criterion_1() -> Check {
    let verdict = decide_equiv(&l1(), &l2());
    ensure!(verdict.stage() == Some(FailureStage::TUnreachable), "verdict {verdict:?}");
    Ok("not equivalent at T_UNREACHABLE".into())
}

fn criterion_2() -> Check {
    let a = build_move_matrix(&l1().c);
    let expected = IntMatrix::from_i64(&[
        &[0, 0, 0, 2, 2, -2, -1, 0],
        &[0, 2, 0, 0, -4, 0, 2, -2],
        &[2, -2, -4, 0, 0, 0, 0, 2],
        &[-1, 0, 2, -2, 0, 2, 0, 0],
    ]);
    ensure!(a == expected, "move matrix differs:\n{a}");

    let snf = smith_normal_form(&a);
    ensure!(snf.elementary_divisors() == v(&[1, 1, 2]), "divisors {:?}", snf.elementary_divisors());
    ensure!(snf.diagonal()[3] == Int::from(0), "fourth diagonal entry nonzero");
    ensure!(snf.p.mul(&a).unwrap().mul(&snf.q).unwrap() == snf.d, "P·A·Q != D");

    let sol = solve_diophantine(&a, &v(&[-2, 0, 2, 1])).unwrap().ok_or("system unsolvable")?;
    ensure!(sol.kernel_basis.len() == 5, "kernel rank {}", sol.kernel_basis.len());
    for h in [
        [-2, -2, 0, 1, 0, 0, 2, 0],
        [0, 0, 0, 0, 1, 0, 2, 0],
        [2, 2, 0, 0, 0, 1, -2, 0],
        [2, 0, 1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0, 1],
    ] {
        ensure!(lattice_reduce(&v(&h), &sol.kernel_basis).unwrap().in_lattice, "{h:?} outside kernel lattice");
    }
    let moved = apply_word(&l1(), &MoveWord::from_i64(&[(G21, 1), (G23, 1)]));
    let expected = ClasperForm::from_i64([1, 2, 2, 4, 2, 2], [-2, 0, 2, 1], [0, -2]);
    ensure!(moved == expected, "ψ21 then ψ23 gives {moved}");
    Ok("matrix, divisors (1,1,2), five kernel vectors, two-step image all exact".into())
}

fn criterion_3() -> Check {
    let verdict = decide_equiv(&l1(), &l3());
    let cert = verdict.certificate().ok_or_else(|| format!("verdict {verdict:?}"))?;
    ensure!(verify_certificate(&l1(), cert, &l3()), "computed certificate fails");
    let mut witness = MoveWord::from_i64(&[(G21, 1), (G23, 1)]);
    witness.extend(&commutator_word(G43, G14).unwrap());
    witness.extend(&commutator_word(G14, G21).unwrap().repeat(2));
    ensure!(verify_certificate(&l1(), &witness, &l3()), "reference witness fails: {}", apply_word(&l1(), &witness));
    Ok(format!("certificate {} and the reference witness both verify", cert.pretty()))
}

fn criterion_4() -> Check {
    let mut rng = InstanceGenerator::new(4);
    let b = FieldBounds { c: 50, f: 50, t: 50, ..Default::default() };
    for _ in 0..100 {
        let l = rng.form(&b);
        let [c1, c2, c3, c4, c5, c6] = l.c.clone();
        let closed = [
            [Int::from(0), c1],
            [c2.clone(), -c2],
            [c3, Int::from(0)],
            [Int::from(0), c4],
            [-c5.clone(), c5],
            [c6, Int::from(0)],
        ];
        for (pair, expected) in CommutatorPair::ALL.into_iter().zip(closed) {
            let out = apply_word(&l, &pair.word());
            let dt = [&out.t[0] - &l.t[0], &out.t[1] - &l.t[1]];
            ensure!(out.c == l.c && out.f == l.f, "{pair} moved c or f at {l}");
            ensure!(dt == expected, "{pair} at {l}: {dt:?} vs {expected:?}");
            ensure!(commutator_t_effect(&l.c, pair) == expected, "closed form disagrees for {pair}");
        }
    }
    Ok("600 commutator applications match the closed forms".into())
}

fn criterion_5() -> Check {
    let c = l2().c;
    let f = l2().f;
    let words = [
        MoveWord::from_i64(&[(G21, -2), (G41, -2), (G32, 1), (G34, 2)]),
        MoveWord::from_i64(&[(G43, 1), (G34, 2)]),
        MoveWord::from_i64(&[(G21, 2), (G41, 2), (G23, 1), (G34, -2)]),
        MoveWord::from_i64(&[(G21, 2), (G12, 1)]),
        MoveWord::from_i64(&[(G41, 1), (G14, 1)]),
    ];
    let expected = [[0, 4], [0, 0], [0, 0], [0, 0], [0, 0]];
    let comm: Vec<Vec<Int>> = CommutatorPair::ALL.iter().map(|p| commutator_t_effect(&c, *p).to_vec()).collect();
    let mut effects = Vec::new();
    for (i, (w, row)) in words.iter().zip(expected).enumerate() {
        let start = ClasperForm::new(c.clone(), f.clone(), Default::default());
        ensure!(apply_word(&start, w).f == f, "kernel word {} moves f", i + 1);
        let e = word_t_effect(&c, &f, w);
        let diff = [&e[0] - Int::from(row[0]), &e[1] - Int::from(row[1])];
        ensure!(lattice_reduce(&diff, &comm).unwrap().in_lattice, "word {}: effect {e:?} not ≡ {row:?}", i + 1);
        effects.push(format!("({},{})", e[0], e[1]));
    }
    // the commutator lattice is exactly {(x, y): x even}
    ensure!(lattice_reduce(&v(&[2, 0]), &comm).unwrap().in_lattice, "(2,0) missing");
    ensure!(lattice_reduce(&v(&[0, 1]), &comm).unwrap().in_lattice, "(0,1) missing");
    ensure!(!lattice_reduce(&v(&[1, 0]), &comm).unwrap().in_lattice, "(1,0) present");
    let basis = stabilizer_t_basis(&c, &f);
    ensure!(!basis.contains(&[Int::from(1), Int::from(3)]), "(1,3) reachable");
    Ok(format!("effects {} congruent to the reference rows; (1,3) excluded", effects.join(" ")))
}

fn theta(l: &ClasperForm) -> Result<linkhom::Residue, String> {
    let r = case_invariants(l, Family::T41_4).map_err(|e| e.to_string())?;
    match r.get("theta") {
        Some(InvariantValue::Residue(x)) => Ok(x.clone()),
        other => Err(format!("theta missing: {other:?}")),
    }
}

fn criterion_6() -> Check {
    let (h1, h2) = (milnor_blind(4), milnor_blind(8));
    ensure!(milnor_profile(&h1) == milnor_profile(&h2), "profiles differ");
    ensure!(applicability(&h1).contains(&Family::T41_4), "family (4) does not apply");
    let (a, b) = (theta(&h1)?, theta(&h2)?);
    ensure!(a.modulus() == &Int::from(3) && b.modulus() == &Int::from(3), "moduli {} {}", a.modulus(), b.modulus());
    let diff = (a.value() - b.value() + Int::from(3)) % Int::from(3);
    ensure!(diff == Int::from(1) || diff == Int::from(2), "θ difference {diff}");
    let verdict = decide_equiv(&h1, &h2);
    ensure!(verdict.stage() == Some(FailureStage::FUnreachable), "verdict {verdict:?}");
    Ok(format!("equal profiles, θ = {a} vs {b}, F_UNREACHABLE"))
}

fn criterion_7(pairs: &mut Vec<(ClasperForm, ClasperForm)>) -> Check {
    let mut rng = InstanceGenerator::new(7);
    let b = FieldBounds { c: 10, f: 20, t: 20, word_len: 30, power: 3 };
    let mut longest = 0;
    for _ in 0..10_000 {
        let l = rng.form(&b);
        let w = rng.word(&b);
        let target = apply_word(&l, &w);
        let verdict = decide_equiv(&l, &target);
        let cert = verdict.certificate().ok_or_else(|| format!("{l} -> {target} via {w}: {verdict:?}"))?;
        ensure!(verify_certificate(&l, cert, &target), "certificate fails for {l}");
        longest = longest.max(cert.len());
        pairs.push((l, target));
    }
    Ok(format!("10000 orbit pairs decided equivalent, all certificates verify (longest {longest} steps)"))
}

fn criterion_8() -> Check {
    let mut rng = InstanceGenerator::new(8);
    let b = FieldBounds { c: 3, f: 4, t: 4, word_len: 3, power: 1 };
    let cfg = SearchConfig { max_depth: 3, coord_bound: 24, seed: 8 };
    let mut found = 0;
    for _ in 0..100 {
        let l = rng.form(&b);
        let len = 1 + rng.index(3);
        let w = rng.word_of_len(len, 1);
        let target = apply_word(&l, &w);
        if let Some(witness) = bounded_bfs(&l, &target, &cfg) {
            found += 1;
            ensure!(verify_certificate(&l, &witness, &target), "search witness fails for {l}");
            ensure!(decide_equiv(&l, &target).is_equivalent(), "search found {witness} but decision says no");
        }
    }
    ensure!(found > 0, "search never succeeded");
    Ok(format!("{found}/100 searches found witnesses; all verify and agree"))
}

/// A second tuple with the same `c`, in the same family: an orbit image,
/// a small perturbation of one or two coordinates, or a fresh draw.
fn partner(rng: &mut InstanceGenerator, family: Family, l: &ClasperForm, b: &FieldBounds) -> Option<ClasperForm> {
    match rng.index(3) {
        0 => {
            let len = 1 + rng.index(12);
            let w = rng.word_of_len(len, 2);
            Some(apply_word(l, &w))
        }
        1 => {
            for _ in 0..20 {
                let mut m = l.clone();
                for _ in 0..1 + rng.index(2) {
                    let i = rng.index(6);
                    let delta = Int::from(1 + rng.index(3) as i64) * if rng.coin() { 1 } else { -1 };
                    if i < 4 {
                        m.f[i] += delta;
                    } else {
                        m.t[i - 4] += delta;
                    }
                }
                if family.applies(&m) {
                    return Some(m);
                }
            }
            None
        }
        _ => rng.family_form_with_c(family, &l.c, b, 50),
    }
}

fn criterion_9() -> Check {
    let mut rng = InstanceGenerator::new(9);
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    for family in Family::ALL {
        let b = match family {
            Family::T41_1 => FieldBounds { c: 0, f: 4, t: 12, ..Default::default() },
            Family::T41_4 | Family::T41_5 => FieldBounds { c: 5, f: 8, t: 8, ..Default::default() },
            _ => FieldBounds { c: 6, f: 8, t: 8, ..Default::default() },
        };
        let (mut same, mut different, mut bad) = (0, 0, 0);
        let mut example = None;
        let mut n = 0;
        while n < 500 {
            let l = rng.family_form(family, &b);
            let Some(m) = partner(&mut rng, family, &l, &b) else { continue };
            n += 1;
            let equal = case_invariants(&l, family).unwrap() == case_invariants(&m, family).unwrap();
            let equiv = decide_equiv(&l, &m).is_equivalent();
            if equal != equiv {
                bad += 1;
                example.get_or_insert((l.clone(), m.clone(), equal));
            }
            if equiv {
                same += 1;
            } else {
                different += 1;
            }
        }
        summary.push(format!("{family} {same}/{different}"));
        if bad > 0 {
            let (l, m, equal) = example.unwrap();
            failures.push(format!("{family}: {bad} disagreements, e.g. {l} vs {m} (invariants equal: {equal})"));
        }
    }
    ensure!(failures.is_empty(), "{}", failures.join("; "));
    Ok(format!("invariants match the decision on 5000 pairs (equivalent/inequivalent: {})", summary.join(", ")))
}

fn phi_params(rng: &mut InstanceGenerator, t: &linkhom::LevineForm) -> Phi {
    // (a, b, c) with a·k - b·r + c·l = 0
    let row = IntMatrix::from_rows(vec![vec![t.k.clone(), -&t.r, t.l.clone()]]).unwrap();
    let kernel = solve_diophantine(&row, &[Int::from(0)]).unwrap().unwrap().kernel_basis;
    let mut abc = [Int::from(0), Int::from(0), Int::from(0)];
    for basis in kernel {
        let k = rng.int(2);
        for (x, y) in abc.iter_mut().zip(&basis) {
            *x += &k * y;
        }
    }
    let [a, b, c] = abc;
    Phi::Phi6 { a, b, c }
}

fn criterion_10(pairs: &[(ClasperForm, ClasperForm)]) -> Check {
    let mut rng = InstanceGenerator::new(10);
    let b = FieldBounds { c: 6, f: 10, t: 10, ..Default::default() };
    for row in 0..6 {
        for _ in 0..200 {
            let t = rng.levine(&b);
            let phi = match row {
                0 => Phi::Phi1,
                1 => Phi::Phi2,
                2 => Phi::Phi3,
                3 => Phi::Phi4,
                4 => Phi::Phi5,
                _ => phi_params(&mut rng, &t),
            };
            let moved = phi_move(&t, &phi).map_err(|e| e.to_string())?;
            let (x, y) = (levine_to_clasper(&t), levine_to_clasper(&moved));
            ensure!(decide_equiv(&x, &y).is_equivalent(), "{phi} on {t} leaves the orbit");
        }
    }

    let wb = FieldBounds { c: 10, f: 20, t: 20, word_len: 20, power: 3 };
    for _ in 0..1000 {
        let l = rng.form(&wb);
        let w = rng.word(&wb);
        ensure!(canonical_form(&l) == canonical_form(&apply_word(&l, &w)), "canonical form moves along the orbit of {l}");
    }

    for (a, b) in pairs {
        for drop in 1..=4 {
            ensure!(sublink3(a, drop).unwrap() == sublink3(b, drop).unwrap(), "sublink {drop} differs for {a} and {b}");
        }
    }
    Ok(format!("1200 relation moves stay in orbit; 1000 canonical forms constant; sublinks agree on {} pairs", pairs.len()))
}

fn main() -> ExitCode {
    let mut pairs = Vec::new();
    let mut results: Vec<(u8, &str, Check, f64)> = Vec::new();
    let mut record = |n: u8, name: &'static str, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let r = f();
        results.push((n, name, r, start.elapsed().as_secs_f64()));
    };
    record(1, "worked pair is separated by t", &mut criterion_1);
    record(2, "worked pair internals", &mut criterion_2);
    record(3, "worked pair with matching t", &mut criterion_3);
    record(4, "commutator table", &mut criterion_4);
    record(5, "kernel-word effects and the t obstruction", &mut criterion_5);
    record(6, "equal Milnor profiles, distinct classes", &mut criterion_6);
    record(7, "certificate soundness sweep", &mut || criterion_7(&mut pairs));
    record(8, "agreement with bounded search", &mut criterion_8);
    record(9, "invariant families are complete", &mut criterion_9);
    record(10, "structural consistency", &mut || criterion_10(&pairs));

    let mut all = true;
    for (n, name, r, secs) in &results {
        match r {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail} [{secs:.2}s]"),
            Err(why) => {
                all = false;
                println!("criterion {n:>2} FAIL  {name}: {why} [{secs:.2}s]");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
