//! Worked examples checked against independent computations.

use braidsig::algebra::{form_signature, image_basis, kernel_basis, laurent_eval, subspace_intersection, QuadForm};
use braidsig::burau::RepConfig;
use braidsig::lissajous::{
    bezout_a, braid_from_parametrization, classify, lambda_seq, lissajous_braid, power_signature, LissajousClass,
};
use braidsig::meyer::{meyer_cocycle, meyer_space, Sl2};
use braidsig::signature::{
    check_big_entries, gg_signature, quasipositive_invariants, seifert_matrix, seifert_signature_oracle,
};
use braidsig::walks::{
    finite_step_distribution, finite_walk_tv, hitting_table, reduce_mod_p, sp_order, step_distribution, zero_density,
    GenMeasure, IntegralBurau, MatrixPredicate,
};
use braidsig::*;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

fn w(text: &str, n: usize) -> BraidWord {
    parse_word(text, n).unwrap()
}

fn m(dim: usize, e: &[i64]) -> IntMatrix {
    IntMatrix::from_i64(dim, e).unwrap()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn qv(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| q(x, 1)).collect()
}

/// `det(V − tVᵀ)` straight from a Seifert matrix.
fn seifert_alexander(word: &BraidWord) -> LaurentPoly {
    let v = seifert_matrix(word);
    let lv = v.map(|x| LaurentPoly::constant(x.clone()));
    let t = LaurentPoly::t();
    let tvt = lv.transpose().map(|x| &t * x);
    let det = lv.try_sub(&tvt).unwrap().det();
    if v.dim() == 0 {
        LaurentPoly::one()
    } else {
        det
    }
}

// ---- braid-core

#[test]
fn word_parsing_examples() {
    assert!(w("1 -1", 3).is_empty());
    assert_eq!(w("1 2 1 2", 3).letters(), &[1, 2, 1, 2]);
    assert_eq!(w("2 -1 2 -1 2 1 -2 1 -2 1", 3).len(), 10);
    assert!(parse_word("0", 3).is_err());
    assert!(parse_word("3", 3).is_err());
    assert!(parse_word("1", 1).is_err());
}

#[test]
fn group_operation_examples() {
    assert_eq!(w("1 2", 3).inverse(), w("-2 -1", 3));
    assert_eq!(w("2", 3).conjugate(&w("1", 3)).unwrap(), w("1 2 -1", 3));
    let x = w("1 -2 2 1 2", 3);
    assert!(x.concat(&x.inverse()).unwrap().is_empty());
    assert!(x.concat(&w("1", 4)).is_err());
}

#[test]
fn permutation_examples() {
    assert_eq!(w("1", 3).permutation().cycle_type(), vec![2, 1]);
    assert_eq!(w("", 3).permutation(), Permutation::identity(3));
    // σ1 then σ2: 0 → 1 → 2, 1 → 0, 2 → 1 twice over gives a 3-cycle.
    assert_eq!(w("1 2 1 2", 3).permutation().cycle_type(), vec![3]);
    assert_eq!(w("", 3).closure_components(), 3);
    assert_eq!(w("1", 3).closure_components(), 2);
    assert_eq!(w("2 -1 2 1 -2 1", 3).closure_components(), 3);
}

// ---- exact-algebra

#[test]
fn evaluation_examples() {
    let p = LaurentPoly::from_coeffs(-1, &[1, -1, 1]);
    assert_eq!(laurent_eval(&p, &q(-1, 1)).unwrap(), q(-3, 1));
    assert_eq!(laurent_eval(&LaurentPoly::t(), &q(5, 1)).unwrap(), q(5, 1));
    assert_eq!(laurent_eval(&LaurentPoly::zero(), &q(7, 3)).unwrap(), q(0, 1));
    assert!(laurent_eval(&p, &q(0, 1)).is_err());
}

#[test]
fn matrix_examples() {
    assert_eq!(m(2, &[1, 0, -1, 1]).det(), BigInt::one());
    let h = m(2, &[0, 1, -1, 0]);
    assert_eq!(&h * &h, m(2, &[-1, 0, 0, -1]));
    assert_eq!(IntMatrix::identity(3).inverse().unwrap(), IntMatrix::identity(3));
    assert!(m(2, &[1, 2, 2, 4]).inverse().is_err());
}

#[test]
fn subspace_examples() {
    let j3 = RepConfig::new(4).unwrap().intersection_form().to_rational();
    assert_eq!(kernel_basis(&j3), Subspace::span(3, vec![qv(&[1, 0, 1])]).unwrap());
    let s1 = m(2, &[1, 0, -1, 1]).to_rational();
    let e2 = Subspace::span(2, vec![qv(&[0, 1])]).unwrap();
    let e1 = Subspace::span(2, vec![qv(&[1, 0])]).unwrap();
    assert_eq!(image_basis(&s1.minus_identity()), e2);
    assert!(kernel_basis(&RatMatrix::identity(3)).is_zero());
    assert!(subspace_intersection(&e2, &e1).unwrap().is_zero());
    assert_eq!(subspace_intersection(&e1, &e1).unwrap(), e1);
    assert_eq!(subspace_intersection(&Subspace::full(2), &e1).unwrap(), e1);
}

#[test]
fn signature_examples() {
    let f = |e: &[i64], d| QuadForm::from_int(&m(d, e)).unwrap();
    assert_eq!(form_signature(&f(&[-2, -1, -1, -2], 2)), -2);
    assert_eq!(form_signature(&f(&[0], 1)), 0);
    assert_eq!(form_signature(&f(&[1, 0, 0, -1], 2)), 0);
}

// ---- burau-rep

#[test]
fn burau_examples() {
    assert!(burau_t(&w("", 3)).unwrap().is_identity());
    assert_eq!(burau_t(&w("1", 3)).unwrap().eval_int(-1).unwrap(), m(2, &[1, 0, -1, 1]));
    assert_eq!(burau_minus1(&w("1 2 1 1 2 1", 3)).unwrap(), m(2, &[-1, 0, 0, -1]));
    assert!(burau_minus1(&w("1 2 1", 3).pow(4)).unwrap().is_identity());
    // s1 · s2 by hand.
    assert_eq!(burau_minus1(&w("1 2", 3)).unwrap(), m(2, &[1, 1, -1, 0]));
    let s1 = burau_minus1(&w("1", 3)).unwrap();
    assert_eq!(burau_minus1(&w("2", 3)).unwrap(), s1.inverse().unwrap().transpose());
}

#[test]
fn burau_determinant_is_a_unit() {
    let d = burau_t(&w("1 -2 3 3 -1 2", 4)).unwrap().det();
    assert_eq!(d.terms().count(), 1);
    let (_, c) = d.terms().next().unwrap();
    assert!(c == &BigInt::one() || c == &-BigInt::one());
}

#[test]
fn quotient_examples() {
    let cfg = RepConfig::new(4).unwrap();
    assert_eq!(cfg.symplectic_quotient(&IntMatrix::identity(3)).unwrap(), IntMatrix::identity(2));
    let a = cfg.burau_minus1(&w("1", 4)).unwrap();
    let qa = cfg.symplectic_quotient(&a).unwrap();
    assert_eq!(qa.det(), BigInt::one());
    let b = cfg.burau_minus1(&w("-3", 4)).unwrap();
    let prod = cfg.symplectic_quotient(&(&a * &b)).unwrap();
    assert_eq!(prod, &qa * &cfg.symplectic_quotient(&b).unwrap());
    let form = cfg.quotient_form().unwrap();
    assert_eq!(&(&prod.transpose() * &form) * &prod, form);
}

#[test]
fn entry_polynomial_examples() {
    let m11 = EntryPolynomial::parse("m11", 2).unwrap();
    assert_eq!(m11.eval(&m(2, &[1, 0, -1, 1])).unwrap(), BigInt::one());
    assert_eq!(m11.eval(&m(2, &[0, 1, -1, 0])).unwrap(), BigInt::zero());
    let det = EntryPolynomial::parse("m11*m22 - m12*m21 - 1", 2).unwrap();
    for text in ["1 2 -1", "2 2 2 -1 1", "1 -2 1 -2 1 1"] {
        assert_eq!(det.eval(&burau_minus1(&w(text, 3)).unwrap()).unwrap(), BigInt::zero());
    }
    assert!(m11.eval(&IntMatrix::identity(3)).is_err());
}

#[test]
fn alexander_at_minus_one_examples() {
    // (s1 s2)² = [[0, 1], [-1, -1]] and det([[-1, 1], [-1, -2]]) = 3.
    assert_eq!(burau_minus1(&w("1 2 1 2", 3)).unwrap(), m(2, &[0, 1, -1, -1]));
    assert_eq!(alexander_at_minus1(&w("1 2 1 2", 3)).unwrap(), BigInt::from(3));
    assert_eq!(alexander_at_minus1(&w("1 -2 1 -2", 3)).unwrap(), BigInt::from(-5));
    assert_eq!(alexander_at_minus1(&w("1 2", 3)).unwrap(), BigInt::one());
    assert!(alexander_at_minus1(&w("1 2 3", 4)).is_err());
}

#[test]
fn alexander_matches_seifert_oracle() {
    for (text, n) in [
        ("1 2 1 2", 3),
        ("1 -2 1 -2", 3),
        ("1 2", 3),
        ("1 1 1", 2),
        ("1 1 1 1 1", 2),
        ("1 2 3 1 2 3 1 2 3 1 2 3 1 2 3", 4),
        ("1 -2 3 -4 1 -2 3 -4", 5),
        ("1 1 2 -1 2 2 -3 2 3 4", 5),
    ] {
        let word = w(text, n);
        let burau = alexander_poly(&word).unwrap();
        let seifert = seifert_alexander(&word);
        assert!(burau.equal_up_to_unit(&seifert), "{text}: {burau} vs {seifert}");
    }
    assert_eq!(alexander_poly(&w("1 2 1 2", 3)).unwrap(), LaurentPoly::from_coeffs(-1, &[1, -1, 1]));
    assert_eq!(alexander_poly(&w("1 -2 1 -2", 3)).unwrap(), LaurentPoly::from_coeffs(-1, &[-1, 3, -1]));
    assert!(alexander_poly(&w("1 2", 3)).unwrap().is_one());
    assert!(alexander_poly(&w("1", 3)).is_err());
}

// ---- meyer-signature

#[test]
fn meyer_examples() {
    let s1 = Sl2::from_entries([1, 0, -1, 1]).unwrap();
    let s2 = Sl2::from_entries([1, 1, 0, 1]).unwrap();
    let g = s1.mul(&s2);
    assert!(meyer_space(&s1, &s2).is_zero());
    assert_eq!(meyer_space(&g, &g), Subspace::full(2));
    assert!(meyer_space(&Sl2::identity(), &g).is_zero());
    assert_eq!(meyer_cocycle(&s1, &s2), 0);
    let h = s1.inverse().mul(&s2);
    for a in 1..=3 {
        for b in 1..=3 {
            assert_eq!(meyer_cocycle(&h.pow(a), &h.pow(b)), 0);
        }
    }
    // Gram of Meyer(g, g) is a multiple of x² + xy + y².
    let gram = braidsig::meyer::meyer_form(&g, &g).unwrap();
    let e = gram.gram().entries();
    assert_eq!(&e[1] * q(2, 1), e[0]);
    assert_eq!(e[0], e[3]);
    assert_eq!(meyer_cocycle(&g, &g).abs(), 2);
}

#[test]
fn gg_signature_examples() {
    assert_eq!(gg_signature(&w("1", 3)).unwrap().value, 0);
    assert_eq!(gg_signature(&w("1 2 1 2", 3)).unwrap().value, -2);
    assert_eq!(gg_signature(&w("1 -2 1 -2", 3)).unwrap().value, 0);
    let r = gg_signature(&w("1 2 1 2", 3)).unwrap();
    assert_eq!((r.length, r.components), (4, 1));
    assert!(gg_signature(&w("1", 2)).is_err());
}

#[test]
fn seifert_oracle_examples() {
    assert_eq!(seifert_signature_oracle(&w("1 2", 3)), 0);
    assert_eq!(seifert_matrix(&w("1 1 1", 2)), m(2, &[-1, 1, 0, -1]));
    assert_eq!(seifert_signature_oracle(&w("1 1 1", 2)), -2);
    assert_eq!(seifert_signature_oracle(&w("1 2 1 2", 3)), -2);
}

#[test]
fn quasipositive_examples() {
    for n in 1..8u64 {
        let beta = w("2 -1 1 2 2", 3);
        let x = w("1", 3).conjugate(&beta).unwrap().concat(&w("1", 3)).unwrap().pow(n as i64);
        let inv = quasipositive_invariants(2 * n, 3, x.closure_components() == 1);
        assert_eq!(inv.chi4, 3 - 2 * n as i64);
        if let Some(g4) = inv.g4 {
            assert_eq!(g4, n as i64 - 1);
        }
    }
    assert_eq!(quasipositive_invariants(0, 3, false).chi4, 3);
}

#[test]
fn big_entry_examples() {
    assert!(!check_big_entries(&w("", 3)).unwrap());
    let x = w("-1 2", 3).pow(5);
    assert_eq!(burau_minus1(&w("-1 2", 3)).unwrap(), m(2, &[1, 1, 1, 2]));
    assert_eq!(burau_minus1(&x).unwrap(), m(2, &[1, 1, 1, 2]).pow(5));
    assert!(check_big_entries(&x).unwrap());
}

// ---- walks

/// `μ^{⋆k}(X)` by listing all `4^k` words.
fn enumerate_hits(k: u32, pred: &MatrixPredicate) -> BigRational {
    let gens = [1, -1, 2, -2];
    let mut hits = 0u64;
    for code in 0..4u64.pow(k) {
        let mut c = code;
        let letters: Vec<i32> = (0..k)
            .map(|_| {
                let g = gens[(c % 4) as usize];
                c /= 4;
                g
            })
            .collect();
        if pred.test(&burau_minus1(&BraidWord::new(3, letters).unwrap()).unwrap()) {
            hits += 1;
        }
    }
    BigRational::new(BigInt::from(hits), BigInt::from(4u64.pow(k)))
}

#[test]
fn dp_matches_word_enumeration() {
    let mu = GenMeasure::uniform_generators(3).unwrap();
    for pred in [
        MatrixPredicate::Z11,
        MatrixPredicate::BigEntries,
        MatrixPredicate::PolyZero(EntryPolynomial::parse("m12", 2).unwrap()),
    ] {
        let table = hitting_table(&mu, &pred, 7).unwrap();
        for row in &table {
            assert_eq!(row.probability, enumerate_hits(row.step as u32, &pred), "{pred:?} step {}", row.step);
        }
    }
}

#[test]
fn walk_examples() {
    let mu = GenMeasure::uniform_generators(3).unwrap();
    let rep = IntegralBurau::new(3).unwrap();
    let d2 = step_distribution(&mu, &rep, 2).unwrap();
    assert_eq!(d2.probability(&IntMatrix::identity(2)), q(4, 16));
    let table = hitting_table(&mu, &MatrixPredicate::Z11, 3).unwrap();
    assert_eq!(table[1].probability, q(0, 1));
    assert_eq!(table[2].probability, q(0, 1));
    assert!((table[3].decimal() - 0.06).abs() <= 0.01);
}

#[test]
fn brute_force_group_orders() {
    for p in [3u64, 5, 7] {
        let mut count = 0u64;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d + p * p - b * c) % p == 1 {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(sp_order(1, p).unwrap(), BigUint::from(count));
    }
}

#[test]
fn reduction_examples() {
    assert!(reduce_mod_p(&m(2, &[-1, 0, 0, -1]), 5, true).unwrap().is_identity());
    assert_eq!(reduce_mod_p(&m(2, &[1, 0, -1, 1]), 3, false).unwrap().entries(), vec![1, 0, 2, 1]);
    for p in [5, 7, 11] {
        assert!(reduce_mod_p(&burau_minus1(&w("1 2 1", 3)).unwrap().pow(2), p, true).unwrap().is_identity());
    }
}

#[test]
fn density_examples() {
    let count = |p: u64, pick: fn(u64, u64, u64, u64) -> u64| {
        let (mut zeros, mut total) = (0i64, 0i64);
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    for d in 0..p {
                        if (a * d + p * p - b * c) % p == 1 {
                            total += 1;
                            if pick(a, b, c, d) == 0 {
                                zeros += 1;
                            }
                        }
                    }
                }
            }
        }
        q(zeros, total)
    };
    let m11 = EntryPolynomial::parse("m11", 2).unwrap();
    let m12 = EntryPolynomial::parse("m12", 2).unwrap();
    assert_eq!(zero_density(&m11, 1, 5).unwrap(), count(5, |a, _, _, _| a));
    assert_eq!(zero_density(&m11, 1, 5).unwrap(), q(1, 6));
    assert_eq!(zero_density(&m12, 1, 7).unwrap(), count(7, |_, b, _, _| b));
    assert_eq!(zero_density(&m12, 1, 7).unwrap(), q(1, 8));
    assert_eq!(zero_density(&EntryPolynomial::parse("det-1", 2).unwrap(), 1, 5).unwrap(), q(1, 1));
}

#[test]
fn finite_walk_examples() {
    let mu = GenMeasure::uniform_generators(3).unwrap();
    let report = finite_walk_tv(&mu, 7, true, 30).unwrap();
    assert_eq!(report.group_order, BigUint::from(168u32));
    assert!(report.generates);
    assert_eq!(report.tv[0], q(167, 168));
    assert!(report.tv.windows(2).all(|x| x[1] <= x[0]));
}

#[test]
fn integral_walk_pushes_forward_to_finite_walk() {
    let mu = GenMeasure::uniform_generators(3).unwrap();
    let rep = IntegralBurau::new(3).unwrap();
    for (p, projective) in [(5, false), (7, true)] {
        for k in [3, 6] {
            let exact = step_distribution(&mu, &rep, k).unwrap();
            let pushed = exact.map(|x| reduce_mod_p(x, p, projective).unwrap());
            let direct = finite_step_distribution(&mu, p, projective, k).unwrap();
            assert_eq!(pushed, direct);
        }
    }
}

// ---- lissajous

#[test]
fn bezout_examples() {
    assert_eq!(bezout_a(5).unwrap(), 1);
    assert_eq!(bezout_a(7).unwrap(), 6);
    assert!(bezout_a(15).is_err());
}

#[test]
fn lambda_examples() {
    // ⌊14k/5⌋ = 2, 5, 8, 11.
    assert_eq!(lambda_seq(5, 7).unwrap(), vec![1, -1, 1, -1]);
    assert_eq!(lambda_seq(7, 13).unwrap(), vec![1, 1, 1, -1, -1, -1]);
    assert_eq!(lambda_seq(11, 17).unwrap().iter().sum::<i32>(), 0);
}

#[test]
fn lissajous_braid_examples() {
    assert_eq!(lissajous_braid(5, 7).unwrap(), w("2 -1 2 -1 2 1 -2 1 -2 1", 3));
    assert_eq!(lissajous_braid(1, 1).unwrap(), w("2 1", 3));
    let s2s1 = burau_minus1(&w("2 1", 3)).unwrap().trace();
    for qt in [5u64, 7, 11, 13, 17] {
        let b = burau_minus1(&lissajous_braid(qt, qt + 6).unwrap()).unwrap();
        assert_eq!(b.trace(), s2s1);
    }
}

#[test]
fn classification_examples() {
    let c = classify(5, 7).unwrap();
    assert_eq!(c.p_matrix, burau_minus1(&w("2 -1", 3)).unwrap());
    assert_eq!(c.p_matrix, m(2, &[2, 1, 1, 1]));
    assert_eq!(c.class, LissajousClass::ZeroSignatureHyperbolic);
    let c = classify(7, 13).unwrap();
    assert_eq!(c.p_matrix, burau_minus1(&w("2 1 2", 3)).unwrap());
    assert_eq!(c.class, LissajousClass::TorusConjugate { h: 0 });
    assert!(classify(7, 14).is_err());
}

#[test]
fn power_signature_examples() {
    for n in [1, 2, 4, 5] {
        assert_eq!(power_signature(5, 7, n).unwrap(), 0);
    }
    // (3, 2) torus knot up to mirror.
    assert_eq!(power_signature(7, 13, 2).unwrap().abs(), 2);
    assert_eq!(power_signature(7, 13, 2).unwrap().abs(), seifert_signature_oracle(&w("1 2", 3).pow(2)).abs());
    assert_eq!(power_signature(1, 1, 1).unwrap(), 0);
}

#[test]
fn parametrization_examples() {
    let s2s1 = burau_minus1(&w("2 1", 3)).unwrap().trace();
    let t = braid_from_parametrization(3, 1, 1, 0.3).unwrap();
    assert_eq!(burau_minus1(&t).unwrap().trace(), s2s1);
    let b = braid_from_parametrization(3, 5, 7, 0.3).unwrap();
    let reference = lissajous_braid(5, 7).unwrap();
    assert_eq!(burau_minus1(&b).unwrap().trace(), burau_minus1(&reference).unwrap().trace());
    assert_eq!(alexander_at_minus1(&b).unwrap().magnitude(), alexander_at_minus1(&reference).unwrap().magnitude());
    assert_eq!(braid_from_parametrization(3, 2, 1, 0.3).unwrap().closure_components(), 1);
}
