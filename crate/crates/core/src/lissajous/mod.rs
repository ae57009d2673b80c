//! Lissajous toric knots on three strands.
//!
//! For `q̃, p̃` odd, coprime and prime to 3, the knot `K(3, q̃, p̃)` is the
//! closure of `B = Q σ2 Q⁻¹ σ1`, where
//! `Q = σ2^{λ(1)} σ1^{λ(2)} σ2^{λ(3)} ⋯` has `q̃ − 1` letters and
//! `λ(k) = (−1)^⌊2Ap̃k/q̃⌋` with `6A ≡ 1 (mod q̃)`.
//!
//! Writing `𝒫` for the image of the first half of `Q`, the image of `Q` is
//! `𝒫𝒫ᵀ`, the trace of `B` is `2 − (a² + b²)²` for the top row `(a, b)` of
//! `𝒫`, and `B` is hyperbolic unless `a, b ∈ {−1, 0, 1}`.

mod curve;

pub use curve::{braid_from_parametrization, sample_curve};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::IntMatrix;
use crate::braid::BraidWord;
use crate::burau::burau_minus1;
use crate::error::{Error, Result};
use crate::signature::gg_power_signatures;

/// Checks that `(q̃, p̃)` are both odd, coprime and prime to 3.
pub fn check_params(q: u64, p: u64) -> Result<()> {
    if q == 0 || p == 0 {
        return Err(Error::Precondition("q and p must be positive".into()));
    }
    if q.is_multiple_of(2) || p.is_multiple_of(2) {
        return Err(Error::Precondition(format!("({q}, {p}) is not a pair of odd integers")));
    }
    if q.is_multiple_of(3) || p.is_multiple_of(3) {
        return Err(Error::Precondition(format!("({q}, {p}) has an entry divisible by 3")));
    }
    if q.gcd(&p) != 1 {
        return Err(Error::Precondition(format!("({q}, {p}) are not coprime")));
    }
    Ok(())
}

/// `A` with `6A ≡ 1 (mod q̃)`, in `[0, q̃)`.
pub fn bezout_a(q: u64) -> Result<u64> {
    if q == 0 || q.gcd(&6) != 1 {
        return Err(Error::Precondition(format!("gcd(6, {q}) != 1")));
    }
    if q == 1 {
        return Ok(0);
    }
    let e = (6i64).extended_gcd(&(q as i64));
    Ok(e.x.rem_euclid(q as i64) as u64)
}

/// `λ(k)` for `k = 1..q̃`, using the representative `a` of `6⁻¹`.
fn lambda_with(q: u64, p: u64, a: u64) -> Vec<i32> {
    (1..q)
        .map(|k| {
            let e = (2 * a as u128 * p as u128 * k as u128) / q as u128;
            if e.is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .collect()
}

pub fn lambda_seq(q: u64, p: u64) -> Result<Vec<i32>> {
    check_params(q, p)?;
    Ok(lambda_with(q, p, bezout_a(q)?))
}

/// `λ` for any `p̃`; only `q̃` is constrained.
pub fn lambda_seq_unchecked(q: u64, p: u64) -> Result<Vec<i32>> {
    Ok(lambda_with(q, p, bezout_a(q)?))
}

fn q_word(lambda: &[i32]) -> Vec<i32> {
    lambda.iter().enumerate().map(|(i, &l)| if i % 2 == 0 { 2 * l } else { l }).collect()
}

fn braid_from_q(q_letters: &[i32]) -> BraidWord {
    let q = BraidWord::new(3, q_letters.iter().copied()).expect("letters in range");
    let mut letters = q.letters().to_vec();
    letters.push(2);
    letters.extend(q.inverse().letters());
    letters.push(1);
    BraidWord::new(3, letters).expect("letters in range")
}

/// `Q σ2 Q⁻¹ σ1`.
pub fn lissajous_braid(q: u64, p: u64) -> Result<BraidWord> {
    Ok(braid_from_q(&q_word(&lambda_seq(q, p)?)))
}

/// The factor `Q` of [`lissajous_braid`].
pub fn lissajous_q(q: u64, p: u64) -> Result<BraidWord> {
    BraidWord::new(3, q_word(&lambda_seq(q, p)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LissajousClass {
    /// Conjugate to `σ1^{1−h} σ2 σ1` up to sign; powers close to torus knots.
    TorusConjugate { h: i64 },
    /// Hyperbolic image; every power admissible here has signature zero.
    ZeroSignatureHyperbolic,
    /// The two forms whose closure has three components.
    ThreeComponentRejected { h: i64 },
}

impl LissajousClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::TorusConjugate { .. } => "torus-conjugate",
            Self::ZeroSignatureHyperbolic => "zero-signature-hyperbolic",
            Self::ThreeComponentRejected { .. } => "three-component-rejected",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub q: u64,
    pub p: u64,
    pub class: LissajousClass,
    pub p_matrix: IntMatrix,
    pub q_matrix: IntMatrix,
    pub braid: BraidWord,
    pub trace: BigInt,
}

/// Image of the first `(q̃ − 1)/2` letters of `Q`.
fn half_image(q_letters: &[i32]) -> Result<IntMatrix> {
    let half = BraidWord::new(3, q_letters[..q_letters.len() / 2].iter().copied())?;
    burau_minus1(&half)
}

fn class_of(p_matrix: &IntMatrix) -> Result<LissajousClass> {
    let one = BigInt::from(1);
    let (a, b) = (p_matrix.get(0, 0), p_matrix.get(0, 1));
    if a.abs() > one || b.abs() > one {
        return Ok(LissajousClass::ZeroSignatureHyperbolic);
    }
    let (a, b) = (a.to_i64().expect("small"), b.to_i64().expect("small"));
    let (c, d) = (p_matrix.get(1, 0), p_matrix.get(1, 1));
    let c = c.to_i64().ok_or(Error::Overflow("lower row of P"))?;
    let d = d.to_i64().ok_or(Error::Overflow("lower row of P"))?;
    // ±(a, b) with the sign s normalising the first nonzero entry to +1.
    let s = if a != 0 { a } else { b };
    match (a * s, b * s) {
        (1, 0) => Ok(LissajousClass::TorusConjugate { h: s * c }),
        (0, 1) => Ok(LissajousClass::TorusConjugate { h: s * d }),
        (1, 1) | (1, -1) => Ok(LissajousClass::ThreeComponentRejected { h: s * c }),
        _ => Err(Error::Convention(format!("P = {p_matrix} matches no form"))),
    }
}

pub fn classify(q: u64, p: u64) -> Result<Classification> {
    let letters = q_word(&lambda_seq(q, p)?);
    let p_matrix = half_image(&letters)?;
    let q_matrix = burau_minus1(&BraidWord::new(3, letters.iter().copied())?)?;
    if q_matrix != &p_matrix * &p_matrix.transpose() {
        return Err(Error::Convention(format!("image of Q is not P·Pᵀ for ({q}, {p})")));
    }
    let braid = braid_from_q(&letters);
    let trace = burau_minus1(&braid)?.trace();
    let (a, b) = (p_matrix.get(0, 0), p_matrix.get(0, 1));
    let r = a * a + b * b;
    if trace != BigInt::from(2) - &r * &r {
        return Err(Error::Convention(format!("trace {trace} of B({q}, {p}) is not 2 - (a² + b²)²")));
    }
    let class = class_of(&p_matrix)?;
    Ok(Classification { q, p, class, p_matrix, q_matrix, braid, trace })
}

/// `sign(B(3, q̃, p̃)ⁿ)`.
pub fn power_signature(q: u64, p: u64, n: u64) -> Result<i64> {
    if n == 0 || n.is_multiple_of(3) {
        return Err(Error::Precondition(format!("power {n} must be positive and prime to 3")));
    }
    let braid = lissajous_braid(q, p)?;
    Ok(*gg_power_signatures(&braid, n as usize)?.last().expect("n ≥ 1"))
}

/// Which `p̃ ∈ [q̃ + 1, 2q̃]` enter the percentage table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Eligibility {
    /// `p̃` odd, prime to 3 and to `q̃`; the zero-signature fraction is taken
    /// over these.
    Literal,
    /// Every integer in the range, classified through the `λ` formula, over
    /// the denominator `q̃`.
    FullRange,
}

impl Eligibility {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Literal => "literal",
            Self::FullRange => "full-range",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PercentRow {
    pub q: u64,
    pub mode: Eligibility,
    pub eligible: usize,
    pub hyperbolic: usize,
    pub denominator: usize,
    pub fraction: BigRational,
    /// `⌊100 · fraction⌋`.
    pub percent: u64,
    pub reference: Option<u64>,
}

/// Published percentages for `q̃ = 5, ..., 101`, rounded down.
pub const REFERENCE_PERCENTAGES: [(u64, u64); 33] = [
    (5, 40),
    (7, 57),
    (11, 54),
    (13, 61),
    (17, 70),
    (19, 63),
    (23, 69),
    (25, 64),
    (29, 68),
    (31, 77),
    (35, 62),
    (37, 75),
    (41, 78),
    (43, 74),
    (47, 80),
    (49, 69),
    (53, 79),
    (55, 72),
    (59, 77),
    (61, 78),
    (65, 76),
    (67, 80),
    (71, 67),
    (73, 82),
    (77, 75),
    (79, 83),
    (83, 84),
    (85, 77),
    (89, 80),
    (91, 74),
    (95, 80),
    (97, 82),
    (101, 83),
];

pub fn reference_percentage(q: u64) -> Option<u64> {
    REFERENCE_PERCENTAGES.iter().find(|(r, _)| *r == q).map(|(_, v)| *v)
}

/// True when the `λ`-formula `𝒫` for `(q̃, p̃)` is hyperbolic; `p̃` unconstrained.
pub fn is_hyperbolic_unchecked(q: u64, p: u64) -> Result<bool> {
    let letters = q_word(&lambda_seq_unchecked(q, p)?);
    let m = half_image(&letters)?;
    let one = BigInt::from(1);
    Ok(m.get(0, 0).abs() > one || m.get(0, 1).abs() > one)
}

pub fn percentage_row(q: u64, mode: Eligibility) -> Result<PercentRow> {
    if q.is_multiple_of(2) || q.is_multiple_of(3) {
        return Err(Error::Precondition(format!("q = {q} must be odd and prime to 3")));
    }
    let range = q + 1..=2 * q;
    let pool: Vec<u64> = match mode {
        Eligibility::Literal => range.filter(|&p| p % 2 == 1 && p % 3 != 0 && p.gcd(&q) == 1).collect(),
        Eligibility::FullRange => range.collect(),
    };
    let hyperbolic = pool
        .par_iter()
        .map(|&p| match mode {
            Eligibility::Literal => classify(q, p).map(|c| c.class == LissajousClass::ZeroSignatureHyperbolic),
            Eligibility::FullRange => is_hyperbolic_unchecked(q, p),
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&h| h)
        .count();
    let denominator = match mode {
        Eligibility::Literal => pool.len(),
        Eligibility::FullRange => q as usize,
    };
    let fraction = if denominator == 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::from(hyperbolic), BigInt::from(denominator))
    };
    let percent = (&fraction * BigRational::from_integer(100.into())).floor().to_integer().to_u64().unwrap_or(0);
    Ok(PercentRow {
        q,
        mode,
        eligible: pool.len(),
        hyperbolic,
        denominator,
        fraction,
        percent,
        reference: reference_percentage(q),
    })
}

pub fn percentage_table(qs: &[u64], mode: Eligibility) -> Result<Vec<PercentRow>> {
    qs.iter().map(|&q| percentage_row(q, mode)).collect()
}

/// The `q̃` values of [`REFERENCE_PERCENTAGES`] up to `max`.
pub fn reference_qs(max: u64) -> Vec<u64> {
    REFERENCE_PERCENTAGES.iter().map(|(q, _)| *q).filter(|&q| q <= max).collect()
}
