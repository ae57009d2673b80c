//! Random walks on braid groups, pushed forward through a representation.
//!
//! A walk of length `k` is the product `g1 g2 ⋯ gk` of independent letters
//! drawn from a [`GenMeasure`]. Its law is computed exactly by dynamic
//! programming over distinct images, so the state space is the set of
//! matrices reached, not the set of words.

mod finite;
mod monte_carlo;

pub use finite::{
    enumerate_sp, finite_step_distribution, finite_walk_tv, generated_subgroup_order, is_prime, psp_order,
    reduce_mod_p, sp_order, total_variation, zero_density, zero_density_with_budget, FiniteWalkReport, FpMatrix,
    DEFAULT_BUDGET,
};
pub use monte_carlo::{monte_carlo_hitting, MonteCarloEstimate};

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::IntMatrix;
use crate::braid::BraidWord;
use crate::burau::RepConfig;
use crate::entry_poly::EntryPolynomial;
use crate::error::{Error, Result};

/// Finitely supported probability measure on `B(n)` with rational weights.
///
/// Weights are stored as integer numerators over one common denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenMeasure {
    strands: usize,
    support: Vec<BraidWord>,
    numerators: Vec<BigUint>,
    denominator: BigUint,
}

impl GenMeasure {
    pub fn new(support: Vec<(BraidWord, BigRational)>) -> Result<Self> {
        let Some(strands) = support.first().map(|(w, _)| w.strands()) else {
            return Err(Error::InvalidMeasure("empty support".into()));
        };
        let mut total = BigRational::zero();
        let mut denominator = BigInt::one();
        for (w, p) in &support {
            if w.strands() != strands {
                return Err(Error::StrandMismatch { left: strands, right: w.strands() });
            }
            if !p.is_positive() {
                return Err(Error::InvalidMeasure(format!("weight {p} is not positive")));
            }
            total += p;
            denominator = denominator.lcm(p.denom());
        }
        if !total.is_one() {
            return Err(Error::InvalidMeasure(format!("weights sum to {total}")));
        }
        let numerators = support
            .iter()
            .map(|(_, p)| (p.numer() * (&denominator / p.denom())).to_biguint().expect("positive"))
            .collect();
        Ok(Self {
            strands,
            support: support.into_iter().map(|(w, _)| w).collect(),
            numerators,
            denominator: denominator.to_biguint().expect("positive"),
        })
    }

    pub fn uniform(words: Vec<BraidWord>) -> Result<Self> {
        let n = words.len();
        if n == 0 {
            return Err(Error::InvalidMeasure("empty support".into()));
        }
        let p = BigRational::new(BigInt::one(), BigInt::from(n));
        Self::new(words.into_iter().map(|w| (w, p.clone())).collect())
    }

    /// Uniform on `σ_i^{±1}`, `1 ≤ i < n`.
    pub fn uniform_generators(strands: usize) -> Result<Self> {
        let mut words = Vec::new();
        for i in 1..strands as i32 {
            words.push(BraidWord::generator(strands, i)?);
            words.push(BraidWord::generator(strands, -i)?);
        }
        Self::uniform(words)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn support(&self) -> &[BraidWord] {
        &self.support
    }

    pub fn weight(&self, i: usize) -> BigRational {
        BigRational::new(BigInt::from(self.numerators[i].clone()), BigInt::from(self.denominator.clone()))
    }

    pub fn numerators(&self) -> &[BigUint] {
        &self.numerators
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }
}

/// A homomorphism from `B(n)` to a group whose elements can be hashed.
pub trait Representation: Sync {
    type Elem: Clone + Eq + Hash + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn image(&self, w: &BraidWord) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// The integral Burau representation at `t = −1`.
#[derive(Debug, Clone)]
pub struct IntegralBurau {
    config: RepConfig,
}

impl IntegralBurau {
    pub fn new(strands: usize) -> Result<Self> {
        Ok(Self { config: RepConfig::new(strands)? })
    }
}

impl Representation for IntegralBurau {
    type Elem = IntMatrix;

    fn identity(&self) -> IntMatrix {
        IntMatrix::identity(self.config.dim())
    }

    fn image(&self, w: &BraidWord) -> Result<IntMatrix> {
        self.config.burau_minus1(w)
    }

    fn mul(&self, a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        a * b
    }
}

/// `Π_p ∘ ρ_n`: the symplectic image reduced mod `p`, optionally in `PSp`.
#[derive(Debug, Clone)]
pub struct ModPBurau {
    config: RepConfig,
    p: u64,
    projective: bool,
}

impl ModPBurau {
    pub fn new(strands: usize, p: u64, projective: bool) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p < 3 {
            return Err(Error::ModulusTooSmall(p));
        }
        Ok(Self { config: RepConfig::new(strands)?, p, projective })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn projective(&self) -> bool {
        self.projective
    }

    /// Half the size of the symplectic image.
    pub fn genus(&self) -> usize {
        (self.config.strands() - 1) / 2
    }

    pub fn config(&self) -> &RepConfig {
        &self.config
    }
}

impl Representation for ModPBurau {
    type Elem = FpMatrix;

    fn identity(&self) -> FpMatrix {
        FpMatrix::identity(2 * self.genus(), self.p)
    }

    fn image(&self, w: &BraidWord) -> Result<FpMatrix> {
        reduce_mod_p(&self.config.symplectic_image(w)?, self.p, self.projective)
    }

    fn mul(&self, a: &FpMatrix, b: &FpMatrix) -> FpMatrix {
        let m = a.mul(b);
        if self.projective {
            m.projective_canonical()
        } else {
            m
        }
    }
}

/// Law of the walk at one step: `counts[g] / denominator`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkDistribution<E: Eq + Hash> {
    pub step: usize,
    pub denominator: BigUint,
    pub counts: HashMap<E, BigUint>,
}

impl<E: Clone + Eq + Hash + Send + Sync> WalkDistribution<E> {
    pub fn point_mass(e: E) -> Self {
        Self { step: 0, denominator: BigUint::one(), counts: HashMap::from([(e, BigUint::one())]) }
    }

    pub fn probability(&self, e: &E) -> BigRational {
        let c = self.counts.get(e).cloned().unwrap_or_default();
        ratio(&c, &self.denominator)
    }

    pub fn states(&self) -> usize {
        self.counts.len()
    }

    pub fn total_mass(&self) -> BigRational {
        let sum: BigUint = self.counts.values().sum();
        ratio(&sum, &self.denominator)
    }

    pub fn mass_where(&self, pred: impl Fn(&E) -> bool + Sync) -> BigRational {
        let hit: BigUint = self.counts.par_iter().filter(|(e, _)| pred(e)).map(|(_, c)| c.clone()).sum();
        ratio(&hit, &self.denominator)
    }

    /// Pushes the law forward along `f`.
    pub fn map<F: Clone + Eq + Hash + Send + Sync>(&self, f: impl Fn(&E) -> F) -> WalkDistribution<F> {
        let mut counts: HashMap<F, BigUint> = HashMap::new();
        for (e, c) in &self.counts {
            *counts.entry(f(e)).or_default() += c;
        }
        WalkDistribution { step: self.step, denominator: self.denominator.clone(), counts }
    }

    /// One convolution step with the images of `μ`.
    pub fn step<R: Representation<Elem = E>>(&self, rep: &R, images: &[E], mu: &GenMeasure) -> Self {
        let entries: Vec<(&E, &BigUint)> = self.counts.iter().collect();
        let counts = entries
            .par_chunks(1024)
            .map(|chunk| {
                let mut local: HashMap<E, BigUint> = HashMap::with_capacity(chunk.len() * images.len());
                for (e, c) in chunk {
                    for (g, w) in images.iter().zip(mu.numerators()) {
                        *local.entry(rep.mul(e, g)).or_default() += *c * w;
                    }
                }
                local
            })
            .reduce(HashMap::new, |mut a, b| {
                if a.len() < b.len() {
                    return merge(b, a);
                }
                for (e, c) in b {
                    *a.entry(e).or_default() += c;
                }
                a
            });
        Self { step: self.step + 1, denominator: &self.denominator * mu.denominator(), counts }
    }
}

fn merge<E: Eq + Hash>(mut a: HashMap<E, BigUint>, b: HashMap<E, BigUint>) -> HashMap<E, BigUint> {
    for (e, c) in b {
        *a.entry(e).or_default() += c;
    }
    a
}

fn ratio(n: &BigUint, d: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
}

fn support_images<R: Representation>(mu: &GenMeasure, rep: &R) -> Result<Vec<R::Elem>> {
    mu.support().iter().map(|w| rep.image(w)).collect()
}

/// Laws at steps `0..=k`.
pub fn walk_distributions<R: Representation>(
    mu: &GenMeasure,
    rep: &R,
    k: usize,
) -> Result<Vec<WalkDistribution<R::Elem>>> {
    let images = support_images(mu, rep)?;
    let mut out = vec![WalkDistribution::point_mass(rep.identity())];
    for _ in 0..k {
        let next = out.last().expect("nonempty").step(rep, &images, mu);
        out.push(next);
    }
    Ok(out)
}

pub fn step_distribution<R: Representation>(mu: &GenMeasure, rep: &R, k: usize) -> Result<WalkDistribution<R::Elem>> {
    let images = support_images(mu, rep)?;
    let mut d = WalkDistribution::point_mass(rep.identity());
    for _ in 0..k {
        d = d.step(rep, &images, mu);
    }
    Ok(d)
}

/// Predicates on integer matrices used as hitting targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixPredicate {
    /// `|m_11| > 2`.
    Z11,
    /// Every entry exceeds 2 in absolute value.
    BigEntries,
    /// `|m_rc| > bound` (0-based `r`, `c`).
    EntryAbove {
        row: usize,
        col: usize,
        bound: u64,
    },
    /// `P(M) = 0`.
    PolyZero(EntryPolynomial),
    Always,
    Never,
}

impl MatrixPredicate {
    pub fn test(&self, m: &IntMatrix) -> bool {
        let two = BigInt::from(2);
        match self {
            Self::Z11 => m.get(0, 0).abs() > two,
            Self::BigEntries => m.entries().iter().all(|x| x.abs() > two),
            Self::EntryAbove { row, col, bound } => {
                *row < m.dim() && *col < m.dim() && m.get(*row, *col).abs() > BigInt::from(*bound)
            }
            Self::PolyZero(p) => p.eval(m).map(|v| v.is_zero()).unwrap_or(false),
            Self::Always => true,
            Self::Never => false,
        }
    }

    /// `z11`, `big-entries`, `always`, `never`, `entry:R,C>B` (1-based) or
    /// `zero:<polynomial>`.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        let t = text.trim();
        match t {
            "z11" => return Ok(Self::Z11),
            "big-entries" => return Ok(Self::BigEntries),
            "always" => return Ok(Self::Always),
            "never" => return Ok(Self::Never),
            _ => {}
        }
        if let Some(poly) = t.strip_prefix("zero:") {
            return Ok(Self::PolyZero(EntryPolynomial::parse(poly, dim)?));
        }
        if let Some(body) = t.strip_prefix("entry:") {
            let bad = || Error::Precondition(format!("predicate '{t}' should look like entry:1,1>2"));
            let (rc, b) = body.split_once('>').ok_or_else(bad)?;
            let (r, c) = rc.split_once(',').ok_or_else(bad)?;
            let r: usize = r.trim().parse().map_err(|_| bad())?;
            let c: usize = c.trim().parse().map_err(|_| bad())?;
            let bound: u64 = b.trim().parse().map_err(|_| bad())?;
            if r == 0 || c == 0 || r > dim || c > dim {
                return Err(bad());
            }
            return Ok(Self::EntryAbove { row: r - 1, col: c - 1, bound });
        }
        Err(Error::Precondition(format!("unknown predicate '{t}'")))
    }
}

pub fn hitting_probability(dist: &WalkDistribution<IntMatrix>, pred: &MatrixPredicate) -> BigRational {
    dist.mass_where(|m| pred.test(m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HitRow {
    pub step: usize,
    pub probability: BigRational,
    pub states: usize,
}

impl HitRow {
    pub fn decimal(&self) -> f64 {
        self.probability.to_f64().unwrap_or(f64::NAN)
    }
}

/// `μ^{⋆k}(X)` for `k = 0..=max_step`.
pub fn hitting_table(mu: &GenMeasure, pred: &MatrixPredicate, max_step: usize) -> Result<Vec<HitRow>> {
    let rep = IntegralBurau::new(mu.strands())?;
    let images = support_images(mu, &rep)?;
    let mut d = WalkDistribution::point_mass(rep.identity());
    let mut rows = Vec::with_capacity(max_step + 1);
    loop {
        rows.push(HitRow { step: d.step, probability: hitting_probability(&d, pred), states: d.states() });
        if d.step == max_step {
            break;
        }
        d = d.step(&rep, &images, mu);
    }
    Ok(rows)
}
