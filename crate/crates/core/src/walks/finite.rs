//! Finite symplectic groups `Sp(2l, F_p)` and `PSp(2l, F_p)` and walks on them.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{step_distribution, walk_distributions, GenMeasure, ModPBurau, Representation, WalkDistribution};
use crate::algebra::IntMatrix;
use crate::entry_poly::EntryPolynomial;
use crate::error::{Error, Result};

/// Largest group the enumerators will materialise.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Square matrix over `F_p` with entries in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    dim: usize,
    p: u32,
    entries: Vec<u32>,
}

impl FpMatrix {
    pub fn new(dim: usize, p: u64, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: entries.len() });
        }
        let p32 = u32::try_from(p).map_err(|_| Error::Overflow("modulus"))?;
        Ok(Self { dim, p: p32, entries: entries.into_iter().map(|x| (x % p) as u32).collect() })
    }

    pub fn identity(dim: usize, p: u64) -> Self {
        let entries = (0..dim * dim).map(|i| u32::from(i % (dim + 1) == 0)).collect();
        Self { dim, p: p as u32, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }

    pub fn entries(&self) -> Vec<u64> {
        self.entries.iter().map(|&x| x as u64).collect()
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.dim + c] as u64
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim;
        let p = self.p as u64;
        let mut entries = vec![0u32; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc += self.entries[r * n + k] as u64 * other.entries[k * n + c] as u64;
                }
                entries[r * n + c] = (acc % p) as u32;
            }
        }
        Self { dim: n, p: self.p, entries }
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        Self { dim: self.dim, p, entries: self.entries.iter().map(|&x| (p - x) % p).collect() }
    }

    /// The lexicographically smaller of `M` and `−M`.
    pub fn projective_canonical(self) -> Self {
        let n = self.neg();
        if n.entries < self.entries {
            n
        } else {
            self
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let entries = (0..n * n).map(|i| self.entries[(i % n) * n + i / n]).collect();
        Self { dim: n, p: self.p, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim, self.p as u64)
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.dim.max(1))
            .map(|r| format!("[{}]", r.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}] mod {}", rows.join(", "), self.p)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn reduce_mod_p(m: &IntMatrix, p: u64, projective: bool) -> Result<FpMatrix> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p < 3 {
        return Err(Error::ModulusTooSmall(p));
    }
    let bp = BigInt::from(p);
    let entries = m
        .entries()
        .iter()
        .map(|x| {
            let mut r = x % &bp;
            if r.is_negative() {
                r += &bp;
            }
            r.to_u64().expect("residue fits")
        })
        .collect();
    let f = FpMatrix::new(m.dim(), p, entries)?;
    Ok(if projective { f.projective_canonical() } else { f })
}

/// `|Sp(2l, F_p)| = ∏_{m=1}^{l} (p^{2m} − 1) p^{2m−1}`.
pub fn sp_order(l: u32, p: u64) -> Result<BigUint> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if l == 0 {
        return Err(Error::Precondition("l must be at least 1".into()));
    }
    let bp = BigUint::from(p);
    Ok((1..=l).fold(BigUint::one(), |acc, m| acc * (bp.pow(2 * m) - 1u32) * bp.pow(2 * m - 1)))
}

/// `|PSp(2l, F_p)|` for odd `p`.
pub fn psp_order(l: u32, p: u64) -> Result<BigUint> {
    if p < 3 {
        return Err(Error::ModulusTooSmall(p));
    }
    Ok(sp_order(l, p)? / 2u32)
}

/// The tridiagonal form of size `2l` (`+1` above the diagonal, `−1` below) mod `p`.
fn form_mod_p(l: usize, p: u64) -> Vec<u64> {
    let d = 2 * l;
    (0..d * d)
        .map(|i| {
            let (r, c) = (i / d, i % d);
            if c == r + 1 {
                1
            } else if r == c + 1 {
                p - 1
            } else {
                0
            }
        })
        .collect()
}

/// All of `Sp(2l, F_p)` for the tridiagonal form, built column by column.
pub fn enumerate_sp(l: usize, p: u64, budget: u64) -> Result<Vec<FpMatrix>> {
    let order = sp_order(l as u32, p)?;
    if order > BigUint::from(budget) {
        return Err(Error::Budget { needed: order.to_string(), budget });
    }
    let d = 2 * l;
    let j = form_mod_p(l, p);
    let vectors: Vec<Vec<u64>> = (0..p.pow(d as u32))
        .map(|mut code| {
            (0..d)
                .map(|_| {
                    let x = code % p;
                    code /= p;
                    x
                })
                .collect()
        })
        .collect();
    // Jv for every candidate column.
    let jv: Vec<Vec<u64>> = vectors
        .iter()
        .map(|v| (0..d).map(|r| (0..d).map(|c| j[r * d + c] * v[c]).sum::<u64>() % p).collect())
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(d);
    let mut out = Vec::new();
    fn rec(
        chosen: &mut Vec<usize>,
        out: &mut Vec<FpMatrix>,
        vectors: &[Vec<u64>],
        jv: &[Vec<u64>],
        j: &[u64],
        d: usize,
        p: u64,
    ) {
        let col = chosen.len();
        if col == d {
            let entries = (0..d * d).map(|i| vectors[chosen[i % d]][i / d]).collect();
            out.push(FpMatrix::new(d, p, entries).expect("sized"));
            return;
        }
        'cand: for (idx, v) in vectors.iter().enumerate() {
            for (i, &prev) in chosen.iter().enumerate() {
                // c_iᵀ J v must equal J[i][col].
                let val = vectors[prev].iter().zip(&jv[idx]).map(|(a, b)| a * b).sum::<u64>() % p;
                if val != j[i * d + col] {
                    continue 'cand;
                }
            }
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            chosen.push(idx);
            rec(chosen, out, vectors, jv, j, d, p);
            chosen.pop();
        }
    }
    rec(&mut chosen, &mut out, &vectors, &jv, &j, d, p);
    Ok(out)
}

/// Fraction of `Sp(2l, F_p)` on which `P ≡ 0 (mod p)`.
pub fn zero_density(poly: &EntryPolynomial, l: usize, p: u64) -> Result<BigRational> {
    zero_density_with_budget(poly, l, p, DEFAULT_BUDGET)
}

pub fn zero_density_with_budget(poly: &EntryPolynomial, l: usize, p: u64, budget: u64) -> Result<BigRational> {
    if poly.dim() != 2 * l {
        return Err(Error::Arity { expected: 4 * l * l, got: poly.arity() });
    }
    let group = enumerate_sp(l, p, budget)?;
    let mut zeros = 0u64;
    for g in &group {
        if poly.eval_mod(&g.entries(), p)? == 0 {
            zeros += 1;
        }
    }
    Ok(BigRational::new(BigInt::from(zeros), BigInt::from(group.len())))
}

/// Order of the subgroup generated by `gens`, or `None` once it exceeds `limit`.
pub fn generated_subgroup_order<R: Representation>(rep: &R, gens: &[R::Elem], limit: usize) -> Option<usize> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    let id = rep.identity();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = rep.mul(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen.len())
}

/// `½ Σ_g |P(g) − 1/|G||`.
pub fn total_variation<E: Clone + Eq + std::hash::Hash + Send + Sync>(
    dist: &WalkDistribution<E>,
    group_order: &BigUint,
) -> BigRational {
    let g = BigInt::from(group_order.clone());
    let d = BigInt::from(dist.denominator.clone());
    let mut acc = BigInt::zero();
    for c in dist.counts.values() {
        acc += (BigInt::from(c.clone()) * &g - &d).abs();
    }
    let missing = &g - BigInt::from(dist.counts.len());
    acc += missing * &d;
    BigRational::new(acc, d * g * 2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteWalkReport {
    pub p: u64,
    pub genus: usize,
    pub projective: bool,
    pub group_order: BigUint,
    /// Order of the subgroup generated by the support images.
    pub generated_order: usize,
    pub generates: bool,
    /// Exact TV distance to uniform at steps `0..=steps`.
    pub tv: Vec<BigRational>,
}

/// Walk of `Π_p μ` on `Sp(2l, F_p)` (or `PSp`), `l = ⌊(n − 1)/2⌋`.
///
/// A support that does not generate the group is reported in
/// [`FiniteWalkReport::generates`]; the distances are still computed.
pub fn finite_walk_tv(mu: &GenMeasure, p: u64, projective: bool, steps: usize) -> Result<FiniteWalkReport> {
    let rep = ModPBurau::new(mu.strands(), p, projective)?;
    let l = rep.genus();
    let group_order = if projective { psp_order(l as u32, p)? } else { sp_order(l as u32, p)? };
    if group_order > BigUint::from(DEFAULT_BUDGET) {
        return Err(Error::Budget { needed: group_order.to_string(), budget: DEFAULT_BUDGET });
    }
    let gens: Vec<FpMatrix> = mu.support().iter().map(|w| rep.image(w)).collect::<Result<_>>()?;
    let limit = group_order.to_usize().expect("within budget");
    let generated_order = generated_subgroup_order(&rep, &gens, limit).unwrap_or(limit + 1);
    let tv = walk_distributions(mu, &rep, steps)?.iter().map(|d| total_variation(d, &group_order)).collect();
    Ok(FiniteWalkReport {
        p,
        genus: l,
        projective,
        group_order,
        generated_order,
        generates: generated_order == limit,
        tv,
    })
}

/// Law of the finite walk at step `k`.
pub fn finite_step_distribution(
    mu: &GenMeasure,
    p: u64,
    projective: bool,
    k: usize,
) -> Result<WalkDistribution<FpMatrix>> {
    step_distribution(mu, &ModPBurau::new(mu.strands(), p, projective)?, k)
}
