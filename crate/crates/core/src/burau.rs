//! Reduced Burau representation, its integral specialisation at `t = -1` and
//! the symplectic structure it preserves.
//!
//! Convention: with `d = n - 1` and `r = d - i` (0-based), the generator `σ_i`
//! acts as the identity except on row `r`, which reads `(t, -t, 1)` in columns
//! `r-1, r, r+1` (entries falling outside the matrix are dropped). This is the
//! usual row convention composed with the flip `σ_i ↦ σ_{n-i}`, i.e. conjugated
//! by the image of the half twist. At `t = -1` and `n = 3` it gives
//!
//! ```text
//! σ1 ↦ [[1, 0], [-1, 1]]     σ2 ↦ [[1, 1], [0, 1]]
//! ```
//!
//! and every image `M` preserves the tridiagonal form `J` (`+1` above the
//! diagonal, `-1` below): `MᵀJM = J`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{IntMatrix, LaurentMatrix, LaurentPoly};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct RepConfig {
    strands: usize,
    generators: Vec<LaurentMatrix>,
    inverses: Vec<LaurentMatrix>,
    generators_int: Vec<IntMatrix>,
    inverses_int: Vec<IntMatrix>,
    form: IntMatrix,
}

impl RepConfig {
    pub fn new(strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        let d = strands - 1;
        let t = LaurentPoly::t();
        let t_inv = LaurentPoly::monomial(1, -1);
        let mut generators = Vec::with_capacity(d);
        let mut inverses = Vec::with_capacity(d);
        for i in 1..strands {
            let r = d - i;
            let mut g = LaurentMatrix::identity(d);
            let mut h = LaurentMatrix::identity(d);
            if r > 0 {
                g.set(r, r - 1, t.clone());
                h.set(r, r - 1, LaurentPoly::one());
            }
            g.set(r, r, -t.clone());
            h.set(r, r, -t_inv.clone());
            if r + 1 < d {
                g.set(r, r + 1, LaurentPoly::one());
                h.set(r, r + 1, t_inv.clone());
            }
            generators.push(g);
            inverses.push(h);
        }
        let generators_int = generators.iter().map(|g| g.eval_int(-1)).collect::<Result<Vec<_>>>()?;
        let inverses_int = inverses.iter().map(|g| g.eval_int(-1)).collect::<Result<Vec<_>>>()?;
        let form = IntMatrix::from_fn(d, |r, c| {
            if c == r + 1 {
                BigInt::one()
            } else if r == c + 1 {
                -BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        Ok(Self { strands, generators, inverses, generators_int, inverses_int, form })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim(&self) -> usize {
        self.strands - 1
    }

    /// Image of the letter `g` at generic `t`.
    pub fn letter_t(&self, g: i32) -> &LaurentMatrix {
        let i = g.unsigned_abs() as usize - 1;
        if g > 0 {
            &self.generators[i]
        } else {
            &self.inverses[i]
        }
    }

    /// Image of the letter `g` at `t = -1`.
    pub fn letter_minus1(&self, g: i32) -> &IntMatrix {
        let i = g.unsigned_abs() as usize - 1;
        if g > 0 {
            &self.generators_int[i]
        } else {
            &self.inverses_int[i]
        }
    }

    /// The intersection form `J`.
    pub fn intersection_form(&self) -> &IntMatrix {
        &self.form
    }

    /// Spanning vector `(1, 0, 1, 0, ..., 1)` of the kernel of `J`, present
    /// exactly when `n` is even.
    pub fn kernel_vector(&self) -> Option<Vec<BigInt>> {
        let d = self.dim();
        (d % 2 == 1).then(|| (0..d).map(|i| if i % 2 == 0 { BigInt::one() } else { BigInt::zero() }).collect())
    }

    fn check(&self, w: &BraidWord) -> Result<()> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: w.strands() });
        }
        Ok(())
    }

    pub fn burau_t(&self, w: &BraidWord) -> Result<LaurentMatrix> {
        self.check(w)?;
        let mut m = LaurentMatrix::identity(self.dim());
        for &g in w.letters() {
            m = &m * self.letter_t(g);
        }
        Ok(m)
    }

    pub fn burau_minus1(&self, w: &BraidWord) -> Result<IntMatrix> {
        self.check(w)?;
        let mut m = IntMatrix::identity(self.dim());
        for &g in w.letters() {
            m = &m * self.letter_minus1(g);
        }
        Ok(m)
    }

    pub fn preserves_form(&self, m: &IntMatrix) -> bool {
        m.dim() == self.dim() && &(&m.transpose() * &self.form) * m == self.form
    }

    /// The map induced by `m` on `Q^d / K`, in the basis of the first `d - 1`
    /// coordinate vectors.
    pub fn symplectic_quotient(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let d = self.dim();
        if m.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, got: m.dim() });
        }
        let k = self.kernel_vector().ok_or(Error::NoKernel(d))?;
        if m.apply(&k)? != k {
            return Err(Error::KernelNotFixed);
        }
        // e_{d-1} ≡ -(Σ_{a<d-1} k_a e_a) modulo K, since k_{d-1} = 1.
        Ok(IntMatrix::from_fn(d - 1, |a, j| m.get(a, j) - m.get(d - 1, j) * &k[a]))
    }

    /// The nondegenerate form induced on the quotient (top-left block of `J`).
    pub fn quotient_form(&self) -> Result<IntMatrix> {
        let d = self.dim();
        if d.is_multiple_of(2) {
            return Err(Error::NoKernel(d));
        }
        Ok(IntMatrix::from_fn(d - 1, |r, c| self.form.get(r, c).clone()))
    }

    /// The symplectic image `ρ_n(w)` in `Sp(2l, Z)`, `l = ⌊(n-1)/2⌋`:
    /// the `t = -1` image itself for odd `n`, its quotient for even `n`.
    pub fn symplectic_image(&self, w: &BraidWord) -> Result<IntMatrix> {
        let m = self.burau_minus1(w)?;
        if self.dim().is_multiple_of(2) {
            Ok(m)
        } else {
            self.symplectic_quotient(&m)
        }
    }

    /// The form preserved by [`RepConfig::symplectic_image`].
    pub fn symplectic_form(&self) -> IntMatrix {
        if self.dim().is_multiple_of(2) {
            self.form.clone()
        } else {
            self.quotient_form().expect("odd dimension has a quotient")
        }
    }
}

pub fn burau_t(w: &BraidWord) -> Result<LaurentMatrix> {
    RepConfig::new(w.strands())?.burau_t(w)
}

pub fn burau_minus1(w: &BraidWord) -> Result<IntMatrix> {
    RepConfig::new(w.strands())?.burau_minus1(w)
}

/// See [`RepConfig::symplectic_quotient`]; `strands` fixes the kernel line.
pub fn symplectic_quotient(m: &IntMatrix) -> Result<IntMatrix> {
    RepConfig::new(m.dim() + 1)?.symplectic_quotient(m)
}

/// `det(B₋₁(w) − I)`, which equals `Δ_ŵ(−1)` for an odd number of strands.
pub fn alexander_at_minus1(w: &BraidWord) -> Result<BigInt> {
    if w.strands().is_multiple_of(2) {
        return Err(Error::EvenStrands(w.strands()));
    }
    Ok(burau_minus1(w)?.minus_identity().det())
}

/// Alexander polynomial of a knot closure, from
/// `Δ(t) = (1 − t) / (1 − tⁿ) · det(B_t(w) − I)`.
///
/// The result is defined up to a unit `±t^k`; the returned representative is
/// symmetric with `Δ(1) = 1`.
pub fn alexander_poly(w: &BraidWord) -> Result<LaurentPoly> {
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let n = w.strands() as i64;
    let det = burau_t(w)?.minus_identity().det();
    let one_minus_t = LaurentPoly::from_coeffs(0, &[1, -1]);
    let one_minus_tn = &LaurentPoly::one() - &LaurentPoly::monomial(1, n);
    let delta = (&one_minus_t * &det).div_exact(&one_minus_tn)?;
    let (normalized, odd_span) = delta.normalize_unit();
    if odd_span || !normalized.is_symmetric() {
        return Err(Error::Convention(format!("Alexander polynomial {normalized} is not symmetric")));
    }
    Ok(normalized)
}
