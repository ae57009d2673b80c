use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Laurent polynomial in `t` with integer coefficients.
///
/// Stored sparsely as exponent → coefficient with no zero entries, so equal
/// polynomials have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    /// `Σ coeffs[i] t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::default();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(low + i as i64, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// `p(t⁻¹)`.
    pub fn bar(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, v: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if v.is_zero() {
            if self.min_exp().unwrap_or(0) < 0 {
                return Err(Error::EvalAtZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        let mut acc = BigRational::zero();
        for (&e, c) in &self.terms {
            let power =
                if e >= 0 { num_traits::pow(v.clone(), e as usize) } else { num_traits::pow(v.recip(), (-e) as usize) };
            acc += power * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    pub fn eval_int(&self, v: i64) -> Result<BigRational> {
        self.eval(&BigRational::from_integer(v.into()))
    }

    /// Exact quotient `self / divisor` in `Z[t, t⁻¹]`.
    ///
    /// Fails with [`Error::InexactDivision`] when the divisor does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_low = divisor.min_exp().unwrap();
        let d_high = divisor.max_exp().unwrap();
        let lead = divisor.coeff(d_high);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let r_low = rem.min_exp().unwrap();
        // Every exponent of the quotient lies in [r_low - d_low, r_high - d_high].
        while let Some(r_high) = rem.max_exp() {
            if r_high - d_high < r_low - d_low {
                return Err(Error::InexactDivision);
            }
            let (q, r) = rem.coeff(r_high).div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let term = Self::monomial(q, r_high - d_high);
            rem = &rem - &(&term * divisor);
            quot = &quot + &term;
        }
        Ok(quot)
    }

    /// Representative of `±t^k · self` that is centred on exponent 0 and has a
    /// positive value at `t = 1` (or a positive top coefficient when `p(1) = 0`).
    ///
    /// Returns the polynomial and whether the exponent span was odd, in which
    /// case it is centred on `1/2` rounded down.
    pub fn normalize_unit(&self) -> (Self, bool) {
        let (Some(low), Some(high)) = (self.min_exp(), self.max_exp()) else {
            return (Self::zero(), false);
        };
        let span = high - low;
        let centred = self.shift(-(low + span / 2));
        let at_one: BigInt = centred.terms.values().sum();
        let flip = if at_one.is_zero() {
            centred.coeff(centred.max_exp().unwrap()).is_negative()
        } else {
            at_one.is_negative()
        };
        (if flip { -centred } else { centred }, span % 2 == 1)
    }

    /// True if `self = ±t^k · other` for some `k`.
    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.normalize_unit().0 == other.normalize_unit().0
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.bar()
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn evaluation() {
        let p = LaurentPoly::from_coeffs(-1, &[1, -1, 1]);
        assert_eq!(p.eval(&q(-1)).unwrap(), q(-3));
        assert_eq!(LaurentPoly::t().eval(&q(5)).unwrap(), q(5));
        assert_eq!(LaurentPoly::zero().eval(&q(0)).unwrap(), q(0));
        assert_eq!(p.eval(&q(0)), Err(Error::EvalAtZero));
        assert_eq!(LaurentPoly::from_coeffs(0, &[2, 1]).eval(&q(0)).unwrap(), q(2));
    }

    #[test]
    fn canonical_form() {
        let t = LaurentPoly::t();
        let z = &t - &t;
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
        assert_eq!(format!("{}", LaurentPoly::from_coeffs(-1, &[-1, 3, -1])), "-t^-1 + 3 - t");
    }

    #[test]
    fn exact_division() {
        // (1 - t^3) / (1 - t) = 1 + t + t^2
        let num = LaurentPoly::from_coeffs(0, &[1, 0, 0, -1]);
        let den = LaurentPoly::from_coeffs(0, &[1, -1]);
        assert_eq!(num.div_exact(&den).unwrap(), LaurentPoly::from_coeffs(0, &[1, 1, 1]));
        // units divide everything
        let p = LaurentPoly::from_coeffs(-2, &[3, 0, 5]);
        assert_eq!(p.div_exact(&LaurentPoly::monomial(-1, 4)).unwrap(), LaurentPoly::from_coeffs(-6, &[-3, 0, -5]));
        assert_eq!(LaurentPoly::from_coeffs(0, &[1, 0, 1]).div_exact(&den), Err(Error::InexactDivision));
        assert_eq!(
            LaurentPoly::from_coeffs(0, &[1, 1]).div_exact(&LaurentPoly::constant(2)),
            Err(Error::InexactDivision)
        );
        assert_eq!(p.div_exact(&LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn unit_normalisation() {
        let p = LaurentPoly::from_coeffs(3, &[-1, 1, -1]);
        let (n, odd) = p.normalize_unit();
        assert!(!odd);
        assert_eq!(n, LaurentPoly::from_coeffs(-1, &[1, -1, 1]));
        assert!(n.is_symmetric());
        assert!(p.equal_up_to_unit(&LaurentPoly::from_coeffs(-7, &[1, -1, 1])));
    }
}
