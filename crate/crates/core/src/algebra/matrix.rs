use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// Commutative ring with exact division where a quotient exists.
pub trait Ring:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// `self / rhs` when `rhs` divides `self` exactly.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Ring for LaurentPoly {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, rhs).ok()
    }
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

pub type IntMatrix = SquareMatrix<BigInt>;
pub type RatMatrix = SquareMatrix<BigRational>;
pub type LaurentMatrix = SquareMatrix<LaurentPoly>;

impl<T: Ring> SquareMatrix<T> {
    pub fn from_vec(dim: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: entries.len() });
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        Self { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| T::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.dim..(r + 1) * self.dim]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.dim).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.dim).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        Ok(())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    let a = self.get(r, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * rhs.get(k, c).clone();
                }
                out.push(acc);
            }
        }
        Ok(Self { dim: n, entries: out })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(Self {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() - b.clone()).collect(),
        })
    }

    pub fn minus_identity(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            let v = out.get(i, i).clone() - T::one();
            out.set(i, i, v);
        }
        out
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|x| x.clone() * k.clone())
    }

    pub fn apply(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok((0..self.dim)
            .map(|r| self.row(r).iter().zip(v).fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone()))
            .collect())
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> T {
        let n = self.dim;
        if n == 0 {
            return T::one();
        }
        let mut a = self.entries.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return T::zero();
                };
                for c in 0..n {
                    a.swap(k * n + c, swap * n + c);
                }
                sign_flip = !sign_flip;
            }
            let pivot = a[k * n + k].clone();
            for r in k + 1..n {
                for c in k + 1..n {
                    let num = pivot.clone() * a[r * n + c].clone() - a[r * n + k].clone() * a[k * n + c].clone();
                    a[r * n + c] =
                        num.div_exact(&prev).expect("Bareiss elimination divides exactly over an integral domain");
                }
                a[r * n + k] = T::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }
}

impl<'a, T: Ring> Mul<&'a SquareMatrix<T>> for &'a SquareMatrix<T> {
    type Output = SquareMatrix<T>;
    /// Panics on dimension mismatch; use [`SquareMatrix::try_mul`] to handle it.
    fn mul(self, rhs: &SquareMatrix<T>) -> SquareMatrix<T> {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl IntMatrix {
    pub fn from_i64(dim: usize, entries: &[i64]) -> Result<Self> {
        Self::from_vec(dim, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    /// Inverse over the integers; requires determinant `±1`.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        let inv = self.to_rational().inverse()?;
        Ok(inv.map(|x| x.to_integer()))
    }

    /// Largest absolute value of an entry.
    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or_default()
    }
}

impl RatMatrix {
    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.rows();
        let mut inv = Self::identity(n).rows();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot_row);
            inv.swap(col, pivot_row);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] = &a[col][c] / &p;
                inv[col][c] = &inv[col][c] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let da = &f * &a[col][c];
                    let di = &f * &inv[col][c];
                    a[r][c] -= da;
                    inv[r][c] -= di;
                }
            }
        }
        Self::from_rows(inv)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }
}

impl LaurentMatrix {
    /// Entrywise substitution `t = v`.
    pub fn eval(&self, v: &BigRational) -> Result<RatMatrix> {
        let entries = self.entries.iter().map(|p| p.eval(v)).collect::<Result<Vec<_>>>()?;
        RatMatrix::from_vec(self.dim, entries)
    }

    /// Substitution `t = v` for an integer `v`, requiring integral results.
    pub fn eval_int(&self, v: i64) -> Result<IntMatrix> {
        let m = self.eval(&BigRational::from_integer(v.into()))?;
        if !m.is_integral() {
            return Err(Error::Convention(format!("evaluation at t={v} is not integral")));
        }
        Ok(m.map(|x| x.to_integer()))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for SquareMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.dim {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for c in 0..self.dim {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(dim: usize, e: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(dim, e).unwrap()
    }

    #[test]
    fn determinant_and_products() {
        assert_eq!(m(2, &[1, 0, -1, 1]).det(), BigInt::from(1));
        let rot = m(2, &[0, 1, -1, 0]);
        assert_eq!(&rot * &rot, m(2, &[-1, 0, 0, -1]));
        assert_eq!(m(3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]).det(), BigInt::from(6));
        assert_eq!(m(3, &[0, 1, 0, -1, 0, 1, 0, -1, 0]).det(), BigInt::zero());
        assert_eq!(m(3, &[0, 0, 1, 0, 1, 0, 1, 0, 0]).det(), BigInt::from(-1));
        assert_eq!(IntMatrix::zeros(0).det(), BigInt::one());
    }

    #[test]
    fn inverses() {
        assert_eq!(IntMatrix::identity(3).inverse().unwrap(), IntMatrix::identity(3));
        let a = m(2, &[2, 1, 1, 1]);
        assert_eq!(&a.inverse().unwrap() * &a, IntMatrix::identity(2));
        assert_eq!(m(2, &[2, 0, 0, 1]).inverse(), Err(Error::NotUnimodular("2".into())));
        assert_eq!(m(2, &[1, 1, 1, 1]).inverse(), Err(Error::Singular));
        let r = m(2, &[2, 0, 0, 1]).to_rational();
        assert_eq!(&r.inverse().unwrap() * &r, RatMatrix::identity(2));
    }

    #[test]
    fn laurent_determinant() {
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        let a = LaurentMatrix::from_rows(vec![vec![t.clone(), one.clone()], vec![one.clone(), t.clone()]]).unwrap();
        // t^2 - 1
        assert_eq!(a.det(), LaurentPoly::from_coeffs(0, &[-1, 0, 1]));
    }

    #[test]
    fn dimension_errors() {
        assert!(m(2, &[1, 0, 0, 1]).try_mul(&IntMatrix::identity(3)).is_err());
        assert!(IntMatrix::from_i64(2, &[1, 2, 3]).is_err());
    }
}
