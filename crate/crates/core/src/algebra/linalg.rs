//! Subspaces of `Q^d`: kernels, images, intersections and particular solutions.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::RatMatrix;
use crate::error::{Error, Result};

pub type QVec = Vec<BigRational>;

/// A subspace of `Q^ambient`, stored as the rows of its reduced row echelon basis.
///
/// The echelon form is unique, so structural equality is subspace equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<QVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit(ambient, i)).collect()).expect("unit vectors fit")
    }

    pub fn span(ambient: usize, vectors: Vec<QVec>) -> Result<Self> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: v.len() });
            }
        }
        let (rows, _) = rref(vectors, ambient);
        Ok(Self { ambient, basis: rows })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(rows, self.ambient).0.len() == self.basis.len()
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        subspace_intersection(self, other)
    }
}

pub(crate) fn unit(n: usize, i: usize) -> QVec {
    (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()
}

/// Reduced row echelon form of a list of `cols`-long rows. Returns the nonzero
/// rows and the pivot column of each.
pub(crate) fn rref(mut rows: Vec<QVec>, cols: usize) -> (Vec<QVec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        let Some(found) = (lead..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(lead, found);
        let p = rows[lead][col].clone();
        for x in rows[lead].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..rows.len() {
            if r == lead || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in 0..cols {
                let d = &f * &rows[lead][c];
                rows[r][c] -= d;
            }
        }
        pivots.push(col);
        lead += 1;
        if lead == rows.len() {
            break;
        }
    }
    rows.truncate(lead);
    (rows, pivots)
}

/// Null space of a rectangular system given by its rows.
fn null_space_rows(rows: Vec<QVec>, cols: usize) -> Vec<QVec> {
    let (reduced, pivots) = rref(rows, cols);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn kernel_basis(m: &RatMatrix) -> Subspace {
    let d = m.dim();
    let basis = null_space_rows(m.rows(), d);
    Subspace::span(d, basis).expect("kernel vectors have ambient length")
}

/// Column space of `m`.
pub fn image_basis(m: &RatMatrix) -> Subspace {
    let d = m.dim();
    Subspace::span(d, m.transpose().rows()).expect("columns have ambient length")
}

pub fn subspace_intersection(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch { expected: a.ambient, got: b.ambient });
    }
    let n = a.ambient;
    if a.is_zero() || b.is_zero() {
        return Ok(Subspace::zero(n));
    }
    // x in A∩B  <=>  x = Σ λ_i a_i = Σ μ_j b_j ; solve [A^T | -B^T] (λ, μ) = 0.
    let ka = a.basis.len();
    let kb = b.basis.len();
    let rows: Vec<QVec> = (0..n)
        .map(|coord| {
            a.basis.iter().map(|v| v[coord].clone()).chain(b.basis.iter().map(|v| -v[coord].clone())).collect()
        })
        .collect();
    let coeffs = null_space_rows(rows, ka + kb);
    let vectors = coeffs
        .into_iter()
        .map(|lm| {
            let mut x = vec![BigRational::zero(); n];
            for (lambda, v) in lm[..ka].iter().zip(&a.basis) {
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi += lambda * vi;
                }
            }
            x
        })
        .collect();
    Subspace::span(n, vectors)
}

/// Some solution of `m x = b`, or `None` if `b` is not in the image.
pub fn solve(m: &RatMatrix, b: &[BigRational]) -> Result<Option<QVec>> {
    let d = m.dim();
    if b.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: b.len() });
    }
    let rows: Vec<QVec> =
        (0..d).map(|r| m.row(r).iter().cloned().chain(std::iter::once(b[r].clone())).collect()).collect();
    let (reduced, pivots) = rref(rows, d + 1);
    if pivots.last() == Some(&d) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); d];
    for (row, &pc) in reduced.iter().zip(&pivots) {
        x[pc] = row[d].clone();
    }
    Ok(Some(x))
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}
