use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::matrix::{IntMatrix, RatMatrix};
use crate::error::{Error, Result};

/// Symmetric bilinear form over `Q`, given by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadForm {
    gram: RatMatrix,
}

impl QuadForm {
    pub fn new(gram: RatMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self { gram })
    }

    pub fn from_int(gram: &IntMatrix) -> Result<Self> {
        Self::new(gram.to_rational())
    }

    pub fn dim(&self) -> usize {
        self.gram.dim()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    /// `(#positive − #negative)` eigenvalue count.
    pub fn signature(&self) -> i64 {
        let (pos, neg, _) = self.inertia();
        pos as i64 - neg as i64
    }

    /// `(positive, negative, zero)` counts, by exact congruence diagonalisation.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let mut a = self.gram.rows();
        let mut pos = 0;
        let mut neg = 0;
        let n = a.len();
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            let pivot = match active.iter().position(|&i| !a[i][i].is_zero()) {
                Some(p) => p,
                None => {
                    // Zero diagonal: add a row/column with a nonzero coupling to make one.
                    let pair = active
                        .iter()
                        .enumerate()
                        .find_map(|(pi, &i)| active.iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (pi, i, j)));
                    let Some((pi, i, j)) = pair else { break };
                    for c in 0..n {
                        let v = a[j][c].clone();
                        a[i][c] += v;
                    }
                    for r in 0..n {
                        let v = a[r][j].clone();
                        a[r][i] += v;
                    }
                    pi
                }
            };
            let p = active.swap_remove(pivot);
            let d = a[p][p].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for &r in &active {
                if a[r][p].is_zero() {
                    continue;
                }
                let f: BigRational = &a[r][p] / &d;
                for &c in &active {
                    let delta = &f * &a[p][c];
                    a[r][c] -= delta;
                }
                a[r][p] = BigRational::zero();
            }
            for &c in &active {
                a[p][c] = BigRational::zero();
            }
        }
        (pos, neg, n - pos - neg)
    }
}

/// Signature of a symmetric rational matrix.
pub fn form_signature(q: &QuadForm) -> i64 {
    q.signature()
}
