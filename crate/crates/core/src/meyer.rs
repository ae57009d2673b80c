//! The Meyer cocycle on `SL(2, Z)`.
//!
//! For `γ1, γ2` let `E = Im(γ1⁻¹ − I) ∩ Im(γ2 − I)`. Each `e ∈ E` is
//! `(γ1⁻¹ − I)v1 = e = (I − γ2)v2`, and `Meyer(γ1, γ2)` is the signature of
//! `e ↦ Ω(e, v1 + v2)` on `E`, with `Ω(x, y) = x₂y₁ − x₁y₂`.
//!
//! With this sign of `Ω` the positive trefoil has signature `−2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::linalg::solve;
use crate::algebra::{image_basis, subspace_intersection, IntMatrix, QVec, QuadForm, RatMatrix, Subspace};
use crate::error::{Error, Result};

/// A 2×2 integer matrix of determinant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sl2(IntMatrix);

impl Sl2 {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: m.dim() });
        }
        if !m.det().is_one() {
            return Err(Error::Precondition(format!("{m} does not have determinant 1")));
        }
        Ok(Self(m))
    }

    /// From row-major entries `[a, b, c, d]`.
    pub fn from_entries(e: [i64; 4]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(2, &e)?)
    }

    pub fn identity() -> Self {
        Self(IntMatrix::identity(2))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = self.parts();
        Self(IntMatrix::from_vec(2, vec![d, -b, -c, a]).expect("2x2"))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        Self(base.0.pow(n.unsigned_abs()))
    }

    pub fn trace(&self) -> BigInt {
        self.0.trace()
    }

    /// `|trace| > 2`.
    pub fn is_hyperbolic(&self) -> bool {
        self.trace().abs() > BigInt::from(2)
    }

    fn parts(&self) -> [BigInt; 4] {
        let e = self.0.entries();
        [e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()]
    }
}

impl TryFrom<IntMatrix> for Sl2 {
    type Error = Error;
    fn try_from(m: IntMatrix) -> Result<Self> {
        Self::new(m)
    }
}

/// `Ω(x, y) = x₂y₁ − x₁y₂`.
pub fn omega(x: &[BigRational], y: &[BigRational]) -> BigRational {
    &x[1] * &y[0] - &x[0] * &y[1]
}

pub fn meyer_space(g1: &Sl2, g2: &Sl2) -> Subspace {
    let a = g1.inverse().0.minus_identity().to_rational();
    let b = g2.0.minus_identity().to_rational();
    subspace_intersection(&image_basis(&a), &image_basis(&b)).expect("both live in Q^2")
}

/// The form `q(e) = Ω(e, v1 + v2)` on `E` in the echelon basis of
/// [`meyer_space`], with particular solutions shifted by the given kernel
/// multiples (one pair per basis vector).
pub fn meyer_form_shifted(g1: &Sl2, g2: &Sl2, shifts: &[(BigRational, BigRational)]) -> Result<QuadForm> {
    let a: RatMatrix = g1.inverse().0.minus_identity().to_rational();
    let b: RatMatrix = g2.0.minus_identity().to_rational().scale(&-BigRational::one());
    let space = meyer_space(g1, g2);
    let ka = crate::algebra::kernel_basis(&a);
    let kb = crate::algebra::kernel_basis(&b);
    let zero = (BigRational::zero(), BigRational::zero());
    let vs: Vec<QVec> = space
        .basis()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let mut v1 = solve(&a, e)?.ok_or_else(|| Error::Convention("e outside Im(γ1⁻¹ − I)".into()))?;
            let mut v2 = solve(&b, e)?.ok_or_else(|| Error::Convention("e outside Im(γ2 − I)".into()))?;
            let (s1, s2) = shifts.get(i).unwrap_or(&zero);
            if let Some(k) = ka.basis().first() {
                for (x, y) in v1.iter_mut().zip(k) {
                    *x += s1 * y;
                }
            }
            if let Some(k) = kb.basis().first() {
                for (x, y) in v2.iter_mut().zip(k) {
                    *x += s2 * y;
                }
            }
            Ok(v1.iter().zip(&v2).map(|(x, y)| x + y).collect())
        })
        .collect::<Result<_>>()?;
    let basis = space.basis();
    let k = basis.len();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let gram = RatMatrix::from_fn(k, |r, c| (omega(&basis[r], &vs[c]) + omega(&basis[c], &vs[r])) * &half);
    QuadForm::new(gram)
}

pub fn meyer_form(g1: &Sl2, g2: &Sl2) -> Result<QuadForm> {
    meyer_form_shifted(g1, g2, &[])
}

/// `Meyer(γ1, γ2) ∈ {−2, ..., 2}`.
///
/// Evaluates the form in closed form over `Z`; [`meyer_form`] is the
/// subspace-level construction it agrees with.
pub fn meyer_cocycle(g1: &Sl2, g2: &Sl2) -> i64 {
    // A = γ1⁻¹ − I, B = γ2 − I, so v1 = A⁻¹e and v2 = −B⁻¹e where invertible.
    let [p, q, r, s] = g1.parts();
    let a = [&s - 1, -q, -r, &p - 1];
    let [p, q, r, s] = g2.parts();
    let b = [&p - 1, q, r, &s - 1];
    let det = |m: &[BigInt; 4]| &m[0] * &m[3] - &m[1] * &m[2];
    let adj = |m: &[BigInt; 4]| [m[3].clone(), -&m[1], -&m[2], m[0].clone()];
    let is_zero = |m: &[BigInt; 4]| m.iter().all(Zero::is_zero);
    let om = |x: [&BigInt; 2], y: [&BigInt; 2]| x[1] * y[0] - x[0] * y[1];
    let apply = |m: &[BigInt; 4], v: [&BigInt; 2]| [&m[0] * v[0] + &m[1] * v[1], &m[2] * v[0] + &m[3] * v[1]];
    let sgn = |x: &BigInt| -> i64 {
        if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            0
        }
    };
    // Nonzero column of a rank-1 matrix and its index.
    let column = |m: &[BigInt; 4]| -> ([BigInt; 2], usize) {
        if !m[0].is_zero() || !m[2].is_zero() {
            ([m[0].clone(), m[2].clone()], 0)
        } else {
            ([m[1].clone(), m[3].clone()], 1)
        }
    };
    let unit = |j: usize| -> [BigInt; 2] {
        if j == 0 {
            [BigInt::one(), BigInt::zero()]
        } else {
            [BigInt::zero(), BigInt::one()]
        }
    };
    if is_zero(&a) || is_zero(&b) {
        return 0;
    }
    let da = det(&a);
    let db = det(&b);
    match (da.is_zero(), db.is_zero()) {
        (false, false) => {
            // C = A⁻¹ − B⁻¹ scaled by da·db; Gram = sym(W C) with Ω(x, y) = xᵀ W y.
            let aa = adj(&a);
            let ab = adj(&b);
            let c: Vec<BigInt> = (0..4).map(|i| &aa[i] * &db - &ab[i] * &da).collect();
            // W = [[0, -1], [1, 0]]; (W C) = [[-c10, -c11], [c00, c01]].
            let wc = [-&c[2], -&c[3], c[0].clone(), c[1].clone()];
            let g00: BigInt = &wc[0] * 2;
            let g11: BigInt = &wc[3] * 2;
            let g01 = &wc[1] + &wc[2];
            let scale = sgn(&(&da * &db));
            let d = &g00 * &g11 - &g01 * &g01;
            let tr = sgn(&(&g00 + &g11)) * scale;
            match sgn(&d) {
                1 => 2 * tr,
                -1 => 0,
                _ => {
                    if !g00.is_zero() {
                        sgn(&g00) * scale
                    } else {
                        sgn(&g11) * scale
                    }
                }
            }
        }
        (false, true) => {
            // E = Im B = span(b), b = B e_k, v2 = −e_k, v1 = adj(A) b / da.
            let (bv, k) = column(&b);
            let ek = unit(k);
            let v1 = apply(&adj(&a), [&bv[0], &bv[1]]);
            let num = om([&bv[0], &bv[1]], [&v1[0], &v1[1]]) - &da * om([&bv[0], &bv[1]], [&ek[0], &ek[1]]);
            sgn(&num) * sgn(&da)
        }
        (true, false) => {
            // E = Im A = span(a), a = A e_j, v1 = e_j, v2 = −adj(B) a / db.
            let (av, j) = column(&a);
            let ej = unit(j);
            let w = apply(&adj(&b), [&av[0], &av[1]]);
            let num = &db * om([&av[0], &av[1]], [&ej[0], &ej[1]]) - om([&av[0], &av[1]], [&w[0], &w[1]]);
            sgn(&num) * sgn(&db)
        }
        (true, true) => {
            let (av, j) = column(&a);
            let (bv, k) = column(&b);
            if !(&av[0] * &bv[1] - &av[1] * &bv[0]).is_zero() {
                return 0;
            }
            // a = λ b with λ = a_i / b_i; v1 = e_j, v2 = −λ e_k.
            let i = if bv[0].is_zero() { 1 } else { 0 };
            let (ej, ek) = (unit(j), unit(k));
            let num = &bv[i] * om([&av[0], &av[1]], [&ej[0], &ej[1]]) - &av[i] * om([&av[0], &av[1]], [&ek[0], &ek[1]]);
            sgn(&num) * sgn(&bv[i])
        }
    }
}

/// `Meyer` evaluated through [`meyer_form`].
pub fn meyer_cocycle_via_form(g1: &Sl2, g2: &Sl2) -> i64 {
    meyer_form(g1, g2).expect("E is spanned by solvable vectors").signature()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(e: [i64; 4]) -> Sl2 {
        Sl2::from_entries(e).unwrap()
    }

    fn s1() -> Sl2 {
        sl([1, 0, -1, 1])
    }

    fn s2() -> Sl2 {
        sl([1, 1, 0, 1])
    }

    #[test]
    fn spaces() {
        assert!(meyer_space(&s1(), &s2()).is_zero());
        let g = s1().mul(&s2());
        assert_eq!(meyer_space(&g, &g).dim(), 2);
        assert!(meyer_space(&Sl2::identity(), &g).is_zero());
        assert!(Sl2::from_entries([2, 0, 0, 1]).is_err());
    }

    #[test]
    fn known_values() {
        let g = s1().mul(&s2());
        assert_eq!(meyer_cocycle(&s1(), &s2()), 0);
        assert_eq!(meyer_cocycle(&g, &g), 2);
        assert_eq!(meyer_cocycle_via_form(&g, &g), 2);
        let h = s1().inverse().mul(&s2());
        assert_eq!(h.trace(), BigInt::from(3));
        for a in 1..=3 {
            for b in 1..=3 {
                assert_eq!(meyer_cocycle(&h.pow(a), &h.pow(b)), 0);
            }
        }
    }

    #[test]
    fn closed_form_matches_form() {
        let gens = [s1(), s2(), s1().inverse(), s2().inverse(), sl([-1, 0, 0, -1])];
        let mut elems = vec![Sl2::identity()];
        for _ in 0..3 {
            let mut next = Vec::new();
            for e in &elems {
                for g in &gens {
                    next.push(e.mul(g));
                }
            }
            elems.extend(next);
            elems.sort_by_key(|m| format!("{}", m.matrix()));
            elems.dedup();
        }
        for x in &elems {
            for y in &elems {
                assert_eq!(meyer_cocycle(x, y), meyer_cocycle_via_form(x, y), "{} {}", x.matrix(), y.matrix());
            }
        }
    }
}
