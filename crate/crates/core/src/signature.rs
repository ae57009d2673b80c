//! Signatures of braid closures: the Meyer-cocycle recursion for 3-braids and
//! a Seifert-matrix computation for any number of strands.
//!
//! Sign convention: positive links have negative signature, so the closure of
//! `(σ1σ2)²` has signature `−2`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{IntMatrix, QuadForm};
use crate::braid::BraidWord;
use crate::burau::{burau_minus1, RepConfig};
use crate::error::{Error, Result};
use crate::meyer::{meyer_cocycle, Sl2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureResult {
    pub value: i64,
    pub length: usize,
    pub components: usize,
}

fn require_three(w: &BraidWord) -> Result<()> {
    if w.strands() != 3 {
        return Err(Error::StrandMismatch { left: 3, right: w.strands() });
    }
    Ok(())
}

fn letter_images() -> [Sl2; 4] {
    let cfg = RepConfig::new(3).expect("3 strands");
    [1, 2, -1, -2].map(|g| Sl2::new(cfg.letter_minus1(g).clone()).expect("generators lie in SL(2, Z)"))
}

fn letter_index(g: i32) -> usize {
    match g {
        1 => 0,
        2 => 1,
        -1 => 2,
        _ => 3,
    }
}

/// Signatures of every prefix of `w`, starting with the empty prefix.
///
/// Uses `sign(w'x) = sign(w') − Meyer(B(w'), B(x))` for a single letter `x`,
/// whose closure is trivial.
pub fn gg_prefix_signatures(w: &BraidWord) -> Result<Vec<i64>> {
    require_three(w)?;
    let images = letter_images();
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut acc = Sl2::identity();
    let mut sig = 0;
    out.push(0);
    for &g in w.letters() {
        let x = &images[letter_index(g)];
        sig -= meyer_cocycle(&acc, x);
        acc = acc.mul(x);
        out.push(sig);
    }
    Ok(out)
}

pub fn gg_signature(w: &BraidWord) -> Result<SignatureResult> {
    let value = *gg_prefix_signatures(w)?.last().expect("prefix list is nonempty");
    Ok(SignatureResult { value, length: w.len(), components: w.closure_components() })
}

/// Same recursion, peeling letters from the left:
/// `sign(x w'') = sign(w'') − Meyer(B(x), B(w''))`.
pub fn gg_signature_left(w: &BraidWord) -> Result<SignatureResult> {
    require_three(w)?;
    let images = letter_images();
    let mut acc = Sl2::identity();
    let mut sig = 0;
    for &g in w.letters().iter().rev() {
        let x = &images[letter_index(g)];
        sig -= meyer_cocycle(x, &acc);
        acc = x.mul(&acc);
    }
    Ok(SignatureResult { value: sig, length: w.len(), components: w.closure_components() })
}

/// `sign(xⁿ)` for `n = 0..=max`, via
/// `sign(xⁿ) = sign(xⁿ⁻¹) + sign(x) − Meyer(B(xⁿ⁻¹), B(x))`.
pub fn gg_power_signatures(x: &BraidWord, max: usize) -> Result<Vec<i64>> {
    let base = gg_signature(x)?.value;
    let b = Sl2::new(burau_minus1(x)?)?;
    let mut out = vec![0];
    let mut acc = Sl2::identity();
    let mut sig = 0;
    for _ in 0..max {
        sig += base - meyer_cocycle(&acc, &b);
        acc = acc.mul(&b);
        out.push(sig);
    }
    Ok(out)
}

/// Seifert matrix of the braid closure from Seifert's algorithm.
///
/// The surface has one disk per strand and one band per letter. Its first
/// homology is generated by loops through consecutive bands in the same
/// column, ordered by column and then by position in the word.
pub fn seifert_matrix(w: &BraidWord) -> IntMatrix {
    let n = w.strands();
    let letters = w.letters();
    let mut columns: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (pos, &g) in letters.iter().enumerate() {
        columns[g.unsigned_abs() as usize].push(pos);
    }
    // (column, first band, second band)
    let loops: Vec<(usize, usize, usize)> =
        columns.iter().enumerate().flat_map(|(col, bands)| bands.windows(2).map(move |p| (col, p[0], p[1]))).collect();
    let eps = |pos: usize| letters[pos].signum() as i64;
    let dim = loops.len();
    let mut v = vec![0i64; dim * dim];
    for (a, &(ca, j, k)) in loops.iter().enumerate() {
        v[a * dim + a] = -(eps(j) + eps(k)) / 2;
        for (b, &(cb, l, m)) in loops.iter().enumerate() {
            if ca == cb && l == k {
                if eps(k) > 0 {
                    v[a * dim + b] = 1;
                } else {
                    v[b * dim + a] = -1;
                }
            } else if cb == ca + 1 {
                if j < l && l < k && k < m {
                    v[a * dim + b] = 1;
                } else if l < j && j < m && m < k {
                    v[a * dim + b] = -1;
                }
            }
        }
    }
    IntMatrix::from_i64(dim, &v).expect("square by construction")
}

/// Link signature of the closure, as the signature of `V + Vᵀ`.
pub fn seifert_signature_oracle(w: &BraidWord) -> i64 {
    let v = seifert_matrix(w);
    let sym = v.try_add(&v.transpose()).expect("same size");
    QuadForm::from_int(&sym).expect("V + Vᵀ is symmetric").signature()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuasipositiveInvariants {
    pub chi4: i64,
    /// Present when the closure is a knot.
    pub g4: Option<i64>,
}

/// For a product of `bands` conjugates of positive generators in `B(strands)`.
pub fn quasipositive_invariants(bands: u64, strands: u64, knot: bool) -> QuasipositiveInvariants {
    let chi4 = strands as i64 - bands as i64;
    QuasipositiveInvariants { chi4, g4: knot.then(|| (1 - chi4) / 2) }
}

/// True when every entry of the `t = −1` image exceeds 2 in absolute value.
pub fn check_big_entries(w: &BraidWord) -> Result<bool> {
    require_three(w)?;
    let two = BigInt::from(2);
    Ok(burau_minus1(w)?.entries().iter().all(|x| x.abs() > two))
}

/// Entry-wise zero test on the `t = −1` image.
pub fn has_zero_entry(w: &BraidWord) -> Result<bool> {
    Ok(burau_minus1(w)?.entries().iter().any(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn w(text: &str, n: usize) -> BraidWord {
        parse_word(text, n).unwrap()
    }

    #[test]
    fn standard_knots() {
        assert_eq!(gg_signature(&w("1", 3)).unwrap().value, 0);
        assert_eq!(gg_signature(&w("1 2 1 2", 3)).unwrap().value, -2);
        assert_eq!(gg_signature(&w("1 -2 1 -2", 3)).unwrap().value, 0);
        assert_eq!(gg_signature(&w("1 1 1", 3)).unwrap().value, -2);
        assert_eq!(gg_signature(&w("1 2 1 2 1 2", 3)).unwrap().value, -4);
        assert_eq!(gg_signature(&w("-1 -2 -1 -2", 3)).unwrap().value, 2);
        assert!(gg_signature(&w("1", 4)).is_err());
    }

    #[test]
    fn seifert_standard_knots() {
        assert_eq!(seifert_matrix(&w("1 1 1", 2)), IntMatrix::from_i64(2, &[-1, 1, 0, -1]).unwrap());
        assert_eq!(seifert_signature_oracle(&w("1 1 1", 2)), -2);
        assert_eq!(seifert_signature_oracle(&w("1 2", 3)), 0);
        assert_eq!(seifert_signature_oracle(&w("1 2 1 2", 3)), -2);
        assert_eq!(seifert_signature_oracle(&w("1 -2 1 -2", 3)), 0);
        assert_eq!(seifert_signature_oracle(&w("1 1 1 1 1", 2)), -4);
        assert_eq!(seifert_signature_oracle(&w("", 3)), 0);
    }

    #[test]
    fn peeling_orders_and_powers() {
        let x = w("1 -2 2 2 1 -2 -2 1 2", 3);
        assert_eq!(gg_signature(&x).unwrap().value, gg_signature_left(&x).unwrap().value);
        let powers = gg_power_signatures(&w("1 2", 3), 6).unwrap();
        for (n, s) in powers.iter().enumerate() {
            assert_eq!(*s, gg_signature(&w("1 2", 3).pow(n as i64)).unwrap().value);
        }
    }

    #[test]
    fn quasipositive_counts() {
        for n in 1..6u64 {
            let inv = quasipositive_invariants(2 * n, 3, true);
            assert_eq!(inv.chi4, 3 - 2 * n as i64);
            assert_eq!(inv.g4, Some(n as i64 - 1));
        }
        assert_eq!(quasipositive_invariants(0, 3, false), QuasipositiveInvariants { chi4: 3, g4: None });
    }

    #[test]
    fn big_entries() {
        assert!(!check_big_entries(&w("", 3)).unwrap());
        assert!(check_big_entries(&w("-1 2", 3).pow(5)).unwrap());
    }
}
