//! Braid words in the Artin generators.
//!
//! A letter `g` stands for `σ_|g|` raised to the sign of `g`. Words are kept
//! freely reduced and nothing more: no Garside or Markov normalisation is
//! attempted, every invariant downstream is read off a representation image.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word from signed generator indices, freely reducing it.
    pub fn new(strands: usize, letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        let mut reduced: Vec<i32> = Vec::new();
        for g in letters {
            if g == 0 {
                return Err(Error::ZeroGenerator);
            }
            if g.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { index: g as i64, strands });
            }
            push_reduced(&mut reduced, g);
        }
        Ok(Self { strands, letters: reduced })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, [])
    }

    /// `σ_i` (or its inverse when `i` is negative).
    pub fn generator(strands: usize, i: i32) -> Result<Self> {
        Self::new(strands, [i])
    }

    /// The half twist `Δ = (σ_1 σ_2 ... σ_{n-1})(σ_1 ... σ_{n-2}) ... σ_1`.
    pub fn half_twist(strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for top in (1..strands as i32).rev() {
            letters.extend(1..=top);
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        for &g in &other.letters {
            push_reduced(&mut letters, g);
        }
        Ok(Self { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|g| -g).collect() }
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate(&self, by: &Self) -> Result<Self> {
        by.concat(self)?.concat(&by.inverse())
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Self { strands: self.strands, letters: Vec::new() };
        for _ in 0..n.unsigned_abs() {
            for &g in &base.letters {
                push_reduced(&mut out.letters, g);
            }
        }
        out
    }

    /// Exponents negated: a word for the mirror image of the closure.
    pub fn mirror(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().map(|g| -g).collect() }
    }

    /// Image under `σ_i ↦ σ_{n-i}`, i.e. conjugation by the half twist.
    pub fn flip(&self) -> Self {
        let n = self.strands as i32;
        Self { strands: self.strands, letters: self.letters.iter().map(|&g| g.signum() * (n - g.abs())).collect() }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    /// Image in the symmetric group, as the list `perm[start] = end`:
    /// the strand entering at position `start` leaves at `perm[start]`.
    ///
    /// Letters act left to right, so `permutation(ab) = permutation(b) ∘ permutation(a)`
    /// as functions, i.e. `a` is applied first.
    pub fn permutation(&self) -> Permutation {
        let mut position: Vec<usize> = (0..self.strands).collect();
        // where[pos] = strand currently at pos
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        for (pos, &strand) in at.iter().enumerate() {
            position[strand] = pos;
        }
        Permutation(position)
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }
}

fn push_reduced(letters: &mut Vec<i32>, g: i32) {
    if letters.last() == Some(&-g) {
        letters.pop();
    } else {
        letters.push(g);
    }
}

/// Parses whitespace- (or comma-) separated signed generator indices.
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord> {
    let letters = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|tok| !tok.is_empty())
        .map(|tok| i32::from_str(tok).map_err(|_| Error::BadToken(tok.to_string())))
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

/// A permutation of `0..n` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// `self` first, then `then`.
    pub fn and_then(&self, then: &Self) -> Self {
        Self(self.0.iter().map(|&i| then.0[i]).collect())
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut cycles = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
            }
        }
        cycles
    }

    /// Cycle lengths, longest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut lengths = Vec::new();
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}
