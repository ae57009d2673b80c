//! Integer polynomials in the entries `m_11, ..., m_dd` of a `d × d` matrix.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};

/// Sparse polynomial in `d²` variables; monomials are exponent vectors in
/// row-major variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EntryPolynomial {
    dim: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl EntryPolynomial {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(vec![0; dim * dim], c.into());
        p
    }

    /// The variable `m_{row+1, col+1}`.
    pub fn var(dim: usize, row: usize, col: usize) -> Result<Self> {
        if row >= dim || col >= dim {
            return Err(Error::PolyParse(format!("m{}{} outside a {dim}x{dim} matrix", row + 1, col + 1)));
        }
        let mut exps = vec![0; dim * dim];
        exps[row * dim + col] = 1;
        let mut p = Self::zero(dim);
        p.add_term(exps, BigInt::one());
        Ok(p)
    }

    /// `det(m_ij)` expanded as a polynomial.
    pub fn determinant(dim: usize) -> Self {
        let mut out = Self::zero(dim);
        let mut perm: Vec<usize> = (0..dim).collect();
        permutations(&mut perm, 0, false, &mut |p, odd| {
            let mut exps = vec![0; dim * dim];
            for (r, &c) in p.iter().enumerate() {
                exps[r * dim + c] += 1;
            }
            out.add_term(exps, if odd { -BigInt::one() } else { BigInt::one() });
        });
        out
    }

    /// Parses `+ - * ^`, parentheses, integers, variables `mIJ` (or `mI_J`
    /// for indices above 9) and `det`.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        let mut parser = Parser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, dim };
        let p = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(Error::PolyParse(format!("unexpected '{}' at {}", parser.chars[parser.pos], parser.pos)));
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.dim * self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { dim: self.dim, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::constant(self.dim, 1);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// `P(m_11, ..., m_dd)` at the entries of `m`.
    pub fn eval(&self, m: &IntMatrix) -> Result<BigInt> {
        if m.dim() != self.dim {
            return Err(Error::Arity { expected: self.arity(), got: m.dim() * m.dim() });
        }
        let mut acc = BigInt::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in m.entries().iter().zip(exps) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// `P mod p` at row-major entries already reduced into `[0, p)`.
    pub fn eval_mod(&self, entries: &[u64], p: u64) -> Result<u64> {
        if entries.len() != self.arity() {
            return Err(Error::Arity { expected: self.arity(), got: entries.len() });
        }
        let p128 = p as u128;
        let mut acc: u128 = 0;
        for (exps, c) in &self.terms {
            let mut cm: BigInt = c % BigInt::from(p);
            if cm.is_negative() {
                cm += BigInt::from(p);
            }
            let mut term = cm.to_u128().expect("reduced coefficient fits");
            for (&x, &e) in entries.iter().zip(exps) {
                for _ in 0..e {
                    term = term * x as u128 % p128;
                }
            }
            acc = (acc + term) % p128;
        }
        Ok(acc as u64)
    }
}

fn permutations(p: &mut Vec<usize>, k: usize, odd: bool, f: &mut impl FnMut(&[usize], bool)) {
    if k == p.len() {
        f(p, odd);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, odd ^ (i != k), f);
        p.swap(k, i);
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    dim: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::PolyParse(format!("{what} at position {}", self.pos)))
    }

    fn expr(&mut self) -> Result<EntryPolynomial> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<EntryPolynomial> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<EntryPolynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let n = self.number()?;
            let n = n.to_u32().filter(|&n| n <= 64).ok_or_else(|| Error::PolyParse("exponent too large".into()))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits parse"))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<EntryPolynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(EntryPolynomial::constant(self.dim, self.number()?)),
            Some('d') => {
                if self.chars[self.pos..].starts_with(&['d', 'e', 't']) {
                    self.pos += 3;
                    Ok(EntryPolynomial::determinant(self.dim))
                } else {
                    self.err("unknown identifier")
                }
            }
            Some('m') => {
                self.pos += 1;
                let first = self.digits();
                let (r, c) = if self.peek() == Some('_') {
                    self.pos += 1;
                    (first, self.digits())
                } else if first.len() == 2 {
                    (first[..1].to_string(), first[1..].to_string())
                } else {
                    return self.err("variable needs two indices");
                };
                let (Ok(r), Ok(c)) = (r.parse::<usize>(), c.parse::<usize>()) else {
                    return self.err("bad variable index");
                };
                if r == 0 || c == 0 {
                    return self.err("indices start at 1");
                }
                EntryPolynomial::var(self.dim, r - 1, c - 1)
            }
            _ => self.err("expected a term"),
        }
    }
}

impl fmt::Display for EntryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| {
                    let (r, col) = (k / self.dim + 1, k % self.dim + 1);
                    let name = if self.dim > 9 { format!("m{r}_{col}") } else { format!("m{r}{col}") };
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            match (vars.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}
