//! Dense univariate polynomials over exact rationals.
//!
//! * [`Poly`] — coefficient vector in the variable `x`, index = power,
//!   never stored with trailing zeros.
//! * Ring operations (`+`, `-`, `*`), scalar multiples, and powers.
//! * [`Poly::derivative`] — the operator `D = d/dx`, iterated.
//! * [`Poly::evaluate`] — exact Horner evaluation.
//! * [`Poly::compose_affine`] — the substitution `p(a·x + b)`, used for
//!   sign flips `x ↦ −x` and scaling limits `x ↦ 1 − 2x/β`.
//! * Text format `"3/2*x^2 - 1/2"`: terms `c*x^k` in descending powers,
//!   joined by `" + "` / `" - "`, `x^1` printed `x`, `x^0` omitted.
//!
//! Two-variable identities are deliberately not given a bivariate ring:
//! both sides are polynomials in the second variable of known degree ≤ n,
//! so callers verify them by fixing the second variable at n+1 distinct
//! rationals and comparing exact `Poly` equality in `x` at each sample.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, rat_int, Rational};

/// Dense univariate polynomial over [`Rational`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    /// `coeffs[i]` is the coefficient of `x^i`; the last entry is nonzero.
    coeffs: Vec<Rational>,
}

impl Poly {
    /// The zero polynomial (empty coefficient vector).
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Build from a coefficient vector (index = power), trimming trailing
    /// zeros to restore the canonical representation.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Coefficient slice, lowest power first; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero when `i` exceeds the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial (the "minus infinity"
    /// marker).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value of a constant polynomial, or `None` when the degree is
    /// positive.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Scalar multiple `c·p`.
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Iterated derivative `D^i p`; `D^0 p = p`, and the result is zero
    /// once `i` exceeds the degree.
    pub fn derivative(&self, i: u32) -> Poly {
        let mut p = self.clone();
        for _ in 0..i {
            if p.is_zero() {
                break;
            }
            let coeffs = p
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat_int(k as i64))
                .collect();
            p = Poly::from_coeffs(coeffs);
        }
        p
    }

    /// Exact Horner evaluation at `x0`.
    pub fn evaluate(&self, x0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x0 + c;
        }
        acc
    }

    /// The substitution `p(a·x + b)`, expanded exactly (Horner in the
    /// linear polynomial `a·x + b`).
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Poly {
        let lin = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Poly::constant(c.clone());
        }
        acc
    }

    /// The reflection `p(−x)`: every odd coefficient negated.
    pub fn reflect(&self) -> Poly {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// `p^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

// === ring operations =======================================================

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, other: Poly) -> Poly {
        &self + &other
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, other: Poly) -> Poly {
        &self - &other
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, other: Poly) -> Poly {
        &self * &other
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

// === text format ===========================================================

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_rational(&mag))?;
                }
                if k == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parse one term of the text format into `(power, coefficient)`.
fn parse_term(term: &str) -> Result<(usize, Rational)> {
    let bad = || Error::Parse(format!("bad polynomial term: {term:?}"));
    let parse_power = |s: &str| -> Result<usize> {
        if s == "x" {
            return Ok(1);
        }
        let k: usize = s
            .strip_prefix("x^")
            .and_then(|digits| digits.parse().ok())
            .ok_or_else(bad)?;
        // powers 0 and 1 are never written with a caret in this format
        if k < 2 {
            return Err(bad());
        }
        Ok(k)
    };
    if let Some((cs, xs)) = term.split_once('*') {
        let c = parse_rational(cs)?;
        if c.is_zero() {
            return Err(bad());
        }
        Ok((parse_power(xs)?, c))
    } else if term.contains('x') {
        Ok((parse_power(term)?, Rational::one()))
    } else {
        let c = parse_rational(term)?;
        if c.is_zero() {
            return Err(bad());
        }
        Ok((0, c))
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parse the canonical text format exactly: strictly descending powers,
    /// no zero terms, separators `" + "` / `" - "`, optional leading `-`.
    fn from_str(s: &str) -> Result<Poly> {
        let s = s.trim();
        if s == "0" {
            return Ok(Poly::zero());
        }
        let (mut negate, mut rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let mut terms: Vec<(usize, Rational)> = Vec::new();
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let split = match (plus, minus) {
                (None, None) => None,
                (Some(p), None) => Some((p, false)),
                (None, Some(m)) => Some((m, true)),
                (Some(p), Some(m)) => Some(if p < m { (p, false) } else { (m, true) }),
            };
            let (term_str, next) = match split {
                None => (rest, None),
                Some((idx, next_negate)) => {
                    (&rest[..idx], Some((next_negate, &rest[idx + 3..])))
                }
            };
            let (k, c) = parse_term(term_str)?;
            let c = if negate { -c } else { c };
            if let Some(&(prev_k, _)) = terms.last() {
                if k >= prev_k {
                    return Err(Error::Parse(format!(
                        "powers must be strictly descending: {s:?}"
                    )));
                }
            }
            terms.push((k, c));
            match next {
                None => break,
                Some((next_negate, tail)) => {
                    negate = next_negate;
                    rest = tail;
                }
            }
        }
        let deg = terms[0].0;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (k, c) in terms {
            coeffs[k] = c;
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

// === tests =================================================================
