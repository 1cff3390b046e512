//! Exact rational scalars and shifted-factorial primitives.
//!
//! * [`Rational`] — arbitrary-precision rational, always in canonical
//!   reduced form (positive denominator, gcd 1).
//! * [`pochhammer`] — rising factorial `(a)_n = a(a+1)···(a+n−1)`.
//! * [`binom_general`] — binomial coefficient with arbitrary rational
//!   upper argument, `a(a−1)···(a−k+1)/k!`.
//! * [`gamma_ratio`] — `Γ(a+n)/Γ(a)` reduced to Pochhammer form, with a
//!   pole check for negative shifts.
//! * [`parse_rational`] / [`format_rational`] — the `p/q` text format.
//!
//! Every Γ-function ratio used anywhere in this crate is expressed through
//! these primitives, so all identity checking stays inside ℚ.

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar.
///
/// `num::BigRational` already guarantees the canonical form this crate
/// relies on: construction reduces by the gcd and keeps the denominator
/// positive, and equality is structural equality of canonical forms.
pub type Rational = num::BigRational;

/// Shorthand constructor `n/d`. Panics if `d = 0`; intended for literals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand integer constructor.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

// === text format ===========================================================

/// Parse the `p/q` text format: optional sign on `p`, `q` omitted when 1
/// (e.g. `-3/2`, `7`). Rejects a zero or signed denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational in p/q form: {s:?}"));
    match s.split_once('/') {
        None => {
            let p = BigInt::from_str(s).map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
        Some((ps, qs)) => {
            let p = BigInt::from_str(ps).map_err(|_| bad())?;
            let q = BigInt::from_str(qs).map_err(|_| bad())?;
            if !q.is_positive() {
                return Err(Error::Parse(format!(
                    "denominator must be a positive integer: {s:?}"
                )));
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Format in the `p/q` text format, omitting `/q` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// === shifted factorials ====================================================

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for m in 2..=n {
        acc *= m;
    }
    Rational::from_integer(acc)
}

/// Rising factorial `(a)_n = a(a+1)···(a+n−1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Generalized binomial coefficient `a(a−1)···(a−k+1)/k!` for rational `a`.
///
/// Agrees with the integer binomial when `a` is an integer ≥ `k`.
pub fn binom_general(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term -= Rational::one();
    }
    acc / factorial(k)
}

/// `r^k` for a nonnegative integer exponent.
pub fn rational_pow(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

/// `Γ(a+n)/Γ(a)` as an exact rational: `(a)_n` for `n ≥ 0`, and
/// `1/(a+n)_{−n}` for `n < 0`.
///
/// The negative-shift case divides by a Pochhammer symbol; when that symbol
/// vanishes the Γ-ratio hits a pole/zero collision and the parameter point
/// must be excluded, signalled by [`Error::Pole`].
pub fn gamma_ratio(a: &Rational, n: i32) -> Result<Rational> {
    if n >= 0 {
        return Ok(pochhammer(a, n as u32));
    }
    let shifted = a + rat_int(n as i64);
    let den = pochhammer(&shifted, n.unsigned_abs());
    if den.is_zero() {
        return Err(Error::Pole(format!(
            "gamma_ratio({}, {n}) divides by ({})_{} = 0",
            format_rational(a),
            format_rational(&shifted),
            n.unsigned_abs()
        )));
    }
    Ok(den.recip())
}

// === tests =================================================================
