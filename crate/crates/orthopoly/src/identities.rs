//! Inversion formulas and summation identities.
//!
//! The inversion sums ([`inv_charlier`], [`inv_laguerre`], [`inv_jacobi`])
//! each combine a family member at reflected/shifted parameters with one at
//! shifted orders so that everything except a Kronecker delta cancels; the
//! operations return the computed constant so failures stay diagnosable
//! instead of collapsing to a boolean. [`master_jacobi`] is the
//! two-variable identity from which the Jacobi inversion follows by
//! specialization, verified by sampling the second variable at enough
//! points to pin a polynomial of its degree. [`vanishing_sum`] and
//! [`vandermonde`] are the scalar summation lemmas underneath.
//!
//! Every weight here is a ratio of Pochhammer symbols — no Γ function is
//! ever evaluated — so each check is an exact decision in ℚ. Parameter
//! points where a denominator Pochhammer vanishes are rejected with
//! [`Error::Pole`]; grid sweeps treat those as skip-and-log, not failures.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::families::{
    charlier, convergence_certificate, format_sequence, jacobi, laguerre, validate_schedule,
    CharlierParams, Family, JacobiParams, JacobiVariant, LaguerreParams,
};
use crate::poly::Poly;
use crate::rational::{
    binom_general, factorial, format_rational, pochhammer, rat, rat_int, rational_pow, Rational,
};
use crate::report::{params_map, IdentityReport};

/// The two Laguerre inversion variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaguerreInversion {
    /// `Σ_{k=j}^{i} L_{i−k}^{(−α−i−1)}(−x) · L_{k−j}^{(α+j)}(x)`
    Main,
    /// `Σ_{k=j}^{i} L_{i−k}^{(α)}(x) · L_{k−j}^{(−α−2)}(−x)`
    Star,
}

/// Extracts the constant value of a sum that must have degree ≤ 0.
fn expect_constant(sum: Poly, what: &str) -> Result<Rational> {
    sum.constant_value().ok_or_else(|| {
        Error::NonConstant(format!("{what} has degree {:?}", sum.degree()))
    })
}

// === inversion formulas ====================================================

/// Charlier inversion sum `Σ_{k=j}^{i} C_{i−k}^{(−a)}(−x) · C_{k−j}^{(a)}(x)`.
///
/// The sum is a constant polynomial equal to `δ_ij`; the constant is
/// returned for the caller to compare. Requires `j ≤ i`.
pub fn inv_charlier(a: &Rational, i: u32, j: u32) -> Result<Rational> {
    assert!(j <= i, "inversion indices need j <= i");
    let mut sum = Poly::zero();
    for k in j..=i {
        let left = charlier(i - k, &CharlierParams::new(-a.clone())).reflect();
        let right = charlier(k - j, &CharlierParams::new(a.clone()));
        sum = &sum + &(&left * &right);
    }
    expect_constant(sum, "Charlier inversion sum")
}

/// Laguerre inversion sum (see [`LaguerreInversion`] for the two forms).
///
/// Constant, equal to `δ_ij`. Requires `j ≤ i`.
pub fn inv_laguerre(
    alpha: &Rational,
    i: u32,
    j: u32,
    variant: LaguerreInversion,
) -> Result<Rational> {
    assert!(j <= i, "inversion indices need j <= i");
    let mut sum = Poly::zero();
    for k in j..=i {
        let term = match variant {
            LaguerreInversion::Main => {
                let left = laguerre(
                    i - k,
                    &LaguerreParams::new(-alpha - rat_int(i as i64 + 1)),
                )
                .reflect();
                let right =
                    laguerre(k - j, &LaguerreParams::new(alpha + rat_int(j as i64)));
                &left * &right
            }
            LaguerreInversion::Star => {
                let left = laguerre(i - k, &LaguerreParams::new(alpha.clone()));
                let right =
                    laguerre(k - j, &LaguerreParams::new(-alpha - rat_int(2))).reflect();
                &left * &right
            }
        };
        sum = &sum + &term;
    }
    expect_constant(sum, "Laguerre inversion sum")
}

/// Jacobi inversion sum
/// `Σ_{k=j}^{i} [(α+β+2k+1)/(α+β+k+j+1)_{i−j+1}] ·
/// P_{i−k}^{(−α−i−1,−β−i−1)}(x) · P_{k−j}^{(α+j,β+j)}(x)`.
///
/// Constant, equal to `δ_ij`. Requires `j ≤ i`; parameter points where a
/// denominator Pochhammer vanishes are rejected with [`Error::Pole`].
pub fn inv_jacobi(alpha: &Rational, beta: &Rational, i: u32, j: u32) -> Result<Rational> {
    assert!(j <= i, "inversion indices need j <= i");
    let mut sum = Poly::zero();
    for k in j..=i {
        let weight = inversion_weight(alpha, beta, i, j, k)?;
        let left = jacobi(
            i - k,
            &JacobiParams::new(
                -alpha - rat_int(i as i64 + 1),
                -beta - rat_int(i as i64 + 1),
            ),
            JacobiVariant::Def1,
        );
        let right = jacobi(
            k - j,
            &JacobiParams::new(alpha + rat_int(j as i64), beta + rat_int(j as i64)),
            JacobiVariant::Def1,
        );
        sum = &sum + &(&left * &right).scale(&weight);
    }
    expect_constant(sum, "Jacobi inversion sum")
}

/// The weight `(α+β+2k+1)/(α+β+k+j+1)_{i−j+1}` shared by the Jacobi
/// inversion sum and its `y = −x` companion.
fn inversion_weight(
    alpha: &Rational,
    beta: &Rational,
    i: u32,
    j: u32,
    k: u32,
) -> Result<Rational> {
    let den = pochhammer(
        &(alpha + beta + rat_int((k + j + 1) as i64)),
        i - j + 1,
    );
    if den.is_zero() {
        return Err(Error::Pole(format!(
            "(alpha+beta+{}+1)_{} vanishes at alpha={}, beta={}",
            k + j,
            i - j + 1,
            format_rational(alpha),
            format_rational(beta)
        )));
    }
    Ok((alpha + beta + rat_int(2 * k as i64 + 1)) / den)
}

/// Generalized Laguerre inversion sum
/// `Σ_{k=0}^{n} L_k^{(α+p)}(x) · L_{n−k}^{(−α−q)}(−x)`.
///
/// Constant, equal to `(p−q+2)_n/n!` — in particular it vanishes exactly
/// when `p−q ∈ {−n−1, …, −2}`, and at the endpoints of that range the sum
/// coincides with the two fixed inversion variants.
pub fn gen_inv_laguerre(
    alpha: &Rational,
    p: &Rational,
    q: &Rational,
    n: u32,
) -> Result<Rational> {
    let mut sum = Poly::zero();
    for k in 0..=n {
        let left = laguerre(k, &LaguerreParams::new(alpha + p));
        let right = laguerre(n - k, &LaguerreParams::new(-alpha - q)).reflect();
        sum = &sum + &(&left * &right);
    }
    expect_constant(sum, "generalized Laguerre inversion sum")
}

// === the master identity and its specializations ===========================

/// Verifies the two-variable identity
/// `Σ_{k=0}^{n} [(α+β+2k+1)(α+β+1)_k/(α+β+1)_{n+k+1}] ·
/// P_k^{(α,β)}(x) · P_{n−k}^{(−n−α−1,−n−β−1)}(y) = (1/n!)((x−y)/2)^n`
/// by fixing `y` at the n+1 integers `0..=n` and comparing exact `Poly`
/// equality in `x` at each sample (both sides have degree ≤ n in `y`, so
/// n+1 agreements prove the identity).
pub fn master_jacobi(alpha: &Rational, beta: &Rational, n: u32) -> Result<IdentityReport> {
    let mut weights = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let den = pochhammer(&(alpha + beta + rat_int(1)), n + k + 1);
        if den.is_zero() {
            return Err(Error::Pole(format!(
                "(alpha+beta+1)_{} vanishes at alpha={}, beta={}",
                n + k + 1,
                format_rational(alpha),
                format_rational(beta)
            )));
        }
        let w = (alpha + beta + rat_int(2 * k as i64 + 1))
            * pochhammer(&(alpha + beta + rat_int(1)), k)
            / den;
        weights.push(w);
    }
    let members: Vec<Poly> = (0..=n)
        .map(|k| jacobi(k, &JacobiParams::new(alpha.clone(), beta.clone()), JacobiVariant::Def1))
        .collect();
    let shifted = JacobiParams::new(
        -alpha - rat_int(n as i64 + 1),
        -beta - rat_int(n as i64 + 1),
    );
    let mut report = IdentityReport::new(
        "master-jacobi",
        params_map(&[
            ("alpha", format_rational(alpha)),
            ("beta", format_rational(beta)),
        ]),
        (n, n),
    );
    for r in 0..=n {
        let y0 = rat_int(r as i64);
        let mut lhs = Poly::zero();
        for k in 0..=n {
            let value = jacobi(n - k, &shifted, JacobiVariant::Def1).evaluate(&y0);
            lhs = &lhs + &members[k as usize].scale(&(&weights[k as usize] * value));
        }
        let rhs = Poly::from_coeffs(vec![-&y0 / rat_int(2), rat(1, 2)])
            .pow(n)
            .scale(&factorial(n).recip());
        if lhs != rhs {
            report.record_failure(
                vec![n as i64, r as i64],
                rhs.to_string(),
                lhs.to_string(),
            );
            break;
        }
    }
    Ok(report)
}

/// Verifies the two one-variable specializations of the master identity:
/// setting `y = x` must reproduce the Jacobi inversion delta, and setting
/// `y = −x` must collapse the sum to the monomial `x^{i−j}/(i−j)!`.
pub fn master_jacobi_specializations(
    alpha: &Rational,
    beta: &Rational,
    i: u32,
    j: u32,
) -> Result<IdentityReport> {
    assert!(j <= i, "specialization indices need j <= i");
    let mut report = IdentityReport::new(
        "master-specializations",
        params_map(&[
            ("alpha", format_rational(alpha)),
            ("beta", format_rational(beta)),
        ]),
        (j, i),
    );
    // y = x: the inversion delta
    let delta = if i == j { rat_int(1) } else { rat_int(0) };
    let constant = inv_jacobi(alpha, beta, i, j)?;
    if constant != delta {
        report.record_failure(
            vec![i as i64, j as i64, 0],
            format_rational(&delta),
            format_rational(&constant),
        );
    }
    // y = −x: the monomial collapse
    let mut sum = Poly::zero();
    for k in j..=i {
        let weight = inversion_weight(alpha, beta, i, j, k)?;
        let left = jacobi(
            i - k,
            &JacobiParams::new(
                -alpha - rat_int(i as i64 + 1),
                -beta - rat_int(i as i64 + 1),
            ),
            JacobiVariant::Def1,
        )
        .reflect();
        let right = jacobi(
            k - j,
            &JacobiParams::new(alpha + rat_int(j as i64), beta + rat_int(j as i64)),
            JacobiVariant::Def1,
        );
        sum = &sum + &(&left * &right).scale(&weight);
    }
    let monomial = Poly::monomial(factorial(i - j).recip(), (i - j) as usize);
    if sum != monomial {
        report.record_failure(
            vec![i as i64, j as i64, 1],
            monomial.to_string(),
            sum.to_string(),
        );
    }
    Ok(report)
}

// === monomial expansions ===================================================

/// Verifies the expansion of a monomial in the family basis as exact
/// `Poly` equality:
///
/// * Laguerre: `x^n/n! = Σ_k (−1)^k C(n+α, n−k) L_k^{(α)}(x)`
/// * Jacobi: `((1−x)/2)^n = Σ_k [(−n)_k (α+β+1)_k (α+k+1)_{n−k}
///   (α+β+2k+1)/(α+β+1)_{n+k+1}] P_k^{(α,β)}(x)`
pub fn monomial_expansion(family: &Family, n: u32) -> Result<IdentityReport> {
    let (identity, params, lhs, rhs) = match family {
        Family::Laguerre(p) => {
            let mut lhs = Poly::zero();
            for k in 0..=n {
                let mut c = binom_general(&(&p.alpha + rat_int(n as i64)), n - k);
                if k % 2 == 1 {
                    c = -c;
                }
                lhs = &lhs + &laguerre(k, p).scale(&c);
            }
            let rhs = Poly::monomial(factorial(n).recip(), n as usize);
            (
                "monomial-laguerre",
                params_map(&[("alpha", format_rational(&p.alpha))]),
                lhs,
                rhs,
            )
        }
        Family::Jacobi(p) => {
            let base = &p.alpha + &p.beta + rat_int(1);
            let mut lhs = Poly::zero();
            for k in 0..=n {
                let den = pochhammer(&base, n + k + 1);
                if den.is_zero() {
                    return Err(Error::Pole(format!(
                        "(alpha+beta+1)_{} vanishes at alpha={}, beta={}",
                        n + k + 1,
                        format_rational(&p.alpha),
                        format_rational(&p.beta)
                    )));
                }
                let c = pochhammer(&rat_int(-(n as i64)), k)
                    * pochhammer(&base, k)
                    * pochhammer(&(&p.alpha + rat_int(k as i64 + 1)), n - k)
                    * (&p.alpha + &p.beta + rat_int(2 * k as i64 + 1))
                    / den;
                lhs = &lhs + &jacobi(k, p, JacobiVariant::Def1).scale(&c);
            }
            let rhs = Poly::from_coeffs(vec![rat(1, 2), rat(-1, 2)]).pow(n);
            (
                "monomial-jacobi",
                params_map(&[
                    ("alpha", format_rational(&p.alpha)),
                    ("beta", format_rational(&p.beta)),
                ]),
                lhs,
                rhs,
            )
        }
    };
    let mut report = IdentityReport::new(identity, params, (n, n));
    if lhs != rhs {
        report.record_failure(vec![n as i64], rhs.to_string(), lhs.to_string());
    }
    Ok(report)
}

// === scalar summation lemmas ===============================================

/// The telescoping Pochhammer sum
/// `S(b, n) = Σ_{k=0}^{n} (−n)_k (b)_k (b+2k) / ((b+1)_{n+k} · k!)`.
///
/// Evaluates to `b` at `n = 0` and vanishes for every `n ≥ 1`; the value
/// is returned for the caller to compare. Rejects parameter points where a
/// denominator `(b+1)_{n+k}` vanishes.
pub fn vanishing_sum(b: &Rational, n: u32) -> Result<Rational> {
    let mut sum = Rational::zero();
    for k in 0..=n {
        let den = pochhammer(&(b + rat_int(1)), n + k);
        if den.is_zero() {
            return Err(Error::Pole(format!(
                "(b+1)_{} vanishes at b={}",
                n + k,
                format_rational(b)
            )));
        }
        sum += pochhammer(&rat_int(-(n as i64)), k)
            * pochhammer(b, k)
            * (b + rat_int(2 * k as i64))
            / (den * factorial(k));
    }
    Ok(sum)
}

/// The terminating Vandermonde sum `Σ_{k=0}^{n} (−n)_k (b)_k / ((c)_k k!)`,
/// which evaluates in closed form to `(c−b)_n/(c)_n` whenever `(c)_n ≠ 0`.
///
/// The sum is returned for the caller to compare against the closed form.
pub fn vandermonde(b: &Rational, c: &Rational, n: u32) -> Result<Rational> {
    if pochhammer(c, n).is_zero() {
        return Err(Error::Pole(format!(
            "(c)_{n} vanishes at c={}",
            format_rational(c)
        )));
    }
    let mut sum = Rational::zero();
    for k in 0..=n {
        sum += pochhammer(&rat_int(-(n as i64)), k) * pochhammer(b, k)
            / (pochhammer(c, k) * factorial(k));
    }
    Ok(sum)
}

// === Laguerre convolution ==================================================

/// Verifies the convolution formula
/// `Σ_{k=0}^{n} L_k^{(α)}(x) · L_{n−k}^{(β)}(y) = L_n^{(α+β+1)}(x+y)`
/// by sampling `y` at the n+1 integers `0..=n` (degree argument as in
/// [`master_jacobi`]). With `β = −n−α−1` the right side degenerates to the
/// monomial `(y−x)^n/n!`, which is covered by the same check.
pub fn laguerre_convolution(alpha: &Rational, beta: &Rational, n: u32) -> IdentityReport {
    let mut report = IdentityReport::new(
        "convolution",
        params_map(&[
            ("alpha", format_rational(alpha)),
            ("beta", format_rational(beta)),
        ]),
        (n, n),
    );
    let left_members: Vec<Poly> = (0..=n)
        .map(|k| laguerre(k, &LaguerreParams::new(alpha.clone())))
        .collect();
    let right_params = LaguerreParams::new(beta.clone());
    let combined = laguerre(n, &LaguerreParams::new(alpha + beta + rat_int(1)));
    for r in 0..=n {
        let y0 = rat_int(r as i64);
        let mut lhs = Poly::zero();
        for k in 0..=n {
            let value = laguerre(n - k, &right_params).evaluate(&y0);
            lhs = &lhs + &left_members[k as usize].scale(&value);
        }
        let rhs = combined.compose_affine(&rat_int(1), &y0);
        if lhs != rhs {
            report.record_failure(
                vec![n as i64, r as i64],
                rhs.to_string(),
                lhs.to_string(),
            );
            break;
        }
    }
    report
}

// === termwise inversion limit ==============================================

/// Certifies that each β-scaled term of the Jacobi inversion sum converges
/// to the matching term of the main Laguerre inversion sum.
///
/// The full Jacobi sum equals `δ_ij` for *every* β, so the limit statement
/// only has content term by term: with `x ↦ 1 − 2x0/β` and the scaling
/// `β^{i−j}`, each Jacobi term must approach its Laguerre counterpart at
/// rate `O(1/β)`. This evaluates the total termwise deviation
/// `e(β) = Σ_k |jacobi term − laguerre term|` exactly and certifies
/// `e(β)·β` via [`convergence_certificate`].
pub fn inversion_limit_check(
    alpha: &Rational,
    i: u32,
    j: u32,
    x0: &Rational,
    beta_schedule: &[Rational],
    tolerance: &Rational,
) -> Result<IdentityReport> {
    assert!(j <= i, "inversion indices need j <= i");
    validate_schedule(beta_schedule)?;
    let mut laguerre_terms = Vec::with_capacity((i - j + 1) as usize);
    for k in j..=i {
        let left = laguerre(
            i - k,
            &LaguerreParams::new(-alpha - rat_int(i as i64 + 1)),
        )
        .evaluate(&-x0.clone());
        let right = laguerre(k - j, &LaguerreParams::new(alpha + rat_int(j as i64)))
            .evaluate(x0);
        laguerre_terms.push(left * right);
    }
    let mut scaled = Vec::with_capacity(beta_schedule.len());
    for beta in beta_schedule {
        let point = rat_int(1) - rat_int(2) * x0 / beta;
        let mut deviation = Rational::zero();
        for k in j..=i {
            let weight = inversion_weight(alpha, beta, i, j, k)?;
            let left = jacobi(
                i - k,
                &JacobiParams::new(
                    -alpha - rat_int(i as i64 + 1),
                    -beta - rat_int(i as i64 + 1),
                ),
                JacobiVariant::Def1,
            )
            .evaluate(&point);
            let right = jacobi(
                k - j,
                &JacobiParams::new(alpha + rat_int(j as i64), beta + rat_int(j as i64)),
                JacobiVariant::Def1,
            )
            .evaluate(&point);
            let term = rational_pow(beta, i - j) * weight * left * right;
            deviation += (term - &laguerre_terms[(k - j) as usize]).abs();
        }
        scaled.push(deviation * beta);
    }
    let mut report = IdentityReport::new(
        "inversion-limit",
        params_map(&[
            ("alpha", format_rational(alpha)),
            ("tolerance", format_rational(tolerance)),
            ("x0", format_rational(x0)),
        ]),
        (j, i),
    );
    if !convergence_certificate(&scaled, tolerance) {
        report.record_failure(
            vec![i as i64, j as i64],
            "non-increasing difference envelope".into(),
            format_sequence(x0, &scaled),
        );
    }
    Ok(report)
}

// === tests =================================================================
