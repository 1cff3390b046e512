//! Classical orthogonal polynomial families.
//!
//! * [`jacobi`] — `P_n^{(α,β)}`, constructed by any of three independent
//!   closed forms ([`JacobiVariant`]) whose agreement is a cross-check.
//! * [`laguerre`] — `L_n^{(α)}`.
//! * [`charlier`] — `C_n^{(a)}`, by exact coefficient extraction from the
//!   generating function `e^{−at}(1+t)^x`.
//! * [`check_derivative_shift`] — the parameter-shift action of `D^i` on
//!   both differentiable families.
//! * [`ode_residual`] — the classical second-order operator applied to a
//!   candidate solution; zero exactly on the matching family member.
//! * [`limit_check_jacobi_to_laguerre`] — exact-arithmetic certificate
//!   that `P_n^{(α,β)}(1 − 2x/β) → L_n^{(α)}(x)` at rate `O(1/β)`.
//!
//! All parameters are unconstrained rationals: each closed form below is a
//! finite sum of Pochhammer products, valid for every `α`, `β`, `a`.

use num::Signed;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{
    binom_general, factorial, format_rational, pochhammer, rat, rat_int, rational_pow, Rational,
};
use crate::report::{params_map, IdentityReport};

// === parameter records =====================================================

/// Jacobi parameters `(α, β)`. No constraint at construction; operations
/// that divide by Pochhammer symbols install their own pole guards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiParams {
    pub alpha: Rational,
    pub beta: Rational,
}

impl JacobiParams {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        JacobiParams { alpha, beta }
    }
}

/// Laguerre parameter `α`, unconstrained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaguerreParams {
    pub alpha: Rational,
}

impl LaguerreParams {
    pub fn new(alpha: Rational) -> Self {
        LaguerreParams { alpha }
    }
}

/// Charlier parameter `a`, unconstrained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharlierParams {
    pub a: Rational,
}

impl CharlierParams {
    pub fn new(a: Rational) -> Self {
        CharlierParams { a }
    }
}

/// Selector for the operations shared by the two differentiable families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Jacobi(JacobiParams),
    Laguerre(LaguerreParams),
}

/// The three independent closed forms for `P_n^{(α,β)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobiVariant {
    Def1,
    Def2,
    Def3,
}

// === constructors ==========================================================

/// `P_n^{(α,β)}` as an exact polynomial, degree ≤ n (the degree drops for
/// degenerate parameters, e.g. `P_n^{(−n,−n)} = 0` for n ≥ 1).
///
/// The three variants are implemented from scratch rather than derived
/// from one another, so their agreement genuinely cross-validates the
/// Pochhammer bookkeeping:
///
/// * `Def1`: `Σ_k (n+α+β+1)_k/k! · (α+k+1)_{n−k}/(n−k)! · ((x−1)/2)^k`
/// * `Def2`: `(−1)^n Σ_k (−n−k−α−β)_k/k! · (−n−α)_{n−k}/(n−k)! · ((x−1)/2)^k`
/// * `Def3`: `2^{−n} Σ_k C(n+α, n−k) C(n+β, k) (x−1)^k (x+1)^{n−k}`
pub fn jacobi(n: u32, params: &JacobiParams, variant: JacobiVariant) -> Poly {
    let JacobiParams { alpha, beta } = params;
    let half_xm1 = Poly::from_coeffs(vec![rat(-1, 2), rat(1, 2)]);
    let mut sum = Poly::zero();
    match variant {
        JacobiVariant::Def1 => {
            for k in 0..=n {
                let c = pochhammer(&(alpha + beta + rat_int(n as i64 + 1)), k) / factorial(k)
                    * pochhammer(&(alpha + rat_int(k as i64 + 1)), n - k)
                    / factorial(n - k);
                sum = &sum + &half_xm1.pow(k).scale(&c);
            }
        }
        JacobiVariant::Def2 => {
            for k in 0..=n {
                let c = pochhammer(&(-alpha - beta - rat_int((n + k) as i64)), k) / factorial(k)
                    * pochhammer(&(-alpha - rat_int(n as i64)), n - k)
                    / factorial(n - k);
                sum = &sum + &half_xm1.pow(k).scale(&c);
            }
            if n % 2 == 1 {
                sum = -&sum;
            }
        }
        JacobiVariant::Def3 => {
            let xm1 = Poly::from_coeffs(vec![rat_int(-1), rat_int(1)]);
            let xp1 = Poly::from_coeffs(vec![rat_int(1), rat_int(1)]);
            for k in 0..=n {
                let c = binom_general(&(alpha + rat_int(n as i64)), n - k)
                    * binom_general(&(beta + rat_int(n as i64)), k);
                sum = &sum + &(&xm1.pow(k) * &xp1.pow(n - k)).scale(&c);
            }
            sum = sum.scale(&rational_pow(&rat(1, 2), n));
        }
    }
    sum
}

/// `L_n^{(α)} = Σ_k (−1)^k C(n+α, n−k) x^k / k!`, degree exactly n.
pub fn laguerre(n: u32, params: &LaguerreParams) -> Poly {
    let alpha = &params.alpha;
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let mut c = binom_general(&(alpha + rat_int(n as i64)), n - k) / factorial(k);
        if k % 2 == 1 {
            c = -c;
        }
        coeffs.push(c);
    }
    Poly::from_coeffs(coeffs)
}

/// `C_n^{(a)}`, degree exactly n, extracted from the generating function:
/// the coefficient of `t^n` in `e^{−at}(1+t)^x` is
/// `Σ_{m=0}^{n} C(x, m) · (−a)^{n−m}/(n−m)!`, where `C(x, m)` is the
/// generalized binomial expanded as a degree-m polynomial in `x`.
pub fn charlier(n: u32, params: &CharlierParams) -> Poly {
    let a = &params.a;
    let mut sum = Poly::zero();
    for m in 0..=n {
        // C(x, m) = x(x−1)···(x−m+1)/m!
        let mut falling = Poly::one();
        for r in 0..m {
            falling = &falling * &Poly::from_coeffs(vec![rat_int(-(r as i64)), rat_int(1)]);
        }
        let c = rational_pow(&-a.clone(), n - m) / factorial(n - m);
        sum = &sum + &falling.scale(&(c / factorial(m)));
    }
    sum
}

// === derivative shifts and differential equations ==========================

/// Checks the parameter-shift action of `D^i` as exact `Poly` equality:
/// `D^i P_n^{(α,β)} = ((n+α+β+1)_i / 2^i) · P_{n−i}^{(α+i,β+i)}` and
/// `D^i L_n^{(α)} = (−1)^i · L_{n−i}^{(α+i)}`. Requires `i ≤ n`.
pub fn check_derivative_shift(family: &Family, n: u32, i: u32) -> IdentityReport {
    assert!(i <= n, "derivative order {i} exceeds degree {n}");
    let shift = rat_int(i as i64);
    let (lhs, rhs, params) = match family {
        Family::Jacobi(p) => {
            let scale = pochhammer(&(&p.alpha + &p.beta + rat_int(n as i64 + 1)), i)
                / rational_pow(&rat_int(2), i);
            let shifted = JacobiParams::new(&p.alpha + &shift, &p.beta + &shift);
            (
                jacobi(n, p, JacobiVariant::Def1).derivative(i),
                jacobi(n - i, &shifted, JacobiVariant::Def1).scale(&scale),
                params_map(&[
                    ("family", "jacobi".into()),
                    ("alpha", format_rational(&p.alpha)),
                    ("beta", format_rational(&p.beta)),
                ]),
            )
        }
        Family::Laguerre(p) => {
            let sign = if i % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            let shifted = LaguerreParams::new(&p.alpha + &shift);
            (
                laguerre(n, p).derivative(i),
                laguerre(n - i, &shifted).scale(&sign),
                params_map(&[
                    ("family", "laguerre".into()),
                    ("alpha", format_rational(&p.alpha)),
                ]),
            )
        }
    };
    let mut report = IdentityReport::new("diff-shift", params, (n, n));
    if lhs != rhs {
        report.record_failure(
            vec![n as i64, i as i64],
            rhs.to_string(),
            lhs.to_string(),
        );
    }
    report
}

/// Applies the classical second-order operator to `y` and returns the
/// residual polynomial:
///
/// * Jacobi: `(1−x²)y″ + [β−α−(α+β+2)x]y′ + n(n+α+β+1)y`
/// * Laguerre: `xy″ + (α+1−x)y′ + ny`
///
/// The residual is the zero polynomial exactly when `y` is the degree-n
/// member of the family.
pub fn ode_residual(family: &Family, y: &Poly, n: u32) -> Poly {
    let y1 = y.derivative(1);
    let y2 = y.derivative(2);
    match family {
        Family::Jacobi(p) => {
            let one_minus_x2 =
                Poly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(-1)]);
            let linear = Poly::from_coeffs(vec![
                &p.beta - &p.alpha,
                -(&p.alpha + &p.beta + rat_int(2)),
            ]);
            let eigen = rat_int(n as i64)
                * (&p.alpha + &p.beta + rat_int(n as i64 + 1));
            &(&(&one_minus_x2 * &y2) + &(&linear * &y1)) + &y.scale(&eigen)
        }
        Family::Laguerre(p) => {
            let x = Poly::x();
            let linear = Poly::from_coeffs(vec![&p.alpha + rat_int(1), rat_int(-1)]);
            let eigen = rat_int(n as i64);
            &(&(&x * &y2) + &(&linear * &y1)) + &y.scale(&eigen)
        }
    }
}

// === β → ∞ limit certificate ===============================================

/// Default allowance for the numeric limit certificates: `1/10000`.
pub fn default_limit_tolerance() -> Rational {
    rat(1, 10_000)
}

/// Certifies that a sequence of exact nonnegative values has stabilized.
///
/// The first entry is discarded as pre-asymptotic; over the remaining
/// entries the successive difference magnitudes `|c_{m+1} − c_m|` must be
/// non-increasing, up to an allowance of `tolerance · (1 + max c)` that
/// absorbs higher-order oscillation once the sequence has converged. A
/// sequence growing along the schedule fails immediately (its differences
/// grow geometrically); fewer than four entries pass vacuously.
pub fn convergence_certificate(values: &[Rational], tolerance: &Rational) -> bool {
    if values.len() < 4 {
        return true;
    }
    let tail = &values[1..];
    let peak = tail.iter().max().expect("nonempty tail");
    let allowance = tolerance * (rat_int(1) + peak);
    let diffs: Vec<Rational> = tail.windows(2).map(|w| (&w[1] - &w[0]).abs()).collect();
    diffs.windows(2).all(|d| d[1] <= &d[0] + &allowance)
}

/// Exact-arithmetic certificate for the scaling limit
/// `P_n^{(α,β)}(1 − 2x/β) → L_n^{(α)}(x)` as `β → ∞`.
///
/// For each sample `x0` this evaluates `e(β) = |P_n^{(α,β)}(1−2x0/β) −
/// L_n^{(α)}(x0)|` in exact rationals along the β-schedule and certifies
/// that `e(β)·β` stays bounded via [`convergence_certificate`] — an
/// `O(1/β)` convergence rate witness. The schedule must be positive and
/// strictly increasing.
pub fn limit_check_jacobi_to_laguerre(
    n: u32,
    alpha: &Rational,
    samples: &[Rational],
    beta_schedule: &[Rational],
    tolerance: &Rational,
) -> Result<IdentityReport> {
    validate_schedule(beta_schedule)?;
    let mut report = IdentityReport::new(
        "limit",
        params_map(&[
            ("alpha", format_rational(alpha)),
            ("tolerance", format_rational(tolerance)),
        ]),
        (n, n),
    );
    let lag = laguerre(n, &LaguerreParams::new(alpha.clone()));
    for (sample_idx, x0) in samples.iter().enumerate() {
        let at_sample = lag.evaluate(x0);
        let scaled: Vec<Rational> = beta_schedule
            .iter()
            .map(|beta| {
                let jac = jacobi(
                    n,
                    &JacobiParams::new(alpha.clone(), beta.clone()),
                    JacobiVariant::Def1,
                );
                let point = rat_int(1) - rat_int(2) * x0 / beta;
                (jac.evaluate(&point) - &at_sample).abs() * beta
            })
            .collect();
        if !convergence_certificate(&scaled, tolerance) {
            report.record_failure(
                vec![n as i64, sample_idx as i64],
                "non-increasing difference envelope".into(),
                format_sequence(x0, &scaled),
            );
        }
    }
    Ok(report)
}

/// Renders a certificate sequence for failure reports.
pub(crate) fn format_sequence(x0: &Rational, scaled: &[Rational]) -> String {
    let entries: Vec<String> = scaled.iter().map(format_rational).collect();
    format!("x0={}: e(beta)*beta = [{}]", format_rational(x0), entries.join(", "))
}

/// Shared precondition for the β-schedules of the limit certificates.
pub(crate) fn validate_schedule(beta_schedule: &[Rational]) -> Result<()> {
    let positive = beta_schedule.iter().all(|b| b.is_positive());
    let increasing = beta_schedule.windows(2).all(|w| w[0] < w[1]);
    if !positive || !increasing {
        return Err(Error::InvalidParameter(
            "beta schedule must be positive and strictly increasing".into(),
        ));
    }
    Ok(())
}

// === tests =================================================================
