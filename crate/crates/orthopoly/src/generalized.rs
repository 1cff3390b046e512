//! Mass-point generalizations of the classical families.
//!
//! Provides:
//! - [`GeneralizedJacobiParams`], [`gen_jacobi`] — Jacobi weight plus point
//!   masses at the endpoints, with closed-form construction
//! - [`SobolevLaguerreParams`], [`sobolev_laguerre`] — Laguerre measure plus
//!   value and derivative masses at the origin
//! - [`sym_ultraspherical`] — the symmetric (ultraspherical) specialization,
//!   with its coefficient factorizations
//! - [`inner_product`], [`sobolev_inner_product`] — exact inner products
//!   certifying orthogonality
//! - [`limit_check_gen_jacobi_to_sobolev`] — scaling-limit certificate

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::families::{
    convergence_certificate, format_sequence, jacobi, laguerre, validate_schedule, JacobiParams,
    JacobiVariant, LaguerreParams,
};
use crate::poly::Poly;
use crate::rational::{binom_general, format_rational, pochhammer, rat_int, Rational};
use crate::report::{params_map, IdentityReport};

/// `binom(a, k)` extended by zero to negative `k`, so sums indexed past a
/// family's degree truncate silently.
fn binom_or_zero(a: &Rational, k: i64) -> Rational {
    if k < 0 {
        Rational::from_integer(0.into())
    } else {
        binom_general(a, k as u32)
    }
}

fn require_nonnegative(value: &Rational, what: &str) -> Result<()> {
    if value.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "{what} must be nonnegative, got {}",
            format_rational(value)
        )));
    }
    Ok(())
}

fn require_above_minus_one(value: &Rational, what: &str) -> Result<()> {
    if *value <= rat_int(-1) {
        return Err(Error::InvalidParameter(format!(
            "{what} must exceed -1, got {}",
            format_rational(value)
        )));
    }
    Ok(())
}

// === generalized Jacobi ====================================================

/// Parameters of the measure `(1−x)^α (1+x)^β dx` (normalized to unit mass)
/// plus a point mass `mass_minus` at `x = −1` and `mass_plus` at `x = +1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedJacobiParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub mass_minus: Rational,
    pub mass_plus: Rational,
}

impl GeneralizedJacobiParams {
    /// Validates `α > −1`, `β > −1`, masses `≥ 0`, and `α + β + 1 ≠ 0`
    /// (at `α + β + 1 = 0` the closed-form coefficients have a removable
    /// case this crate does not take a stance on — rejected with
    /// [`Error::ContinuityCase`]).
    pub fn new(
        alpha: Rational,
        beta: Rational,
        mass_minus: Rational,
        mass_plus: Rational,
    ) -> Result<Self> {
        require_above_minus_one(&alpha, "alpha")?;
        require_above_minus_one(&beta, "beta")?;
        require_nonnegative(&mass_minus, "mass at -1")?;
        require_nonnegative(&mass_plus, "mass at +1")?;
        if (&alpha + &beta + rat_int(1)).is_zero() {
            return Err(Error::ContinuityCase(
                "alpha + beta + 1 = 0 requires a limiting interpretation".into(),
            ));
        }
        Ok(GeneralizedJacobiParams {
            alpha,
            beta,
            mass_minus,
            mass_plus,
        })
    }

    fn base(&self) -> JacobiParams {
        JacobiParams::new(self.alpha.clone(), self.beta.clone())
    }
}

/// The degree-`n` member orthogonal under [`inner_product`]:
///
/// ```text
/// A₀·Pₙ^{(α,β)} + [A₁·(1−x) − A₂·(1+x)]·D Pₙ^{(α,β)}
/// ```
///
/// with the `A`-coefficients rational in the parameters and masses.
/// Reduces to `Pₙ^{(α,β)}` when both masses vanish.
pub fn gen_jacobi(n: u32, params: &GeneralizedJacobiParams) -> Poly {
    let GeneralizedJacobiParams {
        alpha: al,
        beta: be,
        mass_minus: m,
        mass_plus: nn,
    } = params;
    let deg = i64::from(n);
    let sum = al + be;
    let n_al = al + rat_int(deg);
    let n_be = be + rat_int(deg);
    let n_sum = &sum + rat_int(deg);

    let a0 = rat_int(1)
        + m * binom_or_zero(&n_be, deg - 1) * binom_or_zero(&(&n_sum + rat_int(1)), deg)
            / binom_or_zero(&n_al, deg)
        + nn * binom_or_zero(&n_al, deg - 1) * binom_or_zero(&(&n_sum + rat_int(1)), deg)
            / binom_or_zero(&n_be, deg)
        + m * nn * (&sum + rat_int(2)) * (&sum + rat_int(2))
            / ((al + rat_int(1)) * (be + rat_int(1)))
            * binom_or_zero(&(&n_sum + rat_int(1)), deg - 1)
            * binom_or_zero(&(&n_sum + rat_int(1)), deg - 1);
    let a1 = m / (&sum + rat_int(1)) * binom_or_zero(&n_be, deg) * binom_or_zero(&n_sum, deg)
        / binom_or_zero(&n_al, deg)
        + m * nn / (al + rat_int(1))
            * binom_or_zero(&n_sum, deg - 1)
            * binom_or_zero(&(&n_sum + rat_int(1)), deg);
    let a2 = nn / (&sum + rat_int(1)) * binom_or_zero(&n_al, deg) * binom_or_zero(&n_sum, deg)
        / binom_or_zero(&n_be, deg)
        + m * nn / (be + rat_int(1))
            * binom_or_zero(&n_sum, deg - 1)
            * binom_or_zero(&(&n_sum + rat_int(1)), deg);

    let member = jacobi(n, &params.base(), JacobiVariant::Def1);
    let one_minus_x = Poly::from_coeffs(vec![rat_int(1), rat_int(-1)]);
    let one_plus_x = Poly::from_coeffs(vec![rat_int(1), rat_int(1)]);
    let bracket = &one_minus_x.scale(&a1) - &one_plus_x.scale(&a2);
    &member.scale(&a0) + &(&bracket * &member.derivative(1))
}

/// The `k`-th moment of the generalized Jacobi measure, with the
/// continuous part normalized to unit mass:
///
/// ```text
/// m_k = Σ_{j=0}^{k} binom(k,j)·(−2)^j·(α+1)_j/(α+β+2)_j
///       + mass_minus·(−1)^k + mass_plus
/// ```
pub fn jacobi_moment(k: u32, params: &GeneralizedJacobiParams) -> Rational {
    let al1 = &params.alpha + rat_int(1);
    let den_base = &params.alpha + &params.beta + rat_int(2);
    let mut continuous = Rational::zero();
    for j in 0..=k {
        let term = binom_general(&rat_int(i64::from(k)), j)
            * crate::rational::rational_pow(&rat_int(-2), j)
            * pochhammer(&al1, j)
            / pochhammer(&den_base, j);
        continuous += term;
    }
    let sign = if k % 2 == 0 { rat_int(1) } else { rat_int(-1) };
    continuous + &params.mass_minus * sign + &params.mass_plus
}

/// Exact inner product against the generalized Jacobi measure: expand
/// `p·q` and contract with [`jacobi_moment`].
pub fn inner_product(p: &Poly, q: &Poly, params: &GeneralizedJacobiParams) -> Rational {
    let product = p * q;
    product
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * jacobi_moment(k as u32, params))
        .sum()
}

// === Sobolev-type Laguerre =================================================

/// Parameters of the inner product `∫₀^∞ x^α e^{−x} f g dx / Γ(α+1) +
/// mass_value·f(0)g(0) + mass_derivative·f′(0)g′(0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SobolevLaguerreParams {
    pub alpha: Rational,
    pub mass_value: Rational,
    pub mass_derivative: Rational,
}

impl SobolevLaguerreParams {
    /// Validates `α > −1` and masses `≥ 0`.
    pub fn new(alpha: Rational, mass_value: Rational, mass_derivative: Rational) -> Result<Self> {
        require_above_minus_one(&alpha, "alpha")?;
        require_nonnegative(&mass_value, "value mass")?;
        require_nonnegative(&mass_derivative, "derivative mass")?;
        Ok(SobolevLaguerreParams {
            alpha,
            mass_value,
            mass_derivative,
        })
    }

    fn base(&self) -> LaguerreParams {
        LaguerreParams::new(self.alpha.clone())
    }
}

/// The degree-`n` member orthogonal under [`sobolev_inner_product`]:
///
/// ```text
/// A₀·Lₙ^{(α)} + A₁·D Lₙ^{(α)} + A₂·D² Lₙ^{(α)}
/// ```
///
/// Reduces to `Lₙ^{(α)}` when both masses vanish.
pub fn sobolev_laguerre(n: u32, params: &SobolevLaguerreParams) -> Poly {
    let SobolevLaguerreParams {
        alpha: al,
        mass_value: m,
        mass_derivative: nn,
    } = params;
    let deg = i64::from(n);
    let n_al = al + rat_int(deg);
    let al1 = al + rat_int(1);

    let a0 = rat_int(1)
        + m * binom_or_zero(&n_al, deg - 1)
        + (rat_int(deg) * (al + rat_int(2)) - &al1) / (&al1 * (al + rat_int(3)))
            * nn
            * binom_or_zero(&n_al, deg - 2)
        + m * nn / (&al1 * (al + rat_int(2)))
            * binom_or_zero(&n_al, deg - 1)
            * binom_or_zero(&(&n_al + rat_int(1)), deg - 2);
    let a1 = m * binom_or_zero(&n_al, deg)
        + rat_int(deg - 1) / &al1 * nn * binom_or_zero(&n_al, deg - 1)
        + rat_int(2) * m * nn / (&al1 * &al1)
            * binom_or_zero(&n_al, deg)
            * binom_or_zero(&(&n_al + rat_int(1)), deg - 2);
    let a2 = nn / &al1 * binom_or_zero(&n_al, deg - 1)
        + m * nn / (&al1 * &al1)
            * binom_or_zero(&n_al, deg)
            * binom_or_zero(&(&n_al + rat_int(1)), deg - 1);

    let member = laguerre(n, &params.base());
    &(&member.scale(&a0) + &member.derivative(1).scale(&a1)) + &member.derivative(2).scale(&a2)
}

/// Exact Sobolev inner product: the normalized continuous moments are
/// `(α+1)_k`, plus the value and derivative masses at the origin.
pub fn sobolev_inner_product(p: &Poly, q: &Poly, params: &SobolevLaguerreParams) -> Rational {
    let al1 = &params.alpha + rat_int(1);
    let product = p * q;
    let continuous: Rational = product
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * pochhammer(&al1, k as u32))
        .sum();
    let origin = Rational::zero();
    let value_part = &params.mass_value * p.evaluate(&origin) * q.evaluate(&origin);
    let derivative_part = &params.mass_derivative
        * p.derivative(1).evaluate(&origin)
        * q.derivative(1).evaluate(&origin);
    continuous + value_part + derivative_part
}

// === symmetric ultraspherical ==============================================

/// Which normalization of the symmetric family to construct. Both share
/// the shape `C₀·Pₙ^{(α,α)} − C₁·x·D Pₙ^{(α,α)}`; the `P` variant's
/// coefficients carry an extra factor `1 + 2M·binom(n+2α+1, n−1)` (see
/// [`sym_ultra_edge_factor`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UltrasphericalVariant {
    P,
    Q,
}

/// The common factor `b₁ = 1 + 2M·binom(n+2α+1, n−1)` relating the two
/// variants: `C₀(P) = b₁²  = b₁·C₀(Q)` and `C₁(P) = b₁·C₁(Q)`.
pub fn sym_ultra_edge_factor(n: u32, alpha: &Rational, mass: &Rational) -> Rational {
    let two_al = rat_int(2) * alpha;
    rat_int(1)
        + rat_int(2) * mass * binom_or_zero(&(&two_al + rat_int(i64::from(n) + 1)), i64::from(n) - 1)
}

/// The coefficient pair `(C₀, C₁)` of a symmetric member, in a
/// cancellation-free form valid for every `α > −1` (including `2α+1 = 0`,
/// where the textbook display of `C₁` has a removable singularity):
///
/// ```text
/// C₁(Q) = 2M·(2α+2)_{n−1}/n!    (0 when n = 0)
/// ```
pub fn sym_ultra_coefficients(
    n: u32,
    alpha: &Rational,
    mass: &Rational,
    variant: UltrasphericalVariant,
) -> (Rational, Rational) {
    let deg = i64::from(n);
    let two_al = rat_int(2) * alpha;
    let b1 = sym_ultra_edge_factor(n, alpha, mass);
    let c1_base = if n == 0 {
        Rational::zero()
    } else {
        rat_int(2) * mass * pochhammer(&(&two_al + rat_int(2)), n - 1)
            / crate::rational::factorial(n)
    };
    match variant {
        UltrasphericalVariant::Q => (b1, c1_base),
        UltrasphericalVariant::P => {
            let c0 = &b1 * &b1;
            let c1 = c1_base
                + rat_int(2) * mass * mass / (alpha + rat_int(1))
                    * binom_or_zero(&(&two_al + rat_int(deg)), deg - 1)
                    * binom_or_zero(&(&two_al + rat_int(deg) + rat_int(1)), deg);
            (c0, c1)
        }
    }
}

/// The degree-`n` symmetric generalized ultraspherical polynomial
/// `C₀·Pₙ^{(α,α)} − C₁·x·D Pₙ^{(α,α)}`; requires `α > −1` and `M ≥ 0`.
/// Every member has parity `(−1)^n`, and the `P` variant agrees exactly
/// with [`gen_jacobi`] at `β = α` and equal masses.
pub fn sym_ultraspherical(
    n: u32,
    alpha: &Rational,
    mass: &Rational,
    variant: UltrasphericalVariant,
) -> Result<Poly> {
    require_above_minus_one(alpha, "alpha")?;
    require_nonnegative(mass, "mass")?;
    let (c0, c1) = sym_ultra_coefficients(n, alpha, mass, variant);
    let member = jacobi(
        n,
        &JacobiParams::new(alpha.clone(), alpha.clone()),
        JacobiVariant::Def1,
    );
    let x_dp = &Poly::x() * &member.derivative(1);
    Ok(&member.scale(&c0) - &x_dp.scale(&c1))
}

// === scaling limit =========================================================

/// Exact-arithmetic certificate for the scaling limit
/// `Pₙ^{α,β,0,M}(1 − 2x/β) → Lₙ^{α,M,0}(x)` as `β → ∞` — the endpoint
/// mass at `x = +1` becomes the Sobolev value mass at the origin. Same
/// `O(1/β)` certificate as the classical limit check.
pub fn limit_check_gen_jacobi_to_sobolev(
    n: u32,
    alpha: &Rational,
    mass: &Rational,
    samples: &[Rational],
    beta_schedule: &[Rational],
    tolerance: &Rational,
) -> Result<IdentityReport> {
    validate_schedule(beta_schedule)?;
    let mut report = IdentityReport::new(
        "gen-limit",
        params_map(&[
            ("alpha", format_rational(alpha)),
            ("mass", format_rational(mass)),
            ("tolerance", format_rational(tolerance)),
        ]),
        (n, n),
    );
    let sobolev = sobolev_laguerre(
        n,
        &SobolevLaguerreParams::new(alpha.clone(), mass.clone(), Rational::zero())?,
    );
    for (sample_idx, x0) in samples.iter().enumerate() {
        let target = sobolev.evaluate(x0);
        let mut scaled = Vec::with_capacity(beta_schedule.len());
        for beta in beta_schedule {
            let params = GeneralizedJacobiParams::new(
                alpha.clone(),
                beta.clone(),
                Rational::zero(),
                mass.clone(),
            )?;
            let point = rat_int(1) - rat_int(2) * x0 / beta;
            scaled.push((gen_jacobi(n, &params).evaluate(&point) - &target).abs() * beta);
        }
        if !convergence_certificate(&scaled, tolerance) {
            report.record_failure(
                vec![i64::from(n), sample_idx as i64],
                "non-increasing difference envelope".into(),
                format_sequence(x0, &scaled),
            );
        }
    }
    Ok(report)
}

// === tests =================================================================
