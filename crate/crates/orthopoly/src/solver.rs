//! Triangular systems built from derivatives of orthogonal-family members.
//!
//! Provides:
//! - [`TriangularPolyMatrix`] — a lower-triangular matrix of polynomials
//! - [`build_t`], [`build_u`] — the derivative matrix of a Jacobi family
//!   and its closed-form inverse
//! - [`TriangularSystem`] — a system `Σ_i A_i · DⁱPₙ = Fₙ` over one family
//! - [`solve_closed_form`], [`solve_backsub`] — two independent exact
//!   solvers, both of which verify their residuals before returning
//! - [`SolvedSystem`] — a serializable record of a solved system

use std::collections::BTreeMap;

use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{jacobi, laguerre, JacobiParams, JacobiVariant, LaguerreParams};
use crate::poly::Poly;
use crate::rational::{format_rational, pochhammer, rat_int, rational_pow};
use crate::sampling::{random_poly, rng_from_seed};

// === triangular matrices ===================================================

/// A lower-triangular square matrix whose entries are polynomials.
///
/// Row `i` stores entries for columns `0..=i`; everything above the
/// diagonal is implicitly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularPolyMatrix {
    rows: Vec<Vec<Poly>>,
}

impl TriangularPolyMatrix {
    /// Builds a matrix from its rows; row `i` must have exactly `i + 1`
    /// entries.
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), i + 1, "row {i} must have {} entries", i + 1);
        }
        TriangularPolyMatrix { rows }
    }

    /// Number of rows (and columns).
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// The entry in row `i`, column `j`; zero above the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> Poly {
        if j <= i {
            self.rows[i][j].clone()
        } else {
            Poly::zero()
        }
    }

    /// Exact product of two lower-triangular matrices of equal size.
    pub fn mul(&self, other: &TriangularPolyMatrix) -> TriangularPolyMatrix {
        assert_eq!(self.size(), other.size(), "matrix sizes must match");
        let rows = (0..self.size())
            .map(|i| {
                (0..=i)
                    .map(|j| {
                        let mut sum = Poly::zero();
                        for k in j..=i {
                            sum = &sum + &(&self.rows[i][k] * &other.rows[k][j]);
                        }
                        sum
                    })
                    .collect()
            })
            .collect();
        TriangularPolyMatrix { rows }
    }

    /// True when the matrix is the identity.
    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, p)| if i == j { *p == Poly::one() } else { p.is_zero() })
        })
    }
}

/// Fails with [`Error::Singular`] when `α + β` is an integer `≤ −2`; the
/// derivative matrix of the family loses invertibility exactly there
/// (a diagonal constant vanishes).
fn check_invertible(params: &JacobiParams) -> Result<()> {
    let s = &params.alpha + &params.beta;
    if s.is_integer() && s <= rat_int(-2) {
        return Err(Error::Singular(format!(
            "alpha + beta = {} is an integer <= -2",
            format_rational(&s)
        )));
    }
    Ok(())
}

/// The `(n+1) × (n+1)` matrix `T` with `t_ij = Dʲ Pᵢ` for the Jacobi
/// family with the given parameters.
pub fn build_t(n: u32, params: &JacobiParams) -> TriangularPolyMatrix {
    let rows = (0..=n)
        .map(|i| {
            let member = jacobi(i, params, JacobiVariant::Def1);
            (0..=i).map(|j| member.derivative(j)).collect()
        })
        .collect();
    TriangularPolyMatrix { rows }
}

/// The closed-form inverse `U` of [`build_t`]:
///
/// ```text
/// u_ij = (α+β+2j+1) · 2ⁱ / (α+β+j+1)_{i+1} · P_{i−j}^{(−α−i−1, −β−i−1)}
/// ```
///
/// Fails with [`Error::Singular`] when the matrix is not invertible
/// (`α + β` an integer `≤ −2`) and with [`Error::Pole`] when an entry's
/// denominator `(α+β+j+1)_{i+1}` vanishes (e.g. row `j = 0` at
/// `α + β = −1`).
pub fn build_u(n: u32, params: &JacobiParams) -> Result<TriangularPolyMatrix> {
    check_invertible(params)?;
    let sum = &params.alpha + &params.beta;
    let mut rows = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let shifted = JacobiParams::new(
            -&params.alpha - rat_int(i64::from(i) + 1),
            -&params.beta - rat_int(i64::from(i) + 1),
        );
        let mut row = Vec::with_capacity(i as usize + 1);
        for j in 0..=i {
            let den = pochhammer(&(&sum + rat_int(i64::from(j) + 1)), i + 1);
            if den.is_zero() {
                return Err(Error::Pole(format!(
                    "(alpha+beta+{})_{} vanishes in the inverse entry ({i}, {j})",
                    j + 1,
                    i + 1
                )));
            }
            let weight = (&sum + rat_int(2 * i64::from(j) + 1)) * rational_pow(&rat_int(2), i) / den;
            row.push(jacobi(i - j, &shifted, JacobiVariant::Def1).scale(&weight));
        }
        rows.push(row);
    }
    Ok(TriangularPolyMatrix { rows })
}

// === triangular systems ====================================================

/// Which family's derivatives form the system matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemFamily {
    /// Equation `n` (for `n = 1..=order`) reads `Σ_{i=1}^{n} Aᵢ · DⁱPₙ = Fₙ`.
    Jacobi(JacobiParams),
    /// Equation `m` (for `m = 1..=order`) reads
    /// `Σ_{i=1}^{m} Aᵢ · D^{i+shift} L_{m+shift} = F_{m+shift}`.
    Laguerre { params: LaguerreParams, shift: u32 },
}

impl SystemFamily {
    /// Family tag used in serialized output.
    pub fn name(&self) -> &'static str {
        match self {
            SystemFamily::Jacobi(_) => "jacobi",
            SystemFamily::Laguerre { .. } => "laguerre",
        }
    }

    fn shift(&self) -> u32 {
        match self {
            SystemFamily::Jacobi(_) => 0,
            SystemFamily::Laguerre { shift, .. } => *shift,
        }
    }

    fn params_map(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        match self {
            SystemFamily::Jacobi(p) => {
                map.insert("alpha".to_string(), format_rational(&p.alpha));
                map.insert("beta".to_string(), format_rational(&p.beta));
            }
            SystemFamily::Laguerre { params, .. } => {
                map.insert("alpha".to_string(), format_rational(&params.alpha));
            }
        }
        map
    }
}

/// A triangular system of `order` equations over one family, with
/// polynomial right-hand sides `rhs[m − 1] = F` for equation `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularSystem {
    pub family: SystemFamily,
    pub rhs: Vec<Poly>,
}

impl TriangularSystem {
    /// A system with explicitly given right-hand sides.
    pub fn new(family: SystemFamily, rhs: Vec<Poly>) -> Self {
        TriangularSystem { family, rhs }
    }

    /// A system whose right-hand sides are seeded random polynomials;
    /// equation `m`'s side has degree at most the index of the family
    /// member it involves, so the solution coefficients stay polynomial.
    pub fn random(family: SystemFamily, order: u32, seed: u64) -> Self {
        let mut rng = rng_from_seed(seed);
        let shift = family.shift();
        let rhs = (1..=order)
            .map(|m| random_poly(&mut rng, m + shift))
            .collect();
        TriangularSystem { family, rhs }
    }

    /// Number of equations.
    pub fn order(&self) -> u32 {
        self.rhs.len() as u32
    }
}

/// The residual `lhs − rhs` of each equation for a candidate solution.
pub fn residuals(system: &TriangularSystem, solution: &[Poly]) -> Vec<Poly> {
    assert_eq!(solution.len(), system.rhs.len(), "solution length must match order");
    let shift = system.family.shift();
    (1..=system.order())
        .map(|m| {
            let member = match &system.family {
                SystemFamily::Jacobi(p) => jacobi(m, p, JacobiVariant::Def1),
                SystemFamily::Laguerre { params, shift } => laguerre(m + shift, params),
            };
            let mut lhs = Poly::zero();
            for i in 1..=m {
                lhs = &lhs + &(&solution[i as usize - 1] * &member.derivative(i + shift));
            }
            &lhs - &system.rhs[m as usize - 1]
        })
        .collect()
}

fn check_residuals(system: &TriangularSystem, solution: &[Poly]) -> Result<()> {
    if let Some(m) = residuals(system, solution).iter().position(|r| !r.is_zero()) {
        return Err(Error::Residual(format!(
            "equation {} has a nonzero residual",
            m + 1
        )));
    }
    Ok(())
}

/// Solves the system by the closed-form expression for the coefficients:
///
/// - Jacobi: `Aᵢ = 2ⁱ Σ_{j=1}^{i} (α+β+2j+1)/(α+β+j+1)_{i+1} ·
///   P_{i−j}^{(−α−i−1, −β−i−1)} · Fⱼ`
/// - Laguerre with shift `k`: `Aᵢ = (−1)^{i+k} Σ_{j=1}^{i}
///   L_{i−j}^{(−α−i−k−1)}(−x) · F_{j+k}`
///
/// Verifies every residual exactly before returning.
pub fn solve_closed_form(system: &TriangularSystem) -> Result<Vec<Poly>> {
    let solution = match &system.family {
        SystemFamily::Jacobi(params) => closed_form_jacobi(params, &system.rhs)?,
        SystemFamily::Laguerre { params, shift } => {
            closed_form_laguerre(params, *shift, &system.rhs)
        }
    };
    check_residuals(system, &solution)?;
    Ok(solution)
}

fn closed_form_jacobi(params: &JacobiParams, rhs: &[Poly]) -> Result<Vec<Poly>> {
    check_invertible(params)?;
    let sum = &params.alpha + &params.beta;
    let mut solution = Vec::with_capacity(rhs.len());
    for i in 1..=rhs.len() as u32 {
        let shifted = JacobiParams::new(
            -&params.alpha - rat_int(i64::from(i) + 1),
            -&params.beta - rat_int(i64::from(i) + 1),
        );
        let mut acc = Poly::zero();
        for j in 1..=i {
            let den = pochhammer(&(&sum + rat_int(i64::from(j) + 1)), i + 1);
            if den.is_zero() {
                return Err(Error::Pole(format!(
                    "(alpha+beta+{})_{} vanishes in coefficient {i}",
                    j + 1,
                    i + 1
                )));
            }
            let weight = (&sum + rat_int(2 * i64::from(j) + 1)) / den;
            let member = jacobi(i - j, &shifted, JacobiVariant::Def1);
            acc = &acc + &(&member * &rhs[j as usize - 1]).scale(&weight);
        }
        solution.push(acc.scale(&rational_pow(&rat_int(2), i)));
    }
    Ok(solution)
}

fn closed_form_laguerre(params: &LaguerreParams, shift: u32, rhs: &[Poly]) -> Vec<Poly> {
    let mut solution = Vec::with_capacity(rhs.len());
    for i in 1..=rhs.len() as u32 {
        let shifted = LaguerreParams::new(
            -&params.alpha - rat_int(i64::from(i) + i64::from(shift) + 1),
        );
        let mut acc = Poly::zero();
        for j in 1..=i {
            let member = laguerre(i - j, &shifted).reflect();
            acc = &acc + &(&member * &rhs[j as usize - 1]);
        }
        if (i + shift) % 2 == 1 {
            acc = -&acc;
        }
        solution.push(acc);
    }
    solution
}

/// Solves the system by forward substitution, dividing by the constant
/// diagonal entries (`DⁿPₙ` or `D^{m+k}L_{m+k}`). Verifies every residual
/// exactly before returning.
pub fn solve_backsub(system: &TriangularSystem) -> Result<Vec<Poly>> {
    if let SystemFamily::Jacobi(params) = &system.family {
        check_invertible(params)?;
    }
    let shift = system.family.shift();
    let mut solution: Vec<Poly> = Vec::with_capacity(system.rhs.len());
    for m in 1..=system.order() {
        let member = match &system.family {
            SystemFamily::Jacobi(p) => jacobi(m, p, JacobiVariant::Def1),
            SystemFamily::Laguerre { params, shift } => laguerre(m + shift, params),
        };
        let mut acc = system.rhs[m as usize - 1].clone();
        for i in 1..m {
            acc = &acc - &(&solution[i as usize - 1] * &member.derivative(i + shift));
        }
        let divisor = member
            .derivative(m + shift)
            .constant_value()
            .expect("top derivative of a family member is constant");
        if divisor.is_zero() {
            return Err(Error::Singular(format!(
                "diagonal constant of equation {m} vanishes"
            )));
        }
        solution.push(acc.scale(&divisor.recip()));
    }
    check_residuals(system, &solution)?;
    Ok(solution)
}

// === serialized output =====================================================

/// A solved system in serializable form; `residuals_zero` is recomputed
/// from scratch, not assumed.
#[derive(Debug, Clone, Serialize)]
pub struct SolvedSystem {
    pub order: u32,
    pub family: String,
    pub shift: u32,
    pub params: BTreeMap<String, String>,
    pub rhs: Vec<String>,
    pub solution: Vec<String>,
    pub residuals_zero: bool,
    pub seed: u64,
}

impl SolvedSystem {
    pub fn new(system: &TriangularSystem, solution: &[Poly], seed: u64) -> Self {
        let residuals_zero = residuals(system, solution).iter().all(Poly::is_zero);
        SolvedSystem {
            order: system.order(),
            family: system.family.name().to_string(),
            shift: system.family.shift(),
            params: system.family.params_map(),
            rhs: system.rhs.iter().map(|p| p.to_string()).collect(),
            solution: solution.iter().map(|p| p.to_string()).collect(),
            residuals_zero,
            seed,
        }
    }

    /// One-line JSON form.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("solved system serializes")
    }
}

// === tests =================================================================
