//! Power series in `t` with bivariate polynomial coefficients, truncated at a
//! fixed order, and the generating-function cross-check built on them.

use serde::Serialize;

use super::poly::{abc_sequence, BivariatePoly};
use crate::error::{Error, Result};

/// `Σ_{r=0}^{R} coeff_r t^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncation {
    coeffs: Vec<BivariatePoly>,
}

impl SeriesTruncation {
    pub fn zero(order: usize) -> Self {
        SeriesTruncation { coeffs: vec![BivariatePoly::zero(); order + 1] }
    }

    /// Truncate or zero-pad `coeffs` to `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BivariatePoly>) -> Self {
        coeffs.resize(order + 1, BivariatePoly::zero());
        SeriesTruncation { coeffs }
    }

    /// `p t^k`.
    pub fn term(order: usize, p: BivariatePoly, k: usize) -> Self {
        let mut s = SeriesTruncation::zero(order);
        if k <= order {
            s.coeffs[k] = p;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, r: usize) -> &BivariatePoly {
        &self.coeffs[r]
    }

    pub fn coeffs(&self) -> &[BivariatePoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        SeriesTruncation { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        SeriesTruncation { coeffs }
    }

    pub fn scale(&self, p: &BivariatePoly) -> Self {
        SeriesTruncation { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = SeriesTruncation::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    /// Multiply by `t`.
    pub fn times_t(&self) -> Self {
        let mut coeffs = vec![BivariatePoly::zero()];
        coeffs.extend(self.coeffs.iter().take(self.order()).cloned());
        SeriesTruncation { coeffs }
    }

    /// Multiplicative inverse; the constant term must be `1`.
    pub fn inverse(&self) -> Result<Self> {
        if self.coeffs[0] != BivariatePoly::constant(1) {
            return Err(Error::InvalidArgument("series inverse needs constant term 1".into()));
        }
        let order = self.order();
        let mut inv = SeriesTruncation::zero(order);
        inv.coeffs[0] = BivariatePoly::constant(1);
        for r in 1..=order {
            let mut acc = BivariatePoly::zero();
            for k in 1..=r {
                acc = &acc + &(&self.coeffs[k] * &inv.coeffs[r - k]);
            }
            inv.coeffs[r] = -&acc;
        }
        Ok(inv)
    }
}

/// One coefficient where two expansions differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub series: String,
    pub power: usize,
    pub expected: String,
    pub found: String,
}

/// Outcome of comparing the generating functions with the recurrences.
#[derive(Clone, Debug, Serialize)]
pub struct GenfunReport {
    pub order: usize,
    /// The fixed point of the three functional equations equals the recurrence output.
    pub functional_equations_agree: bool,
    pub functional_mismatch: Option<CoefficientMismatch>,
    /// `K(t)(1 - xt) = yt` through the truncation order.
    pub k_identity_holds: bool,
    /// The printed rational closed form for `F(t)` expands to the `a_r`.
    pub printed_closed_form_agrees: bool,
    pub printed_closed_form_mismatch: Option<CoefficientMismatch>,
    /// `D(t) · F(t)` for the printed denominator `D`, i.e. the numerator the
    /// recurrences imply; listed up to the last nonzero coefficient.
    pub implied_numerator: Vec<String>,
    /// Whether the implied numerator is a polynomial of degree <= 3 in `t`
    /// within the truncation order.
    pub implied_numerator_terminates: bool,
}

fn first_mismatch(name: &str, expected: &SeriesTruncation, found: &SeriesTruncation) -> Option<CoefficientMismatch> {
    (0..=expected.order().min(found.order())).find_map(|r| {
        (expected.coeff(r) != found.coeff(r)).then(|| CoefficientMismatch {
            series: name.to_string(),
            power: r,
            expected: expected.coeff(r).to_string(),
            found: found.coeff(r).to_string(),
        })
    })
}

/// Solve the functional equations for `F`, `G`, `H` by fixed-point iteration
/// on truncated series, independently of the coefficient recurrences.
pub fn solve_functional_equations(order: usize) -> Result<[SeriesTruncation; 3]> {
    let x = BivariatePoly::x();
    let y = BivariatePoly::y();
    let xy = BivariatePoly::monomial(1, 1, 1);
    let x_plus_xy = &x + &xy;
    let one_minus_xt = SeriesTruncation::from_coeffs(order, vec![BivariatePoly::constant(1), -&x]);
    // K(t) = yt / (1 - xt)
    let k = SeriesTruncation::term(order, y.clone(), 1).mul(&one_minus_xt.inverse()?);
    let xk = k.scale(&x);
    let const_y = SeriesTruncation::term(order, y.clone(), 0);
    let const_2y = SeriesTruncation::term(order, &y + &y, 0);

    let mut f = SeriesTruncation::zero(order);
    let mut g = SeriesTruncation::zero(order);
    let mut h = SeriesTruncation::zero(order);
    for _ in 0..3 * order + 8 {
        let f_next = g.scale(&xy).times_t().add(&f.scale(&x_plus_xy).times_t()).add(&k);
        let g_next = h.scale(&xy).times_t().add(&g.scale(&x_plus_xy).times_t()).add(&const_y).add(&xk);
        let h_next = f.scale(&xy).add(&h.scale(&x_plus_xy).times_t()).add(&const_2y).add(&xk.add(&xk));
        if f_next == f && g_next == g && h_next == h {
            return Ok([f, g, h]);
        }
        f = f_next;
        g = g_next;
        h = h_next;
    }
    Err(Error::InvalidArgument("functional equations did not stabilise".into()))
}

/// The rational function printed for `F(t)`, expanded to `order`. The
/// numerator is transcribed term by term; `x^2y^2y` is read as `x^2 y^3`.
pub fn printed_closed_form(order: usize) -> Result<(SeriesTruncation, SeriesTruncation)> {
    let m = |c: i64, i: u32, j: u32| BivariatePoly::monomial(c, i, j);
    let numerator = SeriesTruncation::from_coeffs(
        order,
        vec![
            BivariatePoly::zero(),
            // xy^2 + y - xy
            BivariatePoly::from_terms([((1, 2), 1), ((0, 1), 1), ((1, 1), -1)]),
            // x^2y^3 + x^2 - x^2y^2y - 2xy^2 - xy
            &(&(&(&m(1, 2, 3) + &m(1, 2, 0)) - &m(1, 2, 3)) - &m(2, 1, 2)) - &m(1, 1, 1),
            // -(x^2y^3 + x^2y^2)
            -&(&m(1, 2, 3) + &m(1, 2, 2)),
        ],
    );
    let denominator = printed_denominator(order);
    Ok((numerator.mul(&denominator.inverse()?), denominator))
}

/// `(1 - xt)[(1 - (x+xy)t)^3 - x^3y^3t^2]`
fn printed_denominator(order: usize) -> SeriesTruncation {
    let one = BivariatePoly::constant(1);
    let x = BivariatePoly::x();
    let x_plus_xy = &x + &BivariatePoly::monomial(1, 1, 1);
    let one_minus_xt = SeriesTruncation::from_coeffs(order, vec![one.clone(), -&x]);
    let u = SeriesTruncation::from_coeffs(order, vec![one, -&x_plus_xy]);
    let cube = u.mul(&u).mul(&u);
    let bracket = cube.sub(&SeriesTruncation::term(order, BivariatePoly::monomial(1, 3, 3), 2));
    one_minus_xt.mul(&bracket)
}

/// Compare the recurrences against the functional equations and the printed
/// closed form through `t^order`.
pub fn genfun_check(order: usize) -> Result<GenfunReport> {
    if order < 1 {
        return Err(Error::Domain("generating-function check needs order >= 1".into()));
    }
    let seq = abc_sequence(order as u32);
    let pick = |which: usize| {
        let coeffs = seq
            .iter()
            .map(|(a, b, c)| match which {
                0 => a.clone(),
                1 => b.clone(),
                _ => c.clone(),
            })
            .collect();
        SeriesTruncation::from_coeffs(order, coeffs)
    };
    let recurrence = [pick(0), pick(1), pick(2)];
    let solved = solve_functional_equations(order)?;
    let functional_mismatch = ["F", "G", "H"]
        .iter()
        .enumerate()
        .find_map(|(i, name)| first_mismatch(name, &recurrence[i], &solved[i]));

    let x = BivariatePoly::x();
    let one_minus_xt = SeriesTruncation::from_coeffs(order, vec![BivariatePoly::constant(1), -&x]);
    let k = SeriesTruncation::from_coeffs(
        order,
        (0..=order)
            .map(|r| if r == 0 { BivariatePoly::zero() } else { BivariatePoly::monomial(1, r as u32 - 1, 1) })
            .collect(),
    );
    let k_identity_holds = k.mul(&one_minus_xt) == SeriesTruncation::term(order, BivariatePoly::y(), 1);

    let (printed, denominator) = printed_closed_form(order)?;
    let printed_mismatch = first_mismatch("F (printed closed form)", &recurrence[0], &printed);
    let implied = denominator.mul(&recurrence[0]);
    let last = (0..=order).rev().find(|&r| !implied.coeff(r).is_zero()).unwrap_or(0);
    Ok(GenfunReport {
        order,
        functional_equations_agree: functional_mismatch.is_none(),
        functional_mismatch,
        k_identity_holds,
        printed_closed_form_agrees: printed_mismatch.is_none(),
        printed_closed_form_mismatch: printed_mismatch,
        implied_numerator: (0..=last).map(|r| implied.coeff(r).to_string()).collect(),
        implied_numerator_terminates: last <= 3,
    })
}
