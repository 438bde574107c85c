use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer polynomial in `x` and `y`; `coeff(i, j)` is the coefficient of `x^i y^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BivariatePoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = BivariatePoly::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn x() -> Self {
        BivariatePoly::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        BivariatePoly::monomial(1, 0, 1)
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((u32, u32), C)>) -> Self {
        let mut p = BivariatePoly::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c.into());
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms `((i, j), z_ij)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BivariatePoly::constant(1), |acc, _| &acc * self)
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;

    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        self + &(-rhs)
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;

    fn neg(self) -> BivariatePoly {
        BivariatePoly { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BivariatePoly {
            type Output = BivariatePoly;
            fn $m(self, rhs: BivariatePoly) -> BivariatePoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| (b.0 .0 + b.0 .1, b.0).cmp(&(a.0 .0 + a.0 .1, a.0)));
        for (n, (&(i, j), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let var = |v: char, e: u32| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            let vars = format!("{}{}", var('x', i), var('y', j));
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}{vars}")?;
            }
        }
        Ok(())
    }
}

/// `(a_r, b_r, c_r)` for `r = 0..=max_r` from the three coupled recurrences.
pub fn abc_sequence(max_r: u32) -> Vec<(BivariatePoly, BivariatePoly, BivariatePoly)> {
    let x = BivariatePoly::x();
    let xy = BivariatePoly::monomial(1, 1, 1);
    let x_plus_xy = &x + &xy;
    let mut out = vec![(BivariatePoly::zero(), BivariatePoly::y(), BivariatePoly::monomial(2, 0, 1))];
    for r in 1..=max_r {
        let (a_prev, b_prev, c_prev) = out.last().unwrap().clone();
        let a = &(&(&xy * &b_prev) + &(&x_plus_xy * &a_prev)) + &BivariatePoly::monomial(1, r - 1, 1);
        let b = &(&(&xy * &c_prev) + &(&x_plus_xy * &b_prev)) + &BivariatePoly::monomial(1, r, 1);
        let c = &(&(&xy * &a) + &(&x_plus_xy * &c_prev)) + &BivariatePoly::monomial(2, r, 1);
        out.push((a, b, c));
    }
    out
}

/// `(a_r, b_r, c_r)`.
pub fn abc_polynomials(r: u32) -> (BivariatePoly, BivariatePoly, BivariatePoly) {
    abc_sequence(r).pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_case() {
        let (a, b, c) = abc_polynomials(0);
        assert!(a.is_zero());
        assert_eq!(b, BivariatePoly::y());
        assert_eq!(c, BivariatePoly::monomial(2, 0, 1));
    }

    #[test]
    fn first_step() {
        let (a, b, c) = abc_polynomials(1);
        assert_eq!(a, BivariatePoly::from_terms([((1, 2), 1), ((0, 1), 1)]));
        assert_eq!(b, BivariatePoly::from_terms([((1, 2), 3), ((1, 1), 2)]));
        assert_eq!(c, BivariatePoly::from_terms([((2, 3), 1), ((1, 2), 3), ((1, 1), 4)]));
        assert_eq!(c.to_string(), "x^2y^3 + 3xy^2 + 4xy");
    }

    #[test]
    fn second_step_matches_hand_expansion() {
        // P_6 case: four triple joins, one double join, three suspended double joins, two suspended copies
        let (a, _, _) = abc_polynomials(2);
        assert_eq!(a, BivariatePoly::from_terms([((2, 3), 4), ((1, 2), 1), ((2, 2), 3), ((1, 1), 2)]));
    }

    #[test]
    fn nonnegative_through_twelve() {
        for (a, b, c) in abc_sequence(12) {
            assert!(a.has_nonnegative_coefficients());
            assert!(b.has_nonnegative_coefficients());
            assert!(c.has_nonnegative_coefficients());
        }
    }

    #[test]
    fn arithmetic() {
        let x = BivariatePoly::x();
        let y = BivariatePoly::y();
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, BivariatePoly::from_terms([((2, 0), 1), ((0, 2), -1)]));
        assert_eq!((&x + &y).pow(2).coeff(1, 1), BigInt::from(2));
        assert!((&p - &p).is_zero());
    }
}
