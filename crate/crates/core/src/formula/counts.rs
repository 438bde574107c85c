//! Exact integer helpers for sphere counts.

use crate::error::{Error, Result};

/// Binomial coefficient, zero whenever `b < 0` or `a < b` (including `a < 0`).
pub fn binom(a: i64, b: i64) -> i128 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc
}

pub(crate) fn pow(base: i128, e: u32, what: &str) -> Result<i128> {
    base.checked_pow(e).ok_or_else(|| Error::Overflow(what.to_string()))
}

fn domain(d: u32, r: u32, n: u32) -> Result<()> {
    if d < 1 || d > n || r < 1 {
        Err(Error::Domain(format!("f_d(r,n) needs 1 <= d <= n and r >= 1, got d={d} r={r} n={n}")))
    } else {
        Ok(())
    }
}

/// Closed form `f_d(r,n) = Σ_{i=0}^{d+1} (-1)^{d+1-i} C(n+1,i) r^i`.
pub fn f_closed(d: u32, r: u32, n: u32) -> Result<i128> {
    domain(d, r, n)?;
    let mut total: i128 = 0;
    for i in 0..=d + 1 {
        let term = binom(n as i64 + 1, i as i64)
            .checked_mul(pow(r as i128, i, "f_closed")?)
            .ok_or_else(|| Error::Overflow("f_closed".into()))?;
        if (d + 1 - i).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Recurrence `f_d(r,n) = r f_{d-1}(r,n-1) + f_d(r,n-1)` with bases
/// `f_n(r,n) = (r-1)^{n+1}` and `f_1(r,n) = C(n+1,2) r^2 - (n+1) r + 1`.
pub fn f_recur(d: u32, r: u32, n: u32) -> Result<i128> {
    domain(d, r, n)?;
    let r_ = r as i128;
    if d == n {
        return pow(r_ - 1, n + 1, "f_recur");
    }
    if d == 1 {
        let n1 = n as i128 + 1;
        return Ok(binom(n as i64 + 1, 2) * r_ * r_ - n1 * r_ + 1);
    }
    let lower = f_recur(d - 1, r, n - 1)?;
    let same = f_recur(d, r, n - 1)?;
    r_.checked_mul(lower)
        .and_then(|v| v.checked_add(same))
        .ok_or_else(|| Error::Overflow("f_recur".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(1, 2), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(0, 0), 1);
    }

    #[test]
    fn worked_values() {
        assert_eq!(f_closed(1, 2, 2).unwrap(), 7);
        assert_eq!(f_recur(1, 2, 2).unwrap(), 7);
        assert_eq!(f_closed(2, 3, 2).unwrap(), 8);
        assert_eq!(f_recur(2, 3, 2).unwrap(), 8);
    }

    #[test]
    fn closed_equals_recurrence() {
        for n in 1..=8 {
            for d in 1..=n {
                for r in 1..=5 {
                    assert_eq!(f_closed(d, r, n).unwrap(), f_recur(d, r, n).unwrap(), "d={d} r={r} n={n}");
                }
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(f_closed(0, 2, 2), Err(Error::Domain(_))));
        assert!(matches!(f_recur(3, 2, 2), Err(Error::Domain(_))));
        assert!(f_closed(1, 0, 2).is_err());
    }
}
