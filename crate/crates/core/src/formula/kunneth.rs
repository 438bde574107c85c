//! Betti-level calculus for wedges, joins, smashes and suspensions of
//! torsion-free spaces.

use crate::error::{Error, Result};
use crate::homology::{BettiVector, Degree};

fn require_free(h: &BettiVector, what: &str) -> Result<()> {
    if h.has_torsion() {
        Err(Error::Torsion(format!("{what}: {h}")))
    } else {
        Ok(())
    }
}

fn checked(v: Option<u64>, what: &str) -> Result<u64> {
    v.ok_or_else(|| Error::Overflow(what.to_string()))
}

/// Degree-wise convolution `c_q = Σ_{i+j=q-offset} a_i b_j`.
fn convolve(a: &BettiVector, b: &BettiVector, offset: Degree, what: &str) -> Result<BettiVector> {
    let mut out = BettiVector::zero();
    for (&i, &x) in a.ranks() {
        for (&j, &y) in b.ranks() {
            out.add_rank(i + j + offset, checked(x.checked_mul(y), what)?);
        }
    }
    Ok(out)
}

/// Suspension by `i`: every degree (torsion included) moves up by `i`.
pub fn shift(h: &BettiVector, i: Degree) -> BettiVector {
    let mut out = BettiVector::from_ranks(h.ranks().iter().map(|(&q, &r)| (q + i, r)));
    for (&q, t) in h.torsion() {
        out.set_torsion(q + i, t.clone());
    }
    out
}

/// Reduced Künneth for joins: `b̃_q(X*Y) = Σ_{i+j=q-1} b̃_i(X) b̃_j(Y)`.
pub fn kunneth_join(a: &BettiVector, b: &BettiVector) -> Result<BettiVector> {
    require_free(a, "join")?;
    require_free(b, "join")?;
    convolve(a, b, 1, "join")
}

/// `j`-fold join; the empty join is the empty space.
pub fn join_power(h: &BettiVector, j: u32) -> Result<BettiVector> {
    let mut acc = BettiVector::spheres(-1, 1);
    for _ in 0..j {
        acc = kunneth_join(&acc, h)?;
    }
    Ok(acc)
}

/// `j`-fold smash power; the empty smash is `S^0`.
pub fn kunneth_smash(h: &BettiVector, j: u32) -> Result<BettiVector> {
    require_free(h, "smash")?;
    let mut acc = BettiVector::spheres(0, 1);
    for _ in 0..j {
        acc = convolve(&acc, h, 0, "smash")?;
    }
    Ok(acc)
}

/// Wedge sum: reduced homology adds.
pub fn wedge(a: &BettiVector, b: &BettiVector) -> BettiVector {
    let mut out = a.clone();
    for (&q, &r) in b.ranks() {
        out.add_rank(q, r);
    }
    for (&q, t) in b.torsion() {
        let mut merged = out.torsion().get(&q).cloned().unwrap_or_default();
        merged.extend(t.iter().cloned());
        merged.sort();
        out.set_torsion(q, merged);
    }
    out
}

/// Disjoint union of two nonempty spaces: one extra reduced class in degree 0.
pub fn disjoint_union(a: &BettiVector, b: &BettiVector) -> BettiVector {
    let mut out = wedge(a, b);
    out.add_rank(0, 1);
    out
}

/// `⋁_n h`.
pub fn multiple(h: &BettiVector, n: u64) -> Result<BettiVector> {
    require_free(h, "multiple")?;
    let mut out = BettiVector::zero();
    for (&q, &r) in h.ranks() {
        out.add_rank(q, checked(r.checked_mul(n), "wedge multiple")?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(d: Degree, n: u64) -> BettiVector {
        BettiVector::spheres(d, n)
    }

    #[test]
    fn smash_of_s0_is_idempotent() {
        assert_eq!(kunneth_smash(&s(0, 1), 3).unwrap(), s(0, 1));
        assert_eq!(kunneth_smash(&s(0, 2), 2).unwrap(), s(0, 4));
        assert_eq!(kunneth_smash(&s(1, 3), 1).unwrap(), s(1, 3));
        assert_eq!(kunneth_smash(&s(1, 3), 0).unwrap(), s(0, 1));
    }

    #[test]
    fn join_of_s0_is_circle() {
        assert_eq!(kunneth_join(&s(0, 1), &s(0, 1)).unwrap(), s(1, 1));
        assert_eq!(kunneth_join(&s(-1, 1), &s(2, 5)).unwrap(), s(2, 5));
        assert_eq!(join_power(&s(0, 2), 3).unwrap(), s(2, 8));
        assert_eq!(join_power(&s(0, 2), 0).unwrap(), s(-1, 1));
    }

    #[test]
    fn shift_and_union() {
        assert_eq!(shift(&s(1, 2), 0), s(1, 2));
        assert_eq!(shift(&s(-1, 1), 1), s(0, 1));
        assert_eq!(disjoint_union(&s(0, 1), &s(0, 1)), s(0, 3));
        assert_eq!(wedge(&s(1, 1), &s(2, 1)), BettiVector::from_ranks([(1, 1), (2, 1)]));
    }

    #[test]
    fn torsion_rejected() {
        let mut t = s(1, 1);
        t.set_torsion(1, vec![2.into()]);
        assert!(matches!(kunneth_join(&t, &s(0, 1)), Err(Error::Torsion(_))));
        assert!(matches!(kunneth_smash(&t, 2), Err(Error::Torsion(_))));
    }
}
