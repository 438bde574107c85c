//! Betti-number predictors for the closed-form homotopy types.
//!
//! Every predictor returns a wedge-of-spheres style decomposition as a list
//! of [`Term`]s (a count times a unit Betti vector) so reports can show the
//! evaluated sphere counts next to the summed prediction.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::counts::{binom, f_closed, f_recur, pow};
use super::kunneth::{join_power, kunneth_join, kunneth_smash, multiple, shift, wedge};
use super::poly::abc_polynomials;
use crate::complex::{forest_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{vertices_of, DegreeBound, Graph, VertexSet};
use crate::homology::{reduced_betti, BettiVector, Degree};

/// `count` copies of a space with reduced homology `unit`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub label: String,
    pub count: u64,
    pub unit: BettiVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub target: String,
    pub predicted: BettiVector,
    /// Number of suspensions applied to the target space in the statement.
    pub suspended_by: u32,
    pub assumptions: Vec<String>,
    pub terms: Vec<Term>,
}

impl Prediction {
    fn assemble(target: String, suspended_by: u32, assumptions: Vec<String>, terms: Vec<Term>) -> Result<Self> {
        let mut predicted = BettiVector::zero();
        for t in &terms {
            predicted = wedge(&predicted, &multiple(&t.unit, t.count)?);
        }
        Ok(Prediction { target, predicted, suspended_by, assumptions, terms })
    }

    /// Homology of the space itself (undoing the suspensions in the statement).
    pub fn unsuspended(&self) -> BettiVector {
        shift(&self.predicted, -(self.suspended_by as Degree))
    }

    /// `computed` is torsion-free and its suspension matches the prediction.
    pub fn matches(&self, computed: &BettiVector) -> bool {
        !computed.has_torsion() && shift(computed, self.suspended_by as Degree) == self.predicted
    }
}

/// Accumulates sphere terms from integer-valued counts.
struct Spheres(Vec<Term>);

impl Spheres {
    fn new() -> Self {
        Spheres(Vec::new())
    }

    fn add(&mut self, label: impl Into<String>, count: i128, dim: Degree) -> Result<()> {
        let label = label.into();
        let count = u64::try_from(count).map_err(|_| {
            if count < 0 {
                Error::Domain(format!("negative sphere count {count} for {label}"))
            } else {
                Error::Overflow(label.clone())
            }
        })?;
        self.0.push(Term { label, count, unit: BettiVector::spheres(dim, 1) });
        Ok(())
    }
}

fn c(a: i64, b: i64) -> i128 {
    binom(a, b)
}

fn p(base: i64, e: i64) -> Result<i128> {
    if e < 0 {
        return Err(Error::Domain(format!("negative exponent {e}")));
    }
    pow(base as i128, e as u32, "sphere count")
}

fn finite_d(d: DegreeBound) -> Option<i64> {
    d.finite().map(i64::from)
}

/// `Z*_{sk_d Δ^n}(r points, ∅) ≃ ⋁_{f_d(r,n)} S^d`.
pub fn predict_f_skeleton(d: u32, r: u32, n: u32) -> Result<Prediction> {
    let closed = f_closed(d, r, n)?;
    let recur = f_recur(d, r, n)?;
    if closed != recur {
        return Err(Error::Domain(format!("f_d(r,n) closed form {closed} != recurrence {recur}")));
    }
    let mut s = Spheres::new();
    s.add("f_d(r,n) S^d", closed, d as Degree)?;
    Prediction::assemble(
        format!("polyhedral join over sk_{d} of the {n}-simplex, {r} points per vertex"),
        0,
        vec![],
        s.0,
    )
}

/// `F_0(P_n ∘ H)` from the reduced homology `h` of `F_0(H)`.
pub fn predict_pn_lex(n: u32, h: &BettiVector) -> Result<Prediction> {
    if n < 1 {
        return Err(Error::Domain("P_n needs n >= 1".into()));
    }
    if h.has_torsion() {
        return Err(Error::Torsion(format!("F_0(H) has torsion: {h}")));
    }
    let unit = |label: &str, count: u64, unit: BettiVector| Term { label: label.to_string(), count, unit };
    let point_pair = BettiVector::spheres(0, 1);
    let target = format!("F_0(P{n} o H)");
    let terms = match n {
        1 => vec![unit("F_0(H)", 1, h.clone())],
        2 => vec![unit("F_0(H)", 2, h.clone()), unit("disjoint union", 1, point_pair)],
        3 => vec![
            unit("S(F_0(H)^2)", 1, shift(&kunneth_smash(h, 2)?, 1)),
            unit("F_0(H)", 1, h.clone()),
            unit("disjoint union", 1, point_pair),
        ],
        _ => {
            let r = n / 3;
            let (a, b, cc) = abc_polynomials(r);
            let (poly, sphere) = match n % 3 {
                0 => (a, Some(r as Degree - 1)),
                1 => (b, None),
                _ => (cc, Some(r as Degree)),
            };
            let mut terms = Vec::new();
            if let Some(dim) = sphere {
                terms.push(unit(&format!("S^{dim}"), 1, BettiVector::spheres(dim, 1)));
            }
            for (&(i, j), z) in poly.terms() {
                let count = u64::try_from(z).map_err(|_| Error::Domain(format!("coefficient {z} of x^{i}y^{j}")))?;
                let u = shift(&kunneth_smash(h, j)?, i as Degree);
                terms.push(unit(&format!("S^{i}(F_0(H)^{j})"), count, u));
            }
            terms
        }
    };
    Prediction::assemble(target, 0, vec![], terms)
}

/// `F_0(G − N[σ])`'s reduced homology for every vertex mask, memoized.
struct DeletionOracle<'a> {
    g: &'a Graph,
    memo: HashMap<VertexSet, BettiVector>,
}

impl DeletionOracle<'_> {
    fn betti(&mut self, removed: VertexSet) -> Result<BettiVector> {
        if let Some(b) = self.memo.get(&removed) {
            return Ok(b.clone());
        }
        let rest = self.g.remove_vertices(removed);
        let b = reduced_betti(&forest_complex(&rest, DegreeBound::Finite(0)))?;
        self.memo.insert(removed, b.clone());
        Ok(b)
    }
}

/// Homology of `F_0(G ∘ H)` from the suspension splitting, given the reduced
/// homology `h` of `F_0(H)`. Requires `F_0(G)` connected.
pub fn predict_susp_f0_lex(g: &Graph, h: &BettiVector) -> Result<Prediction> {
    let f0 = forest_complex(g, DegreeBound::Finite(0));
    let base = reduced_betti(&f0)?;
    if base.rank(0) != 0 || base.rank(-1) != 0 {
        return Err(Error::Hypothesis(format!("F_0(G) is not connected ({base})")));
    }
    let mut oracle = DeletionOracle { g, memo: HashMap::new() };
    // group simplices by (removed neighbourhood, size) so equal summands merge
    let mut groups: HashMap<(VertexSet, u32), u64> = HashMap::new();
    for sigma in f0.faces().filter(|&s| s != 0) {
        let nbhd = vertices_of(sigma).fold(0, |acc, v| acc | g.closed_neighborhood(v));
        *groups.entry((nbhd, sigma.count_ones())).or_insert(0) += 1;
    }
    let mut keys: Vec<_> = groups.keys().copied().collect();
    keys.sort_unstable();
    let mut terms = vec![Term { label: "F_0(G)".into(), count: 1, unit: base }];
    for key @ (nbhd, size) in keys {
        let rest = oracle.betti(nbhd)?;
        let unit = kunneth_join(&rest, &join_power(h, size)?)?;
        terms.push(Term {
            label: format!("F_0(G - N[{:#x}]) * F_0(H)^*{size}", nbhd),
            count: groups[&key],
            unit,
        });
    }
    Prediction::assemble("F_0(G o H)".into(), 0, vec!["F_0(G) connected".into()], terms)
}

/// `A = F_d(G) ∪ C(sk_{d-1} F_0(G))` with the cone apex as vertex `n`.
pub fn k2_join_complex_a(g: &Graph, d: DegreeBound) -> Result<SimplicialComplex> {
    let n = g.order();
    let skel = sk_below(g, d)?;
    forest_complex(g, d).with_vertex_count(n + 1)?.union(&skel.cone()?)
}

fn sk_below(g: &Graph, d: DegreeBound) -> Result<SimplicialComplex> {
    let f0 = forest_complex(g, DegreeBound::Finite(0));
    match d {
        DegreeBound::Finite(k) => f0.skeleton(k as i32 - 1),
        DegreeBound::Infinite => Ok(f0),
    }
}

/// `F_d(K_2 ∘ G)`, with oracle homology for the pieces built from `G`.
pub fn predict_k2_join(g: &Graph, d: DegreeBound) -> Result<Prediction> {
    let n = g.order() as u64;
    let target = format!("F_{d}(K2 o G)");
    if d == DegreeBound::Finite(0) {
        return Err(Error::Domain("K2 join lemma needs d >= 1".into()));
    }
    if d == DegreeBound::Finite(1) {
        let f1 = reduced_betti(&forest_complex(g, d))?;
        let terms = vec![
            Term { label: "F_1(G)".into(), count: 2, unit: f1 },
            Term { label: "S^1".into(), count: n * n - 1, unit: BettiVector::spheres(1, 1) },
        ];
        return Prediction::assemble(target, 0, vec![], terms);
    }
    let f0 = reduced_betti(&forest_complex(g, DegreeBound::Finite(0)))?;
    if f0.rank(0) != 0 || f0.rank(-1) != 0 {
        return Err(Error::Hypothesis(format!("F_0(G) is not connected ({f0})")));
    }
    let skel = reduced_betti(&sk_below(g, d)?)?;
    let a = reduced_betti(&k2_join_complex_a(g, d)?)?;
    let terms = vec![
        Term { label: "S sk_{d-1} F_0(G)".into(), count: 2 * n - 2, unit: shift(&skel, 1) },
        Term { label: "S^2".into(), count: (n - 1) * (n - 1), unit: BettiVector::spheres(2, 1) },
        Term { label: "A".into(), count: 2, unit: a },
    ];
    Prediction::assemble(target, 0, vec!["F_0(G) connected".into()], terms)
}

/// `F_d(K_{1,n} ∘ K_r)`.
pub fn predict_star(n: u32, r: u32, d: DegreeBound) -> Result<Prediction> {
    if n < 1 || r < 1 {
        return Err(Error::Domain(format!("star needs n, r >= 1, got n={n} r={r}")));
    }
    let (ni, ri) = (n as i64, r as i64);
    let top = p(c(ri - 1, 2) as i64, ni)?;
    let mut s = Spheres::new();
    s.add("C(r-1,2)^n S^{2n-1}", top, 2 * n as Degree - 1)?;
    match finite_d(d) {
        Some(1) => s.add("(nr^2-1) + C(r-1,2) S^1", ni as i128 * (ri * ri) as i128 - 1 + c(ri - 1, 2), 1)?,
        Some(k) if k >= 2 && k < ni => {
            let f = f_closed(k as u32 - 1, r, n - 1)?;
            s.add("r f_{d-1}(r,n-1) S^d", ri as i128 * f, k as Degree)?;
            s.add("C(r,2) S^1", c(ri, 2), 1)?;
        }
        Some(k) => return Err(Error::Domain(format!("star needs 1 <= d <= n-1 or d = inf, got d={k} n={n}"))),
        None => {
            s.add("r(r-1)^n S^n", ri as i128 * p(ri - 1, ni)?, n as Degree)?;
            s.add("C(r,2) S^1", c(ri, 2), 1)?;
        }
    }
    Prediction::assemble(format!("F_{d}(K_1,{n} o K{r})"), 0, vec![], s.0)
}

/// `Σ F_d(K_{n,m} ∘ K_r)`.
pub fn predict_bipartite(n: u32, m: u32, r: u32, d: DegreeBound) -> Result<Prediction> {
    if n < 2 || m < 2 || r < 2 {
        return Err(Error::Domain(format!("bipartite needs n, m, r >= 2, got n={n} m={m} r={r}")));
    }
    let (n_, m_, r_) = (n as i64, m as i64, r as i64);
    let r1 = r_ - 1;
    let mut s = Spheres::new();
    s.add("C(r-1,2)^n S^{2n}", p(c(r1, 2) as i64, n_)?, 2 * n as Degree)?;
    s.add("C(r-1,2)^m S^{2m}", p(c(r1, 2) as i64, m_)?, 2 * m as Degree)?;
    match finite_d(d) {
        None => {
            let a = m_ as i128 * p(r1, n_)? + (m_ * m_) as i128 * p(r1, m_)?;
            let b = n_ as i128 * p(r1, m_)? + (n_ * n_) as i128 * p(r1, n_)?;
            s.add("a S^{n+1}", a, n as Degree + 1)?;
            s.add("b S^{m+1}", b, m as Degree + 1)?;
            s.add("c S^3", ((r_ * n_ - 1) * (r_ * m_ - 1)) as i128, 3)?;
        }
        Some(k) if k < 1 || k > n_.min(m_) - 1 => {
            return Err(Error::Domain(format!("bipartite needs 1 <= d <= min(n,m)-1, got d={k}")));
        }
        Some(1) => {
            s.add("a_1 S^2", (r_ * r_ * n_ * m_ - 1) as i128, 2)?;
        }
        Some(d) => {
            let rr = r1 as i128;
            let (n, m) = (n_ as i128, m_ as i128);
            s.add("a_d S^2", (n + m) * rr, 2)?;
            s.add("b_d S^3", n * m * rr * rr + (m - 1) * (n - 1), 3)?;
            let mut cd = n * c(m_ - 1, d) * r_ as i128
                + m * c(n_ - 1, d) * r_ as i128
                + (n * c(m_, d) + m * c(n_, d)) * p(r1, d + 1)?
                + m * n * (c(n_ - 2, d - 1) + c(m_ - 2, d - 1)) * rr * rr;
            for i in 2..=d {
                cd += (m * c(n_, i) * c(n_ - i - 1, d - i) + n * c(m_, i) * c(m_ - i - 1, d - i)) * p(r1, i)?;
            }
            for i in 3..=d {
                cd += (m * c(n_, i - 1) * c(n_ - i, d - i) + n * c(m_, i - 1) * c(m_ - i, d - i)) * p(r1, i)?;
            }
            s.add("c_d S^{d+1}", cd, d as Degree + 1)?;
        }
    }
    Prediction::assemble(format!("F_{d}(K_{n},{m} o K{r})"), 1, vec![], s.0)
}

/// `Σ F_d(K_{n_1,…,n_k} ∘ K_r)`.
pub fn predict_multipartite(parts: &[u32], r: u32, d: DegreeBound) -> Result<Prediction> {
    let k = parts.len();
    if k < 3 || parts.iter().any(|&n| n < 2) || r < 2 {
        return Err(Error::Domain(format!("multipartite needs k >= 3, all n_i >= 2, r >= 2, got {parts:?} r={r}")));
    }
    let ns: Vec<i64> = parts.iter().map(|&n| n as i64).collect();
    let (k_, r_) = (k as i64, r as i64);
    let r1 = r_ - 1;
    let rr = r1 as i128;
    let total: i64 = ns.iter().sum();
    let t: Vec<i64> = ns.iter().map(|&n| total - n - 1).collect();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut s = Spheres::new();
    for (i, &n) in ns.iter().enumerate() {
        s.add(format!("C(r-1,2)^n_{} S^{{2n_{}}}", i + 1, i + 1), p(c(r1, 2) as i64, n)?, 2 * n as Degree)?;
    }
    let label = parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
    match finite_d(d) {
        None => {
            for (i, &n) in ns.iter().enumerate() {
                let a = p(r1, n)? + (t[i] as i128 + 1) * p(r1, n + 1)? + t[i] as i128 * p(r1, n)?;
                s.add(format!("a_{} S^{{n_{}+1}}", i + 1, i + 1), a, n as Degree + 1)?;
            }
            let mut b: i128 = 0;
            for &(i, j) in &pairs {
                b += ((ns[i] - 1) * (ns[j] - 1)) as i128 + (ns[i] * ns[j]) as i128 * rr * rr;
            }
            for i in 0..k {
                b += (t[i] * ns[i]) as i128 * rr;
            }
            s.add("b S^3", b, 3)?;
            s.add("C(k-1,2) S^2", c(k_ - 1, 2), 2)?;
        }
        Some(dd) if dd < 1 || dd > ns.iter().min().unwrap() - 1 => {
            return Err(Error::Domain(format!("multipartite needs 1 <= d <= min n_i - 1, got d={dd}")));
        }
        Some(1) => {
            let mut a: i128 = 0;
            for &(i, j) in &pairs {
                a += (r_ * r_ - 2 * r_ + 2) as i128 * (ns[i] * ns[j]) as i128;
            }
            for i in 0..k {
                a += (ns[i] * (t[i] + 1)) as i128 * rr;
            }
            a += 1 - k_ as i128;
            s.add("a_1 S^2", a, 2)?;
        }
        Some(d) => {
            s.add("a_d S^2", ((k_ - 1) * (k_ - 2) / 2) as i128, 2)?;
            let mut b: i128 = 0;
            for i in 0..k {
                b += (ns[i] * (t[i] - k_ + 2)) as i128 * rr;
            }
            for &(i, j) in &pairs {
                b += (ns[i] * ns[j]) as i128 * rr * rr + ((ns[i] - 1) * (ns[j] - 1)) as i128;
            }
            s.add("b_d S^3", b, 3)?;
            let mut cd: i128 = 0;
            for i in 0..k {
                let p_i: i128 = (0..k).filter(|&j| j != i).map(|j| c(ns[j] - 2, d)).sum();
                let ti1 = t[i] as i128 + 1;
                cd += ns[i] as i128 * (ti1 * c(ns[i] - 2, d - 1) + p_i) * rr;
                for l in 2..=d {
                    cd += ti1 * c(ns[i], l) * c(ns[i] - l - 1, d - l) * p(r1, l)?;
                }
            }
            for &(i, j) in &pairs {
                let (ni, nj) = (ns[i] as i128, ns[j] as i128);
                cd += ni * nj * (c(ns[i] - 1, d - 2) + c(ns[j] - 1, d - 2)) * rr * rr
                    + ni * c(ns[j] - 1, d)
                    + nj * c(ns[i] - 1, d);
                cd += (ni * c(ns[j], d) + nj * c(ns[i], d)) * p(r1, d + 1)?;
                for l in 2..d {
                    cd += (nj * c(ns[i], l) * c(ns[i] - 1, d - l - 1) + ni * c(ns[j], l) * c(ns[j] - 1, d - l - 1))
                        * p(r1, l + 1)?;
                }
            }
            s.add("c_d S^{d+1}", cd, d as Degree + 1)?;
        }
    }
    Prediction::assemble(format!("F_{d}(K_{label} o K{r})"), 1, vec![], s.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pn_small_cases_for_two_points() {
        let h = BettiVector::spheres(0, 1);
        assert_eq!(predict_pn_lex(1, &h).unwrap().predicted, h);
        assert_eq!(predict_pn_lex(2, &h).unwrap().predicted, BettiVector::spheres(0, 3));
        assert_eq!(predict_pn_lex(4, &h).unwrap().predicted, BettiVector::spheres(1, 5));
        assert!(predict_pn_lex(0, &h).is_err());
    }

    #[test]
    fn star_infinite_small() {
        let pr = predict_star(2, 2, DegreeBound::Infinite).unwrap();
        assert_eq!(pr.predicted, BettiVector::from_ranks([(1, 1), (2, 2)]));
        assert_eq!(pr.suspended_by, 0);
    }

    #[test]
    fn bipartite_printed_counts() {
        let pr = predict_bipartite(2, 2, 2, DegreeBound::Finite(1)).unwrap();
        assert_eq!(pr.unsuspended(), BettiVector::spheres(1, 15));
        let pr = predict_bipartite(2, 2, 2, DegreeBound::Infinite).unwrap();
        assert_eq!(pr.unsuspended(), BettiVector::spheres(2, 21));
        assert!(predict_bipartite(2, 2, 2, DegreeBound::Finite(2)).is_err());
    }

    #[test]
    fn multipartite_domain() {
        assert!(predict_multipartite(&[2, 2], 2, DegreeBound::Infinite).is_err());
        assert!(predict_multipartite(&[2, 2, 1], 2, DegreeBound::Infinite).is_err());
        let pr = predict_multipartite(&[2, 2, 2], 2, DegreeBound::Infinite).unwrap();
        assert_eq!(pr.suspended_by, 1);
        assert!(!pr.predicted.has_torsion());
    }

    #[test]
    fn matching_shifts_computed_side() {
        let pr = predict_bipartite(2, 2, 2, DegreeBound::Finite(1)).unwrap();
        assert!(pr.matches(&BettiVector::spheres(1, 15)));
        assert!(!pr.matches(&BettiVector::spheres(2, 15)));
    }

    #[test]
    fn f_skeleton_octahedron() {
        let pr = predict_f_skeleton(1, 2, 2).unwrap();
        assert_eq!(pr.predicted, BettiVector::spheres(1, 7));
    }
}
