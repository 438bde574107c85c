//! Integral reduced simplicial homology.
//!
//! The chain complex is augmented: `∂_0` maps every vertex to the empty face
//! with coefficient `+1`, so a contractible complex has all reduced Betti
//! numbers zero and `{∅}` has `b̃_{-1} = 1`.

mod snf;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::vertices_of;

pub use snf::{smith_diagonal, smith_normal_form, sparse_invariant_factors, IntMatrix, SmithForm, SparseMatrix};

/// Homological degree; `-1` is the degree of the empty face.
pub type Degree = i32;

/// Reduced Betti numbers together with torsion coefficients.
///
/// Only nonzero ranks are stored, so two vectors compare equal exactly when
/// their homology agrees in every degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiVector {
    ranks: BTreeMap<Degree, u64>,
    torsion: BTreeMap<Degree, Vec<BigInt>>,
}

impl BettiVector {
    pub fn zero() -> Self {
        BettiVector::default()
    }

    /// Homology of a wedge of `count` spheres of dimension `dim`.
    pub fn spheres(dim: Degree, count: u64) -> Self {
        let mut b = BettiVector::zero();
        b.add_rank(dim, count);
        b
    }

    pub fn from_ranks(ranks: impl IntoIterator<Item = (Degree, u64)>) -> Self {
        let mut b = BettiVector::zero();
        for (q, r) in ranks {
            b.add_rank(q, r);
        }
        b
    }

    pub fn add_rank(&mut self, q: Degree, count: u64) {
        if count > 0 {
            *self.ranks.entry(q).or_insert(0) += count;
        }
    }

    pub fn set_torsion(&mut self, q: Degree, divisors: Vec<BigInt>) {
        if divisors.is_empty() {
            self.torsion.remove(&q);
        } else {
            self.torsion.insert(q, divisors);
        }
    }

    pub fn rank(&self, q: Degree) -> u64 {
        self.ranks.get(&q).copied().unwrap_or(0)
    }

    /// Nonzero ranks by degree.
    pub fn ranks(&self) -> &BTreeMap<Degree, u64> {
        &self.ranks
    }

    /// Elementary divisors other than 0 and 1, by degree.
    pub fn torsion(&self) -> &BTreeMap<Degree, Vec<BigInt>> {
        &self.torsion
    }

    pub fn has_torsion(&self) -> bool {
        !self.torsion.is_empty()
    }

    /// All reduced homology vanishes (torsion included).
    pub fn is_trivial(&self) -> bool {
        self.ranks.is_empty() && self.torsion.is_empty()
    }

    /// Highest degree with nonzero rank.
    pub fn top_degree(&self) -> Option<Degree> {
        self.ranks.keys().next_back().copied()
    }

    pub fn total_rank(&self) -> u64 {
        self.ranks.values().sum()
    }

    /// Alternating sum `Σ (-1)^q b̃_q`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks.iter().map(|(&q, &r)| if q.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) }).sum()
    }

    /// Ranks only, dropping torsion.
    pub fn free_part(&self) -> BettiVector {
        BettiVector { ranks: self.ranks.clone(), torsion: BTreeMap::new() }
    }
}

/// Serialized as `{degree: rank}` over nonzero ranks; torsion is reported
/// separately by callers that need it.
impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.ranks.iter().map(|(q, r)| (q.to_string(), r)))
    }
}

impl<'de> Deserialize<'de> for BettiVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, u64>::deserialize(d)?;
        let mut b = BettiVector::zero();
        for (q, r) in raw {
            let q: Degree = q.parse().map_err(|_| D::Error::custom(format!("bad degree {q:?}")))?;
            b.add_rank(q, r);
        }
        Ok(b)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts: Vec<String> = self.ranks.iter().map(|(q, r)| format!("b{q}={r}")).collect();
        for (q, ds) in &self.torsion {
            let ds: Vec<String> = ds.iter().map(ToString::to_string).collect();
            parts.push(format!("torsion{q}=[{}]", ds.join(",")));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Simplicial boundary map `∂_q` from `q`-faces to `(q-1)`-faces.
///
/// Rows and columns follow the sorted face layers of the complex. The entry
/// for removing the `i`-th smallest vertex is `(-1)^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: Degree,
    pub matrix: SparseMatrix,
}

pub fn boundary_matrix(k: &SimplicialComplex, q: Degree) -> Result<BoundaryMatrix> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    if q < 0 {
        return Err(Error::InvalidArgument(format!("boundary dimension {q} < 0")));
    }
    let rows = k.faces_of_dim(q - 1);
    let cols = k
        .faces_of_dim(q)
        .iter()
        .map(|&f| {
            let mut col: Vec<(u32, i64)> = vertices_of(f)
                .enumerate()
                .map(|(i, v)| {
                    let r = rows.binary_search(&(f & !(1 << v))).expect("complex is closed");
                    (r as u32, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    Ok(BoundaryMatrix { dim: q, matrix: SparseMatrix { nrows: rows.len(), cols } })
}

/// Integral reduced homology of a nonvoid complex.
pub fn reduced_betti(k: &SimplicialComplex) -> Result<BettiVector> {
    let top = k.dimension().ok_or(Error::VoidComplex)?;
    // factors[q] are the invariant factors of ∂_q, q = 0..=top
    let factors: Vec<Vec<BigInt>> = (0..=top)
        .into_par_iter()
        .map(|q| boundary_matrix(k, q).map(|b| sparse_invariant_factors(b.matrix)))
        .collect::<Result<_>>()?;
    let rank = |q: Degree| -> u64 {
        if q < 0 || q > top {
            0
        } else {
            factors[q as usize].len() as u64
        }
    };
    let mut betti = BettiVector::zero();
    for q in -1..=top {
        let faces = k.faces_of_dim(q).len() as u64;
        betti.add_rank(q, faces - rank(q) - rank(q + 1));
        if q < top {
            let tors: Vec<BigInt> = factors[(q + 1) as usize].iter().filter(|d| !d.is_one()).cloned().collect();
            betti.set_torsion(q, tors);
        }
    }
    Ok(betti)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_boundary_signs() {
        let edge = SimplicialComplex::simplex(2).unwrap();
        let d1 = boundary_matrix(&edge, 1).unwrap();
        assert_eq!(d1.matrix.cols, vec![vec![(0, -1), (1, 1)]]);
        let d0 = boundary_matrix(&edge, 0).unwrap();
        assert_eq!(d0.matrix.cols, vec![vec![(0, 1)], vec![(0, 1)]]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let t = SimplicialComplex::simplex(3).unwrap().skeleton(1).unwrap();
        let d0 = boundary_matrix(&t, 0).unwrap().matrix;
        let d1 = boundary_matrix(&t, 1).unwrap().matrix;
        assert!(d0.mul(&d1).cols.iter().all(Vec::is_empty));
    }

    #[test]
    fn tetrahedron_boundary_shape() {
        let s = SimplicialComplex::simplex(4).unwrap().skeleton(2).unwrap();
        let d2 = boundary_matrix(&s, 2).unwrap().matrix;
        assert_eq!((d2.nrows, d2.ncols()), (6, 4));
        assert!(d2.cols.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn empty_space_and_spheres() {
        let e = SimplicialComplex::empty_space(0).unwrap();
        assert_eq!(reduced_betti(&e).unwrap(), BettiVector::spheres(-1, 1));
        for n in 2..=3 {
            let s = SimplicialComplex::simplex(n + 1).unwrap().skeleton(n as i32 - 1).unwrap();
            assert_eq!(reduced_betti(&s).unwrap(), BettiVector::spheres(n as i32 - 1, 1));
        }
        let p = SimplicialComplex::simplex(1).unwrap();
        assert!(reduced_betti(&p).unwrap().is_trivial());
        assert!(matches!(reduced_betti(&SimplicialComplex::void(2).unwrap()), Err(Error::VoidComplex)));
    }

    #[test]
    fn projective_plane_torsion() {
        let rp2 = SimplicialComplex::from_maximal_faces(
            6,
            &[
                vec![0, 1, 3],
                vec![0, 1, 5],
                vec![0, 2, 4],
                vec![0, 2, 5],
                vec![0, 3, 4],
                vec![1, 2, 3],
                vec![1, 2, 4],
                vec![1, 4, 5],
                vec![2, 3, 5],
                vec![3, 4, 5],
            ],
        )
        .unwrap();
        assert_eq!(rp2.f_vector(), vec![1, 6, 15, 10]);
        let b = reduced_betti(&rp2).unwrap();
        assert!(b.ranks().is_empty());
        assert_eq!(b.torsion().get(&1), Some(&vec![BigInt::from(2)]));
    }
}
