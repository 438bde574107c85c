//! Smith normal form over the integers.
//!
//! Dense matrices use arbitrary-precision entries. Large boundary matrices
//! go through [`sparse_invariant_factors`] first: unit pivots are eliminated
//! on a sparse column representation with checked `i64` arithmetic, and only
//! the leftover block is handed to the dense routine.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flat_map(|row| row.iter().cloned().map(Into::into)).collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    /// Whether all off-diagonal entries vanish.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += factor * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            if !v.is_zero() {
                self.data[dst * self.cols + j] += v;
            }
        }
    }

    /// `col[dst] += factor * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * factor;
            if !v.is_zero() {
                self.data[i * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[r * self.cols + j];
            *v = -std::mem::take(v);
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>())).finish()
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries (all positive).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

struct Transforms {
    u: IntMatrix,
    v: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut d = m.clone();
    let mut t = Transforms { u: IntMatrix::identity(m.rows), v: IntMatrix::identity(m.cols) };
    reduce(&mut d, Some(&mut t));
    SmithForm { u: t.u, d, v: t.v }
}

/// Nonzero invariant factors of `m`, without tracking the transforms.
pub fn smith_diagonal(mut m: IntMatrix) -> Vec<BigInt> {
    reduce(&mut m, None);
    m.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
}

fn min_abs_position(d: &IntMatrix, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cells {
        let v = &d[(i, j)];
        if v.is_zero() {
            continue;
        }
        let a = v.abs();
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            let unit = a.is_one();
            best = Some(((i, j), a));
            if unit {
                break;
            }
        }
    }
    best.map(|(p, _)| p)
}

fn reduce(d: &mut IntMatrix, mut t: Option<&mut Transforms>) {
    let (rows, cols) = (d.rows, d.cols);
    for s in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_position(d, (s..rows).flat_map(|i| (s..cols).map(move |j| (i, j)))) else {
            break;
        };
        move_pivot(d, t.as_deref_mut(), s, pi, pj);
        loop {
            let mut clean = true;
            for i in s + 1..rows {
                if d[(i, s)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, s)] / &d[(s, s)]);
                d.add_row(i, s, &q);
                if let Some(t) = t.as_deref_mut() {
                    t.u.add_row(i, s, &q);
                }
                clean &= d[(i, s)].is_zero();
            }
            for j in s + 1..cols {
                if d[(s, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(s, j)] / &d[(s, s)]);
                d.add_col(j, s, &q);
                if let Some(t) = t.as_deref_mut() {
                    t.v.add_col(j, s, &q);
                }
                clean &= d[(s, j)].is_zero();
            }
            if !clean {
                let remainders = (s..rows).map(|i| (i, s)).chain((s + 1..cols).map(|j| (s, j)));
                let (pi, pj) = min_abs_position(d, remainders).expect("pivot row/column nonzero");
                move_pivot(d, t.as_deref_mut(), s, pi, pj);
                continue;
            }
            // divisibility: fold a row with a non-multiple entry into the pivot row
            let pivot = d[(s, s)].clone();
            let offender = (s + 1..rows).find(|&i| (s + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row(s, i, &BigInt::one());
                    if let Some(t) = t.as_deref_mut() {
                        t.u.add_row(s, i, &BigInt::one());
                    }
                }
                None => break,
            }
        }
        if d[(s, s)].is_negative() {
            d.negate_row(s);
            if let Some(t) = t.as_deref_mut() {
                t.u.negate_row(s);
            }
        }
    }
}

fn move_pivot(d: &mut IntMatrix, t: Option<&mut Transforms>, s: usize, pi: usize, pj: usize) {
    d.swap_rows(s, pi);
    d.swap_cols(s, pj);
    if let Some(t) = t {
        t.u.swap_rows(s, pi);
        t.v.swap_cols(s, pj);
    }
}

/// Sparse integer matrix stored as columns of `(row, value)` sorted by row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.nrows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m[(i as usize, j)] = BigInt::from(v);
            }
        }
        m
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols.len(), rhs.nrows, "dimension mismatch");
        let cols = rhs
            .cols
            .iter()
            .map(|rcol| {
                let mut acc = std::collections::BTreeMap::<u32, i64>::new();
                for &(l, b) in rcol {
                    for &(i, a) in &self.cols[l as usize] {
                        *acc.entry(i).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, cols }
    }
}

/// `col - factor * pivot`, or `None` on overflow. Rows present only in
/// `pivot` are reported through `fresh`.
fn axpy(col: &[(u32, i64)], pivot: &[(u32, i64)], factor: i64, fresh: &mut Vec<u32>) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(col.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < col.len() || b < pivot.len() {
        let take_a = b >= pivot.len() || (a < col.len() && col[a].0 < pivot[b].0);
        let take_b = a >= col.len() || (b < pivot.len() && pivot[b].0 < col[a].0);
        if take_a {
            out.push(col[a]);
            a += 1;
        } else if take_b {
            let v = factor.checked_mul(pivot[b].1)?.checked_neg()?;
            out.push((pivot[b].0, v));
            fresh.push(pivot[b].0);
            b += 1;
        } else {
            let v = col[a].1.checked_sub(factor.checked_mul(pivot[b].1)?)?;
            if v != 0 {
                out.push((col[a].0, v));
            }
            a += 1;
            b += 1;
        }
    }
    Some(out)
}

/// Nonzero invariant factors of a sparse matrix, in nondecreasing order.
pub fn sparse_invariant_factors(m: SparseMatrix) -> Vec<BigInt> {
    let SparseMatrix { nrows, mut cols } = m;
    let ncols = cols.len();
    let mut row_cols: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    for (j, col) in cols.iter().enumerate() {
        for &(i, _) in col {
            row_cols[i as usize].push(j as u32);
        }
    }
    let mut alive = vec![true; ncols];
    let mut units = 0usize;
    let mut fresh = Vec::new();
    'passes: loop {
        let mut order: Vec<usize> = (0..ncols).filter(|&j| alive[j] && !cols[j].is_empty()).collect();
        order.sort_by_key(|&j| cols[j].len());
        let mut progress = false;
        for j in order {
            let Some(&(pr, ps)) = cols[j]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(i, _)| row_cols[*i as usize].len())
            else {
                continue;
            };
            let pivot = std::mem::take(&mut cols[j]);
            let users = std::mem::take(&mut row_cols[pr as usize]);
            for &k in &users {
                let k = k as usize;
                if k == j || !alive[k] {
                    continue;
                }
                let Ok(pos) = cols[k].binary_search_by_key(&pr, |e| e.0) else {
                    continue;
                };
                let factor = cols[k][pos].1 * ps;
                fresh.clear();
                match axpy(&cols[k], &pivot, factor, &mut fresh) {
                    Some(updated) => {
                        cols[k] = updated;
                        for &r in &fresh {
                            row_cols[r as usize].push(k as u32);
                        }
                    }
                    None => {
                        // leave the pivot in place; the dense pass finishes exactly
                        cols[j] = pivot;
                        row_cols[pr as usize] = users;
                        break 'passes;
                    }
                }
            }
            alive[j] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let residual: Vec<usize> = (0..ncols).filter(|&j| alive[j] && !cols[j].is_empty()).collect();
    let mut factors = vec![BigInt::one(); units];
    if !residual.is_empty() {
        let mut rows: Vec<u32> = residual.iter().flat_map(|&j| cols[j].iter().map(|e| e.0)).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut dense = IntMatrix::zeros(rows.len(), residual.len());
        for (c, &j) in residual.iter().enumerate() {
            for &(i, v) in &cols[j] {
                let r = rows.binary_search(&i).unwrap();
                dense[(r, c)] = BigInt::from(v);
            }
        }
        factors.extend(smith_diagonal(dense));
    }
    factors.sort();
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_is_fixed() {
        let f = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(f.d, IntMatrix::identity(3));
    }

    #[test]
    fn coprime_diagonal() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let f = smith_normal_form(&m);
        assert_eq!(f.d.diagonal(), ints(&[1, 6]));
        assert_eq!(&(&f.u * &m) * &f.v, f.d);
    }

    #[test]
    fn rectangular_and_zero() {
        let m = IntMatrix::from_rows(&[vec![0, 0, 0], vec![0, 0, 0]]);
        assert!(smith_diagonal(m).is_empty());
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let f = smith_normal_form(&m);
        assert_eq!(f.d.diagonal(), ints(&[2, 6, 12]));
        assert_eq!(&(&f.u * &m) * &f.v, f.d);
    }

    #[test]
    fn sparse_matches_dense() {
        let dense = IntMatrix::from_rows(&[vec![1, -1, 0, 2], vec![0, 2, 2, 0], vec![-1, 1, 4, 0]]);
        let sparse = SparseMatrix {
            nrows: 3,
            cols: vec![vec![(0, 1), (2, -1)], vec![(0, -1), (1, 2), (2, 1)], vec![(1, 2), (2, 4)], vec![(0, 2)]],
        };
        assert_eq!(sparse.to_dense(), dense);
        let mut expected = smith_diagonal(dense);
        expected.sort();
        assert_eq!(sparse_invariant_factors(sparse), expected);
    }

    #[test]
    fn sparse_overflow_falls_back_exactly() {
        let big = i64::MAX / 2 + 7;
        let sparse = SparseMatrix { nrows: 2, cols: vec![vec![(0, 1), (1, big)], vec![(0, big), (1, 3)]] };
        let expected = smith_diagonal(sparse.to_dense());
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(sparse_invariant_factors(sparse), expected_sorted);
    }
}
