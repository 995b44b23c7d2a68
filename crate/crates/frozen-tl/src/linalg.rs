//! Exact integer linear algebra: ranks, kernels and homology dimensions.
//!
//! Everything here works over the rationals but computes with arbitrary
//! precision integers only, via fraction-free elimination. Differentials of
//! the complexes built elsewhere in this crate are sparse signed incidence
//! matrices, so the sparse path first splits a matrix into connected blocks
//! of its nonzero pattern and then eliminates each block separately.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}x{1} incompatible with {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("differentials do not compose to zero between degrees {0} and {1}")]
    NotAComplex(usize, usize),
}

/// Dense matrix of arbitrary-precision integers, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_i64_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn multiply(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        Ok(ExactMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                let a = self.get(r, k);
                if !a.is_zero() {
                    acc += a * other.get(k, c);
                }
            }
            acc
        }))
    }

    /// Rank over the rationals via Bareiss fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |a: &Vec<BigInt>, r: usize, c: usize| a[r * cols + c].clone();
        let mut prev = BigInt::one();
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row >= rows {
                break;
            }
            // find a nonzero pivot in this column
            let found = (pivot_row..rows).find(|&r| !a[r * cols + col].is_zero());
            let Some(pr) = found else { continue };
            if pr != pivot_row {
                for c in 0..cols {
                    a.swap(pr * cols + c, pivot_row * cols + c);
                }
            }
            let pivot = at(&a, pivot_row, col);
            for r in pivot_row + 1..rows {
                let factor = at(&a, r, col);
                for c in col..cols {
                    let v = &pivot * at(&a, r, c) - &factor * at(&a, pivot_row, c);
                    let v = &v / &prev; // exact by the Bareiss identity
                    a[r * cols + c] = v;
                }
            }
            prev = pivot;
            pivot_row += 1;
            rank += 1;
        }
        rank
    }
}

/// Sparse integer matrix, stored as columns of `(row, value)` pairs.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            return;
        }
        debug_assert!(r < self.rows && c < self.cols.len());
        let col = &mut self.cols[c];
        if let Some(slot) = col.iter_mut().find(|(rr, _)| *rr == r) {
            slot.1 += v;
            if slot.1.is_zero() {
                col.retain(|(_, val)| !val.is_zero());
            }
        } else {
            col.push((r, v));
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zero(self.rows, self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    /// Is the product `self * other` the zero matrix? Computed sparsely.
    pub fn product_is_zero(&self, other: &SparseMatrix) -> bool {
        if self.cols.len() != other.rows {
            return false;
        }
        for col in &other.cols {
            let mut acc: std::collections::BTreeMap<usize, BigInt> = Default::default();
            for (k, v) in col {
                for (r, w) in &self.cols[*k] {
                    let e = acc.entry(*r).or_insert_with(BigInt::zero);
                    *e += v * w;
                }
            }
            if acc.values().any(|v| !v.is_zero()) {
                return false;
            }
        }
        true
    }

    /// Exact rank over the rationals.
    ///
    /// The nonzero pattern is split into connected components (blocks that
    /// share no rows or columns), and each block is eliminated on its own:
    /// dense Bareiss for small blocks, fraction-free sparse elimination with
    /// a Markowitz-style pivot rule for large ones.
    pub fn rank(&self) -> usize {
        let ncols = self.cols.len();
        if ncols == 0 || self.rows == 0 {
            return 0;
        }
        // union-find over rows (0..rows) and columns (rows..rows+ncols)
        let mut parent: Vec<usize> = (0..self.rows + ncols).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (c, col) in self.cols.iter().enumerate() {
            for (r, _) in col {
                let a = find(&mut parent, *r);
                let b = find(&mut parent, self.rows + c);
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut comp_cols: std::collections::HashMap<usize, Vec<usize>> = Default::default();
        for c in 0..ncols {
            if self.cols[c].is_empty() {
                continue;
            }
            let root = find(&mut parent, self.rows + c);
            comp_cols.entry(root).or_default().push(c);
        }
        let mut total = 0;
        for cols in comp_cols.values() {
            let mut row_ids: Vec<usize> = cols
                .iter()
                .flat_map(|&c| self.cols[c].iter().map(|(r, _)| *r))
                .collect();
            row_ids.sort_unstable();
            row_ids.dedup();
            let row_index: std::collections::HashMap<usize, usize> = row_ids
                .iter()
                .enumerate()
                .map(|(i, r)| (*r, i))
                .collect();
            if row_ids.len().saturating_mul(cols.len()) <= 64 * 64 {
                let mut block = ExactMatrix::zero(row_ids.len(), cols.len());
                for (bc, &c) in cols.iter().enumerate() {
                    for (r, v) in &self.cols[c] {
                        block.set(row_index[r], bc, v.clone());
                    }
                }
                total += block.rank();
            } else {
                let mut block = SparseBlock::new(row_ids.len());
                for &c in cols {
                    let col: Vec<(usize, BigInt)> = self.cols[c]
                        .iter()
                        .map(|(r, v)| (row_index[r], v.clone()))
                        .collect();
                    block.push_col(col);
                }
                total += block.rank();
            }
        }
        total
    }
}

/// Row-oriented sparse fraction-free elimination for a single connected block.
struct SparseBlock {
    // rows as (col, value) lists
    rows: Vec<Vec<(usize, BigInt)>>,
    nrows: usize,
    ncols: usize,
}

impl SparseBlock {
    fn new(nrows: usize) -> Self {
        SparseBlock {
            rows: vec![Vec::new(); nrows],
            nrows,
            ncols: 0,
        }
    }

    fn push_col(&mut self, col: Vec<(usize, BigInt)>) {
        let c = self.ncols;
        self.ncols += 1;
        for (r, v) in col {
            self.rows[r].push((c, v));
        }
    }

    fn rank(mut self) -> usize {
        let mut rank = 0;
        let mut active: Vec<bool> = vec![true; self.nrows];
        loop {
            // Markowitz-style: pick the shortest active nonzero row, then its
            // entry whose column is sparsest among active rows.
            let mut best: Option<(usize, usize)> = None; // (row, len)
            for (r, row) in self.rows.iter().enumerate() {
                if active[r] && !row.is_empty() {
                    if best.map_or(true, |(_, l)| row.len() < l) {
                        best = Some((r, row.len()));
                    }
                }
            }
            let Some((pr, _)) = best else { break };
            // column counts among active rows
            let mut col_count: std::collections::HashMap<usize, usize> = Default::default();
            for (r, row) in self.rows.iter().enumerate() {
                if active[r] {
                    for (c, _) in row {
                        *col_count.entry(*c).or_insert(0) += 1;
                    }
                }
            }
            let (pc, pv) = self.rows[pr]
                .iter()
                .min_by_key(|(c, _)| col_count[c])
                .map(|(c, v)| (*c, v.clone()))
                .expect("nonempty pivot row");
            active[pr] = false;
            rank += 1;
            let pivot_row = self.rows[pr].clone();
            for r in 0..self.nrows {
                if !active[r] {
                    continue;
                }
                let coeff = self.rows[r]
                    .iter()
                    .find(|(c, _)| *c == pc)
                    .map(|(_, v)| v.clone());
                let Some(coeff) = coeff else { continue };
                let merged = row_combine(&self.rows[r], &pivot_row, &pv, &coeff, pc);
                self.rows[r] = merged;
            }
        }
        rank
    }
}

/// Computes `pv * row - coeff * pivot_row`, drops column `pc`, and strips the
/// gcd content so entries stay small.
fn row_combine(
    row: &[(usize, BigInt)],
    pivot_row: &[(usize, BigInt)],
    pv: &BigInt,
    coeff: &BigInt,
    pc: usize,
) -> Vec<(usize, BigInt)> {
    let mut map: std::collections::BTreeMap<usize, BigInt> = Default::default();
    for (c, v) in row {
        map.insert(*c, pv * v);
    }
    for (c, v) in pivot_row {
        let e = map.entry(*c).or_insert_with(BigInt::zero);
        *e -= coeff * v;
    }
    map.remove(&pc);
    let mut out: Vec<(usize, BigInt)> = map
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .collect();
    if !out.is_empty() {
        let mut g = out[0].1.abs();
        for (_, v) in out.iter().skip(1) {
            g = g.gcd(&v.abs());
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() {
            for (_, v) in out.iter_mut() {
                *v = &*v / &g;
            }
        }
    }
    out
}

/// Homology dimensions of a finite complex of free modules over a field.
///
/// `diffs[k]` is the matrix of `d_{k+1} : C_{k+1} -> C_k`, so a complex with
/// terms `C_0, ..., C_L` is described by `L` matrices. The result has length
/// `L + 1`: `dim H_k = dim C_k - rank d_k - rank d_{k+1}`, with missing
/// boundary differentials contributing rank zero. Fails with `NotAComplex`
/// when consecutive matrices do not multiply to zero.
pub fn homology_dims(diffs: &[ExactMatrix]) -> Result<Vec<usize>, LinalgError> {
    if diffs.is_empty() {
        return Ok(Vec::new());
    }
    for k in 0..diffs.len().saturating_sub(1) {
        // d_{k+1} then d_{k+2}; composable means cols of d_{k+1} = rows of d_{k+2}
        let a = &diffs[k];
        let b = &diffs[k + 1];
        if a.cols() != b.rows() {
            return Err(LinalgError::ShapeMismatch(a.rows, a.cols, b.rows, b.cols));
        }
        if !a.multiply(b)?.is_zero() {
            return Err(LinalgError::NotAComplex(k + 2, k + 1));
        }
    }
    let dims: Vec<usize> = std::iter::once(diffs[0].rows())
        .chain(diffs.iter().map(|d| d.cols()))
        .collect();
    let ranks: Vec<usize> = diffs.iter().map(|d| d.rank()).collect();
    Ok((0..dims.len())
        .map(|k| {
            let below = if k == 0 { 0 } else { ranks[k - 1] };
            let above = if k < ranks.len() { ranks[k] } else { 0 };
            dims[k] - below - above
        })
        .collect())
}

/// Sparse variant of [`homology_dims`] for large complexes; `dims[k]` is the
/// dimension of `C_k` and `diffs[k]` the matrix of `d_{k+1} : C_{k+1} -> C_k`.
pub fn homology_dims_sparse(
    dims: &[usize],
    diffs: &[SparseMatrix],
) -> Result<Vec<usize>, LinalgError> {
    assert_eq!(dims.len(), diffs.len() + 1, "terms and differentials mismatch");
    for (k, d) in diffs.iter().enumerate() {
        if d.rows() != dims[k] || d.cols() != dims[k + 1] {
            return Err(LinalgError::ShapeMismatch(d.rows(), d.cols(), dims[k], dims[k + 1]));
        }
    }
    for k in 0..diffs.len().saturating_sub(1) {
        if !diffs[k].product_is_zero(&diffs[k + 1]) {
            return Err(LinalgError::NotAComplex(k + 2, k + 1));
        }
    }
    let ranks: Vec<usize> = diffs.iter().map(|d| d.rank()).collect();
    Ok((0..dims.len())
        .map(|k| {
            let below = if k == 0 { 0 } else { ranks[k - 1] };
            let above = if k < ranks.len() { ranks[k] } else { 0 };
            dims[k] - below - above
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_basics() {
        assert_eq!(ExactMatrix::identity(5).rank(), 5);
        assert_eq!(ExactMatrix::zero(3, 4).rank(), 0);
        assert_eq!(ExactMatrix::from_i64_rows(vec![vec![1, 1], vec![1, 1]]).rank(), 1);
        let m = ExactMatrix::from_i64_rows(vec![
            vec![2, 4, 1],
            vec![1, 2, 0],
            vec![3, 6, 1],
        ]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }

    #[test]
    fn homology_of_two_term_complexes() {
        let iso = vec![ExactMatrix::from_i64_rows(vec![vec![1]])];
        assert_eq!(homology_dims(&iso).unwrap(), vec![0, 0]);
        let zero = vec![ExactMatrix::zero(1, 1)];
        assert_eq!(homology_dims(&zero).unwrap(), vec![1, 1]);
    }

    #[test]
    fn homology_rejects_non_complex() {
        let d1 = ExactMatrix::from_i64_rows(vec![vec![1, 0], vec![0, 1]]);
        let d2 = ExactMatrix::from_i64_rows(vec![vec![1], vec![0]]);
        assert!(matches!(
            homology_dims(&[d1, d2]),
            Err(LinalgError::NotAComplex(2, 1))
        ));
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let mut s = SparseMatrix::zero(4, 5);
        let entries = [
            (0usize, 0usize, 1i64),
            (0, 1, -1),
            (1, 1, 1),
            (2, 2, 1),
            (2, 3, 1),
            (3, 3, -1),
            (3, 4, 1),
        ];
        for (r, c, v) in entries {
            s.add_entry(r, c, BigInt::from(v));
        }
        assert_eq!(s.rank(), s.to_dense().rank());
    }

    #[test]
    fn sparse_block_elimination_path() {
        // a single connected block too large for the dense cutoff
        let n = 80;
        let mut s = SparseMatrix::zero(n, n);
        for i in 0..n {
            s.add_entry(i, i, BigInt::from(1));
            s.add_entry(i, (i + 1) % n, BigInt::from(-1));
        }
        // circulant difference matrix has rank n - 1
        assert_eq!(s.rank(), n - 1);
    }
}
