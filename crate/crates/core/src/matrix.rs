//! Dense integer matrices, Smith normal form, and the lattice operations
//! (kernels, spans, membership) that every homology computation here is
//! built from.
//!
//! Entries are arbitrary precision. The matrices that occur are tiny, but the
//! intermediate growth during diagonalization is not bounded a priori.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have the
    /// same length; `cols` is needed to express matrices with zero rows.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(x);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn scalar(x: i64) -> Self {
        Self::from_rows(&[vec![x]], 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn vstack(&self, other: &IntMatrix) -> Self {
        self.transpose().hstack(&other.transpose()).transpose()
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &IntMatrix) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m.set(r, j, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        self.transpose().select_rows(idx).transpose()
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(
            v.len(),
            self.cols,
            "dimension mismatch in matrix-vector product"
        );
        (0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Determinant by fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * q;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * q;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -&self.data[i * self.cols + c];
            self.data[i * self.cols + c] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut m = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * rhs.get(k, j);
                    m.data[i * rhs.cols + j] += v;
                }
            }
        }
        m
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        self + &(-rhs)
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;

    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// `u * m * v == d`, with `d` diagonal, nonnegative, each diagonal entry
/// dividing the next, and `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut u_inv = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut rank = 0;

    for t in 0..rows.min(cols) {
        loop {
            let pivot = smallest_nonzero(&a, t);
            let Some((pi, pj)) = pivot else {
                return SmithForm {
                    u,
                    u_inv,
                    d: a,
                    v,
                    rank,
                };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(a.get(t, t));
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                u_inv.add_col_multiple(t, i, &-&q);
                dirty |= !a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(a.get(t, t));
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                dirty |= !a.get(t, j).is_zero();
            }
            if dirty {
                continue;
            }

            // the pivot must divide everything left in the trailing block
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_multiple_of(a.get(t, t)));
            if let Some((i, _)) = offender {
                let one = BigInt::one();
                a.add_row_multiple(t, i, &one);
                u.add_row_multiple(t, i, &one);
                u_inv.add_col_multiple(i, t, &-one);
                continue;
            }
            break;
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        rank += 1;
    }
    SmithForm {
        u,
        u_inv,
        d: a,
        v,
        rank,
    }
}

fn smallest_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a.get(bi, bj).abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// A basis (as columns) of `{x : m x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let idx: Vec<usize> = (snf.rank..m.cols).collect();
    snf.v.select_columns(&idx)
}

/// A basis (as columns) of the lattice spanned by the columns of `m`.
pub fn column_span_basis(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let idx: Vec<usize> = (0..snf.rank).collect();
    (m * &snf.v).select_columns(&idx)
}

/// Some integer solution of `m y = v`, if one exists.
pub fn solve(m: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    solve_with(&snf, m.cols, v)
}

pub(crate) fn solve_with(snf: &SmithForm, cols: usize, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let uv = snf.u.apply(v);
    let mut z = vec![BigInt::zero(); cols];
    for (i, x) in uv.iter().enumerate() {
        if i < snf.rank {
            let d = snf.d.get(i, i);
            let (q, r) = x.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !x.is_zero() {
            return None;
        }
    }
    Some(snf.v.apply(&z))
}

/// True when `v` lies in the lattice spanned by the columns of `m`.
pub fn in_column_span(m: &IntMatrix, v: &[BigInt]) -> bool {
    solve(m, v).is_some()
}

/// Largest nonzero-determinant test for unimodularity of a square matrix.
pub fn is_unimodular(m: &IntMatrix) -> bool {
    m.rows == m.cols && m.determinant().abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .diagonal()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    fn check_snf(m: &IntMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d, "U m V != D for {m:?}");
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
        assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        let d = s.diagonal();
        for i in 0..d.len() {
            for j in 0..d.len() {
                if i != j && i < s.d.rows() && j < s.d.cols() {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
            assert!(!d[i].is_negative());
            if i + 1 < d.len() && !d[i].is_zero() {
                assert!(
                    d[i + 1].is_multiple_of(&d[i]),
                    "divisibility chain broken: {d:?}"
                );
            }
        }
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(diag(&IntMatrix::identity(2)), vec![1, 1]);
        assert_eq!(diag(&IntMatrix::zeros(2, 3)), vec![0, 0]);
    }

    #[test]
    fn ep_cochain_differential() {
        // hand reduction: already diagonal
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]], 2);
        assert_eq!(diag(&m), vec![2, 0]);
        check_snf(&m);
    }

    #[test]
    fn non_divisible_diagonal_is_fixed_up() {
        // diag(2,3) ~ diag(1,6)
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!(diag(&m), vec![1, 6]);
        check_snf(&m);
    }

    #[test]
    fn rectangular_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        assert_eq!(diag(&m), vec![2, 6, 12]);
        check_snf(&m);
        let m = IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1], vec![3, 5]], 2);
        check_snf(&m);
    }

    #[test]
    fn kernels_and_spans() {
        // multiplication by 1 - t on Z[G]
        let m = IntMatrix::from_rows(&[vec![1, -1], vec![-1, 1]], 2);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
        let span = column_span_basis(&m);
        assert_eq!(span.cols(), 1);
        assert!(in_column_span(&m, &[BigInt::from(3), BigInt::from(-3)]));
        assert!(!in_column_span(&m, &[BigInt::from(1), BigInt::from(1)]));
    }

    #[test]
    fn determinant_matches_expansion() {
        let m = IntMatrix::from_rows(&[vec![0, 2, 1], vec![3, 1, 0], vec![1, 1, 1]], 3);
        // 0(1-0) - 2(3-0) + 1(3-1) = -4
        assert_eq!(m.determinant(), BigInt::from(-4));
    }

    proptest::proptest! {
        #[test]
        fn snf_invariants_hold(entries in proptest::collection::vec(-9i64..=9, 12), shape in 0usize..3) {
            let (r, c) = [(3, 4), (4, 3), (2, 6)][shape];
            let rows: Vec<Vec<i64>> = entries.chunks(c).take(r).map(|x| x.to_vec()).collect();
            check_snf(&IntMatrix::from_rows(&rows, c));
        }
    }
}
