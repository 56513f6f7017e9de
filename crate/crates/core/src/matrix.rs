//! Dense exact matrices over the integers and rationals.
//!
//! Everything here is arbitrary precision: Smith and Hermite normal forms,
//! integer kernels, determinants and rational inverses never round. The
//! normal-form routines accumulate unimodular transforms so that callers can
//! certify every factorization they hand out.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-major matrix with `BigInt` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
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
        IntMat { rows, cols, data }
    }

    /// Convenience constructor from `i64` rows; panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        IntMat { rows: r, cols: c, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rank: usize, cols: &[Vec<BigInt>]) -> Self {
        assert!(cols.iter().all(|v| v.len() == rank), "column length mismatch");
        IntMat::from_fn(rank, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        IntMat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.at(k, j);
                    let cur = out.at(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn neg(&self) -> IntMat {
        IntMat::from_fn(self.rows, self.cols, |i, j| -self.at(i, j))
    }

    pub fn scale(&self, n: &BigInt) -> IntMat {
        IntMat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * n)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.at(i, j) != self.at(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Block-diagonal assembly; the empty list gives the 0×0 matrix.
    pub fn block_diag(parts: &[IntMat]) -> IntMat {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = IntMat::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for p in parts {
            for i in 0..p.rows {
                for j in 0..p.cols {
                    out.set(ro + i, co + j, p.at(i, j).clone());
                }
            }
            ro += p.rows;
            co += p.cols;
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination. The 0×0 matrix has
    /// determinant 1.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                    a.set(i, j, &num / &prev);
                }
                a.set(i, k, BigInt::zero());
            }
            prev = a.at(k, k).clone();
        }
        sign * a.at(n - 1, n - 1).clone()
    }

    /// Signature (n₊, n₋) of a symmetric matrix with no zero eigenvalue,
    /// computed by exact rational symmetric reduction.
    pub fn signature(&self) -> (usize, usize) {
        assert!(self.is_symmetric(), "signature of non-symmetric matrix");
        let n = self.rows;
        let mut a = RatMat::from_int(self);
        let mut pos = 0usize;
        let mut neg = 0usize;
        let mut live: Vec<usize> = (0..n).collect();
        while !live.is_empty() {
            // Prefer a nonzero diagonal pivot; otherwise make one from an
            // off-diagonal entry.
            let diag = live.iter().position(|&i| !a.at(i, i).is_zero());
            let p = match diag {
                Some(idx) => live[idx],
                None => {
                    let mut found = None;
                    'outer: for (ii, &i) in live.iter().enumerate() {
                        for &j in live.iter().skip(ii + 1) {
                            if !a.at(i, j).is_zero() {
                                found = Some((i, j));
                                break 'outer;
                            }
                        }
                    }
                    match found {
                        Some((i, j)) => {
                            // row/col i += row/col j turns the hyperbolic pair
                            // into a nonzero diagonal entry 2*a[i][j].
                            for k in 0..n {
                                let v = a.at(i, k) + a.at(j, k);
                                a.set(i, k, v);
                            }
                            for k in 0..n {
                                let v = a.at(k, i) + a.at(k, j);
                                a.set(k, i, v);
                            }
                            i
                        }
                        None => break, // remaining block is zero (degenerate input)
                    }
                }
            };
            let pivot = a.at(p, p).clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            live.retain(|&i| i != p);
            for &i in &live {
                let factor = a.at(i, p) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for &j in &live {
                    let v = a.at(i, j) - &factor * a.at(p, j);
                    a.set(i, j, v);
                }
                a.set(i, p, BigRational::zero());
                a.set(p, i, BigRational::zero());
            }
        }
        (pos, neg)
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

    // row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(i, c) - q * self.at(j, c);
            self.set(i, c, v);
        }
    }

    // col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, i) - q * self.at(r, j);
            self.set(r, i, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.at(i, c);
            self.set(i, c, v);
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -self.at(r, j);
            self.set(r, j, v);
        }
    }

    pub fn to_rational(&self) -> RatMat {
        RatMat::from_int(self)
    }
}

/// Smith normal form `u * a * v = d` with `u`, `v` unimodular and `d` diagonal
/// with non-negative entries in a divisibility chain.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMat,
    pub d: IntMat,
    pub v: IntMat,
}

impl SmithForm {
    /// Diagonal entries of `d`, including zeros and ones.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d.at(i, i).clone()).collect()
    }
}

/// Smith normal form with transform accumulation. Pivoting rule: smallest
/// nonzero absolute value in the active submatrix, ties broken by lowest row
/// index, then lowest column index.
pub fn smith_normal_form(a: &IntMat) -> SmithForm {
    let m = a.rows();
    let n = a.cols();
    let mut d = a.clone();
    let mut u = IntMat::identity(m);
    let mut v = IntMat::identity(n);
    let mut t = 0usize;
    while t < m.min(n) {
        // Pivot selection over the active submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d.at(i, j).is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => {
                        let cur = d.at(pi, pj).abs();
                        let cand = d.at(i, j).abs();
                        cand < cur
                    }
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        if d.at(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        // Euclidean clearing; remainders stay below the pivot so re-selecting
        // keeps shrinking it.
        let mut clean = true;
        for i in t + 1..m {
            let q = d.at(i, t).div_floor(d.at(t, t));
            d.row_sub(i, t, &q);
            u.row_sub(i, t, &q);
            if !d.at(i, t).is_zero() {
                clean = false;
            }
        }
        for j in t + 1..n {
            let q = d.at(t, j).div_floor(d.at(t, t));
            d.col_sub(j, t, &q);
            v.col_sub(j, t, &q);
            if !d.at(t, j).is_zero() {
                clean = false;
            }
        }
        if clean {
            t += 1;
        }
    }
    // Enforce the divisibility chain d1 | d2 | ...
    let k = m.min(n);
    loop {
        let mut fixed = true;
        for i in 0..k.saturating_sub(1) {
            let a_i = d.at(i, i).clone();
            let b_i = d.at(i + 1, i + 1).clone();
            if b_i.is_zero() && a_i.is_zero() {
                continue;
            }
            if a_i.is_zero() && !b_i.is_zero() {
                // move the nonzero entry forward
                d.swap_rows(i, i + 1);
                u.swap_rows(i, i + 1);
                d.swap_cols(i, i + 1);
                v.swap_cols(i, i + 1);
                fixed = false;
                continue;
            }
            if b_i.is_zero() || (&b_i % &a_i).is_zero() {
                continue;
            }
            fixed = false;
            let e = a_i.extended_gcd(&b_i);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let ag = &a_i / &g;
            let bg = &b_i / &g;
            // Rows i, i+1 of d and u get [[x, y], [-bg, ag]].
            apply_row_pair(&mut d, i, &x, &y, &-&bg, &ag);
            apply_row_pair(&mut u, i, &x, &y, &-&bg, &ag);
            // Columns i, i+1 of d and v get [[1, -y*bg], [1, x*ag]].
            let c12 = -(&y * &bg);
            let c22 = &x * &ag;
            apply_col_pair(&mut d, i, &BigInt::one(), &c12, &BigInt::one(), &c22);
            apply_col_pair(&mut v, i, &BigInt::one(), &c12, &BigInt::one(), &c22);
        }
        if fixed {
            break;
        }
    }
    SmithForm { u, d, v }
}

// rows (i, i+1) <- [[a, b], [c, e]] * rows (i, i+1)
fn apply_row_pair(m: &mut IntMat, i: usize, a: &BigInt, b: &BigInt, c: &BigInt, e: &BigInt) {
    for col in 0..m.cols() {
        let top = a * m.at(i, col) + b * m.at(i + 1, col);
        let bot = c * m.at(i, col) + e * m.at(i + 1, col);
        m.set(i, col, top);
        m.set(i + 1, col, bot);
    }
}

// cols (j, j+1) <- cols (j, j+1) * [[a, b], [c, e]]
fn apply_col_pair(m: &mut IntMat, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, e: &BigInt) {
    for row in 0..m.rows() {
        let left = m.at(row, j) * a + m.at(row, j + 1) * c;
        let right = m.at(row, j) * b + m.at(row, j + 1) * e;
        m.set(row, j, left);
        m.set(row, j + 1, right);
    }
}

/// Canonical column Hermite form of a full-column-rank matrix: column
/// operations only, pivots positive, entries right of a pivot zero and
/// entries left of it reduced into `[0, pivot)`.
pub fn column_hermite_form(a: &IntMat) -> IntMat {
    let mut h = a.clone();
    let n = h.rows();
    let k = h.cols();
    let mut c = 0usize;
    for r in 0..n {
        if c == k {
            break;
        }
        if (c..k).all(|j| h.at(r, j).is_zero()) {
            continue;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in c..k {
                if h.at(r, j).is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some(b) => h.at(r, j).abs() < h.at(r, b).abs(),
                };
                if better {
                    best = Some(j);
                }
            }
            let j0 = best.expect("nonzero entry exists");
            h.swap_cols(c, j0);
            let mut clean = true;
            for j in c + 1..k {
                let q = h.at(r, j).div_floor(h.at(r, c));
                h.col_sub(j, c, &q);
                if !h.at(r, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.at(r, c).is_negative() {
            h.negate_col(c);
        }
        for j in 0..c {
            let q = h.at(r, j).div_floor(h.at(r, c));
            h.col_sub(j, c, &q);
        }
        c += 1;
    }
    h
}

/// Basis of the integer kernel `{x : a·x = 0}` as matrix columns. The basis is
/// saturated (the kernel is a primitive sublattice by construction) and made
/// deterministic by column Hermite reduction.
pub fn kernel_basis(a: &IntMat) -> IntMat {
    let snf = smith_normal_form(a);
    let n = a.cols();
    let r = a.rows().min(n);
    let mut cols = Vec::new();
    for j in 0..n {
        if j >= r || snf.d.at(j, j).is_zero() {
            cols.push(snf.v.column(j));
        }
    }
    if cols.is_empty() {
        return IntMat::zero(n, 0);
    }
    column_hermite_form(&IntMat::from_columns(n, &cols))
}

/// Row-major matrix with `BigRational` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_int(a: &IntMat) -> Self {
        RatMat {
            rows: a.rows(),
            cols: a.cols(),
            data: a.data.iter().map(|x| BigRational::from(x.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RatMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.at(k, j);
                    let cur = out.at(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMat> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMat::identity(n);
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            a.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let p = a.at(col, col).clone();
            for j in 0..n {
                let v = a.at(col, j) / &p;
                a.set(col, j, v);
                let w = inv.at(col, j) / &p;
                inv.set(col, j, w);
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let f = a.at(r, col).clone();
                for j in 0..n {
                    let v = a.at(r, j) - &f * a.at(col, j);
                    a.set(r, j, v);
                    let w = inv.at(r, j) - &f * inv.at(col, j);
                    inv.set(r, j, w);
                }
            }
        }
        Some(inv)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Exact demotion to an integer matrix; `None` if any entry is fractional.
    pub fn to_int(&self) -> Option<IntMat> {
        if !self.is_integral() {
            return None;
        }
        Some(IntMat::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).to_integer()
        }))
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(IntMat::identity(0).det(), bi(1));
        assert_eq!(IntMat::from_rows(&[vec![0, 1], vec![1, 0]]).det(), bi(-1));
        assert_eq!(
            IntMat::from_rows(&[vec![2, -1], vec![-1, 2]]).det(),
            bi(3)
        );
        let m = IntMat::from_rows(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        assert_eq!(m.det(), bi(-3));
        let singular = IntMat::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.det(), bi(0));
    }

    #[test]
    fn smith_form_diagonalizes_with_unimodular_transforms() {
        let a = IntMat::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u.det().abs(), bi(1));
        assert_eq!(snf.v.det().abs(), bi(1));
        assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.d);
        let diag = snf.diagonal();
        // Classic example: invariant factors 2, 6, 12.
        assert_eq!(diag, vec![bi(2), bi(6), bi(12)]);
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn smith_form_handles_rectangular_and_zero() {
        let a = IntMat::from_rows(&[vec![0, 0, 0], vec![0, 0, 0]]);
        let snf = smith_normal_form(&a);
        assert!(snf.d.is_zero());

        let b = IntMat::from_rows(&[vec![6, 10], vec![0, 0], vec![15, 0]]);
        let snf = smith_normal_form(&b);
        assert_eq!(snf.u.mul(&b).mul(&snf.v), snf.d);
        assert_eq!(snf.u.det().abs(), bi(1));
        assert_eq!(snf.v.det().abs(), bi(1));
    }

    #[test]
    fn kernel_is_saturated_and_canonical() {
        // Kernel of [1, 2, 3] in Z^3: rank 2, saturated.
        let a = IntMat::from_rows(&[vec![1, 2, 3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        for j in 0..k.cols() {
            let col = k.column(j);
            let img = a.mul_vec(&col);
            assert!(img.iter().all(|x| x.is_zero()));
        }
        // Saturation: the SNF of the basis matrix has trivial invariant factors.
        let snf = smith_normal_form(&k);
        for x in snf.diagonal() {
            assert_eq!(x, bi(1));
        }
        // Determinism: recomputing gives the identical matrix.
        assert_eq!(k, kernel_basis(&a));
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        let a = IntMat::from_rows(&[vec![2, 0], vec![0, 3], vec![1, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 0);
    }

    #[test]
    fn rational_inverse_round_trips() {
        let a = IntMat::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![2, 3, -1]]);
        let inv = a.to_rational().inverse().expect("invertible");
        assert!(a.to_rational().mul(&inv).to_int().unwrap().is_identity());
        let singular = IntMat::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(singular.to_rational().inverse().is_none());
    }

    #[test]
    fn signature_of_standard_blocks() {
        let u = IntMat::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(u.signature(), (1, 1));
        let a2 = IntMat::from_rows(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.signature(), (2, 0));
        let neg = IntMat::from_rows(&[vec![-5]]);
        assert_eq!(neg.signature(), (0, 1));
    }

    #[test]
    fn hermite_form_is_column_canonical() {
        let a = IntMat::from_rows(&[vec![4, 6], vec![2, 2]]);
        let h = column_hermite_form(&a);
        // Same column lattice: determinants agree up to sign.
        assert_eq!(h.det().abs(), a.det().abs());
        assert_eq!(h, column_hermite_form(&h));
    }
}
