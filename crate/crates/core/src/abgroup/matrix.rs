//! Dense integer matrices with Smith and Hermite normal forms.

use std::fmt;

use super::AbGroupError;

/// Row-major dense matrix over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        f.write_str("]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from its rows. All rows must have length `cols`.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix row");
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &d) in entries.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<i64> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix, AbGroupError> {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    acc += self[(i, k)] as i128 * other[(k, j)] as i128;
                }
                out[(i, j)] = narrow(acc)?;
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>, AbGroupError> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let acc: i128 = self
                    .row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum();
                narrow(acc)
            })
            .collect()
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<i64, AbGroupError> {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(1);
        }
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|r| self.row(r).iter().map(|&x| x as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j]
                        .checked_mul(a[k][k])
                        .zip(a[i][k].checked_mul(a[k][j]))
                        .and_then(|(x, y)| x.checked_sub(y))
                        .ok_or(AbGroupError::Overflow)?;
                    a[i][j] = num / prev;
                }
            }
            prev = a[k][k];
        }
        narrow(sign * a[n - 1][n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, q: i64) -> Result<(), AbGroupError> {
        if q == 0 {
            return Ok(());
        }
        for c in 0..self.cols {
            let v = self[(dst, c)] as i128 + q as i128 * self[(src, c)] as i128;
            self[(dst, c)] = narrow(v)?;
        }
        Ok(())
    }

    /// col[dst] += q * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, q: i64) -> Result<(), AbGroupError> {
        if q == 0 {
            return Ok(());
        }
        for r in 0..self.rows {
            let v = self[(r, dst)] as i128 + q as i128 * self[(r, src)] as i128;
            self[(r, dst)] = narrow(v)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            self[(r, c)] = -self[(r, c)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (r, c): (usize, usize)) -> &i64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i64 {
        &mut self.data[r * self.cols + c]
    }
}

fn narrow(v: i128) -> Result<i64, AbGroupError> {
    i64::try_from(v).map_err(|_| AbGroupError::Overflow)
}

/// Result of [`smith_normal_form`]: `u * m * v == d`.
///
/// `v_inv` is the inverse of `v`, accumulated alongside it. It is what turns
/// relation lattices into generator changes.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d_1 | d_2 | ...`, zeros included.
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)])
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

/// Smith normal form with smallest-absolute-value pivoting.
///
/// Every row and column operation is mirrored on `u`, `v` and `v_inv`, so the
/// transforms are unimodular by construction.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithForm, AbGroupError> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    let x = a[(r, c)];
                    if x != 0 && best.is_none_or(|(br, bc)| x.abs() < a[(br, bc)].abs()) {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else {
                return Ok(finish(a, u, v, v_inv));
            };
            a.swap_rows(t, pr);
            u.swap_rows(t, pr);
            a.swap_cols(t, pc);
            v.swap_cols(t, pc);
            v_inv.swap_rows(t, pc);

            let pivot = a[(t, t)];
            let mut dirty = false;
            for r in t + 1..rows {
                let q = a[(r, t)] / pivot;
                if q != 0 {
                    a.add_row_multiple(r, t, -q)?;
                    u.add_row_multiple(r, t, -q)?;
                }
                dirty |= a[(r, t)] != 0;
            }
            for c in t + 1..cols {
                let q = a[(t, c)] / pivot;
                if q != 0 {
                    a.add_col_multiple(c, t, -q)?;
                    v.add_col_multiple(c, t, -q)?;
                    v_inv.add_row_multiple(t, c, q)?;
                }
                dirty |= a[(t, c)] != 0;
            }
            if dirty {
                continue;
            }
            // pivot row/col are clear; enforce divisibility of the remainder
            let offender = (t + 1..rows)
                .find(|&r| (t + 1..cols).any(|c| a[(r, c)] % pivot != 0));
            match offender {
                Some(r) => {
                    a.add_row_multiple(t, r, 1)?;
                    u.add_row_multiple(t, r, 1)?;
                }
                None => break,
            }
        }
        if a[(t, t)] < 0 {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    Ok(finish(a, u, v, v_inv))
}

fn finish(mut d: IntMatrix, mut u: IntMatrix, v: IntMatrix, v_inv: IntMatrix) -> SmithForm {
    for t in 0..d.rows().min(d.cols()) {
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { d, u, v, v_inv }
}

/// Row Hermite normal form of the lattice spanned by the rows of `m`.
///
/// Returns the nonzero rows: upper echelon, positive pivots, entries above each
/// pivot reduced into `[0, pivot)`. Two generating sets span the same lattice
/// iff their Hermite forms are equal.
pub fn hermite_normal_form(m: &IntMatrix) -> Result<IntMatrix, AbGroupError> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclid down the column until a single nonzero entry remains
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                let x = a[(r, c)];
                if x != 0 && best.is_none_or(|b| x.abs() < a[(b, c)].abs()) {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(pivot_row, b);
            let p = a[(pivot_row, c)];
            let mut done = true;
            for r in pivot_row + 1..rows {
                let q = a[(r, c)] / p;
                a.add_row_multiple(r, pivot_row, -q)?;
                done &= a[(r, c)] == 0;
            }
            if done {
                break;
            }
        }
        if a[(pivot_row, c)] == 0 {
            continue;
        }
        if a[(pivot_row, c)] < 0 {
            a.negate_row(pivot_row);
        }
        let p = a[(pivot_row, c)];
        for r in 0..pivot_row {
            let q = a[(r, c)].div_euclid(p);
            a.add_row_multiple(r, pivot_row, -q)?;
        }
        pivots.push(c);
        pivot_row += 1;
    }
    let kept: Vec<Vec<i64>> = (0..pivot_row).map(|r| a.row(r).to_vec()).collect();
    Ok(IntMatrix::from_rows(&kept, cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m).unwrap();
        let prod = s.u.checked_mul(m).unwrap().checked_mul(&s.v).unwrap();
        assert_eq!(prod, s.d);
        assert_eq!(s.u.determinant().unwrap().abs(), 1);
        assert_eq!(s.v.determinant().unwrap().abs(), 1);
        assert_eq!(
            s.v.checked_mul(&s.v_inv).unwrap(),
            IntMatrix::identity(m.cols())
        );
        for r in 0..s.d.rows() {
            for c in 0..s.d.cols() {
                if r != c {
                    assert_eq!(s.d[(r, c)], 0);
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0, "divisibility chain broken: {diag:?}");
            } else {
                assert!(w[0] >= 0);
            }
        }
        s
    }

    #[test]
    fn snf_small_examples() {
        let s = check_snf(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]], 2));
        assert_eq!(s.diagonal(), vec![1, 6]);
        let s = check_snf(&IntMatrix::identity(3));
        assert_eq!(s.diagonal(), vec![1, 1, 1]);
        let s = check_snf(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]], 2));
        assert_eq!(s.diagonal(), vec![2, 4]);
    }

    #[test]
    fn snf_rectangular_and_zero() {
        let s = check_snf(&IntMatrix::zeros(2, 3));
        assert_eq!(s.rank(), 0);
        let s = check_snf(&IntMatrix::from_rows(&[vec![4, 6, 8]], 3));
        assert_eq!(s.diagonal(), vec![2]);
        let s = check_snf(&IntMatrix::from_rows(&[vec![3], vec![0], vec![9]], 1));
        assert_eq!(s.diagonal(), vec![3]);
    }

    #[test]
    fn hnf_is_canonical() {
        let a = IntMatrix::from_rows(&[vec![3, 0], vec![0, 9], vec![1, 3]], 2);
        let b = IntMatrix::from_rows(&[vec![1, 3], vec![0, 9]], 2);
        assert_eq!(
            hermite_normal_form(&a).unwrap(),
            hermite_normal_form(&b).unwrap()
        );
        let h = hermite_normal_form(&b).unwrap();
        assert_eq!(h, IntMatrix::from_rows(&[vec![1, 3], vec![0, 9]], 2));
    }

    #[test]
    fn determinant_matches_cofactor() {
        let m = IntMatrix::from_rows(&[vec![0, 2, 1], vec![3, 1, 4], vec![1, 0, 5]], 3);
        // 0*(5-0) - 2*(15-4) + 1*(0-1) = -23
        assert_eq!(m.determinant().unwrap(), -23);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn snf_contract(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-30i64..30, 16)) {
                let data: Vec<Vec<i64>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 4 + c]).collect()).collect();
                let m = IntMatrix::from_rows(&data, cols);
                check_snf(&m);
            }

            #[test]
            fn hnf_invariant_under_row_shuffle(seed in proptest::collection::vec(-20i64..20, 9)) {
                let rows: Vec<Vec<i64>> = seed.chunks(3).map(|c| c.to_vec()).collect();
                let mut shuffled = rows.clone();
                shuffled.rotate_left(1);
                shuffled[0] = shuffled[0].iter().zip(&shuffled[1]).map(|(a, b)| a + 2 * b).collect();
                let h1 = hermite_normal_form(&IntMatrix::from_rows(&rows, 3)).unwrap();
                let h2 = hermite_normal_form(&IntMatrix::from_rows(&shuffled, 3)).unwrap();
                prop_assert_eq!(h1, h2);
            }
        }
    }
}
