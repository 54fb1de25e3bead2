//! Exact linear algebra: Smith-form elimination over Euclidean rings and
//! packed bit matrices over F_2.

use super::ring::EuclideanRing;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<R>>,
}

impl<R: EuclideanRing> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![vec![R::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>, cols: usize) -> Self {
        Matrix { rows: rows.len(), cols, data: rows }
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i][j] = v;
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        self.data.iter().map(|row| row.iter().zip(v).fold(R::zero(), |acc, (a, b)| acc + a.mul_ref(b))).collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    m.data[i][j] = m.data[i][j].add_ref(&a.mul_ref(&o.data[k][j]));
                }
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }
}

/// `u * a * v = diag(d)` with `u`, `v` invertible.
#[derive(Debug, Clone)]
pub struct Smith<R> {
    pub u: Matrix<R>,
    pub v: Matrix<R>,
    /// Diagonal entries, `min(rows, cols)` of them; nonzero ones come first.
    pub diag: Vec<R>,
    pub rank: usize,
}

fn swap_rows<R: Clone>(m: &mut [Vec<R>], a: usize, b: usize) {
    m.swap(a, b);
}

fn swap_cols<R: Clone>(m: &mut [Vec<R>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// row_dst -= q * row_src
fn row_axpy<R: EuclideanRing>(m: &mut [Vec<R>], dst: usize, src: usize, q: &R) {
    let src_row = m[src].clone();
    for (d, s) in m[dst].iter_mut().zip(&src_row) {
        if !s.is_zero() {
            *d = d.sub_ref(&q.mul_ref(s));
        }
    }
}

/// col_dst -= q * col_src
fn col_axpy<R: EuclideanRing>(m: &mut [Vec<R>], dst: usize, src: usize, q: &R) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let t = q.mul_ref(&row[src]);
            row[dst] = row[dst].sub_ref(&t);
        }
    }
}

/// Smith-form elimination with transforms.
pub fn smith<R: EuclideanRing>(a: &Matrix<R>) -> Smith<R> {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.data.clone();
    let mut u = Matrix::<R>::identity(m).data;
    let mut v = Matrix::<R>::identity(n).data;
    let mut t = 0;
    while t < m.min(n) {
        // Pivot of least norm in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if let Some(nv) = d[i][j].norm() {
                    if best.is_none_or(|(bi, bj)| nv < d[bi][bj].norm().expect("nonzero")) {
                        best = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut d, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d[i][t].is_zero() {
                    continue;
                }
                let (q, r) = d[i][t].div_rem_euclid(&d[t][t]);
                row_axpy(&mut d, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                if !r.is_zero() {
                    swap_rows(&mut d, t, i);
                    swap_rows(&mut u, t, i);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if d[t][j].is_zero() {
                    continue;
                }
                let (q, r) = d[t][j].div_rem_euclid(&d[t][t]);
                col_axpy(&mut d, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                if !r.is_zero() {
                    swap_cols(&mut d, t, j);
                    swap_cols(&mut v, t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        t += 1;
    }
    let diag: Vec<R> = (0..m.min(n)).map(|i| d[i][i].clone()).collect();
    let rank = diag.iter().take_while(|x| !x.is_zero()).count();
    Smith { u: Matrix { rows: m, cols: m, data: u }, v: Matrix { rows: n, cols: n, data: v }, diag, rank }
}

impl<R: EuclideanRing> Smith<R> {
    /// A basis of the kernel of the original matrix.
    pub fn kernel(&self) -> Vec<Vec<R>> {
        (self.rank..self.v.cols).map(|j| self.v.column(j)).collect()
    }

    /// Some `x` with `a x = b`, when one exists.
    pub fn solve(&self, b: &[R]) -> Option<Vec<R>> {
        let ub = self.u.mul_vec(b);
        let mut y = vec![R::zero(); self.v.rows];
        for (i, c) in ub.iter().enumerate() {
            if i < self.rank {
                y[i] = c.try_div(&self.diag[i])?;
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&y))
    }

    /// Nonzero non-unit diagonal entries: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<R> {
        self.diag[..self.rank].iter().filter(|x| !x.is_unit()).cloned().collect()
    }
}

/// Matrix over F_2 with rows packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    pub rows: usize,
    pub cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        F2Matrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    pub fn row(&self, i: usize) -> Vec<bool> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        let w = self.words;
        for k in 0..w {
            let s = self.data[src * w + k];
            self.data[dst * w + k] ^= s;
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns in the
    /// order the columns are scanned.
    pub fn rref_with_order(&mut self, order: &[usize]) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in order {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            if p != r {
                let w = self.words;
                for k in 0..w {
                    self.data.swap(p * w + k, r * w + k);
                }
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&mut self) -> Vec<usize> {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// `x` with `self * x = b`, if any.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        let mut aug = F2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![false; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.get(r, self.cols);
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn zm(rows: &[&[i64]]) -> Matrix<BigInt> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(), cols)
    }

    #[test]
    fn smith_over_integers() {
        let a = zm(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a);
        assert_eq!(s.rank, 3);
        let prod = s.u.mul(&a).mul(&s.v);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(prod.get(i, j).is_zero());
                }
            }
        }
        let det: BigInt = s.diag.iter().product();
        assert_eq!(det.magnitude(), &num_bigint::BigUint::from(144u32));
    }

    #[test]
    fn kernel_and_solve() {
        let a = zm(&[&[1, 2, 3], &[2, 4, 6]]);
        let s = smith(&a);
        assert_eq!(s.rank, 1);
        for k in s.kernel() {
            assert!(a.mul_vec(&k).iter().all(Zero::is_zero));
        }
        let b: Vec<BigInt> = vec![3.into(), 6.into()];
        let x = s.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(s.solve(&[BigInt::from(1), BigInt::from(1)]).is_none());
    }

    #[test]
    fn torsion_of_cokernel() {
        let s = smith(&zm(&[&[2]]));
        assert_eq!(s.torsion(), vec![BigInt::from(2)]);
    }

    #[test]
    fn f2_solve() {
        let mut m = F2Matrix::zeros(2, 3);
        m.set(0, 0, true);
        m.set(0, 1, true);
        m.set(1, 1, true);
        m.set(1, 2, true);
        assert_eq!(m.rank(), 2);
        let x = m.solve(&[true, false]).unwrap();
        assert_eq!((x[0] ^ x[1], x[1] ^ x[2]), (true, false));
    }
}
