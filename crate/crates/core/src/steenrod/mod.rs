//! The mod-2 Steenrod algebra in the Milnor basis, its sub-Hopf-algebras
//! `E(n)` and `A(n)`, quotient modules `A//B`, and dimension counts for
//! sub-Hopf-algebras of the dual Steenrod algebra at any prime.

mod dims;
mod quotient;

pub use dims::{bstar_dims, dual_steenrod_dims, poincare_product, OddPrimeDims, Profile};
pub use quotient::{duality_dims_check, quotient_module, square_check, QuotientModuleTable, SquareReport};

use std::collections::BTreeSet;
use std::fmt;

/// `Sq(r_1, r_2, ...)` with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MilnorMonomial(Vec<u32>);

impl MilnorMonomial {
    pub fn new(mut r: Vec<u32>) -> Self {
        while r.last() == Some(&0) {
            r.pop();
        }
        MilnorMonomial(r)
    }

    pub fn unit() -> Self {
        MilnorMonomial(vec![])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &r)| r as usize * ((1usize << (i + 1)) - 1)).sum()
    }
}

impl fmt::Display for MilnorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "Sq(0)");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "Sq({})", parts.join(","))
    }
}

/// A sum of distinct Milnor basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SteenrodElement(BTreeSet<MilnorMonomial>);

impl SteenrodElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(MilnorMonomial::unit())
    }

    /// `Sq^n = Sq(n)`.
    pub fn sq(n: u32) -> Self {
        Self::from(MilnorMonomial::new(vec![n]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &MilnorMonomial> {
        self.0.iter()
    }

    pub fn toggle(&mut self, m: MilnorMonomial) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        SteenrodElement(self.0.symmetric_difference(&other.0).cloned().collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SteenrodElement::zero();
        for a in &self.0 {
            for b in &other.0 {
                for m in milnor_product(a, b).0 {
                    out.toggle(m);
                }
            }
        }
        out
    }

    /// The common degree of the terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut ds = self.0.iter().map(MilnorMonomial::degree);
        let d = ds.next()?;
        ds.all(|e| e == d).then_some(d)
    }
}

impl From<MilnorMonomial> for SteenrodElement {
    fn from(m: MilnorMonomial) -> Self {
        SteenrodElement(BTreeSet::from([m]))
    }
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Milnor basis of `A` in degree `d`.
pub fn basis(d: usize) -> Vec<MilnorMonomial> {
    fn go(i: usize, d: usize, cur: &mut Vec<u32>, out: &mut Vec<MilnorMonomial>) {
        if d == 0 {
            out.push(MilnorMonomial::new(cur.clone()));
            return;
        }
        let w = (1usize << i) - 1;
        if w > d {
            return;
        }
        for r in 0..=(d / w) {
            cur.push(r as u32);
            go(i + 1, d - r * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, d, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// `dim A_d` for `d <= n`.
pub fn dims(n: usize) -> Vec<usize> {
    (0..=n).map(|d| basis(d).len()).collect()
}

/// Product of two Milnor basis elements, summing over Milnor matrices.
pub fn milnor_product(a: &MilnorMonomial, b: &MilnorMonomial) -> SteenrodElement {
    let r = &a.0;
    let s = &b.0;
    let (rows, cols) = (r.len(), s.len());
    let mut x = vec![vec![0u32; cols + 1]; rows + 1];
    let mut out = SteenrodElement::zero();
    let mut row_rem: Vec<u32> = r.clone();
    let mut col_rem: Vec<u32> = s.clone();

    fn finish(x: &mut [Vec<u32>], row_rem: &[u32], col_rem: &[u32], out: &mut SteenrodElement) {
        let rows = x.len() - 1;
        let cols = x[0].len() - 1;
        for i in 1..=rows {
            x[i][0] = row_rem[i - 1];
        }
        for j in 1..=cols {
            x[0][j] = col_rem[j - 1];
        }
        let mut t = Vec::with_capacity(rows + cols);
        for n in 1..=rows + cols {
            let mut sum = 0u32;
            let mut seen = 0u32;
            for i in 0..=n.min(rows) {
                let j = n - i;
                if j > cols {
                    continue;
                }
                let v = x[i][j];
                if seen & v != 0 {
                    return;
                }
                seen |= v;
                sum += v;
            }
            t.push(sum);
        }
        out.toggle(MilnorMonomial::new(t));
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        j: usize,
        x: &mut Vec<Vec<u32>>,
        row_rem: &mut Vec<u32>,
        col_rem: &mut Vec<u32>,
        out: &mut SteenrodElement,
    ) {
        let rows = x.len() - 1;
        let cols = x[0].len() - 1;
        if i > rows {
            finish(x, row_rem, col_rem, out);
            return;
        }
        let (ni, nj) = if j == cols { (i + 1, 1) } else { (i, j + 1) };
        if cols == 0 {
            go(i + 1, 1, x, row_rem, col_rem, out);
            return;
        }
        let w = 1u32 << j;
        let max = (row_rem[i - 1] / w).min(col_rem[j - 1]);
        for v in 0..=max {
            x[i][j] = v;
            row_rem[i - 1] -= v * w;
            col_rem[j - 1] -= v;
            go(ni, nj, x, row_rem, col_rem, out);
            row_rem[i - 1] += v * w;
            col_rem[j - 1] += v;
        }
        x[i][j] = 0;
    }

    go(1, 1, &mut x, &mut row_rem, &mut col_rem, &mut out);
    out
}

/// The Milnor primitive `Q^i = Sq(0, ..., 0, 1)` with the 1 in slot `i + 1`.
pub fn milnor_primitive(i: usize) -> SteenrodElement {
    let mut r = vec![0; i + 1];
    r[i] = 1;
    SteenrodElement::from(MilnorMonomial::new(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(r: &[u32]) -> SteenrodElement {
        SteenrodElement::from(MilnorMonomial::new(r.to_vec()))
    }

    #[test]
    fn basis_small_degrees() {
        assert_eq!(basis(0), vec![MilnorMonomial::unit()]);
        assert_eq!(basis(3), vec![MilnorMonomial::new(vec![0, 1]), MilnorMonomial::new(vec![3])]);
        assert_eq!(basis(7).len(), 4);
    }

    #[test]
    fn sq1_squares_to_zero() {
        assert!(sq(&[1]).mul(&sq(&[1])).is_zero());
        let q1 = milnor_primitive(1);
        assert!(q1.mul(&q1).is_zero());
    }

    #[test]
    fn primitives_commute() {
        let (q0, q1) = (milnor_primitive(0), milnor_primitive(1));
        assert_eq!(q0, SteenrodElement::sq(1));
        assert!(q0.mul(&q1).add(&q1.mul(&q0)).is_zero());
        assert_eq!(q0.mul(&q1), sq(&[1, 1]));
        assert_eq!(milnor_primitive(3).degree(), Some(15));
    }

    #[test]
    fn known_products() {
        // Sq^2 Sq^2 = Sq^3 Sq^1 = Sq(3,0) + ... ; in the Milnor basis Sq(1,1).
        assert_eq!(SteenrodElement::sq(2).mul(&SteenrodElement::sq(2)), sq(&[1, 1]));
        // Sq^1 Sq^2 = Sq^3.
        assert_eq!(SteenrodElement::sq(1).mul(&SteenrodElement::sq(2)), sq(&[3]));
        // Sq^2 Sq^1 = Sq(3) + Sq(0,1).
        assert_eq!(SteenrodElement::sq(2).mul(&SteenrodElement::sq(1)), sq(&[3]).add(&sq(&[0, 1])));
    }

    #[test]
    fn unit_is_neutral() {
        let a = sq(&[2, 1]);
        assert_eq!(SteenrodElement::one().mul(&a), a);
        assert_eq!(a.mul(&SteenrodElement::one()), a);
    }
}
