//! Profiles and Poincaré series.

use crate::error::{Error, Result};

use super::{MilnorMonomial, SteenrodElement};

/// A sub-Hopf-algebra of the mod-2 Steenrod algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Profile {
    /// `E(n)`, exterior on `Q^0, ..., Q^n`.
    Exterior(usize),
    /// Exponent bounds `h(i)` on `xi_i` in the dual, `h(i) = 1` beyond the list.
    Full(Vec<u64>),
}

impl Profile {
    pub fn e(n: usize) -> Self {
        Profile::Exterior(n)
    }

    /// `A(n)`: `h(i) = 2^{n + 2 - i}` for `i <= n + 1`.
    pub fn a(n: usize) -> Self {
        Profile::Full((1..=n + 1).map(|i| 1u64 << (n + 2 - i)).collect())
    }

    /// `log_2 h(i)`.
    pub fn exponent(&self, i: usize) -> u32 {
        match self {
            Profile::Exterior(n) => u32::from(i >= 1 && i <= n + 1),
            Profile::Full(h) => h.get(i.wrapping_sub(1)).map_or(0, |x| x.trailing_zeros()),
        }
    }

    fn len(&self) -> usize {
        match self {
            Profile::Exterior(n) => n + 1,
            Profile::Full(h) => h.len(),
        }
    }

    /// `e(r) >= min(e(r - i) - i, e(i))` for `0 < i < r`.
    pub fn is_valid(&self) -> bool {
        let top = self.len() + 2;
        (2..=top).all(|r| {
            (1..r).all(|i| {
                let lhs = self.exponent(r) as i64;
                lhs >= (self.exponent(r - i) as i64 - i as i64).min(self.exponent(i) as i64)
            })
        })
    }

    /// Algebra generators of the subalgebra.
    pub fn generators(&self) -> Vec<SteenrodElement> {
        match self {
            Profile::Exterior(n) => (0..=*n).map(super::milnor_primitive).collect(),
            Profile::Full(h) => {
                let k = h.first().map_or(0, |x| x.trailing_zeros() as usize);
                (0..k).map(|j| SteenrodElement::sq(1 << j)).collect()
            }
        }
    }

    /// Whether `Sq(r)` lies in the subalgebra; meaningful for `Full` profiles.
    pub fn contains(&self, m: &MilnorMonomial) -> bool {
        m.exponents().iter().enumerate().all(|(i, &r)| (r as u64) < (1u64 << self.exponent(i + 1)))
    }

    /// Dimensions through degree `n`.
    pub fn dims(&self, n: usize) -> Vec<usize> {
        let gens: Vec<(usize, u64)> = (1..=self.len()).map(|i| ((1usize << i) - 1, 1u64 << self.exponent(i))).collect();
        poincare_product(n, &gens, &[])
    }

    pub fn total_dim(&self) -> usize {
        let top: usize = (1..=self.len()).map(|i| ((1usize << i) - 1) * ((1usize << self.exponent(i)) - 1)).sum();
        self.dims(top).iter().sum()
    }
}

/// Dimensions through degree `n` of a tensor product of truncated
/// polynomial algebras `(degree, height)` (height 0 meaning polynomial)
/// and exterior algebras on `ext` degrees.
pub fn poincare_product(n: usize, truncated: &[(usize, u64)], ext: &[usize]) -> Vec<usize> {
    let mut dims = vec![0usize; n + 1];
    dims[0] = 1;
    for &(d, h) in truncated {
        if d == 0 || d > n {
            continue;
        }
        let mut next = vec![0usize; n + 1];
        for (k, &c) in dims.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut e = 0u64;
            while k + (e as usize) * d <= n && (h == 0 || e < h) {
                next[k + e as usize * d] += c;
                e += 1;
            }
        }
        dims = next;
    }
    for &d in ext {
        if d == 0 || d > n {
            continue;
        }
        for j in (d..=n).rev() {
            dims[j] += dims[j - d];
        }
    }
    dims
}

fn check_prime(p: u64) -> Result<()> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    Ok(())
}

fn powers(p: u64, n: usize, f: impl Fn(u64) -> u64) -> Vec<usize> {
    (1u32..).map(|i| f(p.pow(i)) as usize).take_while(|&d| d <= n).collect()
}

/// Dimension tables for sub-Hopf-algebras of the dual Steenrod algebra at
/// an odd prime, with `|xi_i| = 2(p^i - 1)` and `|tau_i| = 2p^i - 1`.
#[derive(Clone, Debug)]
pub struct OddPrimeDims {
    pub p: u64,
    pub max_degree: usize,
}

impl OddPrimeDims {
    pub fn new(p: u64, max_degree: usize) -> Result<Self> {
        check_prime(p)?;
        if p == 2 {
            return Err(Error::InvalidArgument("p must be odd".into()));
        }
        Ok(OddPrimeDims { p, max_degree })
    }

    fn xi(&self, square: bool) -> Vec<(usize, u64)> {
        let k = if square { 2 } else { 1 };
        powers(self.p, self.max_degree, |q| k * 2 * (q - 1)).into_iter().map(|d| (d, 0)).collect()
    }

    fn tau(&self, from: u32) -> Vec<usize> {
        (from..).map(|i| (2 * self.p.pow(i) - 1) as usize).take_while(|&d| d <= self.max_degree).collect()
    }

    /// `P(xi_1, ...) ⊗ E(tau_0, ...)`.
    pub fn dual_steenrod(&self) -> Vec<usize> {
        poincare_product(self.max_degree, &self.xi(false), &self.tau(0))
    }

    /// `P(xi_1, ...) ⊗ E(tau_{n+1}, ...)`.
    pub fn truncated_homology(&self, n: u32) -> Vec<usize> {
        poincare_product(self.max_degree, &self.xi(false), &self.tau(n + 1))
    }

    /// `P(xi_1^2, ...) ⊗ E(tau_{n+1}, ...)`.
    pub fn squared_homology(&self, n: u32) -> Vec<usize> {
        poincare_product(self.max_degree, &self.xi(true), &self.tau(n + 1))
    }
}

/// Dimensions of `B_*`: `P(xi_1^2, ..., xi_{n+1}^2, xi_{n+2}, ...)` at
/// `p = 2`, and `P(xi_1^2, ...) ⊗ E(tau_{n+1}, ...)` at odd `p`.
pub fn bstar_dims(n: u32, p: u64, max_degree: usize) -> Result<Vec<usize>> {
    check_prime(p)?;
    if p == 2 {
        let gens: Vec<(usize, u64)> = (1u32..)
            .map(|i| (1usize << i) - 1)
            .take_while(|&d| d <= max_degree)
            .enumerate()
            .map(|(i, d)| (if i as u32 <= n { 2 * d } else { d }, 0))
            .collect();
        return Ok(poincare_product(max_degree, &gens, &[]));
    }
    Ok(OddPrimeDims::new(p, max_degree)?.squared_homology(n))
}

/// Dimensions of the dual Steenrod algebra at `p`.
pub fn dual_steenrod_dims(p: u64, max_degree: usize) -> Result<Vec<usize>> {
    check_prime(p)?;
    if p == 2 {
        let gens: Vec<(usize, u64)> = powers(2, max_degree, |q| q - 1).into_iter().map(|d| (d, 0)).collect();
        return Ok(poincare_product(max_degree, &gens, &[]));
    }
    Ok(OddPrimeDims::new(p, max_degree)?.dual_steenrod())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subalgebra_totals() {
        assert_eq!(Profile::e(1).total_dim(), 4);
        assert_eq!(Profile::a(1).total_dim(), 8);
        assert_eq!(Profile::a(2).total_dim(), 64);
        for n in 0..5 {
            assert_eq!(Profile::e(n).total_dim(), 1 << (n + 1));
        }
    }

    #[test]
    fn built_in_profiles_valid() {
        for n in 0..5 {
            assert!(Profile::a(n).is_valid());
            assert!(Profile::e(n).is_valid());
        }
        assert!(!Profile::Full(vec![2, 4]).is_valid());
    }

    #[test]
    fn bstar_examples() {
        assert_eq!(bstar_dims(0, 2, 7).unwrap(), vec![1, 0, 1, 1, 1, 1, 2, 2]);
        assert_eq!(bstar_dims(2, 2, 0).unwrap(), vec![1]);
        // n = 2: generators in degrees 2, 6, 14, 15, 31
        let d = bstar_dims(2, 2, 15).unwrap();
        assert_eq!(d[14], 4);
        assert_eq!(d[15], 1);
        assert!(bstar_dims(1, 4, 8).is_err());
    }

    #[test]
    fn a1_generators() {
        let g = Profile::a(1).generators();
        assert_eq!(g, vec![SteenrodElement::sq(1), SteenrodElement::sq(2)]);
        assert!(Profile::a(1).contains(&MilnorMonomial::new(vec![3, 1])));
        assert!(!Profile::a(1).contains(&MilnorMonomial::new(vec![4])));
    }
}
