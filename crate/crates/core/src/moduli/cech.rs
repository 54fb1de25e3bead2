//! Čech cohomology of `O(n)` on the weighted projective line `P(w_1, w_2)`
//! for the cover by the charts `A != 0` and `B != 0`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{smith, LocalInt, MPoly, Matrix, Var};

type Z2 = LocalInt<2>;

/// `Proj Z_(2)[A, B]` with `|A| = w_1`, `|B| = w_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedProj {
    pub weights: (i64, i64),
    pub names: (String, String),
}

impl Default for WeightedProj {
    fn default() -> Self {
        WeightedProj { weights: (1, 3), names: ("A".into(), "B".into()) }
    }
}

/// A Laurent monomial `A^i B^j`.
pub type Monomial = (i64, i64);

impl WeightedProj {
    pub fn new(w1: i64, w2: i64) -> Result<Self> {
        if w1 <= 0 || w2 <= 0 {
            return Err(Error::InvalidArgument(format!("weights ({w1}, {w2}) must be positive")));
        }
        Ok(WeightedProj { weights: (w1, w2), ..Default::default() })
    }

    /// Laurent monomials of degree `n` with `j` in `[lo, hi]`.
    fn laurent(&self, n: i64, lo: i64, hi: i64) -> Vec<Monomial> {
        let (a, b) = self.weights;
        (lo..=hi).filter(|j| (n - b * j) % a == 0).map(|j| ((n - b * j) / a, j)).collect()
    }

    /// Basis of `H^0(O(n))`: monomials `A^i B^j`, `i, j >= 0`.
    pub fn h0(&self, n: i64) -> Vec<Monomial> {
        if n < 0 {
            return vec![];
        }
        self.laurent(n, 0, n / self.weights.1).into_iter().filter(|m| m.0 >= 0).collect()
    }

    /// Basis of `H^1(O(n))`: monomials `A^-i B^-j`, `i, j >= 1`.
    pub fn h1(&self, n: i64) -> Vec<Monomial> {
        if n >= 0 {
            return vec![];
        }
        self.laurent(n, n / self.weights.1 - 1, -1).into_iter().filter(|m| m.0 <= -1).collect()
    }

    pub fn monomial_poly(&self, m: Monomial) -> MPoly<Z2> {
        let vars = [Var::invertible(&self.names.0, self.weights.0), Var::invertible(&self.names.1, self.weights.1)];
        MPoly::monomial(&vars, &[m.0 as i32, m.1 as i32], Z2::one()).expect("invertible generators")
    }

    pub fn monomial_string(&self, m: Monomial) -> String {
        self.monomial_poly(m).to_string()
    }

    /// The duality class `D = [A^-1 B^-1]`.
    pub fn duality_class(&self) -> Monomial {
        (-1, -1)
    }

    pub fn degree(&self, m: Monomial) -> i64 {
        m.0 * self.weights.0 + m.1 * self.weights.1
    }
}

/// The Čech complex in one degree, restricted to monomials with
/// `|j| <= window`:
/// `C^0 = R[A^-1] ⊕ R[B^-1] -> C^1 = R[(AB)^-1]`, `(f, g) -> f - g`.
#[derive(Clone, Debug)]
pub struct CechComplex {
    pub space: WeightedProj,
    pub degree: i64,
    pub window: i64,
    pub c0_a: Vec<Monomial>,
    pub c0_b: Vec<Monomial>,
    pub c1: Vec<Monomial>,
}

/// Ranks of `H^s` of a complex over `Z_(2)`, with torsion counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CechRanks {
    pub h: [usize; 4],
    pub torsion: usize,
}

impl CechComplex {
    pub fn new(space: &WeightedProj, n: i64, window: i64) -> Self {
        let all = space.laurent(n, -window, window);
        CechComplex {
            space: space.clone(),
            degree: n,
            window,
            c0_a: all.iter().copied().filter(|m| m.1 >= 0).collect(),
            c0_b: all.iter().copied().filter(|m| m.0 >= 0).collect(),
            c1: all,
        }
    }

    pub fn differential(&self) -> Matrix<Z2> {
        let mut d = Matrix::zeros(self.c1.len(), self.c0_a.len() + self.c0_b.len());
        for (j, m) in self.c0_a.iter().enumerate() {
            let i = self.c1.iter().position(|x| x == m).expect("chart monomial in overlap");
            d.set(i, j, Z2::one());
        }
        for (j, m) in self.c0_b.iter().enumerate() {
            let i = self.c1.iter().position(|x| x == m).expect("chart monomial in overlap");
            d.set(i, self.c0_a.len() + j, -Z2::one());
        }
        d
    }

    /// Cohomology ranks by Smith normal form; `H^s = 0` for `s >= 2` since
    /// the complex has length two.
    pub fn cohomology(&self) -> CechRanks {
        let d = self.differential();
        let s = smith(&d);
        let c0 = self.c0_a.len() + self.c0_b.len();
        let torsion = s.torsion().len();
        CechRanks { h: [c0 - s.rank, self.c1.len() - s.rank + torsion, 0, 0], torsion }
    }

    /// A preimage `(f, g)` of a `C^1` monomial, if it is a coboundary.
    pub fn coboundary_preimage(&self, m: Monomial) -> Option<(Option<Monomial>, Option<Monomial>)> {
        if m.1 >= 0 {
            Some((Some(m), None))
        } else if m.0 >= 0 {
            // (0, -m) maps to m.
            Some((None, Some(m)))
        } else {
            None
        }
    }
}

/// `A D` and `B D` are coboundaries and `D` is not.
#[derive(Clone, Debug)]
pub struct AnnihilationReport {
    pub a_times_d: (Monomial, bool),
    pub b_times_d: (Monomial, bool),
    pub d_is_coboundary: bool,
    pub convention: &'static str,
}

impl AnnihilationReport {
    pub fn holds(&self) -> bool {
        self.a_times_d.1 && self.b_times_d.1 && !self.d_is_coboundary
    }
}

pub fn annihilation_check(space: &WeightedProj) -> AnnihilationReport {
    let d = space.duality_class();
    let n = space.degree(d);
    let (wa, wb) = space.weights;
    let ad = (d.0 + 1, d.1);
    let bd = (d.0, d.1 + 1);
    let w = 4 * (n.abs() + wa + wb);
    let hit = |m: Monomial, deg: i64| {
        let c = CechComplex::new(space, deg, w);
        c.coboundary_preimage(m).is_some() && cokernel_contains(&c, m)
    };
    let d_cx = CechComplex::new(space, n, w);
    AnnihilationReport {
        a_times_d: (ad, hit(ad, n + wa)),
        b_times_d: (bd, hit(bd, n + wb)),
        d_is_coboundary: d_cx.coboundary_preimage(d).is_some() || cokernel_contains(&d_cx, d),
        convention: "d(f, g) = f - g; D = [A^-1 B^-1]",
    }
}

/// Whether the unit vector at `m` lies in the image of the differential.
fn cokernel_contains(c: &CechComplex, m: Monomial) -> bool {
    let Some(i) = c.c1.iter().position(|x| *x == m) else {
        return false;
    };
    let mut b = vec![Z2::zero(); c.c1.len()];
    b[i] = Z2::one();
    smith(&c.differential()).solve(&b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h0_ranks() {
        let p = WeightedProj::default();
        assert_eq!(p.h0(0).len(), 1);
        assert_eq!(p.h0(3), vec![(3, 0), (0, 1)]);
        assert!(p.h0(-1).is_empty());
    }

    #[test]
    fn h1_ranks() {
        let p = WeightedProj::default();
        assert_eq!(p.h1(-4), vec![(-1, -1)]);
        for n in -3..10 {
            assert!(p.h1(n).is_empty());
        }
        assert_eq!(p.h1(-8), vec![(-2, -2), (-5, -1)]);
    }

    #[test]
    fn smith_matches_enumeration() {
        let p = WeightedProj::default();
        for n in -20..=20 {
            let c = CechComplex::new(&p, n, 30).cohomology();
            assert_eq!(c.h[0], p.h0(n).len(), "H0 degree {n}");
            assert_eq!(c.h[1], p.h1(n).len(), "H1 degree {n}");
            assert_eq!(c.torsion, 0);
        }
    }

    #[test]
    fn duality_class_annihilated() {
        let r = annihilation_check(&WeightedProj::default());
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.a_times_d.0, (0, -1));
    }
}
