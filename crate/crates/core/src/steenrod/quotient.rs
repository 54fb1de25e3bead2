//! Quotient modules `A//B = A ⊗_B F_2` and maps between them.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactalg::F2Matrix;

use super::{basis, dims, MilnorMonomial, Profile, SteenrodElement};

/// Echelon basis of a subspace of `A_d`, pivots at the highest index.
#[derive(Clone, Debug, Default)]
struct Reducer {
    rows: BTreeMap<usize, Vec<u64>>,
}

fn top_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn bit(v: &[u64], i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

impl Reducer {
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (&p, row) in self.rows.iter().rev() {
            if bit(&v, p) {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<u64>) {
        let v = self.reduce(v);
        if let Some(p) = top_bit(&v) {
            self.rows.insert(p, v);
        }
    }
}

/// Degreewise data of `A//B` through degree `max_degree`.
#[derive(Clone, Debug)]
pub struct QuotientModuleTable {
    pub profile: Profile,
    pub max_degree: usize,
    /// Coset representatives: lexicographically minimal Milnor monomials.
    pub basis: Vec<Vec<MilnorMonomial>>,
    /// `(k, d)` gives the matrix of `Sq^{2^k}` from degree `d` to `d + 2^k`.
    pub actions: BTreeMap<(u32, usize), F2Matrix>,
    monomials: Vec<Vec<MilnorMonomial>>,
    index: Vec<HashMap<MilnorMonomial, usize>>,
    reducers: Vec<Reducer>,
    rep_pos: Vec<Vec<usize>>,
}

impl QuotientModuleTable {
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    fn vector(&self, x: &SteenrodElement, d: usize) -> Vec<u64> {
        let n = self.monomials[d].len();
        let mut v = vec![0u64; n.div_ceil(64).max(1)];
        for m in x.terms() {
            let i = self.index[d][m];
            v[i / 64] ^= 1 << (i % 64);
        }
        v
    }

    /// Coordinates of the class of a homogeneous element of degree `d`.
    pub fn class_of(&self, x: &SteenrodElement, d: usize) -> Vec<bool> {
        let v = self.reducers[d].reduce(self.vector(x, d));
        self.rep_pos[d].iter().map(|&i| bit(&v, i)).collect()
    }

    /// `Sq^{2^k}` applied to a class in degree `d`.
    pub fn act(&self, k: u32, d: usize, v: &[bool]) -> Option<Vec<bool>> {
        let m = self.actions.get(&(k, d))?;
        Some((0..m.rows).map(|i| (0..m.cols).filter(|&j| v[j] && m.get(i, j)).count() % 2 == 1).collect())
    }

    /// Whether the degree-0 class generates every degree under the `Sq^{2^k}`.
    pub fn is_cyclic(&self) -> bool {
        let mut spans: Vec<Vec<Vec<bool>>> = vec![Vec::new(); self.max_degree + 1];
        if self.basis[0].len() != 1 {
            return false;
        }
        spans[0] = vec![vec![true]];
        for d in 1..=self.max_degree {
            let mut vs = Vec::new();
            let mut k = 0;
            while (1usize << k) <= d {
                let s = d - (1 << k);
                for v in &spans[s] {
                    if let Some(w) = self.act(k, s, v) {
                        vs.push(w);
                    }
                }
                k += 1;
            }
            let vs = independent(vs);
            if vs.len() != self.basis[d].len() {
                return false;
            }
            spans[d] = vs;
        }
        true
    }
}

/// A maximal independent subset of `vs`.
fn independent(vs: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let mut red = Reducer::default();
    let mut out = Vec::new();
    for v in vs {
        let mut w = vec![0u64; v.len().div_ceil(64).max(1)];
        for (i, _) in v.iter().enumerate().filter(|(_, &b)| b) {
            w[i / 64] ^= 1 << (i % 64);
        }
        let before = red.rows.len();
        red.insert(w);
        if red.rows.len() > before {
            out.push(v);
        }
    }
    out
}

/// Builds `A//B` through degree `n`; fails if `P_A != P_{A//B} P_B`.
pub fn quotient_module(profile: &Profile, n: usize) -> Result<QuotientModuleTable> {
    let monomials: Vec<Vec<MilnorMonomial>> = (0..=n).map(basis).collect();
    let index: Vec<HashMap<MilnorMonomial, usize>> =
        monomials.iter().map(|b| b.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()).collect();
    let gens = profile.generators();
    let mut reducers = vec![Reducer::default(); n + 1];
    for d in 0..=n {
        let words = monomials[d].len().div_ceil(64).max(1);
        for g in &gens {
            let gd = g.degree().expect("homogeneous generator");
            if gd > d {
                continue;
            }
            for m in &monomials[d - gd] {
                let prod = SteenrodElement::from(m.clone()).mul(g);
                let mut v = vec![0u64; words];
                for t in prod.terms() {
                    let i = index[d][t];
                    v[i / 64] ^= 1 << (i % 64);
                }
                reducers[d].insert(v);
            }
        }
    }
    let rep_pos: Vec<Vec<usize>> =
        (0..=n).map(|d| (0..monomials[d].len()).filter(|i| !reducers[d].rows.contains_key(i)).collect()).collect();
    let basis_reps: Vec<Vec<MilnorMonomial>> =
        (0..=n).map(|d| rep_pos[d].iter().map(|&i| monomials[d][i].clone()).collect()).collect();

    let a_dims = dims(n);
    let b_dims = profile.dims(n);
    for d in 0..=n {
        let conv: usize = (0..=d).map(|k| basis_reps[k].len() * b_dims[d - k]).sum();
        if conv != a_dims[d] {
            return Err(Error::FreenessViolation(d));
        }
    }

    let mut table = QuotientModuleTable {
        profile: profile.clone(),
        max_degree: n,
        basis: basis_reps,
        actions: BTreeMap::new(),
        monomials,
        index,
        reducers,
        rep_pos,
    };
    let mut k = 0u32;
    while (1usize << k) <= n {
        let step = 1usize << k;
        let sq = SteenrodElement::sq(step as u32);
        for d in 0..=n - step {
            let mut m = F2Matrix::zeros(table.basis[d + step].len(), table.basis[d].len());
            for (j, rep) in table.basis[d].iter().enumerate() {
                let image = sq.mul(&SteenrodElement::from(rep.clone()));
                for (i, b) in table.class_of(&image, d + step).into_iter().enumerate() {
                    m.set(i, j, b);
                }
            }
            table.actions.insert((k, d), m);
        }
        k += 1;
    }
    Ok(table)
}

/// The quotient map `A//B -> A//B'` sending 1 to 1, in degree `d`.
fn induced_map(src: &QuotientModuleTable, tgt: &QuotientModuleTable, d: usize) -> F2Matrix {
    let mut m = F2Matrix::zeros(tgt.basis[d].len(), src.basis[d].len());
    for (j, rep) in src.basis[d].iter().enumerate() {
        for (i, b) in tgt.class_of(&SteenrodElement::from(rep.clone()), d).into_iter().enumerate() {
            m.set(i, j, b);
        }
    }
    m
}

fn mat_mul(a: &F2Matrix, b: &F2Matrix) -> F2Matrix {
    let mut c = F2Matrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let s = (0..a.cols).filter(|&k| a.get(i, k) && b.get(k, j)).count();
            c.set(i, j, s % 2 == 1);
        }
    }
    c
}

/// Whether the induced map is well defined and commutes with every `Sq^{2^k}`.
fn map_is_linear(src: &QuotientModuleTable, tgt: &QuotientModuleTable) -> bool {
    let n = src.max_degree;
    // Well defined: relations of the source vanish in the target.
    for d in 0..=n {
        for row in src.reducers[d].rows.values() {
            let v = tgt.reducers[d].reduce(row.clone());
            if tgt.rep_pos[d].iter().any(|&i| bit(&v, i)) {
                return false;
            }
        }
    }
    let maps: Vec<F2Matrix> = (0..=n).map(|d| induced_map(src, tgt, d)).collect();
    src.actions.iter().all(|(&(k, d), a_src)| {
        let a_tgt = &tgt.actions[&(k, d)];
        mat_mul(&maps[d + (1 << k)], a_src) == mat_mul(a_tgt, &maps[d])
    })
}

/// Outcome of the square of quotient maps
/// `A//E(1) -> A//E(2)`, `A//E(1) -> A//A(1)`, `A//E(2) -> A//A(2)`,
/// `A//A(1) -> A//A(2)`.
#[derive(Clone, Debug)]
pub struct SquareReport {
    pub max_degree: usize,
    pub cyclic: [bool; 4],
    pub linear: [bool; 4],
    pub commutes: bool,
    /// Degree-2 witness: class of `Sq^2` in `A//A(2)` along both composites.
    pub sq2_witness: (Vec<bool>, Vec<bool>),
}

impl SquareReport {
    pub fn holds(&self) -> bool {
        self.commutes && self.cyclic.iter().all(|&b| b) && self.linear.iter().all(|&b| b)
    }
}

pub fn square_check(n: usize) -> Result<SquareReport> {
    if n > 64 {
        return Err(Error::InvalidArgument(format!("degree bound {n} above 64")));
    }
    let e1 = quotient_module(&Profile::e(1), n)?;
    let e2 = quotient_module(&Profile::e(2), n)?;
    let a1 = quotient_module(&Profile::a(1), n)?;
    let a2 = quotient_module(&Profile::a(2), n)?;
    let cyclic = [e1.is_cyclic(), e2.is_cyclic(), a1.is_cyclic(), a2.is_cyclic()];
    let linear = [map_is_linear(&e1, &e2), map_is_linear(&e1, &a1), map_is_linear(&e2, &a2), map_is_linear(&a1, &a2)];
    let mut commutes = true;
    for d in 0..=n {
        let top = mat_mul(&induced_map(&e2, &a2, d), &induced_map(&e1, &e2, d));
        let left = mat_mul(&induced_map(&a1, &a2, d), &induced_map(&e1, &a1, d));
        commutes &= top == left;
    }
    let sq2_witness = if n >= 2 {
        let one = vec![true];
        let via_e2 =
            e1.act(1, 0, &one).map(|v| apply(&induced_map(&e2, &a2, 2), &apply(&induced_map(&e1, &e2, 2), &v)));
        let via_a1 =
            e1.act(1, 0, &one).map(|v| apply(&induced_map(&a1, &a2, 2), &apply(&induced_map(&e1, &a1, 2), &v)));
        (via_e2.unwrap_or_default(), via_a1.unwrap_or_default())
    } else {
        (vec![], vec![])
    };
    Ok(SquareReport { max_degree: n, cyclic, linear, commutes, sq2_witness })
}

fn apply(m: &F2Matrix, v: &[bool]) -> Vec<bool> {
    (0..m.rows).map(|i| (0..m.cols).filter(|&j| v[j] && m.get(i, j)).count() % 2 == 1).collect()
}

/// `dim (A//E(n))_d = dim (B_*)_d` for `d <= max_degree` at `p = 2`.
pub fn duality_dims_check(n: u32, max_degree: usize) -> Result<bool> {
    let q = quotient_module(&Profile::e(n as usize), max_degree)?;
    Ok(q.dims() == super::bstar_dims(n, 2, max_degree)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_by_e1_low_degrees() {
        let q = quotient_module(&Profile::e(1), 8).unwrap();
        assert_eq!(&q.dims()[..4], &[1, 0, 1, 0]);
        assert!(q.is_cyclic());
    }

    #[test]
    fn quotient_by_a1_low_degrees() {
        let q = quotient_module(&Profile::a(1), 8).unwrap();
        assert_eq!(&q.dims()[..4], &[1, 0, 0, 0]);
        assert_eq!(q.basis[0], vec![MilnorMonomial::unit()]);
    }

    #[test]
    fn quotient_by_e0_is_even_generated_low() {
        let q = quotient_module(&Profile::e(0), 6).unwrap();
        // A//Sq^1: 1, Sq^2, Sq^3, Sq^4, Sq^5 / Sq^4 Sq^1..., matching H^*HZ
        assert_eq!(q.dims(), vec![1, 0, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn square_commutes_low() {
        let r = square_check(8).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.sq2_witness.0, r.sq2_witness.1);
    }

    #[test]
    fn duality_small() {
        assert!(duality_dims_check(1, 24).unwrap());
        assert!(duality_dims_check(0, 16).unwrap());
    }
}
