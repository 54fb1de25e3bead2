//! Graded modules `P / I` over a weighted polynomial ring `P = R[gens]`,
//! with degreewise linear algebra over a principal ideal domain `R`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{smith, EuclideanRing, MPoly, Matrix, Ring};

/// A homogeneous element with an explicit degree, so that zero elements
/// still have one.
#[derive(Clone, Debug)]
pub struct SeqElem<R: Ring> {
    pub name: String,
    pub elem: MPoly<R>,
    pub degree: i64,
}

impl<R: Ring> SeqElem<R> {
    pub fn new(name: &str, elem: MPoly<R>, degree: i64) -> Result<Self> {
        if !elem.is_zero() && elem.homogeneous_weight() != Some(degree) {
            return Err(Error::InvalidArgument(format!("{name} = {elem} is not homogeneous of degree {degree}")));
        }
        Ok(SeqElem { name: name.to_string(), elem, degree })
    }
}

/// `R[gens] / (relations)`; generators have positive degrees.
#[derive(Clone, Debug)]
pub struct GradedModulePresentation<R: Ring> {
    pub gens: Vec<(String, i64)>,
    pub relations: Vec<SeqElem<R>>,
}

/// A finitely generated module `R^free ⊕ (⊕ R/torsion_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleShape<R: Ring> {
    pub free_rank: usize,
    pub torsion: Vec<R>,
}

impl<R: Ring> ModuleShape<R> {
    /// Minimal number of generators; the dimension over a field.
    pub fn generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators() == 0
    }
}

impl<R: EuclideanRing> GradedModulePresentation<R> {
    pub fn free(gens: &[(&str, i64)]) -> Result<Self> {
        if let Some((g, d)) = gens.iter().find(|(_, d)| *d <= 0) {
            return Err(Error::InvalidArgument(format!("generator {g} has degree {d}")));
        }
        Ok(GradedModulePresentation {
            gens: gens.iter().map(|(g, d)| (g.to_string(), *d)).collect(),
            relations: vec![],
        })
    }

    pub fn with_relations(mut self, rel: impl IntoIterator<Item = SeqElem<R>>) -> Self {
        self.relations.extend(rel);
        self
    }

    /// Exponent vectors of the monomials of degree `d`.
    pub fn monomials(&self, d: i64) -> Vec<Vec<u32>> {
        fn go(gens: &[(String, i64)], i: usize, d: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == gens.len() {
                if d == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let w = gens[i].1;
            let mut e = 0;
            while e as i64 * w <= d {
                cur.push(e);
                go(gens, i + 1, d - e as i64 * w, cur, out);
                cur.pop();
                e += 1;
            }
        }
        let mut out = Vec::new();
        if d >= 0 {
            go(&self.gens, 0, d, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn free_dim(&self, d: i64) -> usize {
        self.monomials(d).len()
    }

    fn index(&self, d: i64) -> HashMap<Vec<u32>, usize> {
        self.monomials(d).into_iter().enumerate().map(|(i, e)| (e, i)).collect()
    }

    fn mono_poly(&self, e: &[u32]) -> MPoly<R> {
        let mut p = MPoly::one();
        for ((g, w), &x) in self.gens.iter().zip(e) {
            if x > 0 {
                p = p * MPoly::var(g, *w).pow(x);
            }
        }
        p
    }

    /// Coordinates of a homogeneous polynomial of degree `d`.
    pub fn coords(&self, p: &MPoly<R>, d: i64) -> Result<Vec<R>> {
        let idx = self.index(d);
        let mut v = vec![R::zero(); idx.len()];
        for (e, c) in p.terms() {
            let mut ours = vec![0u32; self.gens.len()];
            for (x, var) in e.iter().zip(p.vars()) {
                if *x == 0 {
                    continue;
                }
                let i = self
                    .gens
                    .iter()
                    .position(|(g, _)| *g == var.name)
                    .ok_or_else(|| Error::InvalidArgument(format!("{} is not a generator", var.name)))?;
                ours[i] = *x as u32;
            }
            let k = idx
                .get(&ours)
                .ok_or_else(|| Error::InvalidArgument(format!("{p} is not homogeneous of degree {d}")))?;
            v[*k] = v[*k].add_ref(c);
        }
        Ok(v)
    }

    /// Matrix of multiplication by `x` from degree `d` to `d + |x|`.
    pub fn mult_matrix(&self, x: &SeqElem<R>, d: i64) -> Result<Matrix<R>> {
        let src = self.monomials(d);
        let tgt = self.free_dim(d + x.degree);
        let mut m = Matrix::zeros(tgt, src.len());
        for (j, e) in src.iter().enumerate() {
            let col = self.coords(&(x.elem.clone() * self.mono_poly(e)), d + x.degree)?;
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Columns spanning the relation submodule in degree `d`.
    pub fn relation_matrix(&self, d: i64) -> Result<Matrix<R>> {
        let n = self.free_dim(d);
        let mut cols: Vec<Vec<R>> = Vec::new();
        for r in &self.relations {
            for e in self.monomials(d - r.degree) {
                cols.push(self.coords(&(r.elem.clone() * self.mono_poly(&e)), d)?);
            }
        }
        Ok(columns(n, &cols))
    }

    /// The module in degree `d`.
    pub fn shape(&self, d: i64) -> Result<ModuleShape<R>> {
        let n = self.free_dim(d);
        subquotient(&Matrix::identity(n), &self.relation_matrix(d)?)
    }

    pub fn element_string(&self, v: &[R], d: i64) -> String {
        let mut p = MPoly::zero();
        for (e, c) in self.monomials(d).iter().zip(v) {
            p = p + self.mono_poly(e) * MPoly::constant(c.clone());
        }
        p.to_string()
    }
}

pub(crate) fn columns<R: EuclideanRing>(rows: usize, cols: &[Vec<R>]) -> Matrix<R> {
    let mut m = Matrix::zeros(rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                m.set(i, j, x.clone());
            }
        }
    }
    m
}

fn hcat<R: EuclideanRing>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    let rows = a.rows.max(b.rows);
    let mut m = Matrix::zeros(rows, a.cols + b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows {
        for j in 0..b.cols {
            m.set(i, a.cols + j, b.get(i, j).clone());
        }
    }
    m
}

/// Generators of `{v : a v ∈ span(b)}`, for `a: R^n -> R^m` and `b` with `m` rows.
pub(crate) fn preimage<R: EuclideanRing>(n: usize, a: &Matrix<R>, b: &Matrix<R>) -> Vec<Vec<R>> {
    if a.rows == 0 {
        return (0..n).map(|i| unit_vec(n, i)).collect();
    }
    let neg_b =
        columns(b.rows, &(0..b.cols).map(|j| b.column(j).into_iter().map(|x| -x).collect()).collect::<Vec<_>>());
    let big = hcat(a, &neg_b);
    smith(&big).kernel().into_iter().map(|k| k[..n].to_vec()).filter(|v| v.iter().any(|x| !x.is_zero())).collect()
}

fn unit_vec<R: Ring>(n: usize, i: usize) -> Vec<R> {
    (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect()
}

/// `span(z) / span(b)` for `span(b) ⊆ span(z)`.
pub(crate) fn subquotient<R: EuclideanRing>(z: &Matrix<R>, b: &Matrix<R>) -> Result<ModuleShape<R>> {
    let g = z.cols;
    if g == 0 {
        return Ok(ModuleShape { free_rank: 0, torsion: vec![] });
    }
    // Relations among the generators z: {y : z y ∈ span(b)}.
    let rel = preimage(g, z, b);
    let relm = columns(g, &rel);
    let s = smith(&relm);
    let units = s.diag[..s.rank].iter().filter(|d| d.is_unit()).count();
    let torsion = s.torsion();
    let free_rank = g - s.rank;
    debug_assert_eq!(s.rank, units + torsion.len());
    Ok(ModuleShape { free_rank, torsion })
}
