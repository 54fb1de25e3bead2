//! Regular sequences and Koszul homology.

use std::collections::BTreeMap;

use super::graded::{columns, preimage, subquotient, GradedModulePresentation, ModuleShape, SeqElem};
use crate::error::Result;
use crate::exactalg::{smith, EuclideanRing, Matrix};

/// Outcome of one step of a regular-sequence check.
#[derive(Clone, Debug)]
pub struct RegularStep {
    pub element: String,
    pub injective: bool,
    /// Degree and a representative of a nonzero class killed by the element.
    pub witness: Option<(i64, String)>,
}

#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub regular: bool,
    pub max_degree: i64,
    pub steps: Vec<RegularStep>,
}

/// Checks that each element acts injectively on the quotient by the
/// previous ones, in source degrees `d` with `d + |x| <= n`.
pub fn regular_sequence_check<R: EuclideanRing>(
    seq: &[SeqElem<R>],
    module: &GradedModulePresentation<R>,
    n: i64,
) -> Result<RegularityReport> {
    let mut m = module.clone();
    let mut steps = Vec::new();
    for x in seq {
        let mut witness = None;
        for d in 0..=(n - x.degree) {
            let src = m.free_dim(d);
            if src == 0 {
                continue;
            }
            let a = m.relation_matrix(d)?;
            let mult = m.mult_matrix(x, d)?;
            let b = m.relation_matrix(d + x.degree)?;
            let killed = preimage(src, &mult, &b);
            let s = smith(&a);
            if let Some(v) = killed.iter().find(|v| s.solve(v).is_none()) {
                witness = Some((d, m.element_string(v, d)));
                break;
            }
        }
        let injective = witness.is_none();
        steps.push(RegularStep { element: x.name.clone(), injective, witness });
        if !injective {
            return Ok(RegularityReport { regular: false, max_degree: n, steps });
        }
        m = m.with_relations([x.clone()]);
    }
    Ok(RegularityReport { regular: true, max_degree: n, steps })
}

/// Koszul homology `H_s` in internal degree `d`, for `0 <= d <= N`.
#[derive(Clone, Debug)]
pub struct TorTable<R: EuclideanRing> {
    pub max_degree: i64,
    pub length: usize,
    pub entries: BTreeMap<(usize, i64), ModuleShape<R>>,
}

impl<R: EuclideanRing> TorTable<R> {
    pub fn dim(&self, s: usize, d: i64) -> usize {
        self.entries.get(&(s, d)).map_or(0, ModuleShape::generators)
    }

    /// Whether `H_s` vanishes for every `s > 0` in range.
    pub fn higher_vanish(&self) -> bool {
        self.entries.iter().all(|((s, _), m)| *s == 0 || m.is_zero())
    }

    /// Generator counts by total degree `s + d`, up to `max_degree`.
    pub fn total_dims(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_degree as usize + 1];
        for ((s, d), m) in &self.entries {
            let t = *s as i64 + d;
            if t <= self.max_degree {
                out[t as usize] += m.generators();
            }
        }
        out
    }
}

fn subsets(r: usize, s: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << r))
        .filter(|m| m.count_ones() as usize == s)
        .map(|m| (0..r).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

struct Block {
    set: Vec<usize>,
    shift: i64,
    offset: usize,
}

fn blocks<R: EuclideanRing>(
    m: &GradedModulePresentation<R>,
    seq: &[SeqElem<R>],
    s: usize,
    d: i64,
) -> (Vec<Block>, usize) {
    let mut out = Vec::new();
    let mut off = 0;
    for set in subsets(seq.len(), s) {
        let shift: i64 = set.iter().map(|&i| seq[i].degree).sum();
        let dim = m.free_dim(d - shift);
        out.push(Block { set, shift, offset: off });
        off += dim;
    }
    (out, off)
}

fn koszul_d<R: EuclideanRing>(
    m: &GradedModulePresentation<R>,
    seq: &[SeqElem<R>],
    s: usize,
    d: i64,
) -> Result<Matrix<R>> {
    let (src, ns) = blocks(m, seq, s, d);
    let (tgt, nt) = blocks(m, seq, s.saturating_sub(1), d);
    let mut out = Matrix::zeros(if s == 0 { 0 } else { nt }, ns);
    if s == 0 {
        return Ok(out);
    }
    for b in &src {
        for (pos, &j) in b.set.iter().enumerate() {
            let rest: Vec<usize> = b.set.iter().copied().filter(|&i| i != j).collect();
            let t = tgt.iter().find(|t| t.set == rest).expect("face present");
            let mm = m.mult_matrix(&seq[j], d - b.shift)?;
            let sign = if pos % 2 == 0 { R::one() } else { -R::one() };
            for r in 0..mm.rows {
                for c in 0..mm.cols {
                    let v = mm.get(r, c);
                    if !v.is_zero() {
                        out.set(t.offset + r, b.offset + c, sign.mul_ref(v));
                    }
                }
            }
        }
    }
    Ok(out)
}

fn relations_block<R: EuclideanRing>(
    m: &GradedModulePresentation<R>,
    seq: &[SeqElem<R>],
    s: usize,
    d: i64,
) -> Result<Matrix<R>> {
    let (bl, n) = blocks(m, seq, s, d);
    let mut cols = Vec::new();
    for b in &bl {
        let r = m.relation_matrix(d - b.shift)?;
        for j in 0..r.cols {
            let mut v = vec![R::zero(); n];
            for i in 0..r.rows {
                v[b.offset + i] = r.get(i, j).clone();
            }
            cols.push(v);
        }
    }
    Ok(columns(n, &cols))
}

/// Homology of the Koszul complex of `seq` on `module`, internal degrees up
/// to `n`.
pub fn koszul_tor<R: EuclideanRing>(
    seq: &[SeqElem<R>],
    module: &GradedModulePresentation<R>,
    n: i64,
) -> Result<TorTable<R>> {
    let r = seq.len();
    let mut entries = BTreeMap::new();
    for d in 0..=n {
        for s in 0..=r {
            let (_, dim) = blocks(module, seq, s, d);
            if dim == 0 {
                continue;
            }
            let out = koszul_d(module, seq, s, d)?;
            let rel_lo = if s == 0 { Matrix::zeros(0, 0) } else { relations_block(module, seq, s - 1, d)? };
            let cycles = preimage(dim, &out, &rel_lo);
            let z = columns(dim, &cycles);
            let mut bcols: Vec<Vec<R>> = Vec::new();
            if s < r {
                let din = koszul_d(module, seq, s + 1, d)?;
                bcols.extend((0..din.cols).map(|j| din.column(j)));
            }
            let rel = relations_block(module, seq, s, d)?;
            bcols.extend((0..rel.cols).map(|j| rel.column(j)));
            let h = subquotient(&z, &columns(dim, &bcols))?;
            entries.insert((s, d), h);
        }
    }
    Ok(TorTable { max_degree: n, length: r, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{LocalInt, MPoly, Ring, Zmod};
    use num_traits::Zero;

    type Z2 = LocalInt<2>;
    type F2 = Zmod<2>;

    #[test]
    fn repeated_element_is_not_regular() {
        let m = GradedModulePresentation::<Z2>::free(&[("v1", 2)]).unwrap();
        let v1 = SeqElem::new("v1", MPoly::var("v1", 2), 2).unwrap();
        let rep = regular_sequence_check(&[v1.clone(), v1], &m, 10).unwrap();
        assert!(!rep.regular);
        assert!(rep.steps[0].injective);
        assert_eq!(rep.steps[1].witness, Some((0, "1".to_string())));
    }

    #[test]
    fn two_kills_mod_two_module() {
        let m = GradedModulePresentation::<F2>::free(&[("t1", 2)]).unwrap();
        let two = SeqElem::new("2", MPoly::from_int(2), 0).unwrap();
        assert!(!regular_sequence_check(&[two], &m, 6).unwrap().regular);
    }

    #[test]
    fn empty_sequence_gives_module() {
        let m = GradedModulePresentation::<F2>::free(&[("a", 1), ("b", 3)]).unwrap();
        let t = koszul_tor(&[], &m, 8).unwrap();
        for d in 0..=8 {
            assert_eq!(t.dim(0, d), m.free_dim(d));
        }
    }

    #[test]
    fn koszul_of_regular_element() {
        let m = GradedModulePresentation::<Z2>::free(&[("a", 1)]).unwrap();
        let a = SeqElem::new("a", MPoly::var("a", 1), 1).unwrap();
        let t = koszul_tor(&[a], &m, 5).unwrap();
        assert!(t.higher_vanish());
        assert_eq!(t.dim(0, 0), 1);
        assert_eq!(t.dim(0, 3), 0);
        let z = SeqElem::new("0", MPoly::<Z2>::zero(), 2).unwrap();
        let t = koszul_tor(&[z], &m, 5).unwrap();
        assert_eq!(t.dim(1, 4), 1);
        assert_eq!(t.dim(1, 1), 0);
    }
}
