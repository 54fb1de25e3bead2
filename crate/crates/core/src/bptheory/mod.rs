//! p-typical structure constants, regular sequences, Koszul homology and
//! the dimension count behind the degeneration of the Künneth spectral
//! sequence for generalized `BP<n>`.

mod graded;
mod koszul;

pub(crate) use graded::{columns, preimage, subquotient};
pub use graded::{GradedModulePresentation, ModuleShape, SeqElem};
pub use koszul::{koszul_tor, regular_sequence_check, RegularStep, RegularityReport, TorTable};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{LocalInt, MPoly, QLift, Ring, Zmod};

type QPoly = MPoly<BigRational>;

/// Topological degree `2(p^i - 1)` of `v_i` and `t_i`.
pub fn v_degree(p: u64, i: u32) -> i64 {
    2 * (p.pow(i) as i64 - 1)
}

/// `BP_*` data through `v_n`: Hazewinkel generators and log coefficients
/// `l_i` as polynomials in the `v`'s over Q.
#[derive(Clone, Debug)]
pub struct BPStarData {
    pub p: u64,
    pub n: u32,
    pub v_degrees: Vec<i64>,
    /// `l_0 = 1, l_1, ..., l_n`.
    pub log_coeffs: Vec<QPoly>,
}

fn v(p: u64, i: u32) -> QPoly {
    MPoly::var(&format!("v{i}"), v_degree(p, i))
}

fn t(p: u64, i: u32) -> QPoly {
    MPoly::var(&format!("t{i}"), v_degree(p, i))
}

fn qint(n: u64) -> QPoly {
    MPoly::constant(BigRational::from_integer(n.into()))
}

impl BPStarData {
    /// `p l_k = sum_{0 <= i < k} l_i v_{k-i}^{p^i}`.
    pub fn new(p: u64, n: u32) -> Self {
        let mut ell = vec![QPoly::one()];
        for k in 1..=n {
            let mut s = QPoly::zero();
            for i in 0..k {
                s = s + ell[i as usize].clone() * v(p, k - i).pow(p.pow(i) as u32);
            }
            ell.push(s * MPoly::constant(BigRational::new(1.into(), p.into())));
        }
        BPStarData { p, n, v_degrees: (1..=n).map(|i| v_degree(p, i)).collect(), log_coeffs: ell }
    }
}

/// `eta_R(v_1), ..., eta_R(v_k)` in `Z_(p)[v_i, t_i]`.
#[derive(Clone, Debug)]
pub struct RightUnitTable<const P: u64> {
    pub k: u32,
    pub entries: Vec<MPoly<LocalInt<P>>>,
    /// `eta_R(l_n) = sum_{i+j=n} l_i t_j^{p^i}` over Q.
    pub eta_log: Vec<QPoly>,
}

/// `eta_R(v_k)` from `eta_R(l_n) = sum l_i t_j^{p^i}` and the Hazewinkel
/// recursion, for `k` with `2(p^k - 1) <= max_degree`.
pub fn right_unit<const P: u64>(k: u32, max_degree: i64) -> Result<RightUnitTable<P>> {
    let p = P;
    if v_degree(p, k) > max_degree {
        return Err(Error::Truncation(format!("v_{k} has degree {} above the bound {max_degree}", v_degree(p, k))));
    }
    let bp = BPStarData::new(p, k);
    let ell = &bp.log_coeffs;
    let tj = |j: u32| if j == 0 { QPoly::one() } else { t(p, j) };
    let eta_log: Vec<QPoly> = (0..=k)
        .map(|n| (0..=n).fold(QPoly::zero(), |acc, i| acc + ell[i as usize].clone() * tj(n - i).pow(p.pow(i) as u32)))
        .collect();
    let mut eta_v: Vec<QPoly> = Vec::new();
    for n in 1..=k {
        let mut e = qint(p) * eta_log[n as usize].clone();
        for i in 1..n {
            e = e - eta_log[i as usize].clone() * eta_v[(n - i - 1) as usize].pow(p.pow(i) as u32);
        }
        eta_v.push(e);
    }
    let entries = eta_v
        .iter()
        .enumerate()
        .map(|(i, e)| {
            MPoly::<LocalInt<P>>::lower(e)
                .ok_or_else(|| Error::IntegralityFailure(format!("eta_R(v_{}) is not {P}-integral", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RightUnitTable { k, entries, eta_log })
}

impl<const P: u64> RightUnitTable<P> {
    pub fn eta(&self, i: u32) -> &MPoly<LocalInt<P>> {
        &self.entries[i as usize - 1]
    }

    /// `eta_R(v_i) = v_i` modulo `(p, v_1, ..., v_{i-1})`.
    pub fn invariant_mod_previous(&self, i: u32) -> Result<bool> {
        let zeros: Vec<(String, MPoly<LocalInt<P>>)> = (1..i).map(|j| (format!("v{j}"), MPoly::zero())).collect();
        let subs: Vec<(&str, MPoly<LocalInt<P>>)> = zeros.iter().map(|(n, z)| (n.as_str(), z.clone())).collect();
        let d = self.eta(i).substitute(&subs)? - MPoly::var(&format!("v{i}"), v_degree(P, i));
        let p = LocalInt::<P>::from_int(P as i64);
        let divisible = d.terms().all(|(_, c)| c.try_div(&p).is_some());
        Ok(divisible)
    }

    /// Applies `eta_R` to a polynomial in the `v`'s.
    pub fn apply(&self, f: &MPoly<LocalInt<P>>) -> Result<MPoly<LocalInt<P>>> {
        let names: Vec<String> = (1..=self.k).map(|i| format!("v{i}")).collect();
        let subs: Vec<(&str, MPoly<LocalInt<P>>)> =
            names.iter().zip(&self.entries).map(|(n, e)| (n.as_str(), e.clone())).collect();
        f.substitute(&subs)
    }

    /// Checks that substituting `eta_R(v)` into `l_n(v)` reproduces
    /// `sum l_i t_j^{p^i}` over Q.
    pub fn reproduces_log_formula(&self) -> Result<bool> {
        let bp = BPStarData::new(P, self.k);
        let names: Vec<String> = (1..=self.k).map(|i| format!("v{i}")).collect();
        let lifted: Vec<QPoly> = self.entries.iter().map(QLift::lift).collect();
        let subs: Vec<(&str, QPoly)> = names.iter().zip(&lifted).map(|(n, e)| (n.as_str(), e.clone())).collect();
        for n in 0..=self.k as usize {
            if bp.log_coeffs[n].substitute(&subs)? != self.eta_log[n] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Dimensions of `F_p[t_i] ⊗ Λ[x_k : k in xs]`, `|t_i| = 2p^i - 2`,
/// `|x_k| = 2p^k - 1`, through degree `n`.
pub fn tor_side_dims(p: u64, xs: impl Iterator<Item = u32>, n: usize) -> Vec<usize> {
    let mut dims = vec![0usize; n + 1];
    dims[0] = 1;
    let mut i = 1;
    while v_degree(p, i) as usize <= n {
        let d = v_degree(p, i) as usize;
        for k in d..=n {
            dims[k] += dims[k - d];
        }
        i += 1;
    }
    for k in xs {
        let d = (2 * p.pow(k) - 1) as usize;
        if d > n {
            continue;
        }
        for j in (d..=n).rev() {
            dims[j] += dims[j - d];
        }
    }
    dims
}

fn x_indices(p: u64, from: u32, n: usize) -> impl Iterator<Item = u32> {
    (from..).take_while(move |&k| (2 * p.pow(k) - 1) as usize <= n)
}

/// The two dimension comparisons of the degeneration argument.
#[derive(Clone, Debug)]
pub struct DegenerationReport {
    pub n: u32,
    pub p: u64,
    pub max_degree: usize,
    /// `F_p[t_i] ⊗ Λ[x_k : k > n]`.
    pub tor_side: Vec<usize>,
    /// `B_*` dimensions; at odd `p` the form `P(xi_1, ...) ⊗ E(tau_{n+1}, ...)`.
    pub bstar_side: Vec<usize>,
    /// `bstar_dims` as printed, with squared `xi` at odd `p`.
    pub printed_bstar: Vec<usize>,
    /// `F_p[t_i] ⊗ Λ[x_k : k >= 0]`, including the class from `p` in degree 1.
    pub full_tor: Vec<usize>,
    pub dual_steenrod: Vec<usize>,
}

impl DegenerationReport {
    pub fn holds(&self) -> bool {
        self.tor_side == self.bstar_side && self.full_tor == self.dual_steenrod
    }

    /// First degree where either comparison differs.
    pub fn first_mismatch(&self) -> Option<usize> {
        (0..=self.max_degree)
            .find(|&d| self.tor_side[d] != self.bstar_side[d] || self.full_tor[d] != self.dual_steenrod[d])
    }
}

pub fn tor_degeneration_identity(n: u32, p: u64, max_degree: usize) -> Result<DegenerationReport> {
    let tor_side = tor_side_dims(p, x_indices(p, n + 1, max_degree), max_degree);
    let full_tor = tor_side_dims(p, x_indices(p, 0, max_degree), max_degree);
    let printed_bstar = crate::steenrod::bstar_dims(n, p, max_degree)?;
    let bstar_side = if p == 2 {
        printed_bstar.clone()
    } else {
        crate::steenrod::OddPrimeDims::new(p, max_degree)?.truncated_homology(n)
    };
    let dual_steenrod = crate::steenrod::dual_steenrod_dims(p, max_degree)?;
    Ok(DegenerationReport { n, p, max_degree, tor_side, bstar_side, printed_bstar, full_tor, dual_steenrod })
}

/// `Z_(p)[v_1..v_n, t_i]` with the `t_i` of degree at most `max_degree`.
pub fn bpn_shadow_module<const P: u64>(n: u32, max_degree: i64) -> Result<GradedModulePresentation<LocalInt<P>>> {
    let mut gens: Vec<(String, i64)> = (1..=n).map(|i| (format!("v{i}"), v_degree(P, i))).collect();
    let mut i = 1;
    while v_degree(P, i) <= max_degree {
        gens.push((format!("t{i}"), v_degree(P, i)));
        i += 1;
    }
    let refs: Vec<(&str, i64)> = gens.iter().map(|(g, d)| (g.as_str(), *d)).collect();
    GradedModulePresentation::free(&refs)
}

/// `(p, eta_R(v_1), ..., eta_R(v_n))`.
pub fn bpn_sequence<const P: u64>(n: u32, max_degree: i64) -> Result<Vec<SeqElem<LocalInt<P>>>> {
    let table = right_unit::<P>(n, max_degree.max(v_degree(P, n)))?;
    let mut seq = vec![SeqElem::new("p", MPoly::from_int(P as i64), 0)?];
    for i in 1..=n {
        seq.push(SeqElem::new(&format!("eta_R(v{i})"), table.eta(i).clone(), v_degree(P, i))?);
    }
    Ok(seq)
}

/// Total-degree dimensions of `Tor` of `F_p[t_i]` against the classes
/// `p, v_1, v_2, ...` from index `from` on, all acting by zero, computed
/// with the Koszul complex. Index 0 stands for `p`, in degree 0.
pub fn zero_action_tor_dims<const P: u64>(from: u32, max_degree: i64) -> Result<Vec<usize>> {
    let mut gens = Vec::new();
    let mut i = 1;
    while v_degree(P, i) <= max_degree {
        gens.push((format!("t{i}"), v_degree(P, i)));
        i += 1;
    }
    let refs: Vec<(&str, i64)> = gens.iter().map(|(g, d)| (g.as_str(), *d)).collect();
    let module = GradedModulePresentation::<Zmod<P>>::free(&refs)?;
    let seq = (from..)
        .take_while(|&k| v_degree(P, k) < max_degree)
        .map(|k| SeqElem::new(&format!("x{k}"), MPoly::zero(), v_degree(P, k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(koszul_tor(&seq, &module, max_degree)?.total_dims())
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z2 = LocalInt<2>;

    #[test]
    fn eta_v1_at_two() {
        let t = right_unit::<2>(1, 4).unwrap();
        let expect = MPoly::<Z2>::var("v1", 2) + MPoly::from_int(2) * MPoly::var("t1", 2);
        assert_eq!(t.entries[0], expect);
        assert!(t.invariant_mod_previous(1).unwrap());
    }

    #[test]
    fn eta_v2_invariant() {
        let t = right_unit::<2>(2, 6).unwrap();
        assert!(t.invariant_mod_previous(2).unwrap());
        assert!(t.reproduces_log_formula().unwrap());
        assert!(matches!(right_unit::<2>(2, 5), Err(Error::Truncation(_))));
    }

    #[test]
    fn degeneration_identity() {
        for n in 0..4 {
            let r = tor_degeneration_identity(n, 2, 40).unwrap();
            assert!(r.holds(), "n = {n}: {:?}", r.first_mismatch());
        }
        let r = tor_degeneration_identity(1, 3, 60).unwrap();
        assert!(r.holds());
        assert_ne!(r.printed_bstar, r.bstar_side);
    }

    #[test]
    fn bstar_even_below_threshold() {
        for n in 0..4u32 {
            let top = (1usize << (n + 2)) - 1;
            let d = crate::steenrod::bstar_dims(n, 2, top).unwrap();
            assert!((1..top).step_by(2).all(|k| d[k] == 0));
            assert!(d[top] > 0);
        }
    }

    #[test]
    fn koszul_matches_exterior_pattern() {
        let k = zero_action_tor_dims::<2>(0, 10).unwrap();
        assert_eq!(k, tor_side_dims(2, x_indices(2, 0, 10), 10));
        let k = zero_action_tor_dims::<2>(2, 12).unwrap();
        assert_eq!(k, tor_side_dims(2, x_indices(2, 2, 12), 12));
    }

    #[test]
    fn tor_side_counts() {
        // F_2[t1] ⊗ Λ[x0, x1] in degrees 0..4
        let d = tor_side_dims(2, [0u32, 1].into_iter(), 4);
        assert_eq!(d, vec![1, 1, 1, 2, 2]);
    }
}
