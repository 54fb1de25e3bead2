//! Forms of the multiplicative group: the twisted K-theory coefficient
//! ring, `C_2` Galois cohomology, the ramified cusp, and the failure of
//! Frobenius lifts after adjoining roots of unity.

mod galois;

pub use galois::{
    conjugate, conjugation_is_ring_map, coords, discriminant_classification, from_coords, omega_module,
    sqrt_minus_three, C2Cohomology, FormClass, GaloisModule, Z13Omega, Z13,
};

use num_traits::{One, Zero};

use crate::elliptic::{CurveAutomorphism, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Ring, Zmod};
use crate::fgl::{conic_fgl, find_iso, multiplicative, IsoMode, IsoResult};

/// `KU^tau_{2k}`: the `(-1)^k` eigenspace of `T = Z[1/3][w]` times `beta^k`.
#[derive(Clone, Debug)]
pub struct TwistedKHomotopy {
    pub module: GaloisModule<Z13>,
}

impl Default for TwistedKHomotopy {
    fn default() -> Self {
        TwistedKHomotopy { module: omega_module() }
    }
}

impl TwistedKHomotopy {
    /// Generator of the coefficient of `beta^k` in degree `2k`.
    pub fn generator(&self, k: i64) -> Result<Z13Omega> {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let basis = self.module.eigenspace(sign);
        match basis.as_slice() {
            [v] => Ok(from_coords(v)),
            _ => Err(Error::Mismatch(format!("degree {} piece has rank {}", 2 * k, basis.len()))),
        }
    }

    /// Whether `x` lies in the degree-`2k` eigenspace.
    pub fn in_degree(&self, x: &Z13Omega, k: i64) -> bool {
        let sign = if k % 2 == 0 { Z13Omega::one() } else { -Z13Omega::one() };
        conjugate(x) == sign * x.clone()
    }

    /// `(sqrt(-3))^k` generates the degree-`2k` piece over `Z[1/3]`.
    pub fn power_generates(&self, k: i64) -> Result<bool> {
        let s = sqrt_minus_three();
        let p = if k >= 0 { s.pow(k as u32) } else { s.inverse().expect("sqrt(-3) is a unit").pow((-k) as u32) };
        let g = self.generator(k)?;
        Ok(self.in_degree(&p, k) && g.try_div(&p).and_then(|r| r.as_base()).is_some_and(|r| r.is_unit()))
    }

    /// Products of generators in degrees `2k`, `2m` land in degree `2(k+m)`.
    pub fn multiplicative(&self, bound: i64) -> Result<bool> {
        for k in -bound..=bound {
            for m in -bound..=bound {
                let prod = self.generator(k)?.mul_ref(&self.generator(m)?);
                if !self.in_degree(&prod, k + m) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Over `Z[1/3]`, `(x + y + 3xy)/(1 - 3xy)` against `x + y + u xy` for each
/// witness unit `u`, and over `Z[1/3][w]` against `u = sqrt(-3)`.
#[derive(Clone, Debug)]
pub struct ConicReport {
    pub units: Vec<String>,
    pub obstruction_degree: Option<usize>,
    pub witness: String,
    pub iso_over_omega: bool,
    pub prec: usize,
}

pub fn conic_vs_multiplicative(prec: usize) -> Result<ConicReport> {
    let (c, _) = conic_fgl(Z13::from_int(3), Z13::from_int(3), prec);
    let three = Z13::from_int(3);
    let mut units = Vec::new();
    for k in -3i32..=3 {
        let p = if k >= 0 { three.pow(k as u32) } else { three.inverse().expect("3 is a unit").pow((-k) as u32) };
        units.push(p.clone());
        units.push(-p);
    }
    let mut worst = None;
    let mut notes = Vec::new();
    for u in &units {
        match find_iso(&c, &multiplicative(u.clone(), prec), &IsoMode::Strict, prec)? {
            IsoResult::Found(_) => return Err(Error::Mismatch(format!("conic is isomorphic to x + y + {u} xy"))),
            IsoResult::Obstruction { degree, witness } => {
                worst = worst.max(Some(degree));
                notes.push(witness);
            }
        }
    }
    let (co, _) = conic_fgl(Z13Omega::from_int(3), Z13Omega::from_int(3), prec);
    let m = multiplicative(sqrt_minus_three(), prec);
    let iso_over_omega = find_iso(&co, &m, &IsoMode::Strict, prec)?.found().is_some();
    Ok(ConicReport {
        units: units.iter().map(ToString::to_string).collect(),
        obstruction_degree: worst,
        witness: notes.first().cloned().unwrap_or_default(),
        iso_over_omega,
        prec,
    })
}

type Cusp = MPoly<Z13Omega>;

/// A Weierstrass isomorphism between two curves over `Z[1/3][w, beta^{+-1}]`.
#[derive(Clone, Debug)]
pub struct CuspIdentification {
    pub source: WeierstrassCurve<Cusp>,
    pub target: WeierstrassCurve<Cusp>,
    pub iso: CurveAutomorphism<Cusp>,
}

/// The family curve at `A = lambda sqrt(-3) beta`, `B = sign (1/27) A^3`.
pub fn cusp_curve(lambda: &Z13Omega, sign: i64) -> WeierstrassCurve<Cusp> {
    let beta = Cusp::unit_var("beta", 2);
    let a = Cusp::constant(lambda.mul_ref(&sqrt_minus_three())) * beta;
    let c = Z13Omega::from_int(sign).try_div(&Z13Omega::from_int(27)).expect("27 is a unit");
    let b = Cusp::constant(c) * a.pow(3);
    WeierstrassCurve::family(a, b)
}

/// Solves `target = source.transform(u, r, s, t)` with `u = eps A / 3`,
/// `eps` a sixth root of unity; `r, s, t` are forced by `a1, a2, a3`.
pub fn cusp_restriction_check(lambda: &Z13Omega, sign: i64) -> Result<CuspIdentification> {
    let source = cusp_curve(lambda, sign);
    let one = Cusp::one();
    let zero = Cusp::zero();
    let target = WeierstrassCurve::family(Cusp::from_int(3), one.clone());
    let w = Z13Omega::generator();
    let roots = [Z13Omega::one(), w.clone(), w.mul_ref(&w)];
    let a1 = source.a1.clone();
    let a3 = source.a3.clone();
    let three = Cusp::from_int(3);
    let two = Cusp::from_int(2);
    let mut residuals = Vec::new();
    for sgn in [1i64, -1] {
        for z in &roots {
            let eps = Cusp::constant(z.mul_ref(&Z13Omega::from_int(sgn)));
            let u = (eps * a1.clone()).try_div(&three).expect("3 is a unit");
            let Some(s) = (u.clone() * three.clone() - a1.clone()).try_div(&two) else {
                residuals.push(format!("u = {u}: s not integral"));
                continue;
            };
            let r = (s.mul_ref(&a1) + s.mul_ref(&s)).try_div(&three).expect("3 is a unit");
            let Some(t) = (u.pow(3) - a3.clone() - r.mul_ref(&a1)).try_div(&two) else {
                residuals.push(format!("u = {u}: t not integral"));
                continue;
            };
            let iso = CurveAutomorphism { u: u.clone(), r, s, t };
            let image = source.transform(&iso)?;
            if image == target {
                return Ok(CuspIdentification { source, target, iso });
            }
            residuals.push(format!("u = {u}: a4 = {}, a6 = {}", image.a4, image.a6));
        }
    }
    let disc = source.discriminant();
    if disc != zero {
        residuals.push(format!("source discriminant {disc} is nonzero"));
    }
    Err(Error::Mismatch(residuals.join("; ")))
}

/// `Z[x]/(Phi_p(x))` has no Frobenius lift: every endomorphism sends `x` to
/// some `x^j`, and `x^j = x^p` fails mod `p`.
#[derive(Clone, Debug)]
pub struct FrobeniusReport {
    pub p: u64,
    /// `(j, reduction mod p of x^j - x^p)` for each candidate image `x^j`.
    pub candidates: Vec<(u64, Vec<u64>)>,
    pub witness: String,
    pub power_map_kernel: Vec<u64>,
    pub base_identity_is_lift: bool,
}

impl FrobeniusReport {
    pub fn obstructed(&self) -> bool {
        self.candidates.iter().all(|(_, r)| r.iter().any(|&c| c != 0))
            && self.power_map_kernel.iter().any(|&c| c != 0)
            && self.base_identity_is_lift
    }
}

/// Reduces `x^k` modulo `Phi_p` in `F_p[x]`, as coefficients of `1..x^{p-2}`.
fn power_mod_cyclotomic<const P: u64>(k: u64) -> Vec<Zmod<P>> {
    let n = (P - 1) as usize;
    let mut v = vec![Zmod::<P>::zero(); n];
    let e = (k % P) as usize;
    if e < n {
        v[e] = Zmod::one();
    } else {
        // x^{p-1} = -(1 + x + ... + x^{p-2})
        for c in v.iter_mut() {
            *c = -Zmod::<P>::one();
        }
    }
    v
}

fn frobenius_at<const P: u64>() -> FrobeniusReport {
    let xp = power_mod_cyclotomic::<P>(P);
    let mut candidates = Vec::new();
    for j in 1..P {
        let xj = power_mod_cyclotomic::<P>(j);
        let diff: Vec<u64> = xj.iter().zip(&xp).map(|(a, b)| (*a - *b).value()).collect();
        candidates.push((j, diff));
    }
    // (x - 1) is nonzero but (x - 1)^p = x^p - 1 = 0 mod p.
    let kernel: Vec<u64> = {
        let mut v = vec![0u64; (P - 1) as usize];
        v[0] = P - 1;
        if P > 2 {
            v[1] = 1;
        }
        v
    };
    let base_identity_is_lift = (0..P).all(|a| Zmod::<P>::new(a as i64).pow(P as u32) == Zmod::<P>::new(a as i64));
    FrobeniusReport {
        p: P,
        candidates,
        witness: "a = x: phi(x) = x^j differs from x^p = 1 mod p for every j".into(),
        power_map_kernel: kernel,
        base_identity_is_lift,
    }
}

pub fn frobenius_lift_obstruction(p: u64) -> Result<FrobeniusReport> {
    match p {
        3 => Ok(frobenius_at::<3>()),
        5 => Ok(frobenius_at::<5>()),
        7 => Ok(frobenius_at::<7>()),
        11 => Ok(frobenius_at::<11>()),
        _ => Err(Error::InvalidArgument(format!("p = {p} is not one of 3, 5, 7, 11"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twisted_k_degree_two() {
        let k = TwistedKHomotopy::default();
        let g = k.generator(1).unwrap();
        assert!(g.try_div(&sqrt_minus_three()).unwrap().as_base().unwrap().is_unit());
        assert_eq!(sqrt_minus_three().pow(2), Z13Omega::from_int(-3));
        for d in -8..=8 {
            assert!(k.power_generates(d).unwrap());
        }
        assert!(k.multiplicative(4).unwrap());
    }

    #[test]
    fn conic_form_needs_omega() {
        let r = conic_vs_multiplicative(12).unwrap();
        assert_eq!(r.obstruction_degree, Some(4));
        assert!(r.iso_over_omega);
    }

    #[test]
    fn frobenius_obstructed() {
        for p in [3, 5] {
            let r = frobenius_lift_obstruction(p).unwrap();
            assert!(r.obstructed());
            assert_eq!(r.candidates.len() as u64, p - 1);
        }
    }

    #[test]
    fn cusp_sign() {
        let one = Z13Omega::one();
        let plus = cusp_restriction_check(&one, 1).unwrap();
        assert_eq!(plus.source.transform(&plus.iso).unwrap(), plus.target);
        assert!(matches!(cusp_restriction_check(&one, -1), Err(Error::Mismatch(_))));
        let w = Z13Omega::generator();
        assert!(cusp_restriction_check(&w, 1).is_ok());
        assert!(cusp_restriction_check(&-one, 1).is_ok());
    }
}
