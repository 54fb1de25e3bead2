//! Canonical subgroups of ordinary formal groups at p = 2, isogeny
//! quotients and recognition of the quotient inside a family.

use num_bigint::BigInt;

use super::iso::{find_iso, IsoMode, IsoResult};
use super::{FormalGroupLaw, XY};
use crate::error::{Error, Result};
use crate::exactalg::{series_compose, weierstrass_divide, weierstrass_prepare, PowerSeries, Ring, TruncSeries, Zmod};

/// The distinguished factor `x (x + alpha)` of `[2](x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelPolynomial<R: Ring> {
    pub alpha: R,
    pub prec: usize,
}

impl<R: Ring> KernelPolynomial<R> {
    /// Coefficients of `x^2 + alpha x` from the constant term up.
    pub fn coeffs(&self) -> Vec<R> {
        vec![R::zero(), self.alpha.clone(), R::one()]
    }

    /// The nonzero kernel point `-alpha`.
    pub fn point(&self) -> R {
        -self.alpha.clone()
    }
}

fn nilpotency_index<R: Ring>(t: &R, bound: usize) -> Option<usize> {
    let mut p = R::one();
    for e in 0..=bound {
        if p.is_zero() {
            return Some(e.max(1));
        }
        p = p.mul_ref(t);
    }
    None
}

fn eval_at<R: Ring>(coeffs: &[R], t: &R) -> R {
    let mut acc = R::zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul_ref(t) + c.clone();
    }
    acc
}

/// Weierstrass-prepares `[2](x)` and returns its degree-2 distinguished
/// factor.
pub fn canonical_subgroup<R: Ring>(f: &FormalGroupLaw<R>) -> Result<KernelPolynomial<R>> {
    let n = f.prec();
    let two = f.m_series(2)?.series;
    if two.is_zero() {
        return Err(Error::NotOrdinary(None));
    }
    let prep = weierstrass_prepare(&two).map_err(|_| Error::NotOrdinary(None))?;
    let d = prep.degree();
    if d != 2 {
        let h = d.is_power_of_two().then(|| d.trailing_zeros() as usize);
        return Err(Error::NotOrdinary(h));
    }
    if !prep.distinguished[0].is_zero() {
        return Err(Error::InvalidKernel("distinguished factor has a constant term".into()));
    }
    let k = KernelPolynomial { alpha: prep.distinguished[1].clone(), prec: n };
    let t = k.point();
    if nilpotency_index(&t, n).is_some() && !eval_at(&two.univariate_coeffs(), &t).is_zero() {
        return Err(Error::InvalidKernel("[2] does not vanish at -alpha".into()));
    }
    Ok(k)
}

/// Expansion `g = sum_i r_i(x) f(x)^i` with `deg r_i < 2`, where `g` and
/// `f` are known below `len` and `f = x^2 + t x + ...` with `t^e = 0`. An
/// unknown term of `g` in degree `len` moves to degree `p` with a factor
/// `t^{len - p}`, so only positions `p <= len - e` of each division are kept;
/// each digit lists only its determined coefficients.
fn f_adic_digits<R: Ring>(g: &[R], f: &[R], e: usize) -> Result<Vec<Vec<R>>> {
    let mut out = Vec::new();
    let mut g = g.to_vec();
    while g.len() >= e {
        let l = g.len();
        if l <= 2 {
            g.truncate(l + 1 - e);
            out.push(g);
            break;
        }
        let (mut q, mut r) = weierstrass_divide(&g, f, l)?;
        r.truncate(l + 1 - e);
        if r.is_empty() {
            break;
        }
        out.push(r);
        q.truncate((l + 1).saturating_sub(e + 2));
        g = q;
    }
    Ok(out)
}

/// Constant terms of the digits; a determined linear term must vanish.
fn invariant_digits<R: Ring>(g: &[R], f: &[R], e: usize) -> Result<Vec<R>> {
    let digits = f_adic_digits(g, f, e)?;
    if digits.iter().any(|d| d.len() > 1 && !d[1].is_zero()) {
        return Err(Error::InvalidKernel("series is not invariant under the kernel".into()));
    }
    Ok(digits.into_iter().map(|d| d[0].clone()).collect())
}

/// The isogeny `f(x) = x (x +_F t)` with `t = -alpha`, known below the
/// returned order.
pub fn isogeny<R: Ring>(f: &FormalGroupLaw<R>, k: &KernelPolynomial<R>) -> Result<TruncSeries<R>> {
    let n = f.prec();
    let t = k.point();
    let e = nilpotency_index(&t, n)
        .ok_or_else(|| Error::QuotientPrecision("kernel point is not nilpotent at this precision".into()))?;
    let nf = (n + 2).saturating_sub(e).min(n);
    let mut tp = vec![R::one()];
    for j in 1..e {
        tp.push(tp[j - 1].mul_ref(&t));
    }
    let coeffs: Vec<R> = (0..nf)
        .map(|i| {
            if i == 0 {
                return R::zero();
            }
            (0..e).fold(R::zero(), |acc, j| acc + f.coeff(i as u32 - 1, j as u32).mul_ref(&tp[j]))
        })
        .collect();
    Ok(TruncSeries::univariate("x", &coeffs, nf))
}

/// Quotient law `F'` with `f(F(x,y)) = F'(f(x), f(y))`, found by expanding
/// `f(F(x,y))` in powers of `f(x)` and `f(y)`.
pub fn quotient_by_subgroup<R: Ring>(f: &FormalGroupLaw<R>, k: &KernelPolynomial<R>) -> Result<FormalGroupLaw<R>> {
    if k.alpha.is_unit() {
        return Err(Error::InvalidKernel("alpha is a unit".into()));
    }
    let two = f.m_series(2)?.series.univariate_coeffs();
    let (_, rem) = weierstrass_divide(&two, &k.coeffs(), two.len())?;
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::InvalidKernel("x(x + alpha) does not divide [2](x)".into()));
    }
    let iso = isogeny(f, k)?;
    let e = nilpotency_index(&k.point(), f.prec()).unwrap_or(1);
    let fc = iso.univariate_coeffs();
    let h = series_compose(&iso, &[("x", f.series().clone())])?;
    let nh = h.order().min(fc.len());
    // a_i(y): coefficient of f(x)^i, known for j below the first gap.
    let mut a: Vec<Vec<R>> = Vec::new();
    let mut open: Vec<bool> = Vec::new();
    for j in 0..nh {
        let slice: Vec<R> = (0..nh - j).map(|i| h.coeff(&[i as u32, j as u32])).collect();
        let digits = invariant_digits(&slice, &fc, e)?;
        for (i, c) in digits.iter().enumerate() {
            if a.len() <= i {
                a.push(Vec::new());
                open.push(j == 0);
            }
            if open[i] {
                a[i].push(c.clone());
            }
        }
        for flag in open.iter_mut().skip(digits.len()) {
            *flag = false;
        }
    }
    let coeffs: Vec<Vec<R>> = a.iter().map(|ai| invariant_digits(ai, &fc, e)).collect::<Result<_>>()?;
    let known = |i: usize, j: usize| coeffs.get(i).is_some_and(|c| j < c.len());
    let m = (0..).find(|&s| !(0..=s).all(|i| known(i, s - i))).expect("finitely many digits");
    if m < 3 {
        return Err(Error::QuotientPrecision(format!("only degree below {m} is determined")));
    }
    let mut terms = Vec::new();
    for (i, ci) in coeffs.iter().enumerate() {
        for (j, c) in ci.iter().enumerate() {
            if i + j < m && !c.is_zero() {
                terms.push((vec![i as u32, j as u32], c.clone()));
            }
        }
    }
    let q = FormalGroupLaw::new(TruncSeries::from_terms(&XY, m, terms)?)?;
    let fx = iso.truncate(m).embed(&XY)?;
    let fy = iso.truncate(m).rename(&["y"])?.embed(&XY)?;
    if q.add(&fx, &fy)? != h.truncate(m) {
        return Err(Error::QuotientPrecision("isogeny identity fails".into()));
    }
    Ok(q)
}

/// `(psi2(x) - x^2) / 2`.
pub fn theta_defect<R: Ring>(x: &R, psi2_x: &R) -> Result<R> {
    let d = psi2_x.clone() - x.mul_ref(x);
    d.try_div(&R::from_int(2)).ok_or_else(|| Error::NotAFrobeniusLift(format!("{d} is not divisible by 2")))
}

/// A one-parameter family of formal group laws, available over every ring.
pub trait FglFamily {
    fn member<R: Ring>(&self, b: &R, n: usize) -> Result<FormalGroupLaw<R>>;
}

/// Parameter `b'` and isomorphism `phi` from `F'` to the family member at
/// `b'`, with `phi'(0) = unit` congruent to 1 mod 2.
#[derive(Clone, Debug)]
pub struct Recognition<const M: u64> {
    pub b_prime: PowerSeries<Zmod<M>>,
    pub unit: PowerSeries<Zmod<M>>,
    pub phi: TruncSeries<PowerSeries<Zmod<M>>>,
}

type Z2kSeries<const M: u64> = PowerSeries<Zmod<M>>;

fn to_level<const M: u64, const N: u64>(c: &Z2kSeries<M>, b_prec: usize) -> Z2kSeries<N> {
    let v = (0..b_prec).map(|i| Zmod::<N>::from_bigint(&BigInt::from(c.coeff(i).value()))).collect();
    PowerSeries::new(v, Some(b_prec))
}

fn series_from_ints<const N: u64>(v: &[u64], b_prec: usize) -> Z2kSeries<N> {
    PowerSeries::new(v.iter().map(|&c| Zmod::<N>::from_bigint(&BigInt::from(c))).collect(), Some(b_prec))
}

fn level_iso<const M: u64, const N: u64, Fam: FglFamily>(
    fp: &FormalGroupLaw<Z2kSeries<M>>,
    fam: &Fam,
    b: &[u64],
    unit: &[u64],
    b_prec: usize,
) -> Result<IsoResult<Z2kSeries<N>>> {
    let n = fp.prec();
    let f = fp.base_change(|c| to_level::<M, N>(c, b_prec));
    let g = fam.member(&series_from_ints::<N>(b, b_prec), n)?;
    let mode = IsoMode::LinearUnit(vec![series_from_ints::<N>(unit, b_prec)]);
    find_iso(&f, &g, &mode, n)
}

fn level_ok<const M: u64, Fam: FglFamily>(
    fp: &FormalGroupLaw<Z2kSeries<M>>,
    fam: &Fam,
    b: &[u64],
    unit: &[u64],
    b_prec: usize,
    j: u32,
) -> Result<bool> {
    macro_rules! at {
        ($n:literal) => {
            level_iso::<M, $n, Fam>(fp, fam, b, unit, b_prec)?.found().is_some()
        };
    }
    Ok(match j {
        1 => at!(2),
        2 => at!(4),
        3 => at!(8),
        4 => at!(16),
        5 => at!(32),
        6 => at!(64),
        7 => at!(128),
        8 => at!(256),
        _ => return Err(Error::InvalidArgument(format!("2-adic level {j} is above 8"))),
    })
}

/// Hensel search for `b'` over `Z/M[[b]]`, `M = 2^k`, starting from the
/// Frobenius seed `b' = b^2`, `phi'(0) = 1` mod 2. At level `j` the
/// corrections `2^{j-1} delta` to `b'` and `2^{j-1} eps` to `phi'(0)` are
/// taken minimal in the order where bit `i` is the coefficient of `b^i`,
/// `delta` first.
pub fn recognize_in_family<const M: u64, Fam: FglFamily>(
    fp: &FormalGroupLaw<Z2kSeries<M>>,
    fam: &Fam,
    b_prec: usize,
) -> Result<Recognition<M>> {
    if !M.is_power_of_two() || M < 2 || M > 256 {
        return Err(Error::InvalidArgument(format!("modulus {M} is not 2^k with 1 <= k <= 8")));
    }
    if b_prec > 6 {
        return Err(Error::InvalidArgument(format!("b-precision {b_prec} exceeds the search bound 6")));
    }
    let k = M.trailing_zeros();
    let mut b = vec![0u64; b_prec];
    if b_prec > 2 {
        b[2] = 1;
    }
    let mut unit = vec![0u64; b_prec];
    if b_prec > 0 {
        unit[0] = 1;
    }
    if !level_ok(fp, fam, &b, &unit, b_prec, 1)? {
        return Err(Error::RecognitionFailed("F' is not the Frobenius twist mod 2".into()));
    }
    let bump = |v: &[u64], step: u64, bits: u64| -> Vec<u64> {
        (0..b_prec).map(|i| (v[i] + step * ((bits >> i) & 1)) % M).collect()
    };
    for j in 2..=k {
        let step = 1u64 << (j - 1);
        let mut lifted = None;
        'search: for delta in 0u64..(1 << b_prec) {
            let cb = bump(&b, step, delta);
            for eps in 0u64..(1 << b_prec) {
                let cu = bump(&unit, step, eps);
                if level_ok(fp, fam, &cb, &cu, b_prec, j)? {
                    lifted = Some((cb, cu));
                    break 'search;
                }
            }
        }
        (b, unit) = lifted.ok_or_else(|| Error::RecognitionFailed(format!("no lift to level 2^{j}")))?;
    }
    let b_prime = series_from_ints::<M>(&b, b_prec);
    let unit = series_from_ints::<M>(&unit, b_prec);
    let g = fam.member(&b_prime, fp.prec())?;
    let phi = find_iso(fp, &g, &IsoMode::LinearUnit(vec![unit.clone()]), fp.prec())?
        .found()
        .cloned()
        .ok_or_else(|| Error::RecognitionFailed("final isomorphism not found".into()))?;
    Ok(Recognition { b_prime, unit, phi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgl::{additive, multiplicative, IsoMode};
    use num_traits::{One, Zero};

    type Z8 = Zmod<8>;

    #[test]
    fn multiplicative_kernel_over_z8() {
        let m = multiplicative(Z8::one(), 8);
        let k = canonical_subgroup(&m).unwrap();
        assert_eq!(k.alpha, Z8::new(2));
    }

    #[test]
    fn additive_is_not_ordinary() {
        assert!(matches!(canonical_subgroup(&additive::<Z8>(8)), Err(Error::NotOrdinary(_))));
    }

    #[test]
    fn trivial_kernel_rejected() {
        let m = multiplicative(Z8::one(), 8);
        let k = KernelPolynomial { alpha: Z8::zero(), prec: 8 };
        assert!(matches!(quotient_by_subgroup(&m, &k), Err(Error::InvalidKernel(_))));
    }

    #[test]
    fn multiplicative_mod_mu2_is_multiplicative_type() {
        let m = multiplicative(Z8::one(), 20);
        let k = canonical_subgroup(&m).unwrap();
        let q = quotient_by_subgroup(&m, &k).unwrap();
        let target = multiplicative(-Z8::one(), q.prec());
        let r = find_iso(&q, &target, &IsoMode::Strict, q.prec()).unwrap();
        assert!(r.found().is_some());
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta_defect(&BigInt::from(3), &BigInt::from(3)).unwrap(), BigInt::from(-3));
        assert_eq!(theta_defect(&BigInt::from(5), &BigInt::from(25)).unwrap(), BigInt::from(0));
        assert!(matches!(theta_defect(&BigInt::from(2), &BigInt::from(1)), Err(Error::NotAFrobeniusLift(_))));
    }
}
