use chromalg::elliptic::{Gamma13Chart, WeierstrassCurve};
use chromalg::exactalg::{MPoly, PowerSeries, Ring, Zmod};
use chromalg::fgl::{
    canonical_subgroup, hazewinkel_generators, multiplicative, quotient_by_subgroup, recognize_in_family, theta_defect,
    FormalGroupLaw,
};
use chromalg::{Error, Z2Local, F4, Z};
use num_traits::{One, Zero};

use super::{verdict, Check, Outcome};
use crate::RunConfig;

type P = MPoly<Z>;
type P2 = MPoly<Z2Local>;
type S<const M: u64> = PowerSeries<Zmod<M>>;

const RECOGNITION_B_PREC: usize = 4;

pub static CHECKS: &[Check] = &[
    Check { id: "fgl.family_axioms", paper_ref: "family.formal-group", run: family_axioms },
    Check { id: "fgl.family_grading", paper_ref: "family.formal-group", run: family_grading },
    Check { id: "fgl.hazewinkel_v1", paper_ref: "family.v1", run: hazewinkel_v1 },
    Check { id: "fgl.hazewinkel_v2", paper_ref: "family.v2", run: hazewinkel_v2 },
    Check { id: "fgl.multiplicative_v2", paper_ref: "cusp.height-one", run: multiplicative_v2 },
    Check { id: "fgl.tate_v2", paper_ref: "cusp.height-one", run: tate_v2 },
    Check { id: "fgl.height_supersingular", paper_ref: "family.fibers", run: height_supersingular },
    Check { id: "fgl.height_ordinary", paper_ref: "family.fibers", run: height_ordinary },
    Check { id: "fgl.canonical_quotient", paper_ref: "chart-v.frobenius", run: canonical_quotient },
    Check { id: "fgl.canonical_kernel", paper_ref: "chart-v.canonical-subgroup", run: canonical_kernel },
    Check { id: "fgl.frobenius_recognition", paper_ref: "chart-v.frobenius", run: frobenius_recognition },
];

fn family_law(n: usize) -> chromalg::Result<FormalGroupLaw<P>> {
    WeierstrassCurve::family(P::var("A", 1), P::var("B", 3)).formal_group(n)
}

fn family_axioms(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.series_prec.max(3);
    family_law(n)?.validate()?;
    Ok(Outcome::Pass(format!("unit, commutativity and associativity through total degree {}", n - 1)))
}

fn family_grading(config: &RunConfig) -> chromalg::Result<Outcome> {
    let f = family_law(config.series_prec.max(3))?;
    let a = P::var("A", 1);
    let graded = f.series().terms().all(|(e, c)| c.homogeneous_weight() == Some(e[0] as i64 + e[1] as i64 - 1));
    let xy = f.coeff(1, 1);
    Ok(verdict(graded && xy == -a, format!("coefficient of x^i y^j has weight i + j - 1; xy coefficient {xy}")))
}

fn family_generators(config: &RunConfig) -> chromalg::Result<(P2, P2)> {
    let n = config.series_prec;
    if n <= 4 {
        return Err(Error::Truncation(format!("v_2 at p = 2 needs series precision above 4, have {n}")));
    }
    let f = WeierstrassCurve::family(P2::var("A", 1), P2::var("B", 3)).formal_group(n)?;
    let d = hazewinkel_generators(&f, 2, 2)?;
    Ok((d.v[0].clone(), d.v[1].clone()))
}

/// Drops the coefficients divisible by 2.
fn mod_two(p: &P2) -> P2 {
    let two = Z2Local::from_int(2);
    p.map_coeffs(|c| if c.try_div(&two).is_some() { Z2Local::zero() } else { c.clone() })
}

fn hazewinkel_v1(config: &RunConfig) -> chromalg::Result<Outcome> {
    let (v1, _) = family_generators(config)?;
    let a = P2::var("A", 1);
    let unit = v1.try_div(&a).and_then(|u| u.as_constant()).filter(|u| u.is_unit());
    let ok = mod_two(&(v1.clone() - a)).is_zero() && unit.is_some();
    let unit = unit.map_or("none".into(), |u| u.to_string());
    Ok(verdict(ok, format!("v1 = {v1} = ({unit}) A")))
}

fn hazewinkel_v2(config: &RunConfig) -> chromalg::Result<Outcome> {
    let (_, v2) = family_generators(config)?;
    let b = P2::var("B", 3);
    let rest = mod_two(&(v2.clone() - b)).substitute(&[("A", P2::zero())])?;
    let leading = v2.coefficient(&[("B", 1)]);
    let ok = rest.is_zero() && leading.is_unit();
    Ok(verdict(ok, format!("v2 = {v2}; v2 - B vanishes mod (2, A); coefficient of B is the unit {leading}")))
}

fn multiplicative_v2(config: &RunConfig) -> chromalg::Result<Outcome> {
    let u = P2::var("u", 1);
    let n = config.series_prec.max(5);
    let d = hazewinkel_generators(&multiplicative(u.clone(), n), 2, 2)?;
    Ok(verdict(d.v[0] == -u && d.v[1].is_zero(), format!("x + y + uxy: v1 = {}, v2 = {}", d.v[0], d.v[1])))
}

fn tate_v2(config: &RunConfig) -> chromalg::Result<Outcome> {
    let beta = P2::var("beta", 1);
    let n = config.series_prec.max(5);
    let f = WeierstrassCurve::tate(beta.clone()).formal_group(n)?;
    let d = hazewinkel_generators(&f, 2, 2)?;
    Ok(verdict(d.v[0] == beta && d.v[1].is_zero(), format!("A -> beta, B -> 0: v1 = {}, v2 = {}", d.v[0], d.v[1])))
}

fn height_supersingular(_: &RunConfig) -> chromalg::Result<Outcome> {
    let h = WeierstrassCurve::family(F4::zero(), F4::one()).formal_group(6)?.height(2)?;
    Ok(verdict(h == 2, format!("y^2 + y = x^3 over F4 has height {h}")))
}

fn height_ordinary(_: &RunConfig) -> chromalg::Result<Outcome> {
    let h = WeierstrassCurve::family(F4::one(), F4::generator()).formal_group(6)?.height(2)?;
    Ok(verdict(h == 1, format!("y^2 + xy + wy = x^3 over F4 has height {h}")))
}

fn chart_law<const M: u64>(b_prec: usize, n: usize) -> chromalg::Result<FormalGroupLaw<S<M>>> {
    WeierstrassCurve::family(S::<M>::one(), S::<M>::gen(b_prec)).formal_group(n)
}

fn canonical_quotient(config: &RunConfig) -> chromalg::Result<Outcome> {
    let b_prec = 2 * config.two_adic_prec;
    let f = chart_law::<2>(b_prec, config.series_prec.max(3))?;
    let k = canonical_subgroup(&f)?;
    let q = quotient_by_subgroup(&f, &k)?;
    let twist = f.truncate(q.prec()).base_change(|c| c.substitute_power(2).truncate(b_prec));
    Ok(verdict(
        k.alpha.is_zero() && q == twist,
        format!(
            "over F2[[b]] mod b^{b_prec}: F / C equals the b -> b^2 base change through total degree {}",
            q.prec() - 1
        ),
    ))
}

fn kernel_at<const M: u64>(b_prec: usize, n: usize) -> chromalg::Result<Outcome> {
    let k = canonical_subgroup(&chart_law::<M>(b_prec, n)?)?;
    let half = k.alpha.try_div(&S::<M>::from_int(2));
    let ok = half.as_ref().is_some_and(|h| h.is_unit());
    Ok(verdict(ok, format!("over Z/{M}[[b]]: kernel point {} = 2 * unit", k.alpha)))
}

fn recognition_at<const M: u64>(b_prec: usize, n: usize) -> chromalg::Result<Outcome> {
    let f = chart_law::<M>(b_prec, n)?;
    let k = canonical_subgroup(&f)?;
    let q = quotient_by_subgroup(&f, &k)?;
    let r = recognize_in_family(&q, &Gamma13Chart { a: 1 }, b_prec)?;
    let b = S::<M>::gen(b_prec);
    let frobenius = (0..b_prec).all(|i| r.b_prime.coeff(i).value() % 2 == u64::from(i == 2));
    let theta = theta_defect(&b, &r.b_prime)?;
    Ok(verdict(
        frobenius,
        format!("over Z/{M}[[b]] mod b^{b_prec}: F / C is the member at b' = {}, theta(b) = {theta}", r.b_prime),
    ))
}

macro_rules! two_adic {
    ($f:ident, $k:expr, $($arg:expr),*) => {
        match $k {
            1 => $f::<2>($($arg),*),
            2 => $f::<4>($($arg),*),
            3 => $f::<8>($($arg),*),
            4 => $f::<16>($($arg),*),
            5 => $f::<32>($($arg),*),
            6 => $f::<64>($($arg),*),
            7 => $f::<128>($($arg),*),
            8 => $f::<256>($($arg),*),
            k => Ok(Outcome::Skipped(format!("2-adic precision {k} is above 8"))),
        }
    };
}

fn canonical_kernel(config: &RunConfig) -> chromalg::Result<Outcome> {
    let k = config.two_adic_prec.max(2);
    two_adic!(kernel_at, k, 2 * config.two_adic_prec, config.series_prec.max(3))
}

/// Each division by the isogeny over `Z/2^k` leaves `k - 1` extra top
/// coefficients undetermined, so the series precision grows with `k`.
fn frobenius_recognition(config: &RunConfig) -> chromalg::Result<Outcome> {
    let k = config.two_adic_prec;
    two_adic!(recognition_at, k, RECOGNITION_B_PREC, config.series_prec.max(5 * k + 4))
}
