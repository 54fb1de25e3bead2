use chromalg::steenrod::{
    basis, dims, duality_dims_check, milnor_primitive, poincare_product, quotient_module, square_check, MilnorMonomial,
    Profile, SteenrodElement,
};
use rand::seq::SliceRandom;

use super::{rng_for, verdict, Check, Outcome};
use crate::RunConfig;

pub static CHECKS: &[Check] = &[
    Check { id: "steenrod.subalgebra_dims", paper_ref: "steenrod.subalgebras", run: subalgebra_dims },
    Check { id: "steenrod.profiles_valid", paper_ref: "steenrod.subalgebras", run: profiles_valid },
    Check { id: "steenrod.milnor_basis_count", paper_ref: "steenrod.dual", run: milnor_basis_count },
    Check { id: "steenrod.adem_relations", paper_ref: "steenrod.products", run: adem_relations },
    Check { id: "steenrod.primitives_exterior", paper_ref: "steenrod.subalgebras", run: primitives_exterior },
    Check { id: "steenrod.associativity_sample", paper_ref: "steenrod.products", run: associativity_sample },
    Check { id: "steenrod.convolution", paper_ref: "steenrod.quotients", run: convolution },
    Check { id: "steenrod.duality_e2", paper_ref: "tor.duality", run: duality_e2 },
    Check { id: "steenrod.square", paper_ref: "steenrod.square", run: square },
];

fn subalgebra_dims(_: &RunConfig) -> chromalg::Result<Outcome> {
    let a1 = Profile::a(1).total_dim();
    let a2 = Profile::a(2).total_dim();
    let e: Vec<usize> = (0..4).map(|n| Profile::e(n).total_dim()).collect();
    let ok = a1 == 8 && a2 == 64 && e.iter().enumerate().all(|(n, &d)| d == 1 << (n + 1));
    Ok(verdict(ok, format!("dim A(1) = {a1}, dim A(2) = {a2}, dim E(0..3) = {e:?}")))
}

fn profiles_valid(_: &RunConfig) -> chromalg::Result<Outcome> {
    let ps = [Profile::e(0), Profile::e(1), Profile::e(2), Profile::a(0), Profile::a(1), Profile::a(2)];
    let bad: Vec<String> = ps.iter().filter(|p| !p.is_valid()).map(|p| format!("{p:?}")).collect();
    let junk = Profile::Full(vec![4, 1]).is_valid();
    Ok(verdict(
        bad.is_empty() && !junk,
        format!("E(0..2), A(0..2) satisfy the profile condition; h = (4, 1) rejected: {}", !junk),
    ))
}

fn milnor_basis_count(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.max_degree;
    let gens: Vec<(usize, u64)> = (1..).map(|i| ((1usize << i) - 1, 0)).take_while(|g| g.0 <= n).collect();
    let ok = dims(n) == poincare_product(n, &gens, &[]);
    Ok(verdict(ok, format!("Milnor basis counts equal prod 1/(1 - t^(2^i - 1)) through degree {n}")))
}

fn sq(n: u32) -> SteenrodElement {
    SteenrodElement::sq(n)
}

fn elt(terms: &[&[u32]]) -> SteenrodElement {
    terms
        .iter()
        .fold(SteenrodElement::zero(), |acc, r| acc.add(&SteenrodElement::from(MilnorMonomial::new(r.to_vec()))))
}

/// `Sq^a Sq^b = sum_c binom(b - c - 1, a - 2c) Sq^{a + b - c} Sq^c` for `a < 2b`.
fn adem(a: u32, b: u32) -> SteenrodElement {
    let mut out = SteenrodElement::zero();
    for c in 0..=a / 2 {
        let (top, bot) = ((b as i64) - (c as i64) - 1, (a - 2 * c) as i64);
        if top >= 0 && bot <= top && (bot as u64) & !(top as u64) == 0 {
            out = out.add(&sq(a + b - c).mul(&sq(c)));
        }
    }
    out
}

fn adem_relations(_: &RunConfig) -> chromalg::Result<Outcome> {
    let mut bad = Vec::new();
    for b in 1..=8u32 {
        for a in 1..2 * b {
            if sq(a).mul(&sq(b)) != adem(a, b) {
                bad.push((a, b));
            }
        }
    }
    let fixed = sq(2).mul(&sq(2)) == elt(&[&[1, 1]]) && sq(2).mul(&sq(1)) == elt(&[&[3], &[0, 1]]);
    Ok(verdict(
        bad.is_empty() && fixed,
        format!("Adem relations for b <= 8, a < 2b; Sq2 Sq2 = Sq(1,1); failures {bad:?}"),
    ))
}

fn primitives_exterior(_: &RunConfig) -> chromalg::Result<Outcome> {
    let qs: Vec<SteenrodElement> = (0..4).map(milnor_primitive).collect();
    let mut ok = true;
    for (i, a) in qs.iter().enumerate() {
        ok &= a.mul(a).is_zero();
        for b in &qs[i + 1..] {
            ok &= a.mul(b) == b.mul(a);
        }
    }
    let q0q1 = qs[0].mul(&qs[1]);
    Ok(verdict(ok, format!("Q_i^2 = 0 and Q_i Q_j = Q_j Q_i for i, j <= 3; Q_0 Q_1 = {q0q1}")))
}

fn associativity_sample(config: &RunConfig) -> chromalg::Result<Outcome> {
    let mut rng = rng_for(config, "steenrod.associativity_sample");
    let pool: Vec<MilnorMonomial> = (0..=12).flat_map(basis).collect();
    let mut bad = 0;
    for _ in 0..200 {
        let [a, b, c] = [0; 3].map(|_| SteenrodElement::from(pool.choose(&mut rng).expect("nonempty").clone()));
        if a.mul(&b).mul(&c) != a.mul(&b.mul(&c)) {
            bad += 1;
        }
    }
    Ok(verdict(bad == 0, format!("(ab)c = a(bc) on 200 random Milnor triples of degree <= 12; failures {bad}")))
}

fn convolution(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.max_degree;
    let ps = [Profile::e(0), Profile::e(1), Profile::e(2), Profile::a(1), Profile::a(2)];
    for p in &ps {
        let q = quotient_module(p, n)?;
        if !q.is_cyclic() {
            return Ok(Outcome::Fail(format!("A//{p:?} is not cyclic through degree {n}")));
        }
    }
    Ok(Outcome::Pass(format!("P_A = P_A//B P_B through degree {n} for B = E(0..2), A(1), A(2)")))
}

fn duality_e2(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.max_degree;
    let ok = duality_dims_check(2, n)?;
    Ok(verdict(ok, format!("dim (A//E(2))_d = dim (B_*)_d for d <= {n}")))
}

fn square(config: &RunConfig) -> chromalg::Result<Outcome> {
    let n = config.max_degree.min(64);
    let r = square_check(n)?;
    Ok(verdict(
        r.holds(),
        format!("through degree {n}: cyclic {:?}, maps linear {:?}, commutes {}", r.cyclic, r.linear, r.commutes),
    ))
}
