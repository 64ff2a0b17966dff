//! Fermionic and bosonic SO(1,3) generator sets and the W transition.

use std::fmt;
use std::str::FromStr;

use crate::clifford::GammaSet;
use crate::matrix::MatrixC4;
use crate::op::{commutator, Hermiticity, RealLinearOp};
use crate::report::AlgebraClosureReport;
use crate::scalar::ExactScalar;
use crate::AlgebraError;

/// Minkowski metric diag(1, −1, −1, −1).
pub fn metric(mu: usize, nu: usize) -> i64 {
    match (mu, nu) {
        (0, 0) => 1,
        (a, b) if a == b => -1,
        _ => 0,
    }
}

/// Independent generators in report order.
pub const GENERATORS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LorentzLabel {
    I,
    II,
    TS,
    V,
}

impl LorentzLabel {
    pub const ALL: [LorentzLabel; 4] = [LorentzLabel::I, LorentzLabel::II, LorentzLabel::TS, LorentzLabel::V];

    pub fn as_str(self) -> &'static str {
        match self {
            LorentzLabel::I => "I",
            LorentzLabel::II => "II",
            LorentzLabel::TS => "TS",
            LorentzLabel::V => "V",
        }
    }
}

impl fmt::Display for LorentzLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LorentzLabel {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" => Ok(LorentzLabel::I),
            "II" => Ok(LorentzLabel::II),
            "TS" => Ok(LorentzLabel::TS),
            "V" => Ok(LorentzLabel::V),
            _ => Err(AlgebraError::UnknownLorentzLabel(s.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LorentzSet {
    pub label: LorentzLabel,
    s: Vec<RealLinearOp>,
}

impl LorentzSet {
    /// Builds an antisymmetric set from the six independent generators in
    /// [`GENERATORS`] order.
    pub fn from_generators(label: LorentzLabel, gens: [RealLinearOp; 6]) -> Self {
        let mut s = vec![RealLinearOp::zero(); 16];
        for ((mu, nu), q) in GENERATORS.iter().zip(gens) {
            s[nu * 4 + mu] = -&q;
            s[mu * 4 + nu] = q;
        }
        LorentzSet { label, s }
    }

    pub fn get(&self, mu: usize, nu: usize) -> &RealLinearOp {
        &self.s[mu * 4 + nu]
    }

    pub fn generators(&self) -> [&RealLinearOp; 6] {
        GENERATORS.map(|(a, b)| self.get(a, b))
    }
}

fn s_i(g: &GammaSet) -> [RealLinearOp; 6] {
    let half_i = ExactScalar::gaussian(0, 1, 2);
    let quarter = ExactScalar::ratio(1, 4);
    GENERATORS.map(|(a, b)| {
        if a == 0 {
            g.dirac(b).compose(g.gamma(4)).scale(&half_i)
        } else {
            commutator(g.dirac(a), g.dirac(b)).scale(&quarter)
        }
    })
}

fn s_ii(g: &GammaSet) -> [RealLinearOp; 6] {
    let c = RealLinearOp::conjugation();
    let g2c = g.dirac(2).compose(&c);
    let g0g2c = g.dirac(0).compose(&g2c);
    [
        g2c.scale(&ExactScalar::gaussian(0, -1, 2)),
        g2c.scale(&ExactScalar::ratio(-1, 2)),
        g.dirac(0).scale(&ExactScalar::ratio(1, 2)),
        g0g2c.scale(&ExactScalar::ratio(-1, 2)),
        g0g2c.scale(&ExactScalar::gaussian(0, 1, 2)),
        RealLinearOp::scalar(ExactScalar::gaussian(0, -1, 2)),
    ]
}

pub fn build_lorentz(g: &GammaSet, label: LorentzLabel) -> LorentzSet {
    let gens = match label {
        LorentzLabel::I => s_i(g),
        LorentzLabel::II => s_ii(g),
        LorentzLabel::TS | LorentzLabel::V => {
            let (a, b) = (s_i(g), s_ii(g));
            std::array::from_fn(|k| {
                let boost = GENERATORS[k].0 == 0;
                if boost && label == LorentzLabel::V {
                    &b[k] - &a[k]
                } else {
                    &a[k] + &b[k]
                }
            })
        }
    };
    LorentzSet::from_generators(label, gens)
}

/// Right-hand side of `[s^{μν}, s^{ρσ}] = −g^{μρ}s^{νσ} − g^{ρν}s^{σμ}
/// − g^{νσ}s^{μρ} − g^{σμ}s^{ρν}` for any antisymmetric lookup.
pub fn so13_rhs(get: impl Fn(usize, usize) -> RealLinearOp, mu: usize, nu: usize, rho: usize, sigma: usize) -> RealLinearOp {
    let mut r = RealLinearOp::zero();
    for (w, (x, y)) in [
        (metric(mu, rho), (nu, sigma)),
        (metric(rho, nu), (sigma, mu)),
        (metric(nu, sigma), (mu, rho)),
        (metric(sigma, mu), (rho, nu)),
    ] {
        if w != 0 {
            r = &r - &get(x, y).scale(&ExactScalar::int(w));
        }
    }
    r
}

fn gen_name(label: &str, (a, b): (usize, usize)) -> String {
    format!("s_{label}^{a}{b}")
}

/// The 15 unordered generator pairs against the SO(1,3) bracket.
pub fn verify_so13(ls: &LorentzSet) -> AlgebraClosureReport {
    let mut rep = AlgebraClosureReport::new(&format!("CL-LOR-28-{}", ls.label), 6);
    let get = |a: usize, b: usize| ls.get(a, b).clone();
    for (i, &(m, n)) in GENERATORS.iter().enumerate() {
        for &(r, s) in &GENERATORS[i + 1..] {
            let res = &commutator(ls.get(m, n), ls.get(r, s)) - &so13_rhs(get, m, n, r, s);
            rep.check_zero(
                format!("[{}, {}]", gen_name(ls.label.as_str(), (m, n)), gen_name(ls.label.as_str(), (r, s))),
                &[m, n, r, s],
                res,
            );
        }
    }
    rep
}

/// `[a^{μν}, b^{ρσ}]` for all generator pairs of two sets.
#[derive(Clone, Debug)]
pub struct CrossCommutator {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub value: RealLinearOp,
}

pub fn cross_commutators(a: &LorentzSet, b: &LorentzSet) -> Vec<CrossCommutator> {
    let mut v = Vec::with_capacity(36);
    for &p in &GENERATORS {
        for &q in &GENERATORS {
            v.push(CrossCommutator { a: p, b: q, value: commutator(a.get(p.0, p.1), b.get(q.0, q.1)) });
        }
    }
    v
}

pub fn hermiticity_table(ls: &LorentzSet) -> Vec<((usize, usize), Hermiticity)> {
    GENERATORS.iter().map(|&(a, b)| ((a, b), ls.get(a, b).hermiticity())).collect()
}

#[derive(Clone, Debug)]
pub struct TransitionW {
    pub w: RealLinearOp,
    pub w_inv: RealLinearOp,
}

pub fn build_transition_w() -> TransitionW {
    let r = ExactScalar::inv_sqrt2();
    let one = ExactScalar::one();
    let i = ExactScalar::i();
    let mut l = MatrixC4::zero();
    let mut a = MatrixC4::zero();
    l.set(0, 0, one.clone());
    a.set(1, 2, i.clone());
    a.set(2, 1, -&r);
    l.set(2, 3, r.clone());
    a.set(3, 1, -&r);
    l.set(3, 3, -&r);
    let w = RealLinearOp::new(l, a);
    let mut l = MatrixC4::zero();
    let mut a = MatrixC4::zero();
    l.set(0, 0, one);
    a.set(1, 2, -&r);
    a.set(1, 3, -&r);
    a.set(2, 1, i);
    l.set(3, 2, r.clone());
    l.set(3, 3, -&r);
    TransitionW { w, w_inv: RealLinearOp::new(l, a) }
}

impl TransitionW {
    pub fn conjugate(&self, q: &RealLinearOp) -> RealLinearOp {
        self.w.compose(q).compose(&self.w_inv)
    }
}

/// `W s_TS^{23,31,12} W⁻¹`.
pub fn conjugate_spin_block(w: &TransitionW, ls: &LorentzSet) -> Result<[RealLinearOp; 3], AlgebraError> {
    if ls.label != LorentzLabel::TS {
        return Err(AlgebraError::WrongLorentzLabel { expected: LorentzLabel::TS, got: ls.label });
    }
    Ok([(2, 3), (3, 1), (1, 2)].map(|(a, b)| w.conjugate(ls.get(a, b))))
}

/// The explicit spin-1 matrices s̆¹, s̆², s̆³ (entries with Ĉ are antilinear).
pub fn printed_spin_block() -> [RealLinearOp; 3] {
    let r = ExactScalar::inv_sqrt2();
    let ir = &ExactScalar::i() * &r;
    let mut a1 = MatrixC4::zero();
    a1.set(0, 2, ir.clone());
    a1.set(1, 2, -&r);
    a1.set(2, 0, -&ir);
    a1.set(2, 1, r.clone());
    let mut a2 = MatrixC4::zero();
    a2.set(0, 2, r.clone());
    a2.set(1, 2, -&ir);
    a2.set(2, 0, -&r);
    a2.set(2, 1, ir);
    let z = ExactScalar::zero;
    let l3 = MatrixC4::diag([-ExactScalar::i(), ExactScalar::i(), z(), z()]);
    [RealLinearOp::antilinear(a1), RealLinearOp::antilinear(a2), RealLinearOp::linear(l3)]
}

/// W-conjugated spin block against the explicit matrices, invertibility of
/// W, the spin-1 Casimir block and bracket preservation on the TS set.
pub fn verify_spin_block(w: &TransitionW, ts: &LorentzSet) -> Result<AlgebraClosureReport, AlgebraError> {
    let block = conjugate_spin_block(w, ts)?;
    let mut rep = AlgebraClosureReport::new("CL-LOR-26", 3);
    let id = RealLinearOp::identity();
    rep.check_zero("W W^-1 = I", &[], &w.w.compose(&w.w_inv) - &id);
    rep.check_zero("W^-1 W = I", &[], &w.w_inv.compose(&w.w) - &id);
    for (k, (got, want)) in block.iter().zip(printed_spin_block().iter()).enumerate() {
        rep.check_zero(format!("W s_TS W^-1 = s_breve^{}", k + 1), &[k + 1], got - want);
    }
    let cas = block.iter().fold(RealLinearOp::zero(), |acc, q| &acc + &q.compose(q));
    rep.check_zero("sum_j (s_breve^j)^2 = -2 diag(1,1,1,0)", &[], &cas - &spin1_casimir_block());
    let get = |a: usize, b: usize| w.conjugate(ts.get(a, b));
    for (i, &(m, n)) in GENERATORS.iter().enumerate() {
        for &(r, s) in &GENERATORS[i + 1..] {
            let lhs = commutator(&get(m, n), &get(r, s));
            let rhs = w.conjugate(&commutator(ts.get(m, n), ts.get(r, s)));
            rep.check_zero(format!("W-conjugation preserves [s^{m}{n}, s^{r}{s}]"), &[m, n, r, s], &lhs - &rhs);
        }
    }
    Ok(rep)
}

/// −2·diag(1, 1, 1, 0).
pub fn spin1_casimir_block() -> RealLinearOp {
    let m2 = ExactScalar::int(-2);
    RealLinearOp::linear(MatrixC4::diag([m2.clone(), m2.clone(), m2, ExactScalar::zero()]))
}

/// Totally antisymmetric symbol with ε₀₁₂₃ = +1.
pub fn levi_civita(idx: [usize; 4]) -> i64 {
    let mut v = idx;
    let mut sign = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if v[i] == v[j] {
                return 0;
            }
            if v[i] > v[j] {
                v.swap(i, j);
                sign = -sign;
            }
        }
    }
    sign
}

/// `C₁ = ½ s_{μν}s^{μν}` and `C₂ = ¼ ε_{μνρσ}s^{μν}s^{ρσ}`.
pub fn casimir_so13(ls: &LorentzSet) -> (RealLinearOp, RealLinearOp) {
    let mut c1 = RealLinearOp::zero();
    let mut c2 = RealLinearOp::zero();
    for mu in 0..4 {
        for nu in 0..4 {
            let s = ls.get(mu, nu);
            if s.is_zero() {
                continue;
            }
            let lower = metric(mu, mu) * metric(nu, nu);
            c1 = &c1 + &s.compose(s).scale(&ExactScalar::int(lower));
            for rho in 0..4 {
                for sigma in 0..4 {
                    let e = levi_civita([mu, nu, rho, sigma]);
                    if e != 0 {
                        c2 = &c2 + &s.compose(ls.get(rho, sigma)).scale(&ExactScalar::int(e));
                    }
                }
            }
        }
    }
    (c1.scale(&ExactScalar::ratio(1, 2)), c2.scale(&ExactScalar::ratio(1, 4)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build_gamma_set;

    #[test]
    fn s_ii_12_is_minus_half_i() {
        let g = build_gamma_set();
        let s = build_lorentz(&g, LorentzLabel::II);
        assert_eq!(s.get(1, 2), &RealLinearOp::scalar(ExactScalar::gaussian(0, -1, 2)));
        assert_eq!(s.get(2, 1), &RealLinearOp::scalar(ExactScalar::gaussian(0, 1, 2)));
    }

    #[test]
    fn bosonic_sets_follow_sum_rule() {
        let g = build_gamma_set();
        let [a, b, ts, v] = LorentzLabel::ALL.map(|l| build_lorentz(&g, l));
        for k in 1..=3 {
            assert_eq!(ts.get(0, k), &(a.get(0, k) + b.get(0, k)));
            assert_eq!(v.get(0, k), &(b.get(0, k) - a.get(0, k)));
        }
        assert_eq!(v.get(2, 3), ts.get(2, 3));
        assert_eq!(v.get(1, 2), ts.get(1, 2));
    }

    #[test]
    fn rotation_bracket_of_s_i() {
        let g = build_gamma_set();
        let s = build_lorentz(&g, LorentzLabel::I);
        assert_eq!(commutator(s.get(2, 3), s.get(3, 1)), s.get(1, 2).clone());
        assert!(commutator(s.get(1, 2), s.get(1, 2)).is_zero());
    }

    #[test]
    fn spin_block_third_component() {
        let g = build_gamma_set();
        let ts = build_lorentz(&g, LorentzLabel::TS);
        let block = conjugate_spin_block(&build_transition_w(), &ts).unwrap();
        assert_eq!(block[2], printed_spin_block()[2]);
        let s1 = build_lorentz(&g, LorentzLabel::I);
        assert!(conjugate_spin_block(&build_transition_w(), &s1).is_err());
    }

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1);
        assert_eq!(levi_civita([3, 2, 1, 0]), 1);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0);
    }

    #[test]
    fn unknown_label_rejected() {
        assert!("III".parse::<LorentzLabel>().is_err());
        assert_eq!("TS".parse::<LorentzLabel>().unwrap(), LorentzLabel::TS);
    }
}
