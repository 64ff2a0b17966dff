//! Seven gamma operators, the 64-element real Clifford set, SO(8) and the
//! 31-element invariance algebra.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::equation::{formal_commutator, StructuredEvolutionOp};
use crate::matrix::{neg2, pauli, zero2, MatrixC4};
use crate::op::{anticommutator, commutator, product, RealLinearOp};
use crate::report::AlgebraClosureReport;
use crate::scalar::{ExactScalar, RealQ2};
use crate::span::RealSpan;

/// Dirac–Pauli γ⁰..γ³ plus the seven operators γ¹..γ⁷.
#[derive(Clone, Debug)]
pub struct GammaSet {
    dirac: [RealLinearOp; 4],
    gamma: [RealLinearOp; 7],
}

impl GammaSet {
    /// γᴬ for `a` in 1..=7.
    pub fn gamma(&self, a: usize) -> &RealLinearOp {
        assert!((1..=7).contains(&a), "gamma index {a} outside 1..=7");
        &self.gamma[a - 1]
    }

    /// Dirac γ^μ for `mu` in 0..=3.
    pub fn dirac(&self, mu: usize) -> &RealLinearOp {
        &self.dirac[mu]
    }

    pub fn gammas(&self) -> &[RealLinearOp; 7] {
        &self.gamma
    }
}

pub fn build_gamma_set() -> GammaSet {
    let one = ExactScalar::one;
    let g0 = RealLinearOp::linear(MatrixC4::diag([one(), one(), -one(), -one()]));
    let z = zero2();
    let spatial: Vec<RealLinearOp> = pauli()
        .iter()
        .map(|s| RealLinearOp::linear(MatrixC4::from_blocks([[&z, s], [&neg2(s), &z]])))
        .collect();
    let [g1, g2, g3]: [RealLinearOp; 3] = spatial.try_into().expect("three Pauli matrices");
    let i = RealLinearOp::scalar(ExactScalar::i());
    let c = RealLinearOp::conjugation();
    let g4 = product([&g0, &g1, &g2, &g3]);
    let g5 = product([&g1, &g3, &c]);
    let g6 = product([&i, &g1, &g3, &c]);
    let g7 = i.compose(&g0);
    GammaSet { dirac: [g0, g1.clone(), g2.clone(), g3.clone()], gamma: [g1, g2, g3, g4, g5, g6, g7] }
}

/// `s = ½·diag(σ, σ)` spin matrices as exact operators.
pub fn spin_matrices() -> [RealLinearOp; 3] {
    let half = ExactScalar::ratio(1, 2);
    let z = zero2();
    pauli().map(|s| RealLinearOp::linear(MatrixC4::from_blocks([[&s, &z], [&z, &s]]).scale(&half)))
}

/// All 28 relations {γᴬ, γᴮ} = −2δᴬᴮ for 1 ≤ A ≤ B ≤ 7.
pub fn verify_anticommutation(g: &GammaSet) -> AlgebraClosureReport {
    let mut rep = AlgebraClosureReport::new("CL-ANTI-14", 7);
    for a in 1..=7 {
        for b in a..=7 {
            let expect = if a == b { RealLinearOp::scalar(ExactScalar::int(-2)) } else { RealLinearOp::zero() };
            let res = &anticommutator(g.gamma(a), g.gamma(b)) - &expect;
            rep.check_zero(format!("{{g{a}, g{b}}} = {}", if a == b { "-2" } else { "0" }), &[a, b], res);
        }
    }
    rep
}

/// Product identities and structural invariants of the gamma set.
pub fn verify_gamma_products(g: &GammaSet) -> AlgebraClosureReport {
    let mut rep = AlgebraClosureReport::new("CL-GAMMA-PROD", 7);
    let id = RealLinearOp::identity();
    let i = RealLinearOp::scalar(ExactScalar::i());
    rep.check_zero("g1 g2 ... g7 = I", &[], &product(g.gammas().iter()) - &id);
    rep.check_zero("g5 g6 = i", &[5, 6], &g.gamma(5).compose(g.gamma(6)) - &i);
    rep.check_zero(
        "g4 = g0 g1 g2 g3",
        &[4],
        g.gamma(4) - &product([g.dirac(0), g.dirac(1), g.dirac(2), g.dirac(3)]),
    );
    let minus_i = RealLinearOp::scalar(-ExactScalar::i());
    rep.check_zero(
        "g4 = -i g7 g1 g2 g3",
        &[4, 7],
        g.gamma(4) - &product([&minus_i, g.gamma(7), g.gamma(1), g.gamma(2), g.gamma(3)]),
    );
    rep.check_zero("g7 = i g0", &[7], g.gamma(7) - &i.compose(g.dirac(0)));
    let s = spin_matrices();
    let two_i = ExactScalar::gaussian(0, 2, 1);
    // σ¹σ² = iσ³ lifted to the spin blocks: (2s¹)(2s²) = i(2s³)
    let lhs = s[0].scale(&ExactScalar::int(2)).compose(&s[1].scale(&ExactScalar::int(2)));
    rep.check_zero("sigma1 sigma2 = i sigma3", &[], &lhs - &s[2].scale(&two_i));
    for a in 1..=4 {
        rep.check(format!("g{a} linear"), &[a], g.gamma(a).is_linear(), "antilinear part present");
        let unit_entries = g.gamma(a).linear_part().entries().all(|e| {
            e.is_zero() || [ExactScalar::one(), -ExactScalar::one(), ExactScalar::i(), -ExactScalar::i()].contains(e)
        });
        rep.check(format!("g{a} entries in {{0, ±1, ±i}}"), &[a], unit_entries, "non-unit entry");
    }
    for a in [5, 6] {
        rep.check(format!("g{a} antilinear"), &[a], g.gamma(a).is_antilinear(), "linear part present");
    }
    rep
}

/// The 16 ordered products of distinct γ⁰..γ³, with labels.
pub fn standard_cd(g: &GammaSet) -> Vec<(String, RealLinearOp)> {
    (0u32..16)
        .map(|mask| {
            let idx: Vec<usize> = (0..4).filter(|b| mask & (1 << b) != 0).collect();
            let label = if idx.is_empty() {
                "1".to_string()
            } else {
                idx.iter().map(|m| format!("g{m}")).collect::<Vec<_>>().join("")
            };
            (label, product(idx.iter().map(|&m| g.dirac(m))))
        })
        .collect()
}

/// standCD ∪ i·standCD ∪ Ĉ·standCD ∪ iĈ·standCD.
pub fn build_clifford64(g: &GammaSet) -> Vec<RealLinearOp> {
    clifford64_labelled(g).into_iter().map(|(_, q)| q).collect()
}

pub fn clifford64_labelled(g: &GammaSet) -> Vec<(String, RealLinearOp)> {
    let i = RealLinearOp::scalar(ExactScalar::i());
    let c = RealLinearOp::conjugation();
    let ic = i.compose(&c);
    let base = standard_cd(g);
    let mut out = Vec::with_capacity(64);
    for (prefix, pre) in [("", RealLinearOp::identity()), ("i*", i), ("C*", c), ("iC*", ic)] {
        for (label, q) in &base {
            out.push((format!("{prefix}{label}"), pre.compose(q)));
        }
    }
    out
}

/// Span dimension and closure of the 64-element set: every product equals
/// `u·e` for an element `e` and a unit `u ∈ {±1, ±i}`.
pub fn verify_clifford64(ops: &[RealLinearOp]) -> AlgebraClosureReport {
    let mut rep = AlgebraClosureReport::new("CL-CL64", ops.len());
    let span = RealSpan::new(ops);
    rep.real_dimension = Some(span.dim());
    rep.check("real span dimension = 64", &[], span.dim() == 64, format!("dimension {}", span.dim()));
    let index: HashMap<&RealLinearOp, usize> = ops.iter().enumerate().map(|(k, q)| (q, k)).collect();
    let units = [
        ExactScalar::one(),
        -ExactScalar::one(),
        ExactScalar::i(),
        -ExactScalar::i(),
    ];
    let mut unit_use = [0usize; 4];
    for (a, qa) in ops.iter().enumerate() {
        for (b, qb) in ops.iter().enumerate() {
            let p = qa.compose(qb);
            // p = u·e  ⇔  e = u⁻¹·p
            let hit = units.iter().position(|u| {
                let e = p.scale(&u.inv().expect("unit"));
                index.contains_key(&e)
            });
            if let Some(k) = hit {
                unit_use[k] += 1;
            }
            rep.check(format!("e{a} e{b} closes"), &[a, b], hit.is_some(), "product outside the set up to units");
        }
    }
    rep.notes.push(format!(
        "product units: +1 x{}, -1 x{}, +i x{}, -i x{}",
        unit_use[0], unit_use[1], unit_use[2], unit_use[3]
    ));
    rep
}

/// SO(8) generators `s^{AB}`, indices 1..=8.
#[derive(Clone, Debug)]
pub struct So8Set {
    s: Vec<RealLinearOp>,
}

impl So8Set {
    pub fn get(&self, a: usize, b: usize) -> &RealLinearOp {
        assert!((1..=8).contains(&a) && (1..=8).contains(&b), "SO(8) index outside 1..=8");
        &self.s[(a - 1) * 8 + (b - 1)]
    }

    /// The 28 generators with A < B, in lexicographic order.
    pub fn generators(&self) -> Vec<((usize, usize), &RealLinearOp)> {
        let mut v = Vec::with_capacity(28);
        for a in 1..=8 {
            for b in a + 1..=8 {
                v.push(((a, b), self.get(a, b)));
            }
        }
        v
    }
}

pub fn build_so8(g: &GammaSet) -> So8Set {
    let quarter = ExactScalar::ratio(1, 4);
    let half = ExactScalar::ratio(1, 2);
    let mut s = Vec::with_capacity(64);
    for a in 1..=8 {
        for b in 1..=8 {
            let q = match (a, b) {
                _ if a == b => RealLinearOp::zero(),
                (8, b) => g.gamma(b).scale(&-&half),
                (a, 8) => g.gamma(a).scale(&half),
                (a, b) => commutator(g.gamma(a), g.gamma(b)).scale(&quarter),
            };
            s.push(q);
        }
    }
    So8Set { s }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// Right-hand side δᴬᶜsᴮᴰ + δᶜᴮsᴰᴬ + δᴮᴰsᴬᶜ + δᴰᴬsᶜᴮ.
pub fn so8_bracket_rhs(s: &So8Set, a: usize, b: usize, c: usize, d: usize) -> RealLinearOp {
    let mut r = RealLinearOp::zero();
    for (w, (x, y)) in [(delta(a, c), (b, d)), (delta(c, b), (d, a)), (delta(b, d), (a, c)), (delta(d, a), (c, b))] {
        if w != 0 {
            r = &r + s.get(x, y);
        }
    }
    r
}

/// All 378 unordered pairs of distinct generators against the SO(8)
/// bracket with Euclidean δ, plus index antisymmetry.
pub fn verify_so8(s: &So8Set) -> AlgebraClosureReport {
    let gens = s.generators();
    let mut rep = AlgebraClosureReport::new("CL-SO8-19", gens.len());
    for (i, &((a, b), x)) in gens.iter().enumerate() {
        for &((c, d), y) in &gens[i + 1..] {
            let res = &commutator(x, y) - &so8_bracket_rhs(s, a, b, c, d);
            rep.check_zero(format!("[s{a}{b}, s{c}{d}]"), &[a, b, c, d], res);
        }
    }
    let pairs = rep.relations_checked;
    for a in 1..=8 {
        for b in 1..=8 {
            if a < b {
                rep.check_zero(format!("s{b}{a} = -s{a}{b}"), &[a, b], s.get(b, a) + s.get(a, b));
            }
        }
    }
    rep.real_dimension = Some(RealSpan::new(&gens.iter().map(|g| g.1.clone()).collect::<Vec<_>>()).dim());
    rep.notes.push(format!("{pairs} generator pairs checked"));
    rep
}

/// Every SO(8) generator satisfies `adjoint(s) = −s`.
pub fn verify_so8_anti_hermitian(s: &So8Set) -> AlgebraClosureReport {
    let gens = s.generators();
    let mut rep = AlgebraClosureReport::new("CL-SO8-AH", gens.len());
    for ((a, b), q) in gens {
        rep.check_zero(format!("s{a}{b} anti-hermitian"), &[a, b], &q.adjoint() + q);
    }
    rep
}

/// The two spin-½ triplets of SO(8).
pub const SU2_TRIPLES: [[(usize, usize); 3]; 2] = [[(2, 3), (3, 1), (1, 2)], [(4, 5), (6, 4), (5, 6)]];

/// Orientation ε with `[x, y] = ε z`, `[y, z] = ε x`, `[z, x] = ε y`, or
/// `None` when the triple does not close in either orientation.
pub fn su2_orientation(x: &RealLinearOp, y: &RealLinearOp, z: &RealLinearOp) -> Option<i64> {
    [1i64, -1].into_iter().find(|&e| {
        let e = ExactScalar::int(e);
        commutator(x, y) == z.scale(&e) && commutator(y, z) == x.scale(&e) && commutator(z, x) == y.scale(&e)
    })
}

/// Both triplets close as su(2), commute with each other, and formally
/// commute with the free FW operator `fw_free`.
pub fn verify_su2_pair(s: &So8Set, fw_free: &StructuredEvolutionOp) -> AlgebraClosureReport {
    let mut rep = AlgebraClosureReport::new("CL-SU2-PAIR", 6);
    let trip: Vec<[&RealLinearOp; 3]> =
        SU2_TRIPLES.iter().map(|t| t.map(|(a, b)| s.get(a, b))).collect();
    for (t, ops) in SU2_TRIPLES.iter().zip(&trip) {
        let names: Vec<String> = t.iter().map(|(a, b)| format!("s{a}{b}")).collect();
        let eps = su2_orientation(ops[0], ops[1], ops[2]);
        rep.check(
            format!("({}) closes as su(2)", names.join(", ")),
            &[t[0].0, t[0].1, t[1].0, t[1].1, t[2].0, t[2].1],
            eps.is_some(),
            "cyclic brackets do not close with a common sign",
        );
        if let Some(e) = eps {
            rep.notes.push(format!("({}) orientation {:+}", names.join(", "), e));
        }
    }
    for (p, x) in SU2_TRIPLES[0].iter().zip(&trip[0]) {
        for (q, y) in SU2_TRIPLES[1].iter().zip(&trip[1]) {
            rep.check_zero(format!("[s{}{}, s{}{}] = 0", p.0, p.1, q.0, q.1), &[p.0, p.1, q.0, q.1], commutator(x, y));
        }
    }
    for (t, ops) in SU2_TRIPLES.iter().zip(&trip) {
        for (&(a, b), q) in t.iter().zip(ops) {
            let cr = formal_commutator(q, fw_free);
            rep.check(
                format!("s{a}{b} commutes with {}", fw_free.label()),
                &[a, b],
                cr.commutes(),
                format!("fails on {:?}", cr.failing_terms()),
            );
        }
    }
    rep
}

/// Which summand an element of the 31-element algebra belongs to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Summand {
    So6,
    IG0So6,
    IG0,
}

impl Summand {
    pub fn as_str(self) -> &'static str {
        match self {
            Summand::So6 => "so6",
            Summand::IG0So6 => "ig0*so6",
            Summand::IG0 => "ig0",
        }
    }
}

#[derive(Clone, Debug)]
pub struct NamedOp {
    pub name: String,
    pub summand: Summand,
    pub op: RealLinearOp,
}

/// SO(6) generators `s^{AB} = ¼[γᴬ, γᴮ]`, 1 ≤ A < B ≤ 6.
pub fn build_so6(g: &GammaSet) -> Vec<(String, RealLinearOp)> {
    let quarter = ExactScalar::ratio(1, 4);
    let mut v = Vec::with_capacity(15);
    for a in 1..=6 {
        for b in a + 1..=6 {
            v.push((format!("s{a}{b}"), commutator(g.gamma(a), g.gamma(b)).scale(&quarter)));
        }
    }
    v
}

/// {s^{AB}} ∪ {iγ⁰ s^{AB}} ∪ {iγ⁰}: 15 + 15 + 1 elements.
pub fn build_algebra31(g: &GammaSet) -> Vec<NamedOp> {
    let ig0 = RealLinearOp::scalar(ExactScalar::i()).compose(g.dirac(0));
    let so6 = build_so6(g);
    let mut v: Vec<NamedOp> =
        so6.iter().map(|(n, q)| NamedOp { name: n.clone(), summand: Summand::So6, op: q.clone() }).collect();
    v.extend(so6.iter().map(|(n, q)| NamedOp {
        name: format!("ig0*{n}"),
        summand: Summand::IG0So6,
        op: ig0.compose(q),
    }));
    v.push(NamedOp { name: "ig0".into(), summand: Summand::IG0, op: ig0 });
    v
}

/// Bracket `[eᵢ, eⱼ]` for i < j, in coordinates of the element list.
#[derive(Clone, Debug)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// Nonzero coordinates; `None` when the bracket leaves the span.
    pub coords: Option<Vec<(usize, RealQ2)>>,
}

#[derive(Clone, Debug)]
pub struct BracketTable {
    pub entries: Vec<BracketEntry>,
}

impl BracketTable {
    pub fn compute(elements: &[NamedOp]) -> Self {
        let ops: Vec<RealLinearOp> = elements.iter().map(|e| e.op.clone()).collect();
        let span = RealSpan::new(&ops);
        let mut entries = Vec::new();
        for i in 0..ops.len() {
            for j in i + 1..ops.len() {
                let c = commutator(&ops[i], &ops[j]);
                let coords = span.coordinates(&c).map(|v| {
                    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect::<Vec<_>>()
                });
                entries.push(BracketEntry { i, j, coords });
            }
        }
        BracketTable { entries }
    }

    /// For each pair of summands, the summands hit by their brackets.
    pub fn summand_summary(&self, elements: &[NamedOp]) -> BTreeMap<(Summand, Summand), BTreeSet<Summand>> {
        let mut out: BTreeMap<(Summand, Summand), BTreeSet<Summand>> = BTreeMap::new();
        for e in &self.entries {
            let (a, b) = (elements[e.i].summand, elements[e.j].summand);
            let key = if a <= b { (a, b) } else { (b, a) };
            let hit = out.entry(key).or_default();
            if let Some(c) = &e.coords {
                hit.extend(c.iter().map(|(k, _)| elements[*k].summand));
            }
        }
        out
    }
}

/// Element count 31, span dimension 31 and bracket closure.
pub fn verify_algebra31(elements: &[NamedOp]) -> AlgebraClosureReport {
    let mut rep = AlgebraClosureReport::new("CL-31DIM", elements.len());
    rep.check("element count = 31", &[], elements.len() == 31, format!("{} elements", elements.len()));
    let ops: Vec<RealLinearOp> = elements.iter().map(|e| e.op.clone()).collect();
    let dim = RealSpan::new(&ops).dim();
    rep.real_dimension = Some(dim);
    rep.check("real span dimension = 31", &[], dim == 31, format!("dimension {dim}"));
    let table = BracketTable::compute(elements);
    for e in &table.entries {
        rep.check(
            format!("[{}, {}] in span", elements[e.i].name, elements[e.j].name),
            &[e.i, e.j],
            e.coords.is_some(),
            "bracket leaves the span",
        );
    }
    for ((a, b), hit) in table.summand_summary(elements) {
        let hit: Vec<&str> = hit.iter().map(|s| s.as_str()).collect();
        rep.notes.push(format!("[{}, {}] -> {{{}}}", a.as_str(), b.as_str(), hit.join(", ")));
    }
    rep
}

/// Closure of the 15 SO(6) generators under the bracket.
pub fn verify_so6_closure(g: &GammaSet) -> AlgebraClosureReport {
    let so6 = build_so6(g);
    let ops: Vec<RealLinearOp> = so6.iter().map(|(_, q)| q.clone()).collect();
    let span = RealSpan::new(&ops);
    let mut rep = AlgebraClosureReport::new("CL-SO6", ops.len());
    rep.real_dimension = Some(span.dim());
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            let c = commutator(&ops[i], &ops[j]);
            rep.check(format!("[{}, {}] in span", so6[i].0, so6[j].0), &[i, j], span.contains(&c), "outside span");
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_gamma_squares_to_minus_one() {
        let g = build_gamma_set();
        assert_eq!(g.gamma(1).compose(g.gamma(1)), RealLinearOp::scalar(ExactScalar::int(-1)));
    }

    #[test]
    fn s12_matches_direct_product() {
        let g = build_gamma_set();
        let s = build_so8(&g);
        // −(i/2)·diag(σ³, σ³)
        let m = ExactScalar::gaussian(0, -1, 2);
        let expect = RealLinearOp::linear(MatrixC4::diag([m.clone(), -&m, m.clone(), -&m]));
        assert_eq!(s.get(1, 2), &expect);
    }

    #[test]
    fn s56_is_half_i() {
        let g = build_gamma_set();
        let s = build_so8(&g);
        assert_eq!(s.get(5, 6), &RealLinearOp::scalar(ExactScalar::gaussian(0, 1, 2)));
    }

    #[test]
    fn s18_s28_bracket() {
        let g = build_gamma_set();
        let s = build_so8(&g);
        assert_eq!(commutator(s.get(1, 8), s.get(2, 8)), s.get(1, 2).clone());
        assert!(commutator(s.get(1, 2), s.get(3, 4)).is_zero());
    }

    #[test]
    fn standard_cd_contains_identity_and_g4() {
        let g = build_gamma_set();
        let cd = standard_cd(&g);
        assert_eq!(cd.len(), 16);
        assert!(cd.iter().any(|(_, q)| q == &RealLinearOp::identity()));
        assert!(cd.iter().any(|(_, q)| q == g.gamma(4)));
    }
}
