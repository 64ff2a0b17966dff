//! The Pauli–Gürsey triple `s⁰¹ = (i/2)γ²Ĉ`, `s⁰² = ½γ²Ĉ`, `s¹² = −i/2`.

use crate::clifford::GammaSet;
use crate::equation::{formal_commutator, CommutatorReport, EvolutionForm, StructuredEvolutionOp};
use crate::lorentz::{so13_rhs, LorentzSet};
use crate::op::{commutator, RealLinearOp};
use crate::report::AlgebraClosureReport;
use crate::scalar::{ExactScalar, RealQ2};
use crate::span::RealSpan;

pub const PG_INDICES: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

pub fn build_pauli_gursey(g: &GammaSet) -> [RealLinearOp; 3] {
    let g2c = g.dirac(2).compose(&RealLinearOp::conjugation());
    [
        g2c.scale(&ExactScalar::gaussian(0, 1, 2)),
        g2c.scale(&ExactScalar::ratio(1, 2)),
        RealLinearOp::scalar(ExactScalar::gaussian(0, -1, 2)),
    ]
}

fn lookup(pg: &[RealLinearOp; 3], a: usize, b: usize) -> RealLinearOp {
    if a == b {
        return RealLinearOp::zero();
    }
    let (lo, hi, sign) = if a < b { (a, b, false) } else { (b, a, true) };
    let k = PG_INDICES.iter().position(|&p| p == (lo, hi)).expect("index in {0,1,2}");
    if sign {
        -&pg[k]
    } else {
        pg[k].clone()
    }
}

/// Structure constants `[eᵢ, eⱼ] = Σ cᵢⱼᵏ eₖ` of the triple.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    /// `(i, j, coords)` for i < j; `None` when the bracket leaves the span.
    pub brackets: Vec<(usize, usize, Option<Vec<RealQ2>>)>,
}

#[derive(Clone, Debug)]
pub struct PauliGurseyReport {
    pub closure: AlgebraClosureReport,
    pub computed: StructureConstants,
    /// Structure constants predicted by the SO(1,3) bracket on {0, 1, 2}.
    pub predicted: StructureConstants,
    pub covariance: Vec<(String, CommutatorReport)>,
}

pub fn verify_pauli_gursey(g: &GammaSet) -> PauliGurseyReport {
    let pg = build_pauli_gursey(g);
    let span = RealSpan::new(&pg);
    let mut closure = AlgebraClosureReport::new("CL-PG", 3);
    closure.real_dimension = Some(span.dim());
    closure.check("real span dimension = 3", &[], span.dim() == 3, format!("dimension {}", span.dim()));
    let get = |a: usize, b: usize| lookup(&pg, a, b);
    let mut computed = Vec::new();
    let mut predicted = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let (m, n) = PG_INDICES[i];
            let (r, s) = PG_INDICES[j];
            let br = commutator(&pg[i], &pg[j]);
            let rhs = so13_rhs(get, m, n, r, s);
            let c = span.coordinates(&br);
            closure.check(format!("[s{m}{n}, s{r}{s}] in span"), &[i, j], c.is_some(), "bracket leaves the span");
            closure.check_zero(format!("[s{m}{n}, s{r}{s}] matches SO(1,3) bracket"), &[m, n, r, s], &br - &rhs);
            computed.push((i, j, c));
            predicted.push((i, j, span.coordinates(&rhs)));
        }
    }
    let cov = StructuredEvolutionOp::build(EvolutionForm::Covariant, true, &ExactScalar::one(), g);
    let covariance = PG_INDICES
        .iter()
        .zip(&pg)
        .map(|(&(a, b), q)| (format!("s{a}{b}"), formal_commutator(q, &cov)))
        .collect();
    PauliGurseyReport {
        closure,
        computed: StructureConstants { brackets: computed },
        predicted: StructureConstants { brackets: predicted },
        covariance,
    }
}

/// Relation of each `s_II^{μν}` (μν ∈ {01, 02, 12}) to the Pauli–Gürsey
/// operator: `Some(λ)` with `s_II = λ·s_PG` for a real λ, else `None`.
pub fn relation_to_s_ii(g: &GammaSet, s_ii: &LorentzSet) -> Vec<((usize, usize), Option<RealQ2>)> {
    let pg = build_pauli_gursey(g);
    PG_INDICES
        .iter()
        .zip(&pg)
        .map(|(&(a, b), p)| {
            let span = RealSpan::new(std::slice::from_ref(p));
            ((a, b), span.coordinates(s_ii.get(a, b)).map(|c| c[0].clone()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build_gamma_set;

    #[test]
    fn s12_squares_to_minus_quarter() {
        let g = build_gamma_set();
        let pg = build_pauli_gursey(&g);
        assert_eq!(pg[2].compose(&pg[2]), RealLinearOp::scalar(ExactScalar::ratio(-1, 4)));
    }

    #[test]
    fn boost_bracket_is_real_multiple_of_rotation() {
        let g = build_gamma_set();
        let pg = build_pauli_gursey(&g);
        let c = RealSpan::new(std::slice::from_ref(&pg[2])).coordinates(&commutator(&pg[0], &pg[1]));
        assert!(c.is_some());
    }
}
