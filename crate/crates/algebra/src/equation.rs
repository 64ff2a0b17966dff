//! Evolution operators as formal sums `Σ cₖ ⊗ bₖ` and exact formal
//! commutators with constant real-linear operators.

use std::fmt;
use std::str::FromStr;

use crate::clifford::GammaSet;
use crate::op::{commutator, RealLinearOp};
use crate::scalar::ExactScalar;
use crate::AlgebraError;

/// Real scalar operators treated as algebraically independent.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisSymbol {
    D0,
    D1,
    D2,
    D3,
    Omega,
    Coulomb,
    Unit,
}

impl BasisSymbol {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisSymbol::D0 => "d0",
            BasisSymbol::D1 => "d1",
            BasisSymbol::D2 => "d2",
            BasisSymbol::D3 => "d3",
            BasisSymbol::Omega => "omega",
            BasisSymbol::Coulomb => "V",
            BasisSymbol::Unit => "1",
        }
    }

    fn spatial(j: usize) -> Self {
        [BasisSymbol::D1, BasisSymbol::D2, BasisSymbol::D3][j - 1]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EvolutionForm {
    /// `∂₀ + γ⁰γʲ∂ⱼ + iγ⁰m − iV`
    DiracCoulomb,
    /// `iγ⁰∂₀ + iγʲ∂ⱼ − m + V`
    Covariant,
    /// `∂₀ + iγ⁰ω − iV`
    FwA,
    /// `∂₀ + iγ⁰ω − V`
    FwB,
}

impl EvolutionForm {
    pub const ALL: [EvolutionForm; 4] =
        [EvolutionForm::DiracCoulomb, EvolutionForm::Covariant, EvolutionForm::FwA, EvolutionForm::FwB];

    pub fn as_str(self) -> &'static str {
        match self {
            EvolutionForm::DiracCoulomb => "DIRAC-COULOMB",
            EvolutionForm::Covariant => "COVARIANT",
            EvolutionForm::FwA => "FW-A",
            EvolutionForm::FwB => "FW-B",
        }
    }
}

impl fmt::Display for EvolutionForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EvolutionForm {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().replace('_', "-").as_str() {
            "DIRAC-COULOMB" => Ok(EvolutionForm::DiracCoulomb),
            "COVARIANT" => Ok(EvolutionForm::Covariant),
            "FW-A" | "FWA" => Ok(EvolutionForm::FwA),
            "FW-B" | "FWB" => Ok(EvolutionForm::FwB),
            _ => Err(AlgebraError::UnknownForm(s.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StructuredEvolutionOp {
    form: EvolutionForm,
    coulomb: bool,
    terms: Vec<(RealLinearOp, BasisSymbol)>,
}

impl StructuredEvolutionOp {
    /// Builds `form` with mass `m`; `coulomb = false` drops the V term.
    pub fn build(form: EvolutionForm, coulomb: bool, m: &ExactScalar, g: &GammaSet) -> Self {
        let i = RealLinearOp::scalar(ExactScalar::i());
        let minus_i = RealLinearOp::scalar(-ExactScalar::i());
        let id = RealLinearOp::identity();
        let g0 = g.dirac(0);
        let ig0 = i.compose(g0);
        let mut terms = Vec::new();
        match form {
            EvolutionForm::DiracCoulomb => {
                terms.push((id.clone(), BasisSymbol::D0));
                for j in 1..=3 {
                    terms.push((g0.compose(g.dirac(j)), BasisSymbol::spatial(j)));
                }
                terms.push((ig0.scale(m), BasisSymbol::Unit));
                if coulomb {
                    terms.push((minus_i, BasisSymbol::Coulomb));
                }
            }
            EvolutionForm::Covariant => {
                terms.push((ig0, BasisSymbol::D0));
                for j in 1..=3 {
                    terms.push((i.compose(g.dirac(j)), BasisSymbol::spatial(j)));
                }
                terms.push((RealLinearOp::scalar(-m), BasisSymbol::Unit));
                if coulomb {
                    terms.push((id, BasisSymbol::Coulomb));
                }
            }
            EvolutionForm::FwA | EvolutionForm::FwB => {
                terms.push((id, BasisSymbol::D0));
                terms.push((ig0, BasisSymbol::Omega));
                if coulomb {
                    let v = if form == EvolutionForm::FwA { minus_i } else { RealLinearOp::scalar(ExactScalar::int(-1)) };
                    terms.push((v, BasisSymbol::Coulomb));
                }
            }
        }
        StructuredEvolutionOp { form, coulomb, terms }
    }

    pub fn form(&self) -> EvolutionForm {
        self.form
    }

    pub fn has_coulomb(&self) -> bool {
        self.coulomb
    }

    pub fn terms(&self) -> &[(RealLinearOp, BasisSymbol)] {
        &self.terms
    }

    pub fn label(&self) -> String {
        if self.coulomb {
            self.form.as_str().to_string()
        } else {
            format!("{} (free)", self.form.as_str())
        }
    }
}

/// Per-symbol residuals of `[q, d]`, in symbol order.
#[derive(Clone, Debug)]
pub struct CommutatorReport {
    pub residuals: Vec<(BasisSymbol, RealLinearOp)>,
}

impl CommutatorReport {
    pub fn commutes(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    pub fn failing_terms(&self) -> Vec<BasisSymbol> {
        self.residuals.iter().filter(|(_, r)| !r.is_zero()).map(|(b, _)| *b).collect()
    }
}

/// `[q, d] = Σₖ [q, cₖ] ⊗ bₖ`, collected per basis symbol.
pub fn formal_commutator(q: &RealLinearOp, d: &StructuredEvolutionOp) -> CommutatorReport {
    let mut residuals: Vec<(BasisSymbol, RealLinearOp)> = Vec::new();
    for (c, b) in &d.terms {
        let r = commutator(q, c);
        match residuals.iter_mut().find(|(s, _)| s == b) {
            Some((_, acc)) => *acc = &*acc + &r,
            None => residuals.push((*b, r)),
        }
    }
    residuals.sort_by_key(|(b, _)| *b);
    CommutatorReport { residuals }
}

pub fn sweep_invariance(ops: &[(String, RealLinearOp)], d: &StructuredEvolutionOp) -> Vec<(String, CommutatorReport)> {
    ops.iter().map(|(n, q)| (n.clone(), formal_commutator(q, d))).collect()
}

/// One operator's verdicts against two forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerdictRow {
    pub name: String,
    pub a: bool,
    pub b: bool,
}

impl VerdictRow {
    /// The two forms disagree on this operator.
    pub fn contested(&self) -> bool {
        self.a != self.b
    }
}

pub fn verdict_columns(
    ops: &[(String, RealLinearOp)],
    a: &StructuredEvolutionOp,
    b: &StructuredEvolutionOp,
) -> Vec<VerdictRow> {
    ops.iter()
        .map(|(n, q)| VerdictRow {
            name: n.clone(),
            a: formal_commutator(q, a).commutes(),
            b: formal_commutator(q, b).commutes(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{build_gamma_set, build_so8};

    fn forms() -> (GammaSet, ExactScalar) {
        (build_gamma_set(), ExactScalar::one())
    }

    #[test]
    fn i_commutes_with_fw_a() {
        let (g, m) = forms();
        let d = StructuredEvolutionOp::build(EvolutionForm::FwA, true, &m, &g);
        assert!(formal_commutator(&RealLinearOp::scalar(ExactScalar::i()), &d).commutes());
    }

    #[test]
    fn g5_splits_fw_forms_on_coulomb_term() {
        let (g, m) = forms();
        let a = StructuredEvolutionOp::build(EvolutionForm::FwA, true, &m, &g);
        let b = StructuredEvolutionOp::build(EvolutionForm::FwB, true, &m, &g);
        let ra = formal_commutator(g.gamma(5), &a);
        let rb = formal_commutator(g.gamma(5), &b);
        let v = |r: &CommutatorReport| r.residuals.iter().find(|(s, _)| *s == BasisSymbol::Coulomb).unwrap().1.clone();
        assert!(v(&rb).is_zero());
        // [γ⁵, −i] = −γ⁵ i + i γ⁵ = 2iγ⁵
        assert_eq!(v(&ra), g.gamma(5).scale(&ExactScalar::gaussian(0, 2, 1)));
    }

    #[test]
    fn s12_fails_against_free_dirac_form() {
        let (g, m) = forms();
        let d = StructuredEvolutionOp::build(EvolutionForm::DiracCoulomb, false, &m, &g);
        let s = build_so8(&g);
        let r = formal_commutator(s.get(1, 2), &d);
        assert!(!r.commutes());
        assert!(r.failing_terms().contains(&BasisSymbol::D1));
    }

    #[test]
    fn form_names_roundtrip() {
        for f in EvolutionForm::ALL {
            assert_eq!(f.as_str().parse::<EvolutionForm>().unwrap(), f);
        }
        assert!("FW-C".parse::<EvolutionForm>().is_err());
    }
}
