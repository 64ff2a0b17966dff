//! Johnson–Lippmann checks on radial eigenstates.
//!
//! A spinor in the (κ, −κ) sector is kept as four radial slots
//! `(u₁, l₁, u₂, l₂)` meaning `(u₁Ω_κ + u₂Ω_{−κ}, l₁Ω_{−κ} + l₂Ω_κ)`. Each
//! slot is a finite sum `Σ r^p (a_p G + b_p F)` over the radial functions of
//! one eigenstate, and derivatives are taken through the radial equations,
//! so operator products stay symbolic until they are sampled.

use std::collections::BTreeMap;

use crate::check::NumericCheck;
use crate::num::C64;
use crate::radial::RadialState;
use crate::SpectralError;

const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Parameters of the radial equations the slots refer to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadialContext {
    pub kappa: i32,
    pub energy: f64,
    pub mass: f64,
    pub zalpha: f64,
}

/// `Σ_p r^p (a_p G + b_p F)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RadialExpr {
    terms: BTreeMap<i32, [C64; 2]>,
}

impl RadialExpr {
    pub fn term(p: i32, a: C64, b: C64) -> Self {
        let mut e = RadialExpr::default();
        e.push(p, a, b);
        e
    }

    fn push(&mut self, p: i32, a: C64, b: C64) {
        let t = self.terms.entry(p).or_insert([ZERO; 2]);
        t[0] += a;
        t[1] += b;
    }

    pub fn add(&self, o: &RadialExpr) -> RadialExpr {
        let mut out = self.clone();
        for (&p, t) in &o.terms {
            out.push(p, t[0], t[1]);
        }
        out
    }

    pub fn scale(&self, c: C64) -> RadialExpr {
        RadialExpr { terms: self.terms.iter().map(|(&p, t)| (p, [t[0] * c, t[1] * c])).collect() }
    }

    /// Multiplication by r^q.
    pub fn shift(&self, q: i32) -> RadialExpr {
        RadialExpr { terms: self.terms.iter().map(|(&p, &t)| (p + q, t)).collect() }
    }

    /// d/dr through `G' = −κG/r + (E + m + Zα/r)F`, `F' = κF/r − (E − m + Zα/r)G`.
    pub fn deriv(&self, ctx: &RadialContext) -> RadialExpr {
        let k = ctx.kappa as f64;
        let (ep, em, za) = (ctx.energy + ctx.mass, ctx.energy - ctx.mass, ctx.zalpha);
        let mut out = RadialExpr::default();
        for (&p, &[a, b]) in &self.terms {
            let pf = p as f64;
            out.push(p - 1, a * (pf - k) - b * za, a * za + b * (pf + k));
            out.push(p, -b * em, a * ep);
        }
        out
    }

    pub fn eval(&self, r: f64, g: f64, f: f64) -> C64 {
        self.terms.iter().map(|(&p, t)| (t[0] * g + t[1] * f) * r.powi(p)).sum()
    }
}

/// Slots `(u₁, l₁, u₂, l₂)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RadialSpinor {
    pub slots: [RadialExpr; 4],
}

impl RadialSpinor {
    /// The eigenstate itself: `u₁ = G/r`, `l₁ = iF/r`.
    pub fn eigenstate() -> Self {
        RadialSpinor {
            slots: [RadialExpr::term(-1, C64::new(1.0, 0.0), ZERO), RadialExpr::term(-1, ZERO, I), Default::default(), Default::default()],
        }
    }

    fn map(&self, f: impl Fn(&RadialExpr) -> RadialExpr) -> Self {
        RadialSpinor { slots: std::array::from_fn(|i| f(&self.slots[i])) }
    }

    pub fn add(&self, o: &RadialSpinor) -> Self {
        RadialSpinor { slots: std::array::from_fn(|i| self.slots[i].add(&o.slots[i])) }
    }

    pub fn sub(&self, o: &RadialSpinor) -> Self {
        self.add(&o.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: C64) -> Self {
        self.map(|e| e.scale(c))
    }
}

/// Operators acting on the slot representation.
pub struct RadialOps {
    pub ctx: RadialContext,
}

impl RadialOps {
    fn dirac_term(&self, e: &RadialExpr, c: f64) -> RadialExpr {
        e.deriv(&self.ctx).add(&e.shift(-1).scale(C64::new(c, 0.0))).scale(I)
    }

    /// α·p, from `σ·p (uΩ_κ) = i(u' + (1 + κ)u/r)Ω_{−κ}`.
    pub fn alpha_p(&self, s: &RadialSpinor) -> RadialSpinor {
        let k = self.ctx.kappa as f64;
        let [u1, l1, u2, l2] = &s.slots;
        RadialSpinor {
            slots: [
                self.dirac_term(l1, 1.0 - k),
                self.dirac_term(u1, 1.0 + k),
                self.dirac_term(l2, 1.0 + k),
                self.dirac_term(u2, 1.0 - k),
            ],
        }
    }

    pub fn beta(&self, s: &RadialSpinor) -> RadialSpinor {
        let n = C64::new(-1.0, 0.0);
        let [u1, l1, u2, l2] = &s.slots;
        RadialSpinor { slots: [u1.clone(), l1.scale(n), u2.clone(), l2.scale(n)] }
    }

    /// Σ·r̂, with `σ·r̂ Ω_κ = −Ω_{−κ}`.
    pub fn sigma_rhat(&self, s: &RadialSpinor) -> RadialSpinor {
        let n = C64::new(-1.0, 0.0);
        let [u1, l1, u2, l2] = &s.slots;
        RadialSpinor { slots: [u2.scale(n), l2.scale(n), u1.scale(n), l1.scale(n)] }
    }

    /// γ⁴ = γ⁰γ¹γ²γ³, which swaps upper and lower components with factor −i.
    pub fn gamma4(&self, s: &RadialSpinor) -> RadialSpinor {
        let [u1, l1, u2, l2] = &s.slots;
        RadialSpinor { slots: [l2.scale(-I), u2.scale(-I), l1.scale(-I), u1.scale(-I)] }
    }

    /// K = γ⁰(2s·L + 1) is −κ on `Ω_κ` upper and `Ω_{−κ}` lower.
    pub fn k(&self, s: &RadialSpinor) -> RadialSpinor {
        let k = self.ctx.kappa as f64;
        let [u1, l1, u2, l2] = &s.slots;
        RadialSpinor {
            slots: [u1.scale(C64::new(-k, 0.0)), l1.scale(C64::new(-k, 0.0)), u2.scale(C64::new(k, 0.0)), l2.scale(C64::new(k, 0.0))],
        }
    }

    pub fn h(&self, s: &RadialSpinor) -> RadialSpinor {
        let za = self.ctx.zalpha;
        self.alpha_p(s).add(&self.beta(s).scale(C64::new(self.ctx.mass, 0.0))).add(&s.map(|e| e.shift(-1).scale(C64::new(-za, 0.0))))
    }

    /// `D = Σ·r̂ + (1/(mZα)) K γ⁴ (H − γ⁰m)`.
    pub fn d(&self, s: &RadialSpinor) -> RadialSpinor {
        let shifted = self.h(s).sub(&self.beta(s).scale(C64::new(self.ctx.mass, 0.0)));
        let tail = self.k(&self.gamma4(&shifted)).scale(C64::new(1.0 / (self.ctx.mass * self.ctx.zalpha), 0.0));
        self.sigma_rhat(s).add(&tail)
    }
}

/// Samples of a slot spinor over the state's radial grid.
pub struct SampledSpinor {
    pub slots: [Vec<C64>; 4],
}

impl SampledSpinor {
    pub fn sample(s: &RadialSpinor, state: &RadialState) -> Self {
        SampledSpinor {
            slots: std::array::from_fn(|k| {
                state.grid.r.iter().enumerate().map(|(i, &r)| s.slots[k].eval(r, state.g[i], state.f[i])).collect()
            }),
        }
    }

    /// Partner state `(n, −κ)` placed in the second channel:
    /// `u₂ = G'/r`, `l₂ = iF'/r`.
    pub fn partner(state: &RadialState) -> Self {
        let r = &state.grid.r;
        let zero = vec![ZERO; r.len()];
        SampledSpinor {
            slots: [
                zero.clone(),
                zero,
                r.iter().zip(&state.g).map(|(r, g)| C64::new(g / r, 0.0)).collect(),
                r.iter().zip(&state.f).map(|(r, f)| C64::new(0.0, f / r)).collect(),
            ],
        }
    }

    /// `⟨self, o⟩ = Σ_slots ∫ conj(a)·b r² dr`.
    pub fn inner(&self, o: &SampledSpinor, state: &RadialState) -> C64 {
        let re = state.grid.integrate(|i| {
            let r2 = state.grid.r[i] * state.grid.r[i];
            (0..4).map(|k| (self.slots[k][i].conj() * o.slots[k][i]).re).sum::<f64>() * r2
        });
        let im = state.grid.integrate(|i| {
            let r2 = state.grid.r[i] * state.grid.r[i];
            (0..4).map(|k| (self.slots[k][i].conj() * o.slots[k][i]).im).sum::<f64>() * r2
        });
        C64::new(re, im)
    }

    pub fn norm(&self, state: &RadialState) -> f64 {
        self.inner(self, state).re.max(0.0).sqrt()
    }

    pub fn axpy(&self, c: C64, o: &SampledSpinor) -> SampledSpinor {
        SampledSpinor { slots: std::array::from_fn(|k| self.slots[k].iter().zip(&o.slots[k]).map(|(a, b)| a + c * b).collect()) }
    }
}

/// `1 + (E²/m² − 1)κ²/(Zα)²`.
pub fn d_squared_eigenvalue(energy: f64, mass: f64, kappa: i32, zalpha: f64) -> f64 {
    let k2 = (kappa as f64).powi(2);
    1.0 + ((energy / mass).powi(2) - 1.0) * k2 / (zalpha * zalpha)
}

#[derive(Clone, Debug)]
pub struct JlStateReport {
    pub n: u32,
    pub kappa: i32,
    pub lambda: f64,
    /// `⟨ψ(n, −κ), Dψ(n, κ)⟩`, when the partner exists.
    pub partner_element: Option<C64>,
    pub checks: Vec<NumericCheck>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JlTolerances {
    /// Symbolic identities evaluated on the radial grid.
    pub identity: f64,
    /// Checks that depend on the accuracy of the radial solutions.
    pub eigen: f64,
}

impl Default for JlTolerances {
    fn default() -> Self {
        JlTolerances { identity: 1e-8, eigen: 1e-6 }
    }
}

/// Checks (a)–(d) on every state with κ < 0. A missing partner is an
/// error except for κ = −n, whose multiplet has a single κ.
pub fn verify_johnson_lippmann(
    states: &[RadialState],
    mass: f64,
    zalpha: f64,
    tol: &JlTolerances,
) -> Result<Vec<JlStateReport>, SpectralError> {
    let mut out = Vec::new();
    let same_energy = |a: &RadialState, b: &RadialState| (a.energy - b.energy).abs() <= 1e-12 * mass;
    if !states.iter().any(|s| states.iter().any(|t| t.n == s.n && t.kappa == -s.kappa && same_energy(s, t))) {
        return Err(SpectralError::InvalidParameter("no degenerate κ-pair among the states".into()));
    }
    for st in states.iter().filter(|s| s.kappa < 0) {
        let partner = states.iter().find(|t| t.n == st.n && t.kappa == -st.kappa);
        if partner.is_none() && st.kappa != -(st.n as i32) {
            return Err(SpectralError::MissingPartner { n: st.n, kappa: st.kappa, partner: -st.kappa });
        }
        let ops = RadialOps { ctx: RadialContext { kappa: st.kappa, energy: st.energy, mass, zalpha } };
        let psi = RadialSpinor::eigenstate();
        let hpsi = ops.h(&psi);
        let dpsi = ops.d(&psi);
        let sample = |s: &RadialSpinor| SampledSpinor::sample(s, st);
        let psi_s = sample(&psi);
        let norm_psi = psi_s.norm(st);
        let d_s = sample(&dpsi);
        let norm_d = d_s.norm(st);
        let lambda = d_squared_eigenvalue(st.energy, mass, st.kappa, zalpha);
        let mut checks = Vec::new();
        let comm = ops.d(&hpsi).sub(&ops.h(&dpsi));
        checks.push(NumericCheck::at_most("[D, H] psi", sample(&comm).norm(st) / sample(&hpsi).norm(st), tol.identity));
        let anti = ops.k(&dpsi).add(&ops.d(&ops.k(&psi)));
        checks.push(NumericCheck::at_most("{K, D} psi", sample(&anti).norm(st) / norm_d.max(norm_psi), tol.identity));
        let dd = ops.d(&dpsi).sub(&psi.scale(C64::new(lambda, 0.0)));
        checks.push(NumericCheck::at_most("D^2 psi = lambda psi", sample(&dd).norm(st) / norm_psi, tol.eigen));
        checks.push(NumericCheck::at_most("<D psi, D psi> = lambda", (norm_d * norm_d - lambda).abs(), tol.eigen));
        let a = psi_s.inner(&d_s, st) / (norm_psi * norm_psi);
        let mut rest = d_s.axpy(-a, &psi_s);
        let mut partner_element = None;
        if let Some(p) = partner {
            let p_s = SampledSpinor::partner(p);
            let b = p_s.inner(&d_s, st);
            rest = rest.axpy(-b, &p_s);
            partner_element = Some(b);
            checks.push(NumericCheck::at_most("|<psi, D psi>|", a.norm(), tol.eigen));
            checks.push(NumericCheck::at_most("partner energy", (p.energy - st.energy).abs() / mass, 1e-12));
        }
        checks.push(NumericCheck::at_most(
            "D psi outside the degenerate pair",
            rest.norm(st) / norm_d.max(norm_psi),
            tol.eigen,
        ));
        out.push(JlStateReport { n: st.n, kappa: st.kappa, lambda, partner_element, checks });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> RadialContext {
        RadialContext { kappa: -1, energy: 0.99, mass: 1.0, zalpha: 0.1 }
    }

    #[test]
    fn k_squares_to_kappa_squared() {
        let ops = RadialOps { ctx: RadialContext { kappa: 2, ..ctx() } };
        let psi = RadialSpinor::eigenstate();
        let k2 = ops.k(&ops.k(&psi));
        assert_eq!(k2, psi.scale(C64::new(4.0, 0.0)));
    }

    #[test]
    fn gamma4_squares_to_minus_one() {
        let ops = RadialOps { ctx: ctx() };
        let psi = RadialSpinor::eigenstate();
        assert_eq!(ops.gamma4(&ops.gamma4(&psi)), psi.scale(C64::new(-1.0, 0.0)));
    }

    #[test]
    fn hamiltonian_is_energy_on_eigenstate() {
        let ops = RadialOps { ctx: ctx() };
        let psi = RadialSpinor::eigenstate();
        let diff = ops.h(&psi).sub(&psi.scale(C64::new(0.99, 0.0)));
        for slot in &diff.slots {
            for t in slot.terms.values() {
                assert!(t[0].norm() < 1e-14 && t[1].norm() < 1e-14);
            }
        }
    }
}
