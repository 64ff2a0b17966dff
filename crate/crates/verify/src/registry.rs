//! Claim registry and orchestration.

use std::fmt;
use std::str::FromStr;

use dirac_algebra::clifford::{
    build_algebra31, build_clifford64, build_so6, build_so8, verify_algebra31, verify_anticommutation, verify_clifford64,
    verify_gamma_products, verify_so8, verify_so8_anti_hermitian, verify_su2_pair,
};
use dirac_algebra::equation::{formal_commutator, verdict_columns, EvolutionForm, StructuredEvolutionOp};
use dirac_algebra::lorentz::{build_lorentz, build_transition_w, hermiticity_table, verify_so13, verify_spin_block, LorentzLabel};
use dirac_algebra::pauli_gursey::verify_pauli_gursey;
use dirac_algebra::{ExactScalar, Hermiticity};
use dirac_spectral::fw::{
    compare_tilde_sets, conj_report, fw_coulomb_defect, verify_bosonic_tilde, verify_fw_unitary, verify_tilde_clifford,
    TildeReading,
};
use dirac_spectral::so4::verify_so4;
use dirac_spectral::{sommerfeld_energy, NumericCheck};

use crate::catalog::{Catalog, CatalogEntry};
use crate::claims::{format_f64, ClaimRecord, Evidence};
use crate::config::RunConfig;
use crate::context::Context;
use crate::report::Report;
use crate::VerifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Group {
    Algebra,
    So8,
    Lorentz,
    Known,
    Spectrum,
    Fw,
}

impl Group {
    pub const ALL: [Group; 6] = [Group::Algebra, Group::So8, Group::Lorentz, Group::Known, Group::Spectrum, Group::Fw];

    pub fn as_str(self) -> &'static str {
        match self {
            Group::Algebra => "algebra",
            Group::So8 => "so8",
            Group::Lorentz => "lorentz",
            Group::Known => "known",
            Group::Spectrum => "spectrum",
            Group::Fw => "fw",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Group {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Group::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| VerifyError::Config(format!("unknown claim group `{s}`")))
    }
}

/// Which claims a run executes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Groups(Vec<Group>),
    Ids(Vec<String>),
}

type Runner = fn(&Context, &CatalogEntry) -> Result<ClaimRecord, VerifyError>;

struct Registered {
    id: &'static str,
    group: Group,
    run: Runner,
}

macro_rules! reg {
    ($($id:literal => $group:ident, $f:ident;)*) => {
        &[$(Registered { id: $id, group: Group::$group, run: $f }),*]
    };
}

static REGISTRY: &[Registered] = reg! {
    "CL-ANTI-14" => Algebra, anti14;
    "CL-GAMMA-PROD" => Algebra, gamma_prod;
    "CL-CL64" => Algebra, cl64;
    "CL-SO8-19" => So8, so8_19;
    "CL-SU2-PAIR" => So8, su2_pair;
    "CL-31DIM" => So8, algebra31;
    "CL-31-FW-FREE" => So8, algebra31_fw_free;
    "CL-FWA-SO6" => So8, fwa_so6;
    "CL-FWB-SO6" => So8, fwb_so6;
    "CL-FW-VERDICT-31" => So8, verdict31;
    "CL-LOR-28-I" => Lorentz, lor_i;
    "CL-LOR-28-II" => Lorentz, lor_ii;
    "CL-LOR-28-TS" => Lorentz, lor_ts;
    "CL-LOR-28-V" => Lorentz, lor_v;
    "CL-LOR-26" => Lorentz, lor_26;
    "CL-LOR-HERM" => Lorentz, lor_herm;
    "CL-PG" => Known, pg;
    "CL-PG-COV" => Known, pg_cov;
    "CL-J-COM" => Known, j_com;
    "CL-K-COM" => Known, k_com;
    "CL-K-SQ" => Known, k_sq;
    "CL-JL-ANTI" => Known, jl_anti;
    "CL-JL-ANTI-RADIAL" => Known, jl_anti_radial;
    "CL-JL-COM" => Known, jl_com;
    "CL-JL-SQ" => Known, jl_sq;
    "CL-JL-PARTNER" => Known, jl_partner;
    "CL-NEG-CONTROL" => Known, neg_control;
    "CL-SO4" => Known, so4;
    "CL-SPEC-SOMMERFELD" => Spectrum, sommerfeld;
    "CL-SPEC-DEGEN" => Spectrum, degeneracy;
    "CL-FW-UNITARY" => Fw, fw_unitary;
    "CL-TILDE-CLIFF" => Fw, tilde_cliff;
    "CL-TILDE-ORACLE" => Fw, tilde_oracle;
    "CL-TILDE-FREE" => Fw, tilde_free;
    "CL-TILDE-COUL" => Fw, tilde_coul;
    "CL-TILDE-LOR" => Fw, tilde_lor;
    "CL-TILDE-ORACLE-SET" => Fw, tilde_oracle_set;
    "CL-TILDE-LITERAL" => Fw, tilde_literal;
    "CL-TILDE-CONJ" => Fw, tilde_conj;
    "CL-FW-COUL-DEFECT" => Fw, fw_coul_defect;
};

/// Every registered claim id with its group, in registry order.
pub fn registered_claims() -> Vec<(&'static str, Group)> {
    REGISTRY.iter().map(|r| (r.id, r.group)).collect()
}

/// Ids excluded by the form selector.
fn excluded_by_form(cfg: &RunConfig, id: &str) -> bool {
    (id == "CL-FWA-SO6" && !cfg.form.includes_a()) || (id == "CL-FWB-SO6" && !cfg.form.includes_b())
}

/// Resolves a selection to claim ids sorted by id.
pub fn select_claims(cfg: &RunConfig, sel: &Selection) -> Result<Vec<&'static str>, VerifyError> {
    let mut ids: Vec<&'static str> = match sel {
        Selection::All => REGISTRY.iter().map(|r| r.id).collect(),
        Selection::Groups(gs) => REGISTRY.iter().filter(|r| gs.contains(&r.group)).map(|r| r.id).collect(),
        Selection::Ids(want) => {
            let mut out = Vec::new();
            for w in want {
                let r = REGISTRY.iter().find(|r| r.id == w.trim()).ok_or_else(|| VerifyError::UnknownClaim(w.clone()))?;
                if excluded_by_form(cfg, r.id) {
                    return Err(VerifyError::Config(format!("{} is excluded by --form {}", r.id, cfg.form)));
                }
                out.push(r.id);
            }
            out
        }
    };
    ids.retain(|id| !excluded_by_form(cfg, id));
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

/// Runs the selected claims and assembles the report. Claims run in id
/// order against one shared context.
pub fn run_suite(cfg: &RunConfig, sel: &Selection) -> Result<Report, VerifyError> {
    cfg.validate()?;
    let ids = select_claims(cfg, sel)?;
    let cat = Catalog::bundled();
    let ctx = Context::new(cfg.clone());
    let mut records = Vec::with_capacity(ids.len());
    let mut timings = Vec::with_capacity(ids.len());
    for id in ids {
        let r = REGISTRY.iter().find(|r| r.id == id).expect("selected ids are registered");
        let entry = cat.get(id).ok_or_else(|| VerifyError::Catalog(format!("{id} has no catalog entry")))?;
        let start = std::time::Instant::now();
        records.push((r.run)(&ctx, entry)?);
        timings.push((id.to_string(), start.elapsed()));
    }
    Ok(Report::new(cfg.clone(), records, timings))
}

// ---------------------------------------------------------------- helpers

fn judged(checks: &[NumericCheck]) -> Vec<Evidence> {
    checks.iter().map(Evidence::judged).collect()
}

fn prefixed(prefix: &str, c: &NumericCheck) -> NumericCheck {
    NumericCheck { name: format!("{prefix}{}", c.name), ..c.clone() }
}

fn fw_free(ctx: &Context) -> StructuredEvolutionOp {
    StructuredEvolutionOp::build(EvolutionForm::FwA, false, &ExactScalar::one(), ctx.gammas())
}

fn named_check(checks: &[NumericCheck], name: &str) -> Result<NumericCheck, VerifyError> {
    checks
        .iter()
        .find(|c| c.name == name)
        .cloned()
        .ok_or_else(|| VerifyError::Config(format!("missing grid check `{name}`")))
}

// ---------------------------------------------------------------- algebra

fn anti14(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    Ok(ClaimRecord::from_exact(e, &verify_anticommutation(ctx.gammas())))
}

fn gamma_prod(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    Ok(ClaimRecord::from_exact(e, &verify_gamma_products(ctx.gammas())))
}

fn cl64(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    Ok(ClaimRecord::from_exact(e, &verify_clifford64(&build_clifford64(ctx.gammas()))))
}

// ---------------------------------------------------------------- so8

fn so8_19(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let s = build_so8(ctx.gammas());
    let mut rep = verify_so8(&s);
    rep.merge(verify_so8_anti_hermitian(&s));
    Ok(ClaimRecord::from_exact(e, &rep))
}

fn su2_pair(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let s = build_so8(ctx.gammas());
    Ok(ClaimRecord::from_exact(e, &verify_su2_pair(&s, &fw_free(ctx))))
}

fn algebra31(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    Ok(ClaimRecord::from_exact(e, &verify_algebra31(&build_algebra31(ctx.gammas()))))
}

fn algebra31_fw_free(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let d = fw_free(ctx);
    let mut ev = Vec::new();
    for el in build_algebra31(ctx.gammas()) {
        let cr = formal_commutator(&el.op, &d);
        let mut item = Evidence::relation(format!("[{}, {}] = 0", el.name, d.label()), cr.commutes());
        if !cr.commutes() {
            item = item.with_detail(format!("fails on {:?}", cr.failing_terms()));
        }
        // only elements without an antilinear part are asserted
        if !el.op.is_linear() {
            item = item.unjudged();
        }
        ev.push(item);
    }
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, vec!["antilinear elements are reported, linear ones judged".into()]))
}

fn so6_column(ctx: &Context, e: &CatalogEntry, form: EvolutionForm) -> Result<ClaimRecord, VerifyError> {
    let d = StructuredEvolutionOp::build(form, true, &ExactScalar::one(), ctx.gammas());
    let mut ev = Vec::new();
    for (name, q) in build_so6(ctx.gammas()) {
        let cr = formal_commutator(&q, &d);
        let mut item = Evidence::relation(format!("[{name}, {}] = 0", d.label()), cr.commutes());
        if !cr.commutes() {
            item = item.with_detail(format!("fails on {:?}", cr.failing_terms()));
        }
        ev.push(item);
    }
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

fn fwa_so6(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    so6_column(ctx, e, EvolutionForm::FwA)
}

fn fwb_so6(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    so6_column(ctx, e, EvolutionForm::FwB)
}

fn verdict31(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let g = ctx.gammas();
    let one = ExactScalar::one();
    let a = StructuredEvolutionOp::build(EvolutionForm::FwA, true, &one, g);
    let b = StructuredEvolutionOp::build(EvolutionForm::FwB, true, &one, g);
    let ops: Vec<_> = build_algebra31(g).into_iter().map(|n| (n.name, n.op)).collect();
    let word = |ok: bool| if ok { "commutes" } else { "fails" };
    let ev: Vec<Evidence> = verdict_columns(&ops, &a, &b)
        .into_iter()
        .map(|row| {
            Evidence::relation(format!("{}: FW-A and FW-B agree", row.name), !row.contested())
                .with_detail(format!("FW-A {}, FW-B {}", word(row.a), word(row.b)))
        })
        .collect();
    let n = 2 * ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

// ---------------------------------------------------------------- lorentz

fn lor(ctx: &Context, e: &CatalogEntry, label: LorentzLabel) -> Result<ClaimRecord, VerifyError> {
    Ok(ClaimRecord::from_exact(e, &verify_so13(&build_lorentz(ctx.gammas(), label))))
}

fn lor_i(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    lor(ctx, e, LorentzLabel::I)
}

fn lor_ii(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    lor(ctx, e, LorentzLabel::II)
}

fn lor_ts(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    lor(ctx, e, LorentzLabel::TS)
}

fn lor_v(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    lor(ctx, e, LorentzLabel::V)
}

fn lor_26(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let ts = build_lorentz(ctx.gammas(), LorentzLabel::TS);
    Ok(ClaimRecord::from_exact(e, &verify_spin_block(&build_transition_w(), &ts)?))
}

fn lor_herm(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let mut ev = Vec::new();
    for label in LorentzLabel::ALL {
        let set = build_lorentz(ctx.gammas(), label);
        for ((mu, nu), h) in hermiticity_table(&set) {
            ev.push(
                Evidence::relation(format!("s_{label}^{mu}{nu} anti-hermitian"), h == Hermiticity::AntiHermitian)
                    .with_detail(h.as_str()),
            );
        }
    }
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

// ---------------------------------------------------------------- known

fn pg(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    Ok(ClaimRecord::from_exact(e, &verify_pauli_gursey(ctx.gammas()).closure))
}

fn pg_cov(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let rep = verify_pauli_gursey(ctx.gammas());
    let ev: Vec<Evidence> = rep
        .covariance
        .iter()
        .map(|(name, cr)| {
            let item = Evidence::relation(format!("[{name}, covariant operator] = 0"), cr.commutes());
            if cr.commutes() {
                item
            } else {
                item.with_detail(format!("fails on {:?}", cr.failing_terms()))
            }
        })
        .collect();
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

fn grid_claim(ctx: &Context, e: &CatalogEntry, names: &[&str]) -> Result<ClaimRecord, VerifyError> {
    let checks = ctx.constants_of_motion()?;
    let ev = names.iter().map(|n| named_check(checks, n).map(|c| Evidence::judged(&c))).collect::<Result<Vec<_>, _>>()?;
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, vec![grid_note(ctx)]))
}

fn grid_note(ctx: &Context) -> String {
    let c = &ctx.cfg;
    format!(
        "worst case over {} test states on a {}^3 grid, box {}",
        c.ensemble.states,
        c.grid,
        format_f64(c.box_len)
    )
}

fn j_com(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    grid_claim(ctx, e, &["[J1, H]", "[J2, H]", "[J3, H]"])
}

fn k_com(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    grid_claim(ctx, e, &["[K, H]"])
}

fn k_sq(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    grid_claim(ctx, e, &["K^2 = J^2 + 1/4"])
}

fn jl_anti(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    grid_claim(ctx, e, &["{K, D} = 0"])
}

fn neg_control(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    grid_claim(ctx, e, &["negative control [M, H]"])
}

/// Radial JL checks whose names match, one evidence line per state.
fn jl_evidence(ctx: &Context, names: &[&str]) -> Result<Vec<Evidence>, VerifyError> {
    let mut ev = Vec::new();
    for rep in ctx.johnson_lippmann()? {
        for c in rep.checks.iter().filter(|c| names.contains(&c.name.as_str())) {
            ev.push(Evidence::judged(&prefixed(&format!("n={} kappa={}: ", rep.n, rep.kappa), c)));
        }
    }
    Ok(ev)
}

fn jl_anti_radial(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let ev = jl_evidence(ctx, &["{K, D} psi"])?;
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, vec!["closed-form radial operators sampled on the solved states".into()]))
}

fn jl_com(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let mut ev = jl_evidence(ctx, &["[D, H] psi"])?;
    let n = ev.len();
    // the grid measurement of [D, H] is published alongside
    let grid = named_check(ctx.constants_of_motion()?, "[D, H]")?;
    ev.push(Evidence::reported(&prefixed("grid: ", &grid)));
    Ok(ClaimRecord::new(e, ev, n, vec!["judged on the radial states; grid value is reported only".into()]))
}

fn jl_sq(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let mut ev = jl_evidence(ctx, &["D^2 psi = lambda psi", "<D psi, D psi> = lambda"])?;
    let n = ev.len();
    for rep in ctx.johnson_lippmann()? {
        ev.push(Evidence::value(format!("n={} kappa={}: lambda", rep.n, rep.kappa), rep.lambda));
    }
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

fn jl_partner(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let mut ev = jl_evidence(ctx, &["|<psi, D psi>|", "partner energy", "D psi outside the degenerate pair"])?;
    let n = ev.len();
    for rep in ctx.johnson_lippmann()? {
        if let Some(d) = rep.partner_element {
            ev.push(Evidence::value(format!("n={} kappa={}: |<partner, D psi>|", rep.n, rep.kappa), d.norm()));
        }
    }
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

fn so4(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let rep = verify_so4(ctx.radial_states()?, ctx.cfg.mass, ctx.cfg.zalpha, ctx.cfg.tolerances.so4)?;
    let mut ev = Vec::new();
    for b in &rep.blocks {
        let prefix = format!("n={} 2j={}: ", b.n, b.two_j);
        ev.extend(b.checks.iter().map(|c| Evidence::judged(&prefixed(&prefix, c))));
        ev.extend(b.observed.iter().map(|c| Evidence::reported(&prefixed(&prefix, c))));
    }
    let n = ev.iter().filter(|e| e.judged).count();
    let mut notes = Vec::new();
    if !rep.incomplete.is_empty() {
        let list: Vec<String> = rep.incomplete.iter().map(|(n, k)| format!("(n={n}, kappa={k})")).collect();
        notes.push(format!("levels without a full multiplet skipped: {}", list.join(", ")));
    }
    Ok(ClaimRecord::new(e, ev, n, notes))
}

// ---------------------------------------------------------------- spectrum

fn sommerfeld(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let cfg = &ctx.cfg;
    let mut ev = Vec::new();
    for s in ctx.radial_states()? {
        let want = sommerfeld_energy(s.n, s.kappa, cfg.mass, cfg.zalpha)?;
        let rel = ((s.energy - want) / want).abs();
        let c = NumericCheck::at_most(format!("n={} kappa={}", s.n, s.kappa), rel, cfg.tolerances.sommerfeld);
        ev.push(Evidence::judged(&c).with_detail(format!("E = {}", format_f64(s.energy))));
    }
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, vec!["relative error against the closed form".into()]))
}

fn degeneracy(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let states = ctx.radial_states()?;
    let tol = ctx.cfg.tolerances.degeneracy;
    let mut ev = Vec::new();
    for s in states.iter().filter(|s| s.kappa < 0) {
        if let Some(p) = states.iter().find(|p| p.n == s.n && p.kappa == -s.kappa) {
            let rel = ((s.energy - p.energy) / s.energy).abs();
            ev.push(Evidence::judged(&NumericCheck::at_most(
                format!("E({}, {}) = E({}, {})", s.n, s.kappa, p.n, p.kappa),
                rel,
                tol,
            )));
        }
    }
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

// ---------------------------------------------------------------- fw

fn fw_unitary(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let rep = verify_fw_unitary(ctx.fw_layer()?, ctx.fw_ensemble()?);
    let mut ev = judged(&[rep.unitarity, rep.rest_frame, rep.diagonalises]);
    ev.push(Evidence::value("unitarity defect with alpha.p in the numerator", rep.alpha_form_defect));
    Ok(ClaimRecord::new(e, ev, 3, Vec::new()))
}

fn printed(ctx: &Context) -> Result<&dirac_spectral::fw::TildeGammaSet, VerifyError> {
    ctx.tilde_set(TildeReading::Momentum)
}

fn tilde_cliff(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let checks = verify_tilde_clifford(printed(ctx)?, ctx.fw_ensemble()?, ctx.cfg.tolerances.exact_numeric);
    let n = checks.len();
    Ok(ClaimRecord::new(e, judged(&checks), n, vec!["printed formulas, derivatives read as momentum".into()]))
}

fn tilde_oracle(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let oracle = ctx.tilde_set(TildeReading::Oracle)?;
    let checks = compare_tilde_sets(printed(ctx)?, oracle, ctx.fw_ensemble()?, ctx.cfg.tolerances.exact_numeric);
    let n = checks.len();
    Ok(ClaimRecord::new(e, judged(&checks), n, vec!["per-component distance to U^-1 (.) U".into()]))
}

fn tilde_free(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let ev: Vec<Evidence> = ctx.tilde_invariance(TildeReading::Momentum)?.iter().map(|r| Evidence::judged(&r.free)).collect();
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

fn tilde_coul(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let mut ev: Vec<Evidence> =
        ctx.tilde_invariance(TildeReading::Momentum)?.iter().map(|r| Evidence::judged(&r.coulomb)).collect();
    let n = ev.len();
    for r in ctx.tilde_invariance(TildeReading::Oracle)? {
        ev.push(Evidence::reported(&prefixed("oracle: ", &r.coulomb)));
    }
    Ok(ClaimRecord::new(e, ev, n, vec!["residual of the evolution operator, stationary part iH".into()]))
}

fn bosonic_evidence(ctx: &Context, reading: TildeReading) -> Result<Vec<Evidence>, VerifyError> {
    let set = ctx.tilde_set(reading)?;
    let rep = verify_bosonic_tilde(ctx.fw_layer()?, set, ctx.fw_ensemble()?, ctx.cfg.tolerances.exact_numeric);
    let mut ev = Vec::new();
    for (label, checks) in &rep.brackets {
        ev.extend(checks.iter().map(|c| Evidence::judged(&prefixed(&format!("{label}: "), c))));
    }
    ev.push(Evidence::judged(&rep.casimir));
    ev.push(Evidence::judged(&rep.scalar_generator));
    Ok(ev)
}

fn tilde_lor(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let ev = bosonic_evidence(ctx, TildeReading::Momentum)?;
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

fn conj_checks(ctx: &Context, reading: TildeReading) -> Result<[NumericCheck; 2], VerifyError> {
    let rep = conj_report(ctx.tilde_set(reading)?, ctx.fw_ensemble()?);
    let tol = ctx.cfg.tolerances.exact_numeric;
    Ok([
        NumericCheck::at_most("C~^2 = 1", rep.square_minus_identity, tol),
        NumericCheck::at_most("|C~ psi| = |psi|", rep.norm_defect, tol),
    ])
}

fn tilde_oracle_set(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let set = ctx.tilde_set(TildeReading::Oracle)?;
    let states = ctx.fw_ensemble()?;
    let tol = ctx.cfg.tolerances.exact_numeric;
    let mut ev = judged(&verify_tilde_clifford(set, states, tol));
    ev.extend(ctx.tilde_invariance(TildeReading::Oracle)?.iter().map(|r| Evidence::judged(&r.free)));
    ev.extend(bosonic_evidence(ctx, TildeReading::Oracle)?);
    ev.extend(judged(&conj_checks(ctx, TildeReading::Oracle)?));
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

fn tilde_literal(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let set = ctx.tilde_set(TildeReading::Literal)?;
    let states = ctx.fw_ensemble()?;
    let tol = ctx.cfg.tolerances.exact_numeric;
    let mut ev: Vec<Evidence> =
        verify_tilde_clifford(set, states, tol).iter().map(|c| Evidence::judged(&prefixed("clifford: ", c))).collect();
    let oracle = ctx.tilde_set(TildeReading::Oracle)?;
    ev.extend(compare_tilde_sets(set, oracle, states, tol).iter().map(|c| Evidence::judged(&prefixed("oracle distance: ", c))));
    let n = ev.len();
    Ok(ClaimRecord::new(e, ev, n, Vec::new()))
}

fn tilde_conj(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let ev = judged(&conj_checks(ctx, TildeReading::Momentum)?);
    Ok(ClaimRecord::new(e, ev, 2, vec!["printed C~; the oracle C~ is covered by CL-TILDE-ORACLE-SET".into()]))
}

fn fw_coul_defect(ctx: &Context, e: &CatalogEntry) -> Result<ClaimRecord, VerifyError> {
    let d = fw_coulomb_defect(ctx.fw_layer()?, ctx.fw_ensemble()?);
    let c = NumericCheck::at_most("|(U H U^-1 - (g0 omega - V)) psi| / |psi|", d, ctx.cfg.tolerances.potential);
    Ok(ClaimRecord::new(e, vec![Evidence::judged(&c)], 1, Vec::new()))
}
