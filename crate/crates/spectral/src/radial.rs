//! Bound states of the radial Dirac–Coulomb pair on a logarithmic grid.
//!
//! With `G = r·g`, `F = r·f` and `t = ln r`:
//!
//! ```text
//! dG/dt = −κG + (r(E + m) + Zα)F
//! dF/dt =  κF − (r(E − m) + Zα)G
//! ```
//!
//! Energies come from bisection on the node count of G; the closed form is
//! never consulted by the solver.

use std::sync::Arc;

use crate::SpectralError;

#[derive(Clone, Debug, PartialEq)]
pub struct RadialConfig {
    pub r_min: f64,
    /// Outer edge in units of the Bohr radius `1/(mZα)`, scaled by n_max.
    pub r_max_bohr: f64,
    pub dt: f64,
    /// Bisection stops when the bracket is below this fraction of m.
    pub energy_tol: f64,
    pub max_bisections: usize,
}

impl Default for RadialConfig {
    fn default() -> Self {
        RadialConfig { r_min: 1e-8, r_max_bohr: 60.0, dt: 0.004, energy_tol: 1e-15, max_bisections: 200 }
    }
}

/// Shared log-spaced abscissae `r_i = r_min·e^{i·dt}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialGrid {
    pub t0: f64,
    pub dt: f64,
    pub r: Vec<f64>,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, dt: f64) -> Self {
        let t0 = r_min.ln();
        let steps = ((r_max.ln() - t0) / dt).ceil() as usize;
        RadialGrid { t0, dt, r: (0..=steps).map(|i| (t0 + i as f64 * dt).exp()).collect() }
    }

    /// `∫ f dr = ∫ f·r dt`, trapezoid rule.
    pub fn integrate(&self, f: impl Fn(usize) -> f64) -> f64 {
        let n = self.r.len();
        let mut s = 0.0;
        for i in 0..n {
            let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            s += w * f(i) * self.r[i];
        }
        s * self.dt
    }
}

#[derive(Clone, Debug)]
pub struct RadialState {
    pub n: u32,
    pub kappa: i32,
    pub energy: f64,
    pub grid: Arc<RadialGrid>,
    pub g: Vec<f64>,
    pub f: Vec<f64>,
    /// Relative jump of F at the matching radius after splicing on G.
    pub match_mismatch: f64,
    pub bisections: usize,
}

impl RadialState {
    /// `∫(F² + G²) dr`.
    pub fn norm_sq(&self) -> f64 {
        self.grid.integrate(|i| self.g[i] * self.g[i] + self.f[i] * self.f[i])
    }

    /// Orbital angular momentum of the large component.
    pub fn l(&self) -> u32 {
        orbital_l(self.kappa)
    }

    /// `j + ½ = |κ|`.
    pub fn j_plus_half(&self) -> u32 {
        self.kappa.unsigned_abs()
    }
}

pub fn orbital_l(kappa: i32) -> u32 {
    if kappa > 0 {
        kappa as u32
    } else {
        (-kappa - 1) as u32
    }
}

/// Whether `(n, κ)` labels a bound state.
pub fn is_valid_state(n: u32, kappa: i32) -> bool {
    n >= 1 && kappa != 0 && orbital_l(kappa) < n
}

/// `E/m = [1 + (Zα/(n − |κ| + √(κ² − Z²α²)))²]^{−1/2}`, times m.
pub fn sommerfeld_energy(n: u32, kappa: i32, m: f64, zalpha: f64) -> Result<f64, SpectralError> {
    if !(zalpha > 0.0 && zalpha < 1.0) {
        return Err(SpectralError::CouplingOutOfRange(zalpha));
    }
    if !is_valid_state(n, kappa) {
        return Err(SpectralError::NoSuchState { n, kappa });
    }
    let k = kappa.unsigned_abs() as f64;
    let gamma = (k * k - zalpha * zalpha).sqrt();
    let x = zalpha / (n as f64 - k + gamma);
    Ok(m / (1.0 + x * x).sqrt())
}

struct Ode {
    kappa: f64,
    e: f64,
    m: f64,
    za: f64,
}

impl Ode {
    fn deriv(&self, t: f64, y: [f64; 2]) -> [f64; 2] {
        let r = t.exp();
        [
            -self.kappa * y[0] + (r * (self.e + self.m) + self.za) * y[1],
            self.kappa * y[1] - (r * (self.e - self.m) + self.za) * y[0],
        ]
    }

    fn rk4(&self, t: f64, y: [f64; 2], h: f64) -> [f64; 2] {
        let add = |a: [f64; 2], b: [f64; 2], s: f64| [a[0] + s * b[0], a[1] + s * b[1]];
        let k1 = self.deriv(t, y);
        let k2 = self.deriv(t + 0.5 * h, add(y, k1, 0.5 * h));
        let k3 = self.deriv(t + 0.5 * h, add(y, k2, 0.5 * h));
        let k4 = self.deriv(t + h, add(y, k3, h));
        [
            y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        ]
    }

    /// Regular solution `G ~ r^γ` at the first grid point.
    fn origin(&self, r0: f64) -> [f64; 2] {
        let gamma = (self.kappa * self.kappa - self.za * self.za).sqrt();
        let g = r0.powf(gamma);
        [g, (gamma + self.kappa) / self.za * g]
    }
}

/// Sign changes of G on outward integration over the whole grid.
fn count_nodes(ode: &Ode, grid: &RadialGrid) -> usize {
    let mut y = ode.origin(grid.r[0]);
    let mut nodes = 0;
    for i in 0..grid.r.len() - 1 {
        let next = ode.rk4(grid.t0 + i as f64 * grid.dt, y, grid.dt);
        if next[0] == 0.0 || next[0].signum() != y[0].signum() {
            nodes += 1;
        }
        y = next;
        let s = y[0].abs().max(y[1].abs());
        if s > 1e100 {
            y = [y[0] / s, y[1] / s];
        }
    }
    nodes
}

/// Solves one state on a shared grid.
pub fn solve_state(
    n: u32,
    kappa: i32,
    m: f64,
    zalpha: f64,
    grid: &Arc<RadialGrid>,
    cfg: &RadialConfig,
) -> Result<RadialState, SpectralError> {
    if !(zalpha > 0.0 && zalpha < 1.0) {
        return Err(SpectralError::CouplingOutOfRange(zalpha));
    }
    if !is_valid_state(n, kappa) {
        return Err(SpectralError::NoSuchState { n, kappa });
    }
    let fail = |detail: String| SpectralError::RadialNonConvergence { n, kappa, detail };
    let target = (n - orbital_l(kappa) - 1) as usize;
    // every bound level lies in [m(1 − Z²α²), m)
    let mut lo = m * (1.0 - zalpha * zalpha);
    let mut hi = m;
    let ode_at = |e: f64| Ode { kappa: kappa as f64, e, m, za: zalpha };
    if count_nodes(&ode_at(lo), grid) > target {
        return Err(fail(format!("lower energy bound already has more than {target} nodes")));
    }
    let mut bisections = 0;
    while hi - lo > cfg.energy_tol * m {
        if bisections == cfg.max_bisections {
            return Err(fail(format!("bracket [{lo}, {hi}] after {bisections} bisections")));
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_nodes(&ode_at(mid), grid) > target {
            hi = mid;
        } else {
            lo = mid;
        }
        bisections += 1;
    }
    let e = 0.5 * (lo + hi);
    if !(e > 0.0 && e < m) || hi >= m {
        return Err(fail(format!("energy {e} escaped (0, m)")));
    }
    let ode = ode_at(e);
    let len = grid.r.len();
    let lambda = (m * m - e * e).sqrt();
    let r_tp = zalpha / (m - e);
    let i_match = grid.r.iter().position(|&r| r >= r_tp).unwrap_or(len - 1).clamp(1, len - 2);
    // inward start where the tail has decayed by e^{−45}
    let i_end = grid.r.iter().position(|&r| lambda * r > 45.0).unwrap_or(len - 1).max(i_match + 1);
    let mut g = vec![0.0; len];
    let mut f = vec![0.0; len];
    let mut y = ode.origin(grid.r[0]);
    g[0] = y[0];
    f[0] = y[1];
    for i in 0..i_match {
        y = ode.rk4(grid.t0 + i as f64 * grid.dt, y, grid.dt);
        g[i + 1] = y[0];
        f[i + 1] = y[1];
    }
    let out_match = [g[i_match], f[i_match]];
    let mut y = [1.0, -((m - e) / (m + e)).sqrt()];
    let mut tail = vec![[0.0; 2]; i_end - i_match + 1];
    tail[i_end - i_match] = y;
    for i in (i_match..i_end).rev() {
        y = ode.rk4(grid.t0 + (i + 1) as f64 * grid.dt, y, -grid.dt);
        tail[i - i_match] = y;
    }
    if tail[0][0] == 0.0 || !tail[0][0].is_finite() {
        return Err(fail("inward solution vanished at the matching radius".into()));
    }
    let scale = out_match[0] / tail[0][0];
    let match_mismatch = (out_match[1] - scale * tail[0][1]).abs() / out_match[1].abs().max(out_match[0].abs());
    for (k, v) in tail.iter().enumerate().skip(1) {
        g[i_match + k] = scale * v[0];
        f[i_match + k] = scale * v[1];
    }
    let mut state =
        RadialState { n, kappa, energy: e, grid: grid.clone(), g, f, match_mismatch, bisections };
    let norm = state.norm_sq().sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return Err(fail(format!("normalisation integral {norm}")));
    }
    // positive G near the origin
    let sign = if state.g[1] < 0.0 { -1.0 } else { 1.0 };
    state.g.iter_mut().for_each(|v| *v *= sign / norm);
    state.f.iter_mut().for_each(|v| *v *= sign / norm);
    Ok(state)
}

/// All bound states with n ≤ `n_max` and κ in `kappas`, on one shared grid.
/// Combinations that label no bound state are skipped.
pub fn solve_radial(
    n_max: u32,
    kappas: &[i32],
    m: f64,
    zalpha: f64,
    cfg: &RadialConfig,
) -> Result<Vec<RadialState>, SpectralError> {
    if !(zalpha > 0.0 && zalpha < 1.0) {
        return Err(SpectralError::CouplingOutOfRange(zalpha));
    }
    if !(m.is_finite() && m > 0.0) {
        return Err(SpectralError::InvalidParameter(format!("mass {m}")));
    }
    let r_max = cfg.r_max_bohr * n_max.max(1) as f64 / (m * zalpha);
    let grid = Arc::new(RadialGrid::new(cfg.r_min / m, r_max, cfg.dt));
    let mut out = Vec::new();
    for n in 1..=n_max {
        for &kappa in kappas {
            if is_valid_state(n, kappa) {
                out.push(solve_state(n, kappa, m, zalpha, &grid, cfg)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZA: f64 = 1.0 / 137.035999084;

    #[test]
    fn ground_state_closed_form() {
        let e = sommerfeld_energy(1, -1, 1.0, ZA).unwrap();
        assert!((e - (1.0 - ZA * ZA).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn coupling_domain() {
        assert!(sommerfeld_energy(1, -1, 1.0, 1.0).is_err());
        assert!(solve_radial(1, &[-1], 1.0, 1.2, &RadialConfig::default()).is_err());
    }

    #[test]
    fn state_labels() {
        assert!(is_valid_state(2, 1));
        assert!(!is_valid_state(1, 1));
        assert!(is_valid_state(2, -2));
        assert!(!is_valid_state(2, 2));
        assert_eq!(orbital_l(-2), 1);
    }
}
