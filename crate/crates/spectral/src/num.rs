//! Double-precision real-linear operators `ψ ↦ Lψ + A ψ̄` on 4-spinors.

use dirac_algebra::RealLinearOp;
use nalgebra::Matrix4;
use num_complex::Complex64;

pub type C64 = Complex64;
pub type M4 = Matrix4<C64>;

#[derive(Clone, Debug, PartialEq)]
pub struct NumOp {
    pub l: M4,
    pub a: M4,
}

impl NumOp {
    pub fn new(l: M4, a: M4) -> Self {
        NumOp { l, a }
    }

    pub fn linear(l: M4) -> Self {
        NumOp { l, a: M4::zeros() }
    }

    pub fn antilinear(a: M4) -> Self {
        NumOp { l: M4::zeros(), a }
    }

    pub fn identity() -> Self {
        Self::linear(M4::identity())
    }

    pub fn zero() -> Self {
        Self::linear(M4::zeros())
    }

    pub fn conjugation() -> Self {
        Self::antilinear(M4::identity())
    }

    pub fn scalar(c: C64) -> Self {
        Self::linear(M4::identity() * c)
    }

    pub fn from_exact(q: &RealLinearOp) -> Self {
        let to = |m: &dirac_algebra::MatrixC4| {
            let c = m.to_complex();
            M4::from_fn(|r, k| c[r][k])
        };
        NumOp { l: to(q.linear_part()), a: to(q.antilinear_part()) }
    }

    pub fn is_linear(&self) -> bool {
        self.a.iter().all(|z| *z == C64::new(0.0, 0.0))
    }

    /// `self ∘ other`.
    pub fn compose(&self, o: &NumOp) -> NumOp {
        NumOp { l: self.l * o.l + self.a * o.a.conjugate(), a: self.l * o.a + self.a * o.l.conjugate() }
    }

    /// Left multiplication by a complex scalar.
    pub fn scale(&self, c: C64) -> NumOp {
        NumOp { l: self.l * c, a: self.a * c }
    }

    pub fn add(&self, o: &NumOp) -> NumOp {
        NumOp { l: self.l + o.l, a: self.a + o.a }
    }

    pub fn sub(&self, o: &NumOp) -> NumOp {
        NumOp { l: self.l - o.l, a: self.a - o.a }
    }

    /// Action on a single spinor value.
    pub fn apply(&self, v: &[C64; 4]) -> [C64; 4] {
        let mut out = [C64::new(0.0, 0.0); 4];
        for (r, o) in out.iter_mut().enumerate() {
            for (c, x) in v.iter().enumerate() {
                *o += self.l[(r, c)] * x + self.a[(r, c)] * x.conj();
            }
        }
        out
    }

    /// Largest entry modulus of both parts.
    pub fn max_abs(&self) -> f64 {
        self.l.iter().chain(self.a.iter()).map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Double-precision copies of the exact gamma set.
#[derive(Clone, Debug)]
pub struct NumGammas {
    /// Dirac γ^μ, μ = 0..3.
    pub dirac: [NumOp; 4],
    /// γᴬ at index A for A = 1..7; index 0 holds γ⁰.
    pub gamma: [NumOp; 8],
    /// `s = ½·diag(σ, σ)`.
    pub spin: [NumOp; 3],
}

impl NumGammas {
    pub fn new() -> Self {
        let g = dirac_algebra::clifford::build_gamma_set();
        let dirac = std::array::from_fn(|mu| NumOp::from_exact(g.dirac(mu)));
        let gamma = std::array::from_fn(|a| if a == 0 { NumOp::from_exact(g.dirac(0)) } else { NumOp::from_exact(g.gamma(a)) });
        let spin = dirac_algebra::clifford::spin_matrices().map(|s| NumOp::from_exact(&s));
        NumGammas { dirac, gamma, spin }
    }

    /// `γ⁰γ·k + γ⁰m`, the free Hamiltonian symbol.
    pub fn free_hamiltonian(&self, k: [f64; 3], m: f64) -> M4 {
        let g0 = self.dirac[0].l;
        g0 * (self.gamma_dot(k) + M4::identity() * C64::new(m, 0.0))
    }

    /// `γ·k = Σ γʲkⱼ`.
    pub fn gamma_dot(&self, k: [f64; 3]) -> M4 {
        (0..3).fold(M4::zeros(), |acc, j| acc + self.dirac[j + 1].l * C64::new(k[j], 0.0))
    }
}

impl Default for NumGammas {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dirac_algebra::clifford::build_gamma_set;

    #[test]
    fn compose_matches_exact_composition() {
        let g = build_gamma_set();
        let exact = g.gamma(5).compose(g.gamma(6));
        let num = NumOp::from_exact(g.gamma(5)).compose(&NumOp::from_exact(g.gamma(6)));
        assert!(num.sub(&NumOp::from_exact(&exact)).max_abs() < 1e-15);
    }

    #[test]
    fn conjugation_is_antilinear() {
        let c = NumOp::conjugation();
        let v = [C64::new(1.0, 2.0), C64::new(0.0, -1.0), C64::new(3.0, 0.5), C64::new(-1.0, 1.0)];
        let iv = v.map(|z| z * C64::i());
        let lhs = c.apply(&iv);
        let rhs = c.apply(&v).map(|z| z * -C64::i());
        for k in 0..4 {
            assert!((lhs[k] - rhs[k]).norm() < 1e-15);
        }
    }
}
