//! Lentz vector and the I⃗, R⃗ generators as finite matrices on degenerate
//! (n, j) multiplets.
//!
//! Basis order: `|κ₋, m⟩` for m = j..−j, then `|κ₊, m⟩`, with κ∓ = ∓(j + ½).
//! D is rotationally scalar, so on this block it is `[[0, d̄], [d, 0]] ⊗ 1`
//! with `d = ⟨κ₊|D|κ₋⟩` taken from the radial route.

use nalgebra::DMatrix;

use crate::check::NumericCheck;
use crate::jl::{verify_johnson_lippmann, JlTolerances};
use crate::num::C64;
use crate::radial::RadialState;
use crate::SpectralError;

type Mat = DMatrix<C64>;

/// Spin-j matrices (Jx, Jy, Jz) for `two_j = 2j`, basis m = j, j−1, …, −j.
pub fn spin_matrices(two_j: u32) -> [Mat; 3] {
    let d = two_j as usize + 1;
    let j = two_j as f64 / 2.0;
    let m = |i: usize| j - i as f64;
    let mut jp = Mat::zeros(d, d);
    for i in 1..d {
        // J₊|m⟩ = √(j(j+1) − m(m+1)) |m+1⟩, and |m+1⟩ sits at index i−1
        jp[(i - 1, i)] = C64::new((j * (j + 1.0) - m(i) * (m(i) + 1.0)).sqrt(), 0.0);
    }
    let jm = jp.adjoint();
    let jx = (&jp + &jm) * C64::new(0.5, 0.0);
    let jy = (&jp - &jm) * C64::new(0.0, -0.5);
    let jz = Mat::from_fn(d, d, |r, c| if r == c { C64::new(m(r), 0.0) } else { C64::new(0.0, 0.0) });
    [jx, jy, jz]
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    a.kronecker(b)
}

fn comm(a: &Mat, b: &Mat) -> Mat {
    a * b - b * a
}

/// Largest entry modulus.
fn max_abs(m: &Mat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[derive(Clone, Debug)]
pub struct So4Block {
    pub n: u32,
    pub two_j: u32,
    pub d: C64,
    pub lambda: f64,
    /// The checks the SO(4) construction is judged on.
    pub checks: Vec<NumericCheck>,
    /// Relations that do hold for this construction, for comparison.
    pub observed: Vec<NumericCheck>,
}

#[derive(Clone, Debug)]
pub struct So4Report {
    pub blocks: Vec<So4Block>,
    /// Multiplets with a single κ (κ = −n), where D vanishes and T¹, T² are
    /// undefined.
    pub incomplete: Vec<(u32, i32)>,
}

const EPS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

/// Builds T⃗, I⃗ = J⃗ + T⃗ and R⃗ = J⃗ − T⃗ on every complete (n, j) block.
pub fn verify_so4(states: &[RadialState], mass: f64, zalpha: f64, tol: f64) -> Result<So4Report, SpectralError> {
    let jl = verify_johnson_lippmann(states, mass, zalpha, &JlTolerances::default())?;
    let mut blocks = Vec::new();
    let mut incomplete = Vec::new();
    for rep in &jl {
        let Some(d) = rep.partner_element else {
            incomplete.push((rep.n, rep.kappa));
            continue;
        };
        let k = rep.kappa.unsigned_abs();
        let two_j = 2 * k - 1;
        let kf = k as f64;
        let dim = two_j as usize + 1;
        let id_m = Mat::identity(dim, dim);
        let c = |z: f64| C64::new(z, 0.0);
        let jvec = spin_matrices(two_j).map(|ja| kron(&Mat::identity(2, 2), &ja));
        let kmat = kron(&Mat::from_diagonal(&nalgebra::DVector::from_vec(vec![c(kf), c(-kf)])), &id_m);
        let dmat = kron(&Mat::from_row_slice(2, 2, &[c(0.0), d.conj(), d, c(0.0)]), &id_m);
        let sl = rep.lambda.sqrt();
        let t = [
            &dmat * c(1.0 / (2.0 * sl)),
            (&dmat * &kmat) * C64::new(0.0, 1.0 / (2.0 * sl * kf)),
            &kmat * c(1.0 / (2.0 * kf)),
        ];
        let full = Mat::identity(2 * dim, 2 * dim);
        let quarter = &full * c(0.25);
        let ivec: [Mat; 3] = std::array::from_fn(|a| &jvec[a] + &t[a]);
        let rvec: [Mat; 3] = std::array::from_fn(|a| &jvec[a] - &t[a]);
        let names = ["1", "2", "3"];
        let mut checks = Vec::new();
        for a in 0..3 {
            checks.push(NumericCheck::at_most(format!("(T{})^2 = 1/4", names[a]), max_abs(&(&t[a] * &t[a] - &quarter)), tol));
        }
        let i_c = C64::new(0.0, 1.0);
        for &(a, b, cc) in &EPS {
            let r = comm(&ivec[a], &ivec[b]) - &ivec[cc] * i_c;
            checks.push(NumericCheck::at_most(format!("[I{}, I{}] = i I{}", names[a], names[b], names[cc]), max_abs(&r), tol));
        }
        for &(a, b, cc) in &EPS {
            let r = comm(&rvec[a], &rvec[b]) - &rvec[cc] * i_c;
            checks.push(NumericCheck::at_most(format!("[R{}, R{}] = i R{}", names[a], names[b], names[cc]), max_abs(&r), tol));
        }
        for a in 0..3 {
            for b in 0..3 {
                checks.push(NumericCheck::at_most(format!("[I{}, R{}] = 0", names[a], names[b]), max_abs(&comm(&ivec[a], &rvec[b])), tol));
            }
        }
        let mut observed = Vec::new();
        observed.push(NumericCheck::at_most("|d|^2 = lambda", (d.norm_sqr() - rep.lambda).abs(), 1e-6));
        let mut jt = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                jt = jt.max(max_abs(&comm(&jvec[a], &t[b])));
            }
        }
        observed.push(NumericCheck::at_most("[J^a, T^b] = 0", jt, tol));
        let mut tt = 0.0f64;
        let mut jj = 0.0f64;
        let mut rr = 0.0f64;
        for &(a, b, cc) in &EPS {
            tt = tt.max(max_abs(&(comm(&t[a], &t[b]) - &t[cc] * i_c)));
            jj = jj.max(max_abs(&(comm(&jvec[a], &jvec[b]) - &jvec[cc] * i_c)));
            rr = rr.max(max_abs(&(comm(&rvec[a], &rvec[b]) - &ivec[cc] * i_c)));
        }
        observed.push(NumericCheck::at_most("[T^a, T^b] = i eps T^c", tt, tol));
        observed.push(NumericCheck::at_most("[J^a, J^b] = i eps J^c", jj, tol));
        observed.push(NumericCheck::at_most("[R^a, R^b] = i eps I^c", rr, tol));
        let mut ir = 0.0f64;
        for &(a, b, cc) in &EPS {
            ir = ir.max(max_abs(&(comm(&ivec[a], &rvec[b]) - &rvec[cc] * i_c)));
        }
        observed.push(NumericCheck::at_most("[I^a, R^b] = i eps R^c", ir, tol));
        blocks.push(So4Block { n: rep.n, two_j, d, lambda: rep.lambda, checks, observed });
    }
    Ok(So4Report { blocks, incomplete })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_matrices_are_half_pauli() {
        let [x, y, z] = spin_matrices(1);
        assert!((x[(0, 1)] - C64::new(0.5, 0.0)).norm() < 1e-15);
        assert!((y[(0, 1)] - C64::new(0.0, -0.5)).norm() < 1e-15);
        assert!((z[(1, 1)] - C64::new(-0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn spin_matrices_close() {
        for two_j in 1..5 {
            let s = spin_matrices(two_j);
            let r = comm(&s[0], &s[1]) - &s[2] * C64::new(0.0, 1.0);
            assert!(max_abs(&r) < 1e-13);
        }
    }
}
