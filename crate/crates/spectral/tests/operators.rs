use std::sync::Arc;

use dirac_spectral::fw::omega;
use dirac_spectral::{Grid, GridOperator, GridSpinor, NumGammas, NumOp, SpectralError, C64, M4};
use proptest::prelude::*;

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn gaussian_spinor(grid: &Arc<Grid>, shift: f64) -> GridSpinor {
    GridSpinor::from_fn(grid, |x| {
        let r2 = (x[0] - shift).powi(2) + x[1] * x[1] + (x[2] + 0.5 * shift).powi(2);
        let e = (-r2 / 8.0).exp();
        [C64::new(e, 0.3 * e), C64::new(x[0] * e / 3.0, 0.0), C64::new(0.0, x[1] * e / 3.0), c(x[2] * e / 3.0)]
    })
}

fn max_diff(a: &GridSpinor, b: &GridSpinor) -> f64 {
    a.data().iter().zip(b.data()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[test]
fn coarse_or_odd_grids_are_rejected() {
    assert_eq!(Grid::new(6, 10.0).unwrap_err(), SpectralError::GridTooCoarse(6));
    assert!(Grid::new(9, 10.0).is_err());
    assert!(Grid::new(16, 0.0).is_err());
}

#[test]
fn no_sample_sits_at_the_origin() {
    let grid = Grid::new(8, 4.0).unwrap();
    let closest = (0..grid.len())
        .map(|i| grid.point(i).iter().map(|v| v * v).sum::<f64>().sqrt())
        .fold(f64::INFINITY, f64::min);
    // half a spacing along each axis
    assert!((closest - 0.5 * 3f64.sqrt() * grid.spacing()).abs() < 1e-12);
}

#[test]
fn momentum_reflection_is_an_involution() {
    let grid = Grid::new(8, 4.0).unwrap();
    for i in 0..grid.len() {
        assert_eq!(grid.negated(grid.negated(i)), i);
        let (k, q) = (grid.momentum(i), grid.momentum(grid.negated(i)));
        // the Nyquist row is zeroed, so it reflects onto itself
        for j in 0..3 {
            assert!(k[j] == -q[j] || (k[j] == 0.0 && q[j] == 0.0));
        }
    }
}

#[test]
fn conjugation_through_fourier_space_matches_pointwise() {
    let grid = Grid::new(16, 12.0).unwrap();
    let psi = gaussian_spinor(&grid, 1.0);
    // identity symbol after Ĉ forces the fused k-space path
    let fused = &GridOperator::symbol(&grid, |_| M4::identity()) * &GridOperator::conjugation();
    let want = GridSpinor::from_data(&grid, psi.data().iter().map(|z| z.conj()).collect()).unwrap();
    assert!(max_diff(&fused.apply(&psi), &want) < 1e-14);
    let twice = &fused * &fused;
    assert!(max_diff(&twice.apply(&psi), &psi) < 1e-14);
}

#[test]
fn fused_composition_matches_sequential_application() {
    let grid = Grid::new(16, 12.0).unwrap();
    let g = NumGammas::new();
    let psi = gaussian_spinor(&grid, -0.7);
    let a = GridOperator::symbol(&grid, |k| g.free_hamiltonian(k, 1.3));
    let b = &GridOperator::symbol(&grid, |k| g.gamma_dot(k) * c(1.0 / omega(k, 1.0))) * &GridOperator::constant(g.gamma[5].clone());
    let m = GridOperator::multiplier(&grid, |k| k[1]);
    let fused = &(&a * &b) * &m;
    assert!(fused.is_fused_symbol());
    let seq = a.apply(&b.apply(&m.apply(&psi)));
    assert!(max_diff(&fused.apply(&psi), &seq) < 1e-12);
    let sum = &(&a * &b) - &(&b * &a);
    let seq = a.apply(&b.apply(&psi)).sub(&b.apply(&a.apply(&psi)));
    assert!(max_diff(&sum.apply(&psi), &seq) < 1e-12);
}

#[test]
fn position_and_fourier_factors_keep_their_order() {
    let grid = Grid::new(32, 32.0).unwrap();
    let psi = gaussian_spinor(&grid, 0.4);
    let x = GridOperator::position(&grid, |x| x[0]);
    let p = GridOperator::multiplier(&grid, |k| k[0]);
    // [x, p] = i on smooth states (p is the symbol k, i.e. −i∂)
    let comm = x.commutator(&p);
    let want = psi.scale(C64::new(0.0, 1.0));
    let err = comm.apply(&psi).sub(&want).norm() / psi.norm();
    assert!(err < 1e-6, "canonical commutator residual {err}");
}

#[test]
fn derivative_symbol_is_spectrally_exact_on_gaussians() {
    let grid = Grid::new(32, 20.0).unwrap();
    let f = |x: [f64; 3]| (-(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / 4.0).exp();
    let psi = GridSpinor::from_fn(&grid, |x| [c(f(x)), c(0.0), c(0.0), c(0.0)]);
    // −i∂₁ f = i x₁ f / 2
    let want = GridSpinor::from_fn(&grid, |x| [C64::new(0.0, 0.5 * x[0] * f(x)), c(0.0), c(0.0), c(0.0)]);
    let got = GridOperator::multiplier(&grid, |k| k[0]).apply(&psi);
    // floor set by the envelope at the box edge, e^{-25}
    assert!(got.sub(&want).norm() / want.norm() < 1e-9);
}

#[test]
fn spinor_length_is_checked() {
    let grid = Grid::new(8, 4.0).unwrap();
    let err = GridSpinor::from_data(&grid, vec![c(0.0); 7]).unwrap_err();
    assert_eq!(err, SpectralError::SizeMismatch { expected: 4 * 512, got: 7 });
}

fn arb_spinor_data(len: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| C64::new(a, b)), len)
}

fn arb_numop() -> impl Strategy<Value = NumOp> {
    prop::collection::vec(-1.0f64..1.0, 64).prop_map(|v| {
        let l = M4::from_fn(|r, cc| C64::new(v[4 * r + cc], v[16 + 4 * r + cc]));
        let a = M4::from_fn(|r, cc| C64::new(v[32 + 4 * r + cc], v[48 + 4 * r + cc]));
        NumOp::new(l, a)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fft_round_trip_is_identity(data in arb_spinor_data(4 * 512)) {
        let grid = Grid::new(8, 5.0).unwrap();
        let mut work = data.clone();
        grid.forward(&mut work);
        grid.inverse(&mut work);
        let err = work.iter().zip(&data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        prop_assert!(err < 1e-14);
    }

    #[test]
    fn omega_is_bounded_below_by_mass(k in prop::array::uniform3(-50.0f64..50.0), m in 0.01f64..10.0) {
        let w = omega(k, m);
        prop_assert!(w >= m);
        prop_assert!(w.is_finite());
    }

    #[test]
    fn constant_maps_fuse_with_symbols_like_sequential_application(
        p in arb_numop(),
        q in arb_numop(),
        data in arb_spinor_data(4 * 512),
    ) {
        let grid = Grid::new(8, 5.0).unwrap();
        let g = NumGammas::new();
        let psi = GridSpinor::from_data(&grid, data).unwrap();
        let s = GridOperator::symbol(&grid, |k| g.free_hamiltonian(k, 0.7));
        let (pp, qq) = (GridOperator::constant(p), GridOperator::constant(q));
        let fused = &(&(&pp * &s) * &qq) * &s;
        let seq = pp.apply(&s.apply(&qq.apply(&s.apply(&psi))));
        let scale = seq.data().iter().map(|z| z.norm()).fold(1.0, f64::max);
        prop_assert!(max_diff(&fused.apply(&psi), &seq) / scale < 1e-12);
    }

    #[test]
    fn application_is_real_linear(
        p in arb_numop(),
        x in arb_spinor_data(4 * 512),
        y in arb_spinor_data(4 * 512),
        t in -3.0f64..3.0,
    ) {
        let grid = Grid::new(8, 5.0).unwrap();
        let op = &GridOperator::constant(p) * &GridOperator::multiplier(&grid, |k| k[2]);
        let (x, y) = (GridSpinor::from_data(&grid, x).unwrap(), GridSpinor::from_data(&grid, y).unwrap());
        let lhs = op.apply(&x.scale(c(t)).add(&y));
        let rhs = op.apply(&x).scale(c(t)).add(&op.apply(&y));
        prop_assert!(max_diff(&lhs, &rhs) < 1e-10);
    }
}
