use dirac_algebra::clifford::{build_algebra31, build_gamma_set};
use dirac_algebra::equation::{formal_commutator, EvolutionForm, StructuredEvolutionOp};
use dirac_algebra::{commutator, real_span_dim, ExactScalar, MatrixC4, RealLinearOp, RealQ2};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn real_q2() -> impl Strategy<Value = RealQ2> {
    (rational(), rational()).prop_map(|(a, b)| RealQ2::new(a, b))
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| ExactScalar::from_parts(a, b, c, d))
}

// sparse entries keep the exact arithmetic cheap
fn sparse_scalar() -> impl Strategy<Value = ExactScalar> {
    prop_oneof![3 => Just(ExactScalar::zero()), 2 => scalar()]
}

fn matrix() -> impl Strategy<Value = MatrixC4> {
    prop::collection::vec(sparse_scalar(), 16).prop_map(|v| MatrixC4::from_fn(|r, c| v[4 * r + c].clone()))
}

fn op() -> impl Strategy<Value = RealLinearOp> {
    (matrix(), matrix()).prop_map(|(l, a)| RealLinearOp::new(l, a))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_ring_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        let xc = x.conj();
        prop_assert_eq!(xc.rb(), x.rb());
    }

    #[test]
    fn real_field_inverse(x in real_q2()) {
        if let Some(inv) = x.inv() {
            prop_assert_eq!(&x * &inv, RealQ2::one());
        } else {
            prop_assert!(x.is_zero());
        }
    }

    #[test]
    fn compose_is_associative(a in op(), b in op(), c in op()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn jacobi_identity(a in op(), b in op(), c in op()) {
        let j = &(&commutator(&a, &commutator(&b, &c)) + &commutator(&b, &commutator(&c, &a)))
            + &commutator(&c, &commutator(&a, &b));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn adjoint_reverses_products(a in op(), b in op()) {
        prop_assert_eq!(a.compose(&b).adjoint(), b.adjoint().compose(&a.adjoint()));
        prop_assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn span_dim_invariant_under_real_recombination(
        ops in prop::collection::vec(op(), 1..5),
        mix in prop::collection::vec(real_q2(), 25),
    ) {
        let n = ops.len();
        // unit lower-triangular mixing matrix: always invertible
        let mixed: Vec<RealLinearOp> = (0..n)
            .map(|i| {
                (0..i).fold(ops[i].clone(), |acc, j| &acc + &ops[j].scale_real(&mix[i * 5 + j]))
            })
            .collect();
        prop_assert_eq!(real_span_dim(&mixed), real_span_dim(&ops));
    }

    #[test]
    fn formal_commutator_status_invariant_under_rescaling(k in 0usize..31, r in real_q2()) {
        let g = build_gamma_set();
        let elems = build_algebra31(&g);
        for form in EvolutionForm::ALL {
            let d = StructuredEvolutionOp::build(form, true, &ExactScalar::one(), &g);
            let base = formal_commutator(&elems[k].op, &d).commutes();
            if !r.is_zero() {
                prop_assert_eq!(formal_commutator(&elems[k].op.scale_real(&r), &d).commutes(), base);
            }
        }
    }
}

#[test]
fn formal_symmetries_close_under_bracket() {
    let g = build_gamma_set();
    let elems = build_algebra31(&g);
    for form in EvolutionForm::ALL {
        for coulomb in [false, true] {
            let d = StructuredEvolutionOp::build(form, coulomb, &ExactScalar::one(), &g);
            let sym: Vec<&RealLinearOp> =
                elems.iter().map(|e| &e.op).filter(|q| formal_commutator(q, &d).commutes()).collect();
            for a in &sym {
                for b in &sym {
                    assert!(formal_commutator(&commutator(a, b), &d).commutes(), "{}", d.label());
                }
            }
        }
    }
}
