mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use skewloci::weyl::{
    poincare_bundle, poincare_full_flag, poincare_grass2, poincare_isotropic_grass2, poincare_parabolic_quotient,
    top_betti_grass2_bundle, top_betti_isotropic_bundle, BettiVector, ExponentList, QPolynomial,
};

use common::{convolve, full_flag_oracle, grass2_oracle, isotropic_oracle, type_a, type_c};

fn grass2_by_quotient(r: usize) -> QPolynomial {
    poincare_parabolic_quotient(&[ExponentList::sl(r)], &[ExponentList::sl(2), ExponentList::sl(r - 2)]).unwrap()
}

fn isotropic_by_quotient(r: usize) -> QPolynomial {
    poincare_parabolic_quotient(
        &[ExponentList::sp(r).unwrap()],
        &[ExponentList::sl(2), ExponentList::sp(r - 4).unwrap()],
    )
    .unwrap()
}

#[test]
fn full_flags_match_coxeter_enumeration() {
    for n in 1..=6 {
        assert_eq!(
            poincare_full_flag(&[ExponentList::sl(n)]),
            full_flag_oracle(n, &type_a(n)),
            "sl{n}"
        );
    }
    for n in 1..=4 {
        let sp = ExponentList::sp(2 * n).unwrap();
        assert_eq!(
            poincare_full_flag(&[sp]),
            full_flag_oracle(n, &type_c(n)),
            "sp{}",
            2 * n
        );
    }
}

#[test]
fn grassmannians_match_coset_enumeration() {
    for r in (2..=8).step_by(2) {
        let closed = poincare_grass2(r).unwrap();
        assert_eq!(closed, grass2_oracle(r), "grass2 r = {r}");
        assert_eq!(closed, grass2_by_quotient(r));
    }
    for r in (4..=8).step_by(2) {
        let closed = poincare_isotropic_grass2(r).unwrap();
        assert_eq!(closed, isotropic_oracle(r), "isotropic r = {r}");
        assert_eq!(closed, isotropic_by_quotient(r));
    }
}

#[test]
fn closed_forms_match_quotients_up_to_twenty() {
    for r in (4..=20).step_by(2) {
        let g = poincare_grass2(r).unwrap();
        let z = poincare_isotropic_grass2(r).unwrap();
        assert_eq!(g, grass2_by_quotient(r));
        assert_eq!(z, isotropic_by_quotient(r));
        assert_eq!(g.degree(), Some(2 * r - 4));
        assert_eq!(z.degree(), Some(2 * r - 5));
        assert!(g.is_palindromic() && z.is_palindromic());
        // Euler characteristics: C(r, 2) and the number of isotropic coordinate planes
        let one = BigInt::from(1);
        assert_eq!(g.eval(&one), BigInt::from(r * (r - 1) / 2));
        let n = r / 2;
        assert_eq!(z.eval(&one), BigInt::from(2 * n * (n - 1)));
    }
}

#[test]
fn reference_values() {
    assert_eq!(poincare_grass2(4).unwrap(), QPolynomial::from_ints(&[1, 1, 2, 1, 1]));
    assert_eq!(
        poincare_isotropic_grass2(4).unwrap(),
        QPolynomial::from_ints(&[1, 1, 1, 1])
    );
    let point = BettiVector::point();
    assert_eq!(top_betti_grass2_bundle(&point, 4).unwrap(), BigInt::from(2));
    assert_eq!(top_betti_isotropic_bundle(&point, 4).unwrap(), BigInt::from(1));
}

/// `dim H_k` of the bundle, by multiplying the base and fiber Poincaré
/// polynomials in `t` term by term.
fn kunneth_betti(base: &BettiVector, fiber: &QPolynomial, k: usize) -> BigInt {
    let fiber_t: Vec<BigInt> = fiber.spread().coeffs().to_vec();
    let base_t: Vec<BigInt> = base.b.iter().map(|&x| BigInt::from(x)).collect();
    convolve(&base_t, &fiber_t).get(k).cloned().unwrap_or_default()
}

#[test]
fn projective_line_base() {
    let p1 = BettiVector::projective(1);
    assert_eq!(top_betti_grass2_bundle(&p1, 4).unwrap(), BigInt::from(3));
    assert_eq!(top_betti_isotropic_bundle(&p1, 4).unwrap(), BigInt::from(2));
}

fn betti_vector() -> impl Strategy<Value = BettiVector> {
    (0usize..=4).prop_flat_map(|d| {
        prop::collection::vec(0u64..=5, 2 * d + 1).prop_map(move |mut b| {
            b[0] = b[0].max(1);
            BettiVector::new(d, b).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn top_betti_numbers_match_kunneth(base in betti_vector(), half in 2usize..=6) {
        let r = 2 * half;
        let d = base.d;
        let g = poincare_grass2(r).unwrap();
        let z = poincare_isotropic_grass2(r).unwrap();
        let top_g = top_betti_grass2_bundle(&base, r).unwrap();
        let top_z = top_betti_isotropic_bundle(&base, r).unwrap();
        prop_assert_eq!(&top_g, &kunneth_betti(&base, &g, 2 * d + 2 * r - 4));
        prop_assert_eq!(&top_z, &kunneth_betti(&base, &z, 2 * d + 2 * r - 6));
        prop_assert_eq!(top_g - top_z, BigInt::from(base.get(2 * d as i64)));
    }

    #[test]
    fn bundle_polynomial_is_product(base in betti_vector(), half in 1usize..=5) {
        let fiber = poincare_grass2(2 * half).unwrap();
        let q = base.q_polynomial();
        let bundle = poincare_bundle(&q, &fiber);
        prop_assert_eq!(bundle.coeffs().to_vec(), convolve(q.coeffs(), fiber.coeffs()));
        prop_assert_eq!(bundle.eval(&BigInt::from(1)), q.eval(&BigInt::from(1)) * fiber.eval(&BigInt::from(1)));
    }
}
