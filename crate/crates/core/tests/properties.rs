mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use nonschur::chow::{GrassBox, SchubertClass};
use nonschur::gluing::{check_conditions, kronecker_decompose};
use nonschur::pipeline::{
    expected_dimensions, intersection_class, validate_decomposition, Parameters, Sampling,
};
use nonschur::quiver::{classify_root, euler_form, GenKronecker, RootClass};
use nonschur::symfunc::oracle::{elementary_to_monomial, expr_to_monomial};
use nonschur::symfunc::{
    e_power, e_power_to_schur, e_to_schur, f_in_monomial_basis, lemma_michael_f, Basis, BasisExpr,
    Partition,
};

use common::*;

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_parts)
}

/// A box up to 3x4 and a partition inside it.
fn boxed_partition() -> impl Strategy<Value = (GrassBox, Partition)> {
    (1usize..=3, 1u32..=4).prop_flat_map(|(d, codim)| {
        let grass = GrassBox::new(d, codim).unwrap();
        prop::collection::vec(0..=codim, d).prop_map(move |v| (grass, Partition::from_parts(v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn dimension_identity(l in 1i64..=6, m in 0i64..=20, n in 1i64..=8, d1 in 0i64..=10, d2 in 1i64..=10, d3 in 1i64..=10) {
        let x = Parameters::from_pairings(l, m, n, d1, d2, d3);
        prop_assert_eq!(x.t, x.l * x.r - x.d1);
        prop_assert_eq!(x.t, x.s - x.d1 - x.euler_alpha_hat_alpha1);
        let lhs = x.r * (x.w - x.r) - (x.l * x.r - x.t) * (x.s - x.t);
        prop_assert_eq!(lhs, x.d3 * x.d3 - x.euler_alpha_alpha);
        let dims = expected_dimensions(&x).unwrap();
        prop_assert_eq!(dims.dim_x1 + dims.dim_x2 - dims.dim_gr, dims.expected_intersection_dim);
    }
}

proptest! {
    #[test]
    fn coefficient_lemma(l in 1u32..=4, p in 0u32..=8) {
        let lhs = expr_to_monomial(&lemma_michael_f(l, p), p as usize);
        prop_assert_eq!(lhs, f_in_monomial_basis(l, p));
    }

    #[test]
    fn conjugate_is_an_involution(lambda in partition(8, 8)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().weight(), lambda.weight());
    }

    #[test]
    fn elementary_round_trip(mu in partition(8, 8).prop_filter("weight <= 8", |m| m.weight() <= 8)) {
        let w = mu.weight() as usize;
        let e = BasisExpr::term(Basis::Elementary, mu.clone(), 1);
        let schur = e_to_schur(&e).unwrap();
        prop_assert_eq!(expr_to_monomial(&schur, w), elementary_to_monomial(&mu, w));
    }

    #[test]
    fn power_expansion(coeffs in prop::collection::vec(-3i64..=3, 3), k in 0u32..=3) {
        let parts = [vec![1u32], vec![2], vec![1, 1]];
        let expr = BasisExpr::from_terms(
            Basis::Elementary,
            parts.iter().zip(&coeffs).map(|(p, c)| (Partition::from_parts(p.clone()), *c)),
        );
        let slow = e_to_schur(&e_power(&expr, k).unwrap()).unwrap();
        prop_assert_eq!(e_power_to_schur(&expr, k, None).unwrap(), slow);
    }

    #[test]
    fn pieri_and_rectangle_match_products((grass, lambda) in boxed_partition()) {
        let (d, codim) = (grass.d, grass.codim);
        let one = SchubertClass::delta(grass, &lambda);
        for j in 0..=d {
            let other = SchubertClass::delta(grass, &Partition::rectangle(1, j));
            prop_assert_eq!(one.pieri_mul(j).unwrap(), one.product_oracle(&other).unwrap());
        }
        for j in 0..=codim {
            let other = SchubertClass::delta(grass, &Partition::rectangle(j, d));
            prop_assert_eq!(one.rectangle_mul(j).unwrap(), one.product_oracle(&other).unwrap());
        }
    }

    #[test]
    fn kronecker_scaling(n in 3u64..=4, x in 1i64..=6, y in 1i64..=6, s in 2i64..=3) {
        let q = GenKronecker::new(n).unwrap();
        let v = dv(&[x, y]);
        prop_assume!(x.gcd(&y) == 1);
        prop_assume!(classify_root(&q, &v) == Ok(RootClass::ImaginaryRoot));
        let scaled = kronecker_decompose(n, &v.scale(s));
        match kronecker_decompose(n, &v) {
            Ok(base) => {
                prop_assert!(check_conditions(&base.pair));
                let scaled = scaled.unwrap();
                prop_assert_eq!(&scaled.pair, &base.pair);
                prop_assert_eq!(scaled.k, base.k);
                prop_assert_eq!(scaled.scale, s);
                prop_assert_eq!(scaled.scaled_pair().combine(scaled.k), v.scale(s));
            }
            Err(_) => prop_assert!(scaled.is_err()),
        }
    }
}

#[test]
fn gcd_divides_every_coefficient() {
    for d in type_one_corpus() {
        let x = validate_decomposition(d, Sampling::default()).unwrap();
        let (class, gcd) = intersection_class(&x).unwrap();
        assert!(!gcd.is_zero());
        let mut again = BigInt::zero();
        for (_, c) in class.terms() {
            assert!((c % &gcd).is_zero(), "{d:?}: {gcd} does not divide {c}");
            again = again.gcd(c);
        }
        assert_eq!(again, gcd);
        assert!((class.degree() % &gcd).is_zero());
    }
}

#[test]
fn corpus_euler_forms_agree() {
    for d in type_one_corpus() {
        let x = validate_decomposition(d, Sampling::default()).unwrap();
        assert_eq!(
            euler_form(&d.quiver, &x.alpha, &x.alpha).unwrap(),
            x.euler_alpha_alpha
        );
    }
}
