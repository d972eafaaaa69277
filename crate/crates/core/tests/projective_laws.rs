use equicohom::point::{EpElement, PointElement};
use equicohom::projective::checks::{lemma_delta_check, mv_kernel_check};
use equicohom::projective::fixed::in_mv_kernel;
use equicohom::projective::{
    chi_star, cp_mul, normal_form, restrict, BasisBMonomial, CpElement, CpMonomial, FixedPoly, Side,
};
use equicohom::verify::{sample_monomials, sample_scalars};
use equicohom::Error;
use proptest::prelude::*;

/// Every monomial `ζ^i ζ̄^j c^k c̄^l` with exponents at most `e`, in normal form.
fn all_monomials(e: u32) -> Vec<CpElement> {
    let mut v = Vec::new();
    for i in 0..=e {
        for j in 0..=e {
            for k in 0..=e {
                for l in 0..=e {
                    v.push(normal_form(CpMonomial::new(i, j, k, l)));
                }
            }
        }
    }
    v
}

fn generators() -> Vec<CpElement> {
    vec![
        CpElement::c(),
        CpElement::cbar(),
        CpElement::zeta(),
        CpElement::zbar(),
    ]
}

fn scaled(xs: &[CpElement]) -> Vec<CpElement> {
    let mut v = Vec::new();
    for x in xs {
        for p in sample_scalars() {
            v.push(x.scale_point(&p));
        }
    }
    v
}

#[test]
fn commutative_on_monomials() {
    let ms = all_monomials(4);
    for x in &ms {
        for y in &ms {
            assert_eq!(cp_mul(x, y), cp_mul(y, x));
        }
    }
}

#[test]
fn associative_with_generator_factors() {
    let gens = scaled(&generators());
    for z in &all_monomials(4) {
        for x in &gens {
            for y in &gens {
                assert_eq!(cp_mul(&cp_mul(x, y), z), cp_mul(x, &cp_mul(y, z)));
            }
        }
    }
}

#[test]
fn associative_on_basis_monomials() {
    let ms = sample_monomials(2);
    for x in &ms {
        for y in &ms {
            let xy = cp_mul(x, y);
            for z in &ms {
                assert_eq!(cp_mul(&xy, z), cp_mul(x, &cp_mul(y, z)));
            }
        }
    }
}

#[test]
fn distributive_over_scaled_generators() {
    let gens = scaled(&generators());
    for x in &all_monomials(3) {
        for y in &gens {
            for z in &gens {
                assert_eq!(cp_mul(x, &(y + z)), &cp_mul(x, y) + &cp_mul(x, z));
            }
        }
    }
}

#[test]
fn chi_is_an_involutive_ring_map() {
    let ms = all_monomials(3);
    for x in &ms {
        assert_eq!(chi_star(&chi_star(x)), *x);
    }
    let basis = sample_monomials(3);
    for x in &basis {
        for y in &basis {
            assert_eq!(chi_star(&cp_mul(x, y)), cp_mul(&chi_star(x), &chi_star(y)));
        }
    }
}

#[test]
fn restrictions_are_ring_maps() {
    let basis = scaled(&sample_monomials(2));
    for side in [Side::Plus, Side::Minus] {
        assert_eq!(
            restrict(side, &CpElement::one()),
            FixedPoly::term(0, 0, PointElement::one())
        );
        for x in &basis {
            for y in &basis {
                assert_eq!(
                    restrict(side, &cp_mul(x, y)),
                    &restrict(side, x) * &restrict(side, y)
                );
            }
        }
    }
}

#[test]
fn conjugation_swaps_the_components() {
    for x in &scaled(&sample_monomials(3)) {
        assert_eq!(
            restrict(Side::Minus, &chi_star(x)),
            restrict(Side::Plus, x).swap()
        );
        assert_eq!(
            restrict(Side::Plus, &chi_star(x)),
            restrict(Side::Minus, x).swap()
        );
    }
}

#[test]
fn restrictions_land_in_the_mv_kernel() {
    for x in &scaled(&sample_monomials(3)) {
        let fixed = equicohom::projective::fixed::restrict_both(x).map(equicohom::point::map_phi);
        assert!(in_mv_kernel(&fixed), "{x:?}");
    }
}

#[test]
fn mv_kernel_small_box() {
    for d in equicohom::projective::PiDegree::boxed(2, 1) {
        assert!(mv_kernel_check(d, 10).unwrap().passed(), "{d:?}");
    }
}

#[test]
fn lemma_delta_examples() {
    let eps = EpElement::eps(1);
    let x = FixedPoly::term(0, 0, EpElement::eps(2));
    let pair = equicohom::projective::fixed::FixedElement {
        plus: x.clone(),
        minus: x,
    };
    assert!(lemma_delta_check(&pair, &eps, 4).unwrap().passed());
}

#[test]
fn lemma_delta_rejects_inhomogeneous_input() {
    let mut plus = FixedPoly::term(0, 0, EpElement::one());
    plus.add_term(0, 0, EpElement::eps(1));
    let minus = FixedPoly::zero();
    let pair = equicohom::projective::fixed::FixedElement { plus, minus };
    assert!(matches!(
        lemma_delta_check(&pair, &EpElement::one(), 4),
        Err(Error::HypothesisViolated(_))
    ));
}

#[test]
fn basis_monomials_are_fixed_by_normal_form() {
    for x in sample_monomials(4) {
        let (b, p) = x.terms().next().unwrap();
        assert_eq!(p, &PointElement::one());
        assert_eq!(normal_form(b.monomial()), x);
        assert_eq!(BasisBMonomial::from_monomial(b.monomial()), Some(b));
    }
}

fn cp_element() -> impl Strategy<Value = CpElement> {
    let terms = prop::collection::vec(
        ((0u32..4, 0u32..4, 0u32..4, 0u32..4), 0usize..5, -3i64..4),
        0..4,
    );
    terms.prop_map(|ts| {
        let scalars = sample_scalars();
        let mut x = CpElement::zero();
        for ((i, j, k, l), s, n) in ts {
            let p = scalars[s].scale(n);
            x = &x + &normal_form(CpMonomial::new(i, j, k, l)).scale_point(&p);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_idempotent(x in cp_element()) {
        let again = x.terms().fold(CpElement::zero(), |acc, (b, p)| &acc + &normal_form(b.monomial()).scale_point(p));
        prop_assert_eq!(again, x);
    }

    #[test]
    fn ring_laws_on_random_elements(x in cp_element(), y in cp_element(), z in cp_element()) {
        prop_assert_eq!(cp_mul(&x, &y), cp_mul(&y, &x));
        prop_assert_eq!(cp_mul(&cp_mul(&x, &y), &z), cp_mul(&x, &cp_mul(&y, &z)));
        prop_assert_eq!(cp_mul(&x, &(&y + &z)), &cp_mul(&x, &y) + &cp_mul(&x, &z));
        prop_assert_eq!(chi_star(&cp_mul(&x, &y)), cp_mul(&chi_star(&x), &chi_star(&y)));
    }
}
