use kappa_hopf::hopf::{
    casimir, check_all, check_antipode_axiom, check_centrality, check_coassociativity, check_coproduct_homomorphism,
    check_counit_axiom, HopfAlgebra, TensorElement,
};
use kappa_hopf::ncpoly::{AlgebraPreset, Basis, Element, Generator, Monomial, Sector};
use kappa_hopf::scalar::{GaussianRational, Scalar};
use proptest::prelude::*;

fn p(i: usize) -> Element {
    Element::generator(Generator::p(i))
}

#[test]
fn every_axiom_passes_on_every_preset() {
    for h in HopfAlgebra::all() {
        let checks = check_all(&h);
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(c.pass, "{} {} {}: {}", c.preset, c.axiom, c.subject, c.residual_rendering);
        }
    }
}

#[test]
fn coassociativity_of_bicross_momentum() {
    let h = HopfAlgebra::new(Basis::Bicross, Sector::Poincare);
    let d = h.coproduct(&p(1)).unwrap();
    let left = h.coproduct_on_slot(&d, 0).unwrap();
    let right = h.coproduct_on_slot(&d, 1).unwrap();
    assert_eq!(left, right);
    assert_eq!(left.to_string(), "P1 ⊗ 1 ⊗ 1 + q^-2 ⊗ P1 ⊗ 1 + q^-2 ⊗ q^-2 ⊗ P1");
}

#[test]
fn named_axiom_subjects() {
    let bic = HopfAlgebra::new(Basis::Bicross, Sector::Poincare);
    let std = HopfAlgebra::new(Basis::Standard, Sector::Poincare);
    let find = |v: Vec<kappa_hopf::hopf::AxiomCheck>, s: &str| v.into_iter().find(|c| c.subject == s).unwrap();
    assert!(find(check_coassociativity(&std), "N1").pass);
    assert!(find(check_counit_axiom(&bic), "N1").pass);
    assert!(find(check_antipode_axiom(&bic), "N1").pass);
    assert!(find(check_antipode_axiom(&bic), "q").pass);
    assert!(find(check_coproduct_homomorphism(&bic), "[N1, P1]").pass);
    assert!(find(check_coproduct_homomorphism(&bic), "[P0, P1]").pass);
    let ps = HopfAlgebra::new(Basis::Bicross, Sector::PhaseSpace);
    assert!(find(check_coproduct_homomorphism(&ps), "[x0, x1]").pass);
}

#[test]
fn counit_on_bicross_momentum_coproduct() {
    let h = HopfAlgebra::new(Basis::Bicross, Sector::Poincare);
    let d = h.coproduct(&p(1)).unwrap();
    assert_eq!(h.counit_on_slot(&d, 0).unwrap(), p(1));
    assert_eq!(h.counit_on_slot(&d, 1).unwrap(), p(1));
}

#[test]
fn coproduct_of_product_two_ways() {
    for basis in Basis::ALL {
        let h = HopfAlgebra::new(basis, Sector::Poincare);
        let e = Element::monomial(Scalar::one(), &[Generator::p(1)], -1).unwrap();
        let direct = h.coproduct(&e).unwrap();
        let split = h.coproduct(&p(1)).unwrap().multiply(&h.coproduct(&Element::q(-1)).unwrap(), h.preset()).unwrap();
        assert_eq!(direct, split, "{basis}");
    }
}

#[test]
fn double_antipode_values() {
    let std = HopfAlgebra::new(Basis::Standard, Sector::Poincare);
    assert_eq!(std.antipode(&std.antipode(&p(1)).unwrap()).unwrap(), p(1));
    let bic = HopfAlgebra::new(Basis::Bicross, Sector::Poincare);
    assert_eq!(bic.antipode(&bic.antipode(&p(2)).unwrap()).unwrap(), p(2));
    let n1 = Element::generator(Generator::n(1));
    let s2 = std.antipode(&std.antipode(&n1).unwrap()).unwrap();
    assert_eq!(s2.render(), "N1 + (-3 i kappa^-1 c^-1) P1");
}

#[test]
fn casimir_is_central_in_both_bases() {
    for basis in Basis::ALL {
        let checks = check_centrality(basis);
        assert_eq!(checks.len(), 10);
        for c in checks {
            assert!(c.pass, "{} {}: {}", c.preset, c.subject, c.residual_rendering);
        }
    }
}

#[test]
fn casimir_rendering() {
    assert_eq!(
        casimir(Basis::Standard).render(),
        "(kappa^2) q^-2 - 2 kappa^2 + (kappa^2) q^2 + (-c^-2) P1^2 + (-c^-2) P2^2 + (-c^-2) P3^2"
    );
}

#[test]
fn printed_standard_momentum_coproduct_breaks_homomorphism() {
    let mut h = HopfAlgebra::new(Basis::Standard, Sector::Poincare);
    for i in 1..=3 {
        let d = TensorElement::pure(&[p(i), Element::q(-1)]) + TensorElement::pure(&[Element::q(1), p(i)]);
        h = h.with_coproduct(Generator::p(i), d);
    }
    let failing: Vec<_> = check_coproduct_homomorphism(&h).into_iter().filter(|c| !c.pass).collect();
    assert!(failing.iter().any(|c| c.subject == "[N1, P2]"));
}

#[test]
fn perturbed_coproduct_is_caught() {
    let h = HopfAlgebra::new(Basis::Bicross, Sector::Poincare);
    let d = TensorElement::pure(&[p(1), Element::one()]) + TensorElement::pure(&[Element::q(-1), p(1)]);
    let h = h.with_coproduct(Generator::p(1), d);
    assert!(check_all(&h).iter().any(|c| !c.pass));
}

#[test]
fn sector_errors() {
    let h = HopfAlgebra::new(Basis::Bicross, Sector::PhaseSpace);
    assert!(h.coproduct(&Element::generator(Generator::n(1))).is_err());
}

fn small_element(preset: &AlgebraPreset) -> BoxedStrategy<Element> {
    let gens = preset.generators();
    let term = (-3i64..=3, -2i64..=2, proptest::collection::vec(proptest::sample::select(gens), 0..=2), -2i64..=2)
        .prop_map(|(re, im, w, q)| {
            let coef = &GaussianRational::from_int(re) + &(&GaussianRational::i() * &GaussianRational::from_int(im));
            Element::term(Scalar::monomial(coef, 0, 0, 0), Monomial::new(w, q).unwrap())
        });
    proptest::collection::vec(term, 1..=3).prop_map(|ts| ts.into_iter().fold(Element::zero(), |a, b| a + b)).boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn counit_is_multiplicative(
        (idx, a, b) in (0usize..2).prop_flat_map(|i| {
            let preset = AlgebraPreset::all()[i].clone();
            (Just(i), small_element(&preset), small_element(&preset))
        })
    ) {
        let h = HopfAlgebra::all().remove(idx);
        let ab = h.preset().multiply(&a, &b).unwrap();
        prop_assert_eq!(h.counit(&ab).unwrap(), &h.counit(&a).unwrap() * &h.counit(&b).unwrap());
    }

    #[test]
    fn coproduct_is_multiplicative_on_random_elements(
        (idx, a, b) in (0usize..2).prop_flat_map(|i| {
            let preset = AlgebraPreset::all()[i].clone();
            (Just(i), small_element(&preset), small_element(&preset))
        })
    ) {
        let h = HopfAlgebra::all().remove(idx);
        let ab = h.preset().multiply(&a, &b).unwrap();
        let lhs = h.coproduct(&ab).unwrap();
        let rhs = h.coproduct(&a).unwrap().multiply(&h.coproduct(&b).unwrap(), h.preset()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
