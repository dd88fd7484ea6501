use kappa_hopf::duality::{
    basis_map_check, basis_map_check_between, check_pairing_compatibility, derive_phase_space_relations, derive_with,
    Convention, Direction, PairingContext,
};
use kappa_hopf::hopf::{HopfAlgebra, TensorElement};
use kappa_hopf::ncpoly::{classical_limit, Basis, Element, Generator, Monomial, Sector};
use kappa_hopf::scalar::{GaussianRational, Scalar};
use proptest::prelude::*;

fn x(mu: usize) -> Element {
    Element::generator(Generator::x(mu))
}

fn p(mu: usize) -> Element {
    Element::generator(Generator::p(mu))
}

fn momentum_letters() -> Vec<Element> {
    let mut v: Vec<Element> = (0..4).map(p).collect();
    v.push(Element::q(1));
    v.push(Element::q(-1));
    v.push(Element::q(-2));
    v
}

fn position_words() -> Vec<Element> {
    let mut v = vec![Element::one()];
    for a in 0..4 {
        v.push(x(a));
        for b in 0..4 {
            v.push(Element::monomial(Scalar::one(), &[Generator::x(a), Generator::x(b)], 0).unwrap());
        }
    }
    v
}

fn find<'a>(rows: &'a [kappa_hopf::duality::DerivationRow], pair: &str) -> &'a kappa_hopf::duality::DerivationRow {
    rows.iter().find(|r| r.pair == pair).unwrap()
}

#[test]
fn derived_tables_match_presets() {
    for basis in Basis::ALL {
        let rows = derive_phase_space_relations(basis);
        assert_eq!(rows.len(), 36);
        for r in &rows {
            assert!(r.matches, "{basis} {}: derived {} vs table {}", r.pair, r.derived_rendering, r.table_rendering);
            assert_eq!(r.convention, Convention::Forward);
        }
    }
}

#[test]
fn bicross_rows() {
    let rows = derive_phase_space_relations(Basis::Bicross);
    assert_eq!(find(&rows, "[x0, P1]").derived_rendering, "(i hbar kappa^-1 c^-1) P1");
    assert_eq!(find(&rows, "[x1, P0]").derived_rendering, "0");
    assert_eq!(find(&rows, "[x1, P1]").derived_rendering, "i hbar");
    assert_eq!(find(&rows, "[x0, P0]").derived_rendering, "-i hbar");
}

#[test]
fn standard_rows() {
    let rows = derive_phase_space_relations(Basis::Standard);
    assert_eq!(find(&rows, "[x2, P2]").derived_rendering, "(i hbar) q");
    assert_eq!(find(&rows, "[x0, P3]").derived_rendering, "(1/2 i hbar kappa^-1 c^-1) P3");
}

#[test]
fn derivation_json_shape() {
    let rows = derive_phase_space_relations(Basis::Bicross);
    let v = serde_json::to_value(&rows[0]).unwrap();
    for key in ["basis", "pair", "derived_rendering", "table_rendering", "match", "convention"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["basis"], "bicross");
}

#[test]
fn forward_convention_respects_position_relations() {
    for basis in Basis::ALL {
        let fwd = check_pairing_compatibility(&PairingContext::forward(basis));
        assert!(fwd.iter().all(|c| c.pass));
        let rev = check_pairing_compatibility(&PairingContext::new(basis, Convention::Reversed));
        assert!(rev.iter().any(|c| !c.pass), "{basis}");
    }
}

#[test]
fn reversed_convention_gives_same_generator_table() {
    for basis in Basis::ALL {
        let rows = derive_with(&PairingContext::new(basis, Convention::Reversed));
        assert!(rows.iter().all(|r| r.matches));
    }
}

#[test]
fn group_like_pairing_matches_series() {
    // e^{a P0 / 2 kappa c} truncated at order 4, each P0^n paired through the
    // n-fold coproduct of the primitive x_mu
    let ctx = PairingContext::forward(Basis::Bicross);
    for a in [-2i64, -1, 1, 3] {
        for mu in 0..4 {
            let mut series = Scalar::zero();
            let mut fact = 1i64;
            for n in 1..=4i64 {
                fact *= n;
                let coef =
                    Scalar::monomial(GaussianRational::ratio(a.pow(n as u32), 2i64.pow(n as u32) * fact), 0, -n, -n);
                // Δ^(n-1)(x) puts x in one slot and 1 in the others
                let eps = ctx.hopf().counit(&p(0)).unwrap();
                let mut slots = Scalar::zero();
                for _ in 0..n {
                    let mut term = ctx.pair(&p(0), &x(mu)).unwrap();
                    for _ in 1..n {
                        term = &term * &eps;
                    }
                    slots += &term;
                }
                series += &(&coef * &slots);
            }
            assert_eq!(ctx.pair(&Element::q(a), &x(mu)).unwrap(), series, "a={a} mu={mu}");
        }
    }
}

#[test]
fn pairing_and_action_point_values() {
    let ctx = PairingContext::forward(Basis::Bicross);
    let ihbar_kc = Scalar::monomial(GaussianRational::i(), 1, -1, -1);
    assert_eq!(ctx.pair(&Element::q(-2), &x(0)).unwrap(), -ihbar_kc.clone());
    assert_eq!(ctx.left_action(&Element::q(-2), &x(0)).unwrap(), x(0) - Element::from_scalar(ihbar_kc.clone()));
    let prod = ctx.cross_multiply(&p(1), &x(0)).unwrap();
    let expected =
        Element::monomial(Scalar::one(), &[Generator::x(0), Generator::p(1)], 0).unwrap() - p(1).scale(&ihbar_kc);
    assert_eq!(prod, expected);
}

#[test]
fn unit_acts_trivially() {
    for basis in Basis::ALL {
        let ctx = PairingContext::forward(basis);
        for w in position_words() {
            let normal = ctx.hopf().preset().normal_form(&w).unwrap();
            assert_eq!(ctx.left_action(&Element::one(), &w).unwrap(), normal);
            assert_eq!(ctx.pair(&p(2), &Element::one()).unwrap(), Scalar::zero());
        }
    }
}

#[test]
fn module_algebra_law() {
    for basis in Basis::ALL {
        let ctx = PairingContext::forward(basis);
        let h = ctx.hopf();
        let pre = h.preset();
        let words = position_words();
        for pm in momentum_letters() {
            let split: TensorElement = h.coproduct(&pm).unwrap();
            for a in &words {
                for b in &words {
                    let ab = pre.multiply(a, b).unwrap();
                    let lhs = ctx.left_action(&pm, &ab).unwrap();
                    let mut rhs = Element::zero();
                    for (slots, c) in split.terms() {
                        let p1 = Element::term(Scalar::one(), slots[0].clone());
                        let p2 = Element::term(Scalar::one(), slots[1].clone());
                        let t =
                            pre.multiply(&ctx.left_action(&p1, a).unwrap(), &ctx.left_action(&p2, b).unwrap()).unwrap();
                        rhs = rhs + t.scale(c);
                    }
                    assert_eq!(lhs, rhs, "{basis}: {pm} |> ({a})({b})");
                }
            }
        }
    }
}

#[test]
fn action_is_a_representation() {
    for basis in Basis::ALL {
        let ctx = PairingContext::forward(basis);
        let pre = ctx.hopf().preset();
        for a in momentum_letters() {
            for b in momentum_letters() {
                let ab = pre.multiply(&a, &b).unwrap();
                for w in position_words() {
                    let lhs = ctx.left_action(&ab, &w).unwrap();
                    let rhs = ctx.left_action(&a, &ctx.left_action(&b, &w).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "{basis}: ({a})({b}) |> {w}");
                }
            }
        }
    }
}

#[test]
fn classical_limit_is_canonical() {
    let hbar_i = Scalar::monomial(GaussianRational::i(), 1, 0, 0);
    for basis in Basis::ALL {
        let ctx = PairingContext::forward(basis);
        let letters: Vec<Generator> = Generator::ALL.iter().copied().filter(|g| !g.is_lorentz()).collect();
        for &a in &letters {
            for &b in &letters {
                let derived = ctx.cross_commutator(&Element::generator(a), &Element::generator(b)).unwrap();
                let limit = classical_limit(&derived);
                let expected = if a.is_position() && b.is_momentum() && a.index() == b.index() {
                    let g = if a.index() == 0 { -1 } else { 1 };
                    Element::from_scalar(hbar_i.scale_int(g))
                } else if a.is_momentum() && b.is_position() && a.index() == b.index() {
                    let g = if a.index() == 0 { 1 } else { -1 };
                    Element::from_scalar(hbar_i.scale_int(g))
                } else {
                    Element::zero()
                };
                assert_eq!(limit, expected, "{basis}: [{a}, {b}]");
            }
        }
    }
}

#[test]
fn basis_map_candidates() {
    let report = basis_map_check().unwrap();
    assert_eq!(report.candidates.len(), 4);
    assert!(report.candidates.iter().all(|c| c.counit_pass));
    let names: Vec<&str> = report.passing.iter().map(String::as_str).collect();
    assert_eq!(names, ["standard->bicross, s=+1", "bicross->standard, s=-1"]);
    let c = report.candidates.iter().find(|c| c.direction == Direction::StandardToBicross && c.sign == -1).unwrap();
    assert!(c.residuals.iter().any(|(g, r)| g == "P1" && r != "0"));
    assert!(c.residuals.iter().any(|(g, r)| g == "P0" && r == "0"));
}

#[test]
fn basis_map_with_printed_standard_coproduct() {
    let bic = HopfAlgebra::new(Basis::Bicross, Sector::Poincare);
    let mut std = HopfAlgebra::new(Basis::Standard, Sector::Poincare);
    for i in 1..=3 {
        let d = TensorElement::pure(&[p(i), Element::q(-1)]) + TensorElement::pure(&[Element::q(1), p(i)]);
        std = std.with_coproduct(Generator::p(i), d);
    }
    let report = basis_map_check_between(&bic, &std).unwrap();
    assert!(report.passing.is_empty());
}

fn phase_monomial() -> impl Strategy<Value = Element> {
    let xs = proptest::collection::vec(0usize..4, 0..=2);
    let ps = proptest::collection::vec(0usize..4, 0..=2);
    (xs, ps, -2i64..=2, -2i64..=2).prop_map(|(mut xs, mut ps, q, re)| {
        xs.sort();
        ps.sort();
        let mut w: Vec<Generator> = xs.into_iter().map(Generator::x).collect();
        w.extend(ps.into_iter().map(Generator::p));
        let coef = Scalar::from_gauss(GaussianRational::from_int(if re == 0 { 1 } else { re }));
        Element::term(coef, Monomial::new(w, q).unwrap())
    })
}

fn phase_element() -> impl Strategy<Value = Element> {
    proptest::collection::vec(phase_monomial(), 1..=2).prop_map(|v| v.into_iter().fold(Element::zero(), |a, b| a + b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cross_product_is_associative(
        std in any::<bool>(),
        a in phase_element(),
        b in phase_element(),
        c in phase_element(),
    ) {
        let ctx = PairingContext::forward(if std { Basis::Standard } else { Basis::Bicross });
        let ab = ctx.cross_multiply(&a, &b).unwrap();
        let bc = ctx.cross_multiply(&b, &c).unwrap();
        prop_assert_eq!(ctx.cross_multiply(&ab, &c).unwrap(), ctx.cross_multiply(&a, &bc).unwrap());
    }

    #[test]
    fn cross_product_agrees_with_relation_table(
        std in any::<bool>(),
        a in phase_element(),
        b in phase_element(),
    ) {
        let ctx = PairingContext::forward(if std { Basis::Standard } else { Basis::Bicross });
        let table = ctx.hopf().preset().multiply(&a, &b).unwrap();
        prop_assert_eq!(ctx.cross_multiply(&a, &b).unwrap(), table);
    }
}
