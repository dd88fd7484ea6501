//! Coproduct, antipode and counit for both bases, extended from generator
//! tables as (anti-)homomorphisms, plus the Hopf axiom checks.

mod axioms;
mod casimir;
mod tensor;

use std::collections::BTreeMap;

pub use axioms::{
    check_all, check_antipode_axiom, check_coassociativity, check_coproduct_homomorphism, check_counit_axiom,
    AxiomCheck,
};
pub use casimir::{casimir, check_centrality, check_centrality_in};
pub use tensor::{TensorElement, TENSOR_SEP, TENSOR_SEP_ASCII};

use crate::error::Result;
use crate::ncpoly::{levi_civita, AlgebraPreset, Basis, Element, Generator, Monomial, Sector};
use crate::scalar::{GaussianRational, Scalar};

/// An algebra preset together with its coalgebra tables.
///
/// `q` is group-like: `Δ(q) = q ⊗ q`, `S(q) = q^-1`, `ε(q) = 1`.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    preset: AlgebraPreset,
    coproducts: BTreeMap<Generator, TensorElement>,
    antipodes: BTreeMap<Generator, Element>,
}

impl HopfAlgebra {
    pub fn new(basis: Basis, sector: Sector) -> Self {
        Self::from_preset(AlgebraPreset::new(basis, sector))
    }

    /// Attaches the coalgebra tables matching the preset's basis.
    pub fn from_preset(preset: AlgebraPreset) -> Self {
        let mut coproducts = BTreeMap::new();
        let mut antipodes = BTreeMap::new();
        for g in preset.generators() {
            let (d, s) = generator_tables(&preset, g);
            coproducts.insert(g, d);
            antipodes.insert(g, s);
        }
        Self { preset, coproducts, antipodes }
    }

    pub fn all() -> Vec<Self> {
        AlgebraPreset::all().into_iter().map(Self::from_preset).collect()
    }

    pub fn preset(&self) -> &AlgebraPreset {
        &self.preset
    }

    pub fn basis(&self) -> Basis {
        self.preset.basis()
    }

    pub fn sector(&self) -> Sector {
        self.preset.sector()
    }

    pub fn label(&self) -> String {
        self.preset.label()
    }

    /// Replaces the coproduct of one generator.
    pub fn with_coproduct(mut self, g: Generator, value: TensorElement) -> Self {
        self.coproducts.insert(g, value);
        self
    }

    /// Replaces the antipode of one generator.
    pub fn with_antipode(mut self, g: Generator, value: Element) -> Self {
        self.antipodes.insert(g, value);
        self
    }

    /// Generator table entry for `Δ(g)`.
    pub fn generator_coproduct(&self, g: Generator) -> Result<&TensorElement> {
        self.preset.check_element(&Element::generator(g))?;
        Ok(&self.coproducts[&g])
    }

    pub fn generator_antipode(&self, g: Generator) -> Result<&Element> {
        self.preset.check_element(&Element::generator(g))?;
        Ok(&self.antipodes[&g])
    }

    /// `Δ` extended multiplicatively.
    pub fn coproduct(&self, e: &Element) -> Result<TensorElement> {
        self.preset.check_element(e)?;
        let mut out = TensorElement::zero(2);
        for (m, c) in e.terms() {
            out = out + self.coproduct_monomial(m)?.scale(c);
        }
        Ok(out)
    }

    pub(crate) fn coproduct_monomial(&self, m: &Monomial) -> Result<TensorElement> {
        let mut acc = TensorElement::one(2);
        for g in m.word() {
            acc = acc.multiply(&self.coproducts[g], &self.preset)?;
        }
        if m.qexp() != 0 {
            let q = Element::q(m.qexp());
            acc = acc.multiply(&TensorElement::pure(&[q.clone(), q]), &self.preset)?;
        }
        Ok(acc)
    }

    /// `S` extended as an anti-homomorphism.
    pub fn antipode(&self, e: &Element) -> Result<Element> {
        self.preset.check_element(e)?;
        let mut out = Element::zero();
        for (m, c) in e.terms() {
            let mut factors = vec![Element::q(-m.qexp())];
            factors.extend(m.word().iter().rev().map(|g| self.antipodes[g].clone()));
            out = out + self.preset.product(&factors)?.scale(c);
        }
        Ok(out)
    }

    /// `ε`: every generator except `q` is annihilated.
    pub fn counit(&self, e: &Element) -> Result<Scalar> {
        self.preset.check_element(e)?;
        let mut out = Scalar::zero();
        for (m, c) in e.terms() {
            if m.word().is_empty() {
                out += c;
            }
        }
        Ok(out)
    }

    /// Applies `Δ` to one slot of a tensor, raising its rank by one.
    pub fn coproduct_on_slot(&self, t: &TensorElement, slot: usize) -> Result<TensorElement> {
        let mut out = TensorElement::zero(t.rank() + 1);
        for (slots, c) in t.terms() {
            let split = self.coproduct_monomial(&slots[slot])?;
            for (pair, s) in split.terms() {
                let mut v = slots[..slot].to_vec();
                v.extend(pair.iter().cloned());
                v.extend(slots[slot + 1..].iter().cloned());
                out.add_term(v, &(c * s));
            }
        }
        Ok(out)
    }

    /// Applies `ε` to one slot of a rank-2 tensor.
    pub fn counit_on_slot(&self, t: &TensorElement, slot: usize) -> Result<Element> {
        let mut out = Element::zero();
        for (slots, c) in t.terms() {
            let eps = self.counit(&Element::term(Scalar::one(), slots[slot].clone()))?;
            out.add_term(slots[1 - slot].clone(), &(c * &eps));
        }
        Ok(out)
    }

    /// `m ∘ (S ⊗ id)` (slot 0) or `m ∘ (id ⊗ S)` (slot 1) on a rank-2 tensor.
    pub fn antipode_then_multiply(&self, t: &TensorElement, slot: usize) -> Result<Element> {
        let mut out = Element::zero();
        for (slots, c) in t.terms() {
            let mut a = Element::term(Scalar::one(), slots[0].clone());
            let mut b = Element::term(Scalar::one(), slots[1].clone());
            if slot == 0 {
                a = self.antipode(&a)?;
            } else {
                b = self.antipode(&b)?;
            }
            out = out + self.preset.multiply(&a, &b)?.scale(c);
        }
        Ok(out)
    }
}

fn imag(n: i64, d: i64, h: i64, k: i64, c: i64) -> Scalar {
    Scalar::monomial(&GaussianRational::i() * &GaussianRational::ratio(n, d), h, k, c)
}

fn real(n: i64, d: i64, h: i64, k: i64, c: i64) -> Scalar {
    Scalar::monomial(GaussianRational::ratio(n, d), h, k, c)
}

/// `(Δ(g), S(g))` for one generator.
fn generator_tables(preset: &AlgebraPreset, g: Generator) -> (TensorElement, Element) {
    use crate::ncpoly::GeneratorKind::*;
    let el = |gens: &[Generator], q: i64| Element::monomial(Scalar::one(), gens, q).expect("table monomial");
    let gen = Element::generator;
    let one = Element::one();
    let prod = |fs: &[Element]| preset.product(fs).expect("table product");
    let primitive = TensorElement::pure(&[gen(g), one.clone()]) + TensorElement::pure(&[one.clone(), gen(g)]);
    let i = g.index();
    match (g.kind(), preset.basis()) {
        (Position | Rotation, _) => (primitive, -gen(g)),
        (Momentum, _) if i == 0 => (primitive, -gen(g)),
        (Momentum, Basis::Bicross) => {
            // Δ(P_i) = P_i ⊗ 1 + q^-2 ⊗ P_i ; S(P_i) = -P_i q^2
            let d = TensorElement::pure(&[gen(g), one.clone()]) + TensorElement::pure(&[Element::q(-2), gen(g)]);
            (d, -el(&[g], 2))
        }
        (Momentum, Basis::Standard) => {
            // Δ(P_i) = P_i ⊗ q + q^-1 ⊗ P_i ; S(P_i) = -P_i
            let d = TensorElement::pure(&[gen(g), Element::q(1)]) + TensorElement::pure(&[Element::q(-1), gen(g)]);
            (d, -gen(g))
        }
        (Boost, Basis::Bicross) => {
            // Δ(N_i) = N_i ⊗ 1 + q^-2 ⊗ N_i + (1/κc) ε_ijk P_j ⊗ M_k
            // S(N_i) = -q^2 N_i + (1/κc) ε_ijk q^2 P_j M_k
            let mut d = TensorElement::pure(&[gen(g), one.clone()]) + TensorElement::pure(&[Element::q(-2), gen(g)]);
            let mut s = -prod(&[Element::q(2), gen(g)]);
            for j in 1..=3 {
                for k in 1..=3 {
                    let e = levi_civita(i, j, k);
                    if e == 0 {
                        continue;
                    }
                    let coef = real(e, 1, 0, -1, -1);
                    d = d + TensorElement::pure(&[gen(Generator::p(j)), gen(Generator::m(k))]).scale(&coef);
                    s = s + prod(&[Element::q(2), gen(Generator::p(j)), gen(Generator::m(k))]).scale(&coef);
                }
            }
            (d, s)
        }
        (Boost, Basis::Standard) => {
            // Δ(N_i) = N_i ⊗ q + q^-1 ⊗ N_i + (1/2κc) ε_ijk (P_j ⊗ M_k q + q^-1 M_j ⊗ P_k)
            // S(N_i) = -N_i + (3i/2κc) P_i
            let mut d = TensorElement::pure(&[gen(g), Element::q(1)]) + TensorElement::pure(&[Element::q(-1), gen(g)]);
            for j in 1..=3 {
                for k in 1..=3 {
                    let e = levi_civita(i, j, k);
                    if e == 0 {
                        continue;
                    }
                    let coef = real(e, 2, 0, -1, -1);
                    let a = TensorElement::pure(&[gen(Generator::p(j)), prod(&[gen(Generator::m(k)), Element::q(1)])]);
                    let b = TensorElement::pure(&[prod(&[Element::q(-1), gen(Generator::m(j))]), gen(Generator::p(k))]);
                    d = d + (a + b).scale(&coef);
                }
            }
            let s = -gen(g) + gen(Generator::p(i)).scale(&imag(3, 2, 0, -1, -1));
            (d, s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn q(n: i64) -> Element {
        Element::q(n)
    }

    #[test]
    fn momentum_coproducts() {
        let h = HopfAlgebra::new(Basis::Bicross, Sector::Poincare);
        let d = h.coproduct(&Element::generator(P1)).unwrap();
        assert_eq!(d.to_string(), "P1 ⊗ 1 + q^-2 ⊗ P1");
        let h = HopfAlgebra::new(Basis::Standard, Sector::Poincare);
        let d = h.coproduct(&Element::generator(P1)).unwrap();
        assert_eq!(d.to_string(), "P1 ⊗ q + q^-1 ⊗ P1");
        assert_eq!(h.coproduct(&Element::one()).unwrap(), TensorElement::one(2));
    }

    #[test]
    fn coproduct_is_multiplicative_on_momenta() {
        for basis in Basis::ALL {
            let h = HopfAlgebra::new(basis, Sector::Poincare);
            let pq = Element::monomial(Scalar::one(), &[P1], -1).unwrap();
            let direct = h.coproduct(&pq).unwrap();
            let two_way = h
                .coproduct(&Element::generator(P1))
                .unwrap()
                .multiply(&h.coproduct(&q(-1)).unwrap(), h.preset())
                .unwrap();
            assert_eq!(direct, two_way);
        }
    }

    #[test]
    fn antipodes() {
        let h = HopfAlgebra::new(Basis::Bicross, Sector::Poincare);
        assert_eq!(h.antipode(&Element::generator(P1)).unwrap(), -Element::monomial(Scalar::one(), &[P1], 2).unwrap());
        let h = HopfAlgebra::new(Basis::Standard, Sector::Poincare);
        assert_eq!(h.antipode(&Element::generator(P1)).unwrap(), -Element::generator(P1));
        let expected = -Element::generator(N1) + Element::generator(P1).scale(&imag(3, 2, 0, -1, -1));
        assert_eq!(h.antipode(&Element::generator(N1)).unwrap(), expected);
        assert_eq!(h.antipode(&q(3)).unwrap(), q(-3));
    }

    #[test]
    fn double_antipode_on_momenta() {
        for basis in Basis::ALL {
            let h = HopfAlgebra::new(basis, Sector::Poincare);
            for mu in 0..4 {
                let p = Element::generator(Generator::p(mu));
                let s2 = h.antipode(&h.antipode(&p).unwrap()).unwrap();
                assert_eq!(s2, p, "{basis}: S^2(P{mu})");
            }
        }
    }

    #[test]
    fn counits() {
        let h = HopfAlgebra::new(Basis::Bicross, Sector::PhaseSpace);
        assert!(h.counit(&Element::generator(P0)).unwrap().is_zero());
        assert!(h.counit(&q(3)).unwrap().is_one());
        let e = Element::monomial(Scalar::one(), &[X0, X1], 0).unwrap() + Element::from_scalar(Scalar::from_int(5));
        assert_eq!(h.counit(&e).unwrap(), Scalar::from_int(5));
    }

    #[test]
    fn sector_errors() {
        let h = HopfAlgebra::new(Basis::Bicross, Sector::PhaseSpace);
        assert!(h.coproduct(&Element::generator(N1)).is_err());
        assert!(h.antipode(&Element::generator(M2)).is_err());
        assert!(h.counit(&Element::generator(N3)).is_err());
    }
}
