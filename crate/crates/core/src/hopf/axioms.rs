use serde::{Deserialize, Serialize};

use super::{HopfAlgebra, TensorElement};
use crate::error::Result;
use crate::ncpoly::{Element, Sector};

/// One axiom instance. Serializes as
/// `{preset, axiom, subject, pass, residual_rendering}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub preset: String,
    pub axiom: String,
    pub subject: String,
    pub pass: bool,
    /// `0` on success; tensor slots separated by `(x)`.
    pub residual_rendering: String,
}

impl AxiomCheck {
    pub(crate) fn from_tensor(h: &HopfAlgebra, axiom: &str, subject: String, residual: &TensorElement) -> Self {
        Self {
            preset: h.label(),
            axiom: axiom.into(),
            subject,
            pass: residual.is_zero(),
            residual_rendering: residual.render_ascii(),
        }
    }

    pub(crate) fn from_element(h: &HopfAlgebra, axiom: &str, subject: String, residual: &Element) -> Self {
        Self {
            preset: h.label(),
            axiom: axiom.into(),
            subject,
            pass: residual.is_zero(),
            residual_rendering: residual.render(),
        }
    }

    pub(crate) fn error(h: &HopfAlgebra, axiom: &str, subject: String, err: &crate::Error) -> Self {
        Self {
            preset: h.label(),
            axiom: axiom.into(),
            subject,
            pass: false,
            residual_rendering: format!("error: {err}"),
        }
    }
}

/// Generators of the sector plus `q` and `q^-1`.
fn subjects(h: &HopfAlgebra) -> Vec<(String, Element)> {
    let mut v: Vec<(String, Element)> =
        h.sector().generators().into_iter().map(|g| (g.to_string(), Element::generator(g))).collect();
    v.push(("q".into(), Element::q(1)));
    v.push(("q^-1".into(), Element::q(-1)));
    v
}

fn run(h: &HopfAlgebra, axiom: &str, f: impl Fn(&Element) -> Result<TensorElement>) -> Vec<AxiomCheck> {
    subjects(h)
        .into_iter()
        .map(|(name, e)| match f(&e) {
            Ok(t) => AxiomCheck::from_tensor(h, axiom, name, &t),
            Err(err) => AxiomCheck::error(h, axiom, name, &err),
        })
        .collect()
}

/// `(Δ ⊗ id) ∘ Δ = (id ⊗ Δ) ∘ Δ` on every generator.
pub fn check_coassociativity(h: &HopfAlgebra) -> Vec<AxiomCheck> {
    run(h, "coassociativity", |e| {
        let d = h.coproduct(e)?;
        let left = h.coproduct_on_slot(&d, 0)?;
        let right = h.coproduct_on_slot(&d, 1)?;
        Ok(left - right)
    })
}

/// `(ε ⊗ id) ∘ Δ = id = (id ⊗ ε) ∘ Δ`; the residual sums both defects.
pub fn check_counit_axiom(h: &HopfAlgebra) -> Vec<AxiomCheck> {
    run(h, "counit", |e| {
        let d = h.coproduct(e)?;
        let left = h.counit_on_slot(&d, 0)? - e.clone();
        let right = h.counit_on_slot(&d, 1)? - e.clone();
        Ok(TensorElement::pure(&[left, Element::one()]) + TensorElement::pure(&[Element::one(), right]))
    })
}

/// `m ∘ (S ⊗ id) ∘ Δ = ε(·) 1 = m ∘ (id ⊗ S) ∘ Δ`.
pub fn check_antipode_axiom(h: &HopfAlgebra) -> Vec<AxiomCheck> {
    run(h, "antipode", |e| {
        let d = h.coproduct(e)?;
        let unit = Element::from_scalar(h.counit(e)?);
        let left = h.antipode_then_multiply(&d, 0)? - unit.clone();
        let right = h.antipode_then_multiply(&d, 1)? - unit;
        Ok(TensorElement::pure(&[left, Element::one()]) + TensorElement::pure(&[Element::one(), right]))
    })
}

/// Pairs checked for `Δ([a, b]) = [Δa, Δb]`.
///
/// The phase space is a cross product, not a Hopf algebra, so there only
/// pairs inside the position algebra and inside the momentum algebra are
/// checked.
pub fn homomorphism_pairs(h: &HopfAlgebra) -> Vec<((String, Element), (String, Element))> {
    let subjects: Vec<(String, Element)> = subjects(h).into_iter().filter(|(n, _)| n != "q^-1").collect();
    let class = |e: &Element| -> u8 {
        match e.generators().next() {
            Some(g) if g.is_position() => 0,
            _ => 1,
        }
    };
    let mut out = Vec::new();
    for (i, a) in subjects.iter().enumerate() {
        for b in &subjects[i + 1..] {
            if h.sector() == Sector::PhaseSpace && class(&a.1) != class(&b.1) {
                continue;
            }
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

pub fn check_coproduct_homomorphism(h: &HopfAlgebra) -> Vec<AxiomCheck> {
    homomorphism_pairs(h)
        .into_iter()
        .map(|((na, a), (nb, b))| {
            let subject = format!("[{na}, {nb}]");
            let residual = (|| -> Result<TensorElement> {
                let lhs = h.coproduct(&h.preset().commutator(&a, &b)?)?;
                let rhs = h.coproduct(&a)?.commutator(&h.coproduct(&b)?, h.preset())?;
                Ok(lhs - rhs)
            })();
            match residual {
                Ok(t) => AxiomCheck::from_tensor(h, "coproduct-homomorphism", subject, &t),
                Err(e) => AxiomCheck::error(h, "coproduct-homomorphism", subject, &e),
            }
        })
        .collect()
}

/// All four axiom families.
pub fn check_all(h: &HopfAlgebra) -> Vec<AxiomCheck> {
    let mut v = check_coassociativity(h);
    v.extend(check_counit_axiom(h));
    v.extend(check_antipode_axiom(h));
    v.extend(check_coproduct_homomorphism(h));
    v
}
