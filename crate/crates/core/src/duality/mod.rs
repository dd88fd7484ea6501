//! Pairing between positions and momenta, the left action it induces, and the
//! cross product built from that action.

mod basis_map;
mod derive;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use basis_map::{basis_map_check, basis_map_check_between, BasisMapCandidate, BasisMapReport, Direction};
pub use derive::{
    check_cross_relations, check_pairing_compatibility, derive_phase_space_relations, derive_with, CompatibilityCheck,
    DerivationRow,
};

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, TensorElement};
use crate::ncpoly::{metric, Basis, Element, Generator, Monomial, Sector};
use crate::scalar::{GaussianRational, Scalar};

/// How `<p, x y>` splits the coproduct of `p`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `<p_(1), x> <p_(2), y>`
    #[default]
    Forward,
    /// `<p_(2), x> <p_(1), y>`
    Reversed,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Forward, Convention::Reversed];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Forward => "forward",
            Convention::Reversed => "reversed",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Basis, pairing convention and the phase-space Hopf tables they act through.
#[derive(Clone, Debug)]
pub struct PairingContext {
    convention: Convention,
    hopf: HopfAlgebra,
}

impl PairingContext {
    pub fn new(basis: Basis, convention: Convention) -> Self {
        Self { convention, hopf: HopfAlgebra::new(basis, Sector::PhaseSpace) }
    }

    /// Forward convention.
    pub fn forward(basis: Basis) -> Self {
        Self::new(basis, Convention::Forward)
    }

    /// Uses the given phase-space tables, e.g. a perturbed fixture.
    pub fn from_hopf(hopf: HopfAlgebra, convention: Convention) -> Result<Self> {
        if hopf.sector() != Sector::PhaseSpace {
            return Err(Error::Pairing(format!("{} is not a phase-space preset", hopf.label())));
        }
        Ok(Self { convention, hopf })
    }

    pub fn basis(&self) -> Basis {
        self.hopf.basis()
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    /// `<p, x>` extended bilinearly.
    pub fn pair(&self, p: &Element, x: &Element) -> Result<Scalar> {
        check_momentum(p)?;
        check_position(x)?;
        let mut out = Scalar::zero();
        for (pm, pc) in p.terms() {
            for (xm, xc) in x.terms() {
                let v = self.pair_monomials(pm, xm.word())?;
                out += &(&(pc * xc) * &v);
            }
        }
        Ok(out)
    }

    fn pair_monomials(&self, p: &Monomial, xword: &[Generator]) -> Result<Scalar> {
        if xword.is_empty() {
            return Ok(if p.word().is_empty() { Scalar::one() } else { Scalar::zero() });
        }
        let mut split = TensorElement::pure(&[Element::term(Scalar::one(), p.clone())]);
        for k in 1..xword.len() {
            split = self.hopf.coproduct_on_slot(&split, k - 1)?;
        }
        let letters: Vec<Generator> = match self.convention {
            Convention::Forward => xword.to_vec(),
            Convention::Reversed => xword.iter().rev().copied().collect(),
        };
        let mut out = Scalar::zero();
        for (slots, c) in split.terms() {
            let mut v = c.clone();
            for (m, &x) in slots.iter().zip(&letters) {
                v = &v * &pair_single(m, x);
                if v.is_zero() {
                    break;
                }
            }
            out += &v;
        }
        Ok(out)
    }

    /// `p ▷ x = <p, x_(2)> x_(1)`.
    pub fn left_action(&self, p: &Element, x: &Element) -> Result<Element> {
        check_momentum(p)?;
        check_position(x)?;
        let split = self.hopf.coproduct(x)?;
        let mut out = Element::zero();
        for (slots, c) in split.terms() {
            let second = Element::term(Scalar::one(), slots[1].clone());
            let w = self.pair(p, &second)?;
            out.add_term(slots[0].clone(), &(c * &w));
        }
        Ok(out)
    }

    /// `(x ⊗ p)(y ⊗ r) = x (p_(1) ▷ y) ⊗ p_(2) r` on x-before-P elements.
    ///
    /// Uses only the position relations and the momentum product.
    pub fn cross_multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        let preset = self.hopf.preset();
        preset.check_element(a)?;
        preset.check_element(b)?;
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            let (xa, pa) = split_phase(ma)?;
            let dp = self.hopf.coproduct(&pa)?;
            for (mb, cb) in b.terms() {
                let (xb, pb) = split_phase(mb)?;
                let coef = ca * cb;
                for (slots, c) in dp.terms() {
                    let p1 = Element::term(Scalar::one(), slots[0].clone());
                    let p2 = Element::term(Scalar::one(), slots[1].clone());
                    let left = preset.multiply(&xa, &self.left_action(&p1, &xb)?)?;
                    if left.is_zero() {
                        continue;
                    }
                    let right = preset.multiply(&p2, &pb)?;
                    let s = c * &coef;
                    for (lx, lc) in left.terms() {
                        for (rp, rc) in right.terms() {
                            let mut word = lx.word().to_vec();
                            word.extend_from_slice(rp.word());
                            out.add_term(Monomial::new(word, rp.qexp())?, &(&s * &(lc * rc)));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `ab - ba` with both products taken in the cross product.
    pub fn cross_commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(self.cross_multiply(a, b)? - self.cross_multiply(b, a)?)
    }
}

/// `<P_nu, x_mu> = -i hbar g_{mu nu}`.
pub fn momentum_position_pairing(nu: usize, mu: usize) -> Scalar {
    let g = metric(mu, nu);
    Scalar::monomial(&GaussianRational::i() * &GaussianRational::from_int(-g), 1, 0, 0)
}

/// Pairing of a momentum monomial with one position generator.
fn pair_single(m: &Monomial, x: Generator) -> Scalar {
    match m.word() {
        [] if m.qexp() == 0 => Scalar::zero(),
        // <q^a, x> = (a / 2 kappa c) <P0, x>
        [] => {
            &Scalar::monomial(GaussianRational::ratio(m.qexp(), 2), 0, -1, -1)
                * &momentum_position_pairing(0, x.index())
        }
        [p] => momentum_position_pairing(p.index(), x.index()),
        _ => Scalar::zero(),
    }
}

fn check_momentum(p: &Element) -> Result<()> {
    match p.generators().find(|g| !g.is_momentum()) {
        Some(g) => Err(Error::Pairing(format!("{g} is not a momentum generator"))),
        None => Ok(()),
    }
}

fn check_position(x: &Element) -> Result<()> {
    for (m, _) in x.terms() {
        if m.qexp() != 0 {
            return Err(Error::Pairing(format!("{m} is not a position monomial")));
        }
        if let Some(g) = m.word().iter().find(|g| !g.is_position()) {
            return Err(Error::Pairing(format!("{g} is not a position generator")));
        }
    }
    Ok(())
}

/// Splits `x... P... q^a` into its position and momentum factors.
fn split_phase(m: &Monomial) -> Result<(Element, Element)> {
    let cut = m.word().iter().position(|g| !g.is_position()).unwrap_or(m.word().len());
    let (xs, ps) = m.word().split_at(cut);
    if let Some(g) = ps.iter().find(|g| g.is_position()) {
        return Err(Error::Pairing(format!("{g} follows a momentum in `{m}`; operands must be x-before-P")));
    }
    Ok((Element::monomial(Scalar::one(), xs, 0)?, Element::monomial(Scalar::one(), ps, m.qexp())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(mu: usize) -> Element {
        Element::generator(Generator::x(mu))
    }

    fn p(mu: usize) -> Element {
        Element::generator(Generator::p(mu))
    }

    #[test]
    fn generator_pairings() {
        let ctx = PairingContext::forward(Basis::Bicross);
        assert_eq!(ctx.pair(&p(1), &x(1)).unwrap().render_inner(), "-i hbar");
        assert_eq!(ctx.pair(&p(0), &x(0)).unwrap().render_inner(), "i hbar");
        assert_eq!(ctx.pair(&Element::q(-2), &x(0)).unwrap().render_inner(), "-i hbar kappa^-1 c^-1");
        assert!(ctx.pair(&p(1), &x(2)).unwrap().is_zero());
        assert!(ctx.pair(&Element::one(), &x(2)).unwrap().is_zero());
        assert!(ctx.pair(&Element::one(), &Element::one()).unwrap().is_one());
    }

    #[test]
    fn actions() {
        let ctx = PairingContext::forward(Basis::Bicross);
        assert_eq!(ctx.left_action(&p(1), &x(1)).unwrap().render(), "-i hbar");
        assert_eq!(ctx.left_action(&Element::q(-2), &x(1)).unwrap(), x(1));
        assert_eq!(ctx.left_action(&Element::q(-2), &x(0)).unwrap().render(), "-i hbar kappa^-1 c^-1 + x0");
    }

    #[test]
    fn cross_products() {
        let ctx = PairingContext::forward(Basis::Bicross);
        assert_eq!(ctx.cross_multiply(&p(1), &x(1)).unwrap().render(), "-i hbar + x1 P1");
        assert_eq!(ctx.cross_multiply(&x(0), &p(0)).unwrap().render(), "x0 P0");
        assert_eq!(ctx.cross_multiply(&p(1), &x(0)).unwrap().render(), "x0 P1 + (-i hbar kappa^-1 c^-1) P1");
    }

    #[test]
    fn wrong_sectors() {
        let ctx = PairingContext::forward(Basis::Standard);
        assert!(matches!(ctx.pair(&x(1), &x(1)), Err(Error::Pairing(_))));
        assert!(matches!(ctx.pair(&p(1), &p(1)), Err(Error::Pairing(_))));
        let bad = Element::monomial(Scalar::one(), &[Generator::p(1), Generator::x(1)], 0).unwrap();
        assert!(ctx.cross_multiply(&bad, &x(0)).is_err());
    }
}
