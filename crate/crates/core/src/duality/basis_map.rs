use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hopf::{HopfAlgebra, TensorElement};
use crate::ncpoly::{Basis, Element, Generator, Monomial, Sector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    StandardToBicross,
    BicrossToStandard,
}

impl Direction {
    pub const ALL: [Direction; 2] = [Direction::StandardToBicross, Direction::BicrossToStandard];

    pub fn name(self) -> &'static str {
        match self {
            Direction::StandardToBicross => "standard->bicross",
            Direction::BicrossToStandard => "bicross->standard",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMapCandidate {
    pub direction: Direction,
    pub sign: i64,
    /// `direction, s=+1` style label.
    pub name: String,
    pub pass: bool,
    /// `Δ_target(φ(g)) - (φ ⊗ φ)(Δ_source(g))` per momentum generator.
    pub residuals: Vec<(String, String)>,
    pub counit_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisMapReport {
    pub candidates: Vec<BasisMapCandidate>,
    pub passing: Vec<String>,
}

impl BasisMapReport {
    pub fn exactly_one(&self) -> Option<&str> {
        match self.passing.as_slice() {
            [one] => Some(one),
            _ => None,
        }
    }
}

/// `φ_s(P_i) = P_i q^s`, `φ_s(P_0) = P_0`, `φ_s(q) = q`, on the commutative
/// momentum algebra.
fn phi(m: &Monomial, s: i64) -> Monomial {
    let spatial = m.word().iter().filter(|g| g.is_momentum() && g.index() > 0).count() as i64;
    m.with_qexp(m.qexp() + s * spatial)
}

fn phi_element(e: &Element, s: i64) -> Element {
    let mut out = Element::zero();
    for (m, c) in e.terms() {
        out.add_term(phi(m, s), c);
    }
    out
}

fn phi_tensor(t: &TensorElement, s: i64) -> TensorElement {
    let mut out = TensorElement::zero(t.rank());
    for (slots, c) in t.terms() {
        out.add_term(slots.iter().map(|m| phi(m, s)).collect(), c);
    }
    out
}

fn candidate(source: &HopfAlgebra, target: &HopfAlgebra, direction: Direction, s: i64) -> Result<BasisMapCandidate> {
    let mut subjects: Vec<(String, Element)> =
        (0..4).map(|mu| (Generator::p(mu).to_string(), Element::generator(Generator::p(mu)))).collect();
    subjects.push(("q".into(), Element::q(1)));
    let mut residuals = Vec::new();
    let mut pass = true;
    let mut counit_pass = true;
    for (name, g) in subjects {
        let lhs = target.coproduct(&phi_element(&g, s))?;
        let rhs = phi_tensor(&source.coproduct(&g)?, s);
        let r = lhs - rhs;
        pass &= r.is_zero();
        counit_pass &= target.counit(&phi_element(&g, s))? == source.counit(&g)?;
        residuals.push((name, r.render_ascii()));
    }
    let sign = if s > 0 { "+1" } else { "-1" };
    Ok(BasisMapCandidate {
        direction,
        sign: s,
        name: format!("{direction}, s={sign}"),
        pass: pass && counit_pass,
        residuals,
        counit_pass,
    })
}

/// Tests all four (direction, sign) candidates against the engine's tables.
pub fn basis_map_check() -> Result<BasisMapReport> {
    basis_map_check_between(
        &HopfAlgebra::new(Basis::Bicross, Sector::Poincare),
        &HopfAlgebra::new(Basis::Standard, Sector::Poincare),
    )
}

/// Same check with caller-supplied coalgebra tables.
pub fn basis_map_check_between(bicross: &HopfAlgebra, standard: &HopfAlgebra) -> Result<BasisMapReport> {
    let mut candidates = Vec::new();
    for direction in Direction::ALL {
        let (source, target) = match direction {
            Direction::StandardToBicross => (standard, bicross),
            Direction::BicrossToStandard => (bicross, standard),
        };
        for s in [1, -1] {
            candidates.push(candidate(source, target, direction, s)?);
        }
    }
    let passing = candidates.iter().filter(|c| c.pass).map(|c| c.name.clone()).collect();
    Ok(BasisMapReport { candidates, passing })
}
