use super::{AxiomCheck, HopfAlgebra};
use crate::ncpoly::{AlgebraPreset, Basis, Element, Generator, Sector};
use crate::scalar::{GaussianRational, Scalar};

/// Deformed mass Casimir written in `q`:
/// `kappa^2 (q - q^-1)^2 - c^-2 q^2 P.P` (bicross) or `kappa^2 (q - q^-1)^2 - c^-2 P.P` (standard).
pub fn casimir(basis: Basis) -> Element {
    let k2 = |n: i64| Scalar::monomial(GaussianRational::from_int(n), 0, 2, 0);
    let mut c2 = Element::q(2).scale(&k2(1)) + Element::one().scale(&k2(-2)) + Element::q(-2).scale(&k2(1));
    let qexp = match basis {
        Basis::Bicross => 2,
        Basis::Standard => 0,
    };
    let inv_c2 = Scalar::monomial(GaussianRational::from_int(-1), 0, 0, -2);
    for i in 1..=3 {
        let p = Generator::p(i);
        c2 = c2 + Element::monomial(inv_c2.clone(), &[p, p], qexp).expect("momentum monomial");
    }
    c2
}

/// `[C2, g] = 0` for every Lorentz and momentum generator.
pub fn check_centrality(basis: Basis) -> Vec<AxiomCheck> {
    let h = HopfAlgebra::from_preset(AlgebraPreset::new(basis, Sector::Poincare));
    check_centrality_in(&h)
}

pub fn check_centrality_in(h: &HopfAlgebra) -> Vec<AxiomCheck> {
    let c2 = casimir(h.basis());
    h.sector()
        .generators()
        .into_iter()
        .map(|g| {
            let subject = format!("[C2, {g}]");
            match h.preset().commutator(&c2, &Element::generator(g)) {
                Ok(r) => AxiomCheck::from_element(h, "casimir-centrality", subject, &r),
                Err(e) => AxiomCheck::error(h, "casimir-centrality", subject, &e),
            }
        })
        .collect()
}
