use serde::{Deserialize, Serialize};

use super::{Convention, PairingContext};
use crate::hopf::AxiomCheck;
use crate::ncpoly::{Basis, Element, Generator};
use crate::scalar::Scalar;

/// One derived phase-space commutator next to the relation table entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationRow {
    pub basis: Basis,
    pub convention: Convention,
    pub pair: String,
    pub derived_rendering: String,
    pub table_rendering: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Phase-space letters: positions, momenta, then `q`.
fn letters() -> Vec<(String, Element)> {
    let mut v: Vec<(String, Element)> = Generator::ALL
        .iter()
        .filter(|g| g.is_position() || g.is_momentum())
        .map(|&g| (g.to_string(), Element::generator(g)))
        .collect();
    v.push(("q".into(), Element::q(1)));
    v
}

/// Every phase-space commutator recomputed from the cross product, with the
/// forward convention.
pub fn derive_phase_space_relations(basis: Basis) -> Vec<DerivationRow> {
    derive_with(&PairingContext::forward(basis))
}

pub fn derive_with(ctx: &PairingContext) -> Vec<DerivationRow> {
    let preset = ctx.hopf().preset();
    let ls = letters();
    let mut rows = Vec::new();
    for (i, (na, a)) in ls.iter().enumerate() {
        for (nb, b) in &ls[i + 1..] {
            let derived = ctx.cross_commutator(a, b);
            let table = preset.commutator(a, b);
            let (derived_rendering, table_rendering, matches) = match (derived, table) {
                (Ok(d), Ok(t)) => (d.render(), t.render(), d == t),
                (d, t) => (
                    d.map_or_else(|e| format!("error: {e}"), |d| d.render()),
                    t.map_or_else(|e| format!("error: {e}"), |t| t.render()),
                    false,
                ),
            };
            rows.push(DerivationRow {
                basis: ctx.basis(),
                convention: ctx.convention(),
                pair: format!("[{na}, {nb}]"),
                derived_rendering,
                table_rendering,
                matches,
            });
        }
    }
    rows
}

/// Whether `<p, x_a x_b - x_b x_a>` equals `<p, [x_a, x_b]>` for one momentum
/// monomial and one position pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityCheck {
    pub basis: Basis,
    pub convention: Convention,
    pub momentum: String,
    pub pair: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

fn momentum_probes() -> Vec<Element> {
    let mono = |w: &[Generator], q: i64| Element::monomial(Scalar::one(), w, q).expect("momentum monomial");
    let mut v: Vec<Element> = [-2, -1, 1, 2].into_iter().map(Element::q).collect();
    for mu in 0..4 {
        let p = Generator::p(mu);
        v.push(mono(&[p], 0));
        v.push(mono(&[p], -2));
        v.push(mono(&[p], 1));
        for nu in mu..4 {
            v.push(mono(&[p, Generator::p(nu)], 0));
        }
    }
    v
}

/// The pairing must respect the position relations: for every probe momentum
/// and every ordered position pair, pairing the raw commutator word equals
/// pairing the relation table's right-hand side.
pub fn check_pairing_compatibility(ctx: &PairingContext) -> Vec<CompatibilityCheck> {
    let preset = ctx.hopf().preset();
    let xs: Vec<Generator> = (0..4).map(Generator::x).collect();
    let mut out = Vec::new();
    for p in momentum_probes() {
        for (i, &a) in xs.iter().enumerate() {
            for &b in &xs[i + 1..] {
                let one = Scalar::one();
                let ab = Element::monomial(one.clone(), &[a, b], 0).expect("position word");
                let ba = Element::monomial(one, &[b, a], 0).expect("position word");
                let lhs = ctx.pair(&p, &(ab - ba));
                let rhs =
                    preset.commutator(&Element::generator(a), &Element::generator(b)).and_then(|c| ctx.pair(&p, &c));
                let (l, r, pass) = match (lhs, rhs) {
                    (Ok(l), Ok(r)) => (l.render_inner(), r.render_inner(), l == r),
                    (l, r) => (
                        l.map_or_else(|e| format!("error: {e}"), |s| s.render_inner()),
                        r.map_or_else(|e| format!("error: {e}"), |s| s.render_inner()),
                        false,
                    ),
                };
                out.push(CompatibilityCheck {
                    basis: ctx.basis(),
                    convention: ctx.convention(),
                    momentum: p.render(),
                    pair: format!("[{a}, {b}]"),
                    lhs: l,
                    rhs: r,
                    pass,
                });
            }
        }
    }
    out
}

/// `p x = (p_(1) |> x) p_(2)`: each momentum-position entry of the relation
/// table must be the one the coproduct and pairing produce.
pub fn check_cross_relations(ctx: &PairingContext) -> Vec<AxiomCheck> {
    let h = ctx.hopf();
    let mut momenta: Vec<(String, Element)> =
        (0..4).map(|mu| (Generator::p(mu).to_string(), Element::generator(Generator::p(mu)))).collect();
    momenta.push(("q".into(), Element::q(1)));
    let mut out = Vec::new();
    for (np, p) in &momenta {
        for mu in 0..4 {
            let x = Element::generator(Generator::x(mu));
            let subject = format!("[{np}, x{mu}]");
            let residual = ctx.cross_commutator(&x, p).and_then(|d| Ok(h.preset().commutator(&x, p)? - d));
            out.push(match residual {
                Ok(r) => AxiomCheck::from_element(h, "cross-relation", subject, &r),
                Err(e) => AxiomCheck::error(h, "cross-relation", subject, &e),
            });
        }
    }
    out
}
