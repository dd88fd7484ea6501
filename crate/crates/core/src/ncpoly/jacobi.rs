use serde::{Deserialize, Serialize};

use super::{AlgebraPreset, Element};

/// `[[a, b], c] + [[b, c], a] + [[c, a], b]` for one generator triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobiCheck {
    pub preset: String,
    pub triple: String,
    pub pass: bool,
    pub residual_rendering: String,
}

fn letters(preset: &AlgebraPreset) -> Vec<(String, Element)> {
    let mut v: Vec<(String, Element)> =
        preset.generators().into_iter().map(|g| (g.to_string(), Element::generator(g))).collect();
    v.push(("q".into(), Element::q(1)));
    v
}

pub fn jacobiator(preset: &AlgebraPreset, a: &Element, b: &Element, c: &Element) -> crate::Result<Element> {
    let ab = preset.commutator(a, b)?;
    let bc = preset.commutator(b, c)?;
    let ca = preset.commutator(c, a)?;
    Ok(preset.commutator(&ab, c)? + preset.commutator(&bc, a)? + preset.commutator(&ca, b)?)
}

/// Jacobi identity on every triple `a <= b <= c` of generators and `q`.
///
/// The jacobiator is totally antisymmetric once the bracket is, so sorted
/// triples cover all orderings.
pub fn check_jacobi(preset: &AlgebraPreset) -> Vec<JacobiCheck> {
    let ls = letters(preset);
    let mut out = Vec::new();
    for i in 0..ls.len() {
        for j in i..ls.len() {
            for k in j..ls.len() {
                let triple = format!("({}, {}, {})", ls[i].0, ls[j].0, ls[k].0);
                let (pass, residual_rendering) = match jacobiator(preset, &ls[i].1, &ls[j].1, &ls[k].1) {
                    Ok(r) => (r.is_zero(), r.render()),
                    Err(e) => (false, format!("error: {e}")),
                };
                out.push(JacobiCheck { preset: preset.label(), triple, pass, residual_rendering });
            }
        }
    }
    out
}
