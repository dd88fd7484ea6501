use std::fmt;

use num_traits::Zero;

use super::parse::{Constant, Expr};
use crate::duality::{Convention, PairingContext};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, TensorElement};
use crate::ncpoly::{AlgebraPreset, Basis, Element, Sector};
use crate::scalar::{GaussianRational, Scalar};

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Element(Element),
    Tensor(TensorElement),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Element(_) => "element",
            Value::Tensor(_) => "tensor",
        }
    }

    /// Rendering with `(x)` as tensor separator.
    pub fn render_ascii(&self) -> String {
        match self {
            Value::Tensor(t) => t.render_ascii(),
            v => v.to_string(),
        }
    }

    pub fn into_element(self) -> Result<Element> {
        match self {
            Value::Scalar(s) => Ok(Element::from_scalar(s)),
            Value::Element(e) => Ok(e),
            Value::Tensor(_) => Err(Error::Eval("expected an algebra element, found a tensor".into())),
        }
    }

    fn into_tensor(self) -> TensorElement {
        match self {
            Value::Tensor(t) => t,
            Value::Scalar(s) => TensorElement::pure(&[Element::from_scalar(s)]),
            Value::Element(e) => TensorElement::pure(&[e]),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Element(e) => f.write_str(&e.render()),
            Value::Tensor(t) => write!(f, "{t}"),
        }
    }
}

/// Sector implied by the symbols used: positions or duality operators select
/// the phase space, anything else the Poincaré sector.
pub fn infer_sector(e: &Expr) -> Result<Sector> {
    let gens = e.generators();
    let pos = gens.iter().any(|g| g.is_position());
    let lor = gens.iter().any(|g| g.is_lorentz());
    match (pos || e.uses_duality(), lor) {
        (true, true) => Err(Error::Eval("expression mixes positions or pairings with Lorentz generators".into())),
        (true, false) => Ok(Sector::PhaseSpace),
        _ => Ok(Sector::Poincare),
    }
}

/// Evaluation environment: Hopf tables of one preset and, in the phase space,
/// the pairing built on them.
#[derive(Clone, Debug)]
pub struct Evaluator {
    hopf: HopfAlgebra,
    pairing: Option<PairingContext>,
}

impl Evaluator {
    pub fn new(basis: Basis, sector: Sector) -> Self {
        Self::from_hopf(HopfAlgebra::new(basis, sector))
    }

    pub fn from_hopf(hopf: HopfAlgebra) -> Self {
        let pairing = PairingContext::from_hopf(hopf.clone(), Convention::Forward).ok();
        Self { hopf, pairing }
    }

    pub fn preset(&self) -> &AlgebraPreset {
        self.hopf.preset()
    }

    pub fn eval(&self, e: &Expr) -> Result<Value> {
        let pre = self.hopf.preset();
        Ok(match e {
            Expr::Number(r) => Value::Scalar(Scalar::from_gauss(GaussianRational::new(r.clone(), Zero::zero()))),
            Expr::Imag => Value::Scalar(Scalar::i()),
            Expr::Constant(Constant::Hbar) => Value::Scalar(Scalar::hbar()),
            Expr::Constant(Constant::Kappa) => Value::Scalar(Scalar::kappa()),
            Expr::Constant(Constant::C) => Value::Scalar(Scalar::c()),
            Expr::Generator(g) => {
                let el = Element::generator(*g);
                pre.check_element(&el)?;
                Value::Element(el)
            }
            Expr::Q => Value::Element(Element::q(1)),
            Expr::Neg(a) => match self.eval(a)? {
                Value::Scalar(s) => Value::Scalar(-s),
                Value::Element(x) => Value::Element(-x),
                Value::Tensor(t) => Value::Tensor(-t),
            },
            Expr::Add(..) | Expr::Sub(..) => {
                // left-nested chains get long, so walk them without recursing
                let mut tail = Vec::new();
                let mut head = e;
                while let Expr::Add(a, b) | Expr::Sub(a, b) = head {
                    tail.push((matches!(head, Expr::Sub(..)), b));
                    head = a;
                }
                let mut acc = self.eval(head)?;
                for (sub, b) in tail.into_iter().rev() {
                    acc = self.add(acc, self.eval(b)?, sub)?;
                }
                acc
            }
            Expr::Mul(a, b) => self.mul(self.eval(a)?, self.eval(b)?)?,
            Expr::Div(a, b) => {
                let d = match self.eval(b)? {
                    Value::Scalar(s) => s,
                    Value::Element(x) if x.terms().all(|(m, _)| m.is_unit()) => x.constant_term(),
                    _ => return Err(Error::Eval("can only divide by a scalar".into())),
                };
                self.mul(self.eval(a)?, Value::Scalar(d.inverse()?))?
            }
            Expr::Pow(a, n) => self.pow(a, *n)?,
            Expr::Tensor(a, b) => Value::Tensor(self.eval(a)?.into_tensor().tensor(&self.eval(b)?.into_tensor())),
            Expr::Commutator(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Tensor(x), Value::Tensor(y)) => {
                    same_rank(&x, &y)?;
                    Value::Tensor(x.commutator(&y, pre)?)
                }
                (x, y) => Value::Element(pre.commutator(&x.into_element()?, &y.into_element()?)?),
            },
            Expr::Coproduct(a) => Value::Tensor(self.hopf.coproduct(&self.eval(a)?.into_element()?)?),
            Expr::Antipode(a) => Value::Element(self.hopf.antipode(&self.eval(a)?.into_element()?)?),
            Expr::Counit(a) => Value::Scalar(self.hopf.counit(&self.eval(a)?.into_element()?)?),
            Expr::Pairing(a, b) => {
                let ctx = self.pairing()?;
                Value::Scalar(ctx.pair(&self.eval(a)?.into_element()?, &self.eval(b)?.into_element()?)?)
            }
            Expr::Action(a, b) => {
                let ctx = self.pairing()?;
                Value::Element(ctx.left_action(&self.eval(a)?.into_element()?, &self.eval(b)?.into_element()?)?)
            }
        })
    }

    fn pairing(&self) -> Result<&PairingContext> {
        self.pairing.as_ref().ok_or_else(|| Error::Eval("pairings and actions need the phasespace sector".into()))
    }

    fn add(&self, a: Value, b: Value, sub: bool) -> Result<Value> {
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(if sub { x - y } else { x + y }),
            (Value::Tensor(x), Value::Tensor(y)) => {
                same_rank(&x, &y)?;
                Value::Tensor(if sub { x - y } else { x + y })
            }
            (Value::Tensor(_), _) | (_, Value::Tensor(_)) => {
                return Err(Error::Eval("cannot add a tensor and an algebra element".into()))
            }
            (x, y) => {
                let (x, y) = (x.into_element()?, y.into_element()?);
                Value::Element(if sub { x - y } else { x + y })
            }
        })
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value> {
        let pre = self.hopf.preset();
        Ok(match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.checked_mul(&y)?),
            (Value::Scalar(s), Value::Element(e)) | (Value::Element(e), Value::Scalar(s)) => {
                Value::Element(e.scale(&s))
            }
            (Value::Scalar(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Scalar(s)) => Value::Tensor(t.scale(&s)),
            (Value::Element(x), Value::Element(y)) => Value::Element(pre.multiply(&x, &y)?),
            (Value::Tensor(x), Value::Tensor(y)) => {
                same_rank(&x, &y)?;
                Value::Tensor(x.multiply(&y, pre)?)
            }
            _ => return Err(Error::Eval("cannot multiply a tensor by an algebra element; use ⊗".into())),
        })
    }

    fn pow(&self, base: &Expr, n: i64) -> Result<Value> {
        if let Expr::Q = base {
            return Ok(Value::Element(Element::q(n)));
        }
        match self.eval(base)? {
            Value::Scalar(s) => Ok(Value::Scalar(s.pow(n)?)),
            v if n >= 0 => {
                let one = match &v {
                    Value::Tensor(t) => Value::Tensor(TensorElement::one(t.rank())),
                    _ => Value::Element(Element::one()),
                };
                let (mut acc, mut base, mut e) = (one, v, n);
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(acc, base.clone())?;
                    }
                    e >>= 1;
                    if e > 0 {
                        base = self.mul(base.clone(), base)?;
                    }
                }
                Ok(acc)
            }
            Value::Element(e) => {
                // only c q^a is invertible here
                let mut terms = e.terms();
                match (terms.next(), terms.next()) {
                    (Some((m, c)), None) if m.word().is_empty() => {
                        let q = m.qexp().checked_mul(n).ok_or(Error::ExponentOverflow)?;
                        Ok(Value::Element(Element::q(q).scale(&c.pow(n)?)))
                    }
                    _ => Err(Error::Eval(format!("`{e}` has no inverse in the algebra"))),
                }
            }
            Value::Tensor(_) => Err(Error::Eval("negative powers of tensors are not supported".into())),
        }
    }
}

fn same_rank(a: &TensorElement, b: &TensorElement) -> Result<()> {
    if a.rank() == b.rank() {
        Ok(())
    } else {
        Err(Error::Eval(format!("tensor rank mismatch: {} vs {}", a.rank(), b.rank())))
    }
}
