use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::ncpoly::{push_signed, render_term, AlgebraPreset, Element, Monomial};
use crate::scalar::Scalar;

/// Unicode separator for human-facing output.
pub const TENSOR_SEP: &str = " ⊗ ";
/// ASCII separator for JSON.
pub const TENSOR_SEP_ASCII: &str = " (x) ";

/// Sum of scalar-weighted tuples of monomials, one monomial per tensor slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    rank: usize,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

impl TensorElement {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`
    pub fn one(rank: usize) -> Self {
        let mut t = Self::zero(rank);
        t.add_term(vec![Monomial::unit(); rank], &Scalar::one());
        t
    }

    /// `e_1 ⊗ e_2 ⊗ ...`, expanded over the terms of each factor.
    pub fn pure(factors: &[Element]) -> Self {
        let mut acc: Vec<(Vec<Monomial>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for f in factors {
            let mut next = Vec::new();
            for (slots, c) in &acc {
                for (m, s) in f.terms() {
                    let mut v = slots.clone();
                    v.push(m.clone());
                    next.push((v, c * s));
                }
            }
            acc = next;
        }
        let mut t = Self::zero(factors.len());
        for (slots, c) in acc {
            t.add_term(slots, &c);
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, slots: Vec<Monomial>, coef: &Scalar) {
        assert_eq!(slots.len(), self.rank, "tensor rank mismatch");
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            Entry::Vacant(v) => {
                v.insert(coef.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + coef;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.rank);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &(c * s));
        }
        out
    }

    /// Slot-wise product in the ordinary (unbraided) tensor algebra.
    pub fn multiply(&self, other: &TensorElement, preset: &AlgebraPreset) -> Result<TensorElement> {
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        let mut out = Self::zero(self.rank);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let slots = ka
                    .iter()
                    .zip(kb)
                    .map(|(a, b)| {
                        preset.multiply(
                            &Element::term(Scalar::one(), a.clone()),
                            &Element::term(Scalar::one(), b.clone()),
                        )
                    })
                    .collect::<Result<Vec<_>>>()?;
                out = out + TensorElement::pure(&slots).scale(&(ca * cb));
            }
        }
        Ok(out)
    }

    /// `self ⊗ other`, concatenating slots.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let mut out = Self::zero(self.rank + other.rank);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut slots = ka.clone();
                slots.extend(kb.iter().cloned());
                out.add_term(slots, &(ca * cb));
            }
        }
        out
    }

    pub fn commutator(&self, other: &TensorElement, preset: &AlgebraPreset) -> Result<TensorElement> {
        Ok(self.multiply(other, preset)? - other.multiply(self, preset)?)
    }

    pub fn render_with(&self, sep: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        // Reverse key order puts terms with a nontrivial first slot ahead.
        for (k, (slots, c)) in self.terms.iter().rev().enumerate() {
            let basis = slots.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep);
            push_signed(&mut out, &render_term(c, &basis, false), k == 0);
        }
        out
    }

    pub fn render_ascii(&self) -> String {
        self.render_with(TENSOR_SEP_ASCII)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(TENSOR_SEP))
    }
}

impl Add for TensorElement {
    type Output = TensorElement;
    fn add(mut self, rhs: TensorElement) -> TensorElement {
        assert_eq!(self.rank, rhs.rank, "tensor rank mismatch");
        for (k, c) in rhs.terms {
            self.add_term(k, &c);
        }
        self
    }
}

impl Neg for TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement { rank: self.rank, terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub for TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: TensorElement) -> TensorElement {
        self + (-rhs)
    }
}
