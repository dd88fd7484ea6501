use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::generator::Generator;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A word in the generators followed by a power of `q = exp(P0 / 2 kappa c)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    word: Vec<Generator>,
    qexp: i64,
}

impl Monomial {
    pub fn new(word: Vec<Generator>, qexp: i64) -> Result<Self> {
        let has_x = word.iter().any(|g| g.is_position());
        let has_lorentz = word.iter().any(|g| g.is_lorentz());
        let m = Self { word, qexp };
        if has_x && has_lorentz {
            return Err(Error::MixedMonomial(m.to_string()));
        }
        Ok(m)
    }

    pub fn unit() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        Self { word: vec![g], qexp: 0 }
    }

    pub fn q(n: i64) -> Self {
        Self { word: Vec::new(), qexp: n }
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn qexp(&self) -> i64 {
        self.qexp
    }

    pub fn is_unit(&self) -> bool {
        self.word.is_empty() && self.qexp == 0
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// Sorted nondecreasing under the generator order.
    pub fn is_normal(&self) -> bool {
        self.word.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn with_qexp(&self, qexp: i64) -> Self {
        Self { word: self.word.clone(), qexp }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.word.len() {
            let g = self.word[i];
            let run = self.word[i..].iter().take_while(|&&h| h == g).count();
            if run == 1 {
                parts.push(g.to_string());
            } else {
                parts.push(format!("{g}^{run}"));
            }
            i += run;
        }
        match self.qexp {
            0 => {}
            1 => parts.push("q".into()),
            n => parts.push(format!("q^{n}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Finite `Scalar`-weighted sum of monomials with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_scalar(Scalar::one())
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Self::term(s, Monomial::unit())
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(Scalar::one(), Monomial::generator(g))
    }

    pub fn q(n: i64) -> Self {
        Self::term(Scalar::one(), Monomial::q(n))
    }

    pub fn term(coef: Scalar, m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, &coef);
        e
    }

    /// Builds `coef * word * q^qexp`.
    pub fn monomial(coef: Scalar, word: &[Generator], qexp: i64) -> Result<Self> {
        Ok(Self::term(coef, Monomial::new(word.to_vec(), qexp)?))
    }

    pub fn add_term(&mut self, m: Monomial, coef: &Scalar) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The unit-monomial coefficient.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::unit())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &(c * s));
        }
        out
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Monomial::is_normal)
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.terms.keys().flat_map(|m| m.word.iter().copied())
    }

    /// Sets `q -> 1`, then drops every term carrying a negative power of
    /// `kappa`. Models the undeformed limit `kappa -> infinity`.
    pub fn classical_limit(&self) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            let kept = c.filter_terms(|e| e.kappa >= 0);
            out.add_term(m.with_qexp(0), &kept);
        }
        out
    }

    /// Term rendering used by [`fmt::Display`] and reports.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let body = render_term(c, &m.to_string(), m.is_unit());
            push_signed(&mut out, &body, k == 0);
        }
        out
    }
}

/// Joins a term onto a running sum, turning a leading minus into ` - `.
pub(crate) fn push_signed(out: &mut String, body: &str, first: bool) {
    if first {
        out.push_str(body);
    } else if let Some(rest) = body.strip_prefix('-') {
        out.push_str(" - ");
        out.push_str(rest);
    } else {
        out.push_str(" + ");
        out.push_str(body);
    }
}

/// `coef * basis` where `basis` is already rendered.
pub(crate) fn render_term(c: &Scalar, basis: &str, basis_is_unit: bool) -> String {
    if basis_is_unit {
        return c.render_inner();
    }
    if c.is_one() {
        return basis.to_string();
    }
    if (-c).is_one() {
        return format!("-{basis}");
    }
    format!("({}) {basis}", c.render_inner())
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self + &(-rhs)
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl From<Scalar> for Element {
    fn from(s: Scalar) -> Self {
        Element::from_scalar(s)
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Element::generator(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;
    use Generator::*;

    #[test]
    fn mixed_monomial_rejected() {
        assert!(matches!(Monomial::new(vec![X0, N1], 0), Err(Error::MixedMonomial(_))));
        assert!(Monomial::new(vec![X0, P1], 2).is_ok());
        assert!(Monomial::new(vec![M1, P1], 0).is_ok());
    }

    #[test]
    fn monomial_rendering() {
        assert_eq!(Monomial::new(vec![X0, X1], -2).unwrap().to_string(), "x0 x1 q^-2");
        assert_eq!(Monomial::new(vec![N1, P1], 0).unwrap().to_string(), "N1 P1");
        assert_eq!(Monomial::new(vec![P1, P1, P2], 1).unwrap().to_string(), "P1^2 P2 q");
        assert_eq!(Monomial::unit().to_string(), "1");
    }

    #[test]
    fn element_rendering() {
        let coef = Scalar::monomial(-GaussianRational::i(), 1, -1, -1);
        let e = Element::monomial(coef, &[X1], 0).unwrap();
        assert_eq!(e.to_string(), "(-i hbar kappa^-1 c^-1) x1");
        let e = Element::monomial(Scalar::one(), &[X1, P1], 0).unwrap()
            - Element::from_scalar(Scalar::i() * Scalar::hbar());
        assert_eq!(e.to_string(), "-i hbar + x1 P1");
        assert_eq!(Element::zero().to_string(), "0");
    }

    #[test]
    fn classical_limit_drops_inverse_kappa() {
        let coef = Scalar::monomial(-GaussianRational::i(), 1, -1, -1);
        let e = Element::monomial(coef, &[X1], 0).unwrap();
        assert!(e.classical_limit().is_zero());
        let e = Element::monomial(Scalar::i() * Scalar::hbar(), &[], 1).unwrap();
        assert_eq!(e.classical_limit(), Element::from_scalar(Scalar::i() * Scalar::hbar()));
        let e = Element::monomial(Scalar::one(), &[P1], -2).unwrap();
        assert_eq!(e.classical_limit(), Element::generator(P1));
    }
}
