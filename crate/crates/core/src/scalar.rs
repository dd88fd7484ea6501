//! Exact coefficient ring: Gaussian rationals times Laurent monomials in the
//! physical constants `hbar`, `kappa` and `c`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A number `re + im i` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den` with zero imaginary part. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Self::new(&self.re / &norm, -(&self.im / &norm)))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }

    /// True when the rendering starts with a minus sign.
    fn is_negative_form(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else if self.im.is_zero() {
            self.re.is_negative()
        } else {
            false
        }
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Scale both down for huge numerators/denominators.
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n: BigInt = r.numer() >> shift;
            let d: BigInt = r.denom() >> shift;
            n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
        }
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |im: &BigRational| -> String {
            if im.is_one() {
                "i".to_string()
            } else if (-im.clone()).is_one() {
                "-i".to_string()
            } else {
                format!("{} i", fmt_ratio(im))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_ratio(&self.re)),
            (true, false) => write!(f, "{}", im_part(&self.im)),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "({} - {})", fmt_ratio(&self.re), im_part(&-self.im.clone()))
                } else {
                    write!(f, "({} + {})", fmt_ratio(&self.re), im_part(&self.im))
                }
            }
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Exponents of `(hbar, kappa, c)` in a constant monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConstExp {
    pub hbar: i64,
    pub kappa: i64,
    pub c: i64,
}

impl ConstExp {
    pub const ONE: ConstExp = ConstExp { hbar: 0, kappa: 0, c: 0 };

    pub fn new(hbar: i64, kappa: i64, c: i64) -> Self {
        Self { hbar, kappa, c }
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        let add = |a: i64, b: i64| a.checked_add(b).ok_or(Error::ExponentOverflow);
        Ok(Self { hbar: add(self.hbar, other.hbar)?, kappa: add(self.kappa, other.kappa)?, c: add(self.c, other.c)? })
    }

    pub fn checked_scale(self, k: i64) -> Result<Self> {
        let mul = |a: i64| a.checked_mul(k).ok_or(Error::ExponentOverflow);
        Ok(Self { hbar: mul(self.hbar)?, kappa: mul(self.kappa)?, c: mul(self.c)? })
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }
}

impl fmt::Display for ConstExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("hbar", self.hbar), ("kappa", self.kappa), ("c", self.c)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Finite sum of Gaussian-rational multiples of constant monomials.
///
/// Stored canonically: one entry per exponent triple, no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    terms: BTreeMap<ConstExp, GaussianRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_gauss(GaussianRational::one())
    }

    pub fn i() -> Self {
        Self::from_gauss(GaussianRational::i())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussianRational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_gauss(GaussianRational::ratio(num, den))
    }

    pub fn from_gauss(g: GaussianRational) -> Self {
        Self::term(g, ConstExp::ONE)
    }

    pub fn hbar() -> Self {
        Self::term(GaussianRational::one(), ConstExp::new(1, 0, 0))
    }

    pub fn kappa() -> Self {
        Self::term(GaussianRational::one(), ConstExp::new(0, 1, 0))
    }

    pub fn c() -> Self {
        Self::term(GaussianRational::one(), ConstExp::new(0, 0, 1))
    }

    /// Shorthand for `coef * hbar^h kappa^k c^c`.
    pub fn monomial(coef: GaussianRational, hbar: i64, kappa: i64, c: i64) -> Self {
        Self::term(coef, ConstExp::new(hbar, kappa, c))
    }

    pub fn term(coef: GaussianRational, exp: ConstExp) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ConstExp::ONE).is_some_and(GaussianRational::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ConstExp, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term of a one-term scalar.
    pub fn as_single_term(&self) -> Option<(&ConstExp, &GaussianRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Inverse of a single-term scalar.
    pub fn inverse(&self) -> Result<Self> {
        let (exp, coef) = self.as_single_term().ok_or(Error::NotInvertible(self.to_string()))?;
        let inv = coef.inv().ok_or(Error::NotInvertible(self.to_string()))?;
        Ok(Self::term(inv, exp.checked_scale(-1)?))
    }

    /// Integer power; negative exponents need a single-term scalar.
    pub fn pow(&self, n: i64) -> Result<Self> {
        let mut base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Scalar::one();
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn add_term(&mut self, exp: ConstExp, coef: &GaussianRational) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                if !coef.is_zero() {
                    v.insert(coef.clone());
                }
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

    /// Product that reports exponent overflow instead of panicking.
    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.checked_add(*eb)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale_int(&self, k: i64) -> Scalar {
        self * &Scalar::from_int(k)
    }

    /// Numeric value for positive `hbar`, `kappa`, `c`.
    pub fn to_complex(&self, hbar: f64, kappa: f64, c: f64) -> Result<Complex64> {
        for (name, v) in [("hbar", hbar), ("kappa", kappa), ("c", c)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Parameter(format!("{name} must be positive and finite, got {v}")));
            }
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (exp, coef) in &self.terms {
            let weight = powi64(hbar, exp.hbar) * powi64(kappa, exp.kappa) * powi64(c, exp.c);
            acc += coef.to_complex() * weight;
        }
        Ok(acc)
    }

    /// Keeps only the terms whose exponent satisfies `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&ConstExp) -> bool) -> Scalar {
        Scalar { terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// Rendering used inside element terms: `-i hbar kappa^-1 c^-1`.
    pub fn render_inner(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (exp, coef)) in self.terms.iter().enumerate() {
            let neg = coef.is_negative_form();
            let shown = if neg && k > 0 { -coef } else { coef.clone() };
            let body = if exp.is_one() {
                shown.to_string()
            } else if shown.is_one() {
                exp.to_string()
            } else if (-&shown).is_one() {
                format!("-{exp}")
            } else {
                format!("{shown} {exp}")
            };
            if k > 0 {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

fn powi64(x: f64, e: i64) -> f64 {
    match i32::try_from(e) {
        Ok(e) => x.powi(e),
        Err(_) => x.powf(e as f64),
    }
}

/// Standalone form: the coefficient is bracketed when constants follow,
/// e.g. `(-i) hbar kappa^-1 c^-1`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(exp, coef)| {
                if exp.is_one() {
                    coef.to_string()
                } else if coef.is_one() {
                    exp.to_string()
                } else {
                    let c = coef.to_string();
                    if c.starts_with('(') {
                        format!("{c} {exp}")
                    } else {
                        format!("({c}) {exp}")
                    }
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Panics on exponent overflow; use [`Scalar::checked_mul`] to get an error instead.
impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("constant exponent overflow")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ihbar() -> Scalar {
        Scalar::i() * Scalar::hbar()
    }

    #[test]
    fn additive_inverse() {
        assert!((ihbar() + -ihbar()).is_zero());
    }

    #[test]
    fn like_terms_combine() {
        let half = Scalar::monomial(GaussianRational::ratio(1, 2), 1, -1, -1);
        assert_eq!(&half + &half, Scalar::monomial(GaussianRational::one(), 1, -1, -1));
    }

    #[test]
    fn gaussian_sum_on_one_monomial() {
        let s = ihbar() + Scalar::hbar();
        let expected = Scalar::monomial(GaussianRational::new(BigRational::one(), BigRational::one()), 1, 0, 0);
        assert_eq!(s, expected);
    }

    #[test]
    fn i_squared() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn exponent_cancellation() {
        let a = Scalar::monomial(GaussianRational::one(), 1, -1, -1);
        assert_eq!(a * (Scalar::kappa() * Scalar::c()), Scalar::hbar());
    }

    #[test]
    fn hand_product() {
        // (-i hbar / kappa c) * (i/2) = hbar / (2 kappa c)
        let a = Scalar::monomial(-GaussianRational::i(), 1, -1, -1);
        let b = Scalar::from_gauss(&GaussianRational::i() * &GaussianRational::ratio(1, 2));
        assert_eq!(a * b, Scalar::monomial(GaussianRational::ratio(1, 2), 1, -1, -1));
    }

    #[test]
    fn exponent_overflow_is_an_error() {
        let big = Scalar::monomial(GaussianRational::one(), i64::MAX, 0, 0);
        assert!(matches!(big.checked_mul(&Scalar::hbar()), Err(Error::ExponentOverflow)));
        let k2 = Scalar::kappa().pow(2).unwrap();
        assert!(matches!(k2.pow(i64::MAX), Err(Error::ExponentOverflow)));
        assert_eq!(Scalar::kappa().pow(i64::MAX).unwrap(), Scalar::monomial(GaussianRational::one(), 0, i64::MAX, 0));
        assert_eq!(Scalar::kappa().pow(-3).unwrap().to_string(), "kappa^-3");
    }

    #[test]
    fn numeric_values() {
        let v = Scalar::hbar().to_complex(1.0, 3.0, 5.0).unwrap();
        assert_eq!(v, Complex64::new(1.0, 0.0));
        let v = Scalar::monomial(GaussianRational::i(), 1, -1, 0).to_complex(1.0, 2.0, 1.0).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.5));
        let third = Scalar::from_gauss(GaussianRational::new(
            BigRational::new(1.into(), 3.into()),
            BigRational::new(1.into(), 3.into()),
        ));
        let v = third.to_complex(7.0, 11.0, 13.0).unwrap();
        assert!((v.re - 1.0 / 3.0).abs() < 1e-16 && (v.im - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn non_positive_constant_rejected() {
        assert!(Scalar::hbar().to_complex(0.0, 1.0, 1.0).is_err());
        assert!(Scalar::hbar().to_complex(1.0, -2.0, 1.0).is_err());
    }

    #[test]
    fn rendering() {
        let s = Scalar::monomial(-GaussianRational::i(), 1, -1, -1);
        assert_eq!(s.to_string(), "(-i) hbar kappa^-1 c^-1");
        assert_eq!(s.render_inner(), "-i hbar kappa^-1 c^-1");
        assert_eq!(Scalar::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }
}
