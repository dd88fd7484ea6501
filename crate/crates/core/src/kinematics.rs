//! Double-precision evaluation of the deformed mass shell and the uncertainty
//! bounds of both bases.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncpoly::{AlgebraPreset, Basis, Element};

/// Numeric constants and kinematics.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KinematicParams {
    pub kappa: f64,
    pub c: f64,
    pub hbar: f64,
    /// Rest mass `M`.
    #[serde(rename = "M")]
    pub mass: f64,
    /// `|P|`
    #[serde(rename = "P")]
    pub pvec: f64,
}

impl Default for KinematicParams {
    fn default() -> Self {
        Self { kappa: 1.0, c: 1.0, hbar: 1.0, mass: 0.0, pvec: 0.0 }
    }
}

impl KinematicParams {
    pub fn new(kappa: f64, c: f64, hbar: f64, mass: f64, pvec: f64) -> Result<Self> {
        let p = Self { kappa, c, hbar, mass, pvec };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("kappa", self.kappa), ("c", self.c), ("hbar", self.hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Parameter(format!("{name} must be positive and finite, got {v}")));
            }
        }
        for (name, v) in [("M", self.mass), ("P", self.pvec)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::Parameter(format!("{name} must be nonnegative and finite, got {v}")));
            }
        }
        Ok(())
    }
}

/// `e^{P0/2 kappa c} = s + sqrt(1 + s^2)` with `s = sqrt(P^2/c^2 + M^2) / 2 kappa`.
pub fn mass_shell_exp(p: &KinematicParams) -> f64 {
    let s = shell_s(p);
    s + s.hypot(1.0)
}

fn shell_s(p: &KinematicParams) -> f64 {
    (p.pvec / p.c).hypot(p.mass) / (2.0 * p.kappa)
}

/// On-shell `P0`.
pub fn mass_shell_p0(p: &KinematicParams) -> f64 {
    2.0 * p.kappa * p.c * shell_s(p).asinh()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MassShellCheck {
    pub exp: f64,
    pub p0: f64,
    /// `(2 kappa sinh(P0/2 kappa c))^2 - P^2/c^2 - M^2`
    pub residual: f64,
    /// `residual / (P^2/c^2 + M^2)`, or the residual itself at the vacuum.
    pub relative: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Plugs [`mass_shell_exp`] back into the mass-shell condition.
///
/// Passes when `|residual| < 1e-12 max(1, M^2)`.
pub fn check_mass_shell(p: &KinematicParams) -> MassShellCheck {
    let e = mass_shell_exp(p);
    let two_sinh = (e - 1.0) * (1.0 + e.recip());
    let lhs = (p.kappa * two_sinh).powi(2);
    let target = (p.pvec / p.c).powi(2) + p.mass * p.mass;
    let residual = lhs - target;
    let tolerance = 1e-12 * p.mass.powi(2).max(1.0);
    MassShellCheck {
        exp: e,
        p0: mass_shell_p0(p),
        residual,
        relative: if target > 0.0 { residual / target } else { residual },
        tolerance,
        pass: residual.abs() < tolerance,
    }
}

/// User-supplied `<m>` keyed by the monomial rendering (`"x1"`, `"q"`, `"x0 P1"`).
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ExpectationAssignment {
    values: BTreeMap<String, Complex64>,
}

impl ExpectationAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Single generators and `q` are hermitian, so their expectations must be
    /// real; `<1>` must be 1.
    pub fn insert(&mut self, monomial: &str, value: Complex64) -> Result<()> {
        let key = monomial.trim().to_string();
        if key == "1" && value != Complex64::new(1.0, 0.0) {
            return Err(Error::Parameter(format!("<1> must be 1, got {value}")));
        }
        let hermitian = !key.contains(' ') && !key.contains('^');
        if hermitian && value.im != 0.0 {
            return Err(Error::Parameter(format!("<{key}> must be real, got {value}")));
        }
        self.values.insert(key, value);
        Ok(())
    }

    pub fn with(mut self, monomial: &str, value: f64) -> Result<Self> {
        self.insert(monomial, Complex64::new(value, 0.0))?;
        Ok(self)
    }

    pub fn get(&self, monomial: &str) -> Option<Complex64> {
        if monomial == "1" {
            return Some(Complex64::new(1.0, 0.0));
        }
        self.values.get(monomial).copied()
    }

    /// `<e>` for an element in normal form.
    pub fn expectation(&self, e: &Element, p: &KinematicParams) -> Result<Complex64> {
        let mut missing = Vec::new();
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in e.terms() {
            let key = m.to_string();
            match self.get(&key) {
                Some(v) => total += c.to_complex(p.hbar, p.kappa, p.c)? * v,
                None => missing.push(key),
            }
        }
        if missing.is_empty() {
            Ok(total)
        } else {
            Err(Error::IncompleteState(missing))
        }
    }
}

/// `½ |<[a, b]>|`
pub fn robertson_bound(
    a: &Element,
    b: &Element,
    preset: &AlgebraPreset,
    state: &ExpectationAssignment,
    p: &KinematicParams,
) -> Result<f64> {
    p.validate()?;
    let comm = preset.commutator(a, b)?;
    Ok(0.5 * state.expectation(&comm, p)?.norm())
}

/// Lower bounds with `t = x0/c`, `E = c p0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UncertaintyBounds {
    pub basis: Basis,
    /// `Δt Δx_k`
    pub time_space: [f64; 3],
    /// `Δp_k Δx_k`
    pub momentum_position: f64,
    /// `ΔE Δt`
    pub energy_time: f64,
    /// `Δp_k Δt`
    pub momentum_time: [f64; 3],
    pub warnings: Vec<String>,
}

/// `<x_k>`, `<p_k>` and, for the standard basis, `<e^{P0/2 kappa c}>`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct StateMeans {
    pub x: [f64; 3],
    pub p: [f64; 3],
    pub q: f64,
}

pub fn bounds_bicross(state: &StateMeans, p: &KinematicParams) -> UncertaintyBounds {
    let l = p.hbar / (2.0 * p.kappa * p.c * p.c);
    UncertaintyBounds {
        basis: Basis::Bicross,
        time_space: state.x.map(|x| l * x.abs()),
        momentum_position: 0.5 * p.hbar,
        energy_time: 0.5 * p.hbar,
        momentum_time: state.p.map(|v| l * v.abs()),
        warnings: Vec::new(),
    }
}

pub fn bounds_standard(state: &StateMeans, p: &KinematicParams) -> UncertaintyBounds {
    let l = p.hbar / (2.0 * p.kappa * p.c * p.c);
    let mut warnings = Vec::new();
    if state.q < 1.0 {
        warnings.push(format!("<e^(P0/2 kappa c)> = {} is below 1; on-shell values are >= 1", state.q));
    }
    UncertaintyBounds {
        basis: Basis::Standard,
        time_space: state.x.map(|x| l * x.abs()),
        momentum_position: 0.5 * p.hbar * state.q.abs(),
        energy_time: 0.5 * p.hbar,
        momentum_time: state.p.map(|v| 0.5 * l * v.abs()),
        warnings,
    }
}

pub fn bounds(basis: Basis, state: &StateMeans, p: &KinematicParams) -> UncertaintyBounds {
    match basis {
        Basis::Bicross => bounds_bicross(state, p),
        Basis::Standard => bounds_standard(state, p),
    }
}

/// `(hbar/4) [1 + (1 + M/2 kappa)^2]`
pub fn nonrel_bound(mass: f64, kappa: f64, hbar: f64) -> f64 {
    0.25 * hbar * (1.0 + (1.0 + mass / (2.0 * kappa)).powi(2))
}

/// `(hbar/2) (1 + M/2 kappa)`, the weaker bound below [`nonrel_bound`].
pub fn nonrel_lower(mass: f64, kappa: f64, hbar: f64) -> f64 {
    0.5 * hbar * (1.0 + mass / (2.0 * kappa))
}

/// A computed value with regime warnings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub value: f64,
    pub warnings: Vec<String>,
}

/// `(hbar/2) (1 + Δp^2 / 8 kappa^2 c^2)`, meant for `0 <= Δp <= kappa c`.
pub fn modified_bound(delta_p: f64, kappa: f64, c: f64, hbar: f64) -> BoundValue {
    let kc = kappa * c;
    let mut warnings = Vec::new();
    if !(0.0..=kc).contains(&delta_p) {
        warnings.push(format!("delta_p = {delta_p} outside [0, kappa c = {kc}]"));
    }
    BoundValue { value: 0.5 * hbar * (1.0 + delta_p * delta_p / (8.0 * kc * kc)), warnings }
}

/// `(hbar/2) sqrt(1 + (<P>^2 + Δp^2 + M^2 c^2) / 4 kappa^2 c^2)`, with the
/// state average of the square root replaced by the root of the average.
pub fn sqrt_bound(delta_p: f64, mean_p: f64, mass: f64, kappa: f64, c: f64, hbar: f64) -> f64 {
    let kc = kappa * c;
    let num = mean_p * mean_p + delta_p * delta_p + (mass * c).powi(2);
    0.5 * hbar * (1.0 + num / (4.0 * kc * kc)).sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepVar {
    Kappa,
    Mass,
    P,
    Hbar,
    C,
}

impl SweepVar {
    fn set(self, p: &mut KinematicParams, v: f64) {
        match self {
            SweepVar::Kappa => p.kappa = v,
            SweepVar::Mass => p.mass = v,
            SweepVar::P => p.pvec = v,
            SweepVar::Hbar => p.hbar = v,
            SweepVar::C => p.c = v,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepQuantity {
    /// value `e^{P0/2 kappa c}`, residual of the mass-shell condition
    MassShell,
    /// value standard-basis `Δp Δx` bound at the on-shell `<q>`, residual against `hbar/2`
    StandardBound,
    /// value [`nonrel_bound`], residual against `hbar/2`
    Nonrel,
}

/// One sweep sample; CSV columns `kappa,c,hbar,M,P,value,residual`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub kappa: f64,
    pub c: f64,
    pub hbar: f64,
    #[serde(rename = "M")]
    pub mass: f64,
    #[serde(rename = "P")]
    pub pvec: f64,
    pub value: f64,
    pub residual: f64,
}

pub const SWEEP_COLUMNS: [&str; 7] = ["kappa", "c", "hbar", "M", "P", "value", "residual"];

/// Logarithmically spaced sweep of one parameter from `from` to `to`.
pub fn sweep(
    base: &KinematicParams,
    var: SweepVar,
    from: f64,
    to: f64,
    points: usize,
    quantity: SweepQuantity,
) -> Result<Vec<SweepRow>> {
    if !(from > 0.0 && to > 0.0) {
        return Err(Error::Parameter("sweep bounds must be positive".into()));
    }
    if points == 0 {
        return Err(Error::Parameter("sweep needs at least one point".into()));
    }
    let (lo, hi) = (from.log10(), to.log10());
    let mut rows = Vec::with_capacity(points);
    for k in 0..points {
        let t = if points == 1 { 0.0 } else { k as f64 / (points - 1) as f64 };
        let mut p = *base;
        var.set(&mut p, 10f64.powf(lo + t * (hi - lo)));
        p.validate()?;
        let (value, residual) = match quantity {
            SweepQuantity::MassShell => {
                let chk = check_mass_shell(&p);
                (chk.exp, chk.residual)
            }
            SweepQuantity::StandardBound => {
                let v = 0.5 * p.hbar * mass_shell_exp(&p);
                (v, v - 0.5 * p.hbar)
            }
            SweepQuantity::Nonrel => {
                let v = nonrel_bound(p.mass, p.kappa, p.hbar);
                (v, v - 0.5 * p.hbar)
            }
        };
        rows.push(SweepRow { kappa: p.kappa, c: p.c, hbar: p.hbar, mass: p.mass, pvec: p.pvec, value, residual });
    }
    Ok(rows)
}

/// `%.12g`-style formatting.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let s = format!("{:.*}", (11 - exp).max(0) as usize, x);
        trim_zeros(&s)
    } else {
        let s = format!("{x:.11e}");
        let (mant, e) = s.split_once('e').expect("exponent");
        format!("{}e{}", trim_zeros(mant), e)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_point() {
        let p = KinematicParams::new(1.0, 1.0, 1.0, 1.0, 0.0).unwrap();
        let chk = check_mass_shell(&p);
        assert!((chk.exp - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(chk.pass);
    }

    #[test]
    fn vacuum() {
        let p = KinematicParams::default();
        assert_eq!(mass_shell_exp(&p), 1.0);
        assert_eq!(check_mass_shell(&p).residual, 0.0);
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_sig((1.0 + 5f64.sqrt()) / 2.0), "1.61803398875");
        assert_eq!(fmt_sig(0.5), "0.5");
        assert_eq!(fmt_sig(1e12), "1e12");
        assert_eq!(fmt_sig(-2.5e-7), "-2.5e-7");
        assert_eq!(fmt_sig(100.0), "100");
    }

    #[test]
    fn invalid_params() {
        assert!(KinematicParams::new(0.0, 1.0, 1.0, 0.0, 0.0).is_err());
        assert!(KinematicParams::new(1.0, 1.0, 1.0, -1.0, 0.0).is_err());
    }

    #[test]
    fn hermitian_expectations_are_real() {
        let mut s = ExpectationAssignment::new();
        assert!(s.insert("x1", Complex64::new(0.0, 1.0)).is_err());
        assert!(s.insert("1", Complex64::new(2.0, 0.0)).is_err());
        assert!(s.insert("x0 P1", Complex64::new(0.0, 1.0)).is_ok());
    }
}
