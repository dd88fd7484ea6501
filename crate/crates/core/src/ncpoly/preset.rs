//! Relation tables for the two momentum bases and the two sectors.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::{Element, Monomial};
use super::generator::{levi_civita, Generator};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar};

pub const DEFAULT_STEP_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Bicross,
    Standard,
}

impl Basis {
    pub const ALL: [Basis; 2] = [Basis::Bicross, Basis::Standard];

    pub fn name(self) -> &'static str {
        match self {
            Basis::Bicross => "bicross",
            Basis::Standard => "standard",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    /// Lorentz generators and momenta.
    Poincare,
    /// Positions and momenta.
    PhaseSpace,
}

impl Sector {
    pub const ALL: [Sector; 2] = [Sector::Poincare, Sector::PhaseSpace];

    pub fn name(self) -> &'static str {
        match self {
            Sector::Poincare => "poincare",
            Sector::PhaseSpace => "phasespace",
        }
    }

    pub fn admits(self, g: Generator) -> bool {
        match self {
            Sector::Poincare => !g.is_position(),
            Sector::PhaseSpace => !g.is_lorentz(),
        }
    }

    pub fn generators(self) -> Vec<Generator> {
        Generator::ALL.iter().copied().filter(|&g| self.admits(g)).collect()
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Identifies one entry of a relation table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleKey {
    /// `hi lo = lo hi + E` with `hi > lo`.
    Swap(Generator, Generator),
    /// `q^a g = g q^a + a D_g q^a`.
    QShift(Generator),
}

impl fmt::Display for RuleKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleKey::Swap(hi, lo) => write!(f, "({hi}, {lo})"),
            RuleKey::QShift(g) => write!(f, "(q, {g})"),
        }
    }
}

/// Ordered-pair rewrite rules for one basis and sector.
///
/// `q` is an independent invertible generator standing for `exp(P0 / 2 kappa c)`.
/// Its exchange with `g` is encoded by `D_g = -[g, q] q^-1`, which must commute
/// with `q`; the rewrite `q^a g -> g q^a + a D_g q^a` then holds for every
/// integer `a`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraPreset {
    basis: Basis,
    sector: Sector,
    swaps: BTreeMap<(Generator, Generator), Element>,
    q_shifts: BTreeMap<Generator, Element>,
    step_cap: usize,
}

impl AlgebraPreset {
    pub fn new(basis: Basis, sector: Sector) -> Self {
        let mut t = TableBuilder::default();
        match sector {
            Sector::Poincare => poincare_relations(&mut t, basis),
            Sector::PhaseSpace => phase_space_relations(&mut t, basis),
        }
        let mut preset =
            Self { basis, sector, swaps: BTreeMap::new(), q_shifts: BTreeMap::new(), step_cap: DEFAULT_STEP_CAP };
        let gens = sector.generators();
        for &hi in &gens {
            for &lo in &gens {
                if hi > lo {
                    let e = t.swaps.remove(&(hi, lo)).unwrap_or_default();
                    preset.swaps.insert((hi, lo), e);
                }
            }
            let d = t.q_shifts.remove(&hi).unwrap_or_default();
            preset.q_shifts.insert(hi, d);
        }
        debug_assert!(t.swaps.is_empty() && t.q_shifts.is_empty(), "relation outside sector");
        // Corrections may be written out of order; store them normalized.
        let keys: Vec<_> = preset.swaps.keys().copied().collect();
        for k in keys {
            let nf = preset.normal_form(&preset.swaps[&k]).expect("relation table normalizes");
            preset.swaps.insert(k, nf);
        }
        preset
    }

    pub fn bicross_poincare() -> Self {
        Self::new(Basis::Bicross, Sector::Poincare)
    }

    pub fn standard_poincare() -> Self {
        Self::new(Basis::Standard, Sector::Poincare)
    }

    pub fn bicross_phase_space() -> Self {
        Self::new(Basis::Bicross, Sector::PhaseSpace)
    }

    pub fn standard_phase_space() -> Self {
        Self::new(Basis::Standard, Sector::PhaseSpace)
    }

    /// All four presets.
    pub fn all() -> Vec<Self> {
        Sector::ALL.iter().flat_map(|&s| Basis::ALL.iter().map(move |&b| Self::new(b, s))).collect()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    /// `bicross/poincare` style label.
    pub fn label(&self) -> String {
        format!("{}/{}", self.basis, self.sector)
    }

    pub fn step_cap(&self) -> usize {
        self.step_cap
    }

    pub fn with_step_cap(mut self, cap: usize) -> Self {
        self.step_cap = cap;
        self
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.sector.generators()
    }

    pub fn admits(&self, g: Generator) -> bool {
        self.sector.admits(g)
    }

    pub fn check_element(&self, e: &Element) -> Result<()> {
        for g in e.generators() {
            if !self.admits(g) {
                return Err(Error::Sector { generator: g.to_string(), sector: self.sector.to_string() });
            }
        }
        Ok(())
    }

    pub(crate) fn swap_correction(&self, hi: Generator, lo: Generator) -> Result<&Element> {
        self.swaps.get(&(hi, lo)).ok_or_else(|| Error::Sector {
            generator: if self.admits(hi) { lo.to_string() } else { hi.to_string() },
            sector: self.sector.to_string(),
        })
    }

    pub(crate) fn q_shift(&self, g: Generator) -> Result<&Element> {
        self.q_shifts.get(&g).ok_or_else(|| Error::Sector { generator: g.to_string(), sector: self.sector.to_string() })
    }

    /// Every table entry, including the zero ones.
    pub fn rule_keys(&self) -> Vec<RuleKey> {
        self.swaps
            .keys()
            .map(|&(hi, lo)| RuleKey::Swap(hi, lo))
            .chain(self.q_shifts.keys().map(|&g| RuleKey::QShift(g)))
            .collect()
    }

    pub fn rule(&self, key: RuleKey) -> Option<&Element> {
        match key {
            RuleKey::Swap(hi, lo) => self.swaps.get(&(hi, lo)),
            RuleKey::QShift(g) => self.q_shifts.get(&g),
        }
    }

    /// Replaces one table entry. Used for fault injection in tests.
    pub fn with_rule(mut self, key: RuleKey, value: Element) -> Self {
        match key {
            RuleKey::Swap(hi, lo) => {
                self.swaps.insert((hi, lo), value);
            }
            RuleKey::QShift(g) => {
                self.q_shifts.insert(g, value);
            }
        }
        self
    }

    /// Doubles a nonzero entry, or sets a zero entry to `1`.
    pub fn perturbed(self, key: RuleKey) -> Self {
        let current = self.rule(key).cloned().unwrap_or_default();
        let value = if current.is_zero() { Element::one() } else { &current + &current };
        self.with_rule(key, value)
    }

    /// The table commutator `[a, b]` of two generators.
    pub fn generator_commutator(&self, a: Generator, b: Generator) -> Result<Element> {
        self.commutator(&Element::generator(a), &Element::generator(b))
    }
}

#[derive(Default)]
struct TableBuilder {
    swaps: BTreeMap<(Generator, Generator), Element>,
    q_shifts: BTreeMap<Generator, Element>,
}

impl TableBuilder {
    /// Records `[a, b] = value`.
    fn comm(&mut self, a: Generator, b: Generator, value: Element) {
        assert_ne!(a, b);
        if a > b {
            self.swaps.insert((a, b), value);
        } else {
            self.swaps.insert((b, a), -value);
        }
    }

    /// Records `[g, q] = w q` with `w` commuting with `q`.
    fn comm_q(&mut self, g: Generator, w: Element) {
        self.q_shifts.insert(g, -w);
    }
}

fn gauss(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
    &GaussianRational::ratio(re.0, re.1) + &(&GaussianRational::i() * &GaussianRational::ratio(im.0, im.1))
}

/// `(n/d) i hbar^h kappa^k c^c`
fn imag(n: i64, d: i64, h: i64, k: i64, c: i64) -> Scalar {
    Scalar::monomial(gauss((0, 1), (n, d)), h, k, c)
}

fn mono(coef: Scalar, word: &[Generator], qexp: i64) -> Element {
    Element::term(coef, Monomial::new(word.to_vec(), qexp).expect("table monomial"))
}

fn sum(parts: impl IntoIterator<Item = Element>) -> Element {
    parts.into_iter().fold(Element::zero(), |a, b| a + b)
}

fn poincare_relations(t: &mut TableBuilder, basis: Basis) {
    use Generator as G;
    let (m, n, p) = (G::m, G::n, G::p);

    for i in 1..=3 {
        for j in 1..=3 {
            // [M_i, M_j] = i eps_ijk M_k ; [M_i, N_j] = i eps_ijk N_k ; [M_i, P_j] = i eps_ijk P_k
            let rot = |target: fn(usize) -> Generator| {
                sum((1..=3).map(|k| mono(imag(levi_civita(i, j, k), 1, 0, 0, 0), &[target(k)], 0)))
            };
            if i < j {
                t.comm(m(i), m(j), rot(G::m));
            }
            t.comm(m(i), n(j), rot(G::n));
            t.comm(m(i), p(j), rot(G::p));
        }
        // [N_i, P0] = i P_i ; [N_i, q] = (i / 2 kappa c) P_i q
        t.comm(n(i), G::P0, mono(imag(1, 1, 0, 0, 0), &[p(i)], 0));
        t.comm_q(n(i), mono(imag(1, 2, 0, -1, -1), &[p(i)], 0));
    }

    match basis {
        Basis::Bicross => {
            for i in 1..=3 {
                for j in 1..=3 {
                    if i < j {
                        // [N_i, N_j] = -i eps_ijk M_k
                        let v = sum((1..=3).map(|k| mono(imag(-levi_civita(i, j, k), 1, 0, 0, 0), &[m(k)], 0)));
                        t.comm(n(i), n(j), v);
                    }
                    // [N_i, P_j] = i d_ij [kappa c (1 - q^-4)/2 + (1/2 kappa c) P.P] - (i/kappa c) P_i P_j
                    let mut v = mono(imag(-1, 1, 0, -1, -1), &[p(i), p(j)], 0);
                    if i == j {
                        v = v
                            + mono(imag(1, 2, 0, 1, 1), &[], 0)
                            + mono(imag(-1, 2, 0, 1, 1), &[], -4)
                            + sum((1..=3).map(|l| mono(imag(1, 2, 0, -1, -1), &[p(l), p(l)], 0)));
                    }
                    t.comm(n(i), p(j), v);
                }
            }
        }
        Basis::Standard => {
            for i in 1..=3 {
                for j in 1..=3 {
                    if i < j {
                        // [N_i, N_j] = -i eps_ijk (M_k cosh(P0/kappa c) - (1/4 kappa^2 c^2) P_k (P.M))
                        let mut v = Element::zero();
                        for k in 1..=3 {
                            let e = levi_civita(i, j, k);
                            if e == 0 {
                                continue;
                            }
                            v = v
                                + mono(imag(-e, 2, 0, 0, 0), &[m(k)], 2)
                                + mono(imag(-e, 2, 0, 0, 0), &[m(k)], -2)
                                + sum((1..=3).map(|l| mono(imag(e, 4, 0, -2, -2), &[p(k), p(l), m(l)], 0)));
                        }
                        t.comm(n(i), n(j), v);
                    }
                    if i == j {
                        // [N_i, P_i] = i kappa c sinh(P0/kappa c)
                        let v = mono(imag(1, 2, 0, 1, 1), &[], 2) + mono(imag(-1, 2, 0, 1, 1), &[], -2);
                        t.comm(n(i), p(j), v);
                    }
                }
            }
        }
    }
}

fn phase_space_relations(t: &mut TableBuilder, basis: Basis) {
    use Generator as G;
    let (x, p) = (G::x, G::p);
    for k in 1..=3 {
        // [x0, x_k] = -(i hbar / kappa c) x_k
        t.comm(G::X0, x(k), mono(imag(-1, 1, 1, -1, -1), &[x(k)], 0));
    }
    // [x0, p0] = -i hbar ; [x0, q] = -(i hbar / 2 kappa c) q
    t.comm(G::X0, G::P0, mono(imag(-1, 1, 1, 0, 0), &[], 0));
    t.comm_q(G::X0, mono(imag(-1, 2, 1, -1, -1), &[], 0));
    match basis {
        Basis::Bicross => {
            for k in 1..=3 {
                t.comm(x(k), p(k), mono(imag(1, 1, 1, 0, 0), &[], 0));
                t.comm(G::X0, p(k), mono(imag(1, 1, 1, -1, -1), &[p(k)], 0));
            }
        }
        Basis::Standard => {
            for k in 1..=3 {
                t.comm(x(k), p(k), mono(imag(1, 1, 1, 0, 0), &[], 1));
                t.comm(G::X0, p(k), mono(imag(1, 2, 1, -1, -1), &[p(k)], 0));
            }
        }
    }
}
