//! Check suites behind `kappa-hopf suite`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::duality::{
    basis_map_check_between, check_cross_relations, check_pairing_compatibility, derive_with, Convention,
    PairingContext,
};
use crate::error::{Error, Result};
use crate::hopf::{check_all, check_centrality_in, AxiomCheck, HopfAlgebra};
use crate::ncpoly::{check_jacobi, AlgebraPreset, Basis, Generator, RuleKey, Sector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteKind {
    Axioms,
    Jacobi,
    Phasespace,
    Casimir,
    BasisMap,
    All,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 6] = [
        SuiteKind::Axioms,
        SuiteKind::Jacobi,
        SuiteKind::Phasespace,
        SuiteKind::Casimir,
        SuiteKind::BasisMap,
        SuiteKind::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Axioms => "axioms",
            SuiteKind::Jacobi => "jacobi",
            SuiteKind::Phasespace => "phasespace",
            SuiteKind::Casimir => "casimir",
            SuiteKind::BasisMap => "basis-map",
            SuiteKind::All => "all",
        }
    }

    fn parts(self) -> Vec<SuiteKind> {
        match self {
            SuiteKind::All => SuiteKind::ALL[..5].to_vec(),
            k => vec![k],
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown suite `{s}`")))
    }
}

/// Parses `A,B` (a swap entry) or `q,G` (a `q` exchange entry).
pub fn parse_rule_key(s: &str) -> Result<RuleKey> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let gen = |n: &str| Generator::from_name(n).ok_or_else(|| Error::Parameter(format!("unknown generator `{n}`")));
    match parts.as_slice() {
        ["q", g] | [g, "q"] => Ok(RuleKey::QShift(gen(g)?)),
        [a, b] => {
            let (a, b) = (gen(a)?, gen(b)?);
            if a == b {
                return Err(Error::Parameter(format!("`{s}` is not a table entry")));
            }
            Ok(RuleKey::Swap(a.max(b), a.min(b)))
        }
        _ => Err(Error::Parameter(format!("expected `A,B`, got `{s}`"))),
    }
}

/// One check outcome. Informational records are reported but never fail the
/// suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRecord {
    pub suite: String,
    pub preset: String,
    pub check: String,
    pub subject: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    pub detail: String,
}

impl SuiteRecord {
    fn from_axiom(suite: SuiteKind, a: AxiomCheck) -> Self {
        Self {
            suite: suite.to_string(),
            preset: a.preset,
            check: a.axiom,
            subject: a.subject,
            pass: a.pass,
            informational: false,
            detail: a.residual_rendering,
        }
    }

    pub fn is_failure(&self) -> bool {
        !self.pass && !self.informational
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub bases: Vec<Basis>,
    /// Table entry to corrupt with [`AlgebraPreset::perturbed`] in every preset
    /// that has it.
    pub perturbation: Option<RuleKey>,
}

impl SuiteOptions {
    pub fn new(bases: &[Basis]) -> Self {
        Self { bases: bases.to_vec(), perturbation: None }
    }

    fn hopf(&self, basis: Basis, sector: Sector) -> HopfAlgebra {
        let preset = AlgebraPreset::new(basis, sector);
        let preset = match self.perturbation {
            Some(key) if preset.rule(key).is_some() => preset.perturbed(key),
            _ => preset,
        };
        HopfAlgebra::from_preset(preset)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: SuiteKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perturbation: Option<String>,
    pub checks: usize,
    pub failed: usize,
    pub records: Vec<SuiteRecord>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteRecord> {
        self.records.iter().filter(|r| r.is_failure())
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Summary per suite and preset, then every failure and informational line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(p) = &self.perturbation {
            out.push_str(&format!("perturbed entry {p}\n"));
        }
        let mut groups: Vec<(String, String, usize, usize)> = Vec::new();
        for r in self.records.iter().filter(|r| !r.informational) {
            match groups.iter_mut().find(|g| g.0 == r.suite && g.1 == r.preset) {
                Some(g) => {
                    g.2 += 1;
                    g.3 += usize::from(!r.pass);
                }
                None => groups.push((r.suite.clone(), r.preset.clone(), 1, usize::from(!r.pass))),
            }
        }
        for (suite, preset, n, bad) in groups {
            let status = if bad == 0 { "ok" } else { "FAIL" };
            out.push_str(&format!("{suite:<11} {preset:<20} {n:>5} checks  {status}\n"));
        }
        for r in &self.records {
            if r.informational {
                let verdict = if r.pass { "passes" } else { "fails" };
                out.push_str(&format!("  {} {} {} {verdict}: {}\n", r.suite, r.check, r.subject, r.detail));
            } else if !r.pass {
                out.push_str(&format!("  FAIL {} {} {} {}: {}\n", r.suite, r.preset, r.check, r.subject, r.detail));
            }
        }
        out.push_str(&format!("{} checks, {} failed\n", self.checks, self.failed));
        out
    }
}

pub fn run_suite(kind: SuiteKind, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut records = Vec::new();
    for part in kind.parts() {
        records.extend(run_part(part, opts)?);
    }
    let checks = records.iter().filter(|r| !r.informational).count();
    let failed = records.iter().filter(|r| r.is_failure()).count();
    Ok(SuiteReport { suite: kind, perturbation: opts.perturbation.map(|k| k.to_string()), checks, failed, records })
}

fn run_part(kind: SuiteKind, opts: &SuiteOptions) -> Result<Vec<SuiteRecord>> {
    let mut out = Vec::new();
    if kind == SuiteKind::BasisMap {
        return basis_map_records(opts);
    }
    for &basis in &opts.bases {
        for sector in Sector::ALL {
            let h = opts.hopf(basis, sector);
            out.extend(run_on(kind, &h)?);
        }
    }
    Ok(out)
}

/// Runs one of the per-preset suites (everything except `basis-map` and
/// `all`) on a single Hopf algebra. Suites that do not apply to its sector
/// yield no records.
pub fn run_on(kind: SuiteKind, h: &HopfAlgebra) -> Result<Vec<SuiteRecord>> {
    Ok(match kind {
        SuiteKind::Axioms => {
            let mut checks = check_all(h);
            if h.sector() == Sector::PhaseSpace {
                checks.extend(check_cross_relations(&PairingContext::from_hopf(h.clone(), Convention::Forward)?));
            }
            checks.into_iter().map(|a| SuiteRecord::from_axiom(kind, a)).collect()
        }
        SuiteKind::Casimir if h.sector() == Sector::Poincare => {
            check_centrality_in(h).into_iter().map(|a| SuiteRecord::from_axiom(kind, a)).collect()
        }
        SuiteKind::Casimir => Vec::new(),
        SuiteKind::Jacobi => check_jacobi(h.preset())
            .into_iter()
            .map(|j| SuiteRecord {
                suite: kind.to_string(),
                preset: j.preset,
                check: "jacobi".into(),
                subject: j.triple,
                pass: j.pass,
                informational: false,
                detail: j.residual_rendering,
            })
            .collect(),
        SuiteKind::Phasespace if h.sector() == Sector::PhaseSpace => phasespace_records(h)?,
        SuiteKind::Phasespace => Vec::new(),
        SuiteKind::BasisMap | SuiteKind::All => {
            return Err(Error::Parameter(format!("suite `{kind}` does not run on a single preset")))
        }
    })
}

fn phasespace_records(h: &HopfAlgebra) -> Result<Vec<SuiteRecord>> {
    let ctx = PairingContext::from_hopf(h.clone(), Convention::Forward)?;
    let preset = h.label();
    let mut out: Vec<SuiteRecord> = derive_with(&ctx)
        .into_iter()
        .map(|r| SuiteRecord {
            suite: SuiteKind::Phasespace.to_string(),
            preset: preset.clone(),
            check: "derivation".into(),
            subject: r.pair,
            pass: r.matches,
            informational: false,
            detail: if r.matches {
                r.derived_rendering
            } else {
                format!("derived {} but table has {}", r.derived_rendering, r.table_rendering)
            },
        })
        .collect();
    out.extend(check_pairing_compatibility(&ctx).into_iter().map(|c| SuiteRecord {
        suite: SuiteKind::Phasespace.to_string(),
        preset: preset.clone(),
        check: "pairing-compatibility".into(),
        subject: format!("<{} | {}>", c.momentum, c.pair),
        pass: c.pass,
        informational: false,
        detail: format!("{} vs {}", c.lhs, c.rhs),
    }));
    Ok(out)
}

/// Each candidate is informational. The check itself passes when at least
/// one candidate carries one coproduct onto the other.
fn basis_map_records(opts: &SuiteOptions) -> Result<Vec<SuiteRecord>> {
    let report = basis_map_check_between(
        &opts.hopf(Basis::Bicross, Sector::Poincare),
        &opts.hopf(Basis::Standard, Sector::Poincare),
    )?;
    let suite = SuiteKind::BasisMap.to_string();
    let mut out: Vec<SuiteRecord> = report
        .candidates
        .iter()
        .map(|c| SuiteRecord {
            suite: suite.clone(),
            preset: "bicross<->standard".into(),
            check: "candidate".into(),
            subject: c.name.clone(),
            pass: c.pass,
            informational: true,
            detail: if c.pass {
                "intertwines the coproducts".into()
            } else {
                let bad: Vec<String> =
                    c.residuals.iter().filter(|(_, r)| r != "0").map(|(g, r)| format!("{g}: {r}")).collect();
                bad.join("; ")
            },
        })
        .collect();
    out.push(SuiteRecord {
        suite,
        preset: "bicross<->standard".into(),
        check: "intertwiner-exists".into(),
        subject: "P_i -> P_i q^s".into(),
        pass: !report.passing.is_empty(),
        informational: false,
        detail: if report.passing.is_empty() { "no candidate passes".into() } else { report.passing.join(" | ") },
    });
    Ok(out)
}
