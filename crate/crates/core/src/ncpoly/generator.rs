use std::fmt;

use serde::{Deserialize, Serialize};

/// Algebra generators, declared in normal-form order.
///
/// Positions come first so that phase-space normal forms read `x ... P ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    X0,
    X1,
    X2,
    X3,
    M1,
    M2,
    M3,
    N1,
    N2,
    N3,
    P0,
    P1,
    P2,
    P3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Position,
    Rotation,
    Boost,
    Momentum,
}

impl Generator {
    pub const ALL: [Generator; 14] = [
        Generator::X0,
        Generator::X1,
        Generator::X2,
        Generator::X3,
        Generator::M1,
        Generator::M2,
        Generator::M3,
        Generator::N1,
        Generator::N2,
        Generator::N3,
        Generator::P0,
        Generator::P1,
        Generator::P2,
        Generator::P3,
    ];

    /// Position `x_mu`, `mu` in `0..=3`.
    pub fn x(mu: usize) -> Self {
        [Self::X0, Self::X1, Self::X2, Self::X3][mu]
    }

    /// Rotation `M_i`, `i` in `1..=3`.
    pub fn m(i: usize) -> Self {
        [Self::M1, Self::M2, Self::M3][i - 1]
    }

    /// Boost `N_i`, `i` in `1..=3`.
    pub fn n(i: usize) -> Self {
        [Self::N1, Self::N2, Self::N3][i - 1]
    }

    /// Momentum `P_mu`, `mu` in `0..=3`.
    pub fn p(mu: usize) -> Self {
        [Self::P0, Self::P1, Self::P2, Self::P3][mu]
    }

    pub fn kind(self) -> GeneratorKind {
        use Generator::*;
        match self {
            X0 | X1 | X2 | X3 => GeneratorKind::Position,
            M1 | M2 | M3 => GeneratorKind::Rotation,
            N1 | N2 | N3 => GeneratorKind::Boost,
            P0 | P1 | P2 | P3 => GeneratorKind::Momentum,
        }
    }

    /// Spacetime index (0..=3 for x and P, 1..=3 for M and N).
    pub fn index(self) -> usize {
        use Generator::*;
        match self {
            X0 | P0 => 0,
            X1 | M1 | N1 | P1 => 1,
            X2 | M2 | N2 | P2 => 2,
            X3 | M3 | N3 | P3 => 3,
        }
    }

    pub fn is_position(self) -> bool {
        self.kind() == GeneratorKind::Position
    }

    pub fn is_lorentz(self) -> bool {
        matches!(self.kind(), GeneratorKind::Rotation | GeneratorKind::Boost)
    }

    pub fn is_momentum(self) -> bool {
        self.kind() == GeneratorKind::Momentum
    }

    pub fn name(self) -> &'static str {
        use Generator::*;
        match self {
            X0 => "x0",
            X1 => "x1",
            X2 => "x2",
            X3 => "x3",
            M1 => "M1",
            M2 => "M2",
            M3 => "M3",
            N1 => "N1",
            N2 => "N2",
            N3 => "N3",
            P0 => "P0",
            P1 => "P1",
            P2 => "P2",
            P3 => "P3",
        }
    }

    /// Accepts the canonical names plus lowercase `p0..p3` for momenta.
    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|g| g.name() == s).or(match s {
            "p0" => Some(Self::P0),
            "p1" => Some(Self::P1),
            "p2" => Some(Self::P2),
            "p3" => Some(Self::P3),
            _ => None,
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Levi-Civita symbol on indices `1..=3`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Minkowski metric `diag(-1, 1, 1, 1)`.
pub fn metric(mu: usize, nu: usize) -> i64 {
    match (mu, nu) {
        (0, 0) => -1,
        (a, b) if a == b => 1,
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_x_m_n_p() {
        let mut sorted = Generator::ALL;
        sorted.sort();
        assert_eq!(sorted, Generator::ALL);
        assert!(Generator::X3 < Generator::M1);
        assert!(Generator::N3 < Generator::P0);
    }

    #[test]
    fn names_round_trip() {
        for g in Generator::ALL {
            assert_eq!(Generator::from_name(g.name()), Some(g));
        }
        assert_eq!(Generator::from_name("p2"), Some(Generator::P2));
        assert_eq!(Generator::from_name("q"), None);
    }

    #[test]
    fn epsilon() {
        assert_eq!(levi_civita(1, 2, 3), 1);
        assert_eq!(levi_civita(2, 1, 3), -1);
        assert_eq!(levi_civita(1, 1, 3), 0);
    }
}
