//! Text syntax for algebra queries.
//!
//! ```text
//! [N1, P1]                     commutator
//! x0 x1 + (i hbar/(kappa c)) x1
//! D(P1)  S(N1)  eps(q^3)       coproduct, antipode, counit
//! <P1 | x1>   q^-2 |> x0       pairing, left action
//! P1 ⊗ q + q^-1 (x) P1         tensors
//! ```

mod eval;
mod parse;

pub use eval::{infer_sector, Evaluator, Value};
pub use parse::{parse, Constant, Expr};

use crate::error::Result;
use crate::ncpoly::{Basis, Sector};

/// Parses and evaluates, inferring the sector unless one is given.
pub fn evaluate(input: &str, basis: Basis, sector: Option<Sector>) -> Result<Value> {
    let expr = parse(input)?;
    let sector = match sector {
        Some(s) => s,
        None => infer_sector(&expr)?,
    };
    Evaluator::new(basis, sector).eval(&expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(s: &str, basis: Basis) -> String {
        evaluate(s, basis, None).unwrap().to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(run("[x0, x1]", Basis::Bicross), "(-i hbar kappa^-1 c^-1) x1");
        assert_eq!(run("D(P1)", Basis::Standard), "P1 ⊗ q + q^-1 ⊗ P1");
        assert_eq!(run("eps(q)", Basis::Bicross), "1");
        assert_eq!(run("<P1 | x1>", Basis::Bicross), "(-i) hbar");
        assert_eq!(run("S(N1)", Basis::Standard), "-N1 + (3/2 i kappa^-1 c^-1) P1");
        assert_eq!(run("P1 x1", Basis::Bicross), "-i hbar + x1 P1");
        assert_eq!(run("eps(x0 x1 + 5)", Basis::Bicross), "5");
        assert_eq!(run("q q^-1", Basis::Bicross), "1");
    }

    #[test]
    fn sector_errors() {
        assert!(evaluate("x0 N1", Basis::Bicross, None).is_err());
        assert!(evaluate("N1", Basis::Bicross, Some(Sector::PhaseSpace)).is_err());
        assert!(evaluate("<P1 | x1>", Basis::Bicross, Some(Sector::Poincare)).is_err());
    }
}
