//! Free associative algebra over [`Scalar`](crate::scalar::Scalar) with the
//! kappa-Poincare generators, normal ordering and commutators.

mod element;
mod generator;
mod jacobi;
mod preset;
mod rewrite;

pub(crate) use element::{push_signed, render_term};
pub use element::{Element, Monomial};
pub use generator::{levi_civita, metric, Generator, GeneratorKind};
pub use jacobi::{check_jacobi, jacobiator, JacobiCheck};
pub use preset::{AlgebraPreset, Basis, RuleKey, Sector, DEFAULT_STEP_CAP};

/// `q -> 1`, then drop every term with a negative power of `kappa`.
pub fn classical_limit(e: &Element) -> Element {
    e.classical_limit()
}
