pub mod duality;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod kinematics;
pub mod ncpoly;
pub mod report;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
