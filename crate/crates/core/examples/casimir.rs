//! The deformed mass Casimir and its centrality.
//!
//! ```bash
//! cargo run --example casimir
//! ```

use kappa_hopf::hopf::{casimir, check_centrality};
use kappa_hopf::ncpoly::Basis;

fn main() {
    for basis in Basis::ALL {
        println!("{basis}: C2 = {}", casimir(basis).render());
        for c in check_centrality(basis) {
            println!("  {} = {}", c.subject, c.residual_rendering);
        }
    }
}
