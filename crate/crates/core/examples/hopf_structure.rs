//! Coproducts, antipodes and counits, and the axiom checks over them.
//!
//! ```bash
//! cargo run --example hopf_structure
//! ```

use kappa_hopf::hopf::{check_all, HopfAlgebra};
use kappa_hopf::ncpoly::{Basis, Element, Generator, Sector};

fn main() -> kappa_hopf::Result<()> {
    for basis in Basis::ALL {
        let h = HopfAlgebra::new(basis, Sector::Poincare);
        println!("{}", h.label());
        for g in [Generator::p(0), Generator::p(1), Generator::n(1)] {
            println!("  D({g}) = {}", h.generator_coproduct(g)?);
            println!("  S({g}) = {}", h.generator_antipode(g)?.render());
        }
        let d = h.coproduct(&Element::generator(Generator::p(1)))?;
        println!("  (D x id) D(P1) = {}", h.coproduct_on_slot(&d, 0)?);
        println!("  eps(q^3) = {}", h.counit(&Element::q(3))?);
    }

    for h in HopfAlgebra::all() {
        let checks = check_all(&h);
        let failed = checks.iter().filter(|c| !c.pass).count();
        println!("{:<20} {} axiom checks, {failed} failed", h.label(), checks.len());
    }
    Ok(())
}
