//! Phase-space commutators recomputed from the pairing and cross product,
//! next to the relation table.
//!
//! ```bash
//! cargo run --example phase_space_derivation -- standard
//! ```

use kappa_hopf::duality::{check_pairing_compatibility, derive_with, Convention, PairingContext};
use kappa_hopf::ncpoly::{Basis, Element, Generator};

fn main() -> kappa_hopf::Result<()> {
    let basis = match std::env::args().nth(1).as_deref() {
        Some("standard") => Basis::Standard,
        _ => Basis::Bicross,
    };
    let ctx = PairingContext::forward(basis);

    let (p1, x1) = (Element::generator(Generator::p(1)), Element::generator(Generator::x(1)));
    println!("<P1 | x1>  = {}", ctx.pair(&p1, &x1)?);
    println!("P1 |> x1   = {}", ctx.left_action(&p1, &x1)?.render());
    println!("q^-2 |> x0 = {}", ctx.left_action(&Element::q(-2), &Element::generator(Generator::x(0)))?.render());
    println!();

    for row in derive_with(&ctx) {
        let mark = if row.matches { "" } else { "   <- differs from table" };
        println!("{:<10} = {}{mark}", row.pair, row.derived_rendering);
    }

    for convention in Convention::ALL {
        let checks = check_pairing_compatibility(&PairingContext::new(basis, convention));
        let bad = checks.iter().filter(|c| !c.pass).count();
        println!("{convention} convention: {bad} of {} compatibility checks fail", checks.len());
    }
    Ok(())
}
