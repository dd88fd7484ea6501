//! Multiplying words and reducing them to normal order with the relation tables.
//!
//! ```bash
//! cargo run --example normal_ordering
//! ```

use kappa_hopf::ncpoly::{AlgebraPreset, Basis, Element, Generator, Sector};

fn main() -> kappa_hopf::Result<()> {
    let bicross = AlgebraPreset::new(Basis::Bicross, Sector::PhaseSpace);
    let (x0, x1, p1) = (Generator::x(0), Generator::x(1), Generator::p(1));

    let word = Element::monomial(kappa_hopf::scalar::Scalar::one(), &[p1, x1, x0], 0)?;
    println!("P1 x1 x0           -> {}", bicross.normal_form(&word)?.render());
    println!("[x0, x1]           =  {}", bicross.generator_commutator(x0, x1)?.render());
    println!("[x1, P1]           =  {}", bicross.generator_commutator(x1, p1)?.render());

    let q = Element::q(-2);
    println!("q^-2 x0            -> {}", bicross.multiply(&q, &Element::generator(x0))?.render());

    let poincare = AlgebraPreset::new(Basis::Standard, Sector::Poincare);
    let (n1, n2) = (Generator::n(1), Generator::n(2));
    println!("[N1, N2] standard  =  {}", poincare.generator_commutator(n1, n2)?.render());
    println!("classical limit    =  {}", poincare.generator_commutator(n1, n2)?.classical_limit().render());
    println!("{} table entries in {}", poincare.rule_keys().len(), poincare.label());
    Ok(())
}
