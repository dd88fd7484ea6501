//! Which of `P_i -> P_i q^{+-1}`, in either direction, carries one coproduct
//! onto the other.
//!
//! ```bash
//! cargo run --example basis_map
//! ```

use kappa_hopf::duality::basis_map_check;

fn main() -> kappa_hopf::Result<()> {
    let report = basis_map_check()?;
    for c in &report.candidates {
        println!("{:<24} {}", c.name, if c.pass { "intertwines" } else { "fails" });
        for (g, r) in c.residuals.iter().filter(|(_, r)| r != "0") {
            println!("    {g}: {r}");
        }
    }
    match report.exactly_one() {
        Some(name) => println!("unique map: {name}"),
        None => println!("{} candidates pass: {:?}", report.passing.len(), report.passing),
    }
    Ok(())
}
