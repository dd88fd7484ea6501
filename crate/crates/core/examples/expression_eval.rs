//! The expression language used by `kappa-hopf eval`.
//!
//! ```bash
//! cargo run --example expression_eval
//! cargo run --example expression_eval -- "S(S(N2))" standard
//! ```

use kappa_hopf::expr::evaluate;
use kappa_hopf::ncpoly::Basis;

fn main() {
    let mut args = std::env::args().skip(1);
    let inputs: Vec<(String, Basis)> = match args.next() {
        Some(expr) => {
            let basis = if args.next().as_deref() == Some("standard") { Basis::Standard } else { Basis::Bicross };
            vec![(expr, basis)]
        }
        None => [
            ("[x0, x1]", Basis::Bicross),
            ("D(P1)", Basis::Standard),
            ("S(N1)", Basis::Standard),
            ("[N1, P0]", Basis::Bicross),
            ("eps(q^3 + P2)", Basis::Bicross),
            ("<P1 | x1>", Basis::Bicross),
            ("q^-2 |> x0", Basis::Bicross),
            ("(P1 ⊗ 1 + q^-2 ⊗ P1)(P2 ⊗ 1)", Basis::Bicross),
            ("x0 x1 + (i hbar / (kappa c)) x1", Basis::Bicross),
            ("[x0, P1", Basis::Bicross),
        ]
        .into_iter()
        .map(|(s, b)| (s.to_string(), b))
        .collect(),
    };
    for (input, basis) in inputs {
        match evaluate(&input, basis, None) {
            Ok(v) => println!("{input:<34} {basis:<8} {} = {v}", v.kind()),
            Err(e) => println!("{input:<34} {basis:<8} error: {e}"),
        }
    }
}
