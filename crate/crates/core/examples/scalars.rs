//! Exact coefficients: Gaussian rationals times monomials in hbar, kappa, c.
//!
//! ```bash
//! cargo run --example scalars
//! ```

use kappa_hopf::scalar::{GaussianRational, Scalar};

fn main() -> kappa_hopf::Result<()> {
    let i_hbar = Scalar::i().checked_mul(&Scalar::hbar())?;
    let kc = Scalar::kappa().checked_mul(&Scalar::c())?;
    let length = i_hbar.checked_mul(&kc.inverse()?)?;
    println!("i hbar / (kappa c)   = {length}");
    println!("its square           = {}", length.pow(2)?);

    let half = Scalar::from_gauss(GaussianRational::ratio(1, 2));
    let sum = length.clone() + half.clone();
    println!("sum with 1/2         = {sum}");
    println!("at hbar=1, kappa=2, c=3: {}", sum.to_complex(1.0, 2.0, 3.0)?);

    match Scalar::kappa().pow(2)?.pow(i64::MAX) {
        Ok(s) => println!("unexpected: {s}"),
        Err(e) => println!("(kappa^2)^(2^63-1)   -> {e}"),
    }
    Ok(())
}
