//! On-shell `e^{P0/2 kappa c}` and the residual of the mass-shell condition.
//!
//! ```bash
//! cargo run --example mass_shell
//! ```

use kappa_hopf::kinematics::{check_mass_shell, fmt_sig, sweep, KinematicParams, SweepQuantity, SweepVar};

fn main() -> kappa_hopf::Result<()> {
    for (kappa, mass, p) in [(1.0, 0.0, 0.0), (1.0, 1.0, 0.0), (1.0, 2.0, 3.0), (1e6, 1.0, 0.0)] {
        let params = KinematicParams::new(kappa, 1.0, 1.0, mass, p)?;
        let chk = check_mass_shell(&params);
        println!(
            "kappa={:<8} M={:<3} P={:<3} exp={:<16} P0={:<16} residual={}",
            fmt_sig(kappa),
            fmt_sig(mass),
            fmt_sig(p),
            fmt_sig(chk.exp),
            fmt_sig(chk.p0),
            fmt_sig(chk.residual)
        );
    }

    println!("\nP sweep at kappa = c = M = 1");
    let base = KinematicParams::new(1.0, 1.0, 1.0, 1.0, 0.0)?;
    for row in sweep(&base, SweepVar::P, 1e-3, 1e3, 7, SweepQuantity::MassShell)? {
        println!("  P={:<8} exp={:<16} residual={}", fmt_sig(row.pvec), fmt_sig(row.value), fmt_sig(row.residual));
    }
    Ok(())
}
