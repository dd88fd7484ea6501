//! Uncertainty lower bounds in both bases, the Robertson bound they come from,
//! and the nonrelativistic and modified relations.
//!
//! ```bash
//! cargo run --example uncertainty_bounds
//! ```

use kappa_hopf::kinematics::{
    bounds, mass_shell_exp, modified_bound, nonrel_bound, nonrel_lower, robertson_bound, sqrt_bound,
    ExpectationAssignment, KinematicParams, StateMeans,
};
use kappa_hopf::ncpoly::{AlgebraPreset, Basis, Element, Generator, Sector};

fn main() -> kappa_hopf::Result<()> {
    let params = KinematicParams::new(1.0, 1.0, 1.0, 1.0, 0.0)?;
    let q = mass_shell_exp(&params);
    let means = StateMeans { x: [1.0, 0.0, 0.0], p: [2.0, 0.0, 0.0], q };
    for basis in Basis::ALL {
        let b = bounds(basis, &means, &params);
        println!(
            "{basis:<8} dt dx1 >= {:.6}  dp dx >= {:.6}  dE dt >= {:.6}  dp1 dt >= {:.6}",
            b.time_space[0], b.momentum_position, b.energy_time, b.momentum_time[0]
        );
    }

    let preset = AlgebraPreset::new(Basis::Standard, Sector::PhaseSpace);
    let state = ExpectationAssignment::new().with("q", q)?;
    let (x1, p1) = (Element::generator(Generator::x(1)), Element::generator(Generator::p(1)));
    println!("robertson [x1, P1] standard: {:.12}", robertson_bound(&x1, &p1, &preset, &state, &params)?);

    for ratio in [0.0, 0.5, 1.0, 2.0] {
        println!(
            "M/kappa = {ratio}: nonrel {:.6} > {:.6}",
            nonrel_bound(ratio, 1.0, 1.0),
            nonrel_lower(ratio, 1.0, 1.0)
        );
    }
    for dp in [0.0, 0.5, 1.0] {
        println!(
            "dp = {dp}: modified {:.6}, square root {:.6}",
            modified_bound(dp, 1.0, 1.0, 1.0).value,
            sqrt_bound(dp, 0.0, 0.0, 1.0, 1.0, 1.0)
        );
    }
    Ok(())
}
