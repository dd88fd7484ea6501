//! The check suites, clean and with one relation corrupted.
//!
//! ```bash
//! cargo run --release --example check_suites
//! ```

use kappa_hopf::ncpoly::{Basis, Generator, RuleKey};
use kappa_hopf::suite::{run_suite, SuiteKind, SuiteOptions};

fn main() -> kappa_hopf::Result<()> {
    let report = run_suite(SuiteKind::All, &SuiteOptions::new(&Basis::ALL))?;
    print!("{}", report.render_text());

    let mut opts = SuiteOptions::new(&[Basis::Standard]);
    opts.perturbation = Some(RuleKey::Swap(Generator::n(2), Generator::n(1)));
    let report = run_suite(SuiteKind::Jacobi, &opts)?;
    println!("\nwith {} doubled: {} of {} checks fail", opts.perturbation.unwrap(), report.failed, report.checks);
    if let Some(first) = report.failures().next() {
        println!("first culprit: {} {}", first.preset, first.subject);
    }
    Ok(())
}
