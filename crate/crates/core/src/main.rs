use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kappa_hopf::expr::{infer_sector, parse, Evaluator};
use kappa_hopf::hopf::HopfAlgebra;
use kappa_hopf::kinematics::{
    bounds, check_mass_shell, mass_shell_exp, modified_bound, nonrel_bound, sqrt_bound, sweep, KinematicParams,
    StateMeans, SweepQuantity, SweepVar,
};
use kappa_hopf::ncpoly::{AlgebraPreset, Basis, Sector};
use kappa_hopf::report::{self, BoundsReport, Format};
use kappa_hopf::suite::{parse_rule_key, run_suite, SuiteKind, SuiteOptions};
use kappa_hopf::Result;

#[derive(Parser)]
#[command(name = "kappa-hopf", version, about = "kappa-Poincare Hopf algebra calculator")]
struct Cli {
    /// Basis of the Hopf algebra; suites default to both
    #[arg(long, global = true, value_enum)]
    basis: Option<BasisArg>,
    /// Defaults to the sector implied by the symbols used
    #[arg(long, global = true, value_enum)]
    sector: Option<SectorArg>,
    #[arg(long, global = true, value_enum, env = "KAPPA_HOPF_FORMAT", default_value = "text")]
    format: FormatArg,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate an algebra expression
    Eval { expr: String },
    /// Run a check suite
    Suite {
        #[arg(value_enum)]
        kind: SuiteArg,
        /// Corrupt one relation table entry, `A,B` or `q,G`
        #[arg(long, hide = true)]
        perturb: Option<String>,
    },
    /// Numeric kinematics
    #[command(subcommand)]
    Numeric(NumericCmd),
}

#[derive(Subcommand)]
enum NumericCmd {
    /// On-shell e^{P0/2 kappa c} and the mass-shell residual
    MassShell(Params),
    /// Uncertainty lower bounds
    Bounds {
        #[command(flatten)]
        params: Params,
        /// <x1>,<x2>,<x3>
        #[arg(long, value_delimiter = ',', num_args = 3, default_value = "0,0,0")]
        mean_x: Vec<f64>,
        /// <p1>,<p2>,<p3>
        #[arg(long, value_delimiter = ',', num_args = 3, default_value = "0,0,0")]
        mean_p: Vec<f64>,
        /// <e^{P0/2 kappa c}>; defaults to the on-shell value
        #[arg(long)]
        mean_q: Option<f64>,
        /// Momentum spread for the modified and square-root bounds
        #[arg(long)]
        delta_p: Option<f64>,
    },
    /// Logarithmic parameter sweep
    Sweep {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum)]
        var: VarArg,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 13)]
        points: usize,
        #[arg(long, value_enum, default_value = "standard-bound")]
        quantity: QuantityArg,
    },
}

#[derive(Args, Clone, Copy)]
struct Params {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    kappa: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    c: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    hbar: f64,
    #[arg(long = "M", default_value_t = 0.0, allow_negative_numbers = true)]
    mass: f64,
    #[arg(long = "P", default_value_t = 0.0, allow_negative_numbers = true)]
    pvec: f64,
}

impl Params {
    fn build(self) -> Result<KinematicParams> {
        KinematicParams::new(self.kappa, self.c, self.hbar, self.mass, self.pvec)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Bicross,
    Standard,
}

#[derive(Clone, Copy, ValueEnum)]
enum SectorArg {
    Poincare,
    Phasespace,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Jacobi,
    Phasespace,
    Casimir,
    BasisMap,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarArg {
    Kappa,
    #[value(name = "M")]
    Mass,
    #[value(name = "P")]
    P,
    Hbar,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    MassShell,
    StandardBound,
    Nonrel,
}

fn basis(b: BasisArg) -> Basis {
    match b {
        BasisArg::Bicross => Basis::Bicross,
        BasisArg::Standard => Basis::Standard,
    }
}

/// Returns the report and the exit code.
fn run(cli: &Cli) -> Result<(String, u8)> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let b = cli.basis.map_or(Basis::Bicross, basis);
    match &cli.cmd {
        Cmd::Eval { expr } => {
            let e = parse(expr)?;
            let sector = match cli.sector {
                Some(SectorArg::Poincare) => Sector::Poincare,
                Some(SectorArg::Phasespace) => Sector::PhaseSpace,
                None => infer_sector(&e)?,
            };
            let v = Evaluator::from_hopf(HopfAlgebra::from_preset(AlgebraPreset::new(b, sector))).eval(&e)?;
            Ok((report::eval(expr, b, sector, &v, format), 0))
        }
        Cmd::Suite { kind, perturb } => {
            let kind = match kind {
                SuiteArg::Axioms => SuiteKind::Axioms,
                SuiteArg::Jacobi => SuiteKind::Jacobi,
                SuiteArg::Phasespace => SuiteKind::Phasespace,
                SuiteArg::Casimir => SuiteKind::Casimir,
                SuiteArg::BasisMap => SuiteKind::BasisMap,
                SuiteArg::All => SuiteKind::All,
            };
            let mut opts = SuiteOptions::new(&cli.basis.map_or(Basis::ALL.to_vec(), |x| vec![basis(x)]));
            opts.perturbation = perturb.as_deref().map(parse_rule_key).transpose()?;
            let r = run_suite(kind, &opts)?;
            Ok((report::suite(&r, format), r.exit_code() as u8))
        }
        Cmd::Numeric(NumericCmd::MassShell(p)) => {
            let p = p.build()?;
            Ok((report::mass_shell(&p, &check_mass_shell(&p), format), 0))
        }
        Cmd::Numeric(NumericCmd::Bounds { params, mean_x, mean_p, mean_q, delta_p }) => {
            let p = params.build()?;
            let state = StateMeans {
                x: [mean_x[0], mean_x[1], mean_x[2]],
                p: [mean_p[0], mean_p[1], mean_p[2]],
                q: mean_q.unwrap_or_else(|| mass_shell_exp(&p)),
            };
            let r = BoundsReport {
                params: p,
                bounds: bounds(b, &state, &p),
                nonrel: nonrel_bound(p.mass, p.kappa, p.hbar),
                modified: delta_p.map(|dp| modified_bound(dp, p.kappa, p.c, p.hbar)),
                sqrt: delta_p.map(|dp| sqrt_bound(dp, p.pvec, p.mass, p.kappa, p.c, p.hbar)),
            };
            Ok((report::bounds(&r, format), 0))
        }
        Cmd::Numeric(NumericCmd::Sweep { params, var, from, to, points, quantity }) => {
            let var = match var {
                VarArg::Kappa => SweepVar::Kappa,
                VarArg::Mass => SweepVar::Mass,
                VarArg::P => SweepVar::P,
                VarArg::Hbar => SweepVar::Hbar,
                VarArg::C => SweepVar::C,
            };
            let quantity = match quantity {
                QuantityArg::MassShell => SweepQuantity::MassShell,
                QuantityArg::StandardBound => SweepQuantity::StandardBound,
                QuantityArg::Nonrel => SweepQuantity::Nonrel,
            };
            let rows = sweep(&params.build()?, var, *from, *to, *points, quantity)?;
            Ok((report::sweep(&rows, format), 0))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
